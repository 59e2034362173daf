#include "g1chow/modular.hpp"

#include <json.hpp>

#include "g1chow/corering.hpp"

namespace g1chow {

namespace {

SetPartition level_of(Subset b, int n) { return disc_completion({b}, n); }

// Pairwise disjoint collections of at least two subsets from `pool`.
void disjoint_collections(const std::vector<Subset>& pool, std::size_t start, Subset used, std::vector<Subset>& current,
                          std::vector<std::vector<Subset>>& out) {
    for (std::size_t k = start; k < pool.size(); ++k) {
        if (pool[k] & used) continue;
        current.push_back(pool[k]);
        if (current.size() >= 2) out.push_back(current);
        disjoint_collections(pool, k + 1, used | pool[k], current, out);
        current.pop_back();
    }
}

}  // namespace

QPresentation qstable_presentation(const QSpec& q, const PatchOptions& opt) {
    QValidation v = validate_qspec(q);
    if (!v.valid) throw PartitionError("invalid Q-spec: " + v.problems.front());
    const int n = q.n;

    QPresentation qp;
    qp.qspec = q;
    std::vector<Subset> surviving;
    for (const Symbol& s : gorenstein_symbols(n)) {
        if (s.kind == SymbolKind::tail && q.allows(level_of(s.data, n))) continue;
        qp.generators.push_back(s);
        if (s.kind == SymbolKind::tail) surviving.push_back(s.data);
    }
    auto excise = [&](const IntPolynomial& f) {
        return f.substitute([&](const Symbol& s) {
            if (s.kind == SymbolKind::tail && q.allows(level_of(s.data, n))) return IntPolynomial{};
            return IntPolynomial(s);
        });
    };

    for (const auto& r : gorenstein_relations(n, opt).all()) {
        IntPolynomial e = excise(r);
        if (!e.is_zero()) qp.structural.push_back(std::move(e));
    }

    std::vector<std::vector<Subset>> collections;
    std::vector<Subset> current;
    disjoint_collections(surviving, 0, 0, current, collections);
    for (const auto& c : collections) {
        if (!q.allows(disc_completion(c, n))) continue;
        IntPolynomial m(1L);
        for (Subset b : c) m = m * IntPolynomial(Symbol::tau(b));
        qp.tail_products.push_back(std::move(m));
    }

    Stratification st(n);
    for (const auto& s : st.all()) {
        if (q.allows(s)) continue;
        if (!has_min_class(MinKind::ell, n, s)) {
            qp.skipped_ell.push_back(s);
            continue;
        }
        IntPolynomial cls = excise(fundamental_class(st, ell_closure_data(st, s), opt));
        qp.ell_relations.emplace_back(s, std::move(cls));
    }

    std::vector<IntPolynomial> relations = qp.structural;
    relations.insert(relations.end(), qp.tail_products.begin(), qp.tail_products.end());
    for (const auto& [s, cls] : qp.ell_relations) relations.push_back(cls);
    qp.presentation = GradedPresentation(qp.generators, std::move(relations));
    return qp;
}

std::string QPresentation::to_json() const {
    nlohmann::json j;
    j["n"] = n();
    j["convention"] = QSpec::convention;
    j["qspec"] = nlohmann::json::parse(qspec.to_json());
    j["generators"] = nlohmann::json::array();
    for (const auto& g : generators) j["generators"].push_back(g.name());
    j["presentation"] = nlohmann::json::parse(presentation.to_json());
    j["ell_relations"] = nlohmann::json::array();
    for (const auto& [s, cls] : ell_relations) j["ell_relations"].push_back({{"ell", s.to_string()}, {"class", cls.to_string()}});
    if (!skipped_ell.empty()) {
        j["skipped_ell"] = nlohmann::json::array();
        for (const auto& s : skipped_ell) j["skipped_ell"].push_back(s.to_string());
    }
    return j.dump();
}

InvariantFactors torsion_report(const QPresentation& qp, int degree) { return qp.presentation.smith_invariants(degree); }

HilbertPoincare hilbert_poincare(const GradedPresentation& p, int top_degree) {
    HilbertPoincare h;
    for (int d = 0; d <= top_degree; ++d) {
        h.degrees.push_back(p.smith_invariants(d));
        h.ranks.push_back(h.degrees.back().rank);
    }
    h.palindromic = true;
    for (int d = 0; d <= top_degree; ++d)
        if (h.ranks[d] != h.ranks[top_degree - d]) h.palindromic = false;
    return h;
}

IntPolynomial GetzlerCycles::expected_nod22() const {
    IntPolynomial l(Symbol::lambda());
    return 6 * l.pow(2) + 6 * l * tau3 - 2 * tau2 * tau3 + 6 * tau22 + 6 * l * tau4 + 3 * tau3 * tau4 - 2 * tau2 * tau4;
}

GetzlerCycles getzler_cycles(const Stratification& st, const PatchOptions& opt) {
    if (st.n() != 4) throw AlgebraError("Getzler cycles live on four markings");
    GetzlerCycles c;
    for (Subset b = 1; b <= full_subset(4); ++b) {
        IntPolynomial t(Symbol::tau(b));
        switch (subset_size(b)) {
            case 2: c.tau2 += t; break;
            case 3: c.tau3 += t; break;
            case 4: c.tau4 += t; break;
            default: break;
        }
    }
    auto t = [](std::initializer_list<int> e) { return IntPolynomial(Symbol::tau(subset_from(e))); };
    c.tau22 = t({1, 2}) * t({3, 4}) + t({1, 3}) * t({2, 4}) + t({1, 4}) * t({2, 3});
    for (const char* r : {"1 2|3 4", "1 3|2 4", "1 4|2 3"})
        c.nod22 += fundamental_class(st, nod_closure_data(st, SetPartition::parse(r, 4)), opt);
    return c;
}

bool GetzlerReport::passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

GetzlerReport getzler_check(const std::optional<RestrictionData>& delta_empty, const PatchOptions& opt) {
    Stratification st(4);
    GetzlerReport rep;
    rep.cycles = getzler_cycles(st, opt);
    const IntPolynomial diff = rep.cycles.nod22 - rep.cycles.expected_nod22();
    for (const auto& s : st.all()) {
        const TailModel& m = st.model(s);
        bool ok = m.ring().reduces_to_zero(m.restrict(diff));
        std::string detail = "restriction " + m.ring().normal_form(m.restrict(rep.cycles.nod22)).to_string();
        if (!ok) detail += ", closed form gives " + m.ring().normal_form(m.restrict(rep.cycles.expected_nod22())).to_string();
        rep.checks.push_back({"nod22 on Tail " + s.to_string(), "patched class vs closed form", ok, detail});
    }
    if (delta_empty) {
        rep.delta_checked = true;
        const IntPolynomial t0 = fundamental_class(st, *delta_empty, opt);
        const auto& c = rep.cycles;
        IntPolynomial g = t0 * c.tau3 - 4 * c.tau2 * c.tau3 + 12 * c.tau22 - 2 * c.tau2 * c.tau4 + 6 * c.tau3 * c.tau4 + t0 * c.tau4 - 2 * c.nod22;
        IntPolynomial l(Symbol::lambda());
        auto ell = fundamental_class(st, ell_closure_data(st, SetPartition::parse("1 2 3 4", 4)), opt);
        auto bad1 = nonvanishing_strata(st, g + 12 * l.pow(2), opt.execution);
        auto bad2 = nonvanishing_strata(st, 2 * g + ell, opt.execution);
        auto describe = [](const std::vector<SetPartition>& bad) {
            return bad.empty() ? std::string("all strata") : "fails on " + std::to_string(bad.size()) + " strata, first " + bad.front().to_string();
        };
        rep.checks.push_back({"G + 12 l^2 = 0", "needs supplied delta data", bad1.empty(), describe(bad1)});
        rep.checks.push_back({"2G + [Ell 1234] = 0", "needs supplied delta data", bad2.empty(), describe(bad2)});
    }
    return rep;
}

}  // namespace g1chow
