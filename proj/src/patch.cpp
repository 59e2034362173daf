#include "g1chow/patch.hpp"

#include <algorithm>
#include <exception>
#include <set>

#include "g1chow/corering.hpp"

namespace g1chow {

Stratification::Stratification(int n) : n_(n), all_(enumerate_partitions(n)), levels_(n + 1) {
    for (const auto& s : all_) {
        levels_[s.length()].push_back(s);
        models_.emplace(s, std::make_unique<TailModel>(n, s));
    }
}

const std::vector<SetPartition>& Stratification::level(int length) const {
    if (length < 1 || length > n_) throw AlgebraError("no level " + std::to_string(length));
    return levels_[length];
}

const TailModel& Stratification::model(const SetPartition& s) const {
    auto it = models_.find(s);
    if (it == models_.end()) throw AlgebraError("unknown stratum " + s.to_string());
    return *it->second;
}

IntPolynomial RestrictionData::gamma_at(const SetPartition& s) const {
    auto it = gamma.find(s);
    return it == gamma.end() ? IntPolynomial{} : it->second;
}

namespace {

RestrictionData closure_data(const Stratification& st, MinKind kind, const SetPartition& target, const ClassTable& table) {
    if (target.n() != st.n()) throw AlgebraError("closure target has the wrong ground set");
    RestrictionData d;
    d.seed = min_class(kind, st.n(), target, table);
    for (const auto& p : st.all()) {
        if (p.is_discrete() || !refines(target, p)) continue;
        d.gamma[p] = st.model(p).embed_core(min_class(kind, static_cast<int>(p.length()), compose(target, p), table));
    }
    return d;
}

// Runs body(i) for i in [0, count), serially or with OpenMP, and rethrows the
// first exception.
template <class Body>
void for_each_index(std::size_t count, Execution exec, Body&& body) {
    if (exec == Execution::serial) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::exception_ptr error;
    const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(g1chow_patch_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

IntPolynomial patch_levels(const Stratification& st, IntPolynomial f, int top_level, const RestrictionData* data, const PatchOptions& opt) {
    for (int j = top_level; j >= 1; --j) {
        std::vector<SetPartition> parts = st.level(j);
        if (opt.reverse_level_order) std::reverse(parts.begin(), parts.end());
        std::vector<IntPolynomial> corrections(parts.size());
        for_each_index(parts.size(), opt.execution, [&](std::size_t k) {
            const TailModel& m = st.model(parts[k]);
            IntPolynomial g = m.ring().prune(m.restrict(f));
            if (data) g -= data->gamma_at(parts[k]);
            IntPolynomial h;
            try {
                h = m.ring().divide_in_quotient(g, m.ctop());
            } catch (const AlgebraError& e) {
                throw AlgebraError("patching failed on stratum " + parts[k].to_string() + ": " + e.what());
            }
            corrections[k] = tau_of(parts[k]) * m.lift(h);
        });
        for (const auto& c : corrections) f -= c;
        if (opt.on_level) opt.on_level(j, f);
    }
    return f;
}

}  // namespace

RestrictionData ell_closure_data(const Stratification& st, const SetPartition& s, const ClassTable& table) {
    return closure_data(st, MinKind::ell, s, table);
}

RestrictionData nod_closure_data(const Stratification& st, const SetPartition& r, const ClassTable& table) {
    return closure_data(st, MinKind::nod, r, table);
}

IntPolynomial fundamental_class(const Stratification& st, const RestrictionData& data, const PatchOptions& opt) {
    if (!data.seed.is_homogeneous()) throw AlgebraError("seed is not homogeneous");
    return patch_levels(st, data.seed, st.n() - 1, &data, opt);
}

IntPolynomial lift_relation(const Stratification& st, const IntPolynomial& f, int valid_above_level, const PatchOptions& opt) {
    if (valid_above_level < 0 || valid_above_level > st.n() - 1) throw AlgebraError("lift_relation: level out of range");
    return patch_levels(st, f, valid_above_level, nullptr, opt);
}

std::vector<SetPartition> nonvanishing_strata(const Stratification& st, const IntPolynomial& f, Execution exec) {
    const auto& all = st.all();
    std::vector<char> bad(all.size(), 0);
    for_each_index(all.size(), exec, [&](std::size_t k) {
        const TailModel& m = st.model(all[k]);
        bad[k] = !m.ring().reduces_to_zero(m.restrict(f));
    });
    std::vector<SetPartition> out;
    for (std::size_t k = 0; k < all.size(); ++k)
        if (bad[k]) out.push_back(all[k]);
    return out;
}

std::vector<IntPolynomial> GorensteinRelations::all() const {
    std::vector<IntPolynomial> out;
    for (const auto* list : {&k1, &k2, &normal, &a, &bc}) out.insert(out.end(), list->begin(), list->end());
    return out;
}

namespace {

std::vector<Subset> tail_subsets(int n) {
    std::vector<Subset> out;
    for (Subset b = 1; b <= full_subset(n); ++b)
        if (subset_size(b) >= 2) out.push_back(b);
    std::sort(out.begin(), out.end(), subset_less);
    return out;
}

void push_unique(std::vector<IntPolynomial>& out, std::set<std::string>& seen, IntPolynomial p) {
    if (p.is_zero()) return;
    if (p.terms().begin()->second < 0) p = -p;
    if (seen.insert(p.to_string()).second) out.push_back(std::move(p));
}

}  // namespace

std::vector<Symbol> gorenstein_symbols(int n) {
    if (n < 1 || n > 6) throw AlgebraError("gorenstein_presentation: n must lie in 1..6");
    std::vector<Symbol> out{Symbol::lambda()};
    if (n == 6) out.push_back(Symbol::nu());
    for (Subset b : tail_subsets(n)) out.push_back(Symbol::tau(b));
    return out;
}

GorensteinRelations gorenstein_relations(int n, const PatchOptions& opt) {
    gorenstein_symbols(n);  // range check
    GorensteinRelations r;
    const auto universe = tail_subsets(n);
    auto make = &Symbol::tau;
    std::set<std::string> seen;
    for (Subset b : universe) {
        IntPolynomial tb(Symbol::tau(b));
        auto el = subset_elements(b);
        for (int i : el)
            for (int j : el)
                for (int h : el) {
                    if (i == j || j == h || i == h) continue;
                    push_unique(r.k1, seen, tb * keel_k1(universe, make, i, j, h));
                    for (int k : el) {
                        if (k == i || k == j || k == h) continue;
                        push_unique(r.k1, seen, tb * keel_k1(universe, make, i, j, h, k));
                    }
                }
    }
    for (std::size_t a = 0; a < universe.size(); ++a)
        for (std::size_t b = a + 1; b < universe.size(); ++b)
            if (incomparable(universe[a], universe[b]))
                r.k2.push_back(IntPolynomial(Symbol::tau(universe[a])) * IntPolynomial(Symbol::tau(universe[b])));
    for (Subset b : universe) {
        auto el = subset_elements(b);
        for (std::size_t x = 0; x < el.size(); ++x)
            for (std::size_t y = x + 1; y < el.size(); ++y) {
                Subset ij = singleton(el[x]) | singleton(el[y]);
                IntPolynomial sum(Symbol::lambda());
                for (Subset b2 : universe)
                    if ((b2 & ij) == ij) sum += IntPolynomial(Symbol::tau(b2));
                push_unique(r.normal, seen, IntPolynomial(Symbol::tau(b)) * sum);
            }
    }
    if (n == 6) {
        Stratification st(6);
        const SetPartition p = banana_partition();
        for (const auto& s : st.all()) {
            if (s.is_discrete() || !refines(p, s)) continue;
            IntPolynomial gamma = min_class(MinKind::nod, static_cast<int>(s.length()), compose(p, s));
            IntPolynomial a = tau_of(s) * (IntPolynomial(Symbol::nu()) - gamma);
            r.a.push_back(lift_relation(st, a, static_cast<int>(s.length()) - 1, opt));
        }
        IntPolynomial l(Symbol::lambda()), v(Symbol::nu());
        r.bc.push_back(lift_relation(st, l.pow(4) - l.pow(2) * v - v.pow(2), 5, opt));
        r.bc.push_back(lift_relation(st, l.pow(5) - 3 * l.pow(3) * v + 2 * l * v.pow(2), 5, opt));
    }
    return r;
}

GradedPresentation gorenstein_presentation(int n, const PatchOptions& opt) {
    return GradedPresentation(gorenstein_symbols(n), gorenstein_relations(n, opt).all());
}

IntPolynomial relabel(const IntPolynomial& f, const std::vector<int>& perm) {
    return f.substitute([&](const Symbol& s) {
        if (s.kind == SymbolKind::tail) return IntPolynomial(Symbol::tau(relabel(s.data, perm)));
        if (s.kind == SymbolKind::divisor) return IntPolynomial(Symbol::divisor(relabel(s.data, perm)));
        return IntPolynomial(s);
    });
}

std::vector<int> permutation_between(const SetPartition& from, const SetPartition& to) {
    if (from.n() != to.n() || from.shape() != to.shape()) throw AlgebraError("partitions have different shapes");
    auto by_size = [](const SetPartition& s) {
        std::vector<Subset> parts = s.parts();
        std::stable_sort(parts.begin(), parts.end(), [](Subset a, Subset b) { return subset_size(a) > subset_size(b); });
        return parts;
    };
    auto a = by_size(from), b = by_size(to);
    std::vector<int> perm(from.n(), 0);
    for (std::size_t k = 0; k < a.size(); ++k) {
        auto ea = subset_elements(a[k]), eb = subset_elements(b[k]);
        for (std::size_t t = 0; t < ea.size(); ++t) perm[ea[t] - 1] = eb[t];
    }
    return perm;
}

std::optional<IntPolynomial> fixture_class(const SetPartition& s, const std::vector<ClosureFixture>& fixtures) {
    for (const auto& fx : fixtures)
        if (fx.n == s.n() && fx.ell.shape() == s.shape()) return relabel(fx.value, permutation_between(fx.ell, s));
    return std::nullopt;
}

}  // namespace g1chow
