#include "g1chow/presentation.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <unordered_map>

#include <json.hpp>

namespace g1chow {

namespace {

using LocalMonomial = std::vector<std::pair<int, std::uint32_t>>;  // (symbol index, exponent)

struct CoreDegree {
    std::vector<Monomial> basis;
    std::unordered_map<Monomial, int, MonomialHash> index;
    LatticeEchelon lattice{0};

    mutable std::once_flag inv_once;
    mutable InvariantFactors inv;

    const InvariantFactors& invariants() const {
        std::call_once(inv_once, [&] { inv = lattice.quotient_invariants(); });
        return inv;
    }
};

struct Slot {
    std::once_flag once;
    std::unique_ptr<CoreDegree> value;
};

}  // namespace

struct GradedPresentation::Impl {
    std::vector<Symbol> symbols;
    std::vector<IntPolynomial> relations;
    std::vector<DegreeCap> caps;

    std::map<Symbol, int> index;
    std::vector<int> degree;  // per symbol index
    std::vector<bool> free;
    std::vector<int> core, free_list;

    // Pruning data, by symbol index.
    std::vector<std::vector<char>> pair_zero;
    std::vector<char> square_zero;
    std::vector<LocalMonomial> other_zero;
    std::vector<std::vector<int>> cap_weight;  // cap -> per symbol 0/1
    std::vector<int> cap_max;

    std::vector<std::vector<IntPolynomial>> relations_by_degree;  // core relations

    mutable std::array<Slot, kMaxDegree + 1> memo;

    LocalMonomial local(const Monomial& m) const {
        LocalMonomial out;
        for (const auto& [s, e] : m.factors()) {
            auto it = index.find(s);
            if (it == index.end()) throw AlgebraError("undeclared symbol " + s.name());
            out.emplace_back(it->second, e);
        }
        return out;
    }

    bool pruned_local(const LocalMonomial& lm) const {
        for (std::size_t a = 0; a < lm.size(); ++a) {
            if (lm[a].second >= 2 && square_zero[lm[a].first]) return true;
            for (std::size_t b = a + 1; b < lm.size(); ++b)
                if (pair_zero[lm[a].first][lm[b].first]) return true;
        }
        for (std::size_t c = 0; c < cap_max.size(); ++c) {
            int total = 0;
            for (const auto& [i, e] : lm) total += cap_weight[c][i] * static_cast<int>(e) * degree[i];
            if (total > cap_max[c]) return true;
        }
        for (const auto& z : other_zero) {
            bool divides = true;
            for (const auto& [i, e] : z) {
                auto it = std::find_if(lm.begin(), lm.end(), [&](const auto& p) { return p.first == i; });
                if (it == lm.end() || it->second < e) {
                    divides = false;
                    break;
                }
            }
            if (divides) return true;
        }
        return false;
    }

    bool pruned(const Monomial& m) const { return pruned_local(local(m)); }

    Monomial to_monomial(const LocalMonomial& lm) const {
        Monomial m;
        for (const auto& [i, e] : lm) m = m * Monomial(symbols[i], e);
        return m;
    }

    // Monomials of degree d in the listed symbols, skipping pruned ones when asked.
    std::vector<Monomial> enumerate(const std::vector<int>& vars, int d, bool prune) const {
        std::vector<Monomial> out;
        LocalMonomial cur;
        auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
            if (left == 0) {
                if (!prune || !pruned_local(cur)) out.push_back(to_monomial(cur));
                return;
            }
            if (pos == vars.size()) return;
            int i = vars[pos];
            int deg = degree[i];
            self(self, pos + 1, left);
            for (std::uint32_t e = 1; static_cast<int>(e) * deg <= left; ++e) {
                cur.emplace_back(i, e);
                bool dead = prune && pruned_local(cur);
                if (!dead) self(self, pos + 1, left - static_cast<int>(e) * deg);
                cur.pop_back();
                if (dead) break;  // higher powers stay pruned
            }
        };
        if (d >= 0) rec(rec, 0, d);
        std::sort(out.begin(), out.end(), MonomialOrder{});
        return out;
    }

    SparseRow to_row(const IntPolynomial& f, const CoreDegree& cd) const {
        SparseRow row;
        for (const auto& [m, c] : f.terms()) {
            auto it = cd.index.find(m);
            if (it == cd.index.end()) {
                if (pruned(m)) continue;
                throw AlgebraError("monomial " + m.to_string() + " outside the degree basis");
            }
            row.push_back({it->second, c});
        }
        std::sort(row.begin(), row.end(), [](const LatticeEntry& a, const LatticeEntry& b) { return a.col < b.col; });
        return row;
    }

    IntPolynomial from_row(const SparseRow& row, const std::vector<Monomial>& basis) const {
        IntPolynomial f;
        for (const auto& e : row) f.add_term(basis[e.col], e.value);
        return f;
    }

    const CoreDegree& core_degree(int e) const {
        if (e < 0 || e > kMaxDegree) throw AlgebraError("degree " + std::to_string(e) + " beyond the supported range");
        Slot& slot = memo[e];
        std::call_once(slot.once, [&] { slot.value = build_core(e); });
        return *slot.value;
    }

    std::unique_ptr<CoreDegree> build_core(int e) const {
        auto cd = std::make_unique<CoreDegree>();
        cd->basis = enumerate(core, e, true);
        for (std::size_t i = 0; i < cd->basis.size(); ++i) cd->index.emplace(cd->basis[i], static_cast<int>(i));
        LatticeEchelon lat(static_cast<int>(cd->basis.size()));
        std::vector<SparseRow> pending;
        if (!cd->basis.empty()) {
            if (e < static_cast<int>(relations_by_degree.size()))
                for (const auto& r : relations_by_degree[e]) pending.push_back(to_row(r, *cd));
            for (int i : core) {
                int below = e - degree[i];
                if (below < 0) continue;
                const CoreDegree& prev = core_degree(below);
                if (prev.lattice.rank() == 0) continue;
                Monomial x(symbols[i]);
                std::vector<int> colmap(prev.basis.size(), -1);
                for (std::size_t j = 0; j < prev.basis.size(); ++j) {
                    auto it = cd->index.find(x * prev.basis[j]);
                    if (it != cd->index.end()) colmap[j] = it->second;
                }
                for (const auto& row : prev.lattice.rows()) {
                    SparseRow mapped;
                    mapped.reserve(row.size());
                    for (const auto& entry : row)
                        if (colmap[entry.col] >= 0) mapped.push_back({colmap[entry.col], entry.value});
                    std::sort(mapped.begin(), mapped.end(), [](const LatticeEntry& a, const LatticeEntry& b) { return a.col < b.col; });
                    pending.push_back(std::move(mapped));
                }
            }
        }
        // Rows with small entries first keeps the echelon coefficients small.
        std::vector<std::pair<std::size_t, std::size_t>> order;
        for (std::size_t k = 0; k < pending.size(); ++k) {
            std::size_t bits = 0;
            for (const auto& entry : pending[k]) bits = std::max(bits, mpz_sizeinbase(entry.value.get_mpz_t(), 2));
            order.emplace_back(bits, k);
        }
        std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return pending[a.second].size() < pending[b.second].size();
        });
        for (const auto& [bits, k] : order) lat.insert(std::move(pending[k]));
        lat.make_hermite();
        cd->lattice = std::move(lat);
        return cd;
    }

    // Splits a monomial into its free part and its core part.
    std::pair<Monomial, Monomial> split(const Monomial& m) const {
        Monomial u, v;
        for (const auto& [s, e] : m.factors()) {
            auto it = index.find(s);
            if (it == index.end()) throw AlgebraError("undeclared symbol " + s.name());
            (free[it->second] ? u : v) = (free[it->second] ? u : v) * Monomial(s, e);
        }
        return {u, v};
    }

    // Groups f by (free monomial, core degree).
    std::map<std::pair<Monomial, int>, IntPolynomial, bool (*)(const std::pair<Monomial, int>&, const std::pair<Monomial, int>&)>
    grouped(const IntPolynomial& f) const {
        auto less = +[](const std::pair<Monomial, int>& a, const std::pair<Monomial, int>& b) {
            if (a.second != b.second) return a.second < b.second;
            return MonomialOrder{}(a.first, b.first);
        };
        std::map<std::pair<Monomial, int>, IntPolynomial, bool (*)(const std::pair<Monomial, int>&, const std::pair<Monomial, int>&)> out(less);
        for (const auto& [m, c] : f.terms()) {
            auto [u, v] = split(m);
            out[{u, v.degree()}].add_term(v, c);
        }
        return out;
    }
};

GradedPresentation::GradedPresentation() : GradedPresentation(std::vector<Symbol>{}, std::vector<IntPolynomial>{}) {}

GradedPresentation::GradedPresentation(std::vector<Symbol> symbols, std::vector<IntPolynomial> relations, std::vector<DegreeCap> caps) {
    auto impl = std::make_shared<Impl>();
    std::sort(symbols.begin(), symbols.end());
    if (std::adjacent_find(symbols.begin(), symbols.end()) != symbols.end()) throw AlgebraError("duplicate symbol in presentation");
    impl->symbols = std::move(symbols);
    impl->caps = std::move(caps);
    const std::size_t n = impl->symbols.size();
    for (std::size_t i = 0; i < n; ++i) {
        impl->index.emplace(impl->symbols[i], static_cast<int>(i));
        impl->degree.push_back(impl->symbols[i].degree());
    }
    impl->free.assign(n, true);
    impl->pair_zero.assign(n, std::vector<char>(n, 0));
    impl->square_zero.assign(n, 0);
    for (const auto& cap : impl->caps) {
        std::vector<int> w(n, 0);
        for (const auto& s : cap.group) {
            auto it = impl->index.find(s);
            if (it == impl->index.end()) throw AlgebraError("cap mentions undeclared symbol " + s.name());
            w[it->second] = 1;
            impl->free[it->second] = false;
        }
        impl->cap_weight.push_back(std::move(w));
        impl->cap_max.push_back(cap.max_degree);
    }
    for (auto& r : relations) {
        if (r.is_zero()) continue;
        if (!r.is_homogeneous()) throw AlgebraError("relation is not homogeneous: " + r.to_string());
        for (const auto& s : r.symbols()) {
            auto it = impl->index.find(s);
            if (it == impl->index.end()) throw AlgebraError("relation mentions undeclared symbol " + s.name() + ": " + r.to_string());
            impl->free[it->second] = false;
        }
        if (r.size() == 1 && abs(r.terms().begin()->second) == 1) {
            LocalMonomial lm = impl->local(r.terms().begin()->first);
            if (lm.size() == 2 && lm[0].second == 1 && lm[1].second == 1) {
                impl->pair_zero[lm[0].first][lm[1].first] = impl->pair_zero[lm[1].first][lm[0].first] = 1;
            } else if (lm.size() == 1 && lm[0].second == 2) {
                impl->square_zero[lm[0].first] = 1;
            } else {
                impl->other_zero.push_back(std::move(lm));
            }
        }
        impl->relations.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < n; ++i) (impl->free[i] ? impl->free_list : impl->core).push_back(static_cast<int>(i));
    for (const auto& r : impl->relations) {
        if (r.size() == 1 && abs(r.terms().begin()->second) == 1) continue;  // handled by pruning
        int d = r.degree();
        if (d > kMaxDegree) throw AlgebraError("relation degree beyond the supported range");
        if (static_cast<int>(impl->relations_by_degree.size()) <= d) impl->relations_by_degree.resize(d + 1);
        impl->relations_by_degree[d].push_back(r);
    }
    impl_ = std::move(impl);
}

const std::vector<Symbol>& GradedPresentation::symbols() const { return impl_->symbols; }
const std::vector<IntPolynomial>& GradedPresentation::relations() const { return impl_->relations; }
const std::vector<DegreeCap>& GradedPresentation::caps() const { return impl_->caps; }
bool GradedPresentation::declares(const Symbol& s) const { return impl_->index.count(s) != 0; }

bool GradedPresentation::is_free(const Symbol& s) const {
    auto it = impl_->index.find(s);
    return it != impl_->index.end() && impl_->free[it->second];
}

bool GradedPresentation::is_pruned(const Monomial& m) const { return impl_->pruned(m); }

IntPolynomial GradedPresentation::prune(const IntPolynomial& f) const {
    return f.filter_out([&](const Monomial& m) { return impl_->pruned(m); });
}

std::vector<Monomial> GradedPresentation::basis(int d) const {
    std::vector<Monomial> out;
    for (int a = 0; a <= d; ++a) {
        auto frees = impl_->enumerate(impl_->free_list, a, false);
        if (frees.empty()) continue;
        const CoreDegree& cd = impl_->core_degree(d - a);
        for (const auto& u : frees)
            for (const auto& v : cd.basis) out.push_back(u * v);
    }
    std::sort(out.begin(), out.end(), MonomialOrder{});
    return out;
}

GradedComponent GradedPresentation::graded_component(int d) const {
    GradedComponent gc;
    gc.degree = d;
    gc.basis = basis(d);
    std::unordered_map<Monomial, int, MonomialHash> col;
    for (std::size_t i = 0; i < gc.basis.size(); ++i) col.emplace(gc.basis[i], static_cast<int>(i));
    for (int a = 0; a <= d; ++a) {
        auto frees = impl_->enumerate(impl_->free_list, a, false);
        if (frees.empty()) continue;
        const CoreDegree& cd = impl_->core_degree(d - a);
        for (const auto& u : frees)
            for (const auto& row : cd.lattice.rows()) {
                SparseRow mapped;
                for (const auto& e : row) mapped.push_back({col.at(u * cd.basis[e.col]), e.value});
                std::sort(mapped.begin(), mapped.end(), [](const LatticeEntry& x, const LatticeEntry& y) { return x.col < y.col; });
                gc.rows.push_back(std::move(mapped));
            }
    }
    std::sort(gc.rows.begin(), gc.rows.end(), [](const SparseRow& x, const SparseRow& y) { return x.front().col < y.front().col; });
    return gc;
}

bool GradedPresentation::reduces_to_zero(const IntPolynomial& f) const {
    for (const auto& [key, part] : impl_->grouped(f)) {
        const CoreDegree& cd = impl_->core_degree(key.second);
        if (!cd.lattice.contains(impl_->to_row(part, cd))) return false;
    }
    return true;
}

IntPolynomial GradedPresentation::normal_form(const IntPolynomial& f) const {
    IntPolynomial out;
    for (const auto& [key, part] : impl_->grouped(f)) {
        const CoreDegree& cd = impl_->core_degree(key.second);
        IntPolynomial v = impl_->from_row(cd.lattice.normal_form(impl_->to_row(part, cd)), cd.basis);
        out += IntPolynomial(key.first, Integer(1)) * v;
    }
    return out;
}

InvariantFactors GradedPresentation::smith_invariants(int d) const {
    InvariantFactors out;
    out.degree = d;
    std::vector<Integer> torsion;
    for (int a = 0; a <= d; ++a) {
        auto count = impl_->enumerate(impl_->free_list, a, false).size();
        if (count == 0) continue;
        const InvariantFactors& inv = impl_->core_degree(d - a).invariants();
        out.rank += static_cast<long>(count) * inv.rank;
        for (std::size_t k = 0; k < count; ++k) torsion.insert(torsion.end(), inv.torsion.begin(), inv.torsion.end());
    }
    out.torsion = normalize_torsion(torsion);
    return out;
}

std::vector<long> GradedPresentation::hilbert_function(int d_max) const {
    std::vector<long> out;
    for (int d = 0; d <= d_max; ++d) {
        long r = 0;
        for (int a = 0; a <= d; ++a) {
            auto count = impl_->enumerate(impl_->free_list, a, false).size();
            if (count == 0) continue;
            const CoreDegree& cd = impl_->core_degree(d - a);
            r += static_cast<long>(count) * (static_cast<long>(cd.basis.size()) - cd.lattice.rank());
        }
        out.push_back(r);
    }
    return out;
}

namespace {

void require_homogeneous(const IntPolynomial& f, const char* what) {
    if (!f.is_homogeneous()) throw AlgebraError(std::string(what) + " is not homogeneous: " + f.to_string());
}

}  // namespace

IntPolynomial GradedPresentation::divide_in_quotient(const IntPolynomial& g, const IntPolynomial& c) const {
    if (auto h = divide_by_monic(g, c)) return *h;
    return divide_by_lattice(g, c);
}

std::optional<IntPolynomial> GradedPresentation::divide_by_monic(const IntPolynomial& g, const IntPolynomial& c) const {
    require_homogeneous(g, "dividend");
    require_homogeneous(c, "divisor");
    if (c.is_zero()) throw AlgebraError("division by zero");
    for (int xi : impl_->free_list) {
        const Symbol x = impl_->symbols[xi];
        std::uint32_t k = 0;
        for (const auto& [m, coef] : c.terms()) k = std::max(k, m.exponent(x));
        if (k == 0) continue;
        Monomial xk(x, k);
        auto lead = c.terms().find(xk);
        if (lead == c.terms().end() || abs(lead->second) != 1) continue;
        bool sole = true;
        for (const auto& [m, coef] : c.terms())
            if (m.exponent(x) == k && !(m == xk)) sole = false;
        if (!sole) continue;

        const Integer u = lead->second;  // its own inverse
        IntPolynomial rem = prune(g), quot;
        while (true) {
            std::uint32_t top = 0;
            for (const auto& [m, coef] : rem.terms()) top = std::max(top, m.exponent(x));
            if (top < k) break;
            IntPolynomial step;
            Monomial shift = top > k ? Monomial(x, top - k) : Monomial{};
            for (const auto& [m, coef] : rem.terms())
                if (m.exponent(x) == top) step.add_term(Monomial(x, top).quotient_of(m) * shift, u * coef);
            quot += step;
            rem = prune(rem - step * c);
        }
        if (!reduces_to_zero(rem)) throw AlgebraError("not divisible: remainder " + rem.to_string() + " is nonzero in the quotient");
        return prune(quot);
    }
    return std::nullopt;
}

IntPolynomial GradedPresentation::divide_by_lattice(const IntPolynomial& g0, const IntPolynomial& c) const {
    require_homogeneous(g0, "dividend");
    require_homogeneous(c, "divisor");
    if (c.is_zero()) throw AlgebraError("division by zero");
    IntPolynomial g = prune(g0);
    if (g.is_zero()) return {};
    const int dg = g.degree(), dh = dg - c.degree();
    if (dh < 0) {
        if (reduces_to_zero(g)) return {};
        throw AlgebraError("not divisible: degree of divisor exceeds dividend");
    }
    GradedComponent target = graded_component(dg);
    std::vector<Monomial> unknowns = basis(dh);
    const int nb = static_cast<int>(target.basis.size());
    const int nh = static_cast<int>(unknowns.size());
    std::unordered_map<Monomial, int, MonomialHash> col;
    for (int i = 0; i < nb; ++i) col.emplace(target.basis[i], i);
    auto row_of = [&](const IntPolynomial& f) {
        SparseRow row;
        IntPolynomial pf = prune(f);
        for (const auto& [m, coef] : pf.terms()) row.push_back({col.at(m), coef});
        std::sort(row.begin(), row.end(), [](const LatticeEntry& a, const LatticeEntry& b) { return a.col < b.col; });
        return row;
    };
    LatticeEchelon sys(nb + nh, nb);
    for (auto& row : target.rows) sys.insert(row);
    for (int j = 0; j < nh; ++j) {
        SparseRow row = row_of(IntPolynomial(unknowns[j], Integer(1)) * c);
        row.push_back({nb + j, Integer(1)});
        sys.insert(std::move(row));
    }
    SparseRow rem = sys.reduce(row_of(g));
    if (!rem.empty() && rem.front().col < nb) throw AlgebraError("not divisible: " + g.to_string());
    IntPolynomial h;
    for (const auto& e : rem) h.add_term(unknowns[e.col - nb], -e.value);
    return h;
}

std::string GradedPresentation::to_json() const {
    nlohmann::json j;
    j["symbols"] = nlohmann::json::array();
    for (const auto& s : impl_->symbols) j["symbols"].push_back({{"name", s.name()}, {"degree", s.degree()}});
    j["relations"] = nlohmann::json::array();
    for (const auto& r : impl_->relations) j["relations"].push_back(r.to_string());
    if (!impl_->caps.empty()) {
        j["degree_caps"] = nlohmann::json::array();
        for (const auto& cap : impl_->caps) {
            nlohmann::json g = nlohmann::json::array();
            for (const auto& s : cap.group) g.push_back(s.name());
            j["degree_caps"].push_back({{"symbols", g}, {"max_degree", cap.max_degree}});
        }
    }
    return j.dump();
}

}  // namespace g1chow
