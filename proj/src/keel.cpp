#include "g1chow/keel.hpp"

#include <algorithm>
#include <set>

namespace g1chow {

namespace {

// Fixes the sign so the leading coefficient is positive, for deduplication.
IntPolynomial sign_normalized(const IntPolynomial& p) {
    if (p.is_zero() || p.terms().begin()->second > 0) return p;
    return -p;
}

void push_unique(std::vector<IntPolynomial>& out, std::set<std::string>& seen, const IntPolynomial& p) {
    if (p.is_zero()) return;
    IntPolynomial q = sign_normalized(p);
    if (seen.insert(q.to_string()).second) out.push_back(std::move(q));
}

}  // namespace

IntPolynomial keel_k1(const std::vector<Subset>& universe, Symbol (*make)(Subset), int i, int j, int h) {
    IntPolynomial out;
    Subset si = singleton(i), sj = singleton(j), sh = singleton(h);
    for (Subset t : universe) {
        if ((t & si) && (t & sj) && !(t & sh)) out += IntPolynomial(make(t));
        if ((t & si) && (t & sh) && !(t & sj)) out -= IntPolynomial(make(t));
    }
    return out;
}

IntPolynomial keel_k1(const std::vector<Subset>& universe, Symbol (*make)(Subset), int i, int j, int h, int k) {
    IntPolynomial out;
    auto has = [](Subset t, int e) { return (t & singleton(e)) != 0; };
    for (Subset t : universe) {
        if (has(t, i) && has(t, j) && !has(t, h) && !has(t, k)) out += IntPolynomial(make(t));
        if (has(t, h) && has(t, k) && !has(t, i) && !has(t, j)) out += IntPolynomial(make(t));
        if (has(t, i) && has(t, h) && !has(t, j) && !has(t, k)) out -= IntPolynomial(make(t));
        if (has(t, j) && has(t, k) && !has(t, i) && !has(t, h)) out -= IntPolynomial(make(t));
    }
    return out;
}

KeelRing::KeelRing(Subset markings, bool dimension_cap) : markings_(markings), cap_(dimension_cap) {
    if (subset_size(markings) < 2) throw AlgebraError("keel_presentation needs at least two markings");
    // Proper subsets of size >= 2.
    for (Subset t = markings; t; t = (t - 1) & markings)
        if (t != markings && subset_size(t) >= 2) generators_.push_back(t);
    std::sort(generators_.begin(), generators_.end(), subset_less);

    std::set<std::string> seen;
    auto el = subset_elements(markings);
    auto make = &Symbol::divisor;
    for (int i : el)
        for (int j : el)
            for (int h : el) {
                if (i == j || j == h || i == h) continue;
                push_unique(relations_, seen, keel_k1(generators_, make, i, j, h));
                for (int k : el) {
                    if (k == i || k == j || k == h) continue;
                    push_unique(relations_, seen, keel_k1(generators_, make, i, j, h, k));
                }
            }
    for (std::size_t a = 0; a < generators_.size(); ++a)
        for (std::size_t b = a + 1; b < generators_.size(); ++b)
            if (incomparable(generators_[a], generators_[b]))
                relations_.push_back(IntPolynomial(Symbol::divisor(generators_[a])) * IntPolynomial(Symbol::divisor(generators_[b])));
    presentation_ = GradedPresentation(symbols(), relations_, caps());
}

int KeelRing::dimension() const { return subset_size(markings_) - 2; }

std::vector<Symbol> KeelRing::symbols() const {
    std::vector<Symbol> out;
    for (Subset t : generators_) out.push_back(Symbol::divisor(t));
    return out;
}

std::vector<DegreeCap> KeelRing::caps() const {
    if (!cap_ || generators_.empty()) return {};
    return {DegreeCap{symbols(), dimension()}};
}

IntPolynomial KeelRing::psi_star(int i, int j) const {
    if (i == j || !subset_contains(markings_, i) || !subset_contains(markings_, j)) throw AlgebraError("psi_star: need two distinct markings");
    IntPolynomial out;
    Subset ij = singleton(i) | singleton(j);
    for (Subset t : generators_)
        if ((t & ij) == ij) out += IntPolynomial(Symbol::divisor(t));
    return out;
}

KeelRing keel_presentation(const std::vector<int>& markings, bool dimension_cap) {
    return KeelRing(subset_from(markings), dimension_cap);
}

std::vector<int> StableTree::internal_valences() const {
    std::vector<int> val(leaves + internal, 0);
    for (auto [a, b] : edges) {
        ++val[a];
        ++val[b];
    }
    return {val.begin() + leaves, val.end()};
}

std::vector<Subset> StableTree::splits() const {
    const int total = leaves + internal;
    std::vector<std::vector<int>> adj(total);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<Subset> out;
    for (auto [a, b] : edges) {
        if (a < leaves || b < leaves) continue;
        // Leaves reachable from b without crossing the edge.
        Subset side = 0;
        std::vector<int> stack{b};
        std::vector<char> seen(total, 0);
        seen[a] = seen[b] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v < leaves) side |= singleton(v + 1);
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        if (side & 1u) side = full_subset(leaves) & ~side;
        out.push_back(side);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<StableTree> enumerate_stable_trees(int n) {
    if (n < 3) throw AlgebraError("stable trees need at least three leaves");
    // Internal vertices are numbered from 100 while growing, renumbered at the end.
    constexpr int base = 100;
    struct Growing {
        int internal;
        std::vector<std::pair<int, int>> edges;
    };
    std::vector<Growing> trees{{1, {{0, base}, {1, base}, {2, base}}}};
    for (int leaf = 3; leaf < n; ++leaf) {
        std::vector<Growing> next;
        for (const auto& t : trees) {
            for (int v = 0; v < t.internal; ++v) {
                Growing g = t;
                g.edges.emplace_back(leaf, base + v);
                next.push_back(std::move(g));
            }
            for (std::size_t e = 0; e < t.edges.size(); ++e) {
                Growing g = t;
                int mid = base + g.internal++;
                auto [a, b] = g.edges[e];
                g.edges[e] = {a, mid};
                g.edges.emplace_back(mid, b);
                g.edges.emplace_back(leaf, mid);
                next.push_back(std::move(g));
            }
        }
        trees = std::move(next);
    }
    std::vector<StableTree> out;
    for (auto& t : trees) {
        StableTree s{n, t.internal, {}};
        for (auto [a, b] : t.edges) s.edges.emplace_back(a >= base ? a - base + n : a, b >= base ? b - base + n : b);
        out.push_back(std::move(s));
    }
    return out;
}

Integer mzero_open_count(int k, const Integer& q) {
    if (k < 3) throw AlgebraError("M₀,k needs k >= 3");
    Integer r = 1;
    for (int i = 2; i <= k - 2; ++i) r *= q - i;
    return r;
}

Integer mzero_point_count(int n, const Integer& q) {
    Integer total = 0;
    for (const auto& t : enumerate_stable_trees(n)) {
        Integer term = 1;
        for (int v : t.internal_valences()) term *= mzero_open_count(v, q);
        total += term;
    }
    return total;
}

std::vector<Integer> mzero_point_polynomial(int n) {
    const int deg = n - 3;
    std::vector<mpq_class> coeff(deg + 1, 0);
    // Lagrange interpolation through q = 0..deg.
    for (int a = 0; a <= deg; ++a) {
        mpq_class ya(mzero_point_count(n, Integer(a)));
        std::vector<mpq_class> basis{1};
        mpq_class denom = 1;
        for (int b = 0; b <= deg; ++b) {
            if (b == a) continue;
            std::vector<mpq_class> nb(basis.size() + 1, 0);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                nb[i + 1] += basis[i];
                nb[i] -= basis[i] * b;
            }
            basis = std::move(nb);
            denom *= a - b;
        }
        for (std::size_t i = 0; i < basis.size(); ++i) coeff[i] += ya * basis[i] / denom;
    }
    std::vector<Integer> out;
    for (auto& c : coeff) {
        c.canonicalize();
        if (c.get_den() != 1) throw AlgebraError("point count interpolation is not integral");
        out.push_back(c.get_num());
    }
    return out;
}

}  // namespace g1chow
