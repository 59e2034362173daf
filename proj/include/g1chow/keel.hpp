#pragma once

#include <utility>
#include <vector>

#include "g1chow/partitions.hpp"
#include "g1chow/presentation.hpp"

namespace g1chow {

/// Keel's presentation of the Chow ring of M̄₀ with markings S ∪ {★}.
///
/// One generator D_T for every T ⊊ S with |T| >= 2; subsets containing ★ are
/// represented by their complements. With `dimension_cap` the presentation
/// also declares monomials of degree above |S|-2 to be zero, which holds in
/// the ring and keeps higher graded pieces empty without lattice work.
class KeelRing {
public:
    explicit KeelRing(Subset markings, bool dimension_cap = true);

    Subset markings() const { return markings_; }
    int dimension() const;
    const std::vector<Subset>& generators() const { return generators_; }
    std::vector<Symbol> symbols() const;
    /// K1 relations (three- and four-point forms, deduplicated) and K2 monomials.
    const std::vector<IntPolynomial>& relations() const { return relations_; }
    std::vector<DegreeCap> caps() const;
    const GradedPresentation& presentation() const { return presentation_; }

    /// Σ D_T over T ⊊ S containing i and j.
    IntPolynomial psi_star(int i, int j) const;

private:
    Subset markings_;
    bool cap_;
    std::vector<Subset> generators_;
    std::vector<IntPolynomial> relations_;
    GradedPresentation presentation_;
};

KeelRing keel_presentation(const std::vector<int>& markings, bool dimension_cap = true);

/// Σ over T in `universe` with i,j ∈ T, h ∉ T minus Σ over T with i,h ∈ T, j ∉ T.
IntPolynomial keel_k1(const std::vector<Subset>& universe, Symbol (*make)(Subset), int i, int j, int h);
/// The four-point form for distinct i,j,h,k.
IntPolynomial keel_k1(const std::vector<Subset>& universe, Symbol (*make)(Subset), int i, int j, int h, int k);

/// A stable tree: leaves 0..leaves-1 carry labels 1..leaves, internal vertices
/// follow; every internal vertex has valence at least three.
struct StableTree {
    int leaves = 0;
    int internal = 0;
    std::vector<std::pair<int, int>> edges;

    std::vector<int> internal_valences() const;
    /// Leaf sets cut off by internal edges, normalized to avoid leaf 1.
    std::vector<Subset> splits() const;
};

/// Every stable tree with n labelled leaves, each exactly once. n >= 3.
std::vector<StableTree> enumerate_stable_trees(int n);

/// |M₀,k(F_q)| = (q-2)(q-3)...(q-k+2).
Integer mzero_open_count(int k, const Integer& q);
/// |M̄₀,n(F_q)|, summed over stable trees.
Integer mzero_point_count(int n, const Integer& q);
/// Coefficients c_0..c_{n-3} of the point count as a polynomial in q,
/// interpolated from its values at q = 0..n-3.
std::vector<Integer> mzero_point_polynomial(int n);

}  // namespace g1chow
