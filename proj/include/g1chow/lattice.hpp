#pragma once

#include <vector>

#include "g1chow/polynomial.hpp"

namespace g1chow {

struct LatticeEntry {
    int col;
    Integer value;

    friend bool operator==(const LatticeEntry& a, const LatticeEntry& b) { return a.col == b.col && a.value == b.value; }
};

/// Sparse integer vector, entries sorted by column, no zeros.
using SparseRow = std::vector<LatticeEntry>;

/// a*x + b*y.
SparseRow combine(const Integer& a, const SparseRow& x, const Integer& b, const SparseRow& y);

/// Rank and torsion of a finitely generated abelian group.
struct InvariantFactors {
    int degree = 0;
    long rank = 0;
    /// Entries > 1, each dividing the next.
    std::vector<Integer> torsion;

    friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;
};

/// Invariant factors (nonzero diagonal of the Smith form) of a dense matrix.
std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> m);

/// Rearranges a list of cyclic orders into divisibility-chain form, dropping units.
std::vector<Integer> normalize_torsion(const std::vector<Integer>& orders);

/// Row echelon basis of an integer lattice, maintained under insertion.
///
/// Pivots are only taken in columns below `pivot_limit`; rows whose leading
/// column reaches the limit are discarded (used to solve linear systems with
/// a trailing tag block).
class LatticeEchelon {
public:
    explicit LatticeEchelon(int ncols, int pivot_limit = -1);

    int columns() const { return ncols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<SparseRow>& rows() const { return rows_; }

    void insert(SparseRow r);

    /// Reduces leading entries while they sit on pivots and are divisible.
    /// The result is zero below pivot_limit iff r lies in the lattice
    /// (projected to the pivot block).
    SparseRow reduce(SparseRow r) const;
    bool contains(const SparseRow& r) const;

    /// Reduces every entry above a pivot into [0, pivot).
    void make_hermite();
    /// Canonical representative of r modulo the lattice. Requires make_hermite().
    SparseRow normal_form(SparseRow r) const;

    /// Rank and torsion of Z^columns / lattice.
    InvariantFactors quotient_invariants() const;

private:
    int ncols_;
    int limit_;
    bool hermite_ = false;
    std::vector<SparseRow> rows_;
    std::vector<int> pivot_row_;  // column -> row index or -1

    // Centred reduction of the non-leading entries against other pivots.
    void size_reduce(SparseRow& r) const;
};

}  // namespace g1chow
