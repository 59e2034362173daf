#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "g1chow/lattice.hpp"
#include "g1chow/polynomial.hpp"

namespace g1chow {

/// Declares every monomial whose degree in `group` exceeds `max_degree` to be
/// zero. Equivalent to adding all such monomials as relations.
struct DegreeCap {
    std::vector<Symbol> group;
    int max_degree = 0;
};

/// The degree-d piece of a presentation in matrix form.
struct GradedComponent {
    int degree = 0;
    std::vector<Monomial> basis;
    /// A basis of the degree-d part of the ideal, in coordinates of `basis`.
    std::vector<SparseRow> rows;
};

/// A commutative graded ring Z[symbols]/(relations).
///
/// Immutable after construction. Relation lattices are computed per degree on
/// first use and memoized; the memo is shared between copies and safe to fill
/// from several threads.
///
/// Symbols that occur in no relation are treated as free polynomial variables
/// over the subring generated by the others, so only the latter needs lattice
/// computations.
class GradedPresentation {
public:
    static constexpr int kMaxDegree = 40;

    GradedPresentation();
    GradedPresentation(std::vector<Symbol> symbols, std::vector<IntPolynomial> relations, std::vector<DegreeCap> caps = {});

    const std::vector<Symbol>& symbols() const;
    const std::vector<IntPolynomial>& relations() const;
    const std::vector<DegreeCap>& caps() const;
    bool declares(const Symbol& s) const;
    bool is_free(const Symbol& s) const;

    /// True if the monomial is divisible by a unit monomial relation or breaks a cap.
    bool is_pruned(const Monomial& m) const;
    /// Drops pruned monomials; the class is unchanged.
    IntPolynomial prune(const IntPolynomial& f) const;

    /// Non-pruned monomials of degree d in printing order.
    std::vector<Monomial> basis(int d) const;
    GradedComponent graded_component(int d) const;

    bool reduces_to_zero(const IntPolynomial& f) const;
    bool equivalent(const IntPolynomial& f, const IntPolynomial& g) const { return reduces_to_zero(f - g); }
    /// Canonical representative of the class of f (Hermite reduction per degree).
    IntPolynomial normal_form(const IntPolynomial& f) const;

    InvariantFactors smith_invariants(int d) const;
    std::vector<long> hilbert_function(int d_max) const;

    /// Some h with h*c - g in the ideal. Uses long division when c is monic up to
    /// sign in a free symbol, the lattice solve otherwise. Throws when no h exists.
    IntPolynomial divide_in_quotient(const IntPolynomial& g, const IntPolynomial& c) const;
    /// Solves the integer linear system directly (Hermite particular solution).
    IntPolynomial divide_by_lattice(const IntPolynomial& g, const IntPolynomial& c) const;
    /// Long division in a free symbol; nullopt if c is not monic in any free symbol.
    std::optional<IntPolynomial> divide_by_monic(const IntPolynomial& g, const IntPolynomial& c) const;

    /// {"symbols":[{"name","degree"}],"relations":[...canonical text...]}
    std::string to_json() const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

}  // namespace g1chow
