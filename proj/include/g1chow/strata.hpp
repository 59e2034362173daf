#pragma once

#include <vector>

#include "g1chow/keel.hpp"
#include "g1chow/partitions.hpp"
#include "g1chow/presentation.hpp"

namespace g1chow {

class UnsupportedError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The partition {{1,2,3,4},{5,6}} whose nodal locus defines ν for n = 6.
SetPartition banana_partition();

/// τ_S = ∏ τ_{S_α} over the non-singleton parts; 1 for the discrete partition.
IntPolynomial tau_of(const SetPartition& s);

/// The tail stratum of curves whose rational tails carry the non-singleton
/// parts of S: the minimal ring with |S| markings joined with one genus-zero
/// factor per non-singleton part. For the discrete partition it is the
/// minimal ring itself (written in λ_S, ν_S).
class TailModel {
public:
    TailModel(int n, SetPartition s);

    int n() const { return n_; }
    const SetPartition& partition() const { return s_; }
    /// Number of non-singleton parts.
    int codim() const { return static_cast<int>(factors_.size()); }
    const GradedPresentation& ring() const { return ring_; }
    const std::vector<KeelRing>& factors() const { return factors_; }

    /// Pullback of an ambient polynomial in λ, ν, τ_B.
    IntPolynomial restrict(const IntPolynomial& f) const;
    /// The substitution section λ_S ↦ λ, ν_S ↦ ν, D_T ↦ τ_T.
    IntPolynomial lift(const IntPolynomial& g) const;
    /// Top Chern class of the normal bundle, ∏(-λ_S - ψ★) with canonical pairs.
    IntPolynomial ctop() const;
    /// ψ★ of the factor containing `part`, for the pair (i, j).
    IntPolynomial psi_star(Subset part, int i, int j) const;
    /// A class of the minimal ring (in λ, ν) written in this stratum's symbols.
    IntPolynomial embed_core(const IntPolynomial& f) const;

private:
    int n_;
    SetPartition s_;
    std::vector<KeelRing> factors_;
    GradedPresentation ring_;

    const KeelRing* factor_for(Subset part) const;
    IntPolynomial restrict_tau(Subset b) const;
    IntPolynomial restrict_nu() const;
};

/// The elliptic stratum with branches partitioned by S (S not discrete):
/// ξ_S joined with the genus-zero factors.
class EllModel {
public:
    EllModel(int n, SetPartition s);

    const SetPartition& partition() const { return s_; }
    const GradedPresentation& ring() const { return ring_; }

    /// λ ↦ -ξ_S, τ_B ↦ D_B for B strictly inside a part, else 0.
    /// Throws UnsupportedError for ν, whose restriction is not known.
    IntPolynomial restrict(const IntPolynomial& f) const;

private:
    int n_;
    SetPartition s_;
    std::vector<KeelRing> factors_;
    GradedPresentation ring_;
};

IntPolynomial restrict_to_tail(int n, const SetPartition& s, const IntPolynomial& f);
IntPolynomial lift_from_tail(int n, const SetPartition& s, const IntPolynomial& g);
IntPolynomial ctop_tail(int n, const SetPartition& s);
IntPolynomial restrict_to_ell(int n, const SetPartition& s, const IntPolynomial& f);

}  // namespace g1chow
