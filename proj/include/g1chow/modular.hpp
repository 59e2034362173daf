#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g1chow/patch.hpp"

namespace g1chow {

/// A presentation of the Chow ring of the compactification selected by a Q-spec.
///
/// Tails τ_B survive when the level disc(B) is not allowed; every level S not
/// in Q contributes the class of the closure of Ell_S as a relation.
struct QPresentation {
    QSpec qspec;
    std::vector<Symbol> generators;
    std::vector<IntPolynomial> structural;     ///< Gorenstein relations with excised τ set to 0
    std::vector<IntPolynomial> tail_products;  ///< ∏τ_{B_α} over disjoint collections with an allowed level
    std::vector<std::pair<SetPartition, IntPolynomial>> ell_relations;
    /// Levels whose Ell class is not tabulated (only the six-branch point for n = 6).
    std::vector<SetPartition> skipped_ell;
    GradedPresentation presentation;

    int n() const { return qspec.n; }
    std::string to_json() const;
};

/// Throws PartitionError when the spec is invalid.
QPresentation qstable_presentation(const QSpec& q, const PatchOptions& opt = {});

InvariantFactors torsion_report(const QPresentation& qp, int degree);

struct HilbertPoincare {
    std::vector<InvariantFactors> degrees;  ///< degrees 0..n
    std::vector<long> ranks;
    bool palindromic = false;
};

HilbertPoincare hilbert_poincare(const GradedPresentation& p, int top_degree);
inline HilbertPoincare hilbert_poincare(const QPresentation& qp) { return hilbert_poincare(qp.presentation, qp.n()); }

/// One line of a verification table.
struct CheckResult {
    std::string name;
    std::string source;  ///< where the expected value comes from
    bool passed = false;
    std::string detail;
};

/// Boundary cycles entering Getzler's relation on four markings.
struct GetzlerCycles {
    IntPolynomial tau2, tau3, tau4, tau22;
    IntPolynomial nod22;  ///< sum of the three (2,2) nodal closure classes
    /// 6λ² + 6λτ₃ − 2τ₂τ₃ + 6τ_{2,2} + 6λτ₄ + 3τ₃τ₄ − 2τ₂τ₄
    IntPolynomial expected_nod22() const;
};

GetzlerCycles getzler_cycles(const Stratification& st, const PatchOptions& opt = {});

struct GetzlerReport {
    GetzlerCycles cycles;
    std::vector<CheckResult> checks;
    /// True when δ_∅ data was supplied and the corollary identities were run.
    bool delta_checked = false;

    bool passed() const;
};

/// Checks the integral form of Getzler's relation on G_{1,4}. When
/// `delta_empty` is given (restriction data of δ_∅), also checks
/// G + 12λ² = 0 and 2G + [Ell_{1234}] = 0.
GetzlerReport getzler_check(const std::optional<RestrictionData>& delta_empty = std::nullopt, const PatchOptions& opt = {});

}  // namespace g1chow
