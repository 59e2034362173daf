#pragma once

#include "g1chow/fixtures.hpp"
#include "g1chow/presentation.hpp"

namespace g1chow {

/// Chow ring of the minimal stratum with m markings: Z[λ] for m <= 5 and the
/// Gr(2,5) presentation in λ = σ₁, ν = σ₂ for m = 6.
///
/// With `stratum_symbols` the ring is written in λ_S (and ν_S) so it can be
/// joined with genus-zero factors inside a tail stratum.
GradedPresentation min_presentation(int m, bool stratum_symbols = false);

/// σ_{a1,a2} in λ, ν: σ₃ = 2λν - λ³, σ_a = 0 for a > 3, then
/// σ_{a1,a2} = σ_{a1}σ_{a2} - σ_{a1+1}σ_{a2-1}. Requires 3 >= a1 >= a2 >= 0.
IntPolynomial schubert_to_ln(int a1, int a2);

/// Replaces every σ symbol by schubert_to_ln.
IntPolynomial expand_schubert(const IntPolynomial& f);

/// Class of Nod_S or Ell_S in the minimal stratum, looked up by shape.
IntPolynomial min_class(MinKind kind, int m, const SetPartition& s, const ClassTable& table = default_class_table());
bool has_min_class(MinKind kind, int m, const SetPartition& s, const ClassTable& table = default_class_table());

/// λ ↦ λ_S, ν ↦ ν_S.
IntPolynomial to_stratum_symbols(const IntPolynomial& f);

}  // namespace g1chow
