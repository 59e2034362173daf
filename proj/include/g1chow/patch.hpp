#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "g1chow/fixtures.hpp"
#include "g1chow/strata.hpp"

namespace g1chow {

/// How independent per-stratum work is scheduled. Both give identical results.
enum class Execution { serial, parallel };

/// Partitions of {1..n} grouped by length, with their tail models.
///
/// Level j holds the partitions of length j; the open set U_m is the union of
/// the strata of length > m, so U_{n-1} is the minimal stratum.
class Stratification {
public:
    explicit Stratification(int n);

    int n() const { return n_; }
    const std::vector<SetPartition>& all() const { return all_; }
    const std::vector<SetPartition>& level(int length) const;
    const TailModel& model(const SetPartition& s) const;
    /// The model of the discrete partition, i.e. the minimal stratum.
    const TailModel& minimal() const { return model(SetPartition::discrete(n_)); }

private:
    int n_;
    std::vector<SetPartition> all_;
    std::vector<std::vector<SetPartition>> levels_;
    std::map<SetPartition, std::unique_ptr<TailModel>> models_;
};

/// Prescribed restrictions of a class: the seed on the minimal stratum (in
/// λ, ν) and γ_S on other strata (in the stratum's symbols; absent means 0).
struct RestrictionData {
    IntPolynomial seed;
    std::map<SetPartition, IntPolynomial> gamma;

    IntPolynomial gamma_at(const SetPartition& s) const;
};

struct PatchOptions {
    Execution execution = Execution::parallel;
    /// Process each level in reverse order (the result must not change).
    bool reverse_level_order = false;
    /// Called after each level with the current polynomial.
    std::function<void(int level, const IntPolynomial&)> on_level;
};

/// Restriction data of the closure of Ell_S: seed [Ell_S] on the minimal
/// stratum and γ_P = [Ell_{S∘P}] whenever P refines S.
RestrictionData ell_closure_data(const Stratification& st, const SetPartition& s, const ClassTable& table = default_class_table());
/// The same rule for the closure of Nod_R.
RestrictionData nod_closure_data(const Stratification& st, const SetPartition& r, const ClassTable& table = default_class_table());

/// An ambient polynomial restricting to the seed on the minimal stratum and
/// to γ_S on every other stratum.
IntPolynomial fundamental_class(const Stratification& st, const RestrictionData& data, const PatchOptions& opt = {});

/// Extends a relation valid on U_m (vanishing on strata of length > m) to one
/// vanishing on every stratum.
IntPolynomial lift_relation(const Stratification& st, const IntPolynomial& f, int valid_above_level, const PatchOptions& opt = {});

/// Strata (including the minimal one) where the restriction of f is nonzero.
std::vector<SetPartition> nonvanishing_strata(const Stratification& st, const IntPolynomial& f, Execution exec = Execution::parallel);
inline bool vanishes_everywhere(const Stratification& st, const IntPolynomial& f, Execution exec = Execution::parallel) {
    return nonvanishing_strata(st, f, exec).empty();
}
/// f and g define the same class: their difference restricts to zero on every stratum.
inline bool same_class(const Stratification& st, const IntPolynomial& f, const IntPolynomial& g, Execution exec = Execution::parallel) {
    return vanishes_everywhere(st, f - g, exec);
}

/// Relations of the Gorenstein space, grouped by origin.
struct GorensteinRelations {
    std::vector<IntPolynomial> k1;      ///< τ_B times three- and four-point Keel sums
    std::vector<IntPolynomial> k2;      ///< τ_B τ_B' for incomparable pairs
    std::vector<IntPolynomial> normal;  ///< τ_B(λ + Σ τ_B') for every pair in B
    std::vector<IntPolynomial> a;       ///< n = 6: lifted τ_S(ν - γ_S)
    std::vector<IntPolynomial> bc;      ///< n = 6: lifts of the two Gr(2,5) relations

    std::vector<IntPolynomial> all() const;
};

std::vector<Symbol> gorenstein_symbols(int n);
GorensteinRelations gorenstein_relations(int n, const PatchOptions& opt = {});
GradedPresentation gorenstein_presentation(int n, const PatchOptions& opt = {});

/// Relabels markings in λ, ν, τ polynomials (perm[i-1] is the image of i).
IntPolynomial relabel(const IntPolynomial& f, const std::vector<int>& perm);
/// A permutation taking partition `from` to partition `to` (same shape).
std::vector<int> permutation_between(const SetPartition& from, const SetPartition& to);

/// The fixture class of the closure of Ell_S, relabelled from the stored
/// representative of the same shape; empty if no fixture has that shape.
std::optional<IntPolynomial> fixture_class(const SetPartition& s, const std::vector<ClosureFixture>& fixtures = default_closure_fixtures());

}  // namespace g1chow
