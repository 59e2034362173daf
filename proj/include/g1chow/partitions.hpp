#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace g1chow {

/// A subset of {1..31}, bit (i-1) standing for element i.
using Subset = std::uint32_t;

/// Largest ground set accepted by the partition types.
inline constexpr int kMaxGroundSet = 16;

class PartitionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

int subset_size(Subset s);
int subset_min(Subset s);
Subset full_subset(int n);
Subset singleton(int element);
std::vector<int> subset_elements(Subset s);
Subset subset_from(const std::vector<int>& elements);
bool subset_contains(Subset s, int element);

/// "1 2 3" (space separated) or "{1,2,3}" (braced).
std::string subset_to_string(Subset s);
std::string subset_to_braced(Subset s);

/// Size first, then lexicographic on the sorted element lists.
bool subset_less(Subset a, Subset b);

/// Lexicographic comparison of sorted element lists.
std::strong_ordering subset_lex_compare(Subset a, Subset b);

/// True iff the intersection is nonempty and a proper subset of both.
bool incomparable(Subset b, Subset b2);

/// A partition of {1..n}; parts are kept sorted by minimum element.
class SetPartition {
public:
    SetPartition() = default;
    SetPartition(int n, std::vector<Subset> parts);

    /// Parses "1 2|3|4". If n is 0 it is taken to be the largest element.
    static SetPartition parse(std::string_view text, int n = 0);
    /// The partition into singletons.
    static SetPartition discrete(int n);
    /// The one-part partition.
    static SetPartition indiscrete(int n);

    int n() const { return n_; }
    std::size_t length() const { return parts_.size(); }
    const std::vector<Subset>& parts() const { return parts_; }
    Subset part(std::size_t i) const { return parts_.at(i); }

    /// Number of parts with at least two elements.
    std::size_t non_singleton_count() const;
    std::vector<Subset> non_singleton_parts() const;
    /// Part sizes in decreasing order.
    std::vector<int> shape() const;
    /// Index of the part containing the element.
    std::size_t part_of(int element) const;

    bool is_discrete() const { return static_cast<int>(parts_.size()) == n_; }

    std::string to_string() const;

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    /// Orders by length, then lexicographically on the parts.
    friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b);

private:
    int n_ = 0;
    std::vector<Subset> parts_;
};

/// All partitions of {1..n} in canonical order. 1 <= n <= 6.
std::vector<SetPartition> enumerate_partitions(int n);

/// True iff every part of `fine` lies in a part of `coarse` (coarse ⪯ fine).
bool refines(const SetPartition& coarse, const SetPartition& fine);

/// The partition whose non-singleton parts are the given blocks.
SetPartition disc_completion(const std::vector<Subset>& blocks, int n);

/// Groups the parts of `s` according to the parts of `p`; requires p ⪯ s.
/// The result is a partition of {1..|s|}, element a standing for the a-th part of s.
SetPartition compose(const SetPartition& p, const SetPartition& s);

/// Applies a permutation of {1..n} (perm[i-1] is the image of i).
SetPartition relabel(const SetPartition& s, const std::vector<int>& perm);
Subset relabel(Subset s, const std::vector<int>& perm);

/// A set of allowed singularity levels.
struct QSpec {
    static constexpr const char* convention = "BKN-allowed-singularities";

    int n = 0;
    std::set<SetPartition> allowed;

    bool allows(const SetPartition& s) const { return allowed.count(s) != 0; }

    static QSpec from_json(std::string_view text);
    std::string to_json() const;
};

struct QValidation {
    bool valid = true;
    std::vector<std::string> problems;
};

QValidation validate_qspec(const QSpec& q);

QSpec dm_space(int n);
/// All partitions of length at most m.
QSpec smyth(int n, int m);
QSpec lp_minimal(int n);

}  // namespace g1chow
