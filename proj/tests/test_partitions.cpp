#include <doctest.h>

#include <map>

#include "g1chow/partitions.hpp"

using namespace g1chow;

namespace {

// Stirling numbers of the second kind by the usual recurrence.
long stirling2(int n, int k) {
    if (n == 0 && k == 0) return 1;
    if (n == 0 || k == 0) return 0;
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

}  // namespace

TEST_CASE("subset helpers") {
    Subset s = subset_from({3, 1, 5});
    CHECK(subset_size(s) == 3);
    CHECK(subset_min(s) == 1);
    CHECK(subset_elements(s) == std::vector<int>{1, 3, 5});
    CHECK(subset_to_braced(s) == "{1,3,5}");
    CHECK(full_subset(4) == 0b1111u);
    CHECK(incomparable(subset_from({1, 2}), subset_from({2, 3})));
    CHECK_FALSE(incomparable(subset_from({1, 2}), subset_from({1, 2, 3})));
    CHECK_FALSE(incomparable(subset_from({1, 2}), subset_from({3, 4})));
    // size first, then lexicographic
    CHECK(subset_less(subset_from({3, 4}), subset_from({1, 2, 3})));
    CHECK(subset_less(subset_from({1, 3}), subset_from({2, 3})));
}

TEST_CASE("parse and print") {
    auto s = SetPartition::parse("1 2|3|4");
    CHECK(s.n() == 4);
    CHECK(s.length() == 3);
    CHECK(s.to_string() == "1 2|3|4");
    CHECK(s.shape() == std::vector<int>{2, 1, 1});
    CHECK(SetPartition::parse("3|4 1 2", 4).to_string() == "1 2 4|3");
    CHECK_THROWS_AS(SetPartition::parse("1 2|2|3"), PartitionError);
    CHECK_THROWS_AS(SetPartition::parse("1|3", 3), PartitionError);
    CHECK_THROWS_AS(SetPartition::parse("1|x"), PartitionError);
    CHECK(SetPartition::discrete(3).is_discrete());
    CHECK(SetPartition::indiscrete(3).length() == 1);
}

TEST_CASE("enumeration matches Bell and Stirling numbers") {
    for (int n = 1; n <= 6; ++n) {
        auto all = enumerate_partitions(n);
        std::map<std::size_t, long> by_length;
        for (const auto& s : all) ++by_length[s.length()];
        long bell = 0;
        for (int k = 1; k <= n; ++k) {
            CHECK(by_length[k] == stirling2(n, k));
            bell += stirling2(n, k);
        }
        CHECK(static_cast<long>(all.size()) == bell);
        CHECK(std::is_sorted(all.begin(), all.end()));
    }
    CHECK(enumerate_partitions(4).size() == 15);
    CHECK(enumerate_partitions(6).size() == 203);
}

TEST_CASE("refinement order") {
    auto coarse = SetPartition::parse("1 2 3|4", 4);
    auto fine = SetPartition::parse("1 2|3|4", 4);
    CHECK(refines(coarse, fine));
    CHECK_FALSE(refines(fine, coarse));
    for (const auto& s : enumerate_partitions(4)) {
        CHECK(refines(s, s));
        CHECK(refines(SetPartition::indiscrete(4), s));
        CHECK(refines(s, SetPartition::discrete(4)));
    }
    // antisymmetry and transitivity on all of n = 4
    auto all = enumerate_partitions(4);
    for (const auto& a : all)
        for (const auto& b : all) {
            if (a != b) CHECK_FALSE((refines(a, b) && refines(b, a)));
            for (const auto& c : all)
                if (refines(a, b) && refines(b, c)) CHECK(refines(a, c));
        }
}

TEST_CASE("composition and disc completion") {
    auto p = SetPartition::parse("1 2 3 4|5 6", 6);
    auto s = SetPartition::parse("1 2|3|4|5|6", 6);
    auto c = compose(p, s);
    CHECK(c.n() == 5);
    CHECK(c.to_string() == "1 2 3|4 5");
    CHECK(compose(p, SetPartition::discrete(6)).shape() == std::vector<int>{4, 2});
    CHECK(compose(s, s).is_discrete());
    CHECK_THROWS_AS(compose(s, p), PartitionError);

    auto d = disc_completion({subset_from({1, 2}), subset_from({4, 5})}, 5);
    CHECK(d.to_string() == "1 2|3|4 5");
    CHECK(disc_completion({}, 3).is_discrete());
}

TEST_CASE("relabelling") {
    auto s = SetPartition::parse("1 2|3", 3);
    auto r = relabel(s, {3, 1, 2});
    CHECK(r.to_string() == "1 3|2");
    CHECK(relabel(subset_from({1, 2}), {2, 3, 1}) == subset_from({2, 3}));
}

TEST_CASE("Q-specs") {
    CHECK(dm_space(3).allowed.empty());
    for (int n = 1; n <= 5; ++n)
        for (int m = 0; m <= n - 1; ++m) {
            QSpec q = smyth(n, m);
            CHECK(validate_qspec(q).valid);
            long expected = 0;
            for (int k = 1; k <= m; ++k) expected += stirling2(n, k);
            CHECK(static_cast<long>(q.allowed.size()) == expected);
        }
    CHECK_THROWS_AS(smyth(3, 3), PartitionError);

    QSpec bad{3, {SetPartition::parse("1 2|3", 3)}};
    auto v = validate_qspec(bad);
    CHECK_FALSE(v.valid);  // {1,2,3} is coarser and missing
    QSpec disc{2, {SetPartition::discrete(2), SetPartition::indiscrete(2)}};
    CHECK_FALSE(validate_qspec(disc).valid);

    QSpec q = smyth(4, 2);
    QSpec back = QSpec::from_json(q.to_json());
    CHECK(back.n == 4);
    CHECK(back.allowed == q.allowed);
    CHECK_THROWS_AS(QSpec::from_json("{\"n\": 3}"), PartitionError);
    CHECK_THROWS_AS(QSpec::from_json("not json"), PartitionError);
}
