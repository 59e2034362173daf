#include <doctest.h>

#include "g1chow/modular.hpp"

using namespace g1chow;

namespace {

IntPolynomial P(const char* s) { return IntPolynomial::parse(s); }

int surviving_tails(const QPresentation& qp) {
    int k = 0;
    for (const auto& s : qp.generators)
        if (s.kind == SymbolKind::tail) ++k;
    return k;
}

}  // namespace

TEST_CASE("one marking") {
    auto qp = qstable_presentation(dm_space(1));
    auto h = hilbert_poincare(qp);
    CHECK(h.ranks == std::vector<long>{1, 1});
    CHECK(qp.presentation.reduces_to_zero(P("24*l^2")));
    CHECK_FALSE(qp.presentation.reduces_to_zero(P("12*l^2")));
}

TEST_CASE("two markings") {
    auto qp = qstable_presentation(dm_space(2));
    CHECK(surviving_tails(qp) == 1);
    auto h = hilbert_poincare(qp);
    CHECK(h.ranks == std::vector<long>{1, 2, 1});
    CHECK(h.palindromic);
    CHECK(torsion_report(qp, 2).torsion == std::vector<Integer>{24});

    // The minimal compactification has no tails: Z[λ]/(24λ³).
    auto lp = qstable_presentation(lp_minimal(2));
    CHECK(surviving_tails(lp) == 0);
    CHECK(hilbert_poincare(lp).ranks == std::vector<long>{1, 1, 1});
    CHECK(lp.presentation.reduces_to_zero(P("24*l^3")));
    CHECK_FALSE(lp.presentation.reduces_to_zero(P("l^3")));
}

TEST_CASE("degree-two torsion") {
    for (int n = 2; n <= 4; ++n) {
        auto dm = qstable_presentation(dm_space(n));
        CHECK_MESSAGE(torsion_report(dm, 2).torsion == std::vector<Integer>{24}, "n = ", n);
        for (int m = 1; m <= n - 1; ++m) {
            auto qp = qstable_presentation(smyth(n, m));
            CHECK_MESSAGE(torsion_report(qp, 2).torsion.empty(), "n = ", n, ", m = ", m);
        }
    }
}

TEST_CASE("ranks of small spaces") {
    CHECK(hilbert_poincare(qstable_presentation(dm_space(3))).ranks == std::vector<long>{1, 5, 5, 1});
    CHECK(hilbert_poincare(qstable_presentation(dm_space(4))).ranks == std::vector<long>{1, 12, 23, 12, 1});
    CHECK(hilbert_poincare(qstable_presentation(smyth(4, 1))).ranks == std::vector<long>{1, 11, 18, 11, 1});
    CHECK(hilbert_poincare(qstable_presentation(smyth(4, 2))).ranks == std::vector<long>{1, 7, 7, 7, 1});
    CHECK(hilbert_poincare(qstable_presentation(lp_minimal(3))).ranks == std::vector<long>{1, 1, 1, 1});
    CHECK(hilbert_poincare(qstable_presentation(lp_minimal(4))).ranks == std::vector<long>{1, 1, 1, 1, 1});
}

TEST_CASE("rank lists are palindromic") {
    for (int n = 1; n <= 4; ++n) {
        CHECK(hilbert_poincare(qstable_presentation(dm_space(n))).palindromic);
        for (int m = 1; m <= n - 1; ++m) CHECK(hilbert_poincare(qstable_presentation(smyth(n, m))).palindromic);
    }
    GradedPresentation lopsided({Symbol::lambda(), Symbol::tau(0b11)}, {P("l^2"), P("t{1,2}^2")});
    CHECK_FALSE(hilbert_poincare(lopsided, 3).palindromic);
}

TEST_CASE("one elliptic relation per level outside Q") {
    for (int n = 2; n <= 4; ++n)
        for (int m = 1; m <= n - 1; ++m) {
            auto qp = qstable_presentation(smyth(n, m));
            long not_allowed = 0;
            for (const auto& s : enumerate_partitions(n))
                if (!qp.qspec.allows(s)) ++not_allowed;
            CHECK(static_cast<long>(qp.ell_relations.size()) == not_allowed);
            CHECK(qp.skipped_ell.empty());
        }
    auto dm = qstable_presentation(dm_space(3));
    CHECK(dm.ell_relations.size() == 5);
    CHECK(dm.tail_products.empty());
}

TEST_CASE("invalid specs are rejected") {
    QSpec q = dm_space(3);
    q.allowed.insert(SetPartition::discrete(3));
    CHECK_THROWS_AS(qstable_presentation(q), PartitionError);
    QSpec gap = dm_space(3);
    gap.allowed.insert(SetPartition::parse("1 2|3", 3));
    CHECK_THROWS_AS(qstable_presentation(gap), PartitionError);
}

TEST_CASE("json export") {
    auto j = qstable_presentation(dm_space(2)).to_json();
    CHECK(j.find("\"generators\"") != std::string::npos);
    CHECK(j.find("t{1,2}") != std::string::npos);
}

TEST_CASE("the four-marking nodal cycle") {
    Stratification st(4);
    auto c = getzler_cycles(st);
    const auto l = P("l");
    // Solved from restrictions on every stratum; unique in this span.
    const IntPolynomial corrected = P("6") * l * l + P("6") * l * c.tau3 - P("2") * c.tau2 * c.tau3 + P("6") * c.tau22 +
                                    P("6") * l * c.tau4 + P("3") * c.tau3 * c.tau4 - c.tau2 * c.tau4;
    CHECK(same_class(st, c.nod22, corrected));
    auto bad = nonvanishing_strata(st, c.nod22 - c.expected_nod22());
    REQUIRE(bad.size() == 1);
    CHECK(bad[0] == SetPartition::indiscrete(4));
    // The two forms differ by exactly τ₂τ₄.
    CHECK(same_class(st, c.expected_nod22() - corrected, -(c.tau2 * c.tau4)));

    auto report = getzler_check();
    CHECK_FALSE(report.delta_checked);
    CHECK_FALSE(report.passed());
}
