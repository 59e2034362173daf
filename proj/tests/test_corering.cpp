#include <doctest.h>

#include "g1chow/corering.hpp"

using namespace g1chow;

namespace {

IntPolynomial P(const char* s) { return IntPolynomial::parse(s); }

// Schubert classes of Gr(2,5) by Giambelli, written out by hand:
// σ_a = c_a of the quotient bundle, σ_{a,b} = σ_a σ_b - σ_{a+1} σ_{b-1}.
IntPolynomial giambelli(int a, int b) {
    auto s = [](int k) -> IntPolynomial {
        switch (k) {
            case 0: return P("1");
            case 1: return P("l");
            case 2: return P("v");
            case 3: return P("2*l*v - l^3");
            default: return {};
        }
    };
    return b == 0 ? s(a) : s(a) * s(b) - s(a + 1) * s(b - 1);
}

}  // namespace

TEST_CASE("minimal rings") {
    CHECK(min_presentation(3).hilbert_function(4) == std::vector<long>{1, 1, 1, 1, 1});
    auto m6 = min_presentation(6);
    CHECK(m6.hilbert_function(7) == std::vector<long>{1, 1, 2, 2, 2, 1, 1, 0});
    CHECK(min_presentation(6, true).declares(Symbol::lambda_s()));
    CHECK_THROWS_AS(min_presentation(7), AlgebraError);
}

TEST_CASE("Schubert expansion") {
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= a; ++b) CHECK(schubert_to_ln(a, b) == giambelli(a, b));
    auto m6 = min_presentation(6);
    CHECK(m6.equivalent(schubert_to_ln(3, 3), P("l^2*v^2 - v^3")));
    CHECK(m6.normal_form(schubert_to_ln(3, 3)) == m6.normal_form(P("v^3")));
    // The point class σ_{3,3} is a generator of the top degree.
    CHECK(m6.smith_invariants(6).rank == 1);
    CHECK_THROWS_AS(schubert_to_ln(2, 3), AlgebraError);
    CHECK(expand_schubert(P("s{1,0}^2 - s{1,1}")) == P("v"));
}

TEST_CASE("table entries with Schubert coordinates agree") {
    auto m6 = min_presentation(6);
    int checked = 0;
    for (const auto& e : default_class_table().entries()) {
        if (!e.schubert) continue;
        CHECK_MESSAGE(m6.equivalent(expand_schubert(*e.schubert), e.value), to_string(e.kind), " ", e.value.to_string());
        ++checked;
    }
    CHECK(checked >= 8);
}

TEST_CASE("tacnode and triple-point classes are multiples of nodal classes") {
    const auto& t = default_class_table();
    for (int m = 2; m <= 6; ++m) {
        auto m_ring = min_presentation(m);
        for (const auto& s : enumerate_partitions(m)) {
            if (s.length() < 2 || !has_min_class(MinKind::nod, m, s) || !has_min_class(MinKind::ell, m, s)) continue;
            IntPolynomial factor = s.length() == 2 ? P("2*l") : P("l");
            CHECK_MESSAGE(m_ring.equivalent(min_class(MinKind::ell, m, s), factor * min_class(MinKind::nod, m, s)), s.to_string());
        }
    }
    CHECK(min_class(MinKind::ell, 1, SetPartition::discrete(1), t) == P("24*l^2"));
    CHECK(min_class(MinKind::nod, 2, SetPartition::discrete(2), t) == P("12*l^2"));
}

TEST_CASE("cusp classes are 24 λ² for every m") {
    for (int m = 1; m <= 6; ++m) CHECK(min_class(MinKind::ell, m, SetPartition::indiscrete(m)) == P("24*l^2"));
}

TEST_CASE("nodal table spot checks") {
    CHECK(min_class(MinKind::nod, 3, SetPartition::parse("1 2|3", 3)) == P("6*l^2"));
    CHECK(min_class(MinKind::nod, 4, SetPartition::parse("1 2|3 4", 4)) == P("2*l^2"));
    CHECK(min_class(MinKind::nod, 5, SetPartition::parse("1 2|3 4|5", 5)) == P("l^3"));
}

TEST_CASE("lookups") {
    CHECK(has_min_class(MinKind::ell, 6, SetPartition::parse("1 2 3 4|5 6", 6)));
    CHECK_FALSE(has_min_class(MinKind::ell, 6, SetPartition::discrete(6)));
    CHECK_THROWS_AS(min_class(MinKind::ell, 6, SetPartition::discrete(6)), AlgebraError);
    CHECK_THROWS_AS(min_class(MinKind::ell, 5, SetPartition::discrete(4)), AlgebraError);
    CHECK(to_stratum_symbols(P("l*v + t{1,2}")) == P("ls*vs + t{1,2}"));
}

TEST_CASE("class table json round trip") {
    auto t = ClassTable::from_json(embedded_min_classes_json());
    CHECK(t.entries().size() == default_class_table().entries().size());
    CHECK_THROWS(ClassTable::from_json("{\"format\": \"other\"}"));
}
