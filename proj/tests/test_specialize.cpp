#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpair/series.hpp"
#include "mpair/specialize.hpp"
#include "oracle.hpp"

using namespace mpair;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

SpecValue C(long num, long den = 1) { return SpecValue::constant(make_rational(num, den)); }

}  // namespace

TEST_CASE("ex on monomial symmetric functions") {
    CHECK(specialize_ex(SymFn::m(P({1, 1, 1}))) == C(1, 6));
    CHECK(specialize_ex(SymFn::m(P({2, 1}))).is_zero());
    CHECK(specialize_ex(SymFn::one(Basis::M)) == C(1));
    // e_n = m_(1^n), so ex(e_n) = 1/n!
    CHECK(specialize_ex(SymFn::e(5)) == C(1, 120));
}

TEST_CASE("ex of the odd-elementary series matches sinh(sqrt T)/sqrt T") {
    // coefficient of T^n is 1/(2n+1)!
    const long want[] = {1, 6, 120, 5040};
    SymSeries q = named_series(SeriesName::Q, 4);
    for (int n = 0; n < 4; ++n) {
        CHECK(specialize_ex(q.coeff_integral(n)) == C(1, want[n]));
    }
}

TEST_CASE("exbar on monomial symmetric functions") {
    // m_(1,1) -> x + 1/2
    SpecValue e2 = specialize_exbar(SymFn::e(2));
    SpecValue want = SpecValue::monomial(1, 0, 1) + C(1, 2);
    CHECK(e2 == want);

    // m_(2) -> x^2
    CHECK(specialize_exbar(SymFn::m(P({2}))) == SpecValue::monomial(2, 0, 1));
    // two parts above 1 die
    CHECK(specialize_exbar(SymFn::m(P({2, 2}))).is_zero());
    // m_(3,1,1) -> x^3 / 2!
    CHECK(specialize_exbar(SymFn::m(P({3, 1, 1}))) ==
          SpecValue::monomial(3, 0, make_rational(1, 2)));
}

TEST_CASE("exbar applied to the named series") {
    // U -> 1 + x - x^2 T
    SymSeries u = named_series(SeriesName::U, 3);
    SpecValue u0 = specialize_exbar(u.coeff_integral(0));
    CHECK(u0 == SpecValue::monomial(1, 0, 1) + C(1));
    SpecValue u1 = specialize_exbar(u.coeff_integral(1));
    CHECK(u1 == SpecValue::monomial(2, 0, -1));
    CHECK(specialize_exbar(u.coeff_integral(2)).is_zero());

    // P -> (1+x)^2 - x^2 T
    SymSeries p = named_series(SeriesName::P, 3);
    SpecValue p0 = specialize_exbar(p.coeff_integral(0));
    SpecValue onex = SpecValue::monomial(1, 0, 1) + C(1);
    CHECK(p0 == onex * onex);
    CHECK(specialize_exbar(p.coeff_integral(1)) == SpecValue::monomial(2, 0, -1));
    CHECK(specialize_exbar(p.coeff_integral(2)).is_zero());

    // R -> 1
    SymSeries r = named_series(SeriesName::R, 4);
    CHECK(specialize_exbar(r.coeff_integral(0)) == C(1));
    for (int n = 1; n < 4; ++n) CHECK(specialize_exbar(r.coeff_integral(n)).is_zero());
}

TEST_CASE("ev2 on monomial symmetric functions") {
    CHECK(specialize_ev2(SymFn::m(P({3, 3}))) == SpecValue::monomial(3, 3, 1));
    CHECK(specialize_ev2(SymFn::m(P({2, 1}))) ==
          SpecValue::monomial(2, 1, 1) + SpecValue::monomial(1, 2, 1));
    CHECK(specialize_ev2(SymFn::m(P({1, 1, 1}))).is_zero());
    CHECK(specialize_ev2(SymFn::m(P({4}))) ==
          SpecValue::monomial(4, 0, 1) + SpecValue::monomial(0, 4, 1));
}

TEST_CASE("ev2 applied to the named series") {
    // Q -> x + y at T^0, then 0 through the truncation
    SymSeries q = named_series(SeriesName::Q, 4);
    CHECK(specialize_ev2(q.coeff_integral(0)) ==
          SpecValue::monomial(1, 0, 1) + SpecValue::monomial(0, 1, 1));
    for (int n = 1; n < 4; ++n) CHECK(specialize_ev2(q.coeff_integral(n)).is_zero());

    // U -> x(1 - y^2 T) + y(1 - x^2 T)
    SymSeries u = named_series(SeriesName::U, 3);
    CHECK(specialize_ev2(u.coeff_integral(0)) ==
          SpecValue::monomial(1, 0, 1) + SpecValue::monomial(0, 1, 1));
    CHECK(specialize_ev2(u.coeff_integral(1)) ==
          SpecValue::monomial(1, 2, -1) + SpecValue::monomial(2, 1, -1));
    CHECK(specialize_ev2(u.coeff_integral(2)).is_zero());
}

TEST_CASE("specializations are ring homomorphisms") {
    for (int trial = 0; trial < 10; ++trial) {
        SymFn f = oracle::random_symfn(Basis::M, 4);
        SymFn g = oracle::random_symfn(Basis::M, 4);
        SymFn fg = f * g;
        CHECK(specialize_ex(fg) == specialize_ex(f) * specialize_ex(g));
        CHECK(specialize_exbar(fg) == specialize_exbar(f) * specialize_exbar(g));
        CHECK(specialize_ev2(fg) == specialize_ev2(f) * specialize_ev2(g));
    }
}

TEST_CASE("ex equals exbar at x = 0") {
    for (int trial = 0; trial < 10; ++trial) {
        SymFn f = oracle::random_symfn(Basis::M, 8);
        CHECK(specialize_exbar(f).eval_x(0) == specialize_ex(f));
    }
}

TEST_CASE("specializations act through any basis") {
    for (int trial = 0; trial < 6; ++trial) {
        SymFn f = oracle::random_symfn(Basis::E, 6);
        CHECK(specialize_ex(f) == specialize_ex(f.to_basis(Basis::M)));
        CHECK(specialize_ev2(f) == specialize_ev2(f.to_basis(Basis::H)));
    }
}
