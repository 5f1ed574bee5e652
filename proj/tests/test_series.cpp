#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpair/series.hpp"
#include "mpair/specialize.hpp"
#include "oracle.hpp"

using namespace mpair;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

SymFn m_of(std::initializer_list<int> parts) { return SymFn::m(P(parts)); }

}  // namespace

TEST_CASE("localized coefficients normalize") {
    LocSymFn a(SymFn::e(1) * SymFn::e(2), 2);  // e1 e2 / e1^2 = e2 / e1
    CHECK(a.e1_power() == 1);
    CHECK(a.numerator() == SymFn::e(2));
    CHECK(!a.is_integral());
    CHECK_THROWS_AS(a.to_symfn(), NonIntegralCoefficient);

    LocSymFn b(SymFn::e(1) * SymFn::e(1), 1);
    CHECK(b.e1_power() == 0);
    CHECK(b.to_symfn() == SymFn::e(1));

    // embedding of plain symmetric functions is lossless
    SymFn f = oracle::random_symfn(Basis::E, 6);
    CHECK(LocSymFn::from(f).to_symfn() == f);
}

TEST_CASE("named series coefficients") {
    SymSeries q = named_series(SeriesName::Q, 3);
    CHECK(q.coeff_integral(0, Basis::E) == SymFn::e(1));
    CHECK(q.coeff_integral(1, Basis::E) == SymFn::e(3));
    CHECK(q.coeff_integral(2, Basis::E) == SymFn::e(5));

    SymSeries u = named_series(SeriesName::U, 3);
    CHECK(u.coeff_integral(1) == -m_of({2, 1}));

    // P at T^0 is 2 m_(1,1) + m_(2), which equals e_1^2
    SymSeries p = named_series(SeriesName::P, 2);
    SymFn p0 = p.coeff_integral(0);
    CHECK(p0 == m_of({1, 1}) * Rational(2) + m_of({2}));
    CHECK(p0 == mono_mul(SymFn::e(1).to_basis(Basis::M), SymFn::e(1).to_basis(Basis::M)));

    SymSeries e = named_series(SeriesName::E, 3);
    CHECK(e.coeff_integral(0) == SymFn::one(Basis::M));
    CHECK(e.coeff_integral(2, Basis::E) == SymFn::e(4));

    SymSeries r = named_series(SeriesName::R, 3);
    CHECK(r.coeff_integral(0) == SymFn::one(Basis::M));
    CHECK(r.coeff_integral(2) == m_of({2, 2}));

    CHECK_THROWS_AS(parse_series_name("nope"), UnknownSeries);
}

TEST_CASE("series multiplication") {
    SymSeries q = named_series(SeriesName::Q, 5);
    SymSeries qinv = q.reciprocal();
    CHECK(q * qinv == SymSeries::one(5));

    SymSeries u = named_series(SeriesName::U, 5);
    CHECK(SymSeries::one(5) * u == u);

    SymSeries a(3), b(4);
    CHECK_THROWS(a * b);  // truncation mismatch
}

TEST_CASE("reciprocal of the odd-elementary series") {
    SymSeries qinv = named_series(SeriesName::Q, 3).reciprocal();
    const LocSymFn& c0 = qinv.coeff(0);
    CHECK(c0.e1_power() == 1);
    CHECK(c0.numerator() == SymFn::one(Basis::E));
    const LocSymFn& c1 = qinv.coeff(1);
    CHECK(c1.e1_power() == 2);
    CHECK(c1.numerator() == -SymFn::e(3));

    CHECK(SymSeries::one(4).reciprocal() == SymSeries::one(4));

    // constant term e2 is not invertible in the localized ring
    SymSeries bad(3);
    bad.set_coeff(0, LocSymFn(SymFn::e(2), 0));
    CHECK_THROWS_AS(bad.reciprocal(), NonInvertibleConstantTerm);
}

TEST_CASE("1/Q coefficient at order two is the staircase skew expansion") {
    SymSeries qinv = named_series(SeriesName::Q, 3).reciprocal();
    const LocSymFn& c2 = qinv.coeff(2);
    CHECK(c2.e1_power() == 3);
    SymFn num = c2.numerator().to_basis(Basis::M);
    SymFn want = m_of({2, 2, 2}) + m_of({2, 2, 1, 1}) * Rational(2) +
                 m_of({2, 1, 1, 1, 1}) * Rational(5) + m_of({1, 1, 1, 1, 1, 1}) * Rational(14);
    CHECK(num == want);
}

TEST_CASE("power series identities among the named series") {
    // R and the squared-variable product agree
    CHECK(named_series(SeriesName::R, 8) == named_series(SeriesName::u0, 8));

    // u0 u1 = U
    int N = 6;
    CHECK(named_series(SeriesName::u0, N) * named_series(SeriesName::u1, N) ==
          named_series(SeriesName::U, N));

    // u0 (u1^2 - T u2^2) = P
    SymSeries u1 = named_series(SeriesName::u1, N);
    SymSeries u2 = named_series(SeriesName::u2, N);
    SymSeries shift(N);  // multiplication by T
    for (int n = 1; n < N; ++n) shift.set_coeff(n, (u2 * u2).coeff(n - 1));
    SymSeries lhs = named_series(SeriesName::u0, N) * (u1 * u1 - shift);
    CHECK(lhs == named_series(SeriesName::P, N));
}

TEST_CASE("integrality of the main extraction") {
    for (int g = 1; g <= 6; ++g) {
        SymSeries expr = named_series(SeriesName::U, g).pow(g) *
                         named_series(SeriesName::Q, g).reciprocal();
        CHECK(expr.integral_through(g - 1));
    }
    // the localization bound for 1/Q
    SymSeries qinv = named_series(SeriesName::Q, 6).reciprocal();
    for (int n = 0; n <= 5; ++n) CHECK(qinv.coeff(n).e1_power() <= n + 1);
}

TEST_CASE("coefficient extraction for the genus-two pairing polynomial") {
    SymSeries expr = named_series(SeriesName::U, 2).pow(2) *
                     named_series(SeriesName::Q, 2).reciprocal();
    SymFn c = expr.coeff_integral(1);
    CHECK(c == -(m_of({1, 1, 1}) + m_of({2, 1}) * Rational(2)));
}

TEST_CASE("coefficient errors") {
    SymSeries q = named_series(SeriesName::Q, 3);
    CHECK_THROWS_AS(q.coeff(3), OrderBeyondTruncation);
    CHECK_THROWS_AS(q.reciprocal().coeff_integral(1), NonIntegralCoefficient);
}

TEST_CASE("ev2 commutes with series multiplication") {
    int N = 4;
    SymSeries u = named_series(SeriesName::U, N);
    SymSeries q = named_series(SeriesName::Q, N);
    SymSeries uq = u * q;
    for (int n = 0; n < N; ++n) {
        SpecValue direct = specialize_ev2(uq.coeff_integral(n));
        SpecValue split;
        for (int i = 0; i <= n; ++i) {
            split = split + specialize_ev2(u.coeff_integral(i)) *
                                specialize_ev2(q.coeff_integral(n - i));
        }
        CHECK(direct == split);
    }
}

TEST_CASE("degree pruning drops only out-of-budget terms") {
    SymSeries q = named_series(SeriesName::Q, 4);
    SymSeries pruned = q.pruned_to_degree(3);
    CHECK(pruned.coeff_integral(0, Basis::E) == SymFn::e(1));
    CHECK(pruned.coeff_integral(1, Basis::E) == SymFn::e(3));
    CHECK(pruned.coeff(2).is_zero());  // e5 has degree 5 > 3
}
