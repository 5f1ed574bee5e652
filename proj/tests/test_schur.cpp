#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpair/schur.hpp"
#include "mpair/series.hpp"
#include "oracle.hpp"

using namespace mpair;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

SymFn m_of(std::initializer_list<int> parts) { return SymFn::m(P(parts)); }

// every skew shape with |outer| <= cap, as (outer, inner) pairs
std::vector<SkewShape> small_shapes(int cap) {
    std::vector<SkewShape> shapes;
    for (int n = 0; n <= cap; ++n) {
        for (const Partition& outer : partitions_of(n)) {
            for (int m = 0; m <= n; ++m) {
                for (const Partition& inner : partitions_of(m)) {
                    bool contained = inner.length() <= outer.length();
                    for (int i = 0; contained && i < inner.length(); ++i)
                        contained = inner.part(i) <= outer.part(i);
                    if (contained) shapes.emplace_back(outer, inner);
                }
            }
        }
    }
    return shapes;
}

}  // namespace

TEST_CASE("staircase shapes") {
    CHECK(staircase(2, 3) == P({2, 2, 2, 1}));
    CHECK(staircase(2, 0) == P({1}));
    CHECK(staircase(3, 3) == P({3, 3, 3, 2, 1}));
    CHECK(staircase(3, 0) == P({2, 1}));
    CHECK(staircase(4, 0) == P({3, 2, 1}));
    CHECK(staircase(0, 0) == Partition());

    CHECK_THROWS(SkewShape(P({2, 1}), P({3})));  // inner not contained
}

TEST_CASE("single-column skew Schur functions are elementary") {
    for (int n = 1; n <= 6; ++n) {
        SymFn s = skew_schur(SkewShape(Partition::rectangle(1, n), Partition()));
        CHECK(s == SymFn::e(n).to_basis(Basis::M));
    }
    CHECK(skew_schur(SkewShape(Partition(), Partition())) == SymFn::one(Basis::M));
}

TEST_CASE("the order-two staircase expansion") {
    SymFn s = skew_schur(SkewShape(staircase(2, 3), staircase(2, 0)));
    SymFn want = m_of({2, 2, 2}) + m_of({2, 2, 1, 1}) * Rational(2) +
                 m_of({2, 1, 1, 1, 1}) * Rational(5) + m_of({1, 1, 1, 1, 1, 1}) * Rational(14);
    CHECK(s == want);
}

TEST_CASE("the order-three staircase coefficients 744 and 323") {
    SymFn s = skew_schur(SkewShape(staircase(3, 3), staircase(3, 0)));
    CHECK(s.coeff(P({1, 1, 1, 1, 1, 1, 1, 1, 1})) == 744);
    CHECK(s.coeff(P({2, 1, 1, 1, 1, 1, 1, 1})) == 323);
}

TEST_CASE("both determinant routes agree") {
    for (const SkewShape& shape : small_shapes(7)) {
        CHECK_MESSAGE(skew_schur(shape, JacobiTrudi::EDeterminant) ==
                          skew_schur(shape, JacobiTrudi::HDeterminant),
                      shape.to_string());
    }
    // a couple of larger shapes, including the staircases with |shape| = 9
    std::vector<SkewShape> big = {
        SkewShape(staircase(3, 3), staircase(3, 0)),
        SkewShape(P({4, 3, 2}), Partition()),
        SkewShape(P({5, 3, 1}), P({1})),
        SkewShape(P({4, 4, 1}), P({2})),
    };
    for (const SkewShape& shape : big) {
        CHECK(skew_schur(shape, JacobiTrudi::EDeterminant) ==
              skew_schur(shape, JacobiTrudi::HDeterminant));
    }
}

TEST_CASE("kostka examples") {
    SkewShape shape(staircase(2, 3), staircase(2, 0));
    CHECK(kostka_ssyt(shape, P({2, 2, 2})) == 1);
    CHECK(kostka_ssyt(shape, P({1, 1, 1, 1, 1, 1})) == 14);
    CHECK_THROWS(kostka_ssyt(shape, P({2, 2})));  // size mismatch
}

TEST_CASE("tableau counts match the m-basis coefficients") {
    for (const SkewShape& shape : small_shapes(6)) {
        SymFn s = skew_schur(shape);
        for (const Partition& type : partitions_of(shape.size())) {
            Rational got = s.coeff(type);
            CHECK_MESSAGE(got == Rational(kostka_ssyt(shape, type)),
                          shape.to_string(), " type ", type.to_string());
            CHECK(got >= 0);
        }
    }
    // the 9-cell staircase case as well
    SkewShape shape(staircase(3, 3), staircase(3, 0));
    SymFn s = skew_schur(shape);
    for (const Partition& type : partitions_of(9)) {
        CHECK(s.coeff(type) == Rational(kostka_ssyt(shape, type)));
    }
}

TEST_CASE("standard fillings count the all-ones coefficient") {
    for (const SkewShape& shape : small_shapes(6)) {
        if (shape.size() == 0) continue;
        SymFn s = skew_schur(shape);
        CHECK(s.coeff(Partition::rectangle(1, shape.size())) ==
              Rational(kostka_ssyt(shape, Partition::rectangle(1, shape.size()))));
    }
}

TEST_CASE("staircase reciprocal identities") {
    for (int n = 0; n <= 4; ++n) {
        StaircaseIdentityWitness w = q_reciprocal_identity(n);
        CHECK_MESSAGE(w.q_ok, "order ", n, ": ", w.q_lhs.to_string(), " vs ", w.q_rhs.to_string());
        CHECK_MESSAGE(w.e_ok, "order ", n, ": ", w.e_lhs.to_string(), " vs ", w.e_rhs.to_string());
    }
}

TEST_CASE("the even-elementary series against its skew expansion") {
    // E(T) * sum_n s_(staircase(n,2)/staircase(n,0)) (-T)^n = 1
    int N = 5;
    SymSeries e = named_series(SeriesName::E, N);
    SymSeries skew(N);
    for (int n = 0; n < N; ++n) {
        SymFn s = skew_schur(SkewShape(staircase(n, 2), staircase(n, 0)));
        skew.set_coeff(n, LocSymFn::from(s * Rational(n % 2 ? -1 : 1)));
    }
    CHECK(e * skew == SymSeries::one(N));
}
