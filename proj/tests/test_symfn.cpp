#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpair/symfn.hpp"
#include "oracle.hpp"

using namespace mpair;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

SymFn M1(std::initializer_list<int> parts) { return SymFn::m(P(parts)); }

}  // namespace

TEST_CASE("mono_mul small closed forms") {
    // m_(1) * m_(1) = m_(2) + 2 m_(1,1)
    SymFn prod = mono_mul(M1({1}), M1({1}));
    CHECK(prod.coeff(P({2})) == 1);
    CHECK(prod.coeff(P({1, 1})) == 2);
    CHECK(prod.term_count() == 2);

    // p = q = 2 case of the hook products: C(4,2) and C(2,1)
    SymFn sq = mono_mul(M1({1, 1}), M1({1, 1}));
    CHECK(sq.coeff(P({1, 1, 1, 1})) == 6);
    CHECK(sq.coeff(P({2, 1, 1})) == 2);
    CHECK(sq.coeff(P({2, 2})) == 1);
    CHECK(sq.term_count() == 3);

    // identity
    CHECK(mono_mul(M1({2, 1}), SymFn::one(Basis::M)) == M1({2, 1}));

    CHECK_THROWS_AS(mono_mul(M1({1}), SymFn::e(1)), BasisMismatch);
}

TEST_CASE("mono_mul agrees with the dense expansion oracle") {
    // exhaustive over partition pairs of small total degree
    for (int a = 1; a <= 4; ++a) {
        for (int b = 1; b <= 4; ++b) {
            int nvars = a + b;
            for (const Partition& lam : partitions_of(a)) {
                for (const Partition& mu : partitions_of(b)) {
                    SymFn got = mono_mul(SymFn::m(lam), SymFn::m(mu));
                    oracle::Dense dense = oracle::dense_mul(oracle::expand_m(lam, nvars),
                                                            oracle::expand_m(mu, nvars));
                    CHECK_MESSAGE(got == oracle::collect_m(dense),
                                  lam.to_string(), " * ", mu.to_string());
                }
            }
        }
    }
    // random larger cases
    for (int trial = 0; trial < 12; ++trial) {
        SymFn f = oracle::random_symfn(Basis::M, 5);
        SymFn g = oracle::random_symfn(Basis::M, 5);
        int nvars = f.degree() + g.degree();
        if (nvars == 0) continue;
        SymFn got = mono_mul(f, g);
        oracle::Dense dense =
            oracle::dense_mul(oracle::expand(f, nvars), oracle::expand(g, nvars));
        CHECK(got == oracle::collect_m(dense));
    }
}

TEST_CASE("mono_mul is commutative and associative; degrees add") {
    for (int trial = 0; trial < 8; ++trial) {
        SymFn a = oracle::random_symfn(Basis::M, 4, 2);
        SymFn b = oracle::random_symfn(Basis::M, 3, 2);
        SymFn c = oracle::random_symfn(Basis::M, 2, 2);
        CHECK(mono_mul(a, b) == mono_mul(b, a));
        CHECK(mono_mul(mono_mul(a, b), c) == mono_mul(a, mono_mul(b, c)));
    }
    for (int da = 1; da <= 4; ++da) {
        for (int db = 1; db <= 4; ++db) {
            SymFn a = oracle::random_homogeneous(Basis::M, da);
            SymFn b = oracle::random_homogeneous(Basis::M, db);
            SymFn ab = mono_mul(a, b);
            if (!ab.is_zero()) {
                int deg = 0;
                CHECK(ab.is_homogeneous(&deg));
                CHECK(deg == da + db);
            }
        }
    }
}

TEST_CASE("to_basis closed forms") {
    CHECK(SymFn::e(2).to_basis(Basis::M) == M1({1, 1}));

    SymFn m2e = M1({2}).to_basis(Basis::E);
    CHECK(m2e.coeff(P({1, 1})) == 1);
    CHECK(m2e.coeff(P({2})) == -2);
    CHECK(m2e.term_count() == 2);

    SymFn m21e = M1({2, 1}).to_basis(Basis::E);
    CHECK(m21e.coeff(P({2, 1})) == 1);
    CHECK(m21e.coeff(P({3})) == -3);
    CHECK(m21e.term_count() == 2);
}

TEST_CASE("h_n expands as the sum of all m_lambda") {
    for (int n = 1; n <= 8; ++n) {
        SymFn h = SymFn::h(n).to_basis(Basis::M);
        auto all = partitions_of(n);
        CHECK(h.term_count() == static_cast<int>(all.size()));
        for (const Partition& lam : all) CHECK(h.coeff(lam) == 1);
    }
}

TEST_CASE("basis conversions round-trip") {
    for (int trial = 0; trial < 10; ++trial) {
        SymFn f = oracle::random_symfn(Basis::M, 12);
        CHECK(f.to_basis(Basis::E).to_basis(Basis::M) == f);
        CHECK(f.to_basis(Basis::H).to_basis(Basis::M) == f);
    }
    for (int trial = 0; trial < 10; ++trial) {
        SymFn f = oracle::random_symfn(Basis::E, 10);
        CHECK(f.to_basis(Basis::M).to_basis(Basis::E) == f);
        CHECK(f.to_basis(Basis::H).to_basis(Basis::E) == f);
        SymFn g = oracle::random_symfn(Basis::H, 10);
        CHECK(g.to_basis(Basis::M).to_basis(Basis::H) == g);
        CHECK(g.to_basis(Basis::E).to_basis(Basis::H) == g);
    }
}

TEST_CASE("conversions agree with the dense oracle") {
    for (int trial = 0; trial < 6; ++trial) {
        SymFn f = oracle::random_symfn(Basis::E, 6);
        int nvars = std::max(1, f.degree());
        CHECK(oracle::expand(f, nvars) == oracle::expand(f.to_basis(Basis::M), nvars));
        SymFn g = oracle::random_symfn(Basis::H, 6);
        nvars = std::max(1, g.degree());
        CHECK(oracle::expand(g, nvars) == oracle::expand(g.to_basis(Basis::M), nvars));
    }
}

TEST_CASE("divide_by_e1") {
    SymFn e1e2 = SymFn::e(1) * SymFn::e(2);
    CHECK(divide_by_e1(e1e2) == SymFn::e(2));
    CHECK_THROWS_AS(divide_by_e1(SymFn::e(2)), NotDivisible);

    SymFn f = SymFn::e(1) * SymFn::e(1) - SymFn::e(1) * SymFn::e(3);
    SymFn want = SymFn::e(1) - SymFn::e(3);
    CHECK(divide_by_e1(f) == want);

    for (int trial = 0; trial < 10; ++trial) {
        SymFn g = oracle::random_symfn(Basis::E, 8);
        SymFn multiplied = g * SymFn::e(1);
        CHECK(divide_by_e1(multiplied) == g);
        CHECK(multiplied == SymFn::e(1) * divide_by_e1(multiplied));
    }
}

TEST_CASE("printing") {
    SymFn f = M1({2, 1}) * Rational(-2) + M1({1, 1, 1});
    CHECK(f.to_string() == "-2*m[2,1] + m[1,1,1]");
    CHECK(SymFn::zero(Basis::M).to_string() == "0");
    CHECK(SymFn::one(Basis::E).to_string() == "1");
}
