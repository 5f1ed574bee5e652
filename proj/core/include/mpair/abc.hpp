#pragma once

#include <array>
#include <map>
#include <string>

#include "mpair/rational.hpp"

namespace mpair {

// Exact-rational polynomial in the graded generators alpha (degree 2),
// beta (degree 4), gamma (degree 6).  Keys are exponent triples
// (i, j, k) for alpha^i beta^j gamma^k.
class AbcPoly {
  public:
    using Key = std::array<int, 3>;

    AbcPoly() = default;
    static AbcPoly constant(const Rational& c) { return monomial(0, 0, 0, c); }
    static AbcPoly monomial(int a, int b, int g, const Rational& c);
    static AbcPoly alpha() { return monomial(1, 0, 0, 1); }
    static AbcPoly beta() { return monomial(0, 1, 0, 1); }
    static AbcPoly gamma() { return monomial(0, 0, 1, 1); }
    // gamma* = 2 gamma + alpha beta
    static AbcPoly gamma_star();

    const std::map<Key, Rational>& terms() const { return terms_; }
    Rational coeff(int a, int b, int g) const;
    void add_term(int a, int b, int g, const Rational& c);
    bool is_zero() const { return terms_.empty(); }

    static int monomial_degree(const Key& k) { return 2 * k[0] + 4 * k[1] + 6 * k[2]; }
    // Graded degree when homogeneous; throws otherwise.
    int degree() const;
    bool is_homogeneous() const;

    AbcPoly operator+(const AbcPoly& o) const;
    AbcPoly operator-(const AbcPoly& o) const;
    AbcPoly operator*(const AbcPoly& o) const;
    AbcPoly operator*(const Rational& c) const;
    AbcPoly pow(unsigned n) const;
    bool operator==(const AbcPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const AbcPoly& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    std::map<Key, Rational> terms_;
};

}  // namespace mpair
