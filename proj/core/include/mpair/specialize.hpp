#pragma once

#include <map>
#include <string>
#include <utility>

#include "mpair/rational.hpp"
#include "mpair/symfn.hpp"

namespace mpair {

// Exact bivariate polynomial in the formal symbols x and y; the image
// ring of the specializations (y is unused by ex and exbar).
class SpecValue {
  public:
    using Key = std::pair<int, int>;  // (x exponent, y exponent)

    SpecValue() = default;
    static SpecValue constant(const Rational& c);
    static SpecValue monomial(int xe, int ye, const Rational& c);

    const std::map<Key, Rational>& terms() const { return terms_; }
    Rational coeff(int xe, int ye) const;
    bool is_zero() const { return terms_.empty(); }
    void add_term(int xe, int ye, const Rational& c);

    SpecValue operator+(const SpecValue& o) const;
    SpecValue operator-(const SpecValue& o) const;
    SpecValue operator*(const SpecValue& o) const;
    SpecValue operator*(const Rational& c) const;
    SpecValue pow(unsigned n) const;
    bool operator==(const SpecValue& o) const { return terms_ == o.terms_; }
    bool operator!=(const SpecValue& o) const { return !(*this == o); }

    // Substitute x := v (partial evaluation); used for the ex == exbar
    // at x = 0 property.
    SpecValue eval_x(const Rational& v) const;

    std::string to_string() const;

  private:
    std::map<Key, Rational> terms_;
};

// The exponential specialization: m_(1^n) -> 1/n!, every other m to 0.
SpecValue specialize_ex(const SymFn& f);

// One tracked variable x plus ex on the rest:
//   m_(1^n)       -> x/(n-1)! + 1/n!
//   m_(k,1^(n-k)) -> x^k/(n-k)!        for k > 1
//   0 when two or more parts exceed 1.
SpecValue specialize_exbar(const SymFn& f);

// Evaluation at (x, y, 0, 0, ...).
SpecValue specialize_ev2(const SymFn& f);

}  // namespace mpair
