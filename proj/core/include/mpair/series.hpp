#pragma once

#include <string>
#include <vector>

#include "mpair/symfn.hpp"

namespace mpair {

// A symmetric function divided by a power of e1: numerator / e1^k, the
// localization needed by 1/Q(T).  Kept normalized: when e1_power > 0
// the numerator is not divisible by e1.  The numerator is stored in the
// e basis, where e1-divisibility is a property of the support.
class LocSymFn {
  public:
    LocSymFn() : num_(Basis::E), e1_power_(0) {}
    LocSymFn(SymFn numerator, int e1_power);

    static LocSymFn from(const SymFn& f) { return LocSymFn(f.to_basis(Basis::E), 0); }
    static LocSymFn constant(const Rational& c) { return LocSymFn(SymFn::constant(Basis::E, c), 0); }

    const SymFn& numerator() const { return num_; }
    int e1_power() const { return e1_power_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return e1_power_ == 0; }

    // The underlying symmetric function; requires integrality.
    SymFn to_symfn() const;
    SymFn to_symfn(Basis basis) const { return to_symfn().to_basis(basis); }

    LocSymFn operator+(const LocSymFn& o) const;
    LocSymFn operator-(const LocSymFn& o) const;
    LocSymFn operator*(const LocSymFn& o) const;
    LocSymFn operator*(const Rational& c) const;
    LocSymFn operator-() const;
    bool operator==(const LocSymFn& o) const;
    bool operator!=(const LocSymFn& o) const { return !(*this == o); }

    // Multiplicative inverse; requires the numerator to be a single
    // term c * e1^m.
    LocSymFn inverse() const;

    std::string to_string() const;

  private:
    SymFn num_;      // basis E
    int e1_power_;   // minimal once normalized
    void normalize();
};

// Truncated formal power series in T with LocSymFn coefficients.
// Coefficients are kept for T^0 .. T^(trunc-1); arithmetic never reads
// beyond the truncation order.
class SymSeries {
  public:
    explicit SymSeries(int trunc);

    static SymSeries one(int trunc);
    static SymSeries zero(int trunc) { return SymSeries(trunc); }

    int trunc() const { return static_cast<int>(coeffs_.size()); }
    const LocSymFn& coeff(int n) const;
    // Extraction with an integrality demand; throws
    // NonIntegralCoefficient when the coefficient still carries e1
    // denominators.
    SymFn coeff_integral(int n, Basis basis = Basis::M) const;
    void set_coeff(int n, LocSymFn c);

    // True when coefficients 0..k all have e1_power == 0.
    bool integral_through(int k) const;

    SymSeries operator+(const SymSeries& o) const;
    SymSeries operator-(const SymSeries& o) const;
    // Cauchy product; requires equal truncation.
    SymSeries operator*(const SymSeries& o) const;
    SymSeries operator*(const Rational& c) const;
    bool operator==(const SymSeries& o) const;

    // b with (*this) * b = 1 through the truncation.  Requires an
    // invertible constant term (a unit rational times a power of e1).
    SymSeries reciprocal() const;

    // Integer powers; negative exponents go through the reciprocal.
    SymSeries pow(int n) const;

    // Drop coefficient terms whose symmetric-function degree (of the
    // numerator, net of the e1 power) exceeds cap.
    SymSeries pruned_to_degree(int cap) const;

  private:
    std::vector<LocSymFn> coeffs_;
};

enum class SeriesName { U, Q, R, P, E, u0, u1, u2 };

SeriesName parse_series_name(const std::string& s);

// The named generating series with exact coefficients:
//   U  = sum m_(2^n,1) (-T)^n            Q  = sum e_(2n+1) T^n
//   R  = sum (-1)^n m_(2^n) T^n          E  = sum e_(2n) T^n
//   P  = sum (-1)^n (2 m_(2^n,1,1) + (n+1)^2 m_(2^(n+1))) T^n
//   u0 = prod(1 - T x^2) expanded        u1 = sum p_(2n+1) T^n
//   u2 = sum p_(2n+2) T^n
// u0 is built independently of R (through the power-sum logarithm), so
// the identity R = u0 is a genuine cross-check.
SymSeries named_series(SeriesName name, int trunc);

}  // namespace mpair
