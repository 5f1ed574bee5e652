#pragma once

#include <map>
#include <string>

#include "mpair/partition.hpp"
#include "mpair/rational.hpp"

namespace mpair {

// Storage bases for symmetric functions.  In basis M a partition key
// denotes the monomial symmetric function m_lambda; in E and H a key
// denotes the product e_lambda (resp. h_lambda) of the free generators.
enum class Basis { M, E, H };

std::string basis_name(Basis b);
Basis parse_basis(const std::string& s);

// A finitely supported symmetric function with exact rational
// coefficients, tagged with its basis.  Zero coefficients are never
// stored.  Values are immutable in spirit: every operation returns a
// fresh SymFn, so sharing across threads is safe.
class SymFn {
  public:
    using TermMap = std::map<Partition, Rational, CanonicalLess>;

    explicit SymFn(Basis basis = Basis::M) : basis_(basis) {}

    static SymFn zero(Basis basis) { return SymFn(basis); }
    static SymFn constant(Basis basis, const Rational& c);
    static SymFn one(Basis basis) { return constant(basis, 1); }
    static SymFn term(Basis basis, const Partition& key, const Rational& c);

    // e_n / h_n / m_lambda conveniences.
    static SymFn e(int n) { return term(Basis::E, Partition::rectangle(n, 1), 1); }
    static SymFn h(int n) { return term(Basis::H, Partition::rectangle(n, 1), 1); }
    static SymFn m(const Partition& lam) { return term(Basis::M, lam, 1); }

    Basis basis() const { return basis_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    Rational coeff(const Partition& key) const;
    void set_coeff(const Partition& key, const Rational& c);
    void add_term(const Partition& key, const Rational& c);

    // Max |lambda| over the support; 0 for the zero function.
    int degree() const;
    bool is_homogeneous(int* deg = nullptr) const;
    SymFn homogeneous_part(int deg) const;

    SymFn operator-() const;
    SymFn operator+(const SymFn& o) const;
    SymFn operator-(const SymFn& o) const;
    SymFn operator*(const SymFn& o) const;
    SymFn operator*(const Rational& c) const;
    SymFn& operator+=(const SymFn& o);
    SymFn& operator*=(const Rational& c);
    bool operator==(const SymFn& o) const { return basis_ == o.basis_ && terms_ == o.terms_; }
    bool operator!=(const SymFn& o) const { return !(*this == o); }

    SymFn pow(unsigned n) const;

    // Same symmetric function expressed in the target basis.
    SymFn to_basis(Basis target) const;

    // Drop every term of degree > cap.
    SymFn truncated_to_degree(int cap) const;

    std::string to_string() const;

  private:
    Basis basis_;
    TermMap terms_;
};

inline SymFn operator*(const Rational& c, const SymFn& f) { return f * c; }

// Product of two monomial symmetric functions, via the m-basis
// structure constants (memoized per argument pair).
SymFn mono_mul(const SymFn& a, const SymFn& b);

// g with e1 * g = f, for f in basis E.  Throws NotDivisible when f has
// a term not containing e1.
SymFn divide_by_e1(const SymFn& f);

// True when every term of f (basis E) contains a factor of e1.
bool divisible_by_e1(const SymFn& f);

}  // namespace mpair
