#include "mpair/series.hpp"

#include <sstream>

namespace mpair {

LocSymFn::LocSymFn(SymFn numerator, int e1_power)
    : num_(std::move(numerator)), e1_power_(e1_power) {
    if (num_.basis() != Basis::E) num_ = num_.to_basis(Basis::E);
    if (e1_power_ < 0) throw Error("negative e1 power");
    normalize();
}

void LocSymFn::normalize() {
    if (num_.is_zero()) {
        e1_power_ = 0;
        return;
    }
    while (e1_power_ > 0 && divisible_by_e1(num_)) {
        num_ = divide_by_e1(num_);
        --e1_power_;
    }
}

SymFn LocSymFn::to_symfn() const {
    if (!is_integral())
        throw NonIntegralCoefficient("coefficient carries 1/e1^" + std::to_string(e1_power_));
    return num_;
}

LocSymFn LocSymFn::operator+(const LocSymFn& o) const {
    int k = std::max(e1_power_, o.e1_power_);
    SymFn e1 = SymFn::e(1);
    SymFn a = num_;
    for (int i = e1_power_; i < k; ++i) a = a * e1;
    SymFn b = o.num_;
    for (int i = o.e1_power_; i < k; ++i) b = b * e1;
    return LocSymFn(a + b, k);
}

LocSymFn LocSymFn::operator-(const LocSymFn& o) const { return *this + (-o); }

LocSymFn LocSymFn::operator-() const { return LocSymFn(-num_, e1_power_); }

LocSymFn LocSymFn::operator*(const LocSymFn& o) const {
    return LocSymFn(num_ * o.num_, e1_power_ + o.e1_power_);
}

LocSymFn LocSymFn::operator*(const Rational& c) const { return LocSymFn(num_ * c, e1_power_); }

bool LocSymFn::operator==(const LocSymFn& o) const {
    return e1_power_ == o.e1_power_ && num_ == o.num_;
}

LocSymFn LocSymFn::inverse() const {
    if (num_.term_count() != 1)
        throw NonInvertibleConstantTerm("constant term is not a unit times a power of e1: " +
                                        to_string());
    const auto& [key, c] = *num_.terms().begin();
    int m = key.length();
    if (key.multiplicity(1) != m)
        throw NonInvertibleConstantTerm("constant term is not a unit times a power of e1: " +
                                        to_string());
    // (c e1^m / e1^p)^-1 = e1^(p-m) / c
    int net = m - e1_power_;
    Rational inv = make_rational(Int(1), Int(1)) / c;
    if (net >= 0) return LocSymFn(SymFn::constant(Basis::E, inv), net);
    return LocSymFn(SymFn::term(Basis::E, Partition::rectangle(1, -net), inv), 0);
}

std::string LocSymFn::to_string() const {
    if (e1_power_ == 0) return num_.to_string();
    std::ostringstream os;
    os << "(" << num_.to_string() << ")/e1^" << e1_power_;
    return os.str();
}

SymSeries::SymSeries(int trunc) {
    if (trunc < 1) throw Error("series truncation must be positive");
    coeffs_.assign(static_cast<size_t>(trunc), LocSymFn());
}

SymSeries SymSeries::one(int trunc) {
    SymSeries s(trunc);
    s.coeffs_[0] = LocSymFn::constant(1);
    return s;
}

const LocSymFn& SymSeries::coeff(int n) const {
    if (n < 0 || n >= trunc())
        throw OrderBeyondTruncation("coefficient " + std::to_string(n) +
                                    " beyond truncation " + std::to_string(trunc()));
    return coeffs_[static_cast<size_t>(n)];
}

SymFn SymSeries::coeff_integral(int n, Basis basis) const {
    return coeff(n).to_symfn().to_basis(basis);
}

void SymSeries::set_coeff(int n, LocSymFn c) {
    if (n < 0 || n >= trunc())
        throw OrderBeyondTruncation("coefficient " + std::to_string(n) +
                                    " beyond truncation " + std::to_string(trunc()));
    coeffs_[static_cast<size_t>(n)] = std::move(c);
}

bool SymSeries::integral_through(int k) const {
    for (int n = 0; n <= k && n < trunc(); ++n) {
        if (!coeffs_[static_cast<size_t>(n)].is_integral()) return false;
    }
    return true;
}

SymSeries SymSeries::operator+(const SymSeries& o) const {
    if (trunc() != o.trunc()) throw Error("series truncation mismatch");
    SymSeries out(trunc());
    for (int n = 0; n < trunc(); ++n) out.coeffs_[n] = coeffs_[n] + o.coeffs_[n];
    return out;
}

SymSeries SymSeries::operator-(const SymSeries& o) const {
    if (trunc() != o.trunc()) throw Error("series truncation mismatch");
    SymSeries out(trunc());
    for (int n = 0; n < trunc(); ++n) out.coeffs_[n] = coeffs_[n] - o.coeffs_[n];
    return out;
}

SymSeries SymSeries::operator*(const SymSeries& o) const {
    if (trunc() != o.trunc()) throw Error("series truncation mismatch");
    SymSeries out(trunc());
    for (int n = 0; n < trunc(); ++n) {
        LocSymFn acc;
        for (int i = 0; i <= n; ++i) {
            if (coeffs_[i].is_zero() || o.coeffs_[n - i].is_zero()) continue;
            acc = acc + coeffs_[i] * o.coeffs_[n - i];
        }
        out.coeffs_[n] = std::move(acc);
    }
    return out;
}

SymSeries SymSeries::operator*(const Rational& c) const {
    SymSeries out(trunc());
    for (int n = 0; n < trunc(); ++n) out.coeffs_[n] = coeffs_[n] * c;
    return out;
}

bool SymSeries::operator==(const SymSeries& o) const {
    if (trunc() != o.trunc()) return false;
    for (int n = 0; n < trunc(); ++n) {
        if (!(coeffs_[n] == o.coeffs_[n])) return false;
    }
    return true;
}

SymSeries SymSeries::reciprocal() const {
    SymSeries out(trunc());
    LocSymFn b0 = coeffs_[0].inverse();
    out.coeffs_[0] = b0;
    for (int n = 1; n < trunc(); ++n) {
        LocSymFn acc;
        for (int i = 1; i <= n; ++i) {
            if (coeffs_[i].is_zero()) continue;
            acc = acc + coeffs_[i] * out.coeffs_[n - i];
        }
        out.coeffs_[n] = -(b0 * acc);
    }
    return out;
}

SymSeries SymSeries::pow(int n) const {
    if (n < 0) return reciprocal().pow(-n);
    SymSeries acc = SymSeries::one(trunc());
    SymSeries base = *this;
    unsigned e = static_cast<unsigned>(n);
    while (e) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

SymSeries SymSeries::pruned_to_degree(int cap) const {
    SymSeries out(trunc());
    for (int n = 0; n < trunc(); ++n) {
        const LocSymFn& c = coeffs_[n];
        out.coeffs_[n] =
            LocSymFn(c.numerator().truncated_to_degree(cap + c.e1_power()), c.e1_power());
    }
    return out;
}

SeriesName parse_series_name(const std::string& s) {
    if (s == "U") return SeriesName::U;
    if (s == "Q") return SeriesName::Q;
    if (s == "R") return SeriesName::R;
    if (s == "P") return SeriesName::P;
    if (s == "E") return SeriesName::E;
    if (s == "u0") return SeriesName::u0;
    if (s == "u1") return SeriesName::u1;
    if (s == "u2") return SeriesName::u2;
    throw UnknownSeries("unknown series name: '" + s + "'");
}

namespace {

LocSymFn from_m(const SymFn& f) { return LocSymFn::from(f); }

SymFn m_key(std::vector<int> parts) { return SymFn::m(Partition(std::move(parts))); }

SymSeries build_u0(int trunc) {
    // u0 = prod(1 - T x^2) = exp(-sum_k p_(2k) T^k / k)
    SymSeries log_u0(trunc);
    for (int k = 1; k < trunc; ++k) {
        log_u0.set_coeff(k, from_m(SymFn::m(Partition::single(2 * k)) *
                                   make_rational(Int(-1), Int(k))));
    }
    SymSeries acc = SymSeries::one(trunc);
    SymSeries term = SymSeries::one(trunc);
    for (int j = 1; j < trunc; ++j) {
        term = term * log_u0;
        acc = acc + term * make_rational(Int(1), factorial(static_cast<unsigned>(j)));
    }
    return acc;
}

}  // namespace

SymSeries named_series(SeriesName name, int trunc) {
    SymSeries s(trunc);
    switch (name) {
        case SeriesName::U:
            for (int n = 0; n < trunc; ++n) {
                std::vector<int> parts(static_cast<size_t>(n), 2);
                parts.push_back(1);
                s.set_coeff(n, from_m(m_key(std::move(parts)) * Rational(n % 2 ? -1 : 1)));
            }
            return s;
        case SeriesName::Q:
            for (int n = 0; n < trunc; ++n)
                s.set_coeff(n, LocSymFn(SymFn::e(2 * n + 1), 0));
            return s;
        case SeriesName::R:
            for (int n = 0; n < trunc; ++n) {
                s.set_coeff(n, from_m(SymFn::m(Partition::rectangle(2, n)) *
                                      Rational(n % 2 ? -1 : 1)));
            }
            return s;
        case SeriesName::P:
            for (int n = 0; n < trunc; ++n) {
                std::vector<int> parts(static_cast<size_t>(n), 2);
                parts.push_back(1);
                parts.push_back(1);
                SymFn c = m_key(std::move(parts)) * Rational(2) +
                          SymFn::m(Partition::rectangle(2, n + 1)) *
                              Rational((n + 1) * (n + 1));
                s.set_coeff(n, from_m(c * Rational(n % 2 ? -1 : 1)));
            }
            return s;
        case SeriesName::E:
            for (int n = 0; n < trunc; ++n) {
                s.set_coeff(n, n == 0 ? LocSymFn::constant(1) : LocSymFn(SymFn::e(2 * n), 0));
            }
            return s;
        case SeriesName::u0:
            return build_u0(trunc);
        case SeriesName::u1:
            for (int n = 0; n < trunc; ++n)
                s.set_coeff(n, from_m(SymFn::m(Partition::single(2 * n + 1))));
            return s;
        case SeriesName::u2:
            for (int n = 0; n < trunc; ++n)
                s.set_coeff(n, from_m(SymFn::m(Partition::single(2 * n + 2))));
            return s;
    }
    throw UnknownSeries("unknown series");
}

}  // namespace mpair
