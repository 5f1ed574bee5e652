#include "mpair/specialize.hpp"

#include <sstream>

namespace mpair {

SpecValue SpecValue::constant(const Rational& c) { return monomial(0, 0, c); }

SpecValue SpecValue::monomial(int xe, int ye, const Rational& c) {
    SpecValue v;
    v.add_term(xe, ye, c);
    return v;
}

Rational SpecValue::coeff(int xe, int ye) const {
    auto it = terms_.find({xe, ye});
    return it == terms_.end() ? Rational(0) : it->second;
}

void SpecValue::add_term(int xe, int ye, const Rational& c) {
    if (c == 0) return;
    Key k{xe, ye};
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SpecValue SpecValue::operator+(const SpecValue& o) const {
    SpecValue out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k.first, k.second, c);
    return out;
}

SpecValue SpecValue::operator-(const SpecValue& o) const {
    SpecValue out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k.first, k.second, -c);
    return out;
}

SpecValue SpecValue::operator*(const SpecValue& o) const {
    SpecValue out;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

SpecValue SpecValue::operator*(const Rational& c) const {
    SpecValue out;
    for (const auto& [k, v] : terms_) out.add_term(k.first, k.second, v * c);
    return out;
}

SpecValue SpecValue::pow(unsigned n) const {
    SpecValue acc = SpecValue::constant(1);
    SpecValue base = *this;
    while (n) {
        if (n & 1u) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

SpecValue SpecValue::eval_x(const Rational& v) const {
    SpecValue out;
    for (const auto& [k, c] : terms_)
        out.add_term(0, k.second, c * rat_pow(v, static_cast<unsigned>(k.first)));
    return out;
}

std::string SpecValue::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool has_var = k.first > 0 || k.second > 0;
        if (a != 1 || !has_var) os << mpair::to_string(a);
        if (a != 1 && has_var) os << "*";
        if (k.first > 0) {
            os << "x";
            if (k.first > 1) os << "^" << k.first;
        }
        if (k.second > 0) {
            if (k.first > 0) os << "*";
            os << "y";
            if (k.second > 1) os << "^" << k.second;
        }
        first = false;
    }
    return os.str();
}

namespace {

// All three specializations act coefficientwise on the m basis.
template <typename PerMonomial>
SpecValue specialize_m(const SymFn& f, PerMonomial&& per) {
    SymFn g = f.to_basis(Basis::M);
    SpecValue out;
    for (const auto& [lam, c] : g.terms()) out = out + per(lam) * c;
    return out;
}

}  // namespace

SpecValue specialize_ex(const SymFn& f) {
    return specialize_m(f, [](const Partition& lam) -> SpecValue {
        int n = lam.size();
        if (lam.length() != lam.multiplicity(1)) return SpecValue();  // some part exceeds 1
        return SpecValue::constant(make_rational(Int(1), factorial(static_cast<unsigned>(n))));
    });
}

SpecValue specialize_exbar(const SymFn& f) {
    return specialize_m(f, [](const Partition& lam) -> SpecValue {
        int n = lam.size();
        if (lam.empty()) return SpecValue::constant(1);
        int big_parts = lam.length() - lam.multiplicity(1);
        if (big_parts >= 2) return SpecValue();
        if (big_parts == 0) {
            SpecValue v = SpecValue::monomial(
                1, 0, make_rational(Int(1), factorial(static_cast<unsigned>(n - 1))));
            v.add_term(0, 0, make_rational(Int(1), factorial(static_cast<unsigned>(n))));
            return v;
        }
        int k = lam.parts().front();
        return SpecValue::monomial(
            k, 0, make_rational(Int(1), factorial(static_cast<unsigned>(n - k))));
    });
}

SpecValue specialize_ev2(const SymFn& f) {
    return specialize_m(f, [](const Partition& lam) -> SpecValue {
        if (lam.length() >= 3) return SpecValue();
        if (lam.empty()) return SpecValue::constant(1);
        if (lam.length() == 1) {
            SpecValue v = SpecValue::monomial(lam.part(0), 0, 1);
            v.add_term(0, lam.part(0), 1);
            return v;
        }
        int a = lam.part(0), b = lam.part(1);
        SpecValue v = SpecValue::monomial(a, b, 1);
        if (a != b) v.add_term(b, a, 1);
        return v;
    });
}

}  // namespace mpair
