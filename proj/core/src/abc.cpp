#include "mpair/abc.hpp"

#include <sstream>

#include "mpair/errors.hpp"

namespace mpair {

AbcPoly AbcPoly::monomial(int a, int b, int g, const Rational& c) {
    AbcPoly p;
    p.add_term(a, b, g, c);
    return p;
}

AbcPoly AbcPoly::gamma_star() {
    AbcPoly p = gamma() * Rational(2);
    p.add_term(1, 1, 0, 1);
    return p;
}

Rational AbcPoly::coeff(int a, int b, int g) const {
    auto it = terms_.find(Key{a, b, g});
    return it == terms_.end() ? Rational(0) : it->second;
}

void AbcPoly::add_term(int a, int b, int g, const Rational& c) {
    if (c == 0) return;
    if (a < 0 || b < 0 || g < 0) throw Error("negative exponent in alpha/beta/gamma monomial");
    Key k{a, b, g};
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int AbcPoly::degree() const {
    if (terms_.empty()) return 0;
    int d = monomial_degree(terms_.begin()->first);
    for (const auto& [k, c] : terms_) {
        if (monomial_degree(k) != d) throw Error("degree of an inhomogeneous polynomial");
    }
    return d;
}

bool AbcPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = monomial_degree(terms_.begin()->first);
    for (const auto& [k, c] : terms_) {
        if (monomial_degree(k) != d) return false;
    }
    return true;
}

AbcPoly AbcPoly::operator+(const AbcPoly& o) const {
    AbcPoly out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k[0], k[1], k[2], c);
    return out;
}

AbcPoly AbcPoly::operator-(const AbcPoly& o) const {
    AbcPoly out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k[0], k[1], k[2], -c);
    return out;
}

AbcPoly AbcPoly::operator*(const AbcPoly& o) const {
    AbcPoly out;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            out.add_term(ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ca * cb);
    return out;
}

AbcPoly AbcPoly::operator*(const Rational& c) const {
    AbcPoly out;
    for (const auto& [k, v] : terms_) out.add_term(k[0], k[1], k[2], v * c);
    return out;
}

AbcPoly AbcPoly::pow(unsigned n) const {
    AbcPoly acc = AbcPoly::constant(1);
    AbcPoly base = *this;
    while (n) {
        if (n & 1u) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

std::string AbcPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    const char* names[3] = {"a", "b", "g"};
    for (const auto& [k, c] : terms_) {
        Rational v = c;
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        bool has_var = k[0] || k[1] || k[2];
        if (v != 1 || !has_var) os << mpair::to_string(v);
        bool need_star = (v != 1) && has_var;
        for (int i = 0; i < 3; ++i) {
            if (!k[i]) continue;
            if (need_star) os << "*";
            os << names[i];
            if (k[static_cast<size_t>(i)] > 1) os << "^" << k[static_cast<size_t>(i)];
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

}  // namespace mpair
