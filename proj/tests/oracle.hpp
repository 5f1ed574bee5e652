// Test-side oracles, independent of the library's algebra paths: dense
// expansion of symmetric functions into explicit monomials in a fixed
// number of variables.  Deliberately naive.
#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "mpair/partition.hpp"
#include "mpair/rational.hpp"
#include "mpair/symfn.hpp"

namespace oracle {

using mpair::Int;
using mpair::Partition;
using mpair::Rational;
using mpair::SymFn;

// exponent vector (length nvars) -> coefficient
using Dense = std::map<std::vector<int>, Rational>;

inline Dense dense_add(const Dense& a, const Dense& b) {
    Dense out = a;
    for (const auto& [k, c] : b) {
        out[k] += c;
        if (out[k] == 0) out.erase(k);
    }
    return out;
}

inline Dense dense_scale(const Dense& a, const Rational& c) {
    Dense out;
    if (c == 0) return out;
    for (const auto& [k, v] : a) out.emplace(k, v * c);
    return out;
}

inline Dense dense_mul(const Dense& a, const Dense& b) {
    Dense out;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            std::vector<int> k(ka.size());
            for (size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
            out[k] += ca * cb;
            if (out[k] == 0) out.erase(k);
        }
    }
    return out;
}

// m_lambda expanded in nvars variables (all distinct monomials with the
// given exponent multiset).
inline Dense expand_m(const Partition& lam, int nvars) {
    Dense out;
    if (lam.length() > nvars) return out;
    std::vector<int> exps(static_cast<size_t>(nvars), 0);
    for (int i = 0; i < lam.length(); ++i) exps[static_cast<size_t>(i)] = lam.part(i);
    std::sort(exps.begin(), exps.end());
    do {
        out[exps] = 1;
    } while (std::next_permutation(exps.begin(), exps.end()));
    return out;
}

// e_n and h_n in nvars variables, built by the generating recurrences
// over one variable at a time (independent of the library's tables).
inline Dense expand_e(int n, int nvars) {
    // e_n(x_1..x_v) = e_n(x_1..x_(v-1)) + x_v e_(n-1)(x_1..x_(v-1))
    std::vector<Dense> e(static_cast<size_t>(n) + 1);
    std::vector<int> zero(static_cast<size_t>(nvars), 0);
    e[0].emplace(zero, 1);
    for (int v = 1; v <= nvars; ++v) {
        for (int d = std::min(n, v); d >= 1; --d) {
            Dense with_v;
            for (const auto& [k, c] : e[static_cast<size_t>(d - 1)]) {
                std::vector<int> kk = k;
                kk[static_cast<size_t>(v - 1)] += 1;
                with_v.emplace(std::move(kk), c);
            }
            e[static_cast<size_t>(d)] = dense_add(e[static_cast<size_t>(d)], with_v);
        }
    }
    return e[static_cast<size_t>(n)];
}

inline Dense expand_h(int n, int nvars) {
    // h over v variables: h_d(v) = h_d(v-1) + x_v h_(d-1)(v)
    std::vector<Dense> h(static_cast<size_t>(n) + 1);
    std::vector<int> zero(static_cast<size_t>(nvars), 0);
    h[0].emplace(zero, 1);
    for (int v = 1; v <= nvars; ++v) {
        for (int d = 1; d <= n; ++d) {
            Dense with_v;
            for (const auto& [k, c] : h[static_cast<size_t>(d - 1)]) {
                std::vector<int> kk = k;
                kk[static_cast<size_t>(v - 1)] += 1;
                with_v.emplace(std::move(kk), c);
            }
            h[static_cast<size_t>(d)] = dense_add(h[static_cast<size_t>(d)], with_v);
        }
    }
    return h[static_cast<size_t>(n)];
}

inline Dense expand(const SymFn& f, int nvars) {
    Dense out;
    for (const auto& [key, c] : f.terms()) {
        Dense term;
        if (f.basis() == mpair::Basis::M) {
            term = expand_m(key, nvars);
        } else {
            std::vector<int> zero(static_cast<size_t>(nvars), 0);
            term.emplace(zero, 1);
            for (int p : key.parts()) {
                term = dense_mul(term, f.basis() == mpair::Basis::E ? expand_e(p, nvars)
                                                                    : expand_h(p, nvars));
            }
        }
        out = dense_add(out, dense_scale(term, c));
    }
    return out;
}

// Recollects a dense symmetric polynomial into m-basis coefficients.
// For symmetric input every representative of an orbit carries the same
// coefficient, so overwriting per representative is harmless; requires
// nvars >= every partition length that can occur.
inline SymFn collect_m(const Dense& dense) {
    SymFn out(mpair::Basis::M);
    for (const auto& [k, c] : dense) {
        std::vector<int> parts;
        for (int e : k)
            if (e > 0) parts.push_back(e);
        out.set_coeff(Partition(parts), c);
    }
    return out;
}

inline std::mt19937& rng() {
    static std::mt19937 gen(20240817u);
    return gen;
}

inline Partition random_partition(int max_size) {
    std::uniform_int_distribution<int> size_dist(0, max_size);
    int n = size_dist(rng());
    auto all = mpair::partitions_of(n);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    return all[pick(rng())];
}

inline SymFn random_symfn(mpair::Basis basis, int max_deg, int max_terms = 4) {
    SymFn f(basis);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::uniform_int_distribution<int> den(1, 3);
    int t = nterms(rng());
    for (int i = 0; i < t; ++i) {
        Rational c = mpair::make_rational(coeff(rng()), den(rng()));
        f.add_term(random_partition(max_deg), c);
    }
    return f;
}

// Homogeneous variant (used where degrees must add).
inline SymFn random_homogeneous(mpair::Basis basis, int deg, int max_terms = 3) {
    SymFn f(basis);
    auto all = mpair::partitions_of(deg);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    int t = nterms(rng());
    for (int i = 0; i < t; ++i) f.add_term(all[pick(rng())], Rational(coeff(rng())));
    return f;
}

}  // namespace oracle
