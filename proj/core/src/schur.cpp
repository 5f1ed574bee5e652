#include "mpair/schur.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "mpair/series.hpp"

namespace mpair {

SkewShape::SkewShape(Partition outer_, Partition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
    if (inner.length() > outer.length())
        throw Error("inner partition longer than outer: " + to_string());
    for (int i = 0; i < inner.length(); ++i) {
        if (inner.part(i) > outer.part(i))
            throw Error("inner partition not contained in outer: " + to_string());
    }
}

Partition staircase(int n, int m) {
    if (n < 0 || m < 0) throw Error("staircase indices must be nonnegative");
    std::vector<int> parts;
    for (int i = 0; i < m; ++i) parts.push_back(n);
    for (int v = n - 1; v >= 1; --v) parts.push_back(v);
    return Partition(std::move(parts));
}

namespace {

// Determinant of a matrix of one-generator entries (e_k or h_k), by
// expansion along rows with memoized column-subset minors.  Entries
// with k < 0 are zero and k = 0 is the unit.
SymFn generator_determinant(const std::vector<std::vector<int>>& sub, Basis basis) {
    size_t n = sub.size();
    if (n == 0) return SymFn::one(basis);
    if (n > 63) throw Error("determinant too large");
    std::vector<SymFn> memo(size_t(1) << n, SymFn(basis));
    std::vector<bool> known(size_t(1) << n, false);
    // mask = set of columns still unused; row index = n - popcount(mask)
    std::function<const SymFn&(uint64_t)> minor = [&](uint64_t mask) -> const SymFn& {
        if (known[mask]) return memo[mask];
        known[mask] = true;
        size_t row = n - static_cast<size_t>(__builtin_popcountll(mask));
        if (row == n) {
            memo[mask] = SymFn::one(basis);
            return memo[mask];
        }
        SymFn acc(basis);
        int sign = 1;
        for (size_t j = 0; j < n; ++j) {
            if (!(mask & (uint64_t(1) << j))) continue;
            int k = sub[row][j];
            if (k >= 0) {
                SymFn entry = (k == 0) ? SymFn::one(basis)
                              : SymFn::term(basis, Partition::single(k), 1);
                acc += entry * minor(mask & ~(uint64_t(1) << j)) * Rational(sign);
            }
            sign = -sign;
        }
        memo[mask] = std::move(acc);
        return memo[mask];
    };
    return minor((uint64_t(1) << n) - 1);
}

}  // namespace

SymFn skew_schur(const SkewShape& shape, JacobiTrudi route) {
    if (shape.size() == 0) return SymFn::one(Basis::M);
    if (route == JacobiTrudi::HDeterminant) {
        // s_{lambda/mu} = det(h_{lambda_i - mu_j - i + j})
        int n = shape.outer.length();
        std::vector<std::vector<int>> sub(static_cast<size_t>(n),
                                          std::vector<int>(static_cast<size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                sub[i][j] = shape.outer.part(i) - shape.inner.part(j) - i + j;
        return generator_determinant(sub, Basis::H).to_basis(Basis::M);
    }
    // dual route on the conjugate shape, in the e generators
    SkewShape conj = shape.conjugate();
    int n = conj.outer.length();
    std::vector<std::vector<int>> sub(static_cast<size_t>(n),
                                      std::vector<int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            sub[i][j] = conj.outer.part(i) - conj.inner.part(j) - i + j;
    return generator_determinant(sub, Basis::E).to_basis(Basis::M);
}

namespace {

struct SsytCounter {
    int rows = 0;
    std::vector<int> lo, hi;       // cells of row r span columns [lo[r], hi[r])
    std::vector<int> counts;       // remaining content per value (1-based)
    std::vector<std::vector<int>> fill;
    Int total = 0;

    void run(int r, int c) {
        while (r < rows && c >= hi[r]) {
            ++r;
            c = r < rows ? lo[r] : 0;
        }
        if (r == rows) {
            total += 1;
            return;
        }
        int minv = 1;
        if (c > lo[r]) minv = std::max(minv, fill[r][c - 1]);              // row weakly increasing
        if (r > 0 && c >= lo[r - 1] && c < hi[r - 1])
            minv = std::max(minv, fill[r - 1][c] + 1);                     // column strictly increasing
        for (int v = minv; v <= static_cast<int>(counts.size()) - 1; ++v) {
            if (counts[v] == 0) continue;
            --counts[v];
            fill[r][c] = v;
            run(r, c + 1);
            ++counts[v];
        }
    }
};

}  // namespace

Int kostka_ssyt(const SkewShape& shape, const Partition& type) {
    if (type.size() != shape.size())
        throw Error("kostka_ssyt: |type| = " + std::to_string(type.size()) +
                    " does not match |shape| = " + std::to_string(shape.size()));
    if (shape.size() == 0) return 1;
    SsytCounter counter;
    counter.rows = shape.outer.length();
    for (int r = 0; r < counter.rows; ++r) {
        counter.lo.push_back(shape.inner.part(r));
        counter.hi.push_back(shape.outer.part(r));
        counter.fill.emplace_back(static_cast<size_t>(shape.outer.part(r)), 0);
    }
    counter.counts.assign(static_cast<size_t>(type.length()) + 1, 0);
    for (int v = 1; v <= type.length(); ++v)
        counter.counts[static_cast<size_t>(v)] = type.part(v - 1);
    counter.run(0, counter.rows ? counter.lo[0] : 0);
    return counter.total;
}

StaircaseIdentityWitness q_reciprocal_identity(int n) {
    if (n < 0) throw Error("order must be nonnegative");
    StaircaseIdentityWitness w;
    Rational sign = (n % 2 == 0) ? 1 : -1;

    SymSeries qinv = named_series(SeriesName::Q, n + 1).reciprocal();
    LocSymFn qn = qinv.coeff(n);
    if (qn.e1_power() > n + 1) throw Error("internal: 1/Q localization bound violated");
    SymFn e1n = SymFn::e(1).pow(static_cast<unsigned>(n + 1 - qn.e1_power()));
    w.q_lhs = (qn.numerator() * e1n).to_basis(Basis::M);
    w.q_rhs = skew_schur(SkewShape(staircase(n, 3), staircase(n, 0))) * sign;
    w.q_ok = (w.q_lhs == w.q_rhs);

    SymSeries einv = named_series(SeriesName::E, n + 1).reciprocal();
    w.e_lhs = einv.coeff_integral(n);
    w.e_rhs = skew_schur(SkewShape(staircase(n, 2), staircase(n, 0))) * sign;
    w.e_ok = (w.e_lhs == w.e_rhs);
    return w;
}

}  // namespace mpair
