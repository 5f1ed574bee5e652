#include "mpair/symfn.hpp"

#include <algorithm>
#include <cassert>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

namespace mpair {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::M: return "m";
        case Basis::E: return "e";
        case Basis::H: return "h";
    }
    return "?";
}

Basis parse_basis(const std::string& s) {
    if (s == "m" || s == "M") return Basis::M;
    if (s == "e" || s == "E") return Basis::E;
    if (s == "h" || s == "H") return Basis::H;
    throw ParseError("unknown basis: '" + s + "'");
}

SymFn SymFn::constant(Basis basis, const Rational& c) {
    SymFn f(basis);
    if (c != 0) f.terms_.emplace(Partition(), c);
    return f;
}

SymFn SymFn::term(Basis basis, const Partition& key, const Rational& c) {
    SymFn f(basis);
    if (c != 0) f.terms_.emplace(key, c);
    return f;
}

Rational SymFn::coeff(const Partition& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymFn::set_coeff(const Partition& key, const Rational& c) {
    if (c == 0) {
        terms_.erase(key);
    } else {
        terms_[key] = c;
    }
}

void SymFn::add_term(const Partition& key, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int SymFn::degree() const {
    int d = 0;
    for (const auto& [key, c] : terms_) d = std::max(d, key.size());
    return d;
}

bool SymFn::is_homogeneous(int* deg) const {
    if (terms_.empty()) {
        if (deg) *deg = 0;
        return true;
    }
    int d = terms_.begin()->first.size();
    for (const auto& [key, c] : terms_) {
        if (key.size() != d) return false;
    }
    if (deg) *deg = d;
    return true;
}

SymFn SymFn::homogeneous_part(int deg) const {
    SymFn out(basis_);
    for (const auto& [key, c] : terms_) {
        if (key.size() == deg) out.terms_.emplace(key, c);
    }
    return out;
}

SymFn SymFn::operator-() const {
    SymFn out(basis_);
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
    return out;
}

SymFn SymFn::operator+(const SymFn& o) const {
    if (basis_ != o.basis_)
        throw BasisMismatch("cannot add " + basis_name(basis_) + "-basis and " +
                            basis_name(o.basis_) + "-basis functions");
    SymFn out = *this;
    for (const auto& [key, c] : o.terms_) out.add_term(key, c);
    return out;
}

SymFn& SymFn::operator+=(const SymFn& o) {
    *this = *this + o;
    return *this;
}

SymFn SymFn::operator-(const SymFn& o) const { return *this + (-o); }

SymFn SymFn::operator*(const Rational& c) const {
    SymFn out(basis_);
    if (c == 0) return out;
    for (const auto& [key, k] : terms_) out.terms_.emplace(key, k * c);
    return out;
}

SymFn& SymFn::operator*=(const Rational& c) {
    *this = *this * c;
    return *this;
}

namespace {

// ---- m-basis structure constants -----------------------------------
//
// The coefficient of m_nu in m_lambda * m_mu is computed by counting
// alignments: partial matchings between the rows of lambda and the rows
// of mu, where matched rows add.  Rows are merged value-by-value; the
// count of labeled matchings realizing a given value pattern is a
// product of multinomials, and the labeled count is converted to the
// m-basis coefficient by the automorphism factors of the three
// partitions involved.

using TermMap = SymFn::TermMap;

Int automorphisms(const Partition& p) {
    Int a = 1;
    int i = 0;
    const auto& parts = p.parts();
    while (i < p.length()) {
        int j = i;
        while (j < p.length() && parts[static_cast<size_t>(j)] == parts[static_cast<size_t>(i)]) ++j;
        a *= factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    return a;
}

struct ValueCounts {
    std::vector<int> values;
    std::vector<int> counts;
};

ValueCounts value_counts(const Partition& p) {
    ValueCounts vc;
    int i = 0;
    const auto& parts = p.parts();
    while (i < p.length()) {
        int j = i;
        while (j < p.length() && parts[static_cast<size_t>(j)] == parts[static_cast<size_t>(i)]) ++j;
        vc.values.push_back(parts[static_cast<size_t>(i)]);
        vc.counts.push_back(j - i);
        i = j;
    }
    return vc;
}

struct AlignState {
    const ValueCounts* lam;
    const ValueCounts* mu;
    std::vector<int> lam_left;
    std::vector<int> mu_left;
    std::vector<std::pair<int, int>> merged;  // merged row values with counts
    Rational scale;                           // 1 / (aut(lam) * aut(mu))
    TermMap* out;
};

void align_rec(AlignState& st, size_t cell, Int ways) {
    size_t na = st.lam->values.size();
    size_t nb = st.mu->values.size();
    if (cell == na * nb) {
        std::vector<int> parts;
        for (size_t i = 0; i < na; ++i)
            for (int r = 0; r < st.lam_left[i]; ++r) parts.push_back(st.lam->values[i]);
        for (size_t j = 0; j < nb; ++j)
            for (int r = 0; r < st.mu_left[j]; ++r) parts.push_back(st.mu->values[j]);
        for (const auto& [v, c] : st.merged)
            for (int r = 0; r < c; ++r) parts.push_back(v);
        Partition nu(std::move(parts));
        Rational contrib = Rational(ways * automorphisms(nu)) * st.scale;
        auto [it, fresh] = st.out->emplace(nu, contrib);
        if (!fresh) it->second += contrib;
        return;
    }
    size_t i = cell / nb;
    size_t j = cell % nb;
    int cap = std::min(st.lam_left[i], st.mu_left[j]);
    // n rows of value lam[i] matched against rows of value mu[j]
    for (int n = 0; n <= cap; ++n) {
        Int w = ways;
        if (n > 0) {
            // ordered selections out of both remaining pools, times the
            // n! bijections between the two chosen sets, collapses to a
            // falling-factorial product divided once by n!.
            for (int t = 0; t < n; ++t)
                w *= Int(st.lam_left[i] - t) * Int(st.mu_left[j] - t);
            w /= factorial(static_cast<unsigned>(n));
            st.lam_left[i] -= n;
            st.mu_left[j] -= n;
            st.merged.emplace_back(st.lam->values[i] + st.mu->values[j], n);
        }
        align_rec(st, cell + 1, w);
        if (n > 0) {
            st.lam_left[i] += n;
            st.mu_left[j] += n;
            st.merged.pop_back();
        }
    }
}

bool pair_less(const Partition& a, const Partition& b) {
    if (a == b) return false;
    return a.canonical_before(b);
}

struct PartitionPairLess {
    bool operator()(const std::pair<Partition, Partition>& a,
                    const std::pair<Partition, Partition>& b) const {
        if (a.first != b.first) return a.first.canonical_before(b.first);
        return a.second.canonical_before(b.second);
    }
};

std::mutex g_mul_mm_mutex;
std::map<std::pair<Partition, Partition>, std::shared_ptr<const TermMap>, PartitionPairLess>*
    g_mul_mm_cache;

std::shared_ptr<const TermMap> mul_mm(const Partition& lam, const Partition& mu) {
    const Partition& first = pair_less(lam, mu) ? lam : mu;
    const Partition& second = pair_less(lam, mu) ? mu : lam;
    auto key = std::make_pair(first, second);
    {
        std::lock_guard<std::mutex> lock(g_mul_mm_mutex);
        if (!g_mul_mm_cache)
            g_mul_mm_cache = new std::remove_pointer_t<decltype(g_mul_mm_cache)>();
        auto it = g_mul_mm_cache->find(key);
        if (it != g_mul_mm_cache->end()) return it->second;
    }

    auto result = std::make_shared<TermMap>();
    ValueCounts vl = value_counts(first);
    ValueCounts vm = value_counts(second);
    AlignState st;
    st.lam = &vl;
    st.mu = &vm;
    st.lam_left = vl.counts;
    st.mu_left = vm.counts;
    st.scale = make_rational(Int(1), automorphisms(first) * automorphisms(second));
    st.out = result.get();
    align_rec(st, 0, 1);
    for (auto it = result->begin(); it != result->end();) {
        if (!is_integer(it->second))
            throw Error("internal: fractional m-basis structure constant");
        if (it->second == 0) {
            it = result->erase(it);
        } else {
            ++it;
        }
    }

    std::lock_guard<std::mutex> lock(g_mul_mm_mutex);
    auto [it, fresh] = g_mul_mm_cache->emplace(std::move(key), result);
    return it->second;
}

SymFn free_mul(const SymFn& a, const SymFn& b) {
    SymFn out(a.basis());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            out.add_term(ka.merged(kb), ca * cb);
        }
    }
    return out;
}

}  // namespace

SymFn mono_mul(const SymFn& a, const SymFn& b) {
    if (a.basis() != Basis::M || b.basis() != Basis::M)
        throw BasisMismatch("mono_mul requires both operands in the m basis");
    SymFn out(Basis::M);
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            const auto expansion = mul_mm(ka, kb);
            Rational s = ca * cb;
            for (const auto& [nu, c] : *expansion) out.add_term(nu, c * s);
        }
    }
    return out;
}

SymFn SymFn::operator*(const SymFn& o) const {
    if (basis_ != o.basis_)
        throw BasisMismatch("cannot multiply " + basis_name(basis_) + "-basis and " +
                            basis_name(o.basis_) + "-basis functions");
    if (basis_ == Basis::M) return mono_mul(*this, o);
    return free_mul(*this, o);
}

SymFn SymFn::pow(unsigned n) const {
    SymFn acc = SymFn::one(basis_);
    SymFn base = *this;
    while (n) {
        if (n & 1u) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

SymFn SymFn::truncated_to_degree(int cap) const {
    SymFn out(basis_);
    for (const auto& [key, c] : terms_) {
        if (key.size() <= cap) out.terms_.emplace(key, c);
    }
    return out;
}

// ---- basis conversions ----------------------------------------------

namespace {

template <typename K, typename V, typename Cmp = std::less<K>>
class Memo {
  public:
    template <typename F>
    V get(const K& key, F&& compute) {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        V value = compute();
        std::lock_guard<std::mutex> lock(mutex_);
        auto [it, fresh] = map_.emplace(key, std::move(value));
        return it->second;
    }

  private:
    std::mutex mutex_;
    std::map<K, V, Cmp> map_;
};

Memo<Partition, SymFn, CanonicalLess>& e_to_m_memo() {
    static auto* memo = new Memo<Partition, SymFn, CanonicalLess>();
    return *memo;
}
Memo<Partition, SymFn, CanonicalLess>& h_to_m_memo() {
    static auto* memo = new Memo<Partition, SymFn, CanonicalLess>();
    return *memo;
}
Memo<int, SymFn>& e_in_h_memo() {
    static auto* memo = new Memo<int, SymFn>();
    return *memo;
}
Memo<int, SymFn>& h_in_e_memo() {
    static auto* memo = new Memo<int, SymFn>();
    return *memo;
}

SymFn e_key_to_m(const Partition& lam);

SymFn e_key_to_m_compute(const Partition& lam) {
    if (lam.empty()) return SymFn::one(Basis::M);
    std::vector<int> tail(lam.parts().begin() + 1, lam.parts().end());
    SymFn rest = e_key_to_m(Partition(std::move(tail)));
    SymFn en = SymFn::m(Partition::rectangle(1, lam.parts().front()));
    return mono_mul(rest, en);
}

SymFn e_key_to_m(const Partition& lam) {
    return e_to_m_memo().get(lam, [&] { return e_key_to_m_compute(lam); });
}

SymFn h_key_to_m(const Partition& lam);

SymFn h_key_to_m_compute(const Partition& lam) {
    if (lam.empty()) return SymFn::one(Basis::M);
    std::vector<int> tail(lam.parts().begin() + 1, lam.parts().end());
    SymFn rest = h_key_to_m(Partition(std::move(tail)));
    // h_n is the sum of every m_lambda of degree n.
    SymFn hn(Basis::M);
    for (const Partition& p : partitions_of(lam.parts().front())) hn.add_term(p, 1);
    return mono_mul(rest, hn);
}

SymFn h_key_to_m(const Partition& lam) {
    return h_to_m_memo().get(lam, [&] { return h_key_to_m_compute(lam); });
}

// E(t)H(-t) = 1 gives the mutual recurrences between the families.
SymFn e_in_h(int n) {
    return e_in_h_memo().get(n, [&]() -> SymFn {
        if (n == 0) return SymFn::one(Basis::H);
        SymFn acc(Basis::H);
        for (int j = 1; j <= n; ++j) {
            SymFn t = SymFn::h(j) * e_in_h(n - j);
            acc += (j % 2 == 1) ? t : -t;
        }
        return acc;
    });
}

SymFn h_in_e(int n) {
    return h_in_e_memo().get(n, [&]() -> SymFn {
        if (n == 0) return SymFn::one(Basis::E);
        SymFn acc(Basis::E);
        for (int j = 1; j <= n; ++j) {
            SymFn t = SymFn::e(j) * h_in_e(n - j);
            acc += (j % 2 == 1) ? t : -t;
        }
        return acc;
    });
}

SymFn substitute_generators(const SymFn& f, Basis target, SymFn (*gen)(int)) {
    SymFn out(target);
    for (const auto& [key, c] : f.terms()) {
        SymFn prod = SymFn::one(target);
        for (int p : key.parts()) prod = prod * gen(p);
        out += prod * c;
    }
    return out;
}

SymFn expand_to_m(const SymFn& f) {
    SymFn out(Basis::M);
    for (const auto& [key, c] : f.terms()) {
        const SymFn& expansion =
            f.basis() == Basis::E ? e_key_to_m(key) : h_key_to_m(key);
        out += expansion * c;
    }
    return out;
}

// Inverts the unitriangular expansion e_{lambda'} = m_lambda + (terms
// strictly below lambda in dominance order) by repeatedly stripping a
// dominance-maximal element of the support.
SymFn m_to_e(const SymFn& f) {
    SymFn out(Basis::E);
    SymFn rem = f;
    size_t guard = 0;
    while (!rem.is_zero()) {
        if (++guard > 1000000) throw Error("m_to_e failed to terminate");
        const Partition* best = nullptr;
        int best_deg = -1;
        for (const auto& [key, c] : rem.terms()) {
            if (key.size() > best_deg) {
                best = &key;
                best_deg = key.size();
            }
        }
        // among the top-degree component, pick a dominance-maximal key
        for (const auto& [key, c] : rem.terms()) {
            if (key.size() == best_deg && key != *best && dominates(key, *best)) best = &key;
        }
        Partition lead = *best;
        Rational c = rem.coeff(lead);
        Partition ekey = lead.conjugate();
        out.add_term(ekey, c);
        rem = rem - e_key_to_m(ekey) * c;
        if (rem.coeff(lead) != 0) throw Error("internal: m-to-e elimination stalled");
    }
    return out;
}

}  // namespace

SymFn SymFn::to_basis(Basis target) const {
    if (target == basis_) return *this;
    switch (basis_) {
        case Basis::M:
            if (target == Basis::E) return m_to_e(*this);
            return substitute_generators(m_to_e(*this), Basis::H, e_in_h);
        case Basis::E:
            if (target == Basis::M) return expand_to_m(*this);
            return substitute_generators(*this, Basis::H, e_in_h);
        case Basis::H:
            if (target == Basis::M) return expand_to_m(*this);
            return substitute_generators(*this, Basis::E, h_in_e);
    }
    throw Error("unreachable basis conversion");
}

bool divisible_by_e1(const SymFn& f) {
    if (f.basis() != Basis::E) throw BasisMismatch("e1-divisibility is checked in the e basis");
    for (const auto& [key, c] : f.terms()) {
        if (key.multiplicity(1) == 0) return false;
    }
    return true;
}

SymFn divide_by_e1(const SymFn& f) {
    if (f.basis() != Basis::E) throw BasisMismatch("divide_by_e1 requires the e basis");
    SymFn out(Basis::E);
    for (const auto& [key, c] : f.terms()) {
        if (key.multiplicity(1) == 0)
            throw NotDivisible("not divisible by e1: term " + key.to_string() +
                               " survives at e1 = 0");
        std::vector<int> parts = key.parts();
        parts.erase(std::find(parts.begin(), parts.end(), 1));
        out.add_term(Partition(std::move(parts)), c);
    }
    return out;
}

std::string SymFn::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
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
        if (a != 1 || key.empty()) {
            os << mpair::to_string(a);
            if (!key.empty()) os << "*";
        }
        if (!key.empty()) os << basis_name(basis_) << key.to_string();
        first = false;
    }
    return os.str();
}

}  // namespace mpair
