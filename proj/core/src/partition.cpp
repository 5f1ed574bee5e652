#include "mpair/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace mpair {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0) throw ParseError("partition parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::rectangle(int v, int k) {
    if (k < 0) throw ParseError("negative multiplicity in partition");
    if (k == 0) return Partition();
    return Partition(std::vector<int>(static_cast<size_t>(k), v));
}

int Partition::multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    if (parts_.empty()) return Partition();
    out.reserve(static_cast<size_t>(parts_[0]));
    for (int col = 1; col <= parts_[0]; ++col) {
        int rows = 0;
        for (int p : parts_) {
            if (p >= col) ++rows;
        }
        out.push_back(rows);
    }
    return Partition(std::move(out));
}

Partition Partition::with_part(int part) const {
    std::vector<int> out = parts_;
    out.push_back(part);
    return Partition(std::move(out));
}

Partition Partition::merged(const Partition& other) const {
    std::vector<int> out = parts_;
    out.insert(out.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(out));
}

Partition Partition::without_value(int value) const {
    std::vector<int> out;
    for (int p : parts_) {
        if (p != value) out.push_back(p);
    }
    return Partition(std::move(out));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

std::string Partition::exponent_form() const {
    if (parts_.empty()) return "1";
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < parts_.size()) {
        size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (!first) os << ' ';
        os << parts_[i] << '^' << (j - i);
        first = false;
        i = j;
    }
    return os.str();
}

bool Partition::canonical_before(const Partition& o) const {
    size_t n = std::max(parts_.size(), o.parts_.size());
    for (size_t i = 0; i < n; ++i) {
        int a = i < parts_.size() ? parts_[i] : 0;
        int b = i < o.parts_.size() ? o.parts_[i] : 0;
        if (a != b) return a > b;
    }
    return false;
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return false;
    long sa = 0, sb = 0;
    int n = std::max(a.length(), b.length());
    for (int i = 0; i < n; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb) return false;
    }
    return true;
}

namespace {

Partition parse_bracket_form(const std::string& text) {
    std::vector<int> parts;
    std::string inner = text.substr(1, text.size() - 2);
    std::istringstream is(inner);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t a = tok.find_first_not_of(" \t");
        if (a == std::string::npos) throw ParseError("bad partition: '" + text + "'");
        size_t b = tok.find_last_not_of(" \t");
        parts.push_back(std::stoi(tok.substr(a, b - a + 1)));
    }
    return Partition(std::move(parts));
}

Partition parse_exponent_form(const std::string& text) {
    std::vector<int> parts;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        size_t caret = tok.find('^');
        int value = 0, count = 1;
        try {
            if (caret == std::string::npos) {
                value = std::stoi(tok);
            } else {
                value = std::stoi(tok.substr(0, caret));
                count = std::stoi(tok.substr(caret + 1));
            }
        } catch (const std::exception&) {
            throw ParseError("bad partition token: '" + tok + "'");
        }
        if (count < 0) throw ParseError("negative multiplicity: '" + tok + "'");
        for (int i = 0; i < count; ++i) parts.push_back(value);
    }
    return Partition(std::move(parts));
}

}  // namespace

Partition Partition::parse(const std::string& text) {
    std::string t = text;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    if (t.empty() || t == "()" || t == "[]" || t == "1") return Partition();
    if (t.front() == '[' && t.back() == ']') return parse_bracket_form(t);
    if (t.front() == '(' && t.back() == ')') {
        // "(2,1)" tuple form or "(2^3 1^2)" exponent form in parens.
        std::string inner = t.substr(1, t.size() - 2);
        if (inner.find('^') != std::string::npos) return parse_exponent_form(inner);
        return parse_bracket_form("[" + inner + "]");
    }
    try {
        return parse_exponent_form(t);
    } catch (const ParseError&) {
        throw ParseError("bad partition: '" + text + "'");
    }
}

namespace {

void emit_partitions(int n, int max_part, const std::optional<std::set<int>>& allowed,
                     std::vector<int>& prefix, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        if (allowed && !allowed->count(p)) continue;
        prefix.push_back(p);
        emit_partitions(n - p, p, allowed, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, const PartitionFilter& filter) {
    if (n < 0) throw Error("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> prefix;
    int cap = filter.max_part.value_or(n);
    emit_partitions(n, std::max(cap, 0), filter.parts_from, prefix, out);
    return out;
}

}  // namespace mpair
