#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mpair/errors.hpp"

namespace mpair {

// An integer partition: parts strictly positive, sorted nonincreasing.
// The empty partition is valid and has size 0.
class Partition {
  public:
    Partition() = default;

    // Accepts parts in any order; sorts, rejects nonpositive entries.
    explicit Partition(std::vector<int> parts);

    static Partition single(int part) { return Partition(std::vector<int>{part}); }

    // k parts all equal to v; empty when k == 0.
    static Partition rectangle(int v, int k);

    // Parses both "[4,2,1,1]" (incl. "[]", "()") and exponent form
    // "4^1 2^1 1^2".  Exponent input in any part order is normalized.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }           // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < length() ? parts_[static_cast<size_t>(i)] : 0; }
    int multiplicity(int value) const;

    Partition conjugate() const;
    Partition with_part(int part) const;          // insert one part
    Partition merged(const Partition& other) const;
    // Partition with all parts equal to `value` removed.
    Partition without_value(int value) const;

    std::string to_string() const;                // "[4,2,1,1]", "[]"
    std::string exponent_form() const;            // "4^1 2^1 1^2", "1" for empty

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

    // Canonical order: descending lexicographic on parts (missing parts
    // count as 0).  This is the order used for every deterministic
    // listing and serialization in the engine.
    bool canonical_before(const Partition& o) const;

  private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct CanonicalLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return a.canonical_before(b);
    }
};

// a dominates b: equal size and prefix sums of a >= prefix sums of b.
bool dominates(const Partition& a, const Partition& b);

struct PartitionFilter {
    std::optional<int> max_part;
    std::optional<std::set<int>> parts_from;
};

// All partitions of n passing the filter, in canonical order.
std::vector<Partition> partitions_of(int n, const PartitionFilter& filter = {});

inline std::vector<Partition> partitions_of(int n, int max_part) {
    return partitions_of(n, PartitionFilter{max_part, std::nullopt});
}

}  // namespace mpair
