#pragma once

#include <set>
#include <string>
#include <vector>

#include "mpair/partition.hpp"
#include "mpair/rational.hpp"
#include "mpair/symfn.hpp"

namespace mpair {

// Parity of the multinomial (sum a_i)! / prod a_i!.  Odd exactly when
// the binary digits of the a_i are pairwise disjoint (Lucas).
int lucas_parity(const std::vector<unsigned long>& counts);

// The image of an integral m-basis symmetric function in the quotient
// by the ideal generated by 2 and every m_lambda with at least two
// parts exceeding 1.  Surviving keys all have the form (k, 1^p).
class IdealIReduced {
  public:
    IdealIReduced() = default;
    explicit IdealIReduced(std::set<Partition, CanonicalLess> support)
        : support_(std::move(support)) {}

    const std::set<Partition, CanonicalLess>& support() const { return support_; }
    bool is_zero() const { return support_.empty(); }
    SymFn to_symfn() const;  // coefficients all 1, basis M

    bool operator==(const IdealIReduced& o) const { return support_ == o.support_; }
    bool operator!=(const IdealIReduced& o) const { return !(*this == o); }

    std::string to_string() const { return to_symfn().to_string(); }

  private:
    std::set<Partition, CanonicalLess> support_;
};

// Reduction map; requires integer coefficients (basis M).
IdealIReduced reduce_mod_I(const SymFn& f);

// Product of representatives followed by reduction; well defined on
// the quotient.
IdealIReduced mod_I_mul(const IdealIReduced& a, const IdealIReduced& b);

// One cell of the mod-2 pairing table: the partitions lambda, all parts
// powers of two, for which alpha^(m_1) delta_(lambda#) pairs odd on
// N_(g - psi_pairs) (m_1 = number of 1s, lambda# = lambda without 1s).
// 2|lambda| + 6 psi_pairs = 6g - 6.  A psi_pairs with no odd partition
// other than the empty one models the "unit pairing on a point" cells.
struct ParityTableRow {
    int g = 0;
    int psi_pairs = 0;
    std::set<Partition, CanonicalLess> odd_partitions;

    bool operator==(const ParityTableRow& o) const {
        return g == o.g && psi_pairs == o.psi_pairs && odd_partitions == o.odd_partitions;
    }
};

ParityTableRow pgk_row(int g, int psi_pairs);

// Rows for 1 <= g <= g_max, psi_pairs = 0..g-1, guarded at g_max <= 8.
std::vector<ParityTableRow> table1(int g_max);

// Certificate for the mod-2 nilpotency degree of alpha on N_g: every
// completion pairing of alpha^g is even, while alpha^(g-1) delta_(2g-2)
// pairs odd.
struct AlphaNilpotencyCertificate {
    int g = 0;
    bool power_g_even = false;    // all checked completions even
    long completions_checked = 0;
    std::string odd_witness;      // monomial, e.g. "a^2 d[4]"
    Rational odd_witness_value;
    bool witness_odd = false;
    bool certified() const { return power_g_even && witness_odd; }
};

AlphaNilpotencyCertificate nilpotency_alpha(int g);

// Certificate for the mod-2 nilpotency degree of a_1 on M_g.  The even
// side only covers monomials reachable from the z-pairing formula and
// the genus-drop recursion (no mixed b2 monomials), and says so.
struct A1NilpotencyCertificate {
    int g = 0;
    bool power_2g_even_on_covered = false;
    long completions_checked = 0;
    std::string odd_witness;
    Rational odd_witness_value;
    bool witness_odd = false;
    // j with 2^(2g-1) z_1^j z_(4g-3-j) [M_g] odd; must be {2g-1, 2g-2}
    std::set<int> odd_window;
    bool window_matches = false;
    std::string coverage_note;
    bool certified() const { return power_2g_even_on_covered && witness_odd && window_matches; }
};

A1NilpotencyCertificate nilpotency_a1(int g);

}  // namespace mpair
