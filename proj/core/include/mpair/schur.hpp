#pragma once

#include "mpair/partition.hpp"
#include "mpair/rational.hpp"
#include "mpair/symfn.hpp"

namespace mpair {

// A skew shape lambda/mu with mu_i <= lambda_i (mu padded with zeros).
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition outer_, Partition inner_);
    int size() const { return outer.size() - inner.size(); }
    SkewShape conjugate() const { return SkewShape(outer.conjugate(), inner.conjugate()); }
    std::string to_string() const { return outer.to_string() + "/" + inner.to_string(); }
};

// The staircase-with-plateau partition lambda(n, m) =
// (n, ..., n, n-1, n-2, ..., 2, 1) with n appearing m times; lambda(n, 0)
// is the bare staircase (n-1, ..., 1).
Partition staircase(int n, int m);

enum class JacobiTrudi { EDeterminant, HDeterminant };

// The skew Schur function s_{lambda/mu} as a determinant in the
// elementary (via conjugate shapes) or complete symmetric functions,
// expanded into the m basis.  The empty shape gives 1.
SymFn skew_schur(const SkewShape& shape, JacobiTrudi route = JacobiTrudi::EDeterminant);

// Number of semistandard skew tableaux of the given shape and content:
// rows weakly increase, columns strictly increase, exactly type_i cells
// hold the entry i.  Counted by backtracking; requires |type| == |shape|.
Int kostka_ssyt(const SkewShape& shape, const Partition& type);

// Verification of the staircase reciprocal identities at order n:
//   e1^(n+1) * [T^n] (1/Q) = (-1)^n s_{lambda(n,3)/lambda(n,0)}
//          [T^n] (1/E)     = (-1)^n s_{lambda(n,2)/lambda(n,0)}
// Both sides are returned so a failure carries its witness.
struct StaircaseIdentityWitness {
    bool q_ok = false;
    bool e_ok = false;
    SymFn q_lhs, q_rhs;
    SymFn e_lhs, e_rhs;
    bool ok() const { return q_ok && e_ok; }
};

StaircaseIdentityWitness q_reciprocal_identity(int n);

}  // namespace mpair
