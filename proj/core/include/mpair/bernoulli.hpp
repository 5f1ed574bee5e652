#pragma once

#include "mpair/rational.hpp"

namespace mpair {

// B_n in the convention with B_1 = -1/2, B_2 = 1/6, computed by the
// recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0 with B_0 = 1 and cached.
// Only even indices are consumed by the pairing formulas.
const Rational& bernoulli(int n);

}  // namespace mpair
