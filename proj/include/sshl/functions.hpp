#pragma once

#include "sshl/numeric.hpp"
#include "sshl/partition.hpp"

#include <vector>

namespace sshl {

// One-row weights; nonzero only when inner ≺ outer.
// First definition: columns scanned from the largest part down to 1.
Q f_one_row(const Partition& inner, const Partition& outer, const Q& x, const Params& p);
Q g_one_row(const Partition& inner, const Partition& outer, const Q& y, const Params& p);

// Second definition: column 0 carries x^l0, then columns 1..C left to right.
Q f_one_row_def2(const Partition& inner, const Partition& outer, const Q& x, const Params& p);
Q g_one_row_def2(const Partition& inner, const Partition& outer, const Q& y, const Params& p);

// Sum over chains inner = nu^0 ≺ nu^1 ≺ ... ≺ nu^n = outer; xs[0] acts on the top step.
Q f_skew(const Partition& inner, const Partition& outer, const std::vector<Q>& xs,
         const Params& p);
Q g_skew(const Partition& inner, const Partition& outer, const std::vector<Q>& ys,
         const Params& p);

// b_el(tau) g_{kappa/tau}(x) with tau = even_core(kappa).
Q G(const Partition& kappa, const Q& x, const Params& p);

} // namespace sshl
