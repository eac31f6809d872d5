#pragma once

#include "sshl/numeric.hpp"
#include "sshl/partition.hpp"

#include <string>
#include <vector>

namespace sshl {

// Exact reports pass on equality. Truncated reports pass iff |lhs - rhs| <= tail_bound.
struct CheckReport {
    std::string name;
    std::string detail;
    bool truncated = false;
    Q lhs;
    Q rhs;
    Q tail_bound;
    bool passed = false;
    // "geometric" when the tail is an exact geometric series, "ratio" for a ratio-test estimate.
    std::string certificate;
};

CheckReport exact_report(std::string name, std::string detail, Q lhs, Q rhs);

// Boundary: (i1, i3) enter on the left, (j1, j3) leave on the right; row 1 carries M_y, row 3 L_x.
CheckReport check_intertwining(int I, int J, int i1, int i3, int j1, int j3, const Q& x,
                               const Q& y, const Params& p);
// Boundary: (i, j) enter on the left, (k, l) leave on the right; L_y row and M*_x row.
CheckReport check_intertwining_star(int I, int J, int i, int j, int k, int l, const Q& x,
                                    const Q& y, const Params& p);
// Dot flips the left input of L and the right output of M; both sides use one spectral value.
CheckReport check_reflection(int K, int j, int l, const Q& x, const Params& p);
// Row (i, j) of R sums to 1.
CheckReport check_stochasticity(int i, int j, const Q& x, const Q& y, const Params& p);
// Both definitions of the one-row f and g agree on (inner, outer).
CheckReport check_definitions(const Partition& inner, const Partition& outer, const Q& x,
                              const Params& p);

// b_el(even_cover k) f_{even_cover k / k}(x) = b_el(even_core k) g_{k / even_core k}(x).
CheckReport check_skew_littlewood_one(const Partition& kappa, const Q& x, const Params& p);
// Sum over conjugate-even lambda of b_el f_{lambda/mu}(xs) against the finite side;
// xs.size() == 1 is exact, larger sizes are truncated at lambda_1 <= cap.
CheckReport check_skew_littlewood(const Partition& mu, const std::vector<Q>& xs, int cap,
                                  const Params& p);

// 1 + sum_{k<=cap} f_(k)(x) g_(k)(y) against (1-qxy)/(1-xy).
CheckReport check_cauchy(const Q& x, const Q& y, int cap, const Params& p);
// Exact geometric resummation of the one-variable Cauchy sum and of its partial sums.
CheckReport check_cauchy_closed_form(const Q& x, const Q& y, int cap, const Params& p);

// sum_kappa g_{kappa/lambda}(ys) f_{kappa/mu}(xs) = Pi * sum_nu f_{lambda/nu}(xs) g_{mu/nu}(ys).
CheckReport check_skew_cauchy(const Partition& lambda, const Partition& mu,
                              const std::vector<Q>& xs, const std::vector<Q>& ys, int cap,
                              const Params& p);

// Uses p.u; xs and ys have equal size n.
CheckReport check_refined_cauchy(const std::vector<Q>& xs, const std::vector<Q>& ys, int cap,
                                 const Params& p);
// Uses p.u; xs has even size 2n.
CheckReport check_refined_littlewood(const std::vector<Q>& xs, int cap, const Params& p);

// Right-hand sides of the refined identities.
Q refined_cauchy_rhs(const std::vector<Q>& xs, const std::vector<Q>& ys, const Params& p);
Q refined_littlewood_rhs(const std::vector<Q>& xs, const Params& p);

// |s| r / (1 - |r|) with |r| < 1, the tail after a shell of absolute mass s.
Q geometric_tail(const Q& last_shell, const Q& ratio);

} // namespace sshl
