#pragma once

#include "sshl/numeric.hpp"
#include "sshl/partition.hpp"
#include "sshl/random.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sshl {

struct zero_sector : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct scan_cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct inconsistent_heights : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Columns scanned past the largest input part before giving up.
inline constexpr int kScanCap = 10000;

// One column of the bulk identity. The f-partner row (weight M*_x) and the
// g-partner row (weight L_y) cross at R*_{xy}.
//   I: multiplicity of h in the f-partner; J: in the g-partner.
//   (i_prev, j_prev): g-row and f-row states entering from the left.
//   (k, l): g-row and f-row states leaving on the right.
// Column 0 is the sentinel column, where I, J and the middle occupancy are infinite.
struct ColumnContext {
    int h = 0;
    int I = 0;
    int J = 0;
    int i_prev = 1;
    int j_prev = 0;
    int k = 0;
    int l = 0;
};

// Before the swap: R* then the column, middle occupancy K = multiplicity in kappa.
// (k, l) here are the R* outputs entering the column. K is -1 at column 0.
struct AState {
    int K;
    int k;
    int l;
    bool operator==(const AState&) const = default;
};

// After the swap: the column then R*, middle occupancy M = multiplicity in nu.
// (i, j) are the column outputs entering R*. M is -1 at column 0.
struct BState {
    int M;
    int i;
    int j;
    bool operator==(const BState&) const = default;
};

template <class S>
struct StateTable {
    std::vector<S> states;
    Categorical dist;

    // Exact probability of `s`; 0 when absent.
    Q prob(const S& s) const;
};

// Caches per-column tables for fixed (x, y). Not thread-safe; use one per thread or per cell.
class ColumnKernel {
public:
    ColumnKernel(Q x, Q y, Params params);

    const Q& x() const { return x_; }
    const Q& y() const { return y_; }
    const Params& params() const { return params_; }

    std::vector<AState> a_candidates(const ColumnContext& c) const;
    std::vector<BState> b_candidates(const ColumnContext& c) const;
    Q weight_A(const ColumnContext& c, const AState& a) const;
    Q weight_B(const ColumnContext& c, const BState& b) const;

    // Independence coupling: p_fwd(a, b) is proportional to weight_B(b), p_bwd(b, a) to weight_A(a).
    // Throws zero_sector when every candidate weight vanishes.
    const StateTable<BState>& forward(const ColumnContext& c);
    const StateTable<AState>& backward(const ColumnContext& c);

    // Probability that a (1,1) state beyond every input part keeps travelling.
    Q continuation_probability();

private:
    static std::uint64_t key(const ColumnContext& c);

    Q x_;
    Q y_;
    Params params_;
    std::unordered_map<std::uint64_t, StateTable<BState>> fwd_;
    std::unordered_map<std::uint64_t, StateTable<AState>> bwd_;
};

// Forward bulk operator: kappa ≺ lambda, kappa ≺ mu; returns nu with lambda ≺ nu ≻ mu.
// lambda pairs with f(x), mu with g(y).
Partition bulk_forward(const Partition& kappa, const Partition& lambda, const Partition& mu,
                       ColumnKernel& kernel, RandomSource& rng);
// Backward bulk operator: lambda ≺ nu, mu ≺ nu; returns kappa.
Partition bulk_backward(const Partition& nu, const Partition& lambda, const Partition& mu,
                        ColumnKernel& kernel, RandomSource& rng);
// Boundary operators with lambda = even_cover(kappa), resp. even_core(nu).
Partition boundary_forward(const Partition& kappa, const Partition& mu, ColumnKernel& kernel,
                           RandomSource& rng);
Partition boundary_backward(const Partition& nu, const Partition& mu, ColumnKernel& kernel,
                            RandomSource& rng);

// Exact probabilities of one outcome, following its unique column trajectory.
Q bulk_forward_prob(const Partition& kappa, const Partition& lambda, const Partition& mu,
                    const Partition& nu, ColumnKernel& kernel);
Q bulk_backward_prob(const Partition& nu, const Partition& lambda, const Partition& mu,
                     const Partition& kappa, ColumnKernel& kernel);
Q boundary_forward_prob(const Partition& kappa, const Partition& mu, const Partition& nu,
                        ColumnKernel& kernel);
Q boundary_backward_prob(const Partition& nu, const Partition& mu, const Partition& kappa,
                         ColumnKernel& kernel);

// Total forward mass: outcomes with nu_1 <= C + extra, plus the exact geometric
// continuation of the outcomes with nu_1 = C + extra (C the largest input part, extra >= 1).
Q bulk_forward_mass(const Partition& kappa, const Partition& lambda, const Partition& mu,
                    int extra, ColumnKernel& kernel);
Q bulk_backward_mass(const Partition& nu, const Partition& lambda, const Partition& mu,
                     ColumnKernel& kernel);

enum class LengthKind { bulk, boundary };

// Law of l(nu) given input lengths, as listed in the length-evolution tables.
// Bulk: (l_kappa; l_lambda, l_mu). Boundary: (l_kappa; l_mu), l_lambda ignored.
struct LengthTable {
    std::vector<int> values;
    std::vector<Q> probs;
};
LengthTable length_transition(LengthKind kind, int l_kappa, int l_lambda, int l_mu, const Q& x,
                              const Q& y, const Params& p);
// The same law read off the column-0 forward table.
LengthTable column0_length_table(LengthKind kind, int l_kappa, int l_lambda, int l_mu,
                                 ColumnKernel& kernel);

} // namespace sshl
