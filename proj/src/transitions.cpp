#include "sshl/transitions.hpp"

#include "sshl/weights.hpp"

#include <algorithm>
#include <map>

namespace sshl {

template <class S>
Q StateTable<S>::prob(const S& s) const
{
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == s)
            return dist.prob(i);
    return 0;
}

template struct StateTable<AState>;
template struct StateTable<BState>;

namespace {

bool is_bit(int v) { return v == 0 || v == 1; }

Occ occ(const ColumnContext& c, int n) { return c.h == 0 ? Occ::infinite() : Occ(n); }

template <class S>
StateTable<S> make_table(std::vector<S> candidates, const std::vector<Q>& weights)
{
    StateTable<S> t;
    std::vector<Q> w;
    Q total = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (weights[i] == 0)
            continue;
        t.states.push_back(candidates[i]);
        w.push_back(weights[i]);
        total += weights[i];
    }
    if (total == 0)
        throw zero_sector("every candidate weight vanishes");
    for (Q& v : w)
        v /= total;
    t.dist = Categorical(std::move(w));
    return t;
}

// Column data of a triple kappa ≺ lambda, kappa ≺ mu along the A rows.
struct ARows {
    std::vector<int> mk, ml, mm;
    std::vector<int> k, l; // k[h], l[h]: states right of column h
};

ARows a_rows(const Partition& kappa, const Partition& lambda, const Partition& mu, int H)
{
    ARows r;
    r.mk = kappa.multiplicities(H);
    r.ml = lambda.multiplicities(H);
    r.mm = mu.multiplicities(H);
    r.k.assign(H + 1, 0);
    r.l.assign(H + 1, 0);
    r.k[0] = mu.length() - kappa.length();
    r.l[0] = lambda.length() - kappa.length();
    for (int h = 1; h <= H; ++h) {
        r.k[h] = r.mk[h] + r.k[h - 1] - r.mm[h];
        r.l[h] = r.mk[h] + r.l[h - 1] - r.ml[h];
    }
    return r;
}

// Column data of a triple lambda ≺ nu, mu ≺ nu along the B rows.
struct BRows {
    std::vector<int> mn, ml, mm;
    std::vector<int> i, j; // i[h], j[h]: states right of column h
};

BRows b_rows(const Partition& nu, const Partition& lambda, const Partition& mu, int H)
{
    BRows r;
    r.mn = nu.multiplicities(H);
    r.ml = lambda.multiplicities(H);
    r.mm = mu.multiplicities(H);
    r.i.assign(H + 1, 0);
    r.j.assign(H + 1, 0);
    r.i[0] = nu.length() - lambda.length();
    r.j[0] = nu.length() - mu.length();
    for (int h = 1; h <= H; ++h) {
        r.i[h] = r.ml[h] + r.i[h - 1] - r.mn[h];
        r.j[h] = r.mm[h] + r.j[h - 1] - r.mn[h];
    }
    return r;
}

int top_part(std::initializer_list<const Partition*> ps)
{
    int c = 0;
    for (const Partition* p : ps)
        c = std::max(c, p->first());
    return c;
}

} // namespace

ColumnKernel::ColumnKernel(Q x, Q y, Params params)
    : x_(std::move(x)), y_(std::move(y)), params_(std::move(params))
{
}

std::vector<AState> ColumnKernel::a_candidates(const ColumnContext& c) const
{
    std::vector<AState> out;
    if (c.h == 0) {
        for (int kp = 0; kp <= 1; ++kp)
            for (int lp = 0; lp <= 1; ++lp)
                out.push_back({-1, kp, lp});
        return out;
    }
    for (int kp = 0; kp <= 1; ++kp) {
        const int K = c.J + c.k - kp;
        if (K < 0)
            continue;
        const int lp = c.I + c.l - K;
        if (is_bit(lp))
            out.push_back({K, kp, lp});
    }
    return out;
}

std::vector<BState> ColumnKernel::b_candidates(const ColumnContext& c) const
{
    std::vector<BState> out;
    if (c.h == 0) {
        for (int i = 0; i <= 1; ++i)
            for (int j = 0; j <= 1; ++j)
                out.push_back({-1, i, j});
        return out;
    }
    for (int i = 0; i <= 1; ++i) {
        const int Mh = c.I + c.i_prev - i;
        if (Mh < 0)
            continue;
        const int j = c.J + c.j_prev - Mh;
        if (is_bit(j))
            out.push_back({Mh, i, j});
    }
    return out;
}

Q ColumnKernel::weight_A(const ColumnContext& c, const AState& a) const
{
    const Q r = Rstar(c.i_prev, c.j_prev, a.k, a.l, x_, y_, params_);
    if (r == 0)
        return 0;
    return r * L(occ(c, a.K), a.k, occ(c, c.J), c.k, y_, params_) *
           Mstar(occ(c, c.I), a.l, occ(c, a.K), c.l, x_, params_);
}

Q ColumnKernel::weight_B(const ColumnContext& c, const BState& b) const
{
    const Q r = Rstar(b.i, b.j, c.k, c.l, x_, y_, params_);
    if (r == 0)
        return 0;
    return L(occ(c, c.I), c.i_prev, occ(c, b.M), b.i, y_, params_) *
           Mstar(occ(c, b.M), c.j_prev, occ(c, c.J), b.j, x_, params_) * r;
}

std::uint64_t ColumnKernel::key(const ColumnContext& c)
{
    if (c.I < 0 || c.J < 0 || c.I >= (1 << 20) || c.J >= (1 << 20) || !is_bit(c.i_prev) ||
        !is_bit(c.j_prev) || !is_bit(c.k) || !is_bit(c.l))
        throw std::invalid_argument("column context out of range");
    std::uint64_t k = c.h == 0 ? 1u : 0u;
    k |= static_cast<std::uint64_t>(c.i_prev) << 1;
    k |= static_cast<std::uint64_t>(c.j_prev) << 2;
    k |= static_cast<std::uint64_t>(c.k) << 3;
    k |= static_cast<std::uint64_t>(c.l) << 4;
    k |= static_cast<std::uint64_t>(c.I) << 5;
    k |= static_cast<std::uint64_t>(c.J) << 25;
    return k;
}

const StateTable<BState>& ColumnKernel::forward(const ColumnContext& c)
{
    const auto k = key(c);
    auto it = fwd_.find(k);
    if (it != fwd_.end())
        return it->second;
    auto cand = b_candidates(c);
    std::vector<Q> w;
    for (const auto& b : cand)
        w.push_back(weight_B(c, b));
    return fwd_.emplace(k, make_table(std::move(cand), w)).first->second;
}

const StateTable<AState>& ColumnKernel::backward(const ColumnContext& c)
{
    const auto k = key(c);
    auto it = bwd_.find(k);
    if (it != bwd_.end())
        return it->second;
    auto cand = a_candidates(c);
    std::vector<Q> w;
    for (const auto& a : cand)
        w.push_back(weight_A(c, a));
    return bwd_.emplace(k, make_table(std::move(cand), w)).first->second;
}

Q ColumnKernel::continuation_probability()
{
    const ColumnContext c{1, 0, 0, 1, 1, 0, 0};
    return forward(c).prob(BState{0, 1, 1});
}

Partition bulk_forward(const Partition& kappa, const Partition& lambda, const Partition& mu,
                       ColumnKernel& kernel, RandomSource& rng)
{
    if (!interlaces(kappa, lambda) || !interlaces(kappa, mu))
        throw std::invalid_argument("bulk_forward needs kappa ≺ lambda and kappa ≺ mu");
    if (!admissible(kernel.x(), kernel.y(), kernel.params()))
        throw not_admissible("bulk_forward: spectral pair outside the admissible range");
    const int C = top_part({&kappa, &lambda, &mu});
    const ARows a = a_rows(kappa, lambda, mu, C);

    ColumnContext c{0, 0, 0, 1, 0, a.k[0], a.l[0]};
    const auto& t0 = kernel.forward(c);
    BState b = t0.states[t0.dist.sample(rng)];
    std::vector<int> mn{0};
    for (int h = 1;; ++h) {
        if (h > C + kScanCap)
            throw scan_cap_exceeded("bulk_forward: column scan did not terminate");
        const bool inside = h <= C;
        c = {h, inside ? a.ml[h] : 0, inside ? a.mm[h] : 0, b.i, b.j,
             inside ? a.k[h] : 0, inside ? a.l[h] : 0};
        const auto& t = kernel.forward(c);
        b = t.states[t.dist.sample(rng)];
        mn.push_back(b.M);
        if (h >= C && b.i == 0 && b.j == 0)
            break;
    }
    return Partition::from_multiplicities(mn);
}

Q bulk_forward_prob(const Partition& kappa, const Partition& lambda, const Partition& mu,
                    const Partition& nu, ColumnKernel& kernel)
{
    if (!interlaces(kappa, lambda) || !interlaces(kappa, mu))
        throw std::invalid_argument("bulk_forward_prob needs kappa ≺ lambda and kappa ≺ mu");
    if (!interlaces(lambda, nu) || !interlaces(mu, nu))
        return 0;
    const int H = top_part({&kappa, &lambda, &mu, &nu});
    const ARows a = a_rows(kappa, lambda, mu, H);
    const BRows b = b_rows(nu, lambda, mu, H);
    ColumnContext c{0, 0, 0, 1, 0, a.k[0], a.l[0]};
    Q p = kernel.forward(c).prob(BState{-1, b.i[0], b.j[0]});
    for (int h = 1; h <= H && p != 0; ++h) {
        c = {h, a.ml[h], a.mm[h], b.i[h - 1], b.j[h - 1], a.k[h], a.l[h]};
        p *= kernel.forward(c).prob(BState{b.mn[h], b.i[h], b.j[h]});
    }
    return p;
}

Partition bulk_backward(const Partition& nu, const Partition& lambda, const Partition& mu,
                        ColumnKernel& kernel, RandomSource& rng)
{
    if (!interlaces(lambda, nu) || !interlaces(mu, nu))
        throw std::invalid_argument("bulk_backward needs lambda ≺ nu and mu ≺ nu");
    if (!admissible(kernel.x(), kernel.y(), kernel.params()))
        throw not_admissible("bulk_backward: spectral pair outside the admissible range");
    const int H = nu.first();
    const BRows b = b_rows(nu, lambda, mu, H);
    std::vector<int> mk(H + 1, 0);
    int k = 0;
    int l = 0;
    for (int h = H; h >= 1; --h) {
        const ColumnContext c{h, b.ml[h], b.mm[h], b.i[h - 1], b.j[h - 1], k, l};
        const auto& t = kernel.backward(c);
        const AState a = t.states[t.dist.sample(rng)];
        mk[h] = a.K;
        k = a.k;
        l = a.l;
    }
    // Column 0 has a single A state; sampling it checks the sector is nonzero.
    const ColumnContext c0{0, 0, 0, 1, 0, k, l};
    const auto& t0 = kernel.backward(c0);
    (void)t0.states[t0.dist.sample(rng)];
    return Partition::from_multiplicities(mk);
}

Q bulk_backward_prob(const Partition& nu, const Partition& lambda, const Partition& mu,
                     const Partition& kappa, ColumnKernel& kernel)
{
    if (!interlaces(lambda, nu) || !interlaces(mu, nu))
        throw std::invalid_argument("bulk_backward_prob needs lambda ≺ nu and mu ≺ nu");
    if (!interlaces(kappa, lambda) || !interlaces(kappa, mu))
        return 0;
    const int H = nu.first();
    const ARows a = a_rows(kappa, lambda, mu, H);
    const BRows b = b_rows(nu, lambda, mu, H);
    if (a.k[H] != 0 || a.l[H] != 0)
        return 0;
    Q p = 1;
    for (int h = H; h >= 1 && p != 0; --h) {
        const ColumnContext c{h, b.ml[h], b.mm[h], b.i[h - 1], b.j[h - 1], a.k[h], a.l[h]};
        p *= kernel.backward(c).prob(AState{a.mk[h], a.k[h - 1], a.l[h - 1]});
    }
    if (p == 0)
        return 0;
    const ColumnContext c0{0, 0, 0, 1, 0, a.k[0], a.l[0]};
    return p * kernel.backward(c0).prob(AState{-1, 1, 0});
}

Partition boundary_forward(const Partition& kappa, const Partition& mu, ColumnKernel& kernel,
                           RandomSource& rng)
{
    return bulk_forward(kappa, even_cover(kappa), mu, kernel, rng);
}

Partition boundary_backward(const Partition& nu, const Partition& mu, ColumnKernel& kernel,
                            RandomSource& rng)
{
    return bulk_backward(nu, even_core(nu), mu, kernel, rng);
}

Q boundary_forward_prob(const Partition& kappa, const Partition& mu, const Partition& nu,
                        ColumnKernel& kernel)
{
    return bulk_forward_prob(kappa, even_cover(kappa), mu, nu, kernel);
}

Q boundary_backward_prob(const Partition& nu, const Partition& mu, const Partition& kappa,
                         ColumnKernel& kernel)
{
    return bulk_backward_prob(nu, even_core(nu), mu, kappa, kernel);
}

Q bulk_forward_mass(const Partition& kappa, const Partition& lambda, const Partition& mu,
                    int extra, ColumnKernel& kernel)
{
    if (extra < 1)
        throw std::invalid_argument("bulk_forward_mass needs extra >= 1");
    const int top = top_part({&kappa, &lambda, &mu}) + extra;
    Q inside = 0;
    Q edge = 0;
    for (const Partition& nu : interlacing_above(lambda, top)) {
        if (!interlaces(mu, nu))
            continue;
        const Q p = bulk_forward_prob(kappa, lambda, mu, nu, kernel);
        inside += p;
        if (nu.first() == top)
            edge += p;
    }
    const Q pc = kernel.continuation_probability();
    return inside + edge * pc / (1 - pc);
}

Q bulk_backward_mass(const Partition& nu, const Partition& lambda, const Partition& mu,
                     ColumnKernel& kernel)
{
    Q total = 0;
    for (const Partition& kappa : interlacing_below(lambda))
        if (interlaces(kappa, mu))
            total += bulk_backward_prob(nu, lambda, mu, kappa, kernel);
    return total;
}

LengthTable length_transition(LengthKind kind, int l_kappa, int l_lambda, int l_mu, const Q& x,
                              const Q& y, const Params& p)
{
    if (kind == LengthKind::boundary)
        l_lambda = l_kappa % 2 == 0 ? l_kappa : l_kappa + 1;
    const int dl = l_lambda - l_kappa;
    const int dm = l_mu - l_kappa;
    if (l_kappa < 0 || !is_bit(dl) || !is_bit(dm))
        throw inconsistent_heights("length differences must lie in {0,1}");
    const Q z = x * y;
    const Q den = 1 - p.q * z;
    const int l = l_kappa;
    if (dl != dm)
        return {{l + 1}, {Q(1)}};
    if (dl == 0)
        return {{l, l + 1}, {checked_div(1 - z, den), checked_div((1 - p.q) * z, den)}};
    return {{l + 1, l + 2}, {checked_div(1 - p.q, den), checked_div(p.q * (1 - z), den)}};
}

LengthTable column0_length_table(LengthKind kind, int l_kappa, int l_lambda, int l_mu,
                                 ColumnKernel& kernel)
{
    if (kind == LengthKind::boundary)
        l_lambda = l_kappa % 2 == 0 ? l_kappa : l_kappa + 1;
    const int dl = l_lambda - l_kappa;
    const int dm = l_mu - l_kappa;
    if (l_kappa < 0 || !is_bit(dl) || !is_bit(dm))
        throw inconsistent_heights("length differences must lie in {0,1}");
    const auto& t = kernel.forward(ColumnContext{0, 0, 0, 1, 0, dm, dl});
    std::map<int, Q> law;
    for (std::size_t n = 0; n < t.states.size(); ++n)
        law[l_lambda + t.states[n].i] += t.dist.prob(n);
    LengthTable out;
    for (const auto& [v, pr] : law) {
        out.values.push_back(v);
        out.probs.push_back(pr);
    }
    return out;
}

} // namespace sshl
