#include "sshl/functions.hpp"

#include "sshl/weights.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace sshl {

namespace {

using Vertex = Q (*)(Occ, int, Occ, int, const Q&, const Params&);

int columns(const Partition& a, const Partition& b) { return std::max(a.first(), b.first()); }

// Right-to-left scan; state after column i is bottom + h - top.
Q scan_down(const std::vector<int>& bottom, const std::vector<int>& top, int h, Vertex w,
            const Q& x, const Params& p)
{
    Q out = 1;
    for (int i = static_cast<int>(bottom.size()) - 1; i >= 1; --i) {
        int next = bottom[i] + h - top[i];
        if (next < 0 || next > 1)
            return 0;
        out *= w(bottom[i], h, top[i], next, x, p);
        if (out == 0)
            return 0;
        h = next;
    }
    return out;
}

// Left-to-right scan from column 1 that must end in state 0. Paths enter a
// downward vertex at the top, so its state after column i is top + h - bottom.
Q scan_up(const std::vector<int>& bottom, const std::vector<int>& top, int h, bool downward,
          Vertex w, const Q& x, const Params& p)
{
    Q out = 1;
    for (std::size_t i = 1; i < bottom.size(); ++i) {
        int next = downward ? top[i] + h - bottom[i] : bottom[i] + h - top[i];
        if (next < 0 || next > 1)
            return 0;
        out *= w(bottom[i], h, top[i], next, x, p);
        if (out == 0)
            return 0;
        h = next;
    }
    return h == 0 ? out : Q(0);
}

} // namespace

Q f_one_row(const Partition& inner, const Partition& outer, const Q& x, const Params& p)
{
    const int c = columns(inner, outer);
    auto mo = outer.multiplicities(c);
    auto mi = inner.multiplicities(c);
    if (outer.length() - inner.length() < 0 || outer.length() - inner.length() > 1)
        return 0;
    // L with the outer multiplicity at the bottom; ends in state l(outer) - l(inner).
    return scan_down(mo, mi, 0, &L, x, p);
}

Q g_one_row(const Partition& inner, const Partition& outer, const Q& y, const Params& p)
{
    const int c = columns(inner, outer);
    auto mo = outer.multiplicities(c);
    auto mi = inner.multiplicities(c);
    if (outer.length() - inner.length() < 0 || outer.length() - inner.length() > 1)
        return 0;
    // Above column c the state 1 passes through M(0,1;0,1) = 1.
    return scan_down(mi, mo, 1, &M, y, p);
}

Q f_one_row_def2(const Partition& inner, const Partition& outer, const Q& x, const Params& p)
{
    const int l0 = outer.length() - inner.length();
    if (l0 < 0 || l0 > 1)
        return 0;
    const int c = columns(inner, outer);
    auto mo = outer.multiplicities(c);
    auto mi = inner.multiplicities(c);
    Q out = Mstar(Occ::infinite(), 1, Occ::infinite(), l0, x, p);
    // M*(I = m(outer), h; K = m(inner), K + h - I).
    return out * scan_up(mo, mi, l0, true, &Mstar, x, p);
}

Q g_one_row_def2(const Partition& inner, const Partition& outer, const Q& y, const Params& p)
{
    const int l0 = outer.length() - inner.length();
    if (l0 < 0 || l0 > 1)
        return 0;
    const int c = columns(inner, outer);
    auto mo = outer.multiplicities(c);
    auto mi = inner.multiplicities(c);
    Q out = L(Occ::infinite(), 1, Occ::infinite(), l0, y, p);
    // L(I = m(inner), h; K = m(outer), I + h - K).
    return out * scan_up(mi, mo, l0, false, &L, y, p);
}

namespace {

using OneRow = Q (*)(const Partition&, const Partition&, const Q&, const Params&);

Q chain_sum(const Partition& inner, const Partition& outer, const std::vector<Q>& xs,
            const Params& p, OneRow row)
{
    const int n = static_cast<int>(xs.size());
    std::map<std::pair<Partition, int>, Q> memo;
    // value(nu, k): sum over chains from inner up to nu using xs[k..n-1], xs[k] on the top step.
    std::function<Q(const Partition&, int)> value = [&](const Partition& nu, int k) -> Q {
        if (k == n)
            return nu == inner ? Q(1) : Q(0);
        // The last step must land on inner.
        if (k == n - 1)
            return row(inner, nu, xs[k], p);
        const int left = n - k;
        if (nu.length() < inner.length() || nu.length() - inner.length() > left)
            return 0;
        for (int i = 1; i <= inner.length(); ++i)
            if (nu.part(i) < inner.part(i))
                return 0;
        auto key = std::make_pair(nu, k);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        Q total = 0;
        for (const Partition& below : interlacing_below(nu)) {
            Q w = row(below, nu, xs[k], p);
            if (w == 0)
                continue;
            Q rest = value(below, k + 1);
            if (rest != 0)
                total += w * rest;
        }
        memo.emplace(key, total);
        return total;
    };
    return value(outer, 0);
}

} // namespace

Q f_skew(const Partition& inner, const Partition& outer, const std::vector<Q>& xs,
         const Params& p)
{
    return chain_sum(inner, outer, xs, p, &f_one_row);
}

Q g_skew(const Partition& inner, const Partition& outer, const std::vector<Q>& ys,
         const Params& p)
{
    return chain_sum(inner, outer, ys, p, &g_one_row);
}

Q G(const Partition& kappa, const Q& x, const Params& p)
{
    Partition tau = even_core(kappa);
    return b_el(tau, p) * g_one_row(tau, kappa, x, p);
}

} // namespace sshl
