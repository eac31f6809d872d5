#include "sshl/weights.hpp"

#include <atomic>

namespace sshl {

namespace {

std::atomic<bool> g_fault{false};

bool bit(int v) { return v == 0 || v == 1; }

// Sentinel rule shared by every table; returns true when it applies.
bool sentinel(Occ I, Occ K, int l, const Q& x, Q& out)
{
    if (!I.inf && !K.inf)
        return false;
    out = (I.inf && K.inf) ? pow(x, static_cast<unsigned>(l)) : Q(0);
    return true;
}

Q l_table(Occ I, int j, Occ K, int l, const Q& x, const Q& q, const Q& s)
{
    if (!bit(j) || !bit(l))
        return 0;
    Q out;
    if (sentinel(I, K, l, x, out))
        return out;
    const Q d = 1 - s * x;
    const int a = I.n, b = K.n;
    if (j == 0 && l == 0 && a == b)
        return checked_div(1 - s * x * pow(q, a), d);
    if (j == 1 && l == 1 && a == b) {
        Q w = checked_div(x - s * pow(q, a), d);
        return g_fault.load(std::memory_order_relaxed) ? Q(2 * w) : w;
    }
    if (j == 1 && l == 0 && b == a + 1)
        return checked_div(1 - pow(q, a + 1), d);
    if (j == 0 && l == 1 && a == b + 1)
        return checked_div(x * (1 - s * s * pow(q, b)), d);
    return 0;
}

Q m_table(Occ I, int j, Occ K, int l, const Q& x, const Q& q, const Q& s)
{
    if (!bit(j) || !bit(l))
        return 0;
    Q out;
    if (sentinel(I, K, l, x, out))
        return out;
    const Q d = 1 - s * x;
    const int a = I.n, b = K.n;
    if (j == 0 && l == 0 && a == b)
        return checked_div(x - s * pow(q, a), d);
    if (j == 1 && l == 1 && a == b)
        return checked_div(1 - s * x * pow(q, a), d);
    if (j == 1 && l == 0 && b == a + 1)
        return checked_div(x * (1 - pow(q, a + 1)), d);
    if (j == 0 && l == 1 && a == b + 1)
        return checked_div(1 - s * s * pow(q, b), d);
    return 0;
}

} // namespace

Q L(Occ I, int j, Occ K, int l, const Q& x, const Params& p)
{
    return l_table(I, j, K, l, x, p.q, p.s);
}

Q M(Occ I, int j, Occ K, int l, const Q& x, const Params& p)
{
    return m_table(I, j, K, l, x, p.q, p.s);
}

Q Mstar(Occ I, int j, Occ K, int l, const Q& x, const Params& p)
{
    if (!bit(j) || !bit(l))
        return 0;
    Q out;
    if (sentinel(I, K, l, x, out))
        return out;
    const Q& q = p.q;
    const Q& s = p.s;
    const Q d = 1 - s * x;
    const int a = I.n, b = K.n;
    if (j == 0 && l == 0 && a == b)
        return checked_div(1 - s * x * pow(q, a), d);
    if (j == 1 && l == 1 && a == b)
        return checked_div(x - s * pow(q, a), d);
    if (j == 1 && l == 0 && a == b + 1)
        return checked_div(1 - s * s * pow(q, b), d);
    if (j == 0 && l == 1 && b == a + 1)
        return checked_div(x * (1 - pow(q, a + 1)), d);
    return 0;
}

Q L0(Occ I, int j, Occ K, int l, const Q& x, const Params& p)
{
    return l_table(I, j, K, l, x, p.q, Q(0));
}

Q M0(Occ I, int j, Occ K, int l, const Q& x, const Params& p)
{
    return m_table(I, j, K, l, x, p.q, Q(0));
}

Q R(int i, int j, int k, int l, const Q& x, const Q& y, const Params& p)
{
    if (!bit(i) || !bit(j) || !bit(k) || !bit(l))
        return 0;
    const Q z = x * y;
    const Q& q = p.q;
    const Q d = 1 - q * z;
    if (i == 0 && j == 0 && k == 0 && l == 0)
        return 1;
    if (i == 1 && j == 1 && k == 1 && l == 1)
        return 1;
    if (i == 1 && j == 0 && k == 1 && l == 0)
        return checked_div(q * (1 - z), d);
    if (i == 1 && j == 0 && k == 0 && l == 1)
        return checked_div(1 - q, d);
    if (i == 0 && j == 1 && k == 0 && l == 1)
        return checked_div(1 - z, d);
    if (i == 0 && j == 1 && k == 1 && l == 0)
        return checked_div((1 - q) * z, d);
    return 0;
}

Q Rstar(int i, int j, int k, int l, const Q& x, const Q& y, const Params& p)
{
    if (!bit(i) || !bit(j) || !bit(k) || !bit(l))
        return 0;
    const Q z = x * y;
    const Q& q = p.q;
    const Q d = 1 - z;
    if (i == 0 && j == 0 && k == 0 && l == 0)
        return 1;
    if (i == 1 && j == 0 && k == 1 && l == 0)
        return checked_div(1 - q * z, d);
    if (i == 1 && j == 1 && k == 0 && l == 0)
        return checked_div(1 - q, d);
    if (i == 0 && j == 0 && k == 1 && l == 1)
        return checked_div((1 - q) * z, d);
    if (i == 0 && j == 1 && k == 0 && l == 1)
        return checked_div(1 - q * z, d);
    if (i == 1 && j == 1 && k == 1 && l == 1)
        return q;
    return 0;
}

void set_weight_fault(bool on) { g_fault.store(on, std::memory_order_relaxed); }

bool weight_fault() { return g_fault.load(std::memory_order_relaxed); }

} // namespace sshl
