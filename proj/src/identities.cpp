#include "sshl/identities.hpp"

#include "sshl/functions.hpp"
#include "sshl/linalg.hpp"
#include "sshl/weights.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace sshl {

namespace {

Q abs_q(const Q& v) { return v < 0 ? Q(-v) : v; }

std::string bits(std::initializer_list<int> v)
{
    std::string s;
    for (int b : v)
        s += static_cast<char>('0' + b);
    return s;
}

Q rho(const Q& x, const Params& p) { return checked_div(x - p.s, 1 - p.s * x); }

// Shell sums keyed by first part; the tail beyond `cap` is bounded either by an exact
// geometric ratio (when supplied) or by a ratio test on the last shells.
void finish_truncated(CheckReport& r, const std::map<int, Q>& shells, int cap,
                      const Q* exact_ratio)
{
    r.truncated = true;
    Q last = 0;
    if (auto it = shells.find(cap); it != shells.end())
        last = it->second;
    if (exact_ratio) {
        r.certificate = "geometric";
        if (abs_q(*exact_ratio) >= 1) {
            r.passed = false;
            r.detail += ";ratio>=1";
            return;
        }
        r.tail_bound = geometric_tail(last, *exact_ratio);
    } else {
        r.certificate = "ratio";
        Q worst = 0;
        Q prev_ratio = -1;
        bool monotone = true;
        for (int k = cap - 3; k <= cap; ++k) {
            auto a = shells.find(k - 1), b = shells.find(k);
            if (a == shells.end() || b == shells.end() || a->second == 0) {
                monotone = false;
                break;
            }
            Q ratio = b->second / a->second;
            if (prev_ratio >= 0 && ratio > prev_ratio)
                monotone = false;
            prev_ratio = ratio;
            worst = std::max(worst, ratio);
        }
        if (!monotone || worst >= 1) {
            r.passed = false;
            r.detail += ";ratio-test-failed";
            return;
        }
        r.tail_bound = geometric_tail(last, worst);
    }
    r.passed = abs_q(r.lhs - r.rhs) <= r.tail_bound;
}

std::vector<Partition> conjugate_even_up_to(int max_part, int max_len)
{
    std::vector<Partition> out;
    for (const Partition& half : enumerate(max_part, max_len / 2)) {
        std::vector<int> parts;
        for (int v : half.parts()) {
            parts.push_back(v);
            parts.push_back(v);
        }
        out.emplace_back(std::move(parts));
    }
    return out;
}

bool contains(const Partition& big, const Partition& small)
{
    if (small.length() > big.length())
        return false;
    for (int i = 1; i <= small.length(); ++i)
        if (big.part(i) < small.part(i))
            return false;
    return true;
}

} // namespace

Q geometric_tail(const Q& last_shell, const Q& ratio)
{
    Q r = abs_q(ratio);
    return abs_q(last_shell) * r / (1 - r);
}

CheckReport exact_report(std::string name, std::string detail, Q lhs, Q rhs)
{
    CheckReport r;
    r.name = std::move(name);
    r.detail = std::move(detail);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.passed = r.lhs == r.rhs;
    r.certificate = "exact";
    return r;
}

CheckReport check_intertwining(int I, int J, int i1, int i3, int j1, int j3, const Q& x,
                               const Q& y, const Params& p)
{
    Q lhs = 0, rhs = 0;
    for (int k1 = 0; k1 <= 1; ++k1) {
        for (int k3 = 0; k3 <= 1; ++k3) {
            // Conservation fixes the middle occupancy on each side.
            int K = I + k1 - j1;
            if (K >= 0)
                lhs += R(i3, i1, k3, k1, x, y, p) * M(I, k1, K, j1, y, p) *
                       L(K, k3, J, j3, x, p);
            K = I + i3 - k3;
            if (K >= 0)
                rhs += L(I, i3, K, k3, x, p) * M(K, i1, J, k1, y, p) *
                       R(k3, k1, j3, j1, x, y, p);
        }
    }
    return exact_report("intertwining",
                        "I=" + std::to_string(I) + ",J=" + std::to_string(J) +
                            ",bits=" + bits({i1, i3, j1, j3}),
                        lhs, rhs);
}

CheckReport check_intertwining_star(int I, int J, int i, int j, int k, int l, const Q& x,
                                    const Q& y, const Params& p)
{
    Q lhs = 0, rhs = 0;
    for (int a = 0; a <= 1; ++a) {
        for (int b = 0; b <= 1; ++b) {
            // Left side: R* first, then the column with middle occupancy K.
            int K = J + k - a;
            if (K >= 0)
                lhs += Rstar(i, j, a, b, x, y, p) * L(K, a, J, k, y, p) *
                       Mstar(I, b, K, l, x, p);
            // Right side: the column with middle occupancy Mm, then R*.
            int Mm = I + i - a;
            if (Mm >= 0)
                rhs += L(I, i, Mm, a, y, p) * Mstar(Mm, j, J, b, x, p) *
                       Rstar(a, b, k, l, x, y, p);
        }
    }
    return exact_report("intertwining_star",
                        "I=" + std::to_string(I) + ",J=" + std::to_string(J) +
                            ",bits=" + bits({i, j, k, l}),
                        lhs, rhs);
}

CheckReport check_reflection(int K, int j, int l, const Q& x, const Params& p)
{
    // Conservation leaves at most one even bottom occupancy 2I on each side.
    auto side = [&](int twice, Q w) -> Q {
        if (twice < 0 || twice % 2)
            return 0;
        Q c = 1;
        for (int k = 1; k <= twice / 2; ++k) {
            Q qk = pow(p.q, 2 * k - 1);
            c *= checked_div(1 - qk, 1 - p.s * p.s * qk);
        }
        return c * w;
    };
    const int tl = K + l + j - 1, tr = K + 1 - l - j;
    Q lhs = side(tl, tl >= 0 ? L(tl, 1 - j, K, l, x, p) : Q(0));
    Q rhs = side(tr, tr >= 0 ? M(tr, j, K, 1 - l, x, p) : Q(0));
    return exact_report("reflection",
                        "K=" + std::to_string(K) + ",j=" + std::to_string(j) +
                            ",l=" + std::to_string(l),
                        lhs, rhs);
}

CheckReport check_stochasticity(int i, int j, const Q& x, const Q& y, const Params& p)
{
    Q sum = 0;
    for (int k = 0; k <= 1; ++k)
        for (int l = 0; l <= 1; ++l)
            sum += R(i, j, k, l, x, y, p);
    return exact_report("stochasticity", "in=" + bits({i, j}), sum, Q(1));
}

CheckReport check_definitions(const Partition& inner, const Partition& outer, const Q& x,
                              const Params& p)
{
    Q f1 = f_one_row(inner, outer, x, p), f2 = f_one_row_def2(inner, outer, x, p);
    Q g1 = g_one_row(inner, outer, x, p), g2 = g_one_row_def2(inner, outer, x, p);
    CheckReport r = exact_report("definitions", inner.str() + "->" + outer.str(), f1, f2);
    r.passed = f1 == f2 && g1 == g2;
    if (f1 == f2) {
        r.lhs = g1;
        r.rhs = g2;
    }
    return r;
}

CheckReport check_skew_littlewood_one(const Partition& kappa, const Q& x, const Params& p)
{
    Partition up = even_cover(kappa), down = even_core(kappa);
    return exact_report("skew_littlewood_one", kappa.str(),
                        b_el(up, p) * f_one_row(kappa, up, x, p),
                        b_el(down, p) * g_one_row(down, kappa, x, p));
}

CheckReport check_skew_littlewood(const Partition& mu, const std::vector<Q>& xs, int cap,
                                  const Params& p)
{
    const int n = static_cast<int>(xs.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!admissible(xs[a], xs[b], p))
                throw not_admissible("skew Littlewood variables are not admissible");
    CheckReport r;
    r.name = "skew_littlewood";
    r.detail = "mu=" + mu.str() + ",n=" + std::to_string(n) + ",cap=" + std::to_string(cap);
    std::map<int, Q> shells;
    Q lhs = 0;
    for (const Partition& lam : conjugate_even_up_to(cap, mu.length() + n + 1)) {
        if (!contains(lam, mu) || lam.length() > mu.length() + n)
            continue;
        Q term = b_el(lam, p) * f_skew(mu, lam, xs, p);
        lhs += term;
        shells[lam.first()] += abs_q(term);
    }
    Q rhs = 0;
    for (const Partition& nu : conjugate_even_up_to(mu.first(), mu.length()))
        if (contains(mu, nu))
            rhs += b_el(nu, p) * g_skew(nu, mu, xs, p);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            rhs *= cauchy_factor(xs[a], xs[b], p);
    r.lhs = lhs;
    r.rhs = rhs;
    if (n <= 1) {
        r.certificate = "exact";
        r.passed = lhs == rhs;
        return r;
    }
    if (n == 2) {
        // For lambda_1 > mu_1 each shell is the previous one times rho(x1) rho(x2).
        Q ratio = rho(xs[0], p) * rho(xs[1], p);
        if (cap <= mu.first())
            throw invalid_params("cap must exceed the first part of mu");
        finish_truncated(r, shells, cap, &ratio);
    } else {
        finish_truncated(r, shells, cap, nullptr);
    }
    return r;
}

CheckReport check_cauchy(const Q& x, const Q& y, int cap, const Params& p)
{
    if (!admissible(x, y, p))
        throw not_admissible("Cauchy variables are not admissible");
    CheckReport r;
    r.name = "cauchy";
    r.detail = "cap=" + std::to_string(cap);
    std::map<int, Q> shells;
    Q lhs = 1;
    for (int k = 1; k <= cap; ++k) {
        Partition row(std::vector<int>{k});
        Q term = f_one_row({}, row, x, p) * g_one_row({}, row, y, p);
        lhs += term;
        shells[k] = abs_q(term);
    }
    r.lhs = lhs;
    r.rhs = cauchy_factor(x, y, p);
    Q ratio = convergence_ratio(x, y, p);
    finish_truncated(r, shells, cap, &ratio);
    return r;
}

CheckReport check_cauchy_closed_form(const Q& x, const Q& y, int cap, const Params& p)
{
    const Q& s = p.s;
    const Q first = checked_div(x * y * (1 - s * s) * (1 - p.q), (1 - s * x) * (1 - s * y));
    const Q ratio = convergence_ratio(x, y, p);
    bool partial_ok = true;
    Q partial = 0;
    for (int k = 1; k <= cap; ++k) {
        Partition row(std::vector<int>{k});
        partial += f_one_row({}, row, x, p) * g_one_row({}, row, y, p);
        if (partial != first * (1 - pow(ratio, k)) / (1 - ratio))
            partial_ok = false;
    }
    CheckReport r = exact_report("cauchy_closed_form", "cap=" + std::to_string(cap),
                                 1 + checked_div(first, 1 - ratio), cauchy_factor(x, y, p));
    r.passed = r.passed && partial_ok;
    if (!partial_ok)
        r.detail += ";partial-sums-differ";
    return r;
}

CheckReport check_skew_cauchy(const Partition& lambda, const Partition& mu,
                              const std::vector<Q>& xs, const std::vector<Q>& ys, int cap,
                              const Params& p)
{
    for (const Q& x : xs)
        for (const Q& y : ys)
            if (!admissible(x, y, p))
                throw not_admissible("skew Cauchy variables are not admissible");
    const int m = static_cast<int>(xs.size()), n = static_cast<int>(ys.size());
    if (cap <= std::max(lambda.first(), mu.first()))
        throw invalid_params("cap must exceed the first parts of lambda and mu");
    CheckReport r;
    r.name = "skew_cauchy";
    r.detail = "lambda=" + lambda.str() + ",mu=" + mu.str() + ",m=" + std::to_string(m) +
               ",n=" + std::to_string(n) + ",cap=" + std::to_string(cap);
    std::vector<Partition> big;
    if (m == 1 && n == 1) {
        for (const Partition& k : interlacing_above(lambda, cap))
            if (interlaces(mu, k))
                big.push_back(k);
    } else {
        int len = std::min(lambda.length() + n, mu.length() + m);
        for (const Partition& k : enumerate(cap, len))
            if (contains(k, lambda) && contains(k, mu))
                big.push_back(k);
    }
    std::map<int, Q> shells;
    Q lhs = 0;
    for (const Partition& k : big) {
        Q term = g_skew(lambda, k, ys, p) * f_skew(mu, k, xs, p);
        lhs += term;
        shells[k.first()] += abs_q(term);
    }
    Q rhs = 0;
    for (const Partition& nu :
         enumerate(std::min(lambda.first(), mu.first()), std::min(lambda.length(), mu.length())))
        if (contains(lambda, nu) && contains(mu, nu))
            rhs += f_skew(nu, lambda, xs, p) * g_skew(nu, mu, ys, p);
    for (const Q& x : xs)
        for (const Q& y : ys)
            rhs *= cauchy_factor(x, y, p);
    r.lhs = lhs;
    r.rhs = rhs;
    if (m == 1 && n == 1) {
        Q ratio = convergence_ratio(xs[0], ys[0], p);
        finish_truncated(r, shells, cap, &ratio);
    } else {
        finish_truncated(r, shells, cap, nullptr);
    }
    return r;
}

Q refined_cauchy_rhs(const std::vector<Q>& xs, const std::vector<Q>& ys, const Params& p)
{
    const std::size_t n = xs.size();
    if (ys.size() != n)
        throw invalid_params("refined Cauchy needs equally many x and y");
    const Q& q = p.q;
    const Q& u = p.u;
    Q pre = 1;
    Matrix a(n, std::vector<Q>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Q z = xs[i] * ys[j];
            pre *= 1 - q * z;
            a[i][j] = checked_div(1 - u * q + (u - 1) * q * z, (1 - z) * (1 - q * z));
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Q d = (xs[i] - xs[j]) * (ys[i] - ys[j]);
            if (d == 0)
                throw invalid_params("degenerate Vandermonde: repeated spectral value");
            pre /= d;
        }
    return pre * det_exact(a);
}

Q refined_littlewood_rhs(const std::vector<Q>& xs, const Params& p)
{
    const std::size_t n = xs.size();
    if (n % 2)
        throw invalid_params("refined Littlewood needs an even number of variables");
    const Q& q = p.q;
    const Q& u = p.u;
    Q pre = 1;
    Matrix a(n, std::vector<Q>(n, Q(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Q z = xs[i] * xs[j];
            Q d = xs[i] - xs[j];
            if (d == 0)
                throw invalid_params("degenerate Vandermonde: repeated spectral value");
            pre *= checked_div(1 - q * z, d);
            a[i][j] = checked_div(d * (1 - u * q + (u - 1) * q * z), (1 - z) * (1 - q * z));
            a[j][i] = -a[i][j];
        }
    return pre * pfaffian_exact(a);
}

CheckReport check_refined_cauchy(const std::vector<Q>& xs, const std::vector<Q>& ys, int cap,
                                 const Params& p)
{
    const int n = static_cast<int>(xs.size());
    for (const Q& x : xs)
        for (const Q& y : ys)
            if (!admissible(x, y, p))
                throw not_admissible("refined Cauchy variables are not admissible");
    CheckReport r;
    r.name = "refined_cauchy";
    r.detail = "n=" + std::to_string(n) + ",u=" + p.u.get_str() + ",cap=" + std::to_string(cap);
    r.rhs = refined_cauchy_rhs(xs, ys, p);
    std::map<int, Q> shells;
    Q lhs = 0;
    for (const Partition& lam : enumerate(cap, n)) {
        Q weight = 1;
        for (int i = 1; i <= n - lam.length(); ++i)
            weight *= 1 - p.u * pow(p.q, i);
        if (weight == 0)
            continue;
        Q term = weight * f_skew({}, lam, xs, p) * g_skew({}, lam, ys, p);
        lhs += term;
        shells[lam.first()] += abs_q(term);
    }
    r.lhs = lhs;
    if (n == 1) {
        Q ratio = convergence_ratio(xs[0], ys[0], p);
        finish_truncated(r, shells, cap, &ratio);
    } else {
        finish_truncated(r, shells, cap, nullptr);
    }
    return r;
}

CheckReport check_refined_littlewood(const std::vector<Q>& xs, int cap, const Params& p)
{
    const int n2 = static_cast<int>(xs.size());
    for (int a = 0; a < n2; ++a)
        for (int b = a + 1; b < n2; ++b)
            if (!admissible(xs[a], xs[b], p))
                throw not_admissible("refined Littlewood variables are not admissible");
    CheckReport r;
    r.name = "refined_littlewood";
    r.detail =
        "2n=" + std::to_string(n2) + ",u=" + p.u.get_str() + ",cap=" + std::to_string(cap);
    r.rhs = refined_littlewood_rhs(xs, p);
    std::map<int, Q> shells;
    Q lhs = 0;
    for (const Partition& lam : conjugate_even_up_to(cap, n2)) {
        Q weight = 1;
        for (int k = 1; k <= (n2 - lam.length()) / 2; ++k)
            weight *= 1 - p.u * pow(p.q, 2 * k - 1);
        Q term = weight * b_el(lam, p) * f_skew({}, lam, xs, p);
        lhs += term;
        shells[lam.first()] += abs_q(term);
    }
    r.lhs = lhs;
    if (n2 == 2) {
        // Only lambda = (k,k) contributes; each step in k multiplies by rho(x1) rho(x2).
        Q ratio = rho(xs[0], p) * rho(xs[1], p);
        finish_truncated(r, shells, cap, &ratio);
    } else {
        finish_truncated(r, shells, cap, nullptr);
    }
    return r;
}

} // namespace sshl
