#include "sshl/suite.hpp"

#include "sshl/functions.hpp"
#include "sshl/linalg.hpp"
#include "sshl/random.hpp"
#include "sshl/transitions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

namespace sshl {

Params fixture_point(int index)
{
    static const std::pair<Q, Q> qs[kFixturePoints] = {
        {Q(1, 3), Q(-1, 2)}, {Q(2, 5), Q(-1, 3)}, {Q(1, 7), Q(-3, 5)}};
    if (index < 0 || index >= kFixturePoints)
        throw std::invalid_argument("fixture point out of range");
    Params p{qs[index].first, qs[index].second, Q(1, 2), {}};
    for (int i = 0; i <= 8; ++i)
        p.x.emplace_back(1, 4 + i);
    return p;
}

CheckReport aggregate(std::string name, const std::vector<CheckReport>& reports)
{
    CheckReport out;
    out.name = std::move(name);
    out.passed = true;
    std::size_t failed = 0;
    for (const auto& r : reports) {
        if (r.passed)
            continue;
        if (failed++ == 0) {
            out.lhs = r.lhs;
            out.rhs = r.rhs;
            out.detail = "first failure: " + r.detail;
        }
        out.passed = false;
    }
    const std::string tally =
        std::to_string(reports.size() - failed) + "/" + std::to_string(reports.size()) + " cases";
    out.detail = out.detail.empty() ? tally : tally + "; " + out.detail;
    return out;
}

namespace {

const Q kX(1, 4);
const Q kY(1, 5);

using Group = std::function<std::vector<CheckReport>(const Params&, const std::string& tag)>;

std::vector<CheckReport> intertwining(const Params& p, const std::string& tag)
{
    std::vector<CheckReport> rs, rs_star;
    for (int I = 0; I <= 6; ++I)
        for (int J = 0; J <= 6; ++J)
            for (int b = 0; b < 16; ++b) {
                const int e0 = b & 1, e1 = (b >> 1) & 1, e2 = (b >> 2) & 1, e3 = (b >> 3) & 1;
                rs.push_back(check_intertwining(I, J, e0, e1, e2, e3, kX, kY, p));
                rs_star.push_back(check_intertwining_star(I, J, e0, e1, e2, e3, kX, kY, p));
            }
    return {aggregate("intertwining" + tag, rs), aggregate("intertwining_star" + tag, rs_star)};
}

std::vector<CheckReport> reflection(const Params& p, const std::string& tag)
{
    std::vector<CheckReport> rs;
    for (int K = 0; K <= 8; ++K)
        for (int j = 0; j <= 1; ++j)
            for (int l = 0; l <= 1; ++l)
                rs.push_back(check_reflection(K, j, l, kX, p));
    return {aggregate("reflection" + tag, rs)};
}

std::vector<CheckReport> stochasticity(const Params& p, const std::string& tag)
{
    std::vector<CheckReport> rs;
    for (int i = 0; i <= 1; ++i)
        for (int j = 0; j <= 1; ++j)
            rs.push_back(check_stochasticity(i, j, kX, kY, p));
    return {aggregate("stochasticity" + tag, rs)};
}

std::vector<CheckReport> definitions(const Params& p, const std::string& tag)
{
    std::vector<CheckReport> rs;
    const auto all = enumerate(5, 4);
    for (const auto& inner : all)
        for (const auto& outer : all)
            if (interlaces(inner, outer))
                rs.push_back(check_definitions(inner, outer, kX, p));
    rs.push_back(check_definitions(Partition{6, 5, 4, 4, 1}, Partition{6, 6, 4, 4, 3}, kX, p));
    rs.push_back(check_definitions(Partition{6, 5, 4, 4, 1}, Partition{6, 6, 4, 4, 3, 1}, kX, p));
    return {aggregate("definitions" + tag, rs)};
}

std::vector<CheckReport> skew_littlewood(const Params& p, const std::string& tag)
{
    std::vector<CheckReport> rs;
    for (const auto& kappa : enumerate(6, 5))
        rs.push_back(check_skew_littlewood_one(kappa, kX, p));
    rs.push_back(check_skew_littlewood_one(Partition{4, 4, 4, 3, 2, 2, 1}, kX, p));
    std::vector<CheckReport> out{aggregate("skew_littlewood_one" + tag, rs)};
    auto n2 = check_skew_littlewood(Partition{}, {kX, kY}, 30, p);
    n2.name += tag;
    out.push_back(n2);
    return out;
}

std::vector<CheckReport> cauchy(const Params& p, const std::string& tag)
{
    auto a = check_cauchy(kX, kY, 40, p);
    auto b = check_cauchy_closed_form(kX, kY, 40, p);
    a.name += tag;
    b.name += tag;
    return {a, b};
}

std::vector<CheckReport> skew_cauchy(const Params& p, const std::string& tag)
{
    std::vector<CheckReport> out;
    const auto small = enumerate(3, 2);
    for (const auto& lambda : small)
        for (const auto& mu : small) {
            auto r = check_skew_cauchy(lambda, mu, {kX}, {kY}, 40, p);
            r.name += tag;
            out.push_back(r);
        }
    return out;
}

std::vector<CheckReport> refined_cauchy(const Params& p, const std::string& tag)
{
    std::vector<CheckReport> out;
    for (const Q& u : {Q(1, 2), Q(1)}) {
        Params pu = p;
        pu.u = u;
        out.push_back(check_refined_cauchy({kX}, {kY}, 25, pu));
        out.push_back(check_refined_cauchy({kX, Q(1, 6)}, {kY, Q(1, 7)}, 25, pu));
    }
    for (auto& r : out)
        r.name += tag;
    return out;
}

std::vector<CheckReport> refined_littlewood(const Params& p, const std::string& tag)
{
    auto a = check_refined_littlewood({kX, kY}, 30, p);
    auto b = check_refined_littlewood({kX, kY, Q(1, 6), Q(1, 7)}, 12, p);
    a.name += tag;
    b.name += tag;
    return {a, b};
}

std::vector<CheckReport> pfaffian(const Params&, const std::string& tag)
{
    std::vector<CheckReport> rs;
    RandomSource rng(2024, 0);
    for (int n = 0; n < 20; ++n) {
        Matrix a(4, std::vector<Q>(4, Q(0)));
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                const long num = static_cast<long>(rng.next() % 19) - 9;
                const long den = static_cast<long>(rng.next() % 7) + 1;
                a[i][j] = Q(num, den);
                a[i][j].canonicalize();
                a[j][i] = -a[i][j];
            }
        const Q pf = pfaffian_exact(a);
        rs.push_back(exact_report("pfaffian_squared", "random 4x4", pf * pf, det_exact(a)));
    }
    return {aggregate("pfaffian_squared" + tag, rs)};
}

std::vector<CheckReport> transitions(const Params& p, const std::string& tag)
{
    return transition_reports(p, 3, 3, tag);
}

std::vector<CheckReport> lengths(const Params& p, const std::string& tag)
{
    ColumnKernel k(kX, kY, p);
    std::vector<CheckReport> rs;
    for (LengthKind kind : {LengthKind::bulk, LengthKind::boundary})
        for (int l = 0; l <= 3; ++l)
            for (int dl = 0; dl <= 1; ++dl)
                for (int dm = 0; dm <= 1; ++dm) {
                    const auto a = length_transition(kind, l, l + dl, l + dm, kX, kY, p);
                    const auto b = column0_length_table(kind, l, l + dl, l + dm, k);
                    const bool same = a.values == b.values && a.probs == b.probs;
                    rs.push_back(exact_report("length_table",
                                              std::to_string(l) + "," + std::to_string(dl) +
                                                  "," + std::to_string(dm),
                                              same ? 1 : 0, 1));
                }
    return {aggregate("length_projection" + tag, rs)};
}

const std::vector<std::pair<std::string, Group>>& groups()
{
    static const std::vector<std::pair<std::string, Group>> g = {
        {"intertwining", intertwining},
        {"reflection", reflection},
        {"stochasticity", stochasticity},
        {"definitions", definitions},
        {"skew_littlewood", skew_littlewood},
        {"cauchy", cauchy},
        {"skew_cauchy", skew_cauchy},
        {"refined_cauchy", refined_cauchy},
        {"refined_littlewood", refined_littlewood},
        {"pfaffian", pfaffian},
        {"transitions", transitions},
        {"lengths", lengths},
    };
    return g;
}

} // namespace

std::vector<CheckReport> transition_reports(const Params& p, int max_part, int max_len,
                                           const std::string& tag)
{
    ColumnKernel k(kX, kY, p);
    const Q pi = cauchy_factor(kX, kY, p);
    std::vector<CheckReport> norm, rev;
    const auto parts = enumerate(max_part, max_len);
    for (const auto& kappa : parts)
        for (const auto& mu : parts) {
            if (!interlaces(kappa, mu))
                continue;
            for (const auto& lambda : parts) {
                if (!interlaces(kappa, lambda))
                    continue;
                const std::string d = kappa.str() + "|" + lambda.str() + "|" + mu.str();
                norm.push_back(exact_report("forward_mass", d,
                                            bulk_forward_mass(kappa, lambda, mu, 2, k), 1));
                const Q before =
                    pi * f_one_row(kappa, lambda, kX, p) * g_one_row(kappa, mu, kY, p);
                const int top = std::max(lambda.first(), mu.first()) + 1;
                for (const auto& nu : interlacing_above(lambda, top)) {
                    if (!interlaces(mu, nu))
                        continue;
                    const Q after = g_one_row(lambda, nu, kY, p) * f_one_row(mu, nu, kX, p);
                    rev.push_back(exact_report(
                        "reversibility", d + "|" + nu.str(),
                        before * bulk_forward_prob(kappa, lambda, mu, nu, k),
                        after * bulk_backward_prob(nu, lambda, mu, kappa, k)));
                    norm.push_back(exact_report("backward_mass", d + "|" + nu.str(),
                                                bulk_backward_mass(nu, lambda, mu, k), 1));
                }
            }
            // Boundary: the pair (kappa, mu) with the even cover of kappa in the lambda slot.
            const Partition cover = even_cover(kappa);
            const std::string d = kappa.str() + "|" + mu.str();
            norm.push_back(exact_report("boundary_forward_mass", d,
                                        bulk_forward_mass(kappa, cover, mu, 2, k), 1));
            const Q before = pi * G(kappa, kX, p) * g_one_row(kappa, mu, kY, p);
            const int top = std::max(cover.first(), mu.first()) + 1;
            for (const auto& nu : interlacing_above(cover, top)) {
                if (!interlaces(mu, nu))
                    continue;
                rev.push_back(exact_report(
                    "boundary_reversibility", d + "|" + nu.str(),
                    before * boundary_forward_prob(kappa, mu, nu, k),
                    G(nu, kY, p) * f_one_row(mu, nu, kX, p) *
                        boundary_backward_prob(nu, mu, kappa, k)));
                norm.push_back(exact_report("boundary_backward_mass", d + "|" + nu.str(),
                                            bulk_backward_mass(nu, even_core(nu), mu, k), 1));
            }
        }
    return {aggregate("transition_normalization" + tag, norm),
            aggregate("transition_reversibility" + tag, rev)};
}

std::vector<std::string> suite_names()
{
    std::vector<std::string> out;
    for (const auto& [name, fn] : groups())
        out.push_back(name);
    return out;
}

std::vector<CheckReport> run_suite(const std::string& only, int point)
{
    const auto names = suite_names();
    if (!only.empty() && std::find(names.begin(), names.end(), only) == names.end())
        throw std::invalid_argument("unknown check group '" + only + "'");
    if (point < -1 || point >= kFixturePoints)
        throw std::invalid_argument("fixture point out of range");
    std::vector<CheckReport> out;
    for (int pt = 0; pt < kFixturePoints; ++pt) {
        if (point != -1 && pt != point)
            continue;
        const Params p = fixture_point(pt);
        const std::string tag = "@" + std::to_string(pt);
        for (const auto& [name, fn] : groups()) {
            if (!only.empty() && name != only)
                continue;
            for (auto& r : fn(p, tag))
                out.push_back(std::move(r));
        }
    }
    return out;
}

} // namespace sshl
