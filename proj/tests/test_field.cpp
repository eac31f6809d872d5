#include "oracles.hpp"

#include "sshl/field.hpp"
#include "sshl/functions.hpp"
#include "sshl/suite.hpp"
#include "sshl/transitions.hpp"

#include <doctest.h>

#include <functional>
#include <map>

using namespace sshl;
using oracle::rat;

namespace {

Params field_params() { return fixture_point(0); }

// Every caudate path whose rows stay within 0..T.
std::vector<CaudateZigzagPath> all_paths(int T)
{
    std::vector<CaudateZigzagPath> out;
    std::function<void(int, int, int, std::string)> rec = [&](int n, int i, int j,
                                                              std::string s) {
        if (i == 0)
            out.push_back({n, s});
        if (i > 0)
            rec(n, i - 1, j, s + 'L');
        if (j < T)
            rec(n, i, j + 1, s + 'U');
    };
    for (int n = 0; n <= T; ++n)
        rec(n, n, n, "");
    return out;
}

// Largest column of the down-set spanned by the path in row j, or -1 above the path.
int row_bound(const CaudateZigzagPath& path, int j)
{
    if (j < path.n)
        return j;
    int best = -1;
    for (const auto& [vi, vj] : path.vertices())
        if (vj == j)
            best = std::max(best, vi);
    return best;
}

// Product of the cells' forward probabilities over the down-set of the path, summed over
// the cells strictly inside it.
class DownSetLaw {
public:
    DownSetLaw(const CaudateZigzagPath& path, const Params& p, std::vector<Partition> range)
        : path_(path), p_(p), range_(std::move(range))
    {
        const int top = path.top();
        for (int j = 1; j <= top; ++j)
            for (int i = 1; i <= std::min(j, row_bound(path, j)); ++i)
                cells_.emplace_back(i, j);
        for (const auto& v : path.vertices())
            on_path_.insert(v);
    }

    Q marginal(const std::map<std::pair<int, int>, Partition>& on_path)
    {
        std::map<std::pair<int, int>, Partition> f = on_path;
        return sum(0, f);
    }

private:
    Partition get(const std::map<std::pair<int, int>, Partition>& f, int i, int j) const
    {
        return i == 0 ? Partition{} : f.at({i, j});
    }

    Q sum(std::size_t k, std::map<std::pair<int, int>, Partition>& f)
    {
        if (k == cells_.size()) {
            Q w = 1;
            for (const auto& [i, j] : cells_) {
                ColumnKernel& ker = kernel(i, j);
                const Partition kappa = get(f, i - 1, j - 1);
                if (i == j) {
                    const Partition mu = get(f, i - 1, j);
                    if (!interlaces(kappa, mu))
                        return 0;
                    w *= boundary_forward_prob(kappa, mu, f.at({i, j}), ker);
                } else {
                    const Partition lambda = get(f, i, j - 1), mu = get(f, i - 1, j);
                    if (!interlaces(kappa, lambda) || !interlaces(kappa, mu))
                        return 0;
                    w *= bulk_forward_prob(kappa, lambda, mu, f.at({i, j}), ker);
                }
                if (w == 0)
                    return 0;
            }
            return w;
        }
        const auto cell = cells_[k];
        if (on_path_.count(cell))
            return sum(k + 1, f);
        Q total = 0;
        for (const auto& v : range_) {
            f[cell] = v;
            total += sum(k + 1, f);
        }
        f.erase(cell);
        return total;
    }

    ColumnKernel& kernel(int i, int j)
    {
        auto it = kernels_.find({i, j});
        if (it == kernels_.end())
            it = kernels_.emplace(std::make_pair(i, j), ColumnKernel(p_.x[i - 1], p_.x[j], p_))
                     .first;
        return it->second;
    }

    CaudateZigzagPath path_;
    Params p_;
    std::vector<Partition> range_;
    std::vector<std::pair<int, int>> cells_;
    std::set<std::pair<int, int>> on_path_;
    std::map<std::pair<int, int>, ColumnKernel> kernels_;
};

void compare_path_marginals(int T, int max_part, int max_len)
{
    const Params p = field_params();
    const auto range = oracle::all_partitions(max_part, max_len);
    for (const auto& path : all_paths(T)) {
        const auto v = path.vertices();
        std::vector<std::size_t> free;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k].first > 0)
                free.push_back(k);
        DownSetLaw law(path, p, range);
        std::vector<std::size_t> idx(free.size(), 0);
        std::size_t checked = 0;
        while (true) {
            std::vector<Partition> parts(v.size());
            std::map<std::pair<int, int>, Partition> on;
            for (std::size_t a = 0; a < free.size(); ++a) {
                parts[free[a]] = range[idx[a]];
                on[v[free[a]]] = range[idx[a]];
            }
            const Q exact = law.marginal(on);
            CHECK_MESSAGE(path_measure(path, parts, p) == exact,
                          "n=" << path.n << " steps=" << path.steps);
            ++checked;
            std::size_t a = 0;
            while (a < idx.size() && ++idx[a] == range.size())
                idx[a++] = 0;
            if (a == idx.size())
                break;
        }
        CHECK(checked > 0);
    }
}

Q test_region(const CaudateZigzagPath& path, const Params& p)
{
    Q out = 1;
    for (int j = 1; j <= path.top(); ++j)
        for (int i = 1; i <= std::min(j, row_bound(path, j)); ++i) {
            const Q z = p.x[i - 1] * p.x[j];
            out *= (1 - p.q * z) / (1 - z);
        }
    return out;
}

} // namespace

TEST_CASE("T = 1: the corner length law")
{
    const Params p = field_params();
    ColumnKernel k(p.x[0], p.x[1], p);
    const Q z = p.x[0] * p.x[1];
    const Q empty = boundary_forward_prob(Partition{}, Partition{}, Partition{}, k);
    CHECK(empty == (1 - z) / (1 - p.q * z));
    std::uint64_t zeros = 0;
    const std::uint64_t n = 20000;
    const auto lengths = sample_field_lengths(1, 31, n, p);
    for (const auto& l : lengths)
        zeros += l.at(1, 1) == 0;
    CHECK(oracle::within_binomial_band(zeros, n, to_double(empty)));
}

TEST_CASE("sampled fields satisfy both interlacing families and the empty first column")
{
    const Params p = field_params();
    FieldSampler s(6, p);
    for (std::uint64_t n = 0; n < 300; ++n) {
        const FieldState f = s.sample(12, n);
        CHECK(field_valid(f));
        for (int j = 0; j <= 6; ++j)
            CHECK(f.at(0, j).empty());
    }
}

TEST_CASE("parallel sweep and parallel batches match the serial reference bitwise")
{
    const Params p = field_params();
    FieldSampler s(7, p);
    for (std::uint64_t n = 0; n < 40; ++n)
        CHECK(s.sample(3, n).cells == s.sample_parallel(3, n).cells);
    const auto a = sample_field_lengths(5, 9, 500, p);
    const auto b = sample_field_lengths_serial(5, 9, 500, p);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        CHECK(a[k].cells == b[k].cells);
    CHECK(sample_field(4, 77, p).cells == sample_field(4, 77, p).cells);
}

TEST_CASE("field sampler validates its inputs")
{
    Params p = field_params();
    CHECK_THROWS_AS(FieldSampler(-1, p), invalid_params);
    CHECK_THROWS_AS(FieldSampler(kMaxT + 1, p), invalid_params);
    Params short_x = p;
    short_x.x.resize(3);
    CHECK_THROWS_AS(FieldSampler(3, short_x), invalid_params);
    Params bad = p;
    bad.q = rat("3/2");
    CHECK_THROWS_AS(FieldSampler(2, bad), invalid_params);
    CHECK_THROWS_AS(cell_stream(Domain::field, std::uint64_t{1} << 44, 0, 0), std::out_of_range);
    CHECK(cell_stream(Domain::field, 1, 2, 3) != cell_stream(Domain::ds6v, 1, 2, 3));
    CHECK(cell_stream(Domain::field, 1, 2, 3) != cell_stream(Domain::field, 1, 3, 2));
}

TEST_CASE("path measure equals the field marginal at T = 2")
{
    compare_path_marginals(2, 2, 2);
}

TEST_CASE("path measure equals the field marginal at T = 3 on small partitions")
{
    compare_path_marginals(3, 1, 2);
}

TEST_CASE("path measure: trivial path and the hook around the first corner")
{
    const Params p = field_params();
    CHECK(path_measure({0, ""}, {Partition{}}, p) == 1);
    CHECK(path_measure({0, "UU"}, {Partition{}, Partition{}, Partition{}}, p) == 1);
    CHECK(path_measure({0, "U"}, {Partition{}, Partition{1}}, p) == 0);
    // Only single rows follow the empty corner.
    Q total = 0;
    for (int k = 0; k <= 40; ++k)
        total += path_measure({1, "L"}, {k ? Partition{k} : Partition{}, Partition{}}, p);
    const Q r = (p.x[1] - p.s) / (1 - p.s * p.x[1]);
    CHECK(total <= 1);
    CHECK(1 - total < oracle::power(r, 40));
    CHECK(path_measure({1, "L"}, {Partition{1, 1}, Partition{}}, p) == 0);
}

TEST_CASE("normalization: trivial, single corner and order independence")
{
    const Params p = field_params();
    CHECK(normalization({0, ""}, p) == 1);
    CHECK(normalization({0, "UUU"}, p) == 1);
    CHECK(normalization({1, "L"}, p) == cauchy_factor(p.x[0], p.x[1], p));
    const CaudateZigzagPath stair{2, "LL"};
    CHECK(normalization(stair, p) == cauchy_factor(p.x[0], p.x[1], p) *
                                         cauchy_factor(p.x[0], p.x[2], p) *
                                         cauchy_factor(p.x[1], p.x[2], p));
    for (const auto& path : all_paths(4)) {
        const Q expect = test_region(path, p);
        CHECK(region_product(path, p) == expect);
        for (std::uint64_t seed = 0; seed < 6; ++seed)
            CHECK(normalization(path, p, seed) == expect);
    }
}

TEST_CASE("paths reject malformed input")
{
    const Params p = field_params();
    CHECK_THROWS_AS(CaudateZigzagPath({1, "U"}).validate(), invalid_path);
    CHECK_THROWS_AS(CaudateZigzagPath({1, "LL"}).validate(), invalid_path);
    CHECK_THROWS_AS(CaudateZigzagPath({1, "X"}).validate(), invalid_path);
    CHECK_THROWS_AS(CaudateZigzagPath({-1, ""}).validate(), invalid_path);
    CHECK_THROWS_AS(path_measure({1, "L"}, {Partition{}}, p), invalid_path);
    Params short_x = p;
    short_x.x.resize(2);
    CHECK_THROWS_AS(normalization({2, "LL"}, short_x), invalid_params);
}
