#include "sshl/field.hpp"

#include "sshl/functions.hpp"
#include "sshl/random.hpp"

#include <omp.h>

namespace sshl {

std::uint64_t cell_stream(Domain d, std::uint64_t sample, int i, int j)
{
    if (i < 0 || j < 0 || i > kMaxT || j > kMaxT || sample >= (std::uint64_t{1} << 44))
        throw std::out_of_range("cell_stream index out of range");
    return (static_cast<std::uint64_t>(d) << 60) | (sample << 16) |
           (static_cast<std::uint64_t>(i) << 8) | static_cast<std::uint64_t>(j);
}

bool field_valid(const FieldState& f)
{
    for (int j = 0; j <= f.T; ++j)
        if (!f.at(0, j).empty())
            return false;
    for (int j = 0; j <= f.T; ++j)
        for (int i = 0; i <= j; ++i) {
            if (j < f.T && !interlaces(f.at(i, j), f.at(i, j + 1)))
                return false;
            if (i < j && !interlaces(f.at(i, j), f.at(i + 1, j)))
                return false;
        }
    return true;
}

Triangle<int> field_lengths(const FieldState& f)
{
    Triangle<int> out(f.T);
    for (std::size_t k = 0; k < f.cells.size(); ++k)
        out.cells[k] = f.cells[k].length();
    return out;
}

FieldSampler::FieldSampler(int T, Params p) : T_(T), params_(std::move(p))
{
    if (T < 0 || T > kMaxT)
        throw invalid_params("T must lie in [0, " + std::to_string(kMaxT) + "]");
    validate(params_, Mode::probabilistic);
    if (static_cast<int>(params_.x.size()) < T + 1)
        throw invalid_params("the field needs spectral values x_0..x_T");
    kernels_.reserve(Triangle<int>::index(0, T + 1));
    for (int j = 0; j <= T; ++j)
        for (int i = 0; i <= j; ++i) {
            const Q& x = params_.x[i == 0 ? 0 : i - 1];
            const Q& y = params_.x[j];
            if (i >= 1 && !admissible(x, y, params_))
                throw not_admissible("cell (" + std::to_string(i) + "," + std::to_string(j) +
                                     ") has an inadmissible spectral pair");
            kernels_.emplace_back(x, y, params_);
        }
}

void FieldSampler::fill(FieldState& f, int i, int j, std::uint64_t seed,
                        std::uint64_t sample_index)
{
    if (i == 0) {
        f.at(0, j) = Partition{};
        return;
    }
    RandomSource rng(seed, cell_stream(Domain::field, sample_index, i, j));
    ColumnKernel& k = kernels_[Triangle<int>::index(i, j)];
    if (i == j)
        f.at(i, j) = boundary_forward(f.at(i - 1, i - 1), f.at(i - 1, i), k, rng);
    else
        f.at(i, j) = bulk_forward(f.at(i - 1, j - 1), f.at(i, j - 1), f.at(i - 1, j), k, rng);
}

FieldState FieldSampler::sample(std::uint64_t seed, std::uint64_t sample_index)
{
    FieldState f(T_);
    for (int d = 0; d <= 2 * T_; ++d)
        for (int i = 0; i <= d / 2; ++i)
            if (d - i <= T_)
                fill(f, i, d - i, seed, sample_index);
    return f;
}

FieldState FieldSampler::sample_parallel(std::uint64_t seed, std::uint64_t sample_index)
{
    FieldState f(T_);
    for (int d = 0; d <= 2 * T_; ++d) {
        const int lo = std::max(0, d - T_);
        const int hi = d / 2;
        // Cells on one anti-diagonal read only earlier diagonals and own their kernels.
#pragma omp parallel for schedule(dynamic)
        for (int i = lo; i <= hi; ++i)
            fill(f, i, d - i, seed, sample_index);
    }
    return f;
}

FieldState sample_field(int T, std::uint64_t seed, const Params& p)
{
    FieldSampler s(T, p);
    return s.sample(seed, 0);
}

std::vector<Triangle<int>> sample_field_lengths(int T, std::uint64_t seed, std::uint64_t count,
                                                const Params& p)
{
    std::vector<Triangle<int>> out(count);
    FieldSampler proto(T, p);
#pragma omp parallel
    {
        FieldSampler local = proto;
#pragma omp for schedule(static)
        for (std::int64_t n = 0; n < static_cast<std::int64_t>(count); ++n)
            out[n] = field_lengths(local.sample(seed, static_cast<std::uint64_t>(n)));
    }
    return out;
}

std::vector<Triangle<int>> sample_field_lengths_serial(int T, std::uint64_t seed,
                                                       std::uint64_t count, const Params& p)
{
    std::vector<Triangle<int>> out;
    out.reserve(count);
    FieldSampler s(T, p);
    for (std::uint64_t n = 0; n < count; ++n)
        out.push_back(field_lengths(s.sample(seed, n)));
    return out;
}

void CaudateZigzagPath::validate() const
{
    if (n < 0)
        throw invalid_path("path start must be on the diagonal with n >= 0");
    int i = n;
    for (char c : steps) {
        if (c == 'L')
            --i;
        else if (c != 'U')
            throw invalid_path(std::string("unknown step '") + c + "'");
        if (i < 0)
            throw invalid_path("path leaves the half-space");
    }
    if (i != 0)
        throw invalid_path("path must end on the column i = 0");
}

std::vector<std::pair<int, int>> CaudateZigzagPath::vertices() const
{
    validate();
    std::vector<std::pair<int, int>> out{{n, n}};
    int i = n;
    int j = n;
    for (char c : steps) {
        if (c == 'L')
            --i;
        else
            ++j;
        out.emplace_back(i, j);
    }
    return out;
}

int CaudateZigzagPath::top() const
{
    validate();
    int j = n;
    for (char c : steps)
        j += c == 'U';
    return j;
}

namespace {

void require_spectral(const CaudateZigzagPath& path, const Params& p)
{
    if (static_cast<int>(p.x.size()) <= path.top())
        throw invalid_params("path needs spectral values up to its top row");
}

} // namespace

Q region_product(const CaudateZigzagPath& path, const Params& p)
{
    require_spectral(path, p);
    Q out = 1;
    const auto v = path.vertices();
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
        if (v[k + 1].first == v[k].first)
            continue;
        // A left step out of column a at row j bounds the cells (a, a..j).
        const int a = v[k].first;
        for (int b = a; b <= v[k].second; ++b)
            out *= cauchy_factor(p.x[a - 1], p.x[b], p);
    }
    return out;
}

Q normalization(const CaudateZigzagPath& path, const Params& p, std::uint64_t order_seed)
{
    require_spectral(path, p);
    RandomSource rng(order_seed, 0);
    int n = path.n;
    std::string s = path.steps;
    Q out = 1;
    while (n > 0) {
        // Move -1 is (b); move k >= 0 is (a) on the corner s[k] s[k+1] = "UL".
        std::vector<int> moves;
        if (!s.empty() && s[0] == 'L')
            moves.push_back(-1);
        for (std::size_t k = 0; k + 1 < s.size(); ++k)
            if (s[k] == 'U' && s[k + 1] == 'L')
                moves.push_back(static_cast<int>(k));
        if (moves.empty())
            throw invalid_path("no contraction move applies");
        const int m = order_seed == 0 ? moves.front() : moves[rng.next() % moves.size()];
        if (m < 0) {
            out *= cauchy_factor(p.x[n - 1], p.x[n], p);
            --n;
            s[0] = 'U';
            continue;
        }
        int i = n;
        int j = n;
        for (int k = 0; k <= m; ++k) {
            if (s[k] == 'L')
                --i;
            else
                ++j;
        }
        // (i, j) is the corner vertex between the up and the left step.
        out *= cauchy_factor(p.x[i - 1], p.x[j], p);
        s[m] = 'L';
        s[m + 1] = 'U';
    }
    return out;
}

Q path_measure(const CaudateZigzagPath& path, const std::vector<Partition>& parts,
               const Params& p)
{
    require_spectral(path, p);
    const auto v = path.vertices();
    if (parts.size() != v.size())
        throw invalid_path("one partition per path vertex is required");
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k].first == 0 && !parts[k].empty())
            return 0;
    Q w = G(parts[0], p.x[path.n], p);
    for (std::size_t k = 0; k + 1 < v.size() && w != 0; ++k) {
        const auto [i, j] = v[k];
        if (v[k + 1].first == i)
            w *= g_one_row(parts[k], parts[k + 1], p.x[j + 1], p);
        else
            w *= f_one_row(parts[k + 1], parts[k], p.x[i - 1], p);
    }
    if (w == 0)
        return 0;
    return w / normalization(path, p);
}

} // namespace sshl
