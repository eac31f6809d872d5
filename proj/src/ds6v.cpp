#include "sshl/ds6v.hpp"

#include "sshl/transitions.hpp"

#include <omp.h>

namespace sshl {

BC b_c_coeffs(int i, int j, const Params& p)
{
    if (i < 1 || j < i)
        throw std::invalid_argument("b_c_coeffs needs 1 <= i <= j");
    if (static_cast<int>(p.x.size()) <= j)
        throw invalid_params("b_c_coeffs needs x_" + std::to_string(j));
    const Q z = p.x[i - 1] * p.x[j];
    const Q c = checked_div(1 - z, 1 - p.q * z);
    return {p.q * c, c};
}

bool heights_valid(const HeightField& h)
{
    for (int j = 0; j <= h.T; ++j) {
        if (h.at(0, j) != 0)
            return false;
        for (int i = 1; i <= j; ++i) {
            const int dx = h.at(i, j) - h.at(i - 1, j);
            if (dx != 0 && dx != 1)
                return false;
            if (i < j) {
                const int dy = h.at(i, j) - h.at(i, j - 1);
                if (dy != 0 && dy != 1)
                    return false;
            }
        }
    }
    return true;
}

DS6VSampler::DS6VSampler(int T, Params p) : T_(T), params_(std::move(p))
{
    if (T < 0 || T > kMaxT)
        throw invalid_params("T must lie in [0, " + std::to_string(kMaxT) + "]");
    validate(params_, Mode::probabilistic);
    if (static_cast<int>(params_.x.size()) < T + 1)
        throw invalid_params("the vertex model needs spectral values x_0..x_T");
    tables_.resize(Triangle<int>::index(0, T + 1));
    for (int j = 1; j <= T; ++j)
        for (int i = 1; i <= j; ++i) {
            const Q& x = params_.x[i - 1];
            const Q& y = params_.x[j];
            if (!admissible(x, y, params_))
                throw not_admissible("cell (" + std::to_string(i) + "," + std::to_string(j) +
                                     ") has an inadmissible spectral pair");
            auto& cell = tables_[Triangle<int>::index(i, j)];
            for (int a = 0; a <= 1; ++a)
                for (int m = 0; m <= 1; ++m) {
                    // Bulk: a = l_lambda - l_kappa at l_kappa = 0. Corner: a = parity of l_kappa.
                    const LengthTable t =
                        i == j ? length_transition(LengthKind::boundary, a, 0, a + m, x, y, params_)
                               : length_transition(LengthKind::bulk, 0, a, m, x, y, params_);
                    CellTable& ct = cell[2 * a + m];
                    for (int v : t.values)
                        ct.offsets.push_back(v - (i == j ? a : 0));
                    ct.dist = Categorical(t.probs);
                }
        }
}

void DS6VSampler::fill(HeightField& h, int i, int j, std::uint64_t seed,
                       std::uint64_t sample_index) const
{
    if (i == 0) {
        h.at(0, j) = 0;
        return;
    }
    RandomSource rng(seed, cell_stream(Domain::ds6v, sample_index, i, j));
    const int k = h.at(i - 1, j - 1);
    const int m = h.at(i - 1, j) - k;
    const int a = i == j ? k % 2 : h.at(i, j - 1) - k;
    const CellTable& ct = tables_[Triangle<int>::index(i, j)][2 * a + m];
    h.at(i, j) = k + ct.offsets[ct.dist.sample(rng)];
}

HeightField DS6VSampler::sample(std::uint64_t seed, std::uint64_t sample_index) const
{
    HeightField h(T_);
    for (int d = 0; d <= 2 * T_; ++d)
        for (int i = 0; i <= d / 2; ++i)
            if (d - i <= T_)
                fill(h, i, d - i, seed, sample_index);
    return h;
}

HeightField DS6VSampler::sample_parallel(std::uint64_t seed, std::uint64_t sample_index) const
{
    HeightField h(T_);
    for (int d = 0; d <= 2 * T_; ++d) {
        const int lo = std::max(0, d - T_);
        const int hi = d / 2;
#pragma omp parallel for schedule(static)
        for (int i = lo; i <= hi; ++i)
            fill(h, i, d - i, seed, sample_index);
    }
    return h;
}

HeightField ds6v_sample(int T, std::uint64_t seed, const Params& p)
{
    return DS6VSampler(T, p).sample(seed, 0);
}

std::vector<HeightField> ds6v_sample_batch(int T, std::uint64_t seed, std::uint64_t count,
                                           const Params& p)
{
    const DS6VSampler s(T, p);
    std::vector<HeightField> out(count);
#pragma omp parallel for schedule(static)
    for (std::int64_t n = 0; n < static_cast<std::int64_t>(count); ++n)
        out[n] = s.sample(seed, static_cast<std::uint64_t>(n));
    return out;
}

PathEnsemble paths_from_heights(const HeightField& h)
{
    PathEnsemble e{Triangle<int>(h.T), Triangle<int>(h.T)};
    for (int j = 0; j <= h.T; ++j) {
        if (h.at(0, j) != 0)
            throw inconsistent_heights("h(0, j) must vanish");
        if (j >= 1)
            e.horizontal.at(0, j) = 1;
        for (int i = 1; i <= j; ++i) {
            const int v = h.at(i, j) - h.at(i - 1, j);
            if (v != 0 && v != 1)
                throw inconsistent_heights("horizontal height step outside {0,1}");
            e.vertical.at(i, j) = v;
            if (i < j) {
                const int hz = 1 - (h.at(i, j) - h.at(i, j - 1));
                if (hz != 0 && hz != 1)
                    throw inconsistent_heights("vertical height step outside {0,1}");
                e.horizontal.at(i, j) = hz;
            }
        }
    }
    return e;
}

HeightField heights_from_paths(const PathEnsemble& e)
{
    const int T = e.vertical.T;
    HeightField h(T);
    for (int j = 0; j <= T; ++j) {
        if (j >= 1 && e.horizontal.at(0, j) != 1)
            throw inconsistent_heights("every row starts with one entering path");
        int acc = 0;
        for (int i = 1; i <= j; ++i) {
            acc += e.vertical.at(i, j);
            h.at(i, j) = acc;
            if (i < j && e.vertical.at(i, j - 1) + e.horizontal.at(i - 1, j) !=
                             e.vertical.at(i, j) + e.horizontal.at(i, j))
                throw inconsistent_heights("paths are not conserved at a bulk vertex");
        }
    }
    return h;
}

} // namespace sshl
