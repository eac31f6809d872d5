#include "sshl/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <stdexcept>

namespace sshl {

ChiSquareResult chi_square_two_sample(const std::vector<std::uint64_t>& a,
                                      const std::vector<std::uint64_t>& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("chi_square_two_sample needs aligned bins");
    double na = 0;
    double nb = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        na += static_cast<double>(a[k]);
        nb += static_cast<double>(b[k]);
    }
    if (na == 0 || nb == 0)
        throw std::invalid_argument("chi_square_two_sample needs two non-empty samples");
    const double fa = na / (na + nb);
    const double fb = nb / (na + nb);
    auto small = [&](double ca, double cb) { return std::min(fa, fb) * (ca + cb) < 5; };

    std::vector<std::pair<double, double>> bins;
    std::pair<double, double> pool{0, 0};
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double ca = static_cast<double>(a[k]);
        const double cb = static_cast<double>(b[k]);
        if (ca + cb == 0)
            continue;
        if (small(ca, cb)) {
            pool.first += ca;
            pool.second += cb;
        } else {
            bins.emplace_back(ca, cb);
        }
    }
    if (pool.first + pool.second > 0) {
        if (small(pool.first, pool.second) && !bins.empty()) {
            auto it = std::min_element(bins.begin(), bins.end(), [](const auto& l, const auto& r) {
                return l.first + l.second < r.first + r.second;
            });
            it->first += pool.first;
            it->second += pool.second;
        } else {
            bins.push_back(pool);
        }
    }

    ChiSquareResult r;
    r.bins = static_cast<int>(bins.size());
    r.df = r.bins - 1;
    if (r.df < 1)
        return r;
    for (const auto& [ca, cb] : bins) {
        const double ea = fa * (ca + cb);
        const double eb = fb * (ca + cb);
        r.statistic += (ca - ea) * (ca - ea) / ea + (cb - eb) * (cb - eb) / eb;
    }
    const boost::math::chi_squared dist(r.df);
    r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
    return r;
}

} // namespace sshl
