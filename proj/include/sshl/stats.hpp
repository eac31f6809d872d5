#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace sshl {

struct ChiSquareResult {
    double statistic = 0;
    int df = 0;
    double p_value = 1;
    int bins = 0;
};

// Two-sample chi-square homogeneity test on aligned bin counts. Bins whose expected
// count is below 5 in either sample are pooled into one bin before testing.
ChiSquareResult chi_square_two_sample(const std::vector<std::uint64_t>& a,
                                      const std::vector<std::uint64_t>& b);

template <class K>
ChiSquareResult chi_square_two_sample(const std::map<K, std::uint64_t>& a,
                                      const std::map<K, std::uint64_t>& b)
{
    std::map<K, std::pair<std::uint64_t, std::uint64_t>> joint;
    for (const auto& [k, n] : a)
        joint[k].first += n;
    for (const auto& [k, n] : b)
        joint[k].second += n;
    std::vector<std::uint64_t> ca, cb;
    for (const auto& [k, n] : joint) {
        ca.push_back(n.first);
        cb.push_back(n.second);
    }
    return chi_square_two_sample(ca, cb);
}

} // namespace sshl
