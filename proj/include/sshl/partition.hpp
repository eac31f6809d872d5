#pragma once

#include "sshl/numeric.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sshl {

// Weakly decreasing list of positive parts; the empty list is the empty partition.
class Partition {
public:
    Partition() = default;
    // Throws std::invalid_argument unless parts are positive and weakly decreasing.
    Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // Builds from multiplicities m[1..]; m[0] is ignored.
    static Partition from_multiplicities(const std::vector<int>& m);
    // Accepts "4,4,3,1", "∅" or the empty string.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int first() const { return parts_.empty() ? 0 : parts_.front(); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    // 1-based; zero beyond the length.
    int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
    int mult(int i) const;
    // m[i] for 0 <= i <= upto; m[0] is 0.
    std::vector<int> multiplicities(int upto) const;
    std::string str() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

// mu ≺ lambda: lambda_{i+1} <= mu_i <= lambda_i for all i.
bool interlaces(const Partition& mu, const Partition& lambda);
Partition conjugate(const Partition& lambda);
bool is_conjugate_even(const Partition& lambda);

// prod_i prod_{k=1}^{floor(m_i/2)} (1-q^{2k-1})/(1-s^2 q^{2k-1})
Q b_el(const Partition& mu, const Params& p);

// Unique conjugate-even lambda with kappa ≺ lambda.
Partition even_cover(const Partition& kappa);
// Unique conjugate-even tau with tau ≺ kappa.
Partition even_core(const Partition& kappa);

// All partitions with first part <= max_part and length <= max_len,
// by size ascending, then lexicographically descending.
std::vector<Partition> enumerate(int max_part, int max_len);

// All mu with mu ≺ lambda.
std::vector<Partition> interlacing_below(const Partition& lambda);
// All nu with lambda ≺ nu and nu_1 <= max_first.
std::vector<Partition> interlacing_above(const Partition& lambda, int max_first);

} // namespace sshl
