#pragma once

#include "sshl/numeric.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace sshl {

// Same (seed, stream) gives the same sequence of 64-bit words.
class RandomSource {
public:
    RandomSource(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next() { return engine_(); }
    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
};

// Exact sampler over a finite distribution with rational weights.
// A uniform variate is refined 64 bits at a time until its position
// relative to every cumulative boundary is decided.
class Categorical {
public:
    Categorical() = default;
    // Throws non_stochastic unless the entries are >= 0 and sum to exactly 1.
    explicit Categorical(std::vector<Q> probs);

    std::size_t sample(RandomSource& rng) const;
    std::size_t size() const { return probs_.size(); }
    const Q& prob(std::size_t i) const { return probs_[i]; }
    const std::vector<Q>& probs() const { return probs_; }

private:
    bool below(std::size_t k, std::uint64_t first, std::vector<std::uint64_t>& extra,
               RandomSource& rng) const;

    std::vector<Q> probs_;
    std::vector<Q> cum_;
    // floor(cum_[k] * 2^64) and whether that product is an integer.
    std::vector<unsigned __int128> floor64_;
    std::vector<bool> exact64_;
};

std::size_t sample_categorical(const std::vector<Q>& probs, RandomSource& rng);

// Returns true with probability p, 0 <= p <= 1.
bool sample_bernoulli(const Q& p, RandomSource& rng);

} // namespace sshl
