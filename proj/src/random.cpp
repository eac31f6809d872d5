#include "sshl/random.hpp"

#include <cassert>

namespace sshl {

RandomSource::RandomSource(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream)
{
    // seed_seq mixes (seed, stream) into one 64-bit engine seed; filling the whole
    // engine state through seed_seq would dominate per-cell sampling cost.
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    engine_.seed((static_cast<std::uint64_t>(words[1]) << 32) | words[0]);
}

Categorical::Categorical(std::vector<Q> probs) : probs_(std::move(probs))
{
    if (probs_.empty())
        throw non_stochastic("empty distribution");
    Q acc = 0;
    mpz_class scaled, rem;
    for (const Q& p : probs_) {
        if (p < 0)
            throw non_stochastic("negative probability " + p.get_str());
        acc += p;
        cum_.push_back(acc);
        scaled = acc.get_num() << 64;
        mpz_fdiv_qr(scaled.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), acc.get_den_mpz_t());
        unsigned __int128 f = 0;
        // acc <= 1 keeps the quotient below 2^65.
        if (mpz_sizeinbase(scaled.get_mpz_t(), 2) > 65)
            throw non_stochastic("cumulative mass exceeds 1");
        mpz_class hi = scaled >> 64;
        mpz_class lo = scaled - (hi << 64);
        f = (static_cast<unsigned __int128>(hi.get_ui()) << 64) |
            static_cast<unsigned __int128>(mpz_get_ui(lo.get_mpz_t()));
        floor64_.push_back(f);
        exact64_.push_back(rem == 0);
    }
    if (acc != 1)
        throw non_stochastic("probabilities sum to " + acc.get_str() + ", not 1");
}

bool Categorical::below(std::size_t k, std::uint64_t first, std::vector<std::uint64_t>& extra,
                        RandomSource& rng) const
{
    const unsigned __int128 a = first;
    if (a + 1 <= floor64_[k])
        return true;
    if (exact64_[k] || a > floor64_[k])
        return false;
    // a == floor: the first word straddles the boundary.
    const Q& c = cum_[k];
    mpz_class prefix = first;
    unsigned bits = 64;
    mpz_class lhs, rhs;
    for (std::size_t idx = 0;; ++idx) {
        if (idx == extra.size())
            extra.push_back(rng.next());
        prefix <<= 64;
        prefix += mpz_class(static_cast<unsigned long>(extra[idx]));
        bits += 64;
        rhs = c.get_num() << bits;
        lhs = (prefix + 1) * c.get_den();
        if (lhs <= rhs)
            return true;
        lhs = prefix * c.get_den();
        if (lhs >= rhs)
            return false;
    }
}

std::size_t Categorical::sample(RandomSource& rng) const
{
    if (probs_.size() == 1)
        return 0;
    const std::uint64_t first = rng.next();
    std::vector<std::uint64_t> extra;
    for (std::size_t k = 0; k + 1 < probs_.size(); ++k) {
        if (probs_[k] == 0)
            continue;
        if (below(k, first, extra, rng))
            return k;
    }
    std::size_t last = probs_.size() - 1;
    while (probs_[last] == 0)
        --last;
    return last;
}

std::size_t sample_categorical(const std::vector<Q>& probs, RandomSource& rng)
{
    return Categorical(probs).sample(rng);
}

bool sample_bernoulli(const Q& p, RandomSource& rng)
{
    if (p == 1)
        return true;
    if (p == 0)
        return false;
    return Categorical({p, Q(1 - p)}).sample(rng) == 0;
}

} // namespace sshl
