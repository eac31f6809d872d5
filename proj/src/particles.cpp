#include "sshl/ds6v.hpp"

#include <algorithm>

namespace sshl {

int ParticleState::count() const
{
    return static_cast<int>(std::count(sites.begin(), sites.end(), 1));
}

std::vector<int> ParticleState::positions() const
{
    std::vector<int> out;
    for (int y = t; y >= 1; --y)
        if (sites[y - 1])
            out.push_back(y);
    return out;
}

std::vector<int> ParticleState::currents() const
{
    std::vector<int> out(t, 0);
    int acc = 0;
    for (int y = t; y >= 1; --y) {
        acc += sites[y - 1];
        out[y - 1] = acc;
    }
    return out;
}

ParticleState particles_from_heights(const HeightField& h, int t)
{
    if (t < 0 || t > h.T)
        throw std::out_of_range("particles_from_heights: time outside the field");
    ParticleState s;
    s.t = t;
    s.sites.resize(t);
    for (int y = 1; y <= t; ++y)
        s.sites[y - 1] = 1 - (h.at(t - y + 1, t) - h.at(t - y, t));
    return s;
}

namespace {

// Runs one step; choose(p) returns true with probability p.
template <class Choose>
std::vector<int> step(const ParticleState& s, const Params& p, Choose&& choose)
{
    const int t = s.t;
    if (static_cast<int>(p.x.size()) <= t + 1)
        throw invalid_params("particle step needs x_" + std::to_string(t + 1));
    std::vector<int> next(t + 1, 0);
    // A particle travelling left enters column a from column a-1.
    bool moving = false;
    for (int a = 1; a <= t; ++a) {
        const int y = t + 1 - a;
        const bool here = s.sites[y - 1] == 1;
        const BC bc = b_c_coeffs(a, t + 1, p);
        if (here && moving) {
            next[y] = 1;
        } else if (here) {
            if (choose(bc.c))
                next[y] = 1;
            else
                moving = true;
        } else if (moving) {
            if (choose(1 - bc.b)) {
                next[y] = 1;
                moving = false;
            }
        }
    }
    const BC corner = b_c_coeffs(t + 1, t + 1, p);
    if ((t - s.count()) % 2 == 0) {
        if (moving || choose(corner.c))
            next[0] = 1;
    } else if (moving && choose(1 - corner.b)) {
        next[0] = 1;
    }
    return next;
}

struct Branch {
    Q p;
};

} // namespace

ParticleState particle_step(const ParticleState& s, const Params& p, RandomSource& rng)
{
    ParticleState out;
    out.t = s.t + 1;
    out.sites = step(s, p, [&](const Q& pr) { return sample_bernoulli(pr, rng); });
    return out;
}

std::map<std::vector<int>, Q> particle_step_law(const ParticleState& s, const Params& p)
{
    std::map<std::vector<int>, Q> law;
    // Depth-first over the Bernoulli choices; a run stops at its first unscripted choice.
    std::vector<std::pair<std::vector<bool>, Q>> stack{{{}, Q(1)}};
    while (!stack.empty()) {
        auto [script, weight] = stack.back();
        stack.pop_back();
        std::size_t used = 0;
        try {
            auto sites = step(s, p, [&](const Q& pr) {
                if (used < script.size())
                    return static_cast<bool>(script[used++]);
                throw Branch{pr};
            });
            law[sites] += weight;
        } catch (const Branch& b) {
            for (bool v : {true, false}) {
                const Q w = weight * (v ? b.p : Q(1 - b.p));
                if (w == 0)
                    continue;
                auto next = script;
                next.push_back(v);
                stack.emplace_back(std::move(next), w);
            }
        }
    }
    return law;
}

std::vector<ParticleState> particle_trajectory(int T, std::uint64_t seed,
                                               std::uint64_t sample_index, const Params& p)
{
    if (T < 0 || T > kMaxT)
        throw invalid_params("T must lie in [0, " + std::to_string(kMaxT) + "]");
    validate(p, Mode::probabilistic);
    std::vector<ParticleState> out{ParticleState{}};
    for (int t = 0; t < T; ++t) {
        RandomSource rng(seed, cell_stream(Domain::particles, sample_index, t, 0));
        out.push_back(particle_step(out.back(), p, rng));
    }
    return out;
}

} // namespace sshl
