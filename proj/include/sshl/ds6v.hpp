#pragma once

#include "sshl/field.hpp"
#include "sshl/numeric.hpp"
#include "sshl/random.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace sshl {

using HeightField = Triangle<int>;

struct BC {
    Q b;
    Q c;
};

// b_ij = q(1 - x_{i-1}x_j)/(1 - q x_{i-1}x_j), c_ij = (1 - x_{i-1}x_j)/(1 - q x_{i-1}x_j).
BC b_c_coeffs(int i, int j, const Params& p);

// h(0, j) = 0 and unit steps along both axes.
bool heights_valid(const HeightField& h);

// Anti-diagonal sweep of the length tables; cell (i, j) uses (x_{i-1}, x_j).
class DS6VSampler {
public:
    DS6VSampler(int T, Params p);

    int T() const { return T_; }
    HeightField sample(std::uint64_t seed, std::uint64_t sample_index) const;
    // Same output as sample(); cells of an anti-diagonal run in parallel.
    HeightField sample_parallel(std::uint64_t seed, std::uint64_t sample_index) const;

private:
    // Offsets over the south-west height with their law; one table per input pattern.
    struct CellTable {
        std::vector<int> offsets;
        Categorical dist;
    };

    void fill(HeightField& h, int i, int j, std::uint64_t seed, std::uint64_t sample_index) const;

    int T_;
    Params params_;
    // Bulk pattern 2*(l_lambda - l_kappa) + (l_mu - l_kappa); corner 2*parity + (l_mu - l_kappa).
    std::vector<std::array<CellTable, 4>> tables_;
};

HeightField ds6v_sample(int T, std::uint64_t seed, const Params& p);
std::vector<HeightField> ds6v_sample_batch(int T, std::uint64_t seed, std::uint64_t count,
                                           const Params& p);

// Edge occupancies of the up-right path ensemble.
//   vertical.at(i, j), 1 <= i <= j: a path crosses level j + 1/2 in column i.
//   horizontal.at(i, j), 0 <= i < j: a path leaves vertex (i, j) to the right; column 0
//   feeds one path into every row.
struct PathEnsemble {
    Triangle<int> vertical;
    Triangle<int> horizontal;
};

// Throws inconsistent_heights when a step leaves {0,1}.
PathEnsemble paths_from_heights(const HeightField& h);
// Bulk vertices conserve paths; throws inconsistent_heights otherwise.
HeightField heights_from_paths(const PathEnsemble& e);

// Particle y at time t occupies site y in 1..t; sites[y-1] is the occupation.
struct ParticleState {
    int t = 0;
    std::vector<int> sites;

    int count() const;
    // Occupied sites, largest first.
    std::vector<int> positions() const;
    // N_x(t) = number of particles at sites >= x, for x = 1..t.
    std::vector<int> currents() const;
    bool operator==(const ParticleState&) const = default;
};

// xi_y(t) = 1 - (h(t-y+1, t) - h(t-y, t)) for 1 <= y <= t <= T.
ParticleState particles_from_heights(const HeightField& h, int t);

// One step t -> t+1, resolving particles from the largest site down. A free particle in
// column a = t+1-y jumps to y+1 with c_{a,t+1}; otherwise, or when the particle to its
// right lands on y+1, it travels left. A travelling particle stops at an empty column a'
// with 1-b_{a',t+1}, at site t+2-a', and displaces the next particle it meets. Site 1 is
// fed by the corner column t+1: with t-N(t) even an arrival lands and an empty corner
// creates a particle with c_{t+1,t+1}; with t-N(t) odd an arrival lands with 1-b_{t+1,t+1}
// and is ejected otherwise.
ParticleState particle_step(const ParticleState& s, const Params& p, RandomSource& rng);
// Exact law of particle_step, keyed by the occupation vector.
std::map<std::vector<int>, Q> particle_step_law(const ParticleState& s, const Params& p);

// Trajectory at times 0..T from the empty state, one stream per time step.
std::vector<ParticleState> particle_trajectory(int T, std::uint64_t seed,
                                               std::uint64_t sample_index, const Params& p);

} // namespace sshl
