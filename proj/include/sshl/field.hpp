#pragma once

#include "sshl/numeric.hpp"
#include "sshl/partition.hpp"
#include "sshl/transitions.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sshl {

struct invalid_path : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Sub-stream domains; a cell stream is (domain << 60) | (sample << 16) | (i << 8) | j.
enum class Domain : std::uint64_t { field = 1, ds6v = 2, particles = 3 };
std::uint64_t cell_stream(Domain d, std::uint64_t sample, int i, int j);

// Largest T accepted by the samplers; cell indices must fit the 8-bit stream slots.
inline constexpr int kMaxT = 255;

// Values on the lattice points 0 <= i <= j <= T, stored by anti-diagonal-free
// row-major index j(j+1)/2 + i.
template <class V>
struct Triangle {
    int T = 0;
    std::vector<V> cells;

    Triangle() = default;
    explicit Triangle(int t) : T(t), cells(static_cast<std::size_t>(t + 1) * (t + 2) / 2) {}
    static std::size_t index(int i, int j) { return static_cast<std::size_t>(j) * (j + 1) / 2 + i; }
    const V& at(int i, int j) const { return cells.at(index(i, j)); }
    V& at(int i, int j) { return cells.at(index(i, j)); }
};

using FieldState = Triangle<Partition>;

// Empty first column and both interlacing families.
bool field_valid(const FieldState& f);
Triangle<int> field_lengths(const FieldState& f);

// Forward sweep with the bulk operator at i < j and the boundary operator at i = j.
// Cell (i, j) uses (x_{i-1}, x_j). Holds one kernel cache per cell.
class FieldSampler {
public:
    // Requires probabilistic parameters, x_0..x_T, and admissible cell pairs.
    FieldSampler(int T, Params p);

    int T() const { return T_; }
    const Params& params() const { return params_; }

    FieldState sample(std::uint64_t seed, std::uint64_t sample_index);
    // Same output as sample(); the cells of each anti-diagonal run in parallel.
    FieldState sample_parallel(std::uint64_t seed, std::uint64_t sample_index);

private:
    void fill(FieldState& f, int i, int j, std::uint64_t seed, std::uint64_t sample_index);

    int T_;
    Params params_;
    std::vector<ColumnKernel> kernels_;
};

FieldState sample_field(int T, std::uint64_t seed, const Params& p);

// Lengths of `count` independent fields, sample indices 0..count-1.
std::vector<Triangle<int>> sample_field_lengths(int T, std::uint64_t seed, std::uint64_t count,
                                                const Params& p);
std::vector<Triangle<int>> sample_field_lengths_serial(int T, std::uint64_t seed,
                                                       std::uint64_t count, const Params& p);

// Starts at (n, n) and takes steps 'U' (+e2) or 'L' (-e1); ends on the column i = 0.
struct CaudateZigzagPath {
    int n = 0;
    std::string steps;

    // Throws invalid_path.
    void validate() const;
    std::vector<std::pair<int, int>> vertices() const;
    // Largest row index touched.
    int top() const;
};

// G_{lambda(n,n)}(x_n) times g(x_{j+1}) per up step from row j and f(x_{i-1}) per left
// step from column i, divided by the normalization. `parts` follows vertices().
Q path_measure(const CaudateZigzagPath& path, const std::vector<Partition>& parts,
               const Params& p);

// Contracts the path to a trivial one. Move (a) swaps an up-left corner at (i, j) for a
// left-up corner and gains Pi(x_{i-1}, x_j); move (b) retracts a leading left step at the
// diagonal and gains Pi(x_{n-1}, x_n). order_seed 0 takes the first available move;
// any other value picks moves pseudo-randomly.
Q normalization(const CaudateZigzagPath& path, const Params& p, std::uint64_t order_seed = 0);
// Product of Pi(x_{a-1}, x_b) over the cells enclosed by the path and the diagonal.
Q region_product(const CaudateZigzagPath& path, const Params& p);

} // namespace sshl
