#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sshl {

using Q = mpq_class;

struct invalid_params : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct not_admissible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct non_stochastic : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// q, s, u are global; x[i] is the spectral parameter attached to index i.
struct Params {
    Q q;
    Q s;
    Q u;
    std::vector<Q> x;
};

enum class Mode { identity, probabilistic };

// Accepts "a", "-a/b" and decimal "0.25"; throws invalid_params otherwise.
Q parse_rational(std::string_view text);
std::string to_string(const Q& v);
double to_double(const Q& v);

Q pow(const Q& base, unsigned e);
Q checked_div(const Q& num, const Q& den);

// Throws invalid_params when the mode constraints fail.
void validate(const Params& p, Mode mode);

bool admissible(const Q& x, const Q& y, const Params& p);
// (x-s)(y-s)/((1-sx)(1-sy))
Q convergence_ratio(const Q& x, const Q& y, const Params& p);
// (1-qxy)/(1-xy)
Q cauchy_factor(const Q& x, const Q& y, const Params& p);

} // namespace sshl
