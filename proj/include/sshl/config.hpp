#pragma once

#include "sshl/identities.hpp"
#include "sshl/numeric.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sshl {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rationals are strings, e.g. {"q":"1/3","s":"-1/2","u":"1/2","x":["1/4"],"seed":7,"T":8,"cap":30}.
struct RunConfig {
    Q q{1, 3};
    Q s{-1, 2};
    Q u{1, 2};
    // Empty means x_i = 1/(4+i).
    std::vector<Q> x;
    std::uint64_t seed = 7;
    int T = 8;
    int cap = 30;

    // Parameters with x_0..x_T; throws config_error when explicit x is too short.
    Params params(int T) const;
};

// Throws config_error on malformed documents or unknown keys.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

// One JSON object per report, without a trailing newline.
std::string report_json(const CheckReport& r);

} // namespace sshl
