#pragma once

#include "sshl/identities.hpp"
#include "sshl/numeric.hpp"

#include <string>
#include <vector>

namespace sshl {

// Generic (q, s) points shared by the verification suite and the tests.
inline constexpr int kFixturePoints = 3;
// q, s from the fixture table, u = 1/2, x_i = 1/(4+i) for i <= 8.
Params fixture_point(int index);

std::vector<std::string> suite_names();

// Runs the named group ("" for all) at one fixture point (-1 for all).
// Each group reports one aggregate line per point, plus one line per truncated sum.
// Throws std::invalid_argument for an unknown name or point.
std::vector<CheckReport> run_suite(const std::string& only, int point);

// Normalization and reversibility of the bulk and boundary operators over partitions with
// parts <= max_part and length <= max_len.
std::vector<CheckReport> transition_reports(const Params& p, int max_part, int max_len,
                                           const std::string& tag = "");
// Folds exact reports into one; passes iff every input passes.
CheckReport aggregate(std::string name, const std::vector<CheckReport>& reports);

} // namespace sshl
