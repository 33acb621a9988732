#pragma once

// Runnable invariant suites. Every suite is seeded; `samples` drives the random
// fuzz counts (pairs, triples, walks).

#include <cstdint>
#include <string>
#include <vector>

#include "gsk/report.hpp"

namespace gsk {

struct VerifyConfig {
  std::string suite = "all";  // groups | cocycles | orbits | reps | transforms | all
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
};

const std::vector<std::string>& suite_names();  // without "all"

Report verify_groups(std::uint64_t seed, std::size_t samples);
Report verify_cocycles(std::uint64_t seed, std::size_t samples);
Report verify_orbits(std::uint64_t seed, std::size_t samples);
Report verify_reps(std::uint64_t seed, std::size_t samples);
Report verify_transforms(std::uint64_t seed, std::size_t samples);

// Throws Domain for an unknown suite and InvalidSampleCount for samples == 0.
Report run_verify(const VerifyConfig& cfg);

// {suite, seed, checks:[{name, defect, tol, pass}], pass}
std::string report_json(const Report& r);
// fixed-width table, one line per check
std::string report_table(const Report& r);

}  // namespace gsk
