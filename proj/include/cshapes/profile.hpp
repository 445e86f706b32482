#ifndef CSHAPES_PROFILE_HPP
#define CSHAPES_PROFILE_HPP

#include <chrono>
#include <cstdint>

#include "cshapes/analyze.hpp"
#include "cshapes/problems.hpp"

namespace cshapes {

struct ProfileSummary {
  int samples = 0;
  int timeouts = 0;
  // Average and max cover samples that finished in time. The median ranks
  // timeouts above everything, so it is infinite once half the samples time out.
  double averageMs = 0;
  double medianMs = 0;
  double maxMs = 0;
};

ProfileSummary profile(SizeClass cls, int samples, std::uint64_t seed, std::chrono::milliseconds timeout,
                       const AnalyzeOptions& opts = {});

}  // namespace cshapes

#endif  // CSHAPES_PROFILE_HPP
