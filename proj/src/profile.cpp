#include "cshapes/profile.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace cshapes {

ProfileSummary profile(SizeClass cls, int samples, std::uint64_t seed, std::chrono::milliseconds timeout,
                       const AnalyzeOptions& opts) {
  using Clock = std::chrono::steady_clock;
  ProfileSummary s;
  s.samples = samples;
  Rng rng(seed);
  auto cfg = GeneratorConfig::forClass(cls);
  std::vector<double> times;
  for (int i = 0; i < samples; ++i) {
    Problem p = randomProblem(cfg, rng);
    AnalyzeOptions o = opts;
    auto start = Clock::now();
    o.limits.deadline = start + timeout;
    Analysis a = analyze(p.shapes, p.query, o);
    auto end = Clock::now();
    if (!a.unknown.empty() && end >= *o.limits.deadline) {
      ++s.timeouts;
      continue;
    }
    times.push_back(std::chrono::duration<double, std::milli>(end - start).count());
  }
  std::sort(times.begin(), times.end());
  if (!times.empty()) {
    s.averageMs = std::accumulate(times.begin(), times.end(), 0.0) / static_cast<double>(times.size());
    s.maxMs = times.back();
  }
  times.resize(static_cast<std::size_t>(samples), std::numeric_limits<double>::infinity());
  if (samples > 0) {
    auto n = static_cast<std::size_t>(samples);
    s.medianMs = n % 2 ? times[n / 2] : (times[n / 2 - 1] + times[n / 2]) / 2;
  }
  return s;
}

}  // namespace cshapes
