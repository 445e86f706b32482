#include "cshapes/analyze.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace cshapes {

namespace {
enum class Verdict : char { No, Yes, Unknown };
}

Analysis analyze(const std::vector<Axiom>& sin, const Query& q, const AnalyzeOptions& opts) {
  Analysis out;
  out.candidates = generateCandidates(q);
  out.sigma = buildSigma(sin, q);
  Reasoner reasoner(out.sigma.all(), opts.limits);

  const auto& cands = out.candidates.shapes;
  std::vector<Verdict> verdicts(cands.size(), Verdict::No);
  auto decide = [&](std::size_t i) {
    try {
      verdicts[i] = reasoner.entails(mark(cands[i], Marking::Out).axiom()) ? Verdict::Yes : Verdict::No;
    } catch (const ResourceLimit&) {
      verdicts[i] = Verdict::Unknown;
    }
  };

  unsigned workers = opts.threads ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
  if (!opts.parallel || workers == 1 || cands.size() < 2) {
    for (std::size_t i = 0; i < cands.size(); ++i) decide(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, cands.size()); ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < cands.size();) decide(i);
      });
  }

  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (verdicts[i] == Verdict::Yes) out.shapes.push_back(cands[i]);
    if (verdicts[i] == Verdict::Unknown) out.unknown.push_back(cands[i]);
  }
  return out;
}

std::vector<Shape> presented(const Analysis& a) {
  std::vector<Shape> v;
  for (const auto& s : a.shapes) v.push_back(presentProxy(s, a.candidates.proxyName));
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace cshapes
