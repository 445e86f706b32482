#ifndef CSHAPES_ANALYZE_HPP
#define CSHAPES_ANALYZE_HPP

#include <vector>

#include "cshapes/axioms.hpp"
#include "cshapes/candidates.hpp"
#include "cshapes/model.hpp"
#include "cshapes/reasoner.hpp"

namespace cshapes {

struct AnalyzeOptions {
  ReasonerLimits limits;
  bool parallel = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct Analysis {
  CandidateSet candidates;
  SigmaBundle sigma;
  std::vector<Shape> shapes;   // entailed candidates, canonical order, proxy kept
  std::vector<Shape> unknown;  // budget ran out (not emitted)
};

Analysis analyze(const std::vector<Axiom>& sin, const Query& q, const AnalyzeOptions& opts = {});

// Shapes as printed: the proxy family is shown as ∀ρ.⊥.
std::vector<Shape> presented(const Analysis& a);

}  // namespace cshapes

#endif  // CSHAPES_ANALYZE_HPP
