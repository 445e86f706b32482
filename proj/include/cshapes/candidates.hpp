#ifndef CSHAPES_CANDIDATES_HPP
#define CSHAPES_CANDIDATES_HPP

#include <cstdint>
#include <vector>

#include "cshapes/model.hpp"

namespace cshapes {

struct CandidateSet {
  std::vector<Shape> shapes;
  // Stands for every concept name outside the query vocabulary in ∀ρ.F.
  Name proxyName;
};

CandidateSet generateCandidates(const Query& q);
std::int64_t candidateCount(std::int64_t n, std::int64_t m);

bool isProxyShape(const Shape& s, const Name& proxy);
// ψ ⊑ ∀ρ.F becomes ψ ⊑ ∀ρ.⊥ for output; other shapes pass through.
Shape presentProxy(const Shape& s, const Name& proxy);

}  // namespace cshapes

#endif  // CSHAPES_CANDIDATES_HPP
