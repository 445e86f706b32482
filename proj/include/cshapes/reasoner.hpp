#ifndef CSHAPES_REASONER_HPP
#define CSHAPES_REASONER_HPP

#include <chrono>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cshapes/model.hpp"

namespace cshapes {

// Thrown when a budget runs out; callers treat it as "unknown".
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReasonerLimits {
  std::size_t maxNodes = 100000;
  std::size_t maxRuleFirings = 1000000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  // Explore the second disjunct first. Verdicts must not change.
  bool reverseBranches = false;
};

// A TBox compiled once and queried many times. Thread-safe for concurrent
// queries: every call works on its own copy of the compiled tables.
class Reasoner {
 public:
  explicit Reasoner(const std::vector<Axiom>& tbox, ReasonerLimits limits = {});
  ~Reasoner();
  Reasoner(Reasoner&&) noexcept;
  Reasoner& operator=(Reasoner&&) noexcept;

  bool isConsistent(const std::vector<std::pair<Name, Concept>>& conceptAssertions,
                    const std::vector<RoleAssertion>& roleAssertions) const;
  // Σ ⊨ C ⊑ D, decided as inconsistency of Σ plus o : C ⊓ ¬D.
  bool entails(const Axiom& goal) const;

  const ReasonerLimits& limits() const { return limits_; }
  void setLimits(const ReasonerLimits& l) { limits_ = l; }

  struct Compiled;

 private:
  std::unique_ptr<Compiled> compiled_;
  ReasonerLimits limits_;
};

bool isConsistent(const KnowledgeBase& kb, const ReasonerLimits& limits = {});
bool entails(const std::vector<Axiom>& sigma, const Axiom& goal, const ReasonerLimits& limits = {});

}  // namespace cshapes

#endif  // CSHAPES_REASONER_HPP
