#ifndef CSHAPES_PROBLEMS_HPP
#define CSHAPES_PROBLEMS_HPP

#include <random>
#include <string>
#include <vector>

#include "cshapes/model.hpp"

namespace cshapes {

enum class SizeClass { Small, Medium, Large };

bool parseSizeClass(const std::string& s, SizeClass& out);

// Random query + shape problems. Counts are inclusive ranges; caps < 0 mean
// no limit.
struct GeneratorConfig {
  int templateMin = 1, templateMax = 2;
  int patternMin = 1, patternMax = 2;
  int shapesMin = 1, shapesMax = 2;
  double freshVariable = 0.5;
  double freshName = 0.8;
  double roleRatio = 0.3;
  double individual = 0.0;  // chance a term slot holds an individual
  int maxConcepts = -1, maxRoles = -1, maxIndividuals = -1;

  static GeneratorConfig forClass(SizeClass c);
};

struct Problem {
  Query query;
  std::vector<Axiom> shapes;
};

using Rng = std::mt19937_64;

Problem randomProblem(const GeneratorConfig& cfg, Rng& rng);

// A KB whose TBox pins the domain to its k individuals, plus random
// axioms, role inclusions and assertions.
struct DcaKb {
  KnowledgeBase kb;
  std::vector<Name> individuals;
};

DcaKb randomDcaKb(Rng& rng, int maxIndividuals = 3, int maxConcepts = 2, int maxRoles = 1);

// Random ALCHOI concept of nesting depth ≤ depth.
Concept randomConcept(Rng& rng, const std::vector<Name>& concepts, const std::vector<Name>& roles,
                      const std::vector<Name>& individuals, int depth);

}  // namespace cshapes

#endif  // CSHAPES_PROBLEMS_HPP
