#ifndef CSHAPES_ORACLE_HPP
#define CSHAPES_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "cshapes/model.hpp"

namespace cshapes {

// variable -> individual. Individuals map to themselves implicitly.
using Valuation = std::map<Name, Name>;

std::vector<Valuation> valuations(const Pattern& p, const Graph& g);
Pattern apply(const Valuation& mu, const Pattern& p);
Graph toGraph(const Pattern& groundPattern);
Graph evalQuery(const Query& q, const Graph& g);

// Canonical interpretation over individuals(g) ∪ extra.
std::set<Name> extensionOf(const Concept& c, const Graph& g, const std::set<Name>& extra = {});
bool holds(const Graph& g, const Axiom& ax, const std::set<Name>& extra = {});
bool holds(const Graph& g, const Shape& s, const std::set<Name>& extra = {});
bool valid(const Graph& g, const std::vector<Axiom>& sin, const std::set<Name>& extra = {});

struct ExtendedGraph {
  Graph input;
  Graph med;   // ⋃ μ(P), plain names
  Graph vars;  // a : V_x
  Graph out;   // evalQuery, plain names
  Graph all;   // input ∪ mark(med) ∪ vars ∪ mark(out)
  bool matched = false;  // at least one valuation
};

ExtendedGraph extendedParts(const Query& q, const Graph& gin);
Graph extendedGraph(const Query& q, const Graph& gin);

// Calls visit for every graph over the vocabulary; stops early when visit
// returns false. maxAssertions < 0 means unbounded.
void enumerateGraphs(const std::set<Name>& concepts, const std::set<Name>& roles, const std::vector<Name>& individuals,
                     int maxAssertions, const std::function<bool(const Graph&)>& visit);
std::vector<Graph> allGraphs(const std::set<Name>& concepts, const std::set<Name>& roles,
                             const std::vector<Name>& individuals, int maxAssertions = -1);

struct SoundnessBounds {
  int individuals = 3;  // total universe size, named individuals included
};

struct Violation {
  Graph input;
  Graph output;
  Shape shape;
};

// Every graph over voc(P) ∪ voc(Sin) that is valid for Sin; reports output
// shapes that fail on the query result.
std::vector<Violation> checkSoundness(const std::vector<Axiom>& sin, const Query& q, const std::vector<Shape>& sout,
                                      const SoundnessBounds& bounds);

// Exhaustive search over interpretations whose domain is a partition of
// `individuals` (so unequal names may still denote the same element).
bool boundedModelConsistent(const KnowledgeBase& kb, const std::vector<Name>& individuals);

// DCA, UNA and CWA axioms for g over the given names plus g's assertions.
KnowledgeBase validationKB(const Graph& g, const std::set<Name>& names, const std::vector<Name>& individuals);

}  // namespace cshapes

#endif  // CSHAPES_ORACLE_HPP
