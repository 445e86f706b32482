#ifndef CSHAPES_AXIOMS_HPP
#define CSHAPES_AXIOMS_HPP

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "cshapes/model.hpp"

namespace cshapes {

// Variable connectivity graph: atoms are nodes, atoms sharing a variable are
// adjacent.
struct Vcg {
  std::vector<Atom> nodes;
  std::vector<std::pair<int, int>> edges;  // i < j

  std::vector<std::vector<int>> adjacency() const;
  int maxDegree() const;
  // Largest diameter over the connected components (0 for isolated nodes).
  int maxComponentDiameter() const;
  bool acyclic() const;
};

Vcg vcg(const Pattern& p);
std::vector<Pattern> components(const Pattern& p);

std::set<Axiom> una(const Query& q);
std::set<Axiom> cwa(const Query& q);

// Whether V_x ⊒ (conjunction of x's atoms) holds on every extended graph.
bool supersetSafe(const Pattern& p, const Name& x);

using TermMap = std::map<Name, Name>;

std::vector<TermMap> componentMaps(const Pattern& p1, const Pattern& p2);

// Hands out variables x0, x1, ... that do not clash with `taken`.
class FreshVariables {
 public:
  explicit FreshVariables(std::set<Name> taken) : taken_(std::move(taken)) {}
  Name next();

 private:
  std::set<Name> taken_;
  int counter_ = 0;
};

Pattern ext(const Name& x, const Concept& phi, const Pattern& pi, FreshVariables& fresh);
Pattern maxExt(const Pattern& pi, const Pattern& p, const std::vector<Shape>& sin);

std::set<Axiom> maSin(const Pattern& p, const std::vector<Shape>& sin);
std::set<Axiom> rs(const Query& q);

struct SigmaBundle {
  std::set<Axiom> in, vkb, map, prop;

  std::vector<Axiom> all() const;
};

SigmaBundle buildSigma(const std::vector<Axiom>& sin, const Query& q);

}  // namespace cshapes

#endif  // CSHAPES_AXIOMS_HPP
