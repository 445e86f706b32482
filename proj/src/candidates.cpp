#include "cshapes/candidates.hpp"

#include <algorithm>

namespace cshapes {

namespace {

Name freshProxy(const std::set<Name>& taken) {
  Name n = Name::conceptName("F_proxy");
  for (int i = 1; taken.count(n); ++i) n = Name::conceptName("F_proxy" + std::to_string(i));
  return n;
}

}  // namespace

CandidateSet generateCandidates(const Query& q) {
  CandidateSet out;
  auto names = voc(q);
  out.proxyName = freshProxy(names);
  auto concepts = conceptNames(names);
  auto roles = roleNames(names);

  std::vector<Role> rhos;
  for (const auto& p : roles) {
    rhos.push_back({p, false});
    rhos.push_back({p, true});
  }

  std::vector<Concept> targets;
  for (const auto& a : concepts) targets.push_back(Concept::atom(a));
  for (const auto& r : rhos) targets.push_back(Concept::exists(r, Concept::top()));

  std::vector<Concept> constraints;
  for (const auto& a : concepts) constraints.push_back(Concept::atom(a));
  for (const auto& r : rhos)
    for (const auto& a : concepts) {
      constraints.push_back(Concept::exists(r, Concept::atom(a)));
      constraints.push_back(Concept::forall(r, Concept::atom(a)));
    }
  for (const auto& r : rhos) constraints.push_back(Concept::forall(r, Concept::atom(out.proxyName)));

  for (const auto& t : targets)
    for (const auto& c : constraints)
      if (!(t.isAtom() && t == c)) out.shapes.push_back({t, c});
  std::sort(out.shapes.begin(), out.shapes.end());
  return out;
}

std::int64_t candidateCount(std::int64_t n, std::int64_t m) { return (n + 2 * m) * (n + 4 * n * m + 2 * m) - n; }

bool isProxyShape(const Shape& s, const Name& proxy) {
  return s.constraint.op() == Concept::Op::Forall && s.constraint.left().isAtom() &&
         unmark(s.constraint.left().name()) == proxy;
}

Shape presentProxy(const Shape& s, const Name& proxy) {
  if (!isProxyShape(s, proxy)) return s;
  return {s.target, Concept::forall(s.constraint.role(), Concept::bottom())};
}

}  // namespace cshapes
