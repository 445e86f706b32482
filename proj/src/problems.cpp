#include "cshapes/problems.hpp"

#include <algorithm>

namespace cshapes {

bool parseSizeClass(const std::string& s, SizeClass& out) {
  std::string u = s;
  std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (u == "SMALL") out = SizeClass::Small;
  else if (u == "MEDIUM") out = SizeClass::Medium;
  else if (u == "LARGE") out = SizeClass::Large;
  else return false;
  return true;
}

GeneratorConfig GeneratorConfig::forClass(SizeClass c) {
  GeneratorConfig g;
  int lo = 1, hi = 2;
  if (c == SizeClass::Medium) lo = 5, hi = 7;
  if (c == SizeClass::Large) lo = 11, hi = 13;
  g.templateMin = g.patternMin = g.shapesMin = lo;
  g.templateMax = g.patternMax = g.shapesMax = hi;
  return g;
}

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <class T>
const T& pickFrom(Rng& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(v.size()) - 1))];
}

std::string letterName(const char* letters, std::size_t i) {
  std::string base(1, letters[i % 26]);
  return i < 26 ? base : base + std::to_string(i / 26);
}

// Names drawn so far, shared between template, pattern and shapes.
struct Pool {
  const GeneratorConfig& cfg;
  std::vector<Name> concepts, roles, variables, individuals;

  Name name(Rng& rng, bool role) {
    auto& v = role ? roles : concepts;
    int cap = role ? cfg.maxRoles : cfg.maxConcepts;
    bool capped = cap >= 0 && static_cast<int>(v.size()) >= cap;
    if (!v.empty() && (capped || !chance(rng, cfg.freshName))) return pickFrom(rng, v);
    if (capped) return {};  // cap of zero
    Name n = role ? Name::role(letterName("pqrstuvwklmnohijabcdefgxyz", v.size()))
                  : Name::conceptName(letterName("ABCDEFGHIJKLMNOPQRSTUVWXYZ", v.size()));
    v.push_back(n);
    return n;
  }

  Name term(Rng& rng, bool bindNew) {
    bool capped = cfg.maxIndividuals >= 0 && static_cast<int>(individuals.size()) >= cfg.maxIndividuals;
    if (cfg.individual > 0 && chance(rng, cfg.individual)) {
      if (!individuals.empty() && (capped || chance(rng, 0.5))) return pickFrom(rng, individuals);
      if (!capped) {
        individuals.push_back(Name::individual(letterName("abcdefghijklmnopqrstuvwxyz", individuals.size())));
        return individuals.back();
      }
    }
    if (!variables.empty() && (!bindNew || !chance(rng, cfg.freshVariable))) return pickFrom(rng, variables);
    if (!bindNew) return individuals.empty() ? Name{} : pickFrom(rng, individuals);
    variables.push_back(Name::variable(letterName("xyzwuvstrqponmlkjihgfedcba", variables.size())));
    return variables.back();
  }

  Atom atom(Rng& rng, bool bindNew) {
    bool role = chance(rng, cfg.roleRatio);
    if (role && cfg.maxRoles == 0) role = false;
    if (!role && cfg.maxConcepts == 0) role = true;
    Name pred = name(rng, role);
    Name s = term(rng, bindNew);
    if (!role) return Atom::conceptAtom(s, pred);
    return Atom::role(s, pred, term(rng, bindNew));
  }
};

Concept shapeTarget(Rng& rng, Pool& pool) {
  if (!pool.roles.empty() && chance(rng, 0.3))
    return Concept::exists({pickFrom(rng, pool.roles), chance(rng, 0.5)}, Concept::top());
  return Concept::atom(pool.name(rng, false));
}

Concept shapeConstraint(Rng& rng, Pool& pool) {
  Name a = pool.name(rng, false);
  if (pool.roles.empty() || chance(rng, 0.4)) return Concept::atom(a);
  Role r{pickFrom(rng, pool.roles), chance(rng, 0.5)};
  return chance(rng, 0.5) ? Concept::exists(r, Concept::atom(a)) : Concept::forall(r, Concept::atom(a));
}

}  // namespace

Problem randomProblem(const GeneratorConfig& cfg, Rng& rng) {
  Pool pool{cfg, {}, {}, {}, {}};
  Problem p;
  int np = uniform(rng, cfg.patternMin, cfg.patternMax);
  while (static_cast<int>(p.query.pattern.size()) < np) {
    Atom a = pool.atom(rng, true);
    if (!a.pred.id.empty()) p.query.pattern.insert(a);
  }
  int nt = uniform(rng, cfg.templateMin, cfg.templateMax);
  for (int tries = 0; static_cast<int>(p.query.templ.size()) < nt && tries < 100 * nt; ++tries) {
    Atom a = pool.atom(rng, false);
    if (a.pred.id.empty() || a.subject.id.empty() || (a.isRole && a.object.id.empty())) continue;
    p.query.templ.insert(a);
  }
  // Shapes only speak about the pattern's vocabulary.
  Pool shapes{cfg, {}, {}, {}, {}};
  for (const auto& n : voc(p.query.pattern)) (n.kind == Kind::Role ? shapes.roles : shapes.concepts).push_back(n);
  GeneratorConfig reuse = cfg;
  reuse.maxConcepts = static_cast<int>(std::max<std::size_t>(1, shapes.concepts.size()));
  if (cfg.maxConcepts >= 0) reuse.maxConcepts = std::min(reuse.maxConcepts, std::max(cfg.maxConcepts, 1));
  reuse.maxRoles = static_cast<int>(shapes.roles.size());
  Pool bounded{reuse, shapes.concepts, shapes.roles, {}, {}};
  int ns = uniform(rng, cfg.shapesMin, cfg.shapesMax);
  std::set<Axiom> seen;
  for (int tries = 0; static_cast<int>(seen.size()) < ns && tries < 50 * ns; ++tries) {
    Shape s{shapeTarget(rng, bounded), shapeConstraint(rng, bounded)};
    if (s.target == s.constraint) continue;
    if (seen.insert(s.axiom()).second) p.shapes.push_back(s.axiom());
  }
  return p;
}

Concept randomConcept(Rng& rng, const std::vector<Name>& concepts, const std::vector<Name>& roles,
                      const std::vector<Name>& individuals, int depth) {
  int kinds = depth <= 0 ? 3 : 8;
  switch (uniform(rng, 0, kinds - 1)) {
    case 0:
      if (!concepts.empty()) return Concept::atom(pickFrom(rng, concepts));
      [[fallthrough]];
    case 1:
      if (!individuals.empty()) return Concept::nominal(pickFrom(rng, individuals));
      [[fallthrough]];
    case 2: return chance(rng, 0.5) ? Concept::top() : Concept::bottom();
    case 3: return Concept::negate(randomConcept(rng, concepts, roles, individuals, depth - 1));
    case 4:
      return Concept::conj(randomConcept(rng, concepts, roles, individuals, depth - 1),
                           randomConcept(rng, concepts, roles, individuals, depth - 1));
    case 5:
      return Concept::disj(randomConcept(rng, concepts, roles, individuals, depth - 1),
                           randomConcept(rng, concepts, roles, individuals, depth - 1));
    default: {
      if (roles.empty()) return randomConcept(rng, concepts, roles, individuals, depth - 1);
      Role r{pickFrom(rng, roles), chance(rng, 0.5)};
      Concept body = randomConcept(rng, concepts, roles, individuals, depth - 1);
      return chance(rng, 0.5) ? Concept::exists(r, body) : Concept::forall(r, body);
    }
  }
}

DcaKb randomDcaKb(Rng& rng, int maxIndividuals, int maxConcepts, int maxRoles) {
  DcaKb out;
  int k = uniform(rng, 1, maxIndividuals);
  std::vector<Name> concepts, roles;
  for (int i = 0; i < k; ++i) out.individuals.push_back(Name::individual("a" + std::to_string(i + 1)));
  for (int i = 0, n = uniform(rng, 1, maxConcepts); i < n; ++i) concepts.push_back(Name::conceptName(std::string(1, static_cast<char>('A' + i))));
  for (int i = 0, n = uniform(rng, 0, maxRoles); i < n; ++i) roles.push_back(Name::role(std::string(1, static_cast<char>('p' + i))));

  KnowledgeBase& kb = out.kb;
  std::vector<Concept> noms;
  for (const auto& a : out.individuals) noms.push_back(Concept::nominal(a));
  kb.tbox.push_back(Axiom::incl(Concept::top(), Concept::disjAll(noms)));
  if (chance(rng, 0.5))
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        kb.tbox.push_back(Axiom::incl(Concept::conj(noms[static_cast<std::size_t>(i)], noms[static_cast<std::size_t>(j)]),
                                      Concept::bottom()));
  for (int i = 0, n = uniform(rng, 0, 3); i < n; ++i)
    kb.tbox.push_back(Axiom::incl(randomConcept(rng, concepts, roles, out.individuals, 2),
                                  randomConcept(rng, concepts, roles, out.individuals, 2)));
  if (!roles.empty() && chance(rng, 0.3))
    kb.tbox.push_back(Axiom::roleIncl({roles[0], false}, {pickFrom(rng, roles), chance(rng, 0.5)}));
  for (int i = 0, n = uniform(rng, 0, 3); i < n; ++i)
    kb.conceptAssertions.push_back({pickFrom(rng, out.individuals), randomConcept(rng, concepts, roles, {}, 1)});
  if (!roles.empty())
    for (int i = 0, n = uniform(rng, 0, 2); i < n; ++i)
      kb.roleAssertions.push_back({pickFrom(rng, out.individuals), pickFrom(rng, roles), pickFrom(rng, out.individuals)});
  return out;
}

}  // namespace cshapes
