#include "cshapes/axioms.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace cshapes {

// ------------------------------------------------------------------- vcg

std::vector<std::vector<int>> Vcg::adjacency() const {
  std::vector<std::vector<int>> adj(nodes.size());
  for (auto [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  return adj;
}

int Vcg::maxDegree() const {
  int best = 0;
  for (const auto& n : adjacency()) best = std::max(best, static_cast<int>(n.size()));
  return best;
}

int Vcg::maxComponentDiameter() const {
  auto adj = adjacency();
  int best = 0;
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    std::vector<int> dist(nodes.size(), -1);
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      best = std::max(best, dist[u]);
      for (int v : adj[u])
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[u] + 1;
          queue.push_back(static_cast<std::size_t>(v));
        }
    }
  }
  return best;
}

bool Vcg::acyclic() const {
  // A forest has exactly |nodes| - |components| edges.
  auto adj = adjacency();
  std::vector<bool> seen(nodes.size(), false);
  std::size_t comps = 0;
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    if (seen[s]) continue;
    ++comps;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (int v : adj[u])
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          stack.push_back(static_cast<std::size_t>(v));
        }
    }
  }
  return edges.size() + comps == nodes.size();
}

namespace {
bool shareVariable(const Atom& a, const Atom& b) {
  for (const auto& s : a.terms())
    if (s.isVariable())
      for (const auto& t : b.terms())
        if (s == t) return true;
  return false;
}
}  // namespace

Vcg vcg(const Pattern& p) {
  Vcg g;
  g.nodes.assign(p.begin(), p.end());
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    for (std::size_t j = i + 1; j < g.nodes.size(); ++j)
      if (shareVariable(g.nodes[i], g.nodes[j])) g.edges.push_back({static_cast<int>(i), static_cast<int>(j)});
  return g;
}

std::vector<Pattern> components(const Pattern& p) {
  Vcg g = vcg(p);
  auto adj = g.adjacency();
  std::vector<bool> seen(g.nodes.size(), false);
  std::vector<Pattern> out;
  for (std::size_t s = 0; s < g.nodes.size(); ++s) {
    if (seen[s]) continue;
    Pattern comp;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      comp.insert(g.nodes[u]);
      for (int v : adj[u])
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          stack.push_back(static_cast<std::size_t>(v));
        }
    }
    out.push_back(comp);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------------- una

std::set<Axiom> una(const Query& q) {
  std::set<Axiom> out;
  auto inds = q.individuals();
  std::vector<Name> v(inds.begin(), inds.end());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      for (auto& ax : equiv(Concept::conj(Concept::nominal(v[i]), Concept::nominal(v[j])), Concept::bottom()))
        out.insert(ax);
  return out;
}

// ------------------------------------------------------------------- cwa

namespace {

std::size_t occurrences(const Pattern& p, const Name& t) {
  std::size_t n = 0;
  for (const auto& a : p)
    for (const auto& s : a.terms())
      if (s == t) {
        ++n;
        break;
      }
  return n;
}

void addEquiv(std::set<Axiom>& out, const Concept& c, const Concept& d) {
  out.insert(Axiom::incl(c, d));
  out.insert(Axiom::incl(d, c));
}

// Item 4/5 of the closed-world encoding for one role name over `pat`,
// written with the role's copy `marked`. `inPattern` enables the leaf rule,
// which relies on the pattern's own ⊒ axioms.
void roleClosure(std::set<Axiom>& out, const Pattern& pat, const Pattern& whole, const Name& p, const Name& marked,
                 bool inPattern) {
  std::vector<const Atom*> atoms;
  for (const auto& a : pat)
    if (a.isRole && a.pred == p) atoms.push_back(&a);
  if (atoms.empty()) return;
  Role fwd{marked, false}, bwd{marked, true};
  std::set<Name> subjects, objects;
  for (const Atom* a : atoms) {
    subjects.insert(a->subject);
    objects.insert(a->object);
  }
  bool single = components(whole).size() == 1;

  // u occurs only in the atom linking it to v, so V_u ⊒ ∃p.C_v is safe.
  auto leaf = [&](const Name& u, const Name& v) {
    return inPattern && u.isVariable() && u != v && occurrences(whole, u) == 1 && (v.isVariable() || single);
  };

  for (const auto& v : objects) {
    std::vector<Concept> us;
    bool leafRule = false;
    for (const Atom* a : atoms)
      if (a->object == v) {
        us.push_back(conceptFor(a->subject));
        if (leaf(a->subject, v)) leafRule = true;
      }
    Concept lhs = Concept::exists(fwd, conceptFor(v));
    Concept rhs = Concept::disjAll(us);
    out.insert(Axiom::incl(rhs, lhs));
    if (objects.size() == 1 || leafRule) out.insert(Axiom::incl(lhs, rhs));
  }
  std::vector<Concept> pairs;
  for (const Atom* a : atoms)
    pairs.push_back(Concept::conj(conceptFor(a->subject), Concept::exists(fwd, conceptFor(a->object))));
  addEquiv(out, Concept::exists(fwd, Concept::top()), Concept::disjAll(pairs));

  for (const auto& u : subjects) {
    std::vector<Concept> vs;
    bool leafRule = false;
    for (const Atom* a : atoms)
      if (a->subject == u) {
        vs.push_back(conceptFor(a->object));
        if (leaf(a->object, u)) leafRule = true;
      }
    Concept lhs = Concept::exists(bwd, conceptFor(u));
    Concept rhs = Concept::disjAll(vs);
    out.insert(Axiom::incl(rhs, lhs));
    if (subjects.size() == 1 || leafRule) out.insert(Axiom::incl(lhs, rhs));
  }
  pairs.clear();
  for (const Atom* a : atoms)
    pairs.push_back(Concept::conj(conceptFor(a->object), Concept::exists(bwd, conceptFor(a->subject))));
  addEquiv(out, Concept::exists(bwd, Concept::top()), Concept::disjAll(pairs));
}

}  // namespace

bool supersetSafe(const Pattern& p, const Name& x) {
  // Role atoms between x and another variable, and the variable graph
  // without x. Each such atom must lead into its own part of that graph.
  std::vector<const Atom*> links;
  std::map<Name, std::set<Name>> adj;
  for (const auto& a : p) {
    if (!a.isRole) continue;
    if (a.subject == x && a.object == x) return false;
    if (!a.subject.isVariable() || !a.object.isVariable()) continue;
    if (a.subject == x || a.object == x) {
      links.push_back(&a);
    } else {
      adj[a.subject].insert(a.object);
      adj[a.object].insert(a.subject);
    }
  }
  if (links.empty()) return components(p).size() == 1;
  std::set<Name> claimed;
  for (const Atom* a : links) {
    Name start = a->subject == x ? a->object : a->subject;
    if (claimed.count(start)) return false;
    std::set<Name> part{start};
    std::vector<Name> stack{start};
    while (!stack.empty()) {
      Name u = stack.back();
      stack.pop_back();
      for (const auto& v : adj[u])
        if (part.insert(v).second) stack.push_back(v);
    }
    for (const auto& v : part)
      if (!claimed.insert(v).second) return false;
  }
  return true;
}

std::set<Axiom> cwa(const Query& q) {
  std::set<Axiom> out;
  const Pattern& P = q.pattern;
  const Pattern& H = q.templ;

  for (const auto& a : conceptNames(voc(P))) {
    std::vector<Concept> us;
    for (const auto& t : P)
      if (!t.isRole && t.pred == a) us.push_back(conceptFor(t.subject));
    addEquiv(out, Concept::atom(mark(a, Marking::Med)), Concept::conj(Concept::atom(a), Concept::disjAll(us)));
  }
  for (const auto& a : conceptNames(voc(H))) {
    std::vector<Concept> us;
    for (const auto& t : H)
      if (!t.isRole && t.pred == a) us.push_back(conceptFor(t.subject));
    addEquiv(out, Concept::atom(mark(a, Marking::Out)), Concept::disjAll(us));
  }
  for (const auto& x : variables(P)) {
    std::vector<Concept> parts;
    for (const auto& t : P) {
      if (!t.isRole && t.subject == x) parts.push_back(Concept::atom(t.pred));
      if (t.isRole && t.subject == x) parts.push_back(Concept::exists({t.pred, false}, conceptFor(t.object)));
      if (t.isRole && t.object == x) parts.push_back(Concept::exists({t.pred, true}, conceptFor(t.subject)));
    }
    Concept vx = conceptFor(x);
    Concept body = Concept::conjAll(parts);
    out.insert(Axiom::incl(vx, body));
    if (supersetSafe(P, x)) out.insert(Axiom::incl(body, vx));
  }
  for (const auto& p : roleNames(voc(P))) roleClosure(out, P, P, p, mark(p, Marking::Med), true);
  for (const auto& p : roleNames(voc(H))) roleClosure(out, H, P, p, mark(p, Marking::Out), false);
  return out;
}

// -------------------------------------------------------- component maps

namespace {

bool unify(const Name& from, const Name& to, TermMap& h, std::vector<Name>& bound) {
  if (from.isIndividual()) return from == to;
  auto it = h.find(from);
  if (it != h.end()) return it->second == to;
  h[from] = to;
  bound.push_back(from);
  return true;
}

void mapsRec(const std::vector<Atom>& src, std::size_t i, const Pattern& dst, TermMap& h, std::set<TermMap>& out) {
  if (i == src.size()) {
    out.insert(h);
    return;
  }
  const Atom& a = src[i];
  for (const auto& b : dst) {
    if (b.isRole != a.isRole || b.pred != a.pred) continue;
    std::vector<Name> bound;
    bool ok = unify(a.subject, b.subject, h, bound) && (!a.isRole || unify(a.object, b.object, h, bound));
    if (ok) mapsRec(src, i + 1, dst, h, out);
    for (const auto& n : bound) h.erase(n);
  }
}

}  // namespace

std::vector<TermMap> componentMaps(const Pattern& p1, const Pattern& p2) {
  std::set<TermMap> out;
  TermMap h;
  mapsRec(std::vector<Atom>(p1.begin(), p1.end()), 0, p2, h, out);
  return {out.begin(), out.end()};
}

// ------------------------------------------------------------- extension

Name FreshVariables::next() {
  while (true) {
    Name n = Name::variable("x" + std::to_string(counter_++));
    if (taken_.insert(n).second) return n;
  }
}

Pattern ext(const Name& x, const Concept& phi, const Pattern& pi, FreshVariables& fresh) {
  using Op = Concept::Op;
  Pattern out;
  if (phi.op() == Op::Atom) {
    out.insert(Atom::conceptAtom(x, phi.name()));
  } else if (phi.op() == Op::Exists) {
    Name x0 = fresh.next();
    const Role& r = phi.role();
    out.insert(r.inverted ? Atom::role(x0, r.name, x) : Atom::role(x, r.name, x0));
    out.insert(Atom::conceptAtom(x0, phi.left().name()));
  } else if (phi.op() == Op::Forall) {
    const Role& r = phi.role();
    for (const auto& a : pi) {
      if (!a.isRole || a.pred != r.name) continue;
      if (!r.inverted && a.subject == x) out.insert(Atom::conceptAtom(a.object, phi.left().name()));
      if (r.inverted && a.object == x) out.insert(Atom::conceptAtom(a.subject, phi.left().name()));
    }
  }
  return out;
}

namespace {

bool isTargetIn(const Name& u, const Concept& target, const Pattern& pat) {
  if (target.op() == Concept::Op::Atom) return pat.count(Atom::conceptAtom(u, target.name())) > 0;
  const Role& r = target.role();
  for (const auto& a : pat)
    if (a.isRole && a.pred == r.name && (r.inverted ? a.object : a.subject) == u) return true;
  return false;
}

// Whether an ∃ constraint already has a witness in the pattern.
bool witnessed(const Name& u, const Concept& phi, const Pattern& pat) {
  const Role& r = phi.role();
  for (const auto& a : pat) {
    if (!a.isRole || a.pred != r.name) continue;
    const Name& from = r.inverted ? a.object : a.subject;
    const Name& to = r.inverted ? a.subject : a.object;
    if (from == u && pat.count(Atom::conceptAtom(to, phi.left().name()))) return true;
  }
  return false;
}

struct Bounds {
  int degree;
  int diameter;
  bool admits(const Pattern& added) const {
    Vcg g = vcg(added);
    return g.maxDegree() <= degree && g.maxComponentDiameter() <= diameter;
  }
};

// Saturates pi from x. Bounds are measured on the added atoms only.
void extendFrom(const Name& x, Pattern& cur, const std::vector<Shape>& sin, const Bounds& bounds,
                FreshVariables& fresh) {
  std::vector<Name> extendable{x};
  Pattern added;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& s : sin) {
      for (std::size_t ui = 0; ui < extendable.size(); ++ui) {
        Name u = extendable[ui];
        if (!isTargetIn(u, s.target, cur)) continue;
        const Concept& phi = s.constraint;
        std::vector<Pattern> units;
        if (phi.op() == Concept::Op::Forall) {
          FreshVariables unused({});
          for (const auto& a : ext(u, phi, cur, unused)) units.push_back({a});
        } else if (phi.op() == Concept::Op::Atom) {
          units.push_back({Atom::conceptAtom(u, phi.name())});
        } else if (!witnessed(u, phi, cur)) {
          // Probe with a placeholder first so rejected units burn no name.
          FreshVariables probe(terms(cur));
          units.push_back(ext(u, phi, cur, probe));
        }
        for (auto& unit : units) {
          bool isNew = false;
          for (const auto& a : unit)
            if (!cur.count(a)) isNew = true;
          if (!isNew) continue;
          Pattern trial = added;
          trial.insert(unit.begin(), unit.end());
          if (!bounds.admits(trial)) continue;
          if (phi.op() == Concept::Op::Exists) {
            unit = ext(u, phi, cur, fresh);
            trial = added;
            trial.insert(unit.begin(), unit.end());
            for (const auto& t : terms(unit))
              if (t.isVariable() && t != u) extendable.push_back(t);
          }
          cur.insert(unit.begin(), unit.end());
          added = trial;
          changed = true;
        }
      }
    }
  }
}

}  // namespace

Pattern maxExt(const Pattern& pi, const Pattern& p, const std::vector<Shape>& sin) {
  Vcg g = vcg(p);
  Bounds bounds{g.maxDegree(), g.maxComponentDiameter()};
  std::vector<Shape> shapes(sin.begin(), sin.end());
  std::sort(shapes.begin(), shapes.end());
  std::set<Name> taken = terms(p);
  FreshVariables fresh(taken);
  Pattern out = pi;
  for (const auto& x : variables(pi)) {
    Pattern cur = pi;
    extendFrom(x, cur, shapes, bounds, fresh);
    out.insert(cur.begin(), cur.end());
  }
  return out;
}

std::set<Axiom> maSin(const Pattern& p, const std::vector<Shape>& sin) {
  std::set<Axiom> out;
  auto comps = components(p);
  std::vector<Pattern> extended;
  for (const auto& c : comps) extended.push_back(maxExt(c, p, sin));
  for (const auto& p1 : comps) {
    if (variables(p1).empty()) continue;
    for (std::size_t j = 0; j < comps.size(); ++j) {
      std::set<Name> original = terms(comps[j]);
      for (const auto& h : componentMaps(p1, extended[j]))
        for (const auto& [x, u] : h) {
          if (u == x || !original.count(u)) continue;
          if (u.isVariable()) {
            out.insert(Axiom::incl(conceptFor(u), conceptFor(x)));
            continue;
          }
          // {u} ⊑ V_x needs at least one match. A p-edge between u and a
          // bound variable of P2 witnesses one.
          for (const auto& a : comps[j]) {
            if (!a.isRole || a.subject == a.object) continue;
            if (a.object == u && a.subject.isVariable())
              out.insert(Axiom::incl(
                  Concept::conj(conceptFor(u), Concept::exists({a.pred, true}, conceptFor(a.subject))),
                  conceptFor(x)));
            if (a.subject == u && a.object.isVariable())
              out.insert(Axiom::incl(
                  Concept::conj(conceptFor(u), Concept::exists({a.pred, false}, conceptFor(a.object))),
                  conceptFor(x)));
          }
        }
    }
  }
  return out;
}

// -------------------------------------------------------- role hierarchy

std::set<Axiom> rs(const Query& q) {
  std::set<Axiom> out;
  const Pattern& P = q.pattern;
  const Pattern& H = q.templ;
  auto count = [](const Pattern& pat, const Name& r) {
    std::size_t n = 0;
    for (const auto& a : pat)
      if (a.isRole && a.pred == r) ++n;
    return n;
  };

  for (const auto& p : roleNames(voc(P))) {
    Role plain{p, false}, med{mark(p, Marking::Med), false};
    out.insert(Axiom::roleIncl(med, plain));
    // Every p-edge must extend to a full match, so every atom of P has to be
    // an isolated p-atom.
    bool isolated = true;
    for (const auto& a : P) {
      if (!a.isRole || a.pred != p || !a.subject.isVariable() || !a.object.isVariable() || a.subject == a.object ||
          occurrences(P, a.subject) != 1 || occurrences(P, a.object) != 1)
        isolated = false;
    }
    if (isolated) out.insert(Axiom::roleIncl(plain, med));
  }

  for (const auto& a : P) {
    if (!a.isRole) continue;
    Role med{mark(a.pred, Marking::Med), false};
    for (const auto& b : H) {
      if (!b.isRole) continue;
      bool same = b.subject == a.subject && b.object == a.object;
      bool swapped = b.subject == a.object && b.object == a.subject;
      for (bool inv : {false, true}) {
        if (inv ? !swapped : !same) continue;
        Role out_{mark(b.pred, Marking::Out), inv};
        if (count(P, a.pred) == 1) out.insert(Axiom::roleIncl(med, out_));
        if (count(H, b.pred) == 1) out.insert(Axiom::roleIncl(out_, med));
      }
    }
  }
  return out;
}

// ----------------------------------------------------------------- sigma

std::vector<Axiom> SigmaBundle::all() const {
  std::set<Axiom> u = in;
  u.insert(vkb.begin(), vkb.end());
  u.insert(map.begin(), map.end());
  u.insert(prop.begin(), prop.end());
  return {u.begin(), u.end()};
}

SigmaBundle buildSigma(const std::vector<Axiom>& sin, const Query& q) {
  SigmaBundle b;
  b.in.insert(sin.begin(), sin.end());
  b.vkb = una(q);
  auto c = cwa(q);
  b.vkb.insert(c.begin(), c.end());
  std::vector<Shape> simple;
  for (const auto& ax : sin)
    if (auto s = asShape(ax)) simple.push_back(*s);
  b.map = maSin(q.pattern, simple);
  b.prop = rs(q);
  return b;
}

}  // namespace cshapes
