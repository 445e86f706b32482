#include "cshapes/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace cshapes {

namespace {

using Mask = std::uint64_t;

// ------------------------------------------------ compiled interpretations

struct Vocab {
  std::map<Name, int> concepts, roles, inds;

  static int get(std::map<Name, int>& m, const Name& n) {
    auto [it, fresh] = m.emplace(n, static_cast<int>(m.size()));
    return it->second;
  }
  int conceptId(const Name& n) { return get(concepts, n); }
  int role(const Name& n) { return get(roles, n); }
  int ind(const Name& n) { return get(inds, n); }
};

struct CNode {
  Concept::Op op;
  int id = -1;  // concept, individual or role id
  bool inv = false;
  int a = -1, b = -1;
};

struct Program {
  std::vector<CNode> nodes;

  int compile(const Concept& c, Vocab& v) {
    using Op = Concept::Op;
    CNode n{c.op()};
    switch (c.op()) {
      case Op::Atom:
        n.id = v.conceptId(c.name());
        break;
      case Op::Nominal:
        n.id = v.ind(c.name());
        break;
      case Op::Not:
        n.a = compile(c.left(), v);
        break;
      case Op::And:
      case Op::Or:
        n.a = compile(c.left(), v);
        n.b = compile(c.right(), v);
        break;
      case Op::Exists:
      case Op::Forall:
        n.id = v.role(c.role().name);
        n.inv = c.role().inverted;
        n.a = compile(c.left(), v);
        break;
      default:
        break;
    }
    nodes.push_back(n);
    return static_cast<int>(nodes.size()) - 1;
  }
};

struct CompiledAxiom {
  bool role = false;
  int lhs = -1, rhs = -1;
  int rl = -1, rr = -1;
  bool rlInv = false, rrInv = false;
};

CompiledAxiom compileAxiom(const Axiom& ax, Program& prog, Vocab& v) {
  CompiledAxiom c;
  if (ax.isRole()) {
    c.role = true;
    c.rl = v.role(ax.rlhs.name);
    c.rlInv = ax.rlhs.inverted;
    c.rr = v.role(ax.rrhs.name);
    c.rrInv = ax.rrhs.inverted;
  } else {
    c.lhs = prog.compile(ax.lhs, v);
    c.rhs = prog.compile(ax.rhs, v);
  }
  return c;
}

struct Interp {
  int n = 0;
  std::vector<Mask> cext;                 // by concept id
  std::vector<std::vector<Mask>> succ;    // by role id, then element
  std::vector<std::vector<Mask>> pred;
  std::vector<int> indElem;               // individual id -> element

  Mask all() const { return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1); }

  void reset(int elements, const Vocab& v) {
    n = elements;
    cext.assign(v.concepts.size(), 0);
    succ.assign(v.roles.size(), std::vector<Mask>(static_cast<std::size_t>(n), 0));
    pred.assign(v.roles.size(), std::vector<Mask>(static_cast<std::size_t>(n), 0));
  }

  void addEdge(int r, int s, int o) {
    succ[r][s] |= Mask{1} << o;
    pred[r][o] |= Mask{1} << s;
  }

  const std::vector<Mask>& rel(int r, bool inv) const { return inv ? pred[r] : succ[r]; }

  Mask eval(const Program& p, int idx) const {
    const CNode& c = p.nodes[static_cast<std::size_t>(idx)];
    using Op = Concept::Op;
    switch (c.op) {
      case Op::Top:
        return all();
      case Op::Bottom:
        return 0;
      case Op::Atom:
        return cext[c.id];
      case Op::Nominal:
        return Mask{1} << indElem[c.id];
      case Op::Not:
        return all() & ~eval(p, c.a);
      case Op::And:
        return eval(p, c.a) & eval(p, c.b);
      case Op::Or:
        return eval(p, c.a) | eval(p, c.b);
      case Op::Exists:
      case Op::Forall: {
        Mask inner = eval(p, c.a);
        const auto& r = rel(c.id, c.inv);
        Mask out = 0;
        for (int x = 0; x < n; ++x) {
          bool ok = c.op == Op::Exists ? (r[x] & inner) != 0 : (r[x] & ~inner) == 0;
          if (ok) out |= Mask{1} << x;
        }
        return out;
      }
    }
    return 0;
  }

  bool holds(const Program& p, const CompiledAxiom& ax) const {
    if (!ax.role) return (eval(p, ax.lhs) & ~eval(p, ax.rhs)) == 0;
    const auto& l = rel(ax.rl, ax.rlInv);
    const auto& r = rel(ax.rr, ax.rrInv);
    for (int x = 0; x < n; ++x)
      if (l[x] & ~r[x]) return false;
    return true;
  }
};

// Interpretation of a graph over a universe of named individuals, one
// element per name.
struct GraphModel {
  Vocab vocab;
  Program prog;
  Interp interp;

  GraphModel(const Graph& g, const std::set<Name>& extra, const std::vector<const Concept*>& concepts,
             const std::vector<const Axiom*>& axioms) {
    std::set<Name> universe = g.individuals();
    universe.insert(extra.begin(), extra.end());
    for (const Concept* c : concepts) collectIndividuals(*c, universe);
    for (const Axiom* a : axioms)
      if (!a->isRole()) {
        collectIndividuals(a->lhs, universe);
        collectIndividuals(a->rhs, universe);
      }
    if (universe.size() > 64) throw std::invalid_argument("oracle: universe larger than 64 individuals");
    for (const auto& i : universe) vocab.ind(i);
    for (const auto& c : g.concepts) vocab.conceptId(c.cls);
    for (const auto& r : g.roles) vocab.role(r.role);
  }

  void build(const Graph& g) {
    interp.reset(static_cast<int>(vocab.inds.size()), vocab);
    interp.indElem.assign(vocab.inds.size(), 0);
    for (const auto& [n, id] : vocab.inds) interp.indElem[id] = id;
    for (const auto& c : g.concepts) interp.cext[vocab.concepts.at(c.cls)] |= Mask{1} << vocab.inds.at(c.individual);
    for (const auto& r : g.roles)
      interp.addEdge(vocab.roles.at(r.role), vocab.inds.at(r.subject), vocab.inds.at(r.object));
  }

  std::set<Name> names(Mask m) const {
    std::set<Name> out;
    for (const auto& [n, id] : vocab.inds)
      if (m & (Mask{1} << id)) out.insert(n);
    return out;
  }
};

// ----------------------------------------------------------- valuations

void solve(const std::vector<Atom>& atoms, std::size_t i, const Graph& g, Valuation& mu, std::vector<Valuation>& out) {
  if (i == atoms.size()) {
    out.push_back(mu);
    return;
  }
  const Atom& a = atoms[i];
  auto value = [&](const Name& t) -> const Name* {
    if (t.isIndividual()) return &t;
    auto it = mu.find(t);
    return it == mu.end() ? nullptr : &it->second;
  };
  auto bindTry = [&](const Name& t, const Name& v, std::vector<Name>& bound) {
    if (const Name* cur = value(t)) return *cur == v;
    mu[t] = v;
    bound.push_back(t);
    return true;
  };
  if (!a.isRole) {
    for (const auto& c : g.concepts) {
      if (c.cls != a.pred) continue;
      std::vector<Name> bound;
      if (bindTry(a.subject, c.individual, bound)) solve(atoms, i + 1, g, mu, out);
      for (const auto& b : bound) mu.erase(b);
    }
  } else {
    for (const auto& r : g.roles) {
      if (r.role != a.pred) continue;
      std::vector<Name> bound;
      if (bindTry(a.subject, r.subject, bound) && bindTry(a.object, r.object, bound)) solve(atoms, i + 1, g, mu, out);
      for (const auto& b : bound) mu.erase(b);
    }
  }
}

// Atoms sharing variables with earlier ones go first so the join prunes early.
std::vector<Atom> joinOrder(const Pattern& p) {
  std::vector<Atom> rest(p.begin(), p.end()), out;
  std::set<Name> seen;
  while (!rest.empty()) {
    std::size_t best = 0;
    int bestScore = -1;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      int score = 0;
      for (const auto& t : rest[i].terms())
        if (t.isIndividual() || seen.count(t)) ++score;
      if (score > bestScore) {
        bestScore = score;
        best = i;
      }
    }
    for (const auto& t : rest[best].terms()) seen.insert(t);
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

}  // namespace

std::vector<Valuation> valuations(const Pattern& p, const Graph& g) {
  std::vector<Valuation> out;
  Valuation mu;
  solve(joinOrder(p), 0, g, mu, out);
  return out;
}

Pattern apply(const Valuation& mu, const Pattern& p) {
  auto sub = [&](const Name& t) {
    if (!t.isVariable()) return t;
    auto it = mu.find(t);
    if (it == mu.end()) throw std::invalid_argument("apply: unbound variable ?" + t.id);
    return it->second;
  };
  Pattern out;
  for (const auto& a : p) {
    if (a.isRole)
      out.insert(Atom::role(sub(a.subject), a.pred, sub(a.object)));
    else
      out.insert(Atom::conceptAtom(sub(a.subject), a.pred));
  }
  return out;
}

Graph toGraph(const Pattern& groundPattern) {
  Graph g;
  for (const auto& a : groundPattern) {
    if (a.hasVariable()) throw std::invalid_argument("toGraph: pattern is not ground");
    if (a.isRole)
      g.add(a.subject, a.pred, a.object);
    else
      g.add(a.subject, a.pred);
  }
  return g;
}

Graph evalQuery(const Query& q, const Graph& g) {
  Graph out;
  for (const auto& mu : valuations(q.pattern, g)) out.insert(toGraph(apply(mu, q.templ)));
  return out;
}

std::set<Name> extensionOf(const Concept& c, const Graph& g, const std::set<Name>& extra) {
  GraphModel m(g, extra, {&c}, {});
  int root = m.prog.compile(c, m.vocab);
  m.build(g);
  return m.names(m.interp.eval(m.prog, root));
}

bool holds(const Graph& g, const Axiom& ax, const std::set<Name>& extra) {
  GraphModel m(g, extra, {}, {&ax});
  CompiledAxiom c = compileAxiom(ax, m.prog, m.vocab);
  m.build(g);
  return m.interp.holds(m.prog, c);
}

bool holds(const Graph& g, const Shape& s, const std::set<Name>& extra) { return holds(g, s.axiom(), extra); }

bool valid(const Graph& g, const std::vector<Axiom>& sin, const std::set<Name>& extra) {
  for (const auto& ax : sin)
    if (!holds(g, ax, extra)) return false;
  return true;
}

ExtendedGraph extendedParts(const Query& q, const Graph& gin) {
  ExtendedGraph e;
  e.input = gin;
  auto mus = valuations(q.pattern, gin);
  e.matched = !mus.empty();
  for (const auto& mu : mus) {
    e.med.insert(toGraph(apply(mu, q.pattern)));
    e.out.insert(toGraph(apply(mu, q.templ)));
    for (const auto& [x, a] : mu) e.vars.add(a, Name::varConceptOf(x));
  }
  e.all = gin;
  e.all.insert(mark(e.med, Marking::Med));
  e.all.insert(e.vars);
  e.all.insert(mark(e.out, Marking::Out));
  return e;
}

Graph extendedGraph(const Query& q, const Graph& gin) { return extendedParts(q, gin).all; }

namespace {

struct Slots {
  std::vector<ConceptAssertion> concepts;
  std::vector<RoleAssertion> roles;
  std::size_t size() const { return concepts.size() + roles.size(); }
};

Slots makeSlots(const std::set<Name>& concepts, const std::set<Name>& roles, const std::vector<Name>& inds) {
  Slots s;
  for (const auto& c : concepts)
    for (const auto& i : inds) s.concepts.push_back({i, c});
  for (const auto& r : roles)
    for (const auto& a : inds)
      for (const auto& b : inds) s.roles.push_back({a, r, b});
  return s;
}

}  // namespace

void enumerateGraphs(const std::set<Name>& concepts, const std::set<Name>& roles, const std::vector<Name>& individuals,
                     int maxAssertions, const std::function<bool(const Graph&)>& visit) {
  Slots slots = makeSlots(concepts, roles, individuals);
  std::size_t n = slots.size();
  if (n > 30) throw std::invalid_argument("enumerateGraphs: more than 2^30 graphs");
  Graph g;
  // Depth-first over slots so the assertion cap prunes whole subtrees.
  std::function<bool(std::size_t, int)> rec = [&](std::size_t i, int used) -> bool {
    if (i == n) return visit(g);
    if (!rec(i + 1, used)) return false;
    if (maxAssertions >= 0 && used >= maxAssertions) return true;
    if (i < slots.concepts.size()) {
      auto it = g.concepts.insert(slots.concepts[i]).first;
      bool go = rec(i + 1, used + 1);
      g.concepts.erase(it);
      return go;
    }
    auto it = g.roles.insert(slots.roles[i - slots.concepts.size()]).first;
    bool go = rec(i + 1, used + 1);
    g.roles.erase(it);
    return go;
  };
  rec(0, 0);
}

std::vector<Graph> allGraphs(const std::set<Name>& concepts, const std::set<Name>& roles,
                             const std::vector<Name>& individuals, int maxAssertions) {
  std::vector<Graph> out;
  enumerateGraphs(concepts, roles, individuals, maxAssertions, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

// -------------------------------------------------------- soundness check

namespace {

// Bitmask-level evaluation of the query on one enumerated input.
struct FastQuery {
  struct T {
    int var = -1;   // variable index, or -1 for a constant
    int elem = -1;  // element for constants
  };
  struct A {
    bool role;
    int pred;  // concept or role id in the input vocabulary
    T s, o;
  };
  struct OutA {
    bool role;
    int pred;  // id in the output vocabulary
    T s, o;
  };
  std::vector<A> body;
  std::vector<OutA> head;
  int vars = 0;

  void run(const Interp& in, Interp& out) const {
    std::vector<int> val(static_cast<std::size_t>(vars), -1);
    rec(0, in, out, val);
  }

 private:
  static int get(const T& t, const std::vector<int>& val) { return t.var < 0 ? t.elem : val[t.var]; }

  void emit(Interp& out, const std::vector<int>& val) const {
    for (const auto& h : head) {
      if (h.role)
        out.addEdge(h.pred, get(h.s, val), get(h.o, val));
      else
        out.cext[h.pred] |= Mask{1} << get(h.s, val);
    }
  }

  void rec(std::size_t i, const Interp& in, Interp& out, std::vector<int>& val) const {
    if (i == body.size()) {
      emit(out, val);
      return;
    }
    const A& a = body[i];
    int s = get(a.s, val);
    if (!a.role) {
      Mask m = in.cext[a.pred];
      if (s >= 0) {
        if (m & (Mask{1} << s)) rec(i + 1, in, out, val);
        return;
      }
      for (int x = 0; x < in.n; ++x)
        if (m & (Mask{1} << x)) {
          val[a.s.var] = x;
          rec(i + 1, in, out, val);
          val[a.s.var] = -1;
        }
      return;
    }
    const auto& succ = in.succ[a.pred];
    for (int x = 0; x < in.n; ++x) {
      if (s >= 0 && x != s) continue;
      Mask targets = succ[x];
      if (!targets) continue;
      bool bindS = s < 0;
      if (bindS) val[a.s.var] = x;
      int o = get(a.o, val);
      if (o >= 0) {
        if (targets & (Mask{1} << o)) rec(i + 1, in, out, val);
      } else {
        for (int y = 0; y < in.n; ++y)
          if (targets & (Mask{1} << y)) {
            val[a.o.var] = y;
            rec(i + 1, in, out, val);
            val[a.o.var] = -1;
          }
      }
      if (bindS) val[a.s.var] = -1;
    }
  }
};

void setSlot(Interp& in, const Vocab& v, const ConceptAssertion& c) {
  in.cext[v.concepts.at(c.cls)] |= Mask{1} << v.inds.at(c.individual);
}

void setSlot(Interp& in, const Vocab& v, const RoleAssertion& r) {
  in.addEdge(v.roles.at(r.role), v.inds.at(r.subject), v.inds.at(r.object));
}

Graph graphOf(const Interp& in, const Vocab& v) {
  std::vector<Name> inds(v.inds.size()), concepts(v.concepts.size()), roles(v.roles.size());
  for (const auto& [n, id] : v.inds) inds[id] = n;
  for (const auto& [n, id] : v.concepts) concepts[id] = n;
  for (const auto& [n, id] : v.roles) roles[id] = n;
  Graph g;
  for (std::size_t c = 0; c < concepts.size(); ++c)
    for (int x = 0; x < in.n; ++x)
      if (in.cext[c] & (Mask{1} << x)) g.add(inds[x], concepts[c]);
  for (std::size_t r = 0; r < roles.size(); ++r)
    for (int x = 0; x < in.n; ++x)
      for (int y = 0; y < in.n; ++y)
        if (in.succ[r][x] & (Mask{1} << y)) g.add(inds[x], roles[r], inds[y]);
  return g;
}

}  // namespace

std::vector<Violation> checkSoundness(const std::vector<Axiom>& sin, const Query& q, const std::vector<Shape>& sout,
                                      const SoundnessBounds& bounds) {
  // Universe: named individuals first, padded with fresh ones up to the bound.
  std::set<Name> named = q.individuals();
  for (const auto& ax : sin)
    if (!ax.isRole()) {
      collectIndividuals(ax.lhs, named);
      collectIndividuals(ax.rhs, named);
    }
  for (const auto& s : sout) {
    collectIndividuals(s.target, named);
    collectIndividuals(s.constraint, named);
  }
  std::vector<Name> universe(named.begin(), named.end());
  for (int i = 1; static_cast<int>(universe.size()) < bounds.individuals; ++i) {
    Name fresh = Name::individual("i" + std::to_string(i));
    if (!named.count(fresh)) universe.push_back(fresh);
  }
  if (universe.size() > 64) throw std::invalid_argument("checkSoundness: universe too large");

  // Input vocabulary: the pattern's names are enumerated outright, names that
  // only occur in Sin are searched lazily when a violation candidate shows up.
  std::set<Name> patternNames = voc(q.pattern);
  std::set<Name> sinNames;
  for (const auto& ax : sin) {
    auto v = voc(ax);
    sinNames.insert(v.begin(), v.end());
  }
  std::set<Name> restNames;
  for (const auto& n : sinNames)
    if (!patternNames.count(n)) restNames.insert(n);

  Vocab in;
  for (const auto& n : universe) in.ind(n);
  for (const auto& n : patternNames) n.kind == Kind::Concept ? in.conceptId(n) : in.role(n);
  for (const auto& n : restNames) n.kind == Kind::Concept ? in.conceptId(n) : in.role(n);

  Program inProg;
  std::vector<CompiledAxiom> local, global;  // local: only pattern names
  for (const auto& ax : sin) {
    bool isLocal = true;
    for (const auto& n : voc(ax))
      if (restNames.count(n)) isLocal = false;
    (isLocal ? local : global).push_back(compileAxiom(ax, inProg, in));
  }

  Vocab outV;
  for (const auto& n : universe) outV.ind(n);
  for (const auto& a : q.templ) a.isRole ? outV.role(a.pred) : outV.conceptId(a.pred);
  Program outProg;
  std::vector<CompiledAxiom> outAx;
  for (const auto& s : sout) outAx.push_back(compileAxiom(s.axiom(), outProg, outV));

  FastQuery fq;
  std::map<Name, int> varIdx;
  auto term = [&](const Name& t) {
    FastQuery::T r;
    if (t.isVariable()) {
      auto [it, fresh] = varIdx.emplace(t, static_cast<int>(varIdx.size()));
      r.var = it->second;
    } else {
      r.elem = in.inds.at(t);
    }
    return r;
  };
  for (const auto& a : joinOrder(q.pattern))
    fq.body.push_back({a.isRole, a.isRole ? in.roles.at(a.pred) : in.concepts.at(a.pred), term(a.subject),
                       a.isRole ? term(a.object) : FastQuery::T{}});
  fq.vars = static_cast<int>(varIdx.size());
  for (const auto& a : q.templ)
    fq.head.push_back({a.isRole, a.isRole ? outV.roles.at(a.pred) : outV.concepts.at(a.pred), term(a.subject),
                       a.isRole ? term(a.object) : FastQuery::T{}});

  Slots main = makeSlots(conceptNames(patternNames), roleNames(patternNames), universe);
  Slots rest = makeSlots(conceptNames(restNames), roleNames(restNames), universe);
  if (main.size() > 30 || rest.size() > 30)
    throw std::invalid_argument("checkSoundness: vocabulary too large for the bound");

  int n = static_cast<int>(universe.size());
  Interp gin, gout, full;
  gin.indElem.resize(universe.size());
  for (int i = 0; i < n; ++i) gin.indElem[i] = i;
  std::vector<Violation> report;

  auto fill = [&](Interp& target, const Slots& slots, std::uint64_t bits) {
    std::size_t k = 0;
    for (const auto& c : slots.concepts)
      if (bits & (std::uint64_t{1} << k++)) setSlot(target, in, c);
    for (const auto& r : slots.roles)
      if (bits & (std::uint64_t{1} << k++)) setSlot(target, in, r);
  };

  std::uint64_t mainCount = std::uint64_t{1} << main.size();
  std::uint64_t restCount = std::uint64_t{1} << rest.size();
  for (std::uint64_t bits = 0; bits < mainCount; ++bits) {
    gin.reset(n, in);
    fill(gin, main, bits);
    bool ok = true;
    for (const auto& ax : local)
      if (!gin.holds(inProg, ax)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    gout.reset(n, outV);
    gout.indElem = gin.indElem;
    fq.run(gin, gout);
    std::vector<std::size_t> failing;
    for (std::size_t i = 0; i < outAx.size(); ++i)
      if (!gout.holds(outProg, outAx[i])) failing.push_back(i);
    if (failing.empty()) continue;
    // A violation counts only if some completion over the remaining names is valid.
    for (std::uint64_t rb = 0; rb < restCount; ++rb) {
      full = gin;
      fill(full, rest, rb);
      bool fullOk = true;
      for (const auto& ax : global)
        if (!full.holds(inProg, ax)) {
          fullOk = false;
          break;
        }
      if (!fullOk) continue;
      Graph input = graphOf(full, in);
      Graph output = graphOf(gout, outV);
      for (std::size_t i : failing) report.push_back({input, output, sout[i]});
      break;
    }
  }
  return report;
}

// ------------------------------------------------------ bounded models

namespace {

void partitions(int n, std::vector<int>& assign, int i, int blocks, const std::function<void(int)>& visit) {
  if (i == n) {
    visit(blocks);
    return;
  }
  for (int b = 0; b <= blocks; ++b) {
    assign[i] = b;
    partitions(n, assign, i + 1, std::max(blocks, b + 1), visit);
  }
}

}  // namespace

bool boundedModelConsistent(const KnowledgeBase& kb, const std::vector<Name>& individuals) {
  Vocab v;
  Program prog;
  for (const auto& i : individuals) v.ind(i);
  std::vector<CompiledAxiom> axioms;
  for (const auto& ax : kb.tbox) axioms.push_back(compileAxiom(ax, prog, v));
  std::vector<std::pair<int, int>> cas;  // individual id, program root
  for (const auto& [ind, c] : kb.conceptAssertions) {
    int id = v.ind(ind);
    cas.push_back({id, prog.compile(c, v)});
  }
  struct RA {
    int s, r, o;
  };
  std::vector<RA> ras;
  for (const auto& ra : kb.roleAssertions) ras.push_back({v.ind(ra.subject), v.role(ra.role), v.ind(ra.object)});

  int nInd = static_cast<int>(v.inds.size());
  if (nInd > 6) throw std::invalid_argument("boundedModelConsistent: too many individuals");
  int nc = static_cast<int>(v.concepts.size());
  int nr = static_cast<int>(v.roles.size());

  bool found = false;
  std::vector<int> assign(static_cast<std::size_t>(nInd), 0);
  Interp I;
  partitions(nInd, assign, 0, 0, [&](int d) {
    if (found || d == 0) return;
    int bits = nc * d + nr * d * d;
    if (bits > 26) throw std::invalid_argument("boundedModelConsistent: search space too large");
    I.indElem = assign;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << bits) && !found; ++m) {
      I.reset(d, v);
      int k = 0;
      for (int c = 0; c < nc; ++c)
        for (int x = 0; x < d; ++x, ++k)
          if (m & (std::uint64_t{1} << k)) I.cext[c] |= Mask{1} << x;
      for (int r = 0; r < nr; ++r)
        for (int x = 0; x < d; ++x)
          for (int y = 0; y < d; ++y, ++k)
            if (m & (std::uint64_t{1} << k)) I.addEdge(r, x, y);
      bool ok = true;
      for (const auto& ra : ras)
        if (!(I.succ[ra.r][I.indElem[ra.s]] & (Mask{1} << I.indElem[ra.o]))) {
          ok = false;
          break;
        }
      for (std::size_t i = 0; ok && i < cas.size(); ++i)
        if (!(I.eval(prog, cas[i].second) & (Mask{1} << I.indElem[cas[i].first]))) ok = false;
      for (std::size_t i = 0; ok && i < axioms.size(); ++i)
        if (!I.holds(prog, axioms[i])) ok = false;
      if (ok) found = true;
    }
  });
  return found;
}

KnowledgeBase validationKB(const Graph& g, const std::set<Name>& names, const std::vector<Name>& individuals) {
  KnowledgeBase kb;
  std::vector<Concept> noms;
  for (const auto& a : individuals) noms.push_back(Concept::nominal(a));
  for (auto& ax : equiv(Concept::top(), Concept::disjAll(noms))) kb.tbox.push_back(ax);
  for (std::size_t i = 0; i < individuals.size(); ++i)
    for (std::size_t j = i + 1; j < individuals.size(); ++j)
      for (auto& ax : equiv(Concept::conj(noms[i], noms[j]), Concept::bottom())) kb.tbox.push_back(ax);
  std::set<Name> all = names;
  auto gv = voc(g);
  all.insert(gv.begin(), gv.end());
  for (const auto& n : all) {
    if (n.kind == Kind::Concept) {
      std::vector<Concept> members;
      for (const auto& c : g.concepts)
        if (c.cls == n) members.push_back(Concept::nominal(c.individual));
      for (auto& ax : equiv(Concept::atom(n), Concept::disjAll(members))) kb.tbox.push_back(ax);
    } else if (n.kind == Kind::Role) {
      for (const auto& a : individuals) {
        std::vector<Concept> preds, succs;
        for (const auto& r : g.roles) {
          if (r.role != n) continue;
          if (r.object == a) preds.push_back(Concept::nominal(r.subject));
          if (r.subject == a) succs.push_back(Concept::nominal(r.object));
        }
        Concept na = Concept::nominal(a);
        for (auto& ax : equiv(Concept::exists({n, false}, na), Concept::disjAll(preds))) kb.tbox.push_back(ax);
        for (auto& ax : equiv(Concept::exists({n, true}, na), Concept::disjAll(succs))) kb.tbox.push_back(ax);
      }
    }
  }
  for (const auto& c : g.concepts) kb.conceptAssertions.push_back({c.individual, Concept::atom(c.cls)});
  for (const auto& r : g.roles) kb.roleAssertions.push_back(r);
  return kb;
}

}  // namespace cshapes
