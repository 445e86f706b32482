#include "cshapes/model.hpp"

#include <cctype>
#include <stdexcept>

namespace cshapes {

bool validIdentifier(const std::string& id) {
  if (id.empty()) return false;
  for (unsigned char ch : id)
    if (!std::isalnum(ch) && ch != '_') return false;
  return true;
}

struct Concept::Node {
  Op op = Op::Top;
  Name name;
  Role role;
  Concept a, b;  // only meaningful for compound ops
  Node() = default;
  Node(Op o) : op(o) {}
};

// A null node is Top, so default construction never allocates.
Concept::Concept() : n_(nullptr) {}

Concept Concept::top() { return Concept(); }
Concept Concept::bottom() { return Concept(std::make_shared<const Node>(Op::Bottom)); }

Concept Concept::atom(Name n) {
  auto node = std::make_shared<Node>(Op::Atom);
  node->name = std::move(n);
  return Concept(node);
}

Concept Concept::nominal(Name n) {
  auto node = std::make_shared<Node>(Op::Nominal);
  node->name = std::move(n);
  return Concept(node);
}

Concept Concept::negate(Concept c) {
  auto node = std::make_shared<Node>(Op::Not);
  node->a = std::move(c);
  return Concept(node);
}

Concept Concept::conj(Concept a, Concept b) {
  auto node = std::make_shared<Node>(Op::And);
  node->a = std::move(a);
  node->b = std::move(b);
  return Concept(node);
}

Concept Concept::disj(Concept a, Concept b) {
  auto node = std::make_shared<Node>(Op::Or);
  node->a = std::move(a);
  node->b = std::move(b);
  return Concept(node);
}

Concept Concept::exists(Role r, Concept c) {
  auto node = std::make_shared<Node>(Op::Exists);
  node->role = std::move(r);
  node->a = std::move(c);
  return Concept(node);
}

Concept Concept::forall(Role r, Concept c) {
  auto node = std::make_shared<Node>(Op::Forall);
  node->role = std::move(r);
  node->a = std::move(c);
  return Concept(node);
}

Concept Concept::conjAll(const std::vector<Concept>& cs) {
  if (cs.empty()) return top();
  Concept acc = cs.front();
  for (std::size_t i = 1; i < cs.size(); ++i) acc = conj(acc, cs[i]);
  return acc;
}

Concept Concept::disjAll(const std::vector<Concept>& cs) {
  if (cs.empty()) return bottom();
  Concept acc = cs.front();
  for (std::size_t i = 1; i < cs.size(); ++i) acc = disj(acc, cs[i]);
  return acc;
}

namespace {
const Name kNoName{};
const Role kNoRole{};
const Concept kTop{};
}  // namespace

Concept::Op Concept::op() const { return n_ ? n_->op : Op::Top; }
const Name& Concept::name() const { return n_ ? n_->name : kNoName; }
const Role& Concept::role() const { return n_ ? n_->role : kNoRole; }
const Concept& Concept::left() const { return n_ ? n_->a : kTop; }
const Concept& Concept::right() const { return n_ ? n_->b : kTop; }

std::strong_ordering Concept::operator<=>(const Concept& o) const {
  if (n_ == o.n_) return std::strong_ordering::equal;
  if (auto c = op() <=> o.op(); c != 0) return c;
  switch (op()) {
    case Op::Top:
    case Op::Bottom:
      return std::strong_ordering::equal;
    case Op::Atom:
    case Op::Nominal:
      return name() <=> o.name();
    case Op::Not:
      return left() <=> o.left();
    case Op::And:
    case Op::Or:
      if (auto c = left() <=> o.left(); c != 0) return c;
      return right() <=> o.right();
    case Op::Exists:
    case Op::Forall:
      if (auto c = role() <=> o.role(); c != 0) return c;
      return left() <=> o.left();
  }
  return std::strong_ordering::equal;
}

std::vector<Axiom> equiv(const Concept& c, const Concept& d) {
  return {Axiom::incl(c, d), Axiom::incl(d, c)};
}

bool isShapeTarget(const Concept& c) {
  if (c.op() == Concept::Op::Atom) return !c.name().varConcept;
  return c.op() == Concept::Op::Exists && c.left().isTop();
}

bool isShapeConstraint(const Concept& c) {
  auto plainAtom = [](const Concept& x) { return x.op() == Concept::Op::Atom && !x.name().varConcept; };
  if (plainAtom(c)) return true;
  if (c.op() == Concept::Op::Exists || c.op() == Concept::Op::Forall) return plainAtom(c.left());
  return false;
}

bool isSimpleShape(const Shape& s) { return isShapeTarget(s.target) && isShapeConstraint(s.constraint); }

std::optional<Shape> asShape(const Axiom& ax) {
  if (ax.isRole()) return std::nullopt;
  Shape s{ax.lhs, ax.rhs};
  if (!isSimpleShape(s)) return std::nullopt;
  return s;
}

void Graph::insert(const Graph& g) {
  concepts.insert(g.concepts.begin(), g.concepts.end());
  roles.insert(g.roles.begin(), g.roles.end());
}

bool Graph::contains(const Graph& g) const {
  for (const auto& c : g.concepts)
    if (!concepts.count(c)) return false;
  for (const auto& r : g.roles)
    if (!roles.count(r)) return false;
  return true;
}

std::set<Name> Graph::individuals() const {
  std::set<Name> out;
  for (const auto& c : concepts) out.insert(c.individual);
  for (const auto& r : roles) {
    out.insert(r.subject);
    out.insert(r.object);
  }
  return out;
}

std::vector<Name> Atom::terms() const {
  if (isRole) return {subject, object};
  return {subject};
}

bool Atom::hasVariable() const {
  return subject.isVariable() || (isRole && object.isVariable());
}

std::set<Name> variables(const Pattern& p) {
  std::set<Name> out;
  for (const auto& a : p)
    for (const auto& t : a.terms())
      if (t.isVariable()) out.insert(t);
  return out;
}

std::set<Name> individuals(const Pattern& p) {
  std::set<Name> out;
  for (const auto& a : p)
    for (const auto& t : a.terms())
      if (t.isIndividual()) out.insert(t);
  return out;
}

std::set<Name> terms(const Pattern& p) {
  std::set<Name> out;
  for (const auto& a : p)
    for (const auto& t : a.terms()) out.insert(t);
  return out;
}

std::set<Name> Query::individuals() const {
  auto out = cshapes::individuals(pattern);
  auto h = cshapes::individuals(templ);
  out.insert(h.begin(), h.end());
  return out;
}

namespace {
void vocInto(const Concept& c, std::set<Name>& out) {
  switch (c.op()) {
    case Concept::Op::Atom:
      out.insert(c.name());
      break;
    case Concept::Op::Not:
      vocInto(c.left(), out);
      break;
    case Concept::Op::And:
    case Concept::Op::Or:
      vocInto(c.left(), out);
      vocInto(c.right(), out);
      break;
    case Concept::Op::Exists:
    case Concept::Op::Forall:
      out.insert(c.role().name);
      vocInto(c.left(), out);
      break;
    default:
      break;
  }
}
}  // namespace

std::set<Name> voc(const Concept& c) {
  std::set<Name> out;
  vocInto(c, out);
  return out;
}

std::set<Name> voc(const Axiom& a) {
  std::set<Name> out;
  if (a.isRole()) {
    out.insert(a.rlhs.name);
    out.insert(a.rrhs.name);
  } else {
    vocInto(a.lhs, out);
    vocInto(a.rhs, out);
  }
  return out;
}

std::set<Name> voc(const Shape& s) { return voc(s.axiom()); }

std::set<Name> voc(const Graph& g) {
  std::set<Name> out;
  for (const auto& c : g.concepts) out.insert(c.cls);
  for (const auto& r : g.roles) out.insert(r.role);
  return out;
}

std::set<Name> voc(const Pattern& p) {
  std::set<Name> out;
  for (const auto& a : p) out.insert(a.pred);
  return out;
}

std::set<Name> voc(const Query& q) { return voc(q.templ); }

std::set<Name> conceptNames(const std::set<Name>& names) {
  std::set<Name> out;
  for (const auto& n : names)
    if (n.kind == Kind::Concept) out.insert(n);
  return out;
}

std::set<Name> roleNames(const std::set<Name>& names) {
  std::set<Name> out;
  for (const auto& n : names)
    if (n.kind == Kind::Role) out.insert(n);
  return out;
}

void collectIndividuals(const Concept& c, std::set<Name>& out) {
  switch (c.op()) {
    case Concept::Op::Nominal:
      out.insert(c.name());
      break;
    case Concept::Op::Not:
    case Concept::Op::Exists:
    case Concept::Op::Forall:
      collectIndividuals(c.left(), out);
      break;
    case Concept::Op::And:
    case Concept::Op::Or:
      collectIndividuals(c.left(), out);
      collectIndividuals(c.right(), out);
      break;
    default:
      break;
  }
}

Name mark(const Name& n, Marking m) {
  if ((n.kind != Kind::Concept && n.kind != Kind::Role) || n.varConcept) return n;
  Name out = n;
  out.marking = m;
  return out;
}

Role mark(const Role& r, Marking m) { return {mark(r.name, m), r.inverted}; }

namespace {
template <class F>
Concept mapNames(const Concept& c, const F& f) {
  using Op = Concept::Op;
  switch (c.op()) {
    case Op::Top:
    case Op::Bottom:
    case Op::Nominal:
      return c;
    case Op::Atom:
      return Concept::atom(f(c.name()));
    case Op::Not:
      return Concept::negate(mapNames(c.left(), f));
    case Op::And:
      return Concept::conj(mapNames(c.left(), f), mapNames(c.right(), f));
    case Op::Or:
      return Concept::disj(mapNames(c.left(), f), mapNames(c.right(), f));
    case Op::Exists:
      return Concept::exists({f(c.role().name), c.role().inverted}, mapNames(c.left(), f));
    case Op::Forall:
      return Concept::forall({f(c.role().name), c.role().inverted}, mapNames(c.left(), f));
  }
  return c;
}

template <class F>
Axiom mapNames(const Axiom& a, const F& f) {
  if (a.isRole()) return Axiom::roleIncl({f(a.rlhs.name), a.rlhs.inverted}, {f(a.rrhs.name), a.rrhs.inverted});
  return Axiom::incl(mapNames(a.lhs, f), mapNames(a.rhs, f));
}
}  // namespace

Concept mark(const Concept& c, Marking m) {
  return mapNames(c, [m](const Name& n) { return mark(n, m); });
}

Axiom mark(const Axiom& a, Marking m) {
  return mapNames(a, [m](const Name& n) { return mark(n, m); });
}

Shape mark(const Shape& s, Marking m) { return {mark(s.target, m), mark(s.constraint, m)}; }

Graph mark(const Graph& g, Marking m) {
  Graph out;
  for (const auto& c : g.concepts) out.add(c.individual, mark(c.cls, m));
  for (const auto& r : g.roles) out.add(r.subject, mark(r.role, m), r.object);
  return out;
}

Name unmark(const Name& n) { return mark(n, Marking::Plain); }

Concept unmark(const Concept& c) { return mark(c, Marking::Plain); }

Axiom unmark(const Axiom& a) { return mark(a, Marking::Plain); }

Concept conceptFor(const Name& term) {
  if (term.isIndividual()) return Concept::nominal(term);
  if (term.isVariable()) return Concept::atom(Name::varConceptOf(term));
  throw std::invalid_argument("conceptFor: expected a variable or individual");
}

namespace {
Concept nnfPos(const Concept& c);

Concept nnfNeg(const Concept& c) {
  using Op = Concept::Op;
  switch (c.op()) {
    case Op::Top:
      return Concept::bottom();
    case Op::Bottom:
      return Concept::top();
    case Op::Atom:
    case Op::Nominal:
      return Concept::negate(c);
    case Op::Not:
      return nnfPos(c.left());
    case Op::And:
      return Concept::disj(nnfNeg(c.left()), nnfNeg(c.right()));
    case Op::Or:
      return Concept::conj(nnfNeg(c.left()), nnfNeg(c.right()));
    case Op::Exists:
      return Concept::forall(c.role(), nnfNeg(c.left()));
    case Op::Forall:
      return Concept::exists(c.role(), nnfNeg(c.left()));
  }
  return c;
}

Concept nnfPos(const Concept& c) {
  using Op = Concept::Op;
  switch (c.op()) {
    case Op::Not:
      return nnfNeg(c.left());
    case Op::And:
      return Concept::conj(nnfPos(c.left()), nnfPos(c.right()));
    case Op::Or:
      return Concept::disj(nnfPos(c.left()), nnfPos(c.right()));
    case Op::Exists:
      return Concept::exists(c.role(), nnfPos(c.left()));
    case Op::Forall:
      return Concept::forall(c.role(), nnfPos(c.left()));
    default:
      return c;
  }
}
}  // namespace

Concept nnf(const Concept& c) { return nnfPos(c); }

}  // namespace cshapes
