#ifndef CSHAPES_MODEL_HPP
#define CSHAPES_MODEL_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cshapes {

enum class Kind : std::uint8_t { Concept, Role, Individual, Variable };

// Plain names come from user input. Med and Out are the copies of the
// vocabulary used for the intermediate and output graphs.
enum class Marking : std::uint8_t { Plain, Med, Out };

struct Name {
  Kind kind = Kind::Concept;
  Marking marking = Marking::Plain;
  // Concept names standing for "all values bound to variable <id>".
  bool varConcept = false;
  std::string id;

  static Name conceptName(std::string id) { return {Kind::Concept, Marking::Plain, false, std::move(id)}; }
  static Name role(std::string id) { return {Kind::Role, Marking::Plain, false, std::move(id)}; }
  static Name individual(std::string id) { return {Kind::Individual, Marking::Plain, false, std::move(id)}; }
  static Name variable(std::string id) { return {Kind::Variable, Marking::Plain, false, std::move(id)}; }
  static Name varConceptOf(const Name& var) { return {Kind::Concept, Marking::Plain, true, var.id}; }

  bool isTerm() const { return kind == Kind::Individual || kind == Kind::Variable; }
  bool isVariable() const { return kind == Kind::Variable; }
  bool isIndividual() const { return kind == Kind::Individual; }

  auto operator<=>(const Name&) const = default;
  bool operator==(const Name&) const = default;
};

// True for identifiers made of letters, digits and '_' (a leading ':' is
// accepted and ignored by callers before this check).
bool validIdentifier(const std::string& id);

struct Role {
  Name name;
  bool inverted = false;

  Role inverse() const { return {name, !inverted}; }
  auto operator<=>(const Role&) const = default;
  bool operator==(const Role&) const = default;
};

class Concept {
 public:
  enum class Op : std::uint8_t { Top, Bottom, Atom, Nominal, Not, And, Or, Exists, Forall };

  Concept();  // Top

  static Concept top();
  static Concept bottom();
  static Concept atom(Name n);
  static Concept nominal(Name n);
  static Concept negate(Concept c);
  static Concept conj(Concept a, Concept b);
  static Concept disj(Concept a, Concept b);
  static Concept exists(Role r, Concept c);
  static Concept forall(Role r, Concept c);
  // Folds a list with conj/disj; empty lists give Top/Bottom.
  static Concept conjAll(const std::vector<Concept>& cs);
  static Concept disjAll(const std::vector<Concept>& cs);

  Op op() const;
  const Name& name() const;  // Atom, Nominal
  const Role& role() const;  // Exists, Forall
  const Concept& left() const;   // Not, And, Or, Exists, Forall
  const Concept& right() const;  // And, Or

  bool isAtom() const { return op() == Op::Atom; }
  bool isTop() const { return op() == Op::Top; }

  std::strong_ordering operator<=>(const Concept& o) const;
  bool operator==(const Concept& o) const { return (*this <=> o) == 0; }

 private:
  struct Node;
  explicit Concept(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

struct Axiom {
  enum class Type : std::uint8_t { ConceptIncl, RoleIncl };
  Type type = Type::ConceptIncl;
  Concept lhs, rhs;   // ConceptIncl
  Role rlhs, rrhs;    // RoleIncl

  static Axiom incl(Concept l, Concept r) { return {Type::ConceptIncl, std::move(l), std::move(r), {}, {}}; }
  static Axiom roleIncl(Role l, Role r) { return {Type::RoleIncl, {}, {}, std::move(l), std::move(r)}; }

  bool isRole() const { return type == Type::RoleIncl; }
  auto operator<=>(const Axiom&) const = default;
  bool operator==(const Axiom&) const = default;
};

// Both inclusions of C ≡ D.
std::vector<Axiom> equiv(const Concept& c, const Concept& d);

struct Shape {
  Concept target;
  Concept constraint;

  Axiom axiom() const { return Axiom::incl(target, constraint); }
  auto operator<=>(const Shape&) const = default;
  bool operator==(const Shape&) const = default;
};

bool isShapeTarget(const Concept& c);      // A | ∃ρ.⊤
bool isShapeConstraint(const Concept& c);  // A | ∃ρ.A | ∀ρ.A
bool isSimpleShape(const Shape& s);
// The Simple SHACL reading of an axiom, if it has one.
std::optional<Shape> asShape(const Axiom& ax);

struct ConceptAssertion {
  Name individual;
  Name cls;
  auto operator<=>(const ConceptAssertion&) const = default;
  bool operator==(const ConceptAssertion&) const = default;
};

struct RoleAssertion {
  Name subject;
  Name role;
  Name object;
  auto operator<=>(const RoleAssertion&) const = default;
  bool operator==(const RoleAssertion&) const = default;
};

// Simple RDF graph: concept assertions only use concept names.
struct Graph {
  std::set<ConceptAssertion> concepts;
  std::set<RoleAssertion> roles;

  void add(const Name& ind, const Name& cls) { concepts.insert({ind, cls}); }
  void add(const Name& s, const Name& role, const Name& o) { roles.insert({s, role, o}); }
  void insert(const Graph& g);
  bool empty() const { return concepts.empty() && roles.empty(); }
  std::size_t size() const { return concepts.size() + roles.size(); }
  bool contains(const Graph& g) const;  // g ⊆ *this
  std::set<Name> individuals() const;

  auto operator<=>(const Graph&) const = default;
  bool operator==(const Graph&) const = default;
};

// u:A (isRole false, pred = concept) or (u,v):p (pred = role).
struct Atom {
  Name subject;
  bool isRole = false;
  Name pred;
  Name object;  // unused for concept atoms

  static Atom conceptAtom(Name s, Name c) { return {std::move(s), false, std::move(c), {}}; }
  static Atom role(Name s, Name r, Name o) { return {std::move(s), true, std::move(r), std::move(o)}; }

  std::vector<Name> terms() const;
  bool hasVariable() const;
  auto operator<=>(const Atom&) const = default;
  bool operator==(const Atom&) const = default;
};

using Pattern = std::set<Atom>;

std::set<Name> variables(const Pattern& p);
std::set<Name> individuals(const Pattern& p);
std::set<Name> terms(const Pattern& p);

struct Query {
  Pattern templ;    // H
  Pattern pattern;  // P

  std::set<Name> individuals() const;
  auto operator<=>(const Query&) const = default;
  bool operator==(const Query&) const = default;
};

struct KnowledgeBase {
  std::vector<Axiom> tbox;
  std::vector<std::pair<Name, Concept>> conceptAssertions;
  std::vector<RoleAssertion> roleAssertions;
};

// Concept and role names (never individuals or variables).
std::set<Name> voc(const Concept& c);
std::set<Name> voc(const Axiom& a);
std::set<Name> voc(const Shape& s);
std::set<Name> voc(const Graph& g);
std::set<Name> voc(const Pattern& p);
std::set<Name> voc(const Query& q);  // template only
std::set<Name> conceptNames(const std::set<Name>& names);
std::set<Name> roleNames(const std::set<Name>& names);

// Collects individual names that occur in nominals.
void collectIndividuals(const Concept& c, std::set<Name>& out);

Name mark(const Name& n, Marking m);
Role mark(const Role& r, Marking m);
Concept mark(const Concept& c, Marking m);
Axiom mark(const Axiom& a, Marking m);
Shape mark(const Shape& s, Marking m);
Graph mark(const Graph& g, Marking m);
Name unmark(const Name& n);
Concept unmark(const Concept& c);
Axiom unmark(const Axiom& a);

Concept conceptFor(const Name& term);
Concept nnf(const Concept& c);

}  // namespace cshapes

#endif  // CSHAPES_MODEL_HPP
