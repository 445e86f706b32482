#include <gtest/gtest.h>

#include "cshapes/oracle.hpp"
#include "cshapes/problems.hpp"
#include "cshapes/syntax.hpp"

using namespace cshapes;

namespace {

Name ind(const char* s) { return Name::individual(s); }
Name cn(const char* s) { return Name::conceptName(s); }
Concept at(const char* s) { return Concept::atom(cn(s)); }
Role role(const char* s, bool inv = false) { return {Name::role(s), inv}; }

const char* kQ1 =
    "CONSTRUCT { ?y a :E . ?y :p ?z . ?z a :B } WHERE { ?w :p ?y . ?y a :B . ?x :p ?z . ?z a :E }";

Graph g1() { return parseGraph(":a a :A .\n:b a :B .\n:b a :E .\n:a :p :b .\n:b :p :a .\n:b :r :a .\n"); }
Graph g2() { return parseGraph(":a a :A .\n:b a :B .\n:b a :E .\n:e a :E .\n:a :p :b .\n:a :p :e .\n"); }

}  // namespace

TEST(Oracle, EvaluatesRunningQuery) {
  Query q1 = parseQuery(kQ1);
  EXPECT_EQ(evalQuery(q1, g1()), parseGraph(":b a :E .\n:b a :B .\n:b :p :b .\n"));
  EXPECT_EQ(evalQuery(q1, g2()), parseGraph(":b a :E .\n:b a :B .\n:e a :B .\n:b :p :b .\n:b :p :e .\n"));
  EXPECT_TRUE(evalQuery(q1, Graph{}).empty());
}

TEST(Oracle, Extensions) {
  EXPECT_EQ(extensionOf(Concept::exists(role("p"), at("B")), g1()), (std::set<Name>{ind("a")}));
  EXPECT_EQ(extensionOf(Concept::top(), g1(), {ind("z")}), (std::set<Name>{ind("a"), ind("b"), ind("z")}));
  EXPECT_TRUE(extensionOf(Concept::conj(Concept::negate(at("A")), at("A")), g1()).empty());
  EXPECT_EQ(extensionOf(Concept::forall(role("p", true), at("E")), g2(), {ind("z")}),
            (std::set<Name>{ind("a"), ind("z")}));
}

TEST(Oracle, HoldsOnFigureGraphs) {
  auto s1 = parseShapes(":A <: exists :p . :B\nexists :r . Top <: :B\n:B <: :E\n");
  EXPECT_TRUE(valid(g1(), s1));
  EXPECT_TRUE(valid(g2(), s1));
  EXPECT_TRUE(holds(g1(), s1[0]));
  EXPECT_TRUE(holds(g1(), s1[1]));
  EXPECT_TRUE(holds(g2(), Axiom::incl(Concept::exists(role("p", true), Concept::top()), at("E"))));
  EXPECT_FALSE(holds(g2(), Axiom::incl(at("E"), at("B"))));
  EXPECT_TRUE(holds(g1(), Axiom::roleIncl(role("r"), role("p"))));
  EXPECT_FALSE(holds(g1(), Axiom::roleIncl(role("p"), role("r"))));
  EXPECT_TRUE(holds(g1(), Axiom::roleIncl(role("r"), role("p", true))));
}

TEST(Oracle, ExtendedGraphOfRunningExample) {
  Graph ext = extendedGraph(parseQuery(kQ1), g1());
  Name a = ind("a"), b = ind("b");
  auto v = [](const char* x) { return Name::varConceptOf(Name::variable(x)); };
  auto med = [](const char* s) { return mark(Name::conceptName(s), Marking::Med); };
  auto out = [](const char* s) { return mark(Name::conceptName(s), Marking::Out); };
  std::set<Name> aLabels, bLabels;
  for (const auto& c : ext.concepts) (c.individual == a ? aLabels : bLabels).insert(c.cls);
  EXPECT_EQ(aLabels, (std::set<Name>{cn("A"), v("w"), v("x")}));
  EXPECT_EQ(bLabels, (std::set<Name>{cn("B"), med("B"), out("B"), v("y"), cn("E"), med("E"), out("E"), v("z")}));
  Name p = Name::role("p"), r = Name::role("r");
  EXPECT_EQ(ext.roles, (std::set<RoleAssertion>{{a, p, b},
                                                {a, mark(p, Marking::Med), b},
                                                {b, p, a},
                                                {b, r, a},
                                                {b, mark(p, Marking::Out), b}}));
}

TEST(Oracle, ExtendedGraphOfCopyQuery) {
  Query q = parseQuery("CONSTRUCT { ?x a :A . ?x :p ?y } WHERE { ?x a :A . ?x :p ?y }");
  Graph g = parseGraph(":a a :A .\n:a :p :b .\n:b a :A .\n:b :p :b .\n");
  auto parts = extendedParts(q, g);
  EXPECT_EQ(parts.med, g);
  EXPECT_EQ(parts.out, evalQuery(q, g));
  EXPECT_EQ(parts.out, g);
  Graph expected = g;
  expected.insert(mark(g, Marking::Med));
  expected.insert(mark(g, Marking::Out));
  expected.insert(parts.vars);
  EXPECT_EQ(parts.all, expected);
  EXPECT_TRUE(extendedGraph(q, Graph{}).empty());
}

TEST(Oracle, EnumeratesGraphs) {
  EXPECT_EQ(allGraphs({}, {}, {ind("a")}).size(), 1U);
  EXPECT_EQ(allGraphs({cn("A")}, {}, {ind("a")}).size(), 2U);
  EXPECT_EQ(allGraphs({cn("A")}, {Name::role("p")}, {ind("a"), ind("b")}).size(), 64U);
  auto gs = allGraphs({cn("A")}, {Name::role("p")}, {ind("a"), ind("b")});
  EXPECT_EQ(std::set<Graph>(gs.begin(), gs.end()).size(), 64U);
  EXPECT_EQ(allGraphs({cn("A")}, {Name::role("p")}, {ind("a"), ind("b")}, 1).size(), 7U);
}

TEST(Oracle, SoundnessChecks) {
  auto s1 = parseShapes(":A <: exists :p . :B\nexists :r . Top <: :B\n:B <: :E\n");
  Query q1 = parseQuery(kQ1);
  auto out = parseShapes(":E <: :B\n:E <: exists :p . :B\nexists :p- . Top <: :B\n");
  std::vector<Shape> shapes;
  for (const auto& ax : out) shapes.push_back(*asShape(ax));
  EXPECT_TRUE(checkSoundness(s1, q1, shapes, {3}).empty());

  Query copy = parseQuery("CONSTRUCT { ?x a :A } WHERE { ?x a :A }");
  Shape bogus{at("A"), Concept::bottom()};
  EXPECT_TRUE(checkSoundness({}, copy, {Shape{Concept::bottom(), Concept::top()}}, {2}).empty());
  auto v = checkSoundness({}, copy, {bogus}, {2});
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].shape, bogus);
  EXPECT_FALSE(v[0].output.empty());
}

TEST(Oracle, BoundedModels) {
  KnowledgeBase kb;
  kb.tbox.push_back(Axiom::incl(Concept::top(), Concept::nominal(ind("a"))));
  kb.tbox.push_back(Axiom::incl(at("A"), Concept::bottom()));
  kb.conceptAssertions.push_back({ind("a"), at("A")});
  EXPECT_FALSE(boundedModelConsistent(kb, {ind("a")}));

  KnowledgeBase two;
  two.tbox.push_back(Axiom::incl(Concept::top(), Concept::disj(Concept::nominal(ind("a")), Concept::nominal(ind("b")))));
  EXPECT_TRUE(boundedModelConsistent(two, {ind("a"), ind("b")}));
}

// Model-validity equals consistency of the validation KB, at desk scale.
TEST(Oracle, ValidationKnowledgeBase) {
  std::vector<Name> inds{ind("a"), ind("b")};
  std::set<Name> names{cn("A"), Name::role("p")};
  Rng rng(17);
  auto graphs = allGraphs({cn("A")}, {Name::role("p")}, inds);
  std::vector<Name> cs{cn("A")}, rs{Name::role("p")};
  for (int i = 0; i < 150; ++i) {
    const Graph& g = graphs[static_cast<std::size_t>(i) % graphs.size()];
    Axiom ax = Axiom::incl(randomConcept(rng, cs, rs, inds, 2), randomConcept(rng, cs, rs, inds, 2));
    KnowledgeBase kb = validationKB(g, names, inds);
    kb.tbox.push_back(ax);
    ASSERT_EQ(holds(g, ax, {inds.begin(), inds.end()}), boundedModelConsistent(kb, inds)) << render(ax) << "\n" << render(g);
  }
}

TEST(Oracle, MarkingCommutesWithExtendedGraph) {
  Rng rng(23);
  GeneratorConfig cfg;
  cfg.maxConcepts = 2;
  cfg.maxRoles = 1;
  for (int i = 0; i < 60; ++i) {
    Problem p = randomProblem(cfg, rng);
    std::set<Name> cs, rs;
    for (const auto& n : voc(p.query.pattern)) (n.kind == Kind::Role ? rs : cs).insert(n);
    auto gs = allGraphs(cs, rs, {ind("a"), ind("b")}, 3);
    const Graph& g = gs[static_cast<std::size_t>(i) % gs.size()];
    auto parts = extendedParts(p.query, g);
    std::set<Name> universe = parts.all.individuals();
    for (const auto& ax : p.shapes) {
      EXPECT_EQ(holds(parts.med, ax, universe), holds(parts.all, mark(ax, Marking::Med), universe));
      EXPECT_EQ(holds(parts.input, ax, universe), holds(parts.all, ax, universe));
    }
  }
}

TEST(Oracle, QueryEvaluationIsMonotone) {
  Rng rng(29);
  GeneratorConfig cfg;
  cfg.patternMax = 3;
  cfg.maxConcepts = 2;
  cfg.maxRoles = 1;
  for (int i = 0; i < 40; ++i) {
    Problem p = randomProblem(cfg, rng);
    std::set<Name> cs, rs;
    for (const auto& n : voc(p.query.pattern)) (n.kind == Kind::Role ? rs : cs).insert(n);
    auto gs = allGraphs(cs, rs, {ind("a"), ind("b")}, 3);
    for (std::size_t k = 0; k + 1 < gs.size() && k < 40; ++k) {
      Graph big = gs[k];
      big.insert(gs[k + 1]);
      EXPECT_TRUE(evalQuery(p.query, big).contains(evalQuery(p.query, gs[k])));
    }
  }
}
