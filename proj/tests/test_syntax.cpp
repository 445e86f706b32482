#include <gtest/gtest.h>

#include "cshapes/candidates.hpp"
#include "cshapes/problems.hpp"
#include "cshapes/syntax.hpp"

using namespace cshapes;

namespace {

const char* kQ1 =
    "CONSTRUCT { ?y a :E . ?y :p ?z . ?z a :B } WHERE { ?w :p ?y . ?y a :B . ?x :p ?z . ?z a :E }";

}  // namespace

TEST(Syntax, ParsesRunningQuery) {
  Query q = parseQuery(kQ1);
  EXPECT_EQ(q.templ.size(), 3U);
  EXPECT_EQ(q.pattern.size(), 4U);
  EXPECT_TRUE(q.pattern.count(Atom::role(Name::variable("w"), Name::role("p"), Name::variable("y"))));
  EXPECT_TRUE(q.templ.count(Atom::conceptAtom(Name::variable("z"), Name::conceptName("B"))));
}

TEST(Syntax, MultiLinePrefixedQuery) {
  Query q = parseQuery("PREFIX : <http://example.org/>\r\nCONSTRUCT {\r\n  ?x a :A\r\n} WHERE {\r\n  ?x a :A .\r\n  ?x a :A\r\n}\r\n");
  EXPECT_EQ(q.templ.size(), 1U);
  EXPECT_EQ(q.pattern.size(), 1U);
}

TEST(Syntax, IndividualsInQueries) {
  Query q = parseQuery("CONSTRUCT { :a :p ?x } WHERE { :a :p ?x . ?x a :B }");
  EXPECT_EQ(q.individuals(), (std::set<Name>{Name::individual("a")}));
}

TEST(Syntax, UnboundTemplateVariable) {
  EXPECT_THROW(parseQuery("CONSTRUCT { ?x a :A } WHERE { ?y a :A }"), UnboundVariableError);
}

TEST(Syntax, UnsupportedFeatures) {
  for (const char* text : {"CONSTRUCT { ?x a :A } WHERE { ?x a :A OPTIONAL { ?x a :B } }",
                           "CONSTRUCT { ?x a :A } WHERE { ?x a :A FILTER(?x) }",
                           "CONSTRUCT { ?x a :A } WHERE { ?x :p/:q ?y . ?x a :A }",
                           "CONSTRUCT { ?x a :A } WHERE { ?x ?p ?y . ?x a :A }",
                           "CONSTRUCT { ?x a :A } WHERE { ?x a ?c }"})
    EXPECT_THROW(parseQuery(text), UnsupportedFeatureError) << text;
}

TEST(Syntax, ErrorPositions) {
  try {
    parseQuery("CONSTRUCT { ?x a :A }\nWHERE { ?x a }");
    FAIL();
  } catch (const SourceError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_GE(e.column(), 1);
    EXPECT_FALSE(e.snippet().empty());
  }
}

TEST(Syntax, ParsesShapes) {
  auto s = parseShapes(":A <: exists :p . :B\nexists :r . Top <: :B\n# comment\n\n:B ⊑ :E\n");
  ASSERT_EQ(s.size(), 3U);
  auto s1 = asShape(s[0]);
  ASSERT_TRUE(s1);
  EXPECT_EQ(s1->constraint, Concept::exists({Name::role("p"), false}, Concept::atom(Name::conceptName("B"))));
  auto s2 = asShape(s[1]);
  ASSERT_TRUE(s2);
  EXPECT_EQ(s2->target, Concept::exists({Name::role("r"), false}, Concept::top()));
  EXPECT_TRUE(asShape(s[2]));
}

TEST(Syntax, GeneralAxiomIsNotSimple) {
  auto s = parseShapes(":A <: (:B and not :C) or exists :p- . {:a}");
  ASSERT_EQ(s.size(), 1U);
  EXPECT_FALSE(asShape(s[0]));
  Concept expected = Concept::disj(
      Concept::conj(Concept::atom(Name::conceptName("B")), Concept::negate(Concept::atom(Name::conceptName("C")))),
      Concept::exists({Name::role("p"), true}, Concept::nominal(Name::individual("a"))));
  EXPECT_EQ(s[0].rhs, expected);
}

TEST(Syntax, RejectsBadTargets) {
  EXPECT_THROW(parseShapes(":A and :B <: :C"), SourceError);
  EXPECT_THROW(parseShapes("exists :p . :A <: :C"), SourceError);
  EXPECT_THROW(parseShapes(":A <: "), SourceError);
}

TEST(Syntax, Render) {
  EXPECT_EQ(render(Axiom::incl(Concept::atom(Name::conceptName("B")), Concept::atom(Name::conceptName("E")))),
            ":B <: :E");
  EXPECT_EQ(render(Axiom::incl(Concept::exists({Name::role("p"), true}, Concept::top()),
                               Concept::atom(Name::conceptName("B")))),
            "exists :p- . Top <: :B");
  Query q = parseQuery(kQ1);
  EXPECT_EQ(parseQuery(render(q)), q);
}

TEST(Syntax, CandidatesRoundTrip) {
  Query q = parseQuery(
      "CONSTRUCT { ?x a :A . ?x a :B . ?x :p ?y . ?y :r ?x } WHERE { ?x a :A . ?x :p ?y }");
  for (const auto& s : generateCandidates(q).shapes) {
    auto back = parseShapes(render(s));
    ASSERT_EQ(back.size(), 1U);
    EXPECT_EQ(back[0], s.axiom()) << render(s);
  }
}

TEST(Syntax, GraphRoundTrip) {
  Graph g = parseGraph(":a a :A .\n:a :p :b .\n:b a :B .\n");
  EXPECT_EQ(g.size(), 3U);
  EXPECT_EQ(parseGraph(render(g)), g);
}

TEST(Syntax, RandomQueriesRoundTrip) {
  Rng rng(5);
  GeneratorConfig cfg;
  cfg.individual = 0.2;
  for (int i = 0; i < 200; ++i) {
    Problem p = randomProblem(cfg, rng);
    ASSERT_EQ(parseQuery(render(p.query)), p.query) << render(p.query);
    for (const auto& ax : p.shapes) ASSERT_EQ(parseShapes(render(ax)).at(0), ax) << render(ax);
  }
}

// Random token soup: the parsers either succeed or throw SourceError.
TEST(Syntax, FuzzNeverCrashes) {
  const std::vector<std::string> tokens{"CONSTRUCT", "WHERE", "{",   "}",    "?x",  "?y",     ":A",  ":p", "a",
                                        ".",         ";",     ",",   "(",    ")",   "exists", "forall", "and", "or",
                                        "not",       "Top",   "<:",  ":p-",  "{:a}", "\n",    "#",   "PREFIX", "<x>",
                                        "OPTIONAL",  "$z",    "\"s\"", "⊑",  "-",   "::",     "?",   "::A"};
  Rng rng(99);
  int parsed = 0;
  for (int i = 0; i < 3000; ++i) {
    std::string text;
    int n = std::uniform_int_distribution<int>(0, 14)(rng);
    for (int k = 0; k < n; ++k)
      text += tokens[std::uniform_int_distribution<std::size_t>(0, tokens.size() - 1)(rng)] + " ";
    for (int which = 0; which < 3; ++which) {
      try {
        if (which == 0) parseQuery(text);
        if (which == 1) parseShapes(text);
        if (which == 2) parseGraph(text);
        ++parsed;
      } catch (const SourceError& e) {
        ASSERT_GE(e.line(), 1);
        ASSERT_GE(e.column(), 1);
      }
    }
  }
  EXPECT_GT(parsed, 0);
}
