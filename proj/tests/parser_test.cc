#include <gtest/gtest.h>

#include <random>

#include "disponte/generate.h"
#include "disponte/parser.h"

namespace disponte {
namespace {

const char* kCrime =
    "0.2 :: Nihilist <= GreatMan\n"
    "exists killed. Top <= Nihilist\n"
    "0.6 :: (raskolnikov, alyona) : killed\n"
    "0.7 :: (raskolnikov, lizaveta) : killed\n";

TEST(ParseKb, ProbabilisticInclusion) {
  const KnowledgeBase kb = ParseKb("0.2 :: Nihilist <= GreatMan");
  ASSERT_EQ(kb.size(), 1u);
  EXPECT_EQ(kb[0].probability, std::optional<double>(0.2));
  EXPECT_EQ(kb[0].axiom,
            Axiom(SubClassOf{Concept::Atomic("Nihilist"), Concept::Atomic("GreatMan")}));
}

TEST(ParseKb, CertainExistentialInclusion) {
  const KnowledgeBase kb = ParseKb("exists killed. Top <= Nihilist");
  ASSERT_EQ(kb.size(), 1u);
  EXPECT_FALSE(kb[0].probability);
  EXPECT_EQ(kb[0].axiom, Axiom(SubClassOf{Concept::Exists("killed", Concept::Top()),
                                          Concept::Atomic("Nihilist")}));
}

TEST(ParseKb, Assertions) {
  const KnowledgeBase kb = ParseKb("a : A or B\n(a, b) : r\n");
  EXPECT_EQ(kb[0].axiom,
            Axiom(ConceptAssertion{"a", Concept::Or(Concept::Atomic("A"), Concept::Atomic("B"))}));
  EXPECT_EQ(kb[1].axiom, Axiom(RoleAssertion{"a", "b", "r"}));
}

TEST(ParseKb, OutOfRangeProbability) {
  try {
    ParseKb("1.5 :: A <= B");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 1u);
  }
}

TEST(ParseKb, NonNumericProbability) {
  EXPECT_THROW(ParseKb("high :: A <= B"), ParseError);
  EXPECT_THROW(ParseKb("0.5.5 :: A <= B"), ParseError);
}

TEST(ParseKb, ReportsLineAndColumn) {
  try {
    ParseKb("A <= B\n\n# comment\nA <= and\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 6u);
  }
}

TEST(ParseKb, CommentsBlanksAndCrlf) {
  const KnowledgeBase kb = ParseKb("# header\r\n\r\n  A <= B  # trailing\r\n\t\nb : C\r\n");
  ASSERT_EQ(kb.size(), 2u);
  const KbSource src = ParseKbSource("# header\n\nA <= B\n\nb : C\n");
  EXPECT_EQ(src.lines, (std::vector<std::size_t>{3, 5}));
}

TEST(ParseKb, Precedence) {
  const Concept a = Concept::Atomic("A"), b = Concept::Atomic("B"), c = Concept::Atomic("C");
  EXPECT_EQ(ParseConcept("A or B and C"), Concept::Or(a, Concept::And(b, c)));
  EXPECT_EQ(ParseConcept("not A and B"), Concept::And(Concept::Not(a), b));
  EXPECT_EQ(ParseConcept("exists r. A and B"), Concept::And(Concept::Exists("r", a), b));
  EXPECT_EQ(ParseConcept("exists r. (A and B)"), Concept::Exists("r", Concept::And(a, b)));
  EXPECT_EQ(ParseConcept("not exists r. A"), Concept::Not(Concept::Exists("r", a)));
}

TEST(ParseKb, NaryChainsNestRight) {
  const Concept a = Concept::Atomic("A"), b = Concept::Atomic("B"), c = Concept::Atomic("C");
  EXPECT_EQ(ParseConcept("A and B and C"), Concept::And(a, Concept::And(b, c)));
  EXPECT_EQ(ParseConcept("A or B or C"), Concept::Or(a, Concept::Or(b, c)));
}

TEST(ParseKb, DuplicatesKeptAsDistinctAxioms) {
  const KnowledgeBase kb = ParseKb("0.5 :: A <= B\n0.5 :: A <= B\n");
  EXPECT_EQ(kb.size(), 2u);
  EXPECT_EQ(kb.probabilistic_count(), 2u);
}

TEST(ParseKb, Malformed) {
  EXPECT_THROW(ParseKb("A <="), ParseError);
  EXPECT_THROW(ParseKb("(a, b) : "), ParseError);
  EXPECT_THROW(ParseKb("A <= B C"), ParseError);
  EXPECT_THROW(ParseKb("A <= (B"), ParseError);
  EXPECT_THROW(ParseKb("A ! B"), ParseError);
  EXPECT_THROW(ParseKb("0.5 :: "), ParseError);
  EXPECT_THROW(ParseKb("exists . A <= B"), ParseError);
}

TEST(ParseQuery, InstanceQuery) {
  EXPECT_EQ(ParseQuery("raskolnikov : GreatMan"),
            Query(InstanceQuery{"raskolnikov", Concept::Atomic("GreatMan")}));
}

TEST(ParseQuery, SubsumptionQuery) {
  EXPECT_EQ(ParseQuery("B0 <= B10"),
            Query(SubsumptionQuery{Concept::Atomic("B0"), Concept::Atomic("B10")}));
}

TEST(ParseQuery, Truncated) {
  EXPECT_THROW(ParseQuery("a :"), ParseError);
  EXPECT_THROW(ParseQuery(""), ParseError);
  EXPECT_THROW(ParseQuery("0.5 :: a : A"), ParseError);
}

TEST(SerializeKb, CrimeKb) {
  const std::string text = SerializeKb(ParseKb(kCrime));
  EXPECT_EQ(text, kCrime);
}

TEST(SerializeKb, Empty) { EXPECT_EQ(SerializeKb(KnowledgeBase{}), ""); }

TEST(SerializeKb, ShortestRoundTripDecimal) {
  const KnowledgeBase kb({{SubClassOf{Concept::Atomic("A"), Concept::Atomic("B")}, 0.1 + 0.2},
                          {SubClassOf{Concept::Atomic("A"), Concept::Atomic("C")}, 1e-7},
                          {SubClassOf{Concept::Atomic("A"), Concept::Atomic("D")}, 1.0}});
  const std::string text = SerializeKb(kb);
  EXPECT_EQ(text,
            "0.30000000000000004 :: A <= B\n0.0000001 :: A <= C\n1 :: A <= D\n");
  EXPECT_EQ(ParseKb(text), kb);
}

TEST(SerializeKb, LeftNestedConceptsKeepParentheses) {
  const Concept a = Concept::Atomic("A"), b = Concept::Atomic("B"), c = Concept::Atomic("C");
  const KnowledgeBase kb({{SubClassOf{Concept::And(Concept::And(a, b), c),
                                      Concept::Or(Concept::Or(a, b), Concept::And(b, c))},
                           std::nullopt},
                          {ConceptAssertion{"x", Concept::Not(Concept::Or(a, b))}, std::nullopt},
                          {ConceptAssertion{"x", Concept::Forall("r", Concept::And(a, b))},
                           std::nullopt}});
  EXPECT_EQ(ParseKb(SerializeKb(kb)), kb);
}

TEST(SerializeKb, RandomRoundTripProperty) {
  std::mt19937_64 rng(2024);
  RandomKbOptions options;
  options.max_depth = 4;
  for (int i = 0; i < 300; ++i) {
    const KnowledgeBase kb = GenerateRandomKb(rng, options);
    const std::string text = SerializeKb(kb);
    EXPECT_EQ(ParseKb(text), kb) << text;
    EXPECT_EQ(SerializeKb(ParseKb(text)), text);
  }
}

}  // namespace
}  // namespace disponte
