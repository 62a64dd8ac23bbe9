#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "ejmt/forest.hpp"
#include "support.hpp"

using namespace ejmt;
using testsupport::BruteForce;
using testsupport::parse;
using testsupport::pp_family;

namespace {

// Chart size bound for the fixture grammar: nodes <= kNodeBound * n^3.
constexpr double kNodeBound = 0.25;

std::vector<std::string> chart_signatures(const Forest& f) {
  std::vector<std::string> out;
  for (const auto& t : enumerate_trees(f, kUnlimited)) out.push_back(signature(*t));
  return out;
}

BigCount catalan(unsigned n) {
  BigCount c = 1;
  for (unsigned i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace

TEST(Parser, UnambiguousSentence) {
  auto b = testsupport::bundle();
  auto f = parse("the man watched the dog", b);
  ASSERT_TRUE(f.root());
  EXPECT_EQ(count_parses(f), 1);
  auto trees = enumerate_trees(f, 10);
  ASSERT_EQ(trees.size(), 1u);
  EXPECT_EQ(signature(*trees[0]), "r1 r3 the:def man:man r2 watched:watch r3 the:def dog:dog");
}

TEST(Parser, SensesMultiplyIntoCount) {
  auto b = testsupport::bundle();
  EXPECT_EQ(count_parses(parse("the man saw the dog", b)), 2);
  EXPECT_EQ(count_parses(parse("the man watched the dog with the telescope", b)), 2);
  EXPECT_EQ(count_parses(parse("the man saw the dog with the telescope", b)), 4);
}

TEST(Parser, NoParseKeepsLongestSpan) {
  auto b = testsupport::bundle();
  auto f = parse("man saw", b);
  EXPECT_FALSE(f.root());
  EXPECT_EQ(count_parses(f), 0);
  EXPECT_TRUE(enumerate_trees(f, 10).empty());
  ASSERT_TRUE(f.longest_span());
  EXPECT_EQ(f.longest_span()->length(), 1u);

  auto g = parse("the dog the man", b);
  EXPECT_FALSE(g.root());
  ASSERT_TRUE(g.longest_span());
  EXPECT_EQ(g.longest_span()->length(), 2u);
}

TEST(Parser, UnknownTokenPolicy) {
  auto reject = testsupport::bundle();
  try {
    parse("the man saw the zebra", reject);
    FAIL();
  } catch (const UnknownTokenError& e) {
    EXPECT_EQ(e.surface(), "zebra");
    EXPECT_EQ(e.index(), 4u);
    EXPECT_EQ(std::string(e.what()), "unknown token zebra at 4");
  }
  auto fallback = testsupport::tweaked([](ExpertConfig& c) { c.unknown_word_policy = UnknownWordPolicy::noun_fallback; });
  auto f = parse("the man saw the zebra", fallback);
  ASSERT_TRUE(f.root());
  EXPECT_EQ(count_parses(f), 2);
  auto trees = enumerate_trees(f, 1);
  auto ls = leaves(*trees[0]);
  const auto& unk = *ls.back()->sense;
  EXPECT_EQ(unk.pos, "n");
  EXPECT_EQ(unk.sem, "thing");
  EXPECT_EQ(unk.ja, "zebra");
  EXPECT_DOUBLE_EQ(unk.weight, 0.1);
}

TEST(Parser, EnumerationOrderAndLimit) {
  auto b = testsupport::bundle();
  auto f = parse(pp_family(1), b);
  auto all = chart_signatures(f);
  ASSERT_EQ(all.size(), 2u);
  // NP attachment (r2 over r4) sorts before VP attachment (r5)
  EXPECT_NE(all[0].find("r2 watched:watch r4"), std::string::npos);
  EXPECT_NE(all[1].find("r5 r2"), std::string::npos);
  EXPECT_EQ(enumerate_trees(f, 1).size(), 1u);
  EXPECT_EQ(signature(*enumerate_trees(f, 1)[0]), all[0]);
}

TEST(Parser, CatalanFamily) {
  auto b = testsupport::bundle();
  for (unsigned n = 0; n <= 6; ++n) {
    auto f = parse(pp_family(n), b);
    EXPECT_EQ(count_parses(f), catalan(n + 1)) << "n=" << n;
  }
}

// Chart agrees with naive enumeration straight from the grammar.
TEST(ParserOracle, MatchesBruteForce) {
  auto b = testsupport::bundle();
  std::vector<std::string> sentences = {
      "the man saw the dog",
      "the man saw the dog with the telescope",
      "the man saw the dog with the telescope in the park",
      "the dog ran",
      "the dog and the man ran",
      "the man and the dog and the cat ran",
      "the man and the dog saw the cat and the bone",
      "the dog ran in the park near the house",
      "man saw",
  };
  for (unsigned n = 0; n <= 4; ++n) sentences.push_back(pp_family(n));
  for (const auto& s : sentences) {
    auto f = parse(s, b);
    BruteForce oracle(*b, testsupport::norms(s));
    auto expected = oracle.all();
    std::sort(expected.begin(), expected.end());
    auto got = chart_signatures(f);
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end())) << s;
    EXPECT_EQ(got, expected) << s;
    EXPECT_EQ(count_parses(f), BigCount(expected.size())) << s;
  }
}

TEST(ParserProperties, TreesAreWellFormed) {
  auto b = testsupport::bundle();
  auto f = parse(pp_family(3), b);
  for (const auto& t : enumerate_trees(f, kUnlimited)) {
    std::vector<const TreeNode*> stack{t.get()};
    while (!stack.empty()) {
      const auto* n = stack.back();
      stack.pop_back();
      if (n->is_lexical()) {
        EXPECT_EQ(n->span.length(), 1u);
        EXPECT_EQ(n->sense->pos, n->category);
        continue;
      }
      const auto& rule = b->grammar()[*n->rule];
      ASSERT_EQ(n->children.size(), rule.rhs.size());
      std::size_t at = n->span.begin;
      for (std::size_t i = 0; i < n->children.size(); ++i) {
        EXPECT_EQ(n->children[i]->category, rule.rhs[i]);
        EXPECT_EQ(n->children[i]->span.begin, at);
        at = n->children[i]->span.end;
        stack.push_back(n->children[i].get());
      }
      EXPECT_EQ(at, n->span.end);
    }
  }
}

TEST(ParserProperties, PackingStaysPolynomial) {
  auto b = testsupport::bundle();
  for (unsigned n = 0; n <= 12; ++n) {
    auto s = pp_family(n);
    auto f = parse(s, b);
    const double len = double(f.tokens().size());
    EXPECT_LE(double(f.nodes().size()), kNodeBound * len * len * len) << "n=" << n;
    EXPECT_EQ(count_parses(f), catalan(n + 1));
  }
}

TEST(ParserProperties, SerializationDeterministic) {
  auto b = testsupport::bundle();
  auto s = pp_family(3);
  const auto first = serialize_forest(parse(s, b));
  for (int i = 0; i < 5; ++i) EXPECT_EQ(serialize_forest(parse(s, b)), first);
  EXPECT_EQ(serialize_forest(parse(s, testsupport::bundle())), first);
}

TEST(ParserProperties, SerializedForm) {
  auto b = testsupport::bundle();
  auto text = serialize_forest(parse("the man saw the dog with the telescope", b));
  EXPECT_NE(text.find("[vp 2 8 (r2 <v 2 3> <np 3 8>)(r5 <vp 2 5> <pp 5 8>)]"), std::string::npos) << text;
  EXPECT_NE(text.find("[v 2 3 (lex saw:cut saw:see)]"), std::string::npos) << text;
  EXPECT_EQ(text.rfind("[s 0 8", 0), 0u);
}

TEST(Parser, LogCount) {
  auto b = testsupport::bundle();
  EXPECT_NEAR(*log10_count(count_parses(parse(pp_family(6), b))), std::log10(429.0), 1e-9);
  EXPECT_FALSE(log10_count(BigCount(0)));
  BigCount huge = 1;
  for (int i = 0; i < 40; ++i) huge *= 10;
  EXPECT_NEAR(*log10_count(huge), 40.0, 1e-9);
}
