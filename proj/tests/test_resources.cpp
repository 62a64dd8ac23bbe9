#include <gtest/gtest.h>

#include "ejmt/resources.hpp"
#include "support.hpp"

using namespace ejmt;
using testsupport::fixture;

namespace {

// Runs `fn`, expects a ResourceError on `line` whose message contains `needle`.
template <class F>
void expect_load_error(F&& fn, std::size_t line, const std::string& needle) {
  try {
    fn();
    FAIL() << "expected a load error containing " << needle;
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
  }
}

}  // namespace

TEST(Grammar, FieldsTranscribed) {
  auto rules = load_grammar("rule r2 vp -> v np ; weight=1.0 ; reorder=1,0 ; insert=0:\"を\"\n");
  ASSERT_EQ(rules.size(), 1u);
  const auto& r = rules[0];
  EXPECT_EQ(r.id, "r2");
  EXPECT_EQ(r.lhs, "vp");
  EXPECT_EQ(r.rhs, (std::vector<std::string>{"v", "np"}));
  EXPECT_EQ(r.reorder, (std::vector<std::size_t>{1, 0}));
  ASSERT_EQ(r.inserts.size(), 1u);
  EXPECT_EQ(r.inserts[0].position, 0u);
  EXPECT_EQ(r.inserts[0].morpheme, "を");
  EXPECT_DOUBLE_EQ(r.weight, 1.0);
  EXPECT_FALSE(r.conj);
}

TEST(Grammar, Defaults) {
  auto rules = load_grammar("# comment\n\nrule r7 np -> n\n");
  ASSERT_EQ(rules.size(), 1u);
  EXPECT_EQ(rules[0].reorder, (std::vector<std::size_t>{0}));
  EXPECT_DOUBLE_EQ(rules[0].weight, 1.0);
  EXPECT_TRUE(rules[0].inserts.empty());
  EXPECT_FALSE(rules[0].conj);
}

TEST(Grammar, RejectsBadLines) {
  expect_load_error([] { load_grammar("rule ok s -> np vp\nrule bad s -> np vp ; reorder=0,0\n"); }, 2,
                    "not a permutation");
  expect_load_error([] { load_grammar("rule a s -> np vp\nrule a s -> np vp\n"); }, 2, "duplicate rule id");
  expect_load_error([] { load_grammar("\nfoo a s -> np\n"); }, 2, "unknown directive");
  expect_load_error([] { load_grammar("rule a s -> np vp ; insert=2:\"x\"\n"); }, 1, "insert position");
  expect_load_error([] { load_grammar("rule a s -> np vp ; weight=nan\n"); }, 1, "bad weight");
  expect_load_error([] { load_grammar("rule a s -> np vp ; colour=red\n"); }, 1, "unknown field");
}

TEST(Lexicon, VerbSenseWithFrame) {
  auto lex = load_lexicon(
      "lex saw ; pos=v ; sense=see ; sem=event ; ja=見た ; weight=1.0 ; "
      "frame=subj=animate:req,obj=thing:req,with=instrument:pref\n");
  ASSERT_EQ(lex.at("saw").size(), 1u);
  const auto& s = lex.at("saw")[0];
  ASSERT_TRUE(s.frame.has_value());
  ASSERT_EQ(s.frame->size(), 3u);
  EXPECT_EQ((*s.frame)[2].name, "with");
  EXPECT_EQ((*s.frame)[2].expected, "instrument");
  EXPECT_EQ((*s.frame)[2].strength, SlotStrength::preferred);
  EXPECT_EQ((*s.frame)[0].strength, SlotStrength::required);
}

TEST(Lexicon, SensesAccumulateAndSurfacesFold) {
  auto lex = load_lexicon(
      "lex Saw ; pos=v ; sense=see ; sem=event ; ja=見た ; weight=1.0\n"
      "lex saw ; pos=v ; sense=cut ; sem=event ; ja=切った ; weight=0.2\n");
  ASSERT_EQ(lex.count("saw"), 1u);
  EXPECT_EQ(lex.at("saw").size(), 2u);
  EXPECT_DOUBLE_EQ(lex.at("saw")[1].weight, 0.2);
}

TEST(Lexicon, EmptyGlossAccepted) {
  auto lex = load_lexicon("lex the ; pos=det ; sense=def ; sem=thing ; ja= ; weight=1.0\n");
  EXPECT_EQ(lex.at("the")[0].ja, "");
}

TEST(Lexicon, RejectsBadLines) {
  expect_load_error(
      [] {
        load_lexicon(
            "lex saw ; pos=v ; sense=see ; sem=event ; ja=a\n"
            "lex saw ; pos=v ; sense=see ; sem=event ; ja=b\n");
      },
      2, "duplicate sense");
  expect_load_error([] { load_lexicon("lex saw ; pos=v ; sense=see ; sem=event ; ja=a ; frame=subj=animate:maybe\n"); },
                    1, "unknown strength tag");
  auto tax = load_taxonomy("sem thing\n");
  expect_load_error([&] { load_lexicon("lex x ; pos=n ; sense=x ; sem=nowhere ; ja=x\n", &tax); }, 1, "unknown sem");
}

TEST(Taxonomy, FixtureShape) {
  auto t = load_taxonomy(testsupport::slurp(fixture("t0.taxonomy")));
  EXPECT_EQ(t.size(), 7u);
  EXPECT_EQ(t.root_name(), "thing");
}

TEST(Taxonomy, RejectsBadLines) {
  expect_load_error([] { load_taxonomy("sem a isa b\nsem b isa a\n"); }, 1, "cycle");
  expect_load_error([] { load_taxonomy("sem thing\nsem stuff\n"); }, 2, "two roots");
  expect_load_error([] { load_taxonomy("sem thing\nsem x isa ghost\n"); }, 2, "orphan");
}

TEST(Xforms, Parse) {
  auto xs = load_xforms(
      "xform x_polite ; match=(v \"見た\") ; rewrite=(v \"見ました\") ; max=1\n"
      "xform x_id ; match=(s $a $b) ; rewrite=(s $a $b) ; max=1\n");
  ASSERT_EQ(xs.size(), 2u);
  EXPECT_EQ(xs[0].pattern.children.at(0).kind, TreePattern::Kind::literal);
  EXPECT_EQ(xs[0].rewrite.children.at(0).text, "見ました");
  EXPECT_EQ(xs[1].pattern.children.at(1).kind, TreePattern::Kind::variable);
}

TEST(Xforms, RejectsBadLines) {
  expect_load_error([] { load_xforms("xform bad ; match=(s $a) ; rewrite=(s $a $b) ; max=1\n"); }, 1,
                    "unbound variable $b");
  expect_load_error([] { load_xforms("\nxform bad ; match=(s $a ; rewrite=(s $a) ; max=1\n"); }, 2, "");
  expect_load_error([] { load_xforms("xform bad ; match=(s $a) ; rewrite=(s $a) ; max=0\n"); }, 1, "max");
}

TEST(Config, AllKeysRequired) {
  auto text = testsupport::slurp(fixture("c0.config"));
  auto cfg = load_config(text);
  EXPECT_DOUBLE_EQ(cfg.w_arg, 2.0);
  EXPECT_EQ(cfg.beam, 32u);
  EXPECT_EQ(cfg.unknown_word_policy, UnknownWordPolicy::reject);
  expect_load_error([] { load_config("w_lex=1\n"); }, 0, "missing key");
  expect_load_error([&] { load_config(text + "w_lex=2\n"); }, 12, "duplicate key");
  EXPECT_EQ(parse_beam("inf"), kUnboundedBeam);
  EXPECT_EQ(parse_beam("0"), std::nullopt);
  EXPECT_EQ(format_beam(kUnboundedBeam), "inf");
}

TEST(Bundle, LoadsFixturesAndReportsCounts) {
  auto b = testsupport::bundle();
  EXPECT_EQ(b->grammar().size(), 9u);
  EXPECT_EQ(b->taxonomy().size(), 7u);
  EXPECT_EQ(b->xforms().size(), 1u);
  ASSERT_NE(b->senses("saw"), nullptr);
  EXPECT_EQ(b->senses("saw")->size(), 2u);
  EXPECT_EQ(b->senses("ghost"), nullptr);
  EXPECT_EQ(b->fingerprint().size(), 64u);
}

TEST(Bundle, CanonicalRoundTrip) {
  auto b = testsupport::bundle();
  auto again = ResourceBundle::load(b->to_texts());
  EXPECT_TRUE(b->same_content(*again));
  // canonical text is a fixpoint
  auto t1 = again->to_texts();
  auto t2 = ResourceBundle::load(t1)->to_texts();
  EXPECT_EQ(t1.grammar, t2.grammar);
  EXPECT_EQ(t1.lexicon, t2.lexicon);
  EXPECT_EQ(t1.taxonomy, t2.taxonomy);
  EXPECT_EQ(t1.xforms, t2.xforms);
  EXPECT_EQ(t1.config, t2.config);
}

TEST(Bundle, CrossReferencesChecked) {
  auto t = testsupport::texts();
  t.lexicon += "lex blob ; pos=n ; sense=blob ; sem=spirit ; ja=x\n";
  EXPECT_THROW(ResourceBundle::load(t), ResourceError);

  t = testsupport::texts();
  t.grammar += "rule r10 s -> np adv\n";  // adv is neither a phrase nor a part of speech
  EXPECT_THROW(ResourceBundle::load(t), ResourceError);

  t = testsupport::texts();
  t.grammar += "rule r10 np -> s\nrule r11 s -> np\n";
  EXPECT_THROW(ResourceBundle::load(t), ResourceError);
}

TEST(Bundle, FingerprintTracksContent) {
  auto a = testsupport::bundle();
  auto b = testsupport::bundle("c0_warg0.config");
  EXPECT_NE(a->fingerprint(), b->fingerprint());
  EXPECT_EQ(a->fingerprint(), testsupport::bundle()->fingerprint());
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
