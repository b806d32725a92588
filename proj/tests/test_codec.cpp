#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "hdq/codec.hpp"
#include "hdq/error.hpp"
#include "hdq/pipeline.hpp"
#include "hdq/torus3.hpp"
#include "fixtures.hpp"

using namespace hdq;

using fixtures::sample_q4_cycle;
using fixtures::random_artifact;

TEST(Codec, SampleCycleLine) {
  EXPECT_EQ(format_steps(sample_q4_cycle().steps), "2 -1 -1 2 2 -1 -1 -1 -2 1 1 -2 -2 1 1 1");
  const auto text = encode_text(Artifact::from(std::vector<CycleCode>{sample_q4_cycle()}));
  EXPECT_EQ(text, "HDQ1 Q 2 . 1 16\n2 -1 -1 2 2 -1 -1 -1 -2 1 1 -2 -2 1 1 1\n");
}

TEST(Codec, HeaderForTwoCycles) {
  const auto text = encode_text(Artifact::from(build(2).expand()));
  EXPECT_EQ(text.substr(0, text.find('\n')), "HDQ1 Q 2 . 2 16");
}

TEST(Codec, SourcePairLayout) {
  const auto sp = build(2);
  const auto text = encode_text(Artifact::from(sp));
  EXPECT_EQ(text,
            "HDQ1 Q 2 . 1 16\n"
            "1 1 1 2 1 1 1 2 1 1 1 2 1 1 1 2\n"
            "MATRIX 2\n"
            "1 2\n"
            "2 1\n");
  EXPECT_EQ(decode_text(text).source_pair(), sp);
}

TEST(Codec, TorusWithMergingSet) {
  Artifact a = Artifact::from(source_pair_torus3(1));
  a.merging_set = latin_merging_set(1);
  const auto text = encode_text(a);
  EXPECT_EQ(text.substr(0, text.find('\n')), "HDQ1 G 1 3 1 64");
  EXPECT_NE(text.find("\nMSET 1 3\n0 1 2\n"), std::string::npos);
  EXPECT_EQ(decode_text(text), a);
}

TEST(Codec, RandomRoundTrip) {
  std::mt19937 rng(99);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_artifact(rng);
    const auto text = encode_text(a);
    ASSERT_EQ(decode_text(text), a) << text;
    EXPECT_EQ(encode_text(decode_text(text)), text);
    EXPECT_EQ(decode_json(encode_json(a)), a);
  }
}

TEST(Codec, EncodingIsDeterministic) {
  const auto a = Artifact::from(build(3));
  EXPECT_EQ(encode_text(a), encode_text(a));
  EXPECT_EQ(encode_json(a), encode_json(a));
}

TEST(Codec, WhitespaceIsNormalized) {
  const std::string loose = "HDQ1  Q 1 .  1 4\r\n1   1 1\t1\n\n";
  const auto a = decode_text(loose);
  EXPECT_EQ(encode_text(a), "HDQ1 Q 1 . 1 4\n1 1 1 1\n");
}

TEST(Codec, ZeroCycles) {
  Artifact a;
  a.kind = GraphKind::torus(1, 3);
  a.merging_set = default_merging_set(1);
  const auto text = encode_text(a);
  EXPECT_EQ(text.substr(0, text.find('\n')), "HDQ1 G 1 3 0 64");
  EXPECT_EQ(decode_text(text), a);
}

TEST(Codec, ParseErrors) {
  const auto line_of = [](const std::string& text) -> std::size_t {
    try {
      decode_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of(""), 1u);
  EXPECT_EQ(line_of("HDQ2 Q 1 . 1 4\n1 1 1 1\n"), 1u);
  EXPECT_EQ(line_of("HDQ1 R 1 . 1 4\n1 1 1 1\n"), 1u);
  EXPECT_EQ(line_of("HDQ1 Q 1 3 1 4\n1 1 1 1\n"), 1u);
  EXPECT_EQ(line_of("HDQ1 G 1 4 1 4\n1 1 1 1\n"), 1u);
  EXPECT_EQ(line_of("HDQ1 Q 1 . 1 4\n1 1 1\n"), 2u);
  EXPECT_EQ(line_of("HDQ1 Q 1 . 1 4\n1 1 2 1\n"), 2u);
  EXPECT_EQ(line_of("HDQ1 Q 1 . 1 4\n1 1 0 1\n"), 2u);
  EXPECT_EQ(line_of("HDQ1 Q 1 . 1 4\n1 1 x 1\n"), 2u);
  EXPECT_EQ(line_of("HDQ1 Q 1 . 2 4\n1 1 1 1\n"), 3u);
  EXPECT_EQ(line_of("HDQ1 Q 1 . 1 4\n1 1 1 1\nMATRIX 2\n1 2\n"), 5u);
  EXPECT_EQ(line_of("HDQ1 Q 1 . 1 4\n1 1 1 1\nMATRIX 1\n2\n"), 3u);
  EXPECT_EQ(line_of("HDQ1 Q 1 . 1 4\n1 1 1 1\nMSET 1 1\n0 1\n"), 4u);
  EXPECT_EQ(line_of("HDQ1 Q 1 . 1 4\n1 1 1 1\nEXTRA\n"), 3u);
  EXPECT_EQ(line_of("HDQ1 Q 1 . 1 4\n1 1 1 1\nMSET 1 0\nMATRIX 1\n1\n"), 4u);
  EXPECT_EQ(line_of("HDQ1 Q 1 . 1 4\n1 1 1 1\n\nMATRIX 1\n1\n"), 3u);
}

TEST(Codec, JsonShape) {
  const auto json = encode_json(Artifact::from(build(2)));
  EXPECT_NE(json.find("\"family\":\"Q\""), std::string::npos);
  EXPECT_NE(json.find("\"k\":null"), std::string::npos);
  EXPECT_NE(json.find("\"matrix\":[[1,2],[2,1]]"), std::string::npos);
  EXPECT_THROW(decode_json("{\"format\":\"HDQ1\"}"), ParseError);
  EXPECT_THROW(decode_json("not json"), ParseError);
}

TEST(Overline, AllNotationsAgree) {
  const auto q4 = GraphKind::hypercube(2);
  const auto expected = sample_q4_cycle();
  EXPECT_EQ(parse_overline("2 -1 -1 2 2 -1 -1 -1 -2 1 1 -2 -2 1 1 1", q4), expected);
  EXPECT_EQ(parse_overline("2 1' 1' 2 2 1' 1' 1' 2' 1 1 2' 2' 1 1 1", q4), expected);
  EXPECT_EQ(parse_overline("2 ~1 ~1 2 2 ~1 ~1 ~1 ~2 1 1 ~2 ~2 1 1 1", q4), expected);
  EXPECT_EQ(parse_overline("2,-1,-1,2,2,-1,-1,-1,-2,1,1,-2,-2,1,1,1", q4), expected);
  EXPECT_EQ(parse_overline("2~1~122~1~1~1~211~2~2111", q4), expected);
  EXPECT_EQ(parse_overline("21'1'221'1'1'2'112'2'111", q4), expected);
  EXPECT_EQ(parse_overline("$2\\overline{11}22\\overline{1112}11\\overline{22}111$", q4), expected);
}

TEST(Overline, Errors) {
  const auto q4 = GraphKind::hypercube(2);
  EXPECT_THROW(parse_overline("1 3", q4), ParseError);
  EXPECT_THROW(parse_overline("2\\overline{11", q4), ParseError);
  EXPECT_THROW(parse_overline("'1", q4), ParseError);
  EXPECT_THROW(parse_overline("21~", q4), ParseError);
  EXPECT_THROW(parse_overline("2x1", q4), ParseError);
  EXPECT_THROW(parse_overline("1 - 2", q4), ParseError);
}

TEST(StreamWriter, MatchesEncoder) {
  const auto sp = build(3);
  std::ostringstream streamed;
  StreamWriter w(streamed, sp.cycle.kind, 3, sp.cycle.steps.size());
  for (const auto& c : sp.expand()) w.write_cycle(c.steps);
  w.write_matrix(sp.matrix);
  w.finish();
  auto a = Artifact::from(sp.expand());
  a.matrix = sp.matrix;
  EXPECT_EQ(streamed.str(), encode_text(a));
}

TEST(StreamWriter, EnforcesLayout) {
  std::ostringstream os;
  StreamWriter w(os, GraphKind::hypercube(1), 1, 2);
  w.put(EdgeStep::forward(1));
  EXPECT_THROW(w.end_cycle(), InvalidArgument);
  EXPECT_THROW(w.put(EdgeStep::forward(2)), InvalidArgument);
  EXPECT_THROW(w.write_matrix(SourceMatrix::unit()), InvalidArgument);
  w.put(EdgeStep::backward(1));
  EXPECT_THROW(w.put(EdgeStep::forward(1)), InvalidArgument);
  w.end_cycle();
  EXPECT_THROW(w.put(EdgeStep::forward(1)), InvalidArgument);
  w.write_merging_set(default_merging_set(1));
  EXPECT_THROW(w.write_matrix(SourceMatrix::unit()), InvalidArgument);
  EXPECT_NO_THROW(w.finish());
}

TEST(Artifact, SourcePairNeedsMatrixAndOneCycle) {
  EXPECT_THROW(Artifact::from(std::vector<CycleCode>{sample_q4_cycle()}).source_pair(), InvalidArgument);
  auto two = Artifact::from(build(2).expand());
  two.matrix = SourceMatrix({{1, 2}, {2, 1}});
  EXPECT_THROW(two.source_pair(), InvalidArgument);
  EXPECT_THROW(Artifact::from(std::vector<CycleCode>{}), InvalidArgument);
}
