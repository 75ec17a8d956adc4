#include "unidist/classify.hpp"

#include <gtest/gtest.h>

#include <variant>

#include "test_util.hpp"
#include "unidist/families.hpp"
#include "unidist/oracle.hpp"

using namespace unidist;
using testutil::pseq;
using testutil::seq;

TEST(ClassifyNonsplit, FiveCycle) {
  const auto c = classify_nonsplit(seq("2^5"));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->kind, UnigraphKind{C5Kind{}});
  EXPECT_EQ(c->relative, RelativeTag::identity);
  EXPECT_EQ(c->dist, 3u);
}

TEST(ClassifyNonsplit, U2WithOneEdgeAndTwoLeafStar) {
  const auto c = classify_nonsplit(seq("2,1^4"));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->kind, (UnigraphKind{U2Kind{1, 2}}));
  EXPECT_EQ(c->dist, 2u);
}

TEST(ClassifyNonsplit, U3Identity) {
  const auto c = classify_nonsplit(seq("4,2^5"));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->kind, UnigraphKind{U3Kind{1}});
  EXPECT_EQ(c->relative, RelativeTag::identity);
  EXPECT_EQ(c->dist, 2u);
}

TEST(ClassifyNonsplit, ComplementOfMatching) {
  // (2^4) is the complement of 2K2.
  const auto c = classify_nonsplit(seq("2^4"));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->kind, UnigraphKind{MK2Kind{2}});
  EXPECT_EQ(c->relative, RelativeTag::complement);
  EXPECT_EQ(c->dist, 3u);
}

TEST(ClassifyNonsplit, AmbiguousSequenceRejected) {
  // (2,2,2,1,1) is realized by both P5 and C3+K2.
  EXPECT_FALSE(classify_nonsplit(seq("2^3,1^2")).has_value());
}

TEST(ClassifySplit, S3FromTwentyVertexExample) {
  const auto c = classify_split(pseq("4^3;2,1^4"));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->kind, (UnigraphKind{S3Kind{1, 2, 1}}));
  EXPECT_EQ(c->relative, RelativeTag::identity);
  EXPECT_EQ(c->dist, 2u);
}

TEST(ClassifySplit, SViaComplement) {
  const auto c = classify_split(pseq("4^4;2^2"));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->kind, (UnigraphKind{SKind{2, 2}}));
  EXPECT_EQ(c->relative, RelativeTag::complement);
  EXPECT_EQ(c->dist, 2u);
}

TEST(ClassifySplit, S4Identity) {
  const auto c = classify_split(pseq("7,5^3;2^5"));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->kind, (UnigraphKind{S4Kind{1, 1}}));
  EXPECT_EQ(c->relative, RelativeTag::identity);
  EXPECT_EQ(c->dist, 2u);
}

TEST(ClassifySplit, S2WithUnitGroups) {
  const auto c = classify_split(pseq("3,2;1^3"));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->kind, (UnigraphKind{S2Kind{{{2, 1}, {1, 1}}}}));
  EXPECT_EQ(c->dist, 2u);
}

TEST(ClassifySplit, TrivialComponents) {
  const auto k = classify_split(pseq("0;-"));
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(k->kind, UnigraphKind{TrivialKKind{}});
  EXPECT_EQ(k->dist, 1u);
  const auto s = classify_split(pseq("-;0"));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->kind, UnigraphKind{TrivialSKind{}});
}

TEST(ClassifySplit, GarbagePairedSequenceRejected) {
  // Not the sequence of any indecomposable split unigraph.
  EXPECT_FALSE(classify_split(pseq("3^2;2^2")).has_value());
}

TEST(FindDistSplit, Examples) {
  EXPECT_EQ(find_dist_split(pseq("4^3;2,1^4")), std::optional<u64>{2});
  EXPECT_EQ(find_dist_split(pseq("3^3;1^3")), std::optional<u64>{2});  // S(1,3)
  EXPECT_EQ(find_dist_split(pseq("3,2;1^3")), std::optional<u64>{2});
}

TEST(FindDistSplit, InvariantUnderRelatives) {
  for (const auto& kind : testutil::small_family_kinds(9)) {
    if (!testutil::is_split_kind(kind)) continue;
    if (std::holds_alternative<CompleteKind>(kind) || std::holds_alternative<IsolatedKind>(kind))
      continue;  // blocks are decomposable, handled before the family scan
    const PairedDegreeSequence p = paired_sequence_of(make_split_family(kind));
    const auto base = find_dist_split(p);
    ASSERT_TRUE(base.has_value()) << format_paired(p);
    for (RelativeTag tag : all_relative_tags)
      EXPECT_EQ(find_dist_split(relatives(p)[tag]), base) << format_paired(p);
  }
}

TEST(FindDistUnigraph, TwentyVertexExample) {
  const auto report = find_dist_unigraph(seq("16^3,12^4,9^5,5^2,3,2,1^4"));
  ASSERT_TRUE(report.has_value());
  EXPECT_EQ(report->dist, 3u);
  ASSERT_EQ(report->components.size(), 4u);
  EXPECT_EQ(report->components[0].kind, (UnigraphKind{S3Kind{1, 2, 1}}));
  EXPECT_EQ(report->components[1].kind, UnigraphKind{TrivialSKind{}});
  EXPECT_EQ(report->components[2].kind, (UnigraphKind{SKind{2, 2}}));
  EXPECT_EQ(report->components[2].relative, RelativeTag::complement);
  EXPECT_EQ(report->components[3].kind, UnigraphKind{C5Kind{}});
}

TEST(FindDistUnigraph, ThresholdExample) {
  const auto report = find_dist_unigraph(seq("5^2,2^4"));
  ASSERT_TRUE(report.has_value());
  EXPECT_EQ(report->dist, 4u);
  ASSERT_EQ(report->components.size(), 2u);
  EXPECT_EQ(report->components[0].kind, UnigraphKind{CompleteKind{2}});
  EXPECT_EQ(report->components[1].kind, UnigraphKind{IsolatedKind{4}});
}

TEST(FindDistUnigraph, SingleVertex) {
  const auto report = find_dist_unigraph(seq("0"));
  ASSERT_TRUE(report.has_value());
  EXPECT_EQ(report->dist, 1u);
}

TEST(FindDistUnigraph, RejectsAmbiguousSequence) {
  EXPECT_FALSE(find_dist_unigraph(seq("2^3,1^2")).has_value());
}

TEST(FindDistUnigraph, ComplementedFamiliesClassify) {
  // Complements of the non-split families route through the complement check.
  struct Case {
    UnigraphKind kind;
    u64 dist;
  };
  for (const auto& c : {Case{MK2Kind{2}, 3}, Case{U2Kind{1, 2}, 2}, Case{U3Kind{1}, 2}}) {
    const Graph g = complement(make_family(c.kind));
    const auto report = find_dist_unigraph(degree_sequence_of(g));
    ASSERT_TRUE(report.has_value()) << describe(c.kind);
    ASSERT_EQ(report->components.size(), 1u);
    EXPECT_EQ(report->components[0].kind, c.kind);
    EXPECT_EQ(report->components[0].relative, RelativeTag::complement);
    EXPECT_EQ(report->dist, c.dist);
    EXPECT_EQ(report->dist, brute_dist_number(g));
  }
}

TEST(FindDistUnigraph, TailAfterNonTrivialComponentStaysSingle) {
  // S(1,2) composed with a lone vertex: the remainder (0) is not merged.
  const Graph g = compose(make_split_family(SKind{1, 2}), Graph(1));
  const auto report = find_dist_unigraph(degree_sequence_of(g));
  ASSERT_TRUE(report.has_value());
  ASSERT_EQ(report->components.size(), 2u);
  EXPECT_EQ(report->components[0].kind, (UnigraphKind{SKind{1, 2}}));
  EXPECT_EQ(report->components[1].dist, 1u);
  EXPECT_EQ(report->dist, 2u);
}

TEST(FindDistUnigraph, MatchesBruteForceOnFamilyInstances) {
  for (const auto& kind : testutil::small_family_kinds(9)) {
    const Graph g = make_family(kind);
    const auto report = find_dist_unigraph(degree_sequence_of(g));
    ASSERT_TRUE(report.has_value()) << describe(kind);
    EXPECT_EQ(report->dist, brute_dist_number(g)) << describe(kind);
  }
}

TEST(FindDistUnigraph, MaxLawOverComponents) {
  for (u64 s = 0; s < 50; ++s) {
    const auto gen = random_unigraph_traced(1234 + s, 4, 9);
    const auto report = find_dist_unigraph(degree_sequence_of(gen.graph));
    ASSERT_TRUE(report.has_value());
    u64 expected = 1;
    for (const auto& c : report->components) expected = std::max(expected, c.dist);
    EXPECT_EQ(report->dist, expected);
  }
}

TEST(FindDistUnigraph, DroppingNonMaximalComponentKeepsTheMax) {
  // Removing a component with a below-max value leaves the answer unchanged,
  // as long as the removal does not make two same-type blocks adjacent.
  u64 checked = 0;
  for (u64 s = 0; s < 400 && checked < 25; ++s) {
    const auto gen = random_unigraph_traced(31000 + s, 4, 9);
    const DegreeSequence ds = degree_sequence_of(gen.graph);
    const auto report = find_dist_unigraph(ds);
    ASSERT_TRUE(report.has_value());
    const auto compact = decompose_compact(ds);
    const auto& comps = compact.components;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (report->components[i].dist >= report->dist) continue;
      if (i > 0 && i + 1 < comps.size()) {
        const bool k_merge = as_complete_block(comps[i - 1]).has_value() &&
                             as_complete_block(comps[i + 1]).has_value();
        const bool s_merge = as_isolated_block(comps[i - 1]).has_value() &&
                             as_isolated_block(comps[i + 1]).has_value();
        if (k_merge || s_merge) continue;
      }
      if (i + 1 == comps.size()) continue;  // keep a well-formed rightmost component
      DecompositionResult reduced;
      reduced.components = comps;
      reduced.components.erase(reduced.components.begin() + static_cast<long>(i));
      const auto reduced_report = find_dist_unigraph(recompose_sequence(reduced));
      ASSERT_TRUE(reduced_report.has_value());
      EXPECT_EQ(reduced_report->dist, report->dist);
      ++checked;
    }
  }
  EXPECT_GE(checked, 10u);
}

TEST(ThresholdDist, Examples) {
  EXPECT_EQ(threshold_dist(seq("5^2,2^4")), std::optional<u64>{4});
  EXPECT_EQ(threshold_dist(seq("5^6")), std::optional<u64>{6});  // K6
  EXPECT_EQ(threshold_dist(seq("0^6")), std::optional<u64>{6});
}

TEST(ThresholdDist, RejectsNonThreshold) {
  EXPECT_FALSE(threshold_dist(seq("2^5")).has_value());
  EXPECT_FALSE(threshold_dist(seq("16^3,12^4,9^5,5^2,3,2,1^4")).has_value());
}

TEST(ThresholdDist, AgreesWithPipelineAndBruteForce) {
  for (u64 s = 0; s < 60; ++s) {
    const u64 n = 1 + s % 9;
    const Graph g = random_threshold(s, n);
    const DegreeSequence ds = degree_sequence_of(g);
    const auto fast = threshold_dist(ds);
    ASSERT_TRUE(fast.has_value());
    const auto report = find_dist_unigraph(ds);
    ASSERT_TRUE(report.has_value());
    EXPECT_EQ(*fast, report->dist);
    EXPECT_EQ(*fast, brute_dist_number(g));
  }
}

TEST(Describe, RendersParameters) {
  EXPECT_EQ(describe(UnigraphKind{S3Kind{1, 2, 1}}), "S3(1,2,1)");
  EXPECT_EQ(describe(UnigraphKind{MK2Kind{3}}), "mK2(3)");
  EXPECT_EQ(describe(UnigraphKind{TrivialSKind{}}), "S1");
  EXPECT_EQ(kind_name(UnigraphKind{S2Kind{{{2, 1}, {1, 1}}}}), "S2");
}
