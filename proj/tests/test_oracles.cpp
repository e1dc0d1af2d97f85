#include <gtest/gtest.h>

#include <random>

#include "coxshadow/io.hpp"
#include "coxshadow/oracles.hpp"
#include "coxshadow/render.hpp"
#include "coxshadow/verify.hpp"

using namespace coxshadow;

TEST(ExplicitFoldings, Counts) {
  auto d = CoxeterDatum::parse("A2~");
  EXPECT_EQ(enumerate_foldings_explicit(d, {}, d.identity()).size(), 1u);
  EXPECT_EQ(enumerate_foldings_explicit(d, {0, 1, 2}, d.identity()).size(), 8u);
  EXPECT_THROW(enumerate_foldings_explicit(d, Word(21, 0), d.identity()), Error);
}

TEST(ExplicitFoldings, AgreeWithHatSets) {
  for (auto tag : {"A2~", "B2~", "G2~"}) {
    auto d = CoxeterDatum::parse(tag);
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::size_t> pick(0, d.generators().size() - 1);
    std::uniform_int_distribution<int> len(0, 10);
    for (int t = 0; t < 50; ++t) {
      Word w;
      for (int i = len(rng); i > 0; --i) w.push_back(d.generators()[pick(rng)]);
      auto explicit_galleries = enumerate_foldings_explicit(d, w, d.identity());
      std::multiset<std::vector<Int>> a, b;
      for (std::uint64_t mask = 0; mask < explicit_galleries.size(); ++mask) {
        std::set<int> hats;
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (mask & (std::uint64_t{1} << i)) hats.insert(static_cast<int>(i + 1));
        }
        Gallery g(d.identity(), {w, hats});
        const auto& e = explicit_galleries[mask];
        EXPECT_EQ(e.folds(), hats);
        EXPECT_EQ(e.alcoves, g.alcoves(d));
        auto end_a = e.end().barycenter();
        auto end_b = end_alcove(d, g).barycenter();
        a.insert({end_a.begin(), end_a.end()});
        b.insert({end_b.begin(), end_b.end()});
      }
      EXPECT_EQ(a, b);
    }
  }
}

TEST(BfsGroup, Examples) {
  auto a2 = bfs_group(CoxeterDatum::parse("A2"), -1);
  EXPECT_EQ(a2.size(), 6u);
  int longest = 0;
  for (auto& [x, d] : a2) longest = std::max(longest, d);
  EXPECT_EQ(longest, 3);
  auto b2 = bfs_group(CoxeterDatum::parse("B2"), -1);
  EXPECT_EQ(b2.size(), 8u);
  EXPECT_THROW(bfs_group(CoxeterDatum::parse("A2~"), -1), Error);
}

TEST(BfsGroup, AffineA2CountsMatchGeometry) {
  // Alcoves within distance r: count them as alcoves crossing at most r
  // hyperplanes, found geometrically from barycenters in a large window.
  auto d = CoxeterDatum::parse("A2~");
  auto ball = bfs_group(d, 4);
  std::size_t geometric = 0;
  for (const auto& x : elements_up_to(d, 8)) {
    if (d.separating_hyperplanes(x).size() <= 4) ++geometric;
  }
  EXPECT_EQ(ball.size(), geometric);
  // Known sphere sizes of the Ã2 Cayley graph: 1, 3, 6, 9, 12.
  EXPECT_EQ(ball.size(), 31u);
}

TEST(Check, NamedCases) {
  auto d = CoxeterDatum::parse("A2~");
  auto x = d.element_from_word(Word{0, 1, 2, 0});
  auto dir = all_directions(d)[2];
  EXPECT_TRUE(check(d, "bruhat", x).equal);
  EXPECT_TRUE(check(d, "algL_vs_naive", x, dir).equal);
  EXPECT_TRUE(check(d, "algR_vs_L", x, dir).equal);
  EXPECT_TRUE(check(d, "bounded_vs_naive", x, dir).equal);
  EXPECT_TRUE(check(d, "explicit_vs_naive", x, dir).equal);
  EXPECT_TRUE(check(d, "braid_invariance_weyl", x, dir).equal);
  EXPECT_THROW(check(d, "algL_vs_naive", x), Error);
  EXPECT_THROW(check(d, "nope", x), Error);
}

TEST(CompareSets, ReportsCounterexample) {
  auto d = CoxeterDatum::parse("A2");
  OracleReport r;
  compare_sets(d, {d.identity(), d.generator(1)}, {d.identity()}, r);
  EXPECT_FALSE(r.equal);
  EXPECT_EQ(r.counterexample, Json(Word{1}));
  EXPECT_EQ(r.primary_count, 2u);
}

TEST(Suites, SmallRuns) {
  VerifyOptions opt;
  opt.types = {"A2~"};
  opt.max_length = 4;
  opt.random_pairs = 10;
  opt.random_galleries = 50;
  for (const auto& name : suite_names()) {
    auto r = run_suite(name, opt);
    EXPECT_FALSE(r.reports.empty()) << name;
    EXPECT_TRUE(r.passed()) << name;
  }
  opt.types = {"A2"};
  auto braid = run_suite("braid", opt);
  ASSERT_EQ(braid.reports.size(), 1u);
  EXPECT_FALSE(braid.reports[0].equal);
  EXPECT_TRUE(braid.passed());
  EXPECT_THROW(run_suite("core", opt), Error);
  EXPECT_THROW(run_suite("nope", opt), Error);
}

TEST(Io, ElementRoundTrip) {
  auto d = CoxeterDatum::parse("G2~");
  auto x = d.element_from_word(Word{0, 1, 2, 1});
  auto j = element_to_json(d, x, true);
  EXPECT_EQ(j["word"], Json(d.reduced_word(x)));
  EXPECT_EQ(element_from_json(d, j), x);
  j["barycenter"][0] = "7/3";
  EXPECT_THROW(element_from_json(d, j), Error);
  auto id = element_to_json(d, d.identity(), true);
  for (const auto& s : barycenter_strings(d, d.identity())) EXPECT_NE(s.find('/'), std::string::npos);
  EXPECT_EQ(element_from_json(d, id), d.identity());
}

TEST(Io, GalleryRoundTrip) {
  auto d = CoxeterDatum::parse("B2~");
  Gallery g(d.element_from_word(Word{1, 0}), parse_decorated("0 1^ 2 1^"));
  auto j = gallery_to_json(d, g);
  EXPECT_EQ(j["hats"], Json(std::vector<int>{2, 4}));
  EXPECT_EQ(gallery_from_json(d, j), g);
}

TEST(Io, OrientationTags) {
  auto d = CoxeterDatum::parse("A2~");
  EXPECT_EQ(parse_orientation(d, "+"), Orientation::trivial_positive());
  EXPECT_EQ(parse_orientation(d, "-"), Orientation::trivial_negative());
  EXPECT_EQ(parse_orientation(d, "id-alcove"), Orientation::alcove(d.identity()));
  EXPECT_EQ(parse_orientation(d, "dir:"), Orientation::weyl_chamber(make_direction(d, d.identity())));
  EXPECT_EQ(parse_orientation(d, "dir:121"), Orientation::weyl_chamber(all_directions(d).back()));
  EXPECT_THROW(parse_orientation(d, "dir:0"), Error);
  EXPECT_THROW(parse_orientation(d, "bogus"), Error);
  EXPECT_THROW(parse_orientation(CoxeterDatum::parse("A2"), "dir:"), Error);
}

TEST(Io, BundledTableFile) {
  auto d = CoxeterDatum::parse("A2");
  auto phi = parse_orientation(d, std::string("table:") + COXSHADOW_DATA_DIR + "/a2_not_braid_invariant.json");
  EXPECT_EQ(phi, a2_non_braid_invariant());
  auto j = orientation_table_to_json(d, phi);
  EXPECT_EQ(orientation_from_table_json(d, j), phi);
}

TEST(Io, TableConflictsAndNegativeRoots) {
  auto d = CoxeterDatum::parse("A2~");
  Json neg = {{"entries", {{{"root", {-1, 0}}, {"level", -2}, {"positive", {"+"}}}}}};
  auto phi = orientation_from_table_json(d, neg);
  EXPECT_EQ(positive_side(d, phi, {0, 2}), kMinusSide);
  Json clash = {{"entries",
                 {{{"root", {1, 1}}, {"level", 1}, {"positive", {"+"}}},
                  {{"root", {1, 1}}, {"level", 1}, {"positive", {"-"}}}}}};
  try {
    orientation_from_table_json(d, clash);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotWallConsistent);
  }
  Json bad_root = {{"entries", {{{"root", {2, 0}}, {"positive", {"+"}}}}}};
  EXPECT_THROW(orientation_from_table_json(d, bad_root), Error);
}

TEST(Io, ShadowJson) {
  auto d = CoxeterDatum::parse("A2");
  auto s = shadow_naive(d, Word{1, 2}, Orientation::trivial_positive(), d.identity());
  auto j = shadow_to_json(d, Json{{"type", "A2"}}, s, false);
  EXPECT_EQ(j["count"], 4);
  EXPECT_EQ(j["elements"], Json(std::vector<Word>{{}, {1}, {2}, {1, 2}}));
  EXPECT_EQ(j["fold_histogram"]["1"], 2);
  EXPECT_FALSE(j.contains("timing_ms"));
}

TEST(Render, SceneMatchesShadows) {
  auto d = CoxeterDatum::parse("A2~");
  auto x = d.element_from_word(Word{0, 1, 2, 0, 1, 2});
  auto dir = make_direction(d, d.identity());
  auto scene = build_scene(d, x, dir, 4);
  EXPECT_EQ(check_scene(d, scene), "");
  EXPECT_EQ(scene.regular.as_set(), shadow_L(d, x, dir).as_set());
  auto svg = render_svg(d, scene);
  EXPECT_NE(svg.find("shadow-regular"), std::string::npos);
  EXPECT_NE(svg.find("data-directions=\"6\""), std::string::npos);
  scene.polygons.pop_back();
  EXPECT_NE(check_scene(d, scene), "");
  EXPECT_THROW(render_svg(d, scene), Error);
}

TEST(Render, Unsupported) {
  auto d = CoxeterDatum::parse("A3~");
  try {
    build_scene(d, d.identity(), make_direction(d, d.identity()), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::RenderUnsupported);
  }
}

TEST(Render, G2Legend) {
  auto d = CoxeterDatum::parse("G2~");
  auto scene = build_scene(d, d.identity(), make_direction(d, d.identity()), 1);
  EXPECT_EQ(scene.regular.size(), 1u);
  auto svg = render_svg(d, scene);
  EXPECT_NE(svg.find("data-directions=\"12\""), std::string::npos);
}
