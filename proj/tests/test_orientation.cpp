#include <gtest/gtest.h>

#include <random>

#include "coxshadow/oracles.hpp"
#include "coxshadow/orientation.hpp"

using namespace coxshadow;

namespace {

const CoxeterDatum& a2t() {
  static const auto d = CoxeterDatum::parse("A2~");
  return d;
}

Direction dominant(const CoxeterDatum& d) { return make_direction(d, d.identity()); }

Direction longest(const CoxeterDatum& d) { return all_directions(d).back(); }

/// Hyperplanes with |level| <= span.
std::vector<Hyperplane> walls_near(const CoxeterDatum& d, Int span) {
  std::vector<Hyperplane> out;
  for (int r = 0; r < static_cast<int>(d.positive_roots().size()); ++r)
    for (Int k = -span; k <= span; ++k) out.push_back({r, k});
  return out;
}

}  // namespace

TEST(Directions, CountAndRegularity) {
  for (auto [tag, n] : std::vector<std::pair<const char*, std::size_t>>{{"A2~", 6}, {"B2~", 8}, {"G2~", 12}}) {
    auto d = CoxeterDatum::parse(tag);
    auto dirs = all_directions(d);
    EXPECT_EQ(dirs.size(), n);
    for (const auto& dir : dirs) {
      for (int r = 0; r < static_cast<int>(d.positive_roots().size()); ++r) EXPECT_NE(d.pair(r, dir.vector), 0);
      // d_a lies in the chamber a C_f: its sign pattern is that of a . rho.
      auto inv = dir.label.inverse();
      auto back = inv.apply_linear(dir.vector);
      for (Int c : back) EXPECT_EQ(c, 1);
    }
  }
}

TEST(Directions, FromWord) {
  const auto& d = a2t();
  EXPECT_EQ(direction_from_word(d, {}).label, d.identity());
  EXPECT_EQ(direction_from_word(d, {1, 2, 1}).label, longest(d).label);
  EXPECT_THROW(direction_from_word(d, {0}), Error);
}

TEST(Evaluate, Trivial) {
  const auto& d = a2t();
  Panel p{d.identity(), 1};
  EXPECT_EQ(evaluate(d, Orientation::trivial_positive(), p, d.identity()), 1);
  EXPECT_EQ(evaluate(d, Orientation::trivial_positive(), p, d.generator(1)), 1);
  EXPECT_EQ(evaluate(d, Orientation::trivial_negative(), p, d.identity()), -1);
}

TEST(Evaluate, PanelOrientationBothSidesPositive) {
  auto d = CoxeterDatum::parse("A2");
  const auto phi = Orientation::simplex({d.identity(), 1u << 1});
  Panel p{d.identity(), 1};
  EXPECT_EQ(evaluate(d, phi, p, d.identity()), 1);
  EXPECT_EQ(evaluate(d, phi, p, d.generator(1)), 1);
  // Walls not containing the panel: positive towards the panel.
  Panel q{d.identity(), 2};
  EXPECT_EQ(evaluate(d, phi, q, d.identity()), 1);
  EXPECT_EQ(evaluate(d, phi, q, d.generator(2)), -1);
}

TEST(Evaluate, DominantDirection) {
  const auto& d = a2t();
  const auto phi = Orientation::weyl_chamber(dominant(d));
  Panel p{d.identity(), 1};
  EXPECT_EQ(evaluate(d, phi, p, d.identity()), 1);
  EXPECT_EQ(evaluate(d, phi, p, d.generator(1)), -1);
}

TEST(Evaluate, NotIncident) {
  const auto& d = a2t();
  try {
    evaluate(d, Orientation::trivial_positive(), {d.identity(), 1}, d.generator(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotIncident);
  }
}

TEST(PositiveSide, Examples) {
  const auto& d = a2t();
  EXPECT_EQ(positive_side(d, Orientation::trivial_positive(), {0, 0}), kBothSides);
  EXPECT_EQ(positive_side(d, Orientation::weyl_chamber(dominant(d)), {0, 0}), kPlusSide);
  EXPECT_EQ(positive_side(d, Orientation::weyl_chamber(longest(d)), {0, 5}), kMinusSide);
  const auto panel = Orientation::simplex({d.identity(), 1u << 1});
  EXPECT_EQ(positive_side(d, panel, {0, 0}), kBothSides);
  EXPECT_EQ(positive_side(d, panel, {1, 1}), kMinusSide);
}

TEST(PositiveSide, CustomTableMissingHyperplane) {
  const auto& d = a2t();
  auto phi = Orientation::custom_table({{{0, 0}, kPlusSide}});
  EXPECT_EQ(positive_side(d, phi, {0, 0}), kPlusSide);
  try {
    positive_side(d, phi, {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::OrientationUndefined);
  }
}

TEST(Act, Examples) {
  const auto& d = a2t();
  const auto phi = Orientation::weyl_chamber(dominant(d));
  EXPECT_EQ(act(d, d.identity(), phi), phi);
  EXPECT_EQ(act(d, d.generator(1), phi), Orientation::weyl_chamber(direction_from_word(d, {1})));
  EXPECT_EQ(act(d, d.generator(2), Orientation::trivial_positive()), Orientation::trivial_positive());
}

TEST(Act, RoundTripAndEquivariance) {
  for (auto tag : {"A2~", "B2~", "G2~"}) {
    auto d = CoxeterDatum::parse(tag);
    auto elems = elements_up_to(d, 6);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    const auto dirs = all_directions(d);
    for (int i = 0; i < 60; ++i) {
      const auto& x = elems[pick(rng)];
      const auto& c = elems[pick(rng)];
      const Generator s = d.generators()[static_cast<std::size_t>(i) % d.generators().size()];
      std::vector<Orientation> phis{Orientation::weyl_chamber(dirs[static_cast<std::size_t>(i) % dirs.size()]),
                                    Orientation::alcove(elems[pick(rng)]),
                                    Orientation::simplex({elems[pick(rng)], 1u << s}),
                                    Orientation::periodic(chamber_table(d, dirs[0]))};
      for (const auto& phi : phis) {
        EXPECT_EQ(act(d, x.inverse(), act(d, x, phi)), phi);
        // (x phi)(x p, x c) = phi(p, c)
        const auto xphi = act(d, x, phi);
        EXPECT_EQ(evaluate(d, xphi, {x * c, s}, x * c), evaluate(d, phi, {c, s}, c));
        EXPECT_EQ(evaluate(d, xphi, {x * c, s}, x * c * d.generator(s)), evaluate(d, phi, {c, s}, c * d.generator(s)));
      }
    }
  }
}

TEST(Valuation, Examples) {
  const auto& d = a2t();
  const auto phi = Orientation::weyl_chamber(dominant(d));
  EXPECT_EQ(valuation(d, phi, d.identity()), 0);
  EXPECT_EQ(valuation(d, phi, d.generator(1)), -1);
  auto x = d.element_from_word(Word{0, 1, 2, 0});
  EXPECT_EQ(valuation(d, Orientation::trivial_positive(), x), d.length(x));
  EXPECT_TRUE(is_dominant(d, phi, d.identity()));
  EXPECT_FALSE(is_dominant(d, phi, d.generator(1)));
}

TEST(Valuation, LengthBoundParityAndMax) {
  for (auto tag : {"A2~", "B2~", "G2~"}) {
    auto d = CoxeterDatum::parse(tag);
    const auto dirs = all_directions(d);
    for (const auto& x : elements_up_to(d, 6)) {
      int best = -1000;
      for (const auto& dir : dirs) {
        const auto phi = Orientation::weyl_chamber(dir);
        const int v = valuation(d, phi, x);
        EXPECT_LE(v, d.length(x));
        EXPECT_EQ((d.length(x) - v) % 2, 0);
        best = std::max(best, v);
        // The chamber containing x-bar's image is dominant for x.
        if (is_dominant(d, phi, x)) {
          EXPECT_EQ(v, d.length(x));
        }
      }
      EXPECT_EQ(best, d.length(x)) << tag;
      EXPECT_LE(valuation(d, Orientation::alcove(d.generator(1)), x), d.length(x));
    }
  }
}

TEST(BasicProperties, SimplexAndAlcoveOrientations) {
  // Wall consistency: alcoves on one side of H with panels in H agree.
  auto d = CoxeterDatum::parse("B2~");
  const auto elems = elements_up_to(d, 5);
  std::vector<Orientation> phis{Orientation::alcove(d.element_from_word(Word{0, 1})),
                                Orientation::simplex({d.generator(2), (1u << 0) | (1u << 1)}),
                                Orientation::simplex({d.identity(), 1u << 2})};
  for (const auto& phi : phis) {
    std::map<std::pair<Hyperplane, int>, int> seen;
    for (const auto& c : elems) {
      for (Generator s : d.generators()) {
        const Hyperplane h = d.panel_hyperplane({c, s});
        const int side = d.side_of(c.barycenter(), h);
        const int v = evaluate(d, phi, {c, s}, c);
        auto [it, fresh] = seen.emplace(std::make_pair(h, side), v);
        EXPECT_EQ(it->second, v);
      }
    }
    for (const auto& h : walls_near(d, 4)) EXPECT_NE(positive_side(d, phi, h), kNoSide);
    if (phi.kind() == OrientationKind::Alcove) {
      for (const auto& h : walls_near(d, 4)) EXPECT_NE(positive_side(d, phi, h), kBothSides);
    }
  }
}

TEST(Opposite, NegatesLocallyNontrivial) {
  const auto& d = a2t();
  const auto phis = {Orientation::weyl_chamber(dominant(d)), Orientation::alcove(d.generator(0))};
  for (const auto& phi : phis) {
    for (const auto& c : elements_up_to(d, 4)) {
      for (Generator s : d.generators()) {
        EXPECT_EQ(evaluate(d, phi.opposite(), {c, s}, c), -evaluate(d, phi, {c, s}, c));
      }
    }
  }
}

TEST(BoundaryOrientation, Examples) {
  const auto& d = a2t();
  auto t = boundary_orientation(d, Orientation::trivial_positive());
  for (auto m : t.positive) EXPECT_EQ(m, kBothSides);
  for (const auto& dir : all_directions(d))
    EXPECT_EQ(boundary_orientation(d, Orientation::weyl_chamber(dir)), chamber_table(d, dir));
  try {
    boundary_orientation(d, Orientation::alcove(d.identity()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotPeriodic);
  }
  auto conflicting = Orientation::custom_table({{{0, 0}, kPlusSide}, {{0, 1}, kMinusSide}});
  EXPECT_THROW(boundary_orientation(d, conflicting), Error);
}

TEST(AffineOrientation, RoundTrip) {
  const auto& d = a2t();
  for (const auto& dir : all_directions(d)) {
    auto table = chamber_table(d, dir);
    auto phi = affine_orientation(d, table);
    EXPECT_EQ(phi, Orientation::weyl_chamber(dir));
    EXPECT_EQ(boundary_orientation(d, phi), table);
  }
  SphericalTable all{{kBothSides, kBothSides, kBothSides}};
  EXPECT_EQ(affine_orientation(d, all), Orientation::trivial_positive());
  // A non-chamber but wall-consistent table stays periodic.
  SphericalTable mixed{{kPlusSide, kBothSides, kMinusSide}};
  auto phi = affine_orientation(d, mixed);
  EXPECT_EQ(phi.kind(), OrientationKind::Periodic);
  EXPECT_EQ(boundary_orientation(d, phi), mixed);
}

TEST(Orientation, BundledNonBraidInvariantTable) {
  auto d = CoxeterDatum::parse("A2");
  auto phi = a2_non_braid_invariant();
  EXPECT_EQ(positive_side(d, phi, {0, 0}), kPlusSide);
  EXPECT_EQ(positive_side(d, phi, {1, 0}), kPlusSide);
  EXPECT_EQ(positive_side(d, phi, {2, 0}), kMinusSide);
}
