#pragma once

// Orientations of Coxeter complexes and the valuation v_phi.
//
// Every orientation handled here is wall consistent, so it is described by
// its set of positive sides per hyperplane (a SideMask). evaluate() reduces to
// "is the alcove's side of the panel's wall one of the positive sides".

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coxshadow/coxeter.hpp"

namespace coxshadow {

using SideMask = std::uint8_t;
inline constexpr SideMask kNoSide = 0;
inline constexpr SideMask kPlusSide = 1;
inline constexpr SideMask kMinusSide = 2;
inline constexpr SideMask kBothSides = 3;

inline SideMask side_bit(int side) { return side > 0 ? kPlusSide : kMinusSide; }

/// Relabels sides through a side factor of -1.
inline SideMask flip_sides(SideMask m, int factor) {
  if (factor > 0) return m;
  return static_cast<SideMask>(((m & kPlusSide) ? kMinusSide : 0) | ((m & kMinusSide) ? kPlusSide : 0));
}

/// A chamber at infinity, labelled by a of the finite Weyl group, with the
/// regular vector a . rho^vee (rho^vee = sum of fundamental coweights).
struct Direction {
  GroupElement label;
  std::vector<Int> vector;

  friend bool operator==(const Direction& a, const Direction& b) { return a.label == b.label; }
};

inline Direction make_direction(const CoxeterDatum& datum, const GroupElement& spherical) {
  if (!spherical.has_zero_translation())
    throw Error(Errc::NotAffine, "direction label must lie in the finite Weyl group");
  std::vector<Int> rho(static_cast<std::size_t>(datum.rank()), 1);
  return {spherical, spherical.apply_linear(rho)};
}

inline Direction direction_from_word(const CoxeterDatum& datum, const Word& word) {
  for (Generator s : word) {
    if (s < 1 || s > datum.rank())
      throw Error(Errc::Parse, "direction words use spherical generators 1.." + std::to_string(datum.rank()));
  }
  return make_direction(datum, datum.element_from_word(word));
}

/// All |W-bar| directions, sorted by (length, reduced word) of their labels.
inline std::vector<Direction> all_directions(const CoxeterDatum& datum) {
  std::vector<Direction> out;
  for (const auto& a : datum.spherical_elements()) out.push_back(make_direction(datum, a));
  return out;
}

/// A face of `alcove`: the intersection of its walls of the types in `walls`.
struct Simplex {
  GroupElement alcove;
  std::uint32_t walls = 0;

  friend bool operator==(const Simplex&, const Simplex&) = default;
};

/// Wall-consistent orientation of the spherical complex at infinity: positive
/// sides per positive root (side +1 is {<beta, .> > 0}).
struct SphericalTable {
  std::vector<SideMask> positive;

  friend bool operator==(const SphericalTable&, const SphericalTable&) = default;
};

enum class OrientationKind { TrivialPositive, TrivialNegative, Simplex, Alcove, WeylChamber, Periodic, CustomTable };

class Orientation {
 public:
  static Orientation trivial_positive() { return Orientation(OrientationKind::TrivialPositive); }
  static Orientation trivial_negative() { return Orientation(OrientationKind::TrivialNegative); }
  static Orientation simplex(Simplex b) {
    Orientation o(OrientationKind::Simplex);
    o.simplex_ = std::move(b);
    return o;
  }
  static Orientation alcove(GroupElement c) {
    Orientation o(OrientationKind::Alcove);
    o.element_ = std::move(c);
    return o;
  }
  static Orientation weyl_chamber(Direction d) {
    Orientation o(OrientationKind::WeylChamber);
    o.direction_ = std::move(d);
    return o;
  }
  static Orientation periodic(SphericalTable t) {
    Orientation o(OrientationKind::Periodic);
    o.table_ = std::move(t);
    return o;
  }
  /// Only the listed hyperplanes are oriented; other queries fail.
  static Orientation custom_table(std::map<Hyperplane, SideMask> entries) {
    Orientation o(OrientationKind::CustomTable);
    o.entries_ = std::move(entries);
    return o;
  }

  OrientationKind kind() const { return kind_; }
  bool negated() const { return negated_; }
  bool is_weyl_chamber() const { return kind_ == OrientationKind::WeylChamber && !negated_; }

  /// -phi.
  Orientation opposite() const {
    Orientation o = *this;
    o.negated_ = !negated_;
    return o;
  }

  const Simplex& simplex_payload() const { return simplex_; }
  const GroupElement& alcove_payload() const { return element_; }
  const Direction& direction() const { return direction_; }
  const SphericalTable& table() const { return table_; }
  const std::map<Hyperplane, SideMask>& entries() const { return entries_; }

  friend bool operator==(const Orientation& a, const Orientation& b) {
    if (a.kind_ != b.kind_ || a.negated_ != b.negated_) return false;
    switch (a.kind_) {
      case OrientationKind::TrivialPositive:
      case OrientationKind::TrivialNegative: return true;
      case OrientationKind::Simplex: return a.simplex_ == b.simplex_;
      case OrientationKind::Alcove: return a.element_ == b.element_;
      case OrientationKind::WeylChamber: return a.direction_ == b.direction_;
      case OrientationKind::Periodic: return a.table_ == b.table_;
      case OrientationKind::CustomTable: return a.entries_ == b.entries_;
    }
    return false;
  }

 private:
  explicit Orientation(OrientationKind k) : kind_(k) {}

  OrientationKind kind_;
  bool negated_ = false;
  Simplex simplex_;
  GroupElement element_;
  Direction direction_;
  SphericalTable table_;
  std::map<Hyperplane, SideMask> entries_;
};

/// The set of phi-positive sides of h.
inline SideMask positive_side(const CoxeterDatum& datum, const Orientation& phi, const Hyperplane& h) {
  SideMask m = kNoSide;
  switch (phi.kind()) {
    case OrientationKind::TrivialPositive: m = kBothSides; break;
    case OrientationKind::TrivialNegative: m = kNoSide; break;
    case OrientationKind::Simplex: {
      const auto& b = phi.simplex_payload();
      int s = datum.side_of(b.alcove.apply(datum.face_point(b.walls)), h);
      m = s == 0 ? kBothSides : side_bit(s);
      break;
    }
    case OrientationKind::Alcove: m = side_bit(datum.side_of(phi.alcove_payload().barycenter(), h)); break;
    case OrientationKind::WeylChamber: {
      Int p = datum.pair(h.root, phi.direction().vector);
      if (p == 0) throw Error(Errc::NotWallConsistent, "direction vector is not regular");
      m = side_bit(sign(p));
      break;
    }
    case OrientationKind::Periodic: m = phi.table().positive.at(static_cast<std::size_t>(h.root)); break;
    case OrientationKind::CustomTable: {
      auto it = phi.entries().find(h);
      if (it == phi.entries().end())
        throw Error(Errc::OrientationUndefined, "hyperplane (root " + std::to_string(h.root) + ", level " +
                                                    std::to_string(h.level) + ") is not in the table");
      m = it->second;
      break;
    }
  }
  return phi.negated() ? static_cast<SideMask>(kBothSides ^ m) : m;
}

/// phi(p, c) for an alcove c containing p.
inline int evaluate(const CoxeterDatum& datum, const Orientation& phi, const Panel& p, const GroupElement& c) {
  if (!(c == p.alcove) && !(c == p.alcove * datum.generator(p.type)))
    throw Error(Errc::NotIncident, "alcove does not contain the panel");
  Hyperplane h = datum.panel_hyperplane(p);
  return (positive_side(datum, phi, h) & side_bit(datum.side_of(c.barycenter(), h))) ? 1 : -1;
}

/// (x . phi)(p, c) = phi(x^{-1} p, x^{-1} c).
inline Orientation act(const CoxeterDatum& datum, const GroupElement& x, const Orientation& phi) {
  Orientation out = phi;
  switch (phi.kind()) {
    case OrientationKind::TrivialPositive:
    case OrientationKind::TrivialNegative: return phi;
    case OrientationKind::Simplex:
      out = Orientation::simplex({x * phi.simplex_payload().alcove, phi.simplex_payload().walls});
      break;
    case OrientationKind::Alcove: out = Orientation::alcove(x * phi.alcove_payload()); break;
    case OrientationKind::WeylChamber:
      out = Orientation::weyl_chamber(make_direction(datum, datum.linear_part(x) * phi.direction().label));
      break;
    case OrientationKind::Periodic: {
      GroupElement xi = x.inverse();
      SphericalTable t;
      for (int r = 0; r < static_cast<int>(datum.positive_roots().size()); ++r) {
        auto [img, factor] = datum.transform(xi, {r, 0});
        t.positive.push_back(flip_sides(phi.table().positive.at(static_cast<std::size_t>(img.root)), factor));
      }
      out = Orientation::periodic(std::move(t));
      break;
    }
    case OrientationKind::CustomTable: {
      std::map<Hyperplane, SideMask> moved;
      for (const auto& [h, m] : phi.entries()) {
        auto [img, factor] = datum.transform(x, h);
        moved[img] = flip_sides(m, factor);
      }
      out = Orientation::custom_table(std::move(moved));
      break;
    }
  }
  return phi.negated() ? out.opposite() : out;
}

/// v_phi(x) = |hyp+| - |hyp-| over the hyperplanes separating x from the
/// base alcove. A wall with both sides positive counts as +1.
inline int valuation(const CoxeterDatum& datum, const Orientation& phi, const GroupElement& x) {
  int v = 0;
  for (const auto& h : datum.separating_hyperplanes(x))
    v += (positive_side(datum, phi, h) & side_bit(datum.side_of(x.barycenter(), h))) ? 1 : -1;
  return v;
}

inline bool is_dominant(const CoxeterDatum& datum, const Orientation& phi, const GroupElement& x) {
  return valuation(datum, phi, x) == datum.length(x);
}

/// Orientation at infinity induced by a periodic orientation.
inline SphericalTable boundary_orientation(const CoxeterDatum& datum, const Orientation& phi) {
  if (!datum.affine()) throw Error(Errc::NotAffine, "boundary orientations need an affine datum");
  const std::size_t nroots = datum.positive_roots().size();
  SphericalTable t;
  switch (phi.kind()) {
    case OrientationKind::Simplex:
    case OrientationKind::Alcove: throw Error(Errc::NotPeriodic, "simplex orientations are not periodic");
    case OrientationKind::CustomTable: {
      std::vector<int> seen(nroots, -1);
      for (const auto& [h, m] : phi.entries()) {
        auto r = static_cast<std::size_t>(h.root);
        SideMask eff = phi.negated() ? static_cast<SideMask>(kBothSides ^ m) : m;
        if (seen[r] >= 0 && seen[r] != eff)
          throw Error(Errc::NotPeriodic, "parallel hyperplanes disagree on their positive side");
        seen[r] = eff;
      }
      for (std::size_t r = 0; r < nroots; ++r) {
        if (seen[r] < 0) throw Error(Errc::OrientationUndefined, "table misses a parallel class");
        t.positive.push_back(static_cast<SideMask>(seen[r]));
      }
      return t;
    }
    default:
      for (std::size_t r = 0; r < nroots; ++r) t.positive.push_back(positive_side(datum, phi, {static_cast<int>(r), 0}));
      return t;
  }
}

/// The alcove orientation of the spherical complex towards chamber a.
inline SphericalTable chamber_table(const CoxeterDatum& datum, const Direction& a) {
  SphericalTable t;
  for (std::size_t r = 0; r < datum.positive_roots().size(); ++r)
    t.positive.push_back(side_bit(sign(datum.pair(static_cast<int>(r), a.vector))));
  return t;
}

/// The unique periodic orientation with the given boundary. Recognisable
/// tables come back as trivial or Weyl chamber orientations.
inline Orientation affine_orientation(const CoxeterDatum& datum, const SphericalTable& table) {
  if (table.positive.size() != datum.positive_roots().size())
    throw Error(Errc::NotWallConsistent, "table size does not match the root system");
  auto all = [&](SideMask m) {
    return std::all_of(table.positive.begin(), table.positive.end(), [m](SideMask v) { return v == m; });
  };
  if (all(kBothSides)) return Orientation::trivial_positive();
  if (all(kNoSide)) return Orientation::trivial_negative();
  bool singletons = std::all_of(table.positive.begin(), table.positive.end(),
                                [](SideMask v) { return v == kPlusSide || v == kMinusSide; });
  if (singletons) {
    for (const auto& d : all_directions(datum)) {
      if (chamber_table(datum, d) == table) return Orientation::weyl_chamber(d);
    }
  }
  return Orientation::periodic(table);
}

/// A wall-consistent orientation of the finite A2 complex that is not braid
/// invariant: alpha_1 and alpha_2 are positive on their + side, theta on its
/// - side. The two reduced words of w0 have different shadows.
inline Orientation a2_non_braid_invariant() {
  return Orientation::custom_table({{{0, 0}, kPlusSide}, {{1, 0}, kPlusSide}, {{2, 0}, kMinusSide}});
}

}  // namespace coxshadow
