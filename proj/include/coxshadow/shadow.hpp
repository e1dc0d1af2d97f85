#pragma once

// Shadows: sets of end alcoves of phi-positively folded galleries of a given
// type starting at the identity alcove.
//
//   shadow_naive   all 2^n multifoldings of the unfolded gallery (optionally
//                  only those with at most k folds)
//   shadow_L       single direction, right-descent recursion
//   shadow_R       all directions at once, left-descent recursion
//
// Element-level results are sorted by (length, lexicographic reduced word).

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coxshadow/coxeter.hpp"
#include "coxshadow/gallery.hpp"
#include "coxshadow/orientation.hpp"
#include "coxshadow/parallel.hpp"

namespace coxshadow {

enum class Algorithm { Naive, NaiveBounded, L, R, Partial };

inline std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Naive: return "naive";
    case Algorithm::NaiveBounded: return "naive_bounded";
    case Algorithm::L: return "L";
    case Algorithm::R: return "R";
    case Algorithm::Partial: return "partial";
  }
  return "?";
}

inline Algorithm parse_algorithm(const std::string& name) {
  if (name == "naive") return Algorithm::Naive;
  if (name == "naive_bounded") return Algorithm::NaiveBounded;
  if (name == "L") return Algorithm::L;
  if (name == "R") return Algorithm::R;
  if (name == "partial") return Algorithm::Partial;
  throw Error(Errc::Parse, "unknown algorithm '" + name + "'");
}

/// Word-length caps of the exhaustive enumerations.
struct ShadowLimits {
  std::size_t naive_max = 22;
  std::size_t bounded_max = 40;
};

struct ShadowSet {
  std::vector<GroupElement> elements;
  /// Number of phi-positive multifoldings per fold count (naive only).
  std::map<int, std::uint64_t> fold_histogram;
  Algorithm algorithm = Algorithm::Naive;
  Word word;
  double timing_ms = 0.0;
  /// Group multiplications plus orientation evaluations.
  std::uint64_t operations = 0;

  std::size_t size() const { return elements.size(); }
  ElementSet as_set() const { return {elements.begin(), elements.end()}; }
  bool contains(const GroupElement& x) const {
    return std::find(elements.begin(), elements.end(), x) != elements.end();
  }
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

inline ShadowSet finish(const CoxeterDatum& datum, const ElementSet& elems, Algorithm alg, Word word) {
  ShadowSet out;
  out.elements.assign(elems.begin(), elems.end());
  datum.sort_canonical(out.elements);
  out.algorithm = alg;
  out.word = std::move(word);
  return out;
}

/// "z lies on the phi-positive side of its panel of type s".
inline bool positive_at_own_panel(const CoxeterDatum& datum, const Orientation& phi, const GroupElement& z,
                                  Generator s) {
  return evaluate(datum, phi, {z, s}, z) == 1;
}

struct NaiveTask {
  ElementSet ends;
  std::map<int, std::uint64_t> histogram;
  std::uint64_t ops = 0;
};

// Depth-first walk over fold decisions. Non-positive branches are still
// walked to the end: the naive method inspects every multifolding.
inline void naive_walk(const CoxeterDatum& datum, const Word& w, const Orientation& phi, std::size_t pos,
                       const GroupElement& cur, int folds, bool positive, std::optional<int> max_folds,
                       NaiveTask& out) {
  if (pos == w.size()) {
    if (positive) {
      out.ends.insert(cur);
      ++out.histogram[folds];
    }
    return;
  }
  const Generator s = w[pos];
  ++out.ops;
  naive_walk(datum, w, phi, pos + 1, cur * datum.generator(s), folds, positive, max_folds, out);
  if (max_folds && folds + 1 > *max_folds) return;
  bool ok = positive;
  if (ok) {
    ++out.ops;
    ok = positive_at_own_panel(datum, phi, cur, s);
  }
  naive_walk(datum, w, phi, pos + 1, cur, folds + 1, ok, max_folds, out);
}

}  // namespace detail

/// End alcoves of all phi-positive multifoldings of the unfolded gallery of
/// type w from `start`; with max_folds, only multifoldings with at most that
/// many folds are inspected.
inline ShadowSet shadow_naive(const CoxeterDatum& datum, const Word& w, const Orientation& phi,
                              const GroupElement& start, std::optional<int> max_folds = std::nullopt,
                              const ShadowLimits& limits = {}) {
  auto t0 = detail::Clock::now();
  if (max_folds && !phi.is_weyl_chamber())
    throw Error(Errc::BoundRequiresWeylOrientation, "a fold bound is only valid for Weyl chamber orientations");
  const std::size_t cap = max_folds ? limits.bounded_max : limits.naive_max;
  if (w.size() > cap)
    throw Error(Errc::WordTooLong, "word of length " + std::to_string(w.size()) + " exceeds cap " + std::to_string(cap));
  for (Generator s : w) datum.generator(s);

  // Split the first `depth` decisions into independent tasks.
  const std::size_t depth = std::min<std::size_t>(w.size(), 6);
  const std::size_t ntasks = std::size_t{1} << depth;
  std::vector<detail::NaiveTask> tasks(ntasks);
  parallel_for(ntasks, [&](std::size_t t) {
    auto& task = tasks[t];
    GroupElement cur = start;
    int folds = 0;
    bool positive = true;
    for (std::size_t i = 0; i < depth; ++i) {
      const Generator s = w[i];
      if (t & (std::size_t{1} << i)) {
        if (max_folds && folds + 1 > *max_folds) return;
        if (positive) {
          ++task.ops;
          positive = detail::positive_at_own_panel(datum, phi, cur, s);
        }
        ++folds;
      } else {
        ++task.ops;
        cur = cur * datum.generator(s);
      }
    }
    detail::naive_walk(datum, w, phi, depth, cur, folds, positive, max_folds, task);
  });

  ElementSet ends;
  ShadowSet out;
  std::uint64_t ops = 0;
  std::map<int, std::uint64_t> hist;
  for (auto& task : tasks) {
    ends.insert(task.ends.begin(), task.ends.end());
    for (auto [k, v] : task.histogram) hist[k] += v;
    ops += task.ops;
  }
  out = detail::finish(datum, ends, max_folds ? Algorithm::NaiveBounded : Algorithm::Naive, w);
  out.fold_histogram = std::move(hist);
  out.operations = ops;
  out.timing_ms = detail::elapsed_ms(t0);
  return out;
}

/// Orientations whose element-level shadows are known not to depend on the
/// chosen reduced word.
inline bool known_braid_invariant(const CoxeterDatum& datum, const Orientation& phi) {
  switch (phi.kind()) {
    case OrientationKind::TrivialPositive:
    case OrientationKind::TrivialNegative:
    case OrientationKind::WeylChamber: return true;
    case OrientationKind::Alcove: return !phi.negated() && phi.alcove_payload() == datum.identity();
    default: return false;
  }
}

/// Element-level naive shadow via reduced_word(x).
inline ShadowSet shadow_naive(const CoxeterDatum& datum, const GroupElement& x, const Orientation& phi,
                              std::optional<int> max_folds = std::nullopt, const ShadowLimits& limits = {}) {
  if (!known_braid_invariant(datum, phi))
    throw Error(Errc::NotBraidInvariant, "element-level shadows need a braid invariant orientation; use a word");
  return shadow_naive(datum, datum.reduced_word(x), phi, datum.identity(), max_folds, limits);
}

/// Regular shadow by the right-descent recursion
/// A_i = A_{i-1} s_i  u  {z in A_{i-1} : z on the positive side of its s_i-panel}.
inline ShadowSet shadow_L(const CoxeterDatum& datum, const GroupElement& x, const Direction& dir) {
  if (!datum.affine()) throw Error(Errc::NotAffine, "Algorithm L needs an affine datum");
  auto t0 = detail::Clock::now();
  const Orientation phi = Orientation::weyl_chamber(dir);
  const Word w = datum.reduced_word(x);
  ElementSet a{datum.identity()};
  std::uint64_t ops = 0;
  for (Generator s : w) {
    ElementSet next;
    next.reserve(a.size() * 2);
    const GroupElement& gs = datum.generator(s);
    for (const auto& z : a) {
      next.insert(z * gs);
      ops += 2;
      if (detail::positive_at_own_panel(datum, phi, z, s)) next.insert(z);
    }
    a = std::move(next);
  }
  ShadowSet out = detail::finish(datum, a, Algorithm::L, w);
  out.operations = ops;
  out.timing_ms = detail::elapsed_ms(t0);
  return out;
}

/// Regular shadows for every direction.
struct DirectionalShadows {
  std::vector<Direction> directions;
  std::vector<ShadowSet> shadows;
  double timing_ms = 0.0;
  std::uint64_t operations = 0;

  const ShadowSet& at(const Direction& d) const {
    for (std::size_t i = 0; i < directions.size(); ++i) {
      if (directions[i] == d) return shadows[i];
    }
    throw Error(Errc::Parse, "direction not present");
  }
};

/// Algorithm R. With w = (s_n, ..., s_1) reduced for x:
///   B_i^phi = s_i B_{i-1}^{s_i phi}  u  (B_{i-1}^phi if v_phi(s_i) < 0).
inline DirectionalShadows shadow_R(const CoxeterDatum& datum, const GroupElement& x) {
  if (!datum.affine()) throw Error(Errc::NotAffine, "Algorithm R needs an affine datum");
  auto t0 = detail::Clock::now();
  DirectionalShadows out;
  out.directions = all_directions(datum);
  const std::size_t ndir = out.directions.size();
  std::unordered_map<GroupElement, std::size_t, ElementHash> index;
  for (std::size_t i = 0; i < ndir; ++i) index.emplace(out.directions[i].label, i);

  const Word w = datum.reduced_word(x);
  // s_i phi: the direction label moves by the linear part of s_i.
  const std::size_t ngen = static_cast<std::size_t>(datum.rank() + 1);
  std::vector<std::vector<std::size_t>> moved(ngen, std::vector<std::size_t>(ndir));
  std::vector<std::vector<bool>> keep(ngen, std::vector<bool>(ndir));
  for (Generator s : datum.generators()) {
    const GroupElement sbar = datum.linear_part(datum.generator(s));
    for (std::size_t i = 0; i < ndir; ++i) {
      moved[static_cast<std::size_t>(s)][i] = index.at(sbar * out.directions[i].label);
      keep[static_cast<std::size_t>(s)][i] =
          valuation(datum, Orientation::weyl_chamber(out.directions[i]), datum.generator(s)) < 0;
    }
  }

  std::vector<ElementSet> b(ndir, ElementSet{datum.identity()});
  std::vector<std::uint64_t> ops(ndir, 0);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const Generator s = *it;
    const auto su = static_cast<std::size_t>(s);
    const GroupElement& gs = datum.generator(s);
    std::vector<ElementSet> next(ndir);
    parallel_for(ndir, [&](std::size_t i) {
      const ElementSet& src = b[moved[su][i]];
      ElementSet& dst = next[i];
      dst.reserve(src.size() * 2);
      for (const auto& z : src) dst.insert(gs * z);
      ops[i] += src.size() + 1;
      if (keep[su][i]) dst.insert(b[i].begin(), b[i].end());
    });
    b = std::move(next);
  }
  for (std::size_t i = 0; i < ndir; ++i) {
    out.shadows.push_back(detail::finish(datum, b[i], Algorithm::R, w));
    out.operations += ops[i];
  }
  out.timing_ms = detail::elapsed_ms(t0);
  for (auto& s : out.shadows) {
    s.timing_ms = out.timing_ms;
    s.operations = out.operations;
  }
  return out;
}

/// Union of the regular shadows over all directions.
inline ShadowSet full_shadow(const CoxeterDatum& datum, const GroupElement& x) {
  auto t0 = detail::Clock::now();
  auto all = shadow_R(datum, x);
  ElementSet u;
  for (const auto& s : all.shadows) u.insert(s.elements.begin(), s.elements.end());
  ShadowSet out = detail::finish(datum, u, Algorithm::R, datum.reduced_word(x));
  out.operations = all.operations;
  out.timing_ms = detail::elapsed_ms(t0);
  return out;
}

/// {y in Sh_dir(x) : y-bar = a}.
inline ShadowSet partial_shadow(const CoxeterDatum& datum, const GroupElement& x, const Direction& dir,
                                const GroupElement& a) {
  auto t0 = detail::Clock::now();
  ShadowSet full = shadow_L(datum, x, dir);
  ShadowSet out = full;
  out.elements.clear();
  for (const auto& y : full.elements) {
    if (datum.spherical_projection(y) == a) out.elements.push_back(y);
  }
  out.algorithm = Algorithm::Partial;
  out.fold_histogram.clear();
  out.timing_ms = detail::elapsed_ms(t0);
  return out;
}

/// Evaluates union_b Sh^b_dir(x) . Sh^{b^-1 a}_{b^-1 dir}(y); requires
/// l(xy) = l(x) + l(y).
inline ShadowSet compose_partial(const CoxeterDatum& datum, const GroupElement& x, const GroupElement& y,
                                 const Direction& dir, const GroupElement& a) {
  auto t0 = detail::Clock::now();
  if (datum.length(x * y) != datum.length(x) + datum.length(y))
    throw Error(Errc::LengthNotAdditive, "l(xy) != l(x) + l(y)");
  ShadowSet left = shadow_L(datum, x, dir);
  std::unordered_map<GroupElement, std::vector<GroupElement>, ElementHash> by_class;
  for (const auto& z : left.elements) by_class[datum.spherical_projection(z)].push_back(z);
  ElementSet result;
  for (const auto& [b, xs] : by_class) {
    const GroupElement binv = b.inverse();
    const Direction moved = make_direction(datum, binv * dir.label);
    const GroupElement target = binv * a;
    ShadowSet right = shadow_L(datum, y, moved);
    for (const auto& yy : right.elements) {
      if (!(datum.spherical_projection(yy) == target)) continue;
      for (const auto& xx : xs) result.insert(xx * yy);
    }
  }
  Word w = datum.reduced_word(x);
  Word wy = datum.reduced_word(y);
  w.insert(w.end(), wy.begin(), wy.end());
  ShadowSet out = detail::finish(datum, result, Algorithm::Partial, w);
  out.timing_ms = detail::elapsed_ms(t0);
  return out;
}

/// One step of the descent recursion, evaluated literally with valuations.
///   right, s in D_R(x): Sh(x) = Sh(xs) s  u  {z in Sh(xs) : v(zs) < v(z)}
///   left,  s in D_L(x): Sh(x) = s Sh_{s phi}(sx)  u  (Sh(sx) if v(s) < 0)
inline ShadowSet descent_recursion_step(const CoxeterDatum& datum, const GroupElement& x, Generator s, Side side,
                                        const Direction& dir) {
  auto t0 = detail::Clock::now();
  if (!datum.is_descent(x, s, side)) throw Error(Errc::NotADescent, "generator is not a descent on that side");
  const Orientation phi = Orientation::weyl_chamber(dir);
  const GroupElement& gs = datum.generator(s);
  ElementSet result;
  if (side == Side::Right) {
    ShadowSet prev = shadow_L(datum, x * gs, dir);
    for (const auto& z : prev.elements) {
      result.insert(z * gs);
      if (valuation(datum, phi, z * gs) < valuation(datum, phi, z)) result.insert(z);
    }
  } else {
    const GroupElement sx = gs * x;
    const Direction sdir = make_direction(datum, datum.linear_part(gs) * dir.label);
    for (const auto& z : shadow_L(datum, sx, sdir).elements) result.insert(gs * z);
    if (valuation(datum, phi, gs) < 0) {
      for (const auto& z : shadow_L(datum, sx, dir).elements) result.insert(z);
    }
  }
  ShadowSet out = detail::finish(datum, result, Algorithm::L, datum.reduced_word(x));
  out.timing_ms = detail::elapsed_ms(t0);
  return out;
}

/// All reduced expressions of x, as the closure of reduced_word(x) under
/// braid moves.
inline std::set<Word> braid_equivalent_words(const CoxeterDatum& datum, const GroupElement& x, int cap) {
  if (datum.length(x) > cap) throw Error(Errc::Exceeded, "length exceeds cap");
  std::set<Word> seen{datum.reduced_word(x)};
  std::vector<Word> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    Word w = std::move(queue.back());
    queue.pop_back();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const Generator s = w[i], t = w[i + 1];
      if (s == t) continue;
      const int m = datum.coxeter_m(s, t);
      if (m == 0 || i + static_cast<std::size_t>(m) > w.size()) continue;
      bool alternating = true;
      for (int k = 0; k < m && alternating; ++k) alternating = w[i + static_cast<std::size_t>(k)] == (k % 2 ? t : s);
      if (!alternating) continue;
      Word v = w;
      for (int k = 0; k < m; ++k) v[i + static_cast<std::size_t>(k)] = k % 2 ? s : t;
      if (seen.insert(v).second) queue.push_back(std::move(v));
    }
  }
  return seen;
}

/// Whether the word-level shadows of all reduced expressions of x coincide.
inline bool is_braid_invariant(const CoxeterDatum& datum, const Orientation& phi, const GroupElement& x, int cap) {
  auto words = braid_equivalent_words(datum, x, cap);
  std::optional<ElementSet> first;
  for (const auto& w : words) {
    ElementSet s = shadow_naive(datum, w, phi, datum.identity()).as_set();
    if (!first) {
      first = std::move(s);
    } else if (*first != s) {
      return false;
    }
  }
  return true;
}

/// [id, x] by the subword property: products of the reduced subwords of one
/// reduced expression of x. Shares no code with the gallery machinery.
inline ShadowSet bruhat_interval(const CoxeterDatum& datum, const GroupElement& x, std::size_t max_length = 24) {
  auto t0 = detail::Clock::now();
  const Word w = datum.reduced_word(x);
  if (w.size() > max_length) throw Error(Errc::WordTooLong, "Bruhat oracle limited to length " + std::to_string(max_length));
  ElementSet found;
  const std::uint64_t total = std::uint64_t{1} << w.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Word sub;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) sub.push_back(w[i]);
    }
    GroupElement y = datum.element_from_word(sub);
    if (datum.length(y) == static_cast<int>(sub.size())) found.insert(std::move(y));
  }
  ShadowSet out = detail::finish(datum, found, Algorithm::Naive, w);
  out.timing_ms = detail::elapsed_ms(t0);
  return out;
}

/// A shadow computation. Give either a word or an element; element requests
/// use reduced_word(element).
struct ShadowRequest {
  std::optional<Word> word;
  std::optional<GroupElement> element;
  Orientation orientation = Orientation::trivial_positive();
  Algorithm algorithm = Algorithm::Naive;
  /// Spherical element a selecting a partial shadow.
  std::optional<GroupElement> local_direction;
  std::optional<int> max_folds;
};

inline ShadowSet run_shadow(const CoxeterDatum& datum, const ShadowRequest& req, const ShadowLimits& limits = {}) {
  if (req.word.has_value() == req.element.has_value())
    throw Error(Errc::Parse, "give exactly one of word and element");
  const bool needs_weyl = req.algorithm == Algorithm::L || req.algorithm == Algorithm::R ||
                          req.algorithm == Algorithm::Partial;
  if (needs_weyl && !req.orientation.is_weyl_chamber())
    throw Error(Errc::RequiresWeylOrientation, algorithm_name(req.algorithm) + " needs a Weyl chamber orientation");
  if (req.algorithm == Algorithm::Naive || req.algorithm == Algorithm::NaiveBounded) {
    std::optional<int> bound = req.max_folds;
    if (req.algorithm == Algorithm::NaiveBounded && !bound) bound = datum.longest_length();
    if (req.word) return shadow_naive(datum, *req.word, req.orientation, datum.identity(), bound, limits);
    return shadow_naive(datum, *req.element, req.orientation, bound, limits);
  }
  const GroupElement x = req.element ? *req.element : datum.element_from_word(*req.word);
  if (req.word && datum.length(x) != static_cast<int>(req.word->size()))
    throw Error(Errc::Parse, "recursive algorithms need a reduced word");
  const Direction& dir = req.orientation.direction();
  switch (req.algorithm) {
    case Algorithm::L: return shadow_L(datum, x, dir);
    case Algorithm::R: {
      auto all = shadow_R(datum, x);
      return all.at(dir);
    }
    default: {
      if (!req.local_direction) throw Error(Errc::Parse, "partial shadows need a local direction");
      return partial_shadow(datum, x, dir, *req.local_direction);
    }
  }
}

}  // namespace coxshadow
