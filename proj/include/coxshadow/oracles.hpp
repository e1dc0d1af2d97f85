#pragma once

// Brute-force references for the shadow algorithms. None of these reuse the
// hat-set folding code or the recursions they are compared against.

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "coxshadow/coxeter.hpp"
#include "coxshadow/orientation.hpp"

namespace coxshadow {

/// A gallery given by its explicit alcove sequence.
struct ExplicitGallery {
  Word type;
  std::vector<GroupElement> alcoves;

  /// Positions i (1-based) with c_i = c_{i-1}.
  std::set<int> folds() const {
    std::set<int> out;
    for (std::size_t i = 1; i < alcoves.size(); ++i) {
      if (alcoves[i] == alcoves[i - 1]) out.insert(static_cast<int>(i));
    }
    return out;
  }
  const GroupElement& end() const { return alcoves.back(); }
};

/// The multifolding of the unfolded gallery at the positions in `mask`,
/// built by reflecting tails one fold at a time. The reflection across the
/// panel p_i is c_{i-1} s c_{i-1}^{-1}.
inline ExplicitGallery fold_explicitly(const CoxeterDatum& datum, const Word& w, const GroupElement& start,
                                       std::uint64_t mask) {
  ExplicitGallery g{w, {start}};
  for (Generator s : w) g.alcoves.push_back(g.alcoves.back() * datum.generator(s));
  for (std::size_t i = 1; i <= w.size(); ++i) {
    if (!(mask & (std::uint64_t{1} << (i - 1)))) continue;
    const GroupElement& prev = g.alcoves[i - 1];
    const GroupElement r = prev * datum.generator(w[i - 1]) * prev.inverse();
    for (std::size_t k = i; k < g.alcoves.size(); ++k) g.alcoves[k] = r * g.alcoves[k];
  }
  return g;
}

/// All 2^|w| multifoldings of the unfolded gallery of type w, in mask order.
inline std::vector<ExplicitGallery> enumerate_foldings_explicit(const CoxeterDatum& datum, const Word& w,
                                                                const GroupElement& start) {
  if (w.size() > 20) throw Error(Errc::WordTooLong, "explicit enumeration is limited to 20 letters");
  std::vector<ExplicitGallery> out;
  const std::uint64_t total = std::uint64_t{1} << w.size();
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) out.push_back(fold_explicitly(datum, w, start, mask));
  return out;
}

inline bool explicitly_positive(const CoxeterDatum& datum, const ExplicitGallery& g, const Orientation& phi) {
  for (int i : g.folds()) {
    const auto iu = static_cast<std::size_t>(i);
    if (evaluate(datum, phi, {g.alcoves[iu - 1], g.type[iu - 1]}, g.alcoves[iu]) != 1) return false;
  }
  return true;
}

/// End alcoves of the phi-positive explicit foldings.
inline ElementSet explicit_shadow(const CoxeterDatum& datum, const Word& w, const Orientation& phi) {
  ElementSet out;
  for (const auto& g : enumerate_foldings_explicit(datum, w, datum.identity())) {
    if (explicitly_positive(datum, g, phi)) out.insert(g.end());
  }
  return out;
}

/// Elements of word length <= max_length, keyed to their BFS depth.
/// A negative max_length enumerates a finite group completely.
inline std::unordered_map<GroupElement, int, ElementHash> bfs_group(const CoxeterDatum& datum, int max_length) {
  if (max_length < 0 && datum.affine()) throw Error(Errc::Exceeded, "affine groups need a length bound");
  std::unordered_map<GroupElement, int, ElementHash> depth{{datum.identity(), 0}};
  std::deque<GroupElement> queue{datum.identity()};
  while (!queue.empty()) {
    GroupElement x = std::move(queue.front());
    queue.pop_front();
    const int d = depth.at(x);
    if (max_length >= 0 && d >= max_length) continue;
    for (Generator s : datum.generators()) {
      GroupElement y = x * datum.generator(s);
      if (depth.emplace(y, d + 1).second) queue.push_back(std::move(y));
    }
  }
  return depth;
}

/// bfs_group as a list sorted by (length, reduced word).
inline std::vector<GroupElement> elements_up_to(const CoxeterDatum& datum, int max_length) {
  auto table = bfs_group(datum, max_length);
  std::vector<GroupElement> out;
  for (auto& [x, d] : table) out.push_back(x);
  datum.sort_canonical(out);
  return out;
}

/// Outcome of one primary-versus-oracle comparison.
struct OracleReport {
  std::string suite;
  std::string name;
  nlohmann::ordered_json params;
  std::size_t primary_count = 0;
  std::size_t oracle_count = 0;
  bool equal = true;
  /// Negative controls expect the two results to differ.
  bool expect_equal = true;
  /// Reduced word of an element in the symmetric difference, or a message.
  nlohmann::ordered_json counterexample;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["case"] = name;
    j["params"] = params;
    j["primary_count"] = primary_count;
    j["oracle_count"] = oracle_count;
    j["equal"] = equal;
    if (!expect_equal) j["expect_equal"] = false;
    j["pass"] = equal == expect_equal;
    j["counterexample"] = counterexample;
    return j;
  }
};

/// Fills counts, equality and a counterexample from two element sets.
inline void compare_sets(const CoxeterDatum& datum, const ElementSet& primary, const ElementSet& oracle,
                         OracleReport& report) {
  report.primary_count = primary.size();
  report.oracle_count = oracle.size();
  report.equal = primary == oracle;
  if (report.equal) return;
  std::vector<GroupElement> diff;
  for (const auto& x : primary) {
    if (!oracle.count(x)) diff.push_back(x);
  }
  for (const auto& x : oracle) {
    if (!primary.count(x)) diff.push_back(x);
  }
  datum.sort_canonical(diff);
  report.counterexample = datum.reduced_word(diff.front());
}

}  // namespace coxshadow
