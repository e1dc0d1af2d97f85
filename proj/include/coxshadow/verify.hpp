#pragma once

// Verification suites: each compares a primary computation against an
// oracle and yields one OracleReport per case.

#include <algorithm>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "coxshadow/coxeter.hpp"
#include "coxshadow/gallery.hpp"
#include "coxshadow/io.hpp"
#include "coxshadow/oracles.hpp"
#include "coxshadow/orientation.hpp"
#include "coxshadow/parallel.hpp"
#include "coxshadow/shadow.hpp"

namespace coxshadow {

struct VerifyOptions {
  std::vector<std::string> types{"A2~", "B2~", "G2~"};
  int max_length = 8;
  std::uint64_t seed = 20240601;
  int random_pairs = 200;
  int random_galleries = 1000;
};

/// Reports of a suite, with the failures counted.
struct SuiteResult {
  std::string suite;
  std::vector<OracleReport> reports;

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const OracleReport& r) {
      return r.equal != r.expect_equal;
    }));
  }
  bool passed() const { return failures() == 0; }
};

namespace detail {

inline OracleReport make_report(const std::string& suite, const std::string& name, const CoxeterDatum& datum) {
  OracleReport r;
  r.suite = suite;
  r.name = name;
  r.params["type"] = datum.tag();
  return r;
}

inline void mark_failed(OracleReport& r, const std::string& why) {
  r.equal = false;
  if (r.counterexample.is_null()) r.counterexample = why;
}

/// Element lists for a suite: everything up to max_length for affine types,
/// the whole group for finite types.
inline std::vector<GroupElement> suite_elements(const CoxeterDatum& datum, int max_length) {
  return elements_up_to(datum, datum.affine() ? max_length : -1);
}

template <typename Fn>
std::vector<OracleReport> per_element(const std::vector<GroupElement>& elems, Fn&& fn) {
  std::vector<std::vector<OracleReport>> chunks(elems.size());
  parallel_for(elems.size(), [&](std::size_t i) { chunks[i] = fn(elems[i]); });
  std::vector<OracleReport> out;
  for (auto& c : chunks) {
    for (auto& r : c) out.push_back(std::move(r));
  }
  return out;
}

inline void require_affine(const CoxeterDatum& datum, const std::string& suite) {
  if (!datum.affine()) throw Error(Errc::NotAffine, "suite '" + suite + "' needs affine types");
}

}  // namespace detail

/// Named primary-versus-oracle comparisons:
///   "bruhat"                trivial-positive shadow vs subword interval
///   "algL_vs_naive"         Algorithm L vs exhaustive enumeration
///   "algR_vs_L"             Algorithm R entry vs Algorithm L
///   "bounded_vs_naive"      fold-bounded vs unbounded enumeration
///   "explicit_vs_naive"     tail-reflection enumeration vs hat-set enumeration
///   "braid_invariance_weyl" shadows of all reduced words of x
inline OracleReport check(const CoxeterDatum& datum, const std::string& name, const GroupElement& x,
                          const std::optional<Direction>& dir = std::nullopt) {
  OracleReport r = detail::make_report("check", name, datum);
  r.params["element"] = datum.reduced_word(x);
  if (dir) r.params["direction"] = datum.reduced_word(dir->label);
  const Word w = datum.reduced_word(x);
  auto need_dir = [&] {
    if (!dir) throw Error(Errc::RequiresWeylOrientation, "case '" + name + "' needs a direction");
    return Orientation::weyl_chamber(*dir);
  };
  if (name == "bruhat") {
    compare_sets(datum, shadow_naive(datum, w, Orientation::trivial_positive(), datum.identity()).as_set(),
                 bruhat_interval(datum, x).as_set(), r);
  } else if (name == "algL_vs_naive") {
    auto phi = need_dir();
    compare_sets(datum, shadow_L(datum, x, *dir).as_set(), shadow_naive(datum, w, phi, datum.identity()).as_set(), r);
  } else if (name == "algR_vs_L") {
    need_dir();
    compare_sets(datum, shadow_R(datum, x).at(*dir).as_set(), shadow_L(datum, x, *dir).as_set(), r);
  } else if (name == "bounded_vs_naive") {
    auto phi = need_dir();
    compare_sets(datum, shadow_naive(datum, w, phi, datum.identity(), datum.longest_length()).as_set(),
                 shadow_naive(datum, w, phi, datum.identity()).as_set(), r);
  } else if (name == "explicit_vs_naive") {
    Orientation phi = dir ? Orientation::weyl_chamber(*dir) : Orientation::trivial_positive();
    compare_sets(datum, shadow_naive(datum, w, phi, datum.identity()).as_set(), explicit_shadow(datum, w, phi), r);
  } else if (name == "braid_invariance_weyl") {
    auto phi = need_dir();
    auto words = braid_equivalent_words(datum, x, static_cast<int>(w.size()));
    ElementSet first = shadow_naive(datum, w, phi, datum.identity()).as_set();
    r.primary_count = first.size();
    r.oracle_count = words.size();
    for (const auto& v : words) {
      ElementSet other = shadow_naive(datum, v, phi, datum.identity()).as_set();
      if (other != first) {
        r.equal = false;
        r.counterexample = v;
        break;
      }
    }
  } else {
    throw Error(Errc::Parse, "unknown check '" + name + "'");
  }
  return r;
}

/// L = R[dir] = naive = bounded naive = explicit enumeration, every x and dir.
inline std::vector<OracleReport> suite_core(const CoxeterDatum& datum, const VerifyOptions& opt) {
  detail::require_affine(datum, "core");
  const auto dirs = all_directions(datum);
  return detail::per_element(detail::suite_elements(datum, opt.max_length), [&](const GroupElement& x) {
    std::vector<OracleReport> out;
    const Word w = datum.reduced_word(x);
    const auto all = shadow_R(datum, x);
    for (const auto& dir : dirs) {
      const auto phi = Orientation::weyl_chamber(dir);
      OracleReport r = detail::make_report("core", "L=R=naive=bounded", datum);
      r.params["element"] = w;
      r.params["direction"] = datum.reduced_word(dir.label);
      const ElementSet naive = shadow_naive(datum, w, phi, datum.identity()).as_set();
      compare_sets(datum, shadow_L(datum, x, dir).as_set(), naive, r);
      if (all.at(dir).as_set() != naive) detail::mark_failed(r, "Algorithm R differs");
      if (shadow_naive(datum, w, phi, datum.identity(), datum.longest_length()).as_set() != naive)
        detail::mark_failed(r, "bounded enumeration differs");
      if (explicit_shadow(datum, w, phi) != naive) detail::mark_failed(r, "explicit enumeration differs");
      if (!naive.count(x)) detail::mark_failed(r, "x missing from its own shadow");
      out.push_back(std::move(r));
    }
    return out;
  });
}

/// Trivial-positive shadow = id-alcove shadow = subword interval.
inline std::vector<OracleReport> suite_bruhat(const CoxeterDatum& datum, const VerifyOptions& opt) {
  return detail::per_element(detail::suite_elements(datum, opt.max_length), [&](const GroupElement& x) {
    OracleReport r = detail::make_report("bruhat", "trivial=id-alcove=interval", datum);
    const Word w = datum.reduced_word(x);
    r.params["element"] = w;
    const ElementSet plus = shadow_naive(datum, w, Orientation::trivial_positive(), datum.identity()).as_set();
    compare_sets(datum, plus, bruhat_interval(datum, x).as_set(), r);
    if (shadow_naive(datum, w, Orientation::alcove(datum.identity()), datum.identity()).as_set() != plus)
      detail::mark_failed(r, "id-alcove shadow differs");
    return std::vector<OracleReport>{std::move(r)};
  });
}

/// Word-independence of Weyl chamber shadows. For finite A2 the bundled
/// non-braid-invariant table is added as a negative control.
inline std::vector<OracleReport> suite_braid(const CoxeterDatum& datum, const VerifyOptions& opt) {
  std::vector<OracleReport> out;
  if (datum.affine()) {
    const auto dirs = all_directions(datum);
    out = detail::per_element(detail::suite_elements(datum, opt.max_length), [&](const GroupElement& x) {
      std::vector<OracleReport> rs;
      for (const auto& dir : dirs) {
        auto r = check(datum, "braid_invariance_weyl", x, dir);
        r.suite = "braid";
        rs.push_back(std::move(r));
      }
      return rs;
    });
  }
  if (datum.tag() == "A2") {
    OracleReport r = detail::make_report("braid", "non_braid_invariant_control", datum);
    r.params["words"] = {Word{1, 2, 1}, Word{2, 1, 2}};
    r.expect_equal = false;
    const auto phi = a2_non_braid_invariant();
    compare_sets(datum, shadow_naive(datum, Word{1, 2, 1}, phi, datum.identity()).as_set(),
                 shadow_naive(datum, Word{2, 1, 2}, phi, datum.identity()).as_set(), r);
    out.push_back(std::move(r));
  }
  return out;
}

/// ell_R(x y^-1) <= |folds| <= ell(w0) over all positive multifoldings.
inline std::vector<OracleReport> suite_bounds(const CoxeterDatum& datum, const VerifyOptions& opt) {
  detail::require_affine(datum, "bounds");
  const auto dirs = all_directions(datum);
  const int top = datum.longest_length();
  // x y^-1 has length <= 2 max_length; the table region is twice as large.
  const ReflectionLengthTable table(datum, 2 * opt.max_length, top);
  return detail::per_element(detail::suite_elements(datum, opt.max_length), [&](const GroupElement& x) {
    std::vector<OracleReport> out;
    const Word w = datum.reduced_word(x);
    const auto galleries = enumerate_foldings_explicit(datum, w, datum.identity());
    for (const auto& dir : dirs) {
      const auto phi = Orientation::weyl_chamber(dir);
      OracleReport r = detail::make_report("bounds", "reflection_length<=folds<=l(w0)", datum);
      r.params["element"] = w;
      r.params["direction"] = datum.reduced_word(dir.label);
      int most = 0;
      for (const auto& g : galleries) {
        if (!explicitly_positive(datum, g, phi)) continue;
        ++r.primary_count;
        const int folds = static_cast<int>(g.folds().size());
        most = std::max(most, folds);
        const auto lr = table.lookup(x * g.end().inverse());
        if (folds > top || !lr || *lr > folds) {
          detail::mark_failed(r, nlohmann::ordered_json{{"folds", folds}, {"end", datum.reduced_word(g.end())}}.dump());
        }
      }
      r.oracle_count = static_cast<std::size_t>(most);
      out.push_back(std::move(r));
    }
    return out;
  });
}

/// v(x) > v(rx) iff x is on the positive side of H_r, and
/// l(x) = max_a v_a(x). Reflections are those with |level| <= max_length + 2.
inline std::vector<OracleReport> suite_valuations(const CoxeterDatum& datum, const VerifyOptions& opt) {
  detail::require_affine(datum, "valuations");
  const auto dirs = all_directions(datum);
  std::vector<Hyperplane> walls;
  const Int span = opt.max_length + 2;
  for (int root = 0; root < static_cast<int>(datum.positive_roots().size()); ++root)
    for (Int k = -span; k <= span; ++k) walls.push_back({root, k});
  std::vector<GroupElement> reflections;
  for (const auto& h : walls) reflections.push_back(datum.reflection(h));
  return detail::per_element(detail::suite_elements(datum, opt.max_length), [&](const GroupElement& x) {
    std::vector<OracleReport> out;
    const Word w = datum.reduced_word(x);
    int best = INT32_MIN;
    for (const auto& dir : dirs) {
      const auto phi = Orientation::weyl_chamber(dir);
      OracleReport r = detail::make_report("valuations", "reflections_increasing_v", datum);
      r.params["element"] = w;
      r.params["direction"] = datum.reduced_word(dir.label);
      const int v = valuation(datum, phi, x);
      best = std::max(best, v);
      for (std::size_t i = 0; i < walls.size(); ++i) {
        const bool decreases = v > valuation(datum, phi, reflections[i] * x);
        const bool positive = positive_side(datum, phi, walls[i]) & side_bit(datum.side_of(x.barycenter(), walls[i]));
        ++r.primary_count;
        if (decreases != positive) {
          detail::mark_failed(r, nlohmann::ordered_json{{"root", walls[i].root}, {"level", walls[i].level}}.dump());
        }
      }
      out.push_back(std::move(r));
    }
    OracleReport m = detail::make_report("valuations", "length_is_max_valuation", datum);
    m.params["element"] = w;
    m.primary_count = static_cast<std::size_t>(datum.length(x));
    m.oracle_count = static_cast<std::size_t>(best);
    m.equal = best == datum.length(x);
    out.push_back(std::move(m));
    return out;
  });
}

/// Random x, y of lengths up to max_length, sampled until l(xy) = l(x) + l(y).
inline std::vector<std::pair<GroupElement, GroupElement>> random_additive_pairs(const CoxeterDatum& datum,
                                                                                  int max_length, int count,
                                                                                  std::uint64_t seed) {
  const auto elems = elements_up_to(datum, max_length);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  std::vector<std::pair<GroupElement, GroupElement>> out;
  while (static_cast<int>(out.size()) < count) {
    const auto& x = elems[pick(rng)];
    const auto& y = elems[pick(rng)];
    const int lx = datum.length(x), ly = datum.length(y);
    if (lx + ly <= max_length && datum.length(x * y) == lx + ly) out.emplace_back(x, y);
  }
  return out;
}

/// Sh^a(xy) computed directly and through the product formula.
inline std::vector<OracleReport> suite_partial(const CoxeterDatum& datum, const VerifyOptions& opt) {
  detail::require_affine(datum, "partial");
  const auto dirs = all_directions(datum);
  const auto spherical = datum.spherical_elements();
  const auto pairs = random_additive_pairs(datum, opt.max_length, opt.random_pairs, opt.seed);
  std::vector<std::vector<OracleReport>> chunks(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    const auto& [x, y] = pairs[i];
    for (const auto& dir : dirs) {
      OracleReport r = detail::make_report("partial", "product_formula", datum);
      r.params["x"] = datum.reduced_word(x);
      r.params["y"] = datum.reduced_word(y);
      r.params["direction"] = datum.reduced_word(dir.label);
      std::size_t total = 0;
      for (const auto& a : spherical) {
        const ElementSet direct = partial_shadow(datum, x * y, dir, a).as_set();
        const ElementSet composed = compose_partial(datum, x, y, dir, a).as_set();
        total += direct.size();
        if (direct != composed) detail::mark_failed(r, "a = " + word_string(datum.reduced_word(a)));
      }
      r.primary_count = total;
      r.oracle_count = shadow_L(datum, x * y, dir).size();
      if (r.primary_count != r.oracle_count) detail::mark_failed(r, "partial shadows do not partition");
      chunks[i].push_back(std::move(r));
    }
  });
  std::vector<OracleReport> out;
  for (auto& c : chunks) {
    for (auto& r : c) out.push_back(std::move(r));
  }
  return out;
}

/// Reflects the tail of an alcove sequence across the panel p_i.
inline std::vector<GroupElement> fold_sequence(const CoxeterDatum& datum, std::vector<GroupElement> alcoves,
                                               const Word& type, int i) {
  const auto iu = static_cast<std::size_t>(i);
  const GroupElement r = alcoves[iu - 1] * datum.generator(type[iu - 1]) * alcoves[iu - 1].inverse();
  for (std::size_t k = iu; k < alcoves.size(); ++k) alcoves[k] = r * alcoves[k];
  return alcoves;
}

inline Gallery random_gallery(const CoxeterDatum& datum, std::mt19937_64& rng, int max_letters) {
  const auto& gens = datum.generators();
  std::uniform_int_distribution<std::size_t> gen(0, gens.size() - 1);
  std::uniform_int_distribution<int> len(1, max_letters);
  std::bernoulli_distribution coin(0.3);
  Word start;
  for (int i = len(rng) / 2; i > 0; --i) start.push_back(gens[gen(rng)]);
  DecoratedWord w;
  for (int i = len(rng); i > 0; --i) {
    w.letters.push_back(gens[gen(rng)]);
    if (coin(rng)) w.hats.insert(static_cast<int>(w.letters.size()));
  }
  return Gallery(datum.element_from_word(start), std::move(w));
}

inline std::set<int> random_positions(std::mt19937_64& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.4);
  std::set<int> out;
  for (std::size_t i = 1; i <= n; ++i) {
    if (coin(rng)) out.insert(static_cast<int>(i));
  }
  return out;
}

/// Folding calculus on random galleries, checked against explicit tail
/// reflections of alcove sequences.
inline std::vector<OracleReport> suite_folding(const CoxeterDatum& datum, const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed ^ std::hash<std::string>{}(datum.tag()));
  std::uniform_int_distribution<int> coin(0, 1);
  auto report = [&](const std::string& name) {
    OracleReport r = detail::make_report("folding", name, datum);
    r.params["trials"] = opt.random_galleries;
    return r;
  };
  OracleReport inv = report("fold_involution"), comm = report("folds_commute"), multi = report("multifold_law"),
               foot = report("footprint_end_alcove");
  auto fail = [&](OracleReport& r, const Gallery& g) {
    ++r.oracle_count;
    if (r.equal) r.counterexample = gallery_to_json(datum, g);
    r.equal = false;
  };
  for (int t = 0; t < opt.random_galleries; ++t) {
    const Gallery g = random_gallery(datum, rng, 12);
    const auto n = static_cast<int>(g.panel_count());
    std::uniform_int_distribution<int> pos(1, n);
    const int i = pos(rng), j = pos(rng);
    const auto seq = g.alcoves(datum);

    ++inv.primary_count;
    if (!(fold(fold(g, i), i) == g) || fold_sequence(datum, fold_sequence(datum, seq, g.type(), i), g.type(), i) != seq ||
        fold(g, i).alcoves(datum) != fold_sequence(datum, seq, g.type(), i))
      fail(inv, g);

    ++comm.primary_count;
    const auto ij = fold_sequence(datum, fold_sequence(datum, seq, g.type(), i), g.type(), j);
    const auto ji = fold_sequence(datum, fold_sequence(datum, seq, g.type(), j), g.type(), i);
    if (ij != ji || fold(fold(g, i), j).alcoves(datum) != ij) fail(comm, g);

    ++multi.primary_count;
    const auto I = random_positions(rng, g.panel_count());
    const auto J = random_positions(rng, g.panel_count());
    auto explicit_I = seq;
    for (int k : I) explicit_I = fold_sequence(datum, explicit_I, g.type(), k);
    const Gallery gI = multifold(g, I);
    if (!(multifold(gI, J) == multifold(g, symmetric_difference(I, J))) || gI.alcoves(datum) != explicit_I ||
        gI.folds() != symmetric_difference(g.folds(), I) || !multifold(gI, gI.folds()).folds().empty())
      fail(multi, g);

    ++foot.primary_count;
    const Gallery f = footprint(gI);
    if (!f.folds().empty() || f.panel_count() != gI.panel_count() - gI.folds().size() ||
        end_alcove(datum, gI) != explicit_I.back() || f.alcoves(datum).back() != explicit_I.back())
      fail(foot, g);
  }
  return {inv, comm, multi, foot};
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"core", "bruhat", "braid", "bounds", "valuations", "partial", "folding"};
  return names;
}

inline SuiteResult run_suite(const std::string& suite, const VerifyOptions& opt) {
  SuiteResult out{suite, {}};
  for (const auto& tag : opt.types) {
    const auto datum = CoxeterDatum::parse(tag);
    std::vector<OracleReport> rs;
    if (suite == "core") {
      rs = suite_core(datum, opt);
    } else if (suite == "bruhat") {
      rs = suite_bruhat(datum, opt);
    } else if (suite == "braid") {
      rs = suite_braid(datum, opt);
    } else if (suite == "bounds") {
      rs = suite_bounds(datum, opt);
    } else if (suite == "valuations") {
      rs = suite_valuations(datum, opt);
    } else if (suite == "partial") {
      rs = suite_partial(datum, opt);
    } else if (suite == "folding") {
      rs = suite_folding(datum, opt);
    } else {
      throw Error(Errc::Parse, "unknown suite '" + suite + "'");
    }
    for (auto& r : rs) out.reports.push_back(std::move(r));
  }
  return out;
}

}  // namespace coxshadow
