// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
//
// Timing thresholds are machine-dependent and can be overridden:
//   COXSHADOW_SPEEDUP_MIN  minimum naive/L time ratio at length 20 (default 10)
//   COXSHADOW_L40_MAX_S    maximum seconds for L at length 40 (default 10)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "coxshadow/bench.hpp"
#include "coxshadow/io.hpp"
#include "coxshadow/oracles.hpp"
#include "coxshadow/render.hpp"
#include "coxshadow/shadow.hpp"
#include "coxshadow/verify.hpp"

using namespace coxshadow;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double env_or(const char* name, double fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::strtod(v, nullptr) : fallback;
}

std::string suite_detail(const SuiteResult& r) {
  std::ostringstream s;
  s << r.reports.size() << " reports, " << r.failures() << " failures";
  for (const auto& rep : r.reports) {
    if (rep.equal != rep.expect_equal) {
      s << "; first: " << rep.to_json().dump();
      break;
    }
  }
  return s.str();
}

Outcome run_suites(const std::string& suite, const std::vector<std::string>& types, int max_length,
                   int pairs = 200, int galleries = 1000) {
  VerifyOptions opt;
  opt.types = types;
  opt.max_length = max_length;
  opt.random_pairs = pairs;
  opt.random_galleries = galleries;
  const auto r = run_suite(suite, opt);
  return {r.passed() && !r.reports.empty(), suite_detail(r)};
}

Outcome oracle_equivalence() { return run_suites("core", {"A2~", "B2~", "G2~"}, 8); }

Outcome bruhat() {
  auto affine = run_suites("bruhat", {"A2~"}, 8);
  auto finite = run_suites("bruhat", {"A2", "B2", "G2"}, 8);
  return {affine.pass && finite.pass, "affine: " + affine.detail + "; finite: " + finite.detail};
}

Outcome braid() {
  auto weyl = run_suites("braid", {"A2~", "B2~"}, 8);
  const auto a2 = CoxeterDatum::parse("A2");
  const auto phi = parse_orientation(a2, std::string("table:") + COXSHADOW_DATA_DIR + "/a2_not_braid_invariant.json");
  const auto left = shadow_naive(a2, Word{1, 2, 1}, phi, a2.identity()).as_set();
  const auto right = shadow_naive(a2, Word{2, 1, 2}, phi, a2.identity()).as_set();
  const bool differ = left != right;
  return {weyl.pass && differ, "Weyl chamber: " + weyl.detail + "; table control: |Sh(121)|=" +
                                   std::to_string(left.size()) + ", |Sh(212)|=" + std::to_string(right.size()) +
                                   (differ ? ", differ" : ", equal")};
}

Outcome fold_bounds() {
  auto r = run_suites("bounds", {"A2~", "B2~", "G2~"}, 8);
  // Longest lengths from breadth-first search of the finite groups.
  bool lengths_ok = true;
  std::string lengths;
  const std::vector<std::pair<std::string, int>> expected{{"A2", 3}, {"B2", 4}, {"G2", 6}};
  for (const auto& [tag, want] : expected) {
    const auto d = CoxeterDatum::parse(tag);
    int longest = 0;
    for (const auto& [x, depth] : bfs_group(d, -1)) longest = std::max(longest, depth);
    lengths_ok = lengths_ok && longest == want && d.longest_length() == want;
    lengths += " " + tag + "=" + std::to_string(longest);
  }
  return {r.pass && lengths_ok, r.detail + "; l(w0):" + lengths};
}

Outcome valuations() { return run_suites("valuations", {"A2~", "B2~", "G2~"}, 8); }

Outcome partial() { return run_suites("partial", {"A2~", "B2~", "G2~"}, 8, 200); }

Outcome folding() { return run_suites("folding", {"A2~", "B2~", "G2~"}, 8, 200, 1000); }

double seconds(const std::function<void()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome complexity() {
  const double speedup_min = env_or("COXSHADOW_SPEEDUP_MIN", 10.0);
  const double l40_max = env_or("COXSHADOW_L40_MAX_S", 10.0);
  const auto d = CoxeterDatum::parse("A2~");

  const auto x20 = bench_element(d, 20);
  const auto dir20 = widest_direction(d, x20);
  ShadowSet by_l, by_naive;
  const double t_l = seconds([&] { by_l = shadow_L(d, x20, dir20); });
  const double t_naive =
      seconds([&] { by_naive = shadow_naive(d, x20, Orientation::weyl_chamber(dir20), std::nullopt); });
  const double speedup = t_naive / std::max(t_l, 1e-9);
  const bool agree20 = by_l.as_set() == by_naive.as_set();

  const auto x40 = bench_element(d, 40);
  std::vector<ShadowSet> l40;
  const auto dirs = all_directions(d);
  const double t_l40 = seconds([&] {
    for (const auto& dir : dirs) l40.push_back(shadow_L(d, x40, dir));
  });
  const auto r40 = shadow_R(d, x40);
  bool agree40 = true;
  std::size_t largest = 0;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    agree40 = agree40 && l40[i].as_set() == r40.at(dirs[i]).as_set();
    largest = std::max(largest, l40[i].size());
  }

  char buf[512];
  std::snprintf(buf, sizeof buf,
                "l=20 |Sh|=%zu: L %.4fs, naive %.3fs, speedup %.0fx (min %.1f), sets %s; "
                "l=40 all %zu directions: L %.3fs (max %.1f), largest |Sh|=%zu, L=R %s",
                by_l.size(), t_l, t_naive, speedup, speedup_min, agree20 ? "equal" : "differ", dirs.size(), t_l40,
                l40_max, largest, agree40 ? "yes" : "no");
  return {speedup >= speedup_min && agree20 && t_l40 < l40_max && agree40, buf};
}

/// data-element values of polygons with the given class.
std::multiset<std::string> polygons_of(const std::string& svg, const std::string& cls) {
  std::multiset<std::string> out;
  const std::regex re("<polygon class=\"" + cls + "\" data-element=\"([^\"]*)\"");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
    out.insert((*it)[1].str());
  }
  return out;
}

std::multiset<std::string> words_of(const CoxeterDatum& d, const ShadowSet& s) {
  std::multiset<std::string> out;
  for (const auto& x : s.elements) out.insert(word_string(d.reduced_word(x)));
  return out;
}

Outcome rendering() {
  const auto fixtures = read_json_file(std::string(COXSHADOW_DATA_DIR) + "/render_scenes.json");
  std::size_t scenes = 0, ok = 0;
  std::string first_failure;
  for (const auto& sc : fixtures["scenes"]) {
    ++scenes;
    const auto d = CoxeterDatum::parse(sc["type"].get<std::string>());
    const auto x = d.element_from_word(parse_word(sc["element"].get<std::string>()));
    const auto dir = direction_from_word(d, parse_word(sc["dir"].get<std::string>()));
    const std::string svg = render_svg(d, build_scene(d, x, dir, sc["radius"].get<int>()));

    const auto regular = polygons_of(svg, "shadow-regular");
    const auto full = polygons_of(svg, "shadow-full");
    const auto want_regular = words_of(d, shadow_L(d, x, dir));
    const auto want_full = words_of(d, full_shadow(d, x));
    const bool no_duplicates = std::set<std::string>(full.begin(), full.end()).size() == full.size() &&
                               std::set<std::string>(regular.begin(), regular.end()).size() == regular.size();
    if (regular == want_regular && full == want_full && no_duplicates) {
      ++ok;
    } else if (first_failure.empty()) {
      first_failure = "; mismatch in " + sc.dump();
    }
  }
  return {scenes == 5 && ok == scenes, std::to_string(ok) + "/" + std::to_string(scenes) + " scenes match" + first_failure};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence", oracle_equivalence},
      {"Bruhat reproduction", bruhat},
      {"braid invariance", braid},
      {"fold bounds", fold_bounds},
      {"valuation identities", valuations},
      {"partial-shadow recursion", partial},
      {"folding calculus", folding},
      {"complexity sanity", complexity},
      {"rendering consistency", rendering},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    double t = 0;
    try {
      t = seconds([&] { o = criteria[i].second(); });
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("criterion %zu %s: %s (%.1fs) %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), t,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%s: %d of %zu criteria failed\n", failed ? "FAIL" : "PASS", failed, criteria.size());
  return failed ? 1 : 0;
}
