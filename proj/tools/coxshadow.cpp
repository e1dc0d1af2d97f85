// coxshadow: compute, verify, benchmark and render shadows.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "coxshadow/bench.hpp"
#include "coxshadow/io.hpp"
#include "coxshadow/render.hpp"
#include "coxshadow/shadow.hpp"
#include "coxshadow/verify.hpp"

namespace cs = coxshadow;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

/// "4..20" or "4,8,12".
std::vector<int> parse_lengths(const std::string& text) {
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = std::stoi(text.substr(0, dots)), hi = std::stoi(text.substr(dots + 2));
    std::vector<int> out;
    for (int l = lo; l <= hi; ++l) out.push_back(l);
    return out;
  }
  std::vector<int> out;
  for (const auto& s : split(text, ',')) out.push_back(std::stoi(s));
  return out;
}

struct ShadowArgs {
  std::string type;
  std::string word;
  std::string element;
  std::string orient;
  std::string algorithm = "naive";
  std::string local_dir;
  std::optional<int> max_folds;
  bool no_timing = false;
};

int cmd_shadow(const ShadowArgs& a) {
  const auto datum = cs::CoxeterDatum::parse(a.type);
  const auto alg = cs::parse_algorithm(a.algorithm);
  const bool recursive = alg == cs::Algorithm::L || alg == cs::Algorithm::R || alg == cs::Algorithm::Partial;
  const std::string orient = a.orient.empty() ? (recursive ? "dir:" : "+") : a.orient;

  cs::Json request;
  request["type"] = datum.tag();
  cs::ShadowRequest req;
  if (!a.word.empty() && !a.element.empty()) throw cs::Error(cs::Errc::Parse, "give --word or --element, not both");
  if (!a.element.empty()) {
    req.element = datum.element_from_word(cs::parse_word(a.element));
    request["element"] = datum.reduced_word(*req.element);
  } else {
    req.word = cs::parse_word(a.word);
    for (cs::Generator s : *req.word) {
      if (!datum.is_generator(s)) throw cs::Error(cs::Errc::Parse, "generator " + std::to_string(s) + " not in " + datum.tag());
    }
    request["word"] = *req.word;
  }
  request["orient"] = orient;
  request["algorithm"] = cs::algorithm_name(alg);
  req.orientation = cs::parse_orientation(datum, orient);
  req.algorithm = alg;
  req.max_folds = a.max_folds;
  if (a.max_folds) request["max_folds"] = *a.max_folds;
  if (alg == cs::Algorithm::Partial) {
    req.local_direction = datum.element_from_word(cs::parse_word(a.local_dir));
    if (!req.local_direction->has_zero_translation())
      throw cs::Error(cs::Errc::Parse, "--local-dir must be a word in the spherical generators");
    request["local_dir"] = datum.reduced_word(*req.local_direction);
  }

  if (alg == cs::Algorithm::R) {
    const auto x = req.element ? *req.element : datum.element_from_word(*req.word);
    if (req.word && datum.length(x) != static_cast<int>(req.word->size()))
      throw cs::Error(cs::Errc::Parse, "recursive algorithms need a reduced word");
    const auto all = cs::shadow_R(datum, x);
    cs::Json out;
    out["request"] = request;
    cs::Json dirs = cs::Json::array();
    for (std::size_t i = 0; i < all.directions.size(); ++i) {
      dirs.push_back({{"direction", datum.reduced_word(all.directions[i].label)},
                      {"elements", cs::word_list(datum, all.shadows[i].elements)},
                      {"count", all.shadows[i].size()}});
    }
    out["directions"] = dirs;
    out["operations"] = all.operations;
    if (!a.no_timing) out["timing_ms"] = all.timing_ms;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  const auto result = cs::run_shadow(datum, req);
  std::cout << cs::shadow_to_json(datum, request, result, !a.no_timing).dump(2) << "\n";
  return 0;
}

struct VerifyArgs {
  std::string suite = "core";
  std::string types = "A2~,B2~,G2~";
  int max_length = 8;
  std::uint64_t seed = 20240601;
  int pairs = 200;
  int galleries = 1000;
};

int cmd_verify(const VerifyArgs& a) {
  cs::VerifyOptions opt;
  opt.types = split(a.types, ',');
  opt.max_length = a.max_length;
  opt.seed = a.seed;
  opt.random_pairs = a.pairs;
  opt.random_galleries = a.galleries;
  std::vector<std::string> suites = a.suite == "all" ? cs::suite_names() : split(a.suite, ',');
  std::size_t failures = 0, total = 0;
  cs::Json per_suite = cs::Json::object();
  for (const auto& name : suites) {
    const auto result = cs::run_suite(name, opt);
    for (const auto& r : result.reports) std::cout << r.to_json().dump() << "\n";
    failures += result.failures();
    total += result.reports.size();
    per_suite[name] = {{"reports", result.reports.size()}, {"failures", result.failures()}};
  }
  cs::Json summary{{"summary", {{"reports", total}, {"failures", failures}, {"suites", per_suite}}}};
  std::cout << summary.dump() << "\n";
  return static_cast<int>(std::min<std::size_t>(failures, 125));
}

struct BenchArgs {
  std::string type = "A2~";
  std::string lengths = "4..20";
  std::string algorithms = "L,R,naive_bounded";
  std::string dir = "auto";
  int repeats = 3;
};

int cmd_bench(const BenchArgs& a) {
  const auto datum = cs::CoxeterDatum::parse(a.type);
  const cs::ShadowLimits limits;
  std::cout << "algorithm,length,median_ms,shadow_size,operations\n";
  for (const auto& name : split(a.algorithms, ',')) {
    const auto alg = cs::parse_algorithm(name);
    for (int len : parse_lengths(a.lengths)) {
      const auto x = cs::bench_element(datum, len);
      if ((alg == cs::Algorithm::Naive && static_cast<std::size_t>(len) > limits.naive_max) ||
          (alg == cs::Algorithm::NaiveBounded && static_cast<std::size_t>(len) > limits.bounded_max)) {
        std::cerr << name << " skipped at length " << len << ": exceeds the enumeration cap\n";
        continue;
      }
      const auto dir = a.dir == "auto" ? cs::widest_direction(datum, x)
                                       : cs::direction_from_word(datum, cs::parse_word(a.dir));
      const auto row = cs::bench_algorithm(datum, alg, x, dir, a.repeats, limits);
      char ms[32];
      std::snprintf(ms, sizeof ms, "%.3f", row.median_ms);
      std::cout << name << ',' << row.length << ',' << ms << ',' << row.shadow_size << ',' << row.operations << "\n";
    }
  }
  return 0;
}

struct RenderArgs {
  std::string type = "A2~";
  std::string element;
  std::string dir;
  int radius = 0;
  std::string output;
};

int cmd_render(const RenderArgs& a) {
  const auto datum = cs::CoxeterDatum::parse(a.type);
  if (datum.rank() != 2 || !datum.affine())
    throw cs::Error(cs::Errc::RenderUnsupported, "only rank-2 affine types can be rendered, not " + datum.tag());
  const auto x = datum.element_from_word(cs::parse_word(a.element));
  const auto dir = cs::direction_from_word(datum, cs::parse_word(a.dir));
  const auto scene = cs::build_scene(datum, x, dir, a.radius);
  const std::string svg = cs::render_svg(datum, scene);
  if (a.output.empty()) {
    std::cout << svg;
  } else {
    std::ofstream out(a.output);
    if (!out) throw cs::Error(cs::Errc::Parse, "cannot write " + a.output);
    out << svg;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shadows of elements in finite and affine Weyl groups"};
  app.require_subcommand(1);

  ShadowArgs sa;
  auto* shadow = app.add_subcommand("shadow", "Compute a shadow as JSON");
  shadow->add_option("--type", sa.type, "Type tag, e.g. A2, A2~, G2~")->required();
  shadow->add_option("--word", sa.word, "Gallery type, e.g. 012 or \"0 1 2\"");
  shadow->add_option("--element", sa.element, "Element given by any word; its reduced word is used");
  shadow->add_option("--orient", sa.orient, "+, -, id-alcove, dir:<word>, table:<file.json>");
  shadow->add_option("--algorithm", sa.algorithm, "naive, naive_bounded, L, R or partial");
  shadow->add_option("--local-dir", sa.local_dir, "Spherical element a for partial shadows");
  shadow->add_option("--max-folds", sa.max_folds, "Fold bound for the naive enumeration");
  shadow->add_flag("--no-timing", sa.no_timing, "Omit timing fields");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Compare against brute-force oracles, JSONL output");
  verify->add_option("--suite", va.suite, "core, bruhat, braid, bounds, valuations, partial, folding or all");
  verify->add_option("--types", va.types, "Comma-separated type tags");
  verify->add_option("--max-length", va.max_length, "Largest element length");
  verify->add_option("--seed", va.seed, "Seed for the random suites");
  verify->add_option("--pairs", va.pairs, "Random pairs in the partial suite");
  verify->add_option("--galleries", va.galleries, "Random galleries in the folding suite");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Time the algorithms, CSV output");
  bench->add_option("--type", ba.type, "Affine type tag");
  bench->add_option("--lengths", ba.lengths, "Range lo..hi or comma list");
  bench->add_option("--algorithms", ba.algorithms, "Comma list of L, R, naive, naive_bounded");
  bench->add_option("--dir", ba.dir, "Direction as a spherical word, or auto for the largest shadow");
  bench->add_option("--repeats", ba.repeats, "Runs per measurement");

  RenderArgs ra;
  auto* render = app.add_subcommand("render", "Draw regular and full shadows as SVG");
  render->add_option("--type", ra.type, "Rank-2 affine type tag");
  render->add_option("--element", ra.element, "Element given by a word");
  render->add_option("--dir", ra.dir, "Direction as a spherical word");
  render->add_option("--radius", ra.radius, "Draw alcoves up to this length");
  render->add_option("--output,-o", ra.output, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*shadow) return cmd_shadow(sa);
    if (*verify) return cmd_verify(va);
    if (*bench) return cmd_bench(ba);
    if (*render) return cmd_render(ra);
  } catch (const cs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
