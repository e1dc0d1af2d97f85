#pragma once

// JSON forms of elements, galleries, orientations and shadow results.

#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "coxshadow/coxeter.hpp"
#include "coxshadow/gallery.hpp"
#include "coxshadow/orientation.hpp"
#include "coxshadow/shadow.hpp"

namespace coxshadow {

using Json = nlohmann::ordered_json;

/// x . b0 as reduced fractions.
inline std::vector<std::string> barycenter_strings(const CoxeterDatum& datum, const GroupElement& x) {
  std::vector<std::string> out;
  for (Int v : x.barycenter()) out.push_back(Rational::make(v, datum.scale()).str());
  return out;
}

inline Json element_to_json(const CoxeterDatum& datum, const GroupElement& x, bool with_barycenter = false) {
  Json j;
  j["word"] = datum.reduced_word(x);
  if (with_barycenter) j["barycenter"] = barycenter_strings(datum, x);
  return j;
}

/// Reads {"word": [...]}; a "barycenter" field, if present, must match.
inline GroupElement element_from_json(const CoxeterDatum& datum, const Json& j) {
  if (!j.is_object() || !j.contains("word")) throw Error(Errc::Parse, "element needs a \"word\" field");
  Word w = j.at("word").get<Word>();
  for (Generator s : w) {
    if (!datum.is_generator(s)) throw Error(Errc::Parse, "generator " + std::to_string(s) + " not in " + datum.tag());
  }
  GroupElement x = datum.element_from_word(w);
  if (j.contains("barycenter") && j.at("barycenter").get<std::vector<std::string>>() != barycenter_strings(datum, x))
    throw Error(Errc::Parse, "barycenter does not match the word");
  return x;
}

inline Json gallery_to_json(const CoxeterDatum& datum, const Gallery& g) {
  Json j;
  j["start"] = datum.reduced_word(g.start());
  j["letters"] = g.type();
  j["hats"] = std::vector<int>(g.folds().begin(), g.folds().end());
  return j;
}

inline Gallery gallery_from_json(const CoxeterDatum& datum, const Json& j) {
  Word start = j.value("start", Word{});
  DecoratedWord w;
  w.letters = j.at("letters").get<Word>();
  for (int h : j.value("hats", std::vector<int>{})) w.hats.insert(h);
  return Gallery(datum.element_from_word(start), std::move(w));
}

/// Root index of a coefficient vector, with -1 for a negative root.
inline std::pair<int, int> find_root(const CoxeterDatum& datum, const std::vector<Int>& coeffs) {
  const auto& roots = datum.positive_roots();
  for (std::size_t r = 0; r < roots.size(); ++r) {
    if (roots[r] == coeffs) return {static_cast<int>(r), 1};
    std::vector<Int> neg(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) neg[i] = -coeffs[i];
    if (roots[r] == neg) return {static_cast<int>(r), -1};
  }
  throw Error(Errc::Parse, "not a root of " + datum.tag());
}

/// Table file: {"entries": [{"root": [c_1..c_n], "level": k, "positive": ["+", "-"]}, ...]}.
/// A negative root with level k names the hyperplane (-root, -k) with sides
/// swapped. Repeated hyperplanes must agree.
inline Orientation orientation_from_table_json(const CoxeterDatum& datum, const Json& j) {
  std::map<Hyperplane, SideMask> entries;
  for (const auto& e : j.at("entries")) {
    auto [root, sgn] = find_root(datum, e.at("root").get<std::vector<Int>>());
    Int level = e.value("level", Int{0});
    if (!datum.affine() && level != 0) throw Error(Errc::Parse, "finite types only have level 0");
    SideMask m = kNoSide;
    for (const auto& side : e.at("positive")) {
      const auto text = side.get<std::string>();
      if (text == "+") {
        m = static_cast<SideMask>(m | kPlusSide);
      } else if (text == "-") {
        m = static_cast<SideMask>(m | kMinusSide);
      } else {
        throw Error(Errc::Parse, "side must be \"+\" or \"-\"");
      }
    }
    if (sgn < 0) m = flip_sides(m, -1);
    Hyperplane h{root, sgn * level};
    auto [it, fresh] = entries.emplace(h, m);
    if (!fresh && it->second != m)
      throw Error(Errc::NotWallConsistent, "conflicting entries for one hyperplane");
  }
  return Orientation::custom_table(std::move(entries));
}

inline Json orientation_table_to_json(const CoxeterDatum& datum, const Orientation& phi) {
  Json entries = Json::array();
  for (const auto& [h, m] : phi.entries()) {
    Json sides = Json::array();
    if (m & kPlusSide) sides.push_back("+");
    if (m & kMinusSide) sides.push_back("-");
    entries.push_back({{"root", datum.positive_roots()[static_cast<std::size_t>(h.root)]},
                       {"level", h.level},
                       {"positive", sides}});
  }
  return {{"type", datum.tag()}, {"entries", entries}};
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Parse, path + ": " + e.what());
  }
}

/// Tags: "+", "-", "id-alcove", "dir:<word>", "table:<file.json>".
inline Orientation parse_orientation(const CoxeterDatum& datum, const std::string& tag) {
  if (tag == "+") return Orientation::trivial_positive();
  if (tag == "-") return Orientation::trivial_negative();
  if (tag == "id-alcove") return Orientation::alcove(datum.identity());
  if (tag.rfind("dir:", 0) == 0) {
    if (!datum.affine()) throw Error(Errc::NotAffine, "Weyl chamber orientations need an affine type");
    return Orientation::weyl_chamber(direction_from_word(datum, parse_word(tag.substr(4))));
  }
  if (tag.rfind("table:", 0) == 0) return orientation_from_table_json(datum, read_json_file(tag.substr(6)));
  throw Error(Errc::Parse, "unknown orientation tag '" + tag + "'");
}

inline Json word_list(const CoxeterDatum& datum, const std::vector<GroupElement>& elems) {
  Json out = Json::array();
  for (const auto& x : elems) out.push_back(datum.reduced_word(x));
  return out;
}

/// {"request", "elements", "count", "fold_histogram", "timing_ms"}.
inline Json shadow_to_json(const CoxeterDatum& datum, const Json& request, const ShadowSet& s,
                           bool with_timing = true) {
  Json j;
  j["request"] = request;
  j["elements"] = word_list(datum, s.elements);
  j["count"] = s.elements.size();
  Json hist = Json::object();
  for (auto [k, v] : s.fold_histogram) hist[std::to_string(k)] = v;
  j["fold_histogram"] = hist;
  j["operations"] = s.operations;
  if (with_timing) j["timing_ms"] = s.timing_ms;
  return j;
}

}  // namespace coxshadow
