#pragma once

// Combinatorial alcove-to-alcove galleries and the folding calculus.
//
// A gallery is stored as its source alcove plus its decorated type. Alcove
// and panel sequences are derived on demand: c_i = c_{i-1} when position i
// carries a hat, c_i = c_{i-1} s_{j_i} otherwise. Folding at i toggles the hat
// at i, so multifoldings are symmetric differences of hat sets.

#include <algorithm>
#include <iterator>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxshadow/coxeter.hpp"
#include "coxshadow/orientation.hpp"

namespace coxshadow {

/// A word with hats on some positions (1-based).
struct DecoratedWord {
  Word letters;
  std::set<int> hats;

  bool undecorated() const { return hats.empty(); }
  std::size_t size() const { return letters.size(); }

  friend bool operator==(const DecoratedWord&, const DecoratedWord&) = default;
};

/// Text form: letters separated by spaces, "^" marks a hat, e.g. "0 1^ 2 1".
inline DecoratedWord parse_decorated(std::string_view text) {
  DecoratedWord w;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    bool hat = token.back() == '^';
    if (hat) token.pop_back();
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
      throw Error(Errc::Parse, "bad decorated word '" + std::string(text) + "'");
    w.letters.push_back(std::stoi(token));
    if (hat) w.hats.insert(static_cast<int>(w.letters.size()));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ' ' || ch == ',') {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  return w;
}

inline std::string decorated_string(const DecoratedWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i > 0) s.push_back(' ');
    s += std::to_string(w.letters[i]);
    if (w.hats.count(static_cast<int>(i + 1))) s.push_back('^');
  }
  return s;
}

inline std::set<int> symmetric_difference(const std::set<int>& a, const std::set<int>& b) {
  std::set<int> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

class Gallery {
 public:
  Gallery(GroupElement start, DecoratedWord word) : start_(std::move(start)), word_(std::move(word)) {
    for (int h : word_.hats) {
      if (h < 1 || h > static_cast<int>(word_.size()))
        throw Error(Errc::PositionOutOfRange, "hat at position " + std::to_string(h));
    }
  }

  const GroupElement& start() const { return start_; }
  const DecoratedWord& dtype() const { return word_; }
  const Word& type() const { return word_.letters; }
  const std::set<int>& folds() const { return word_.hats; }
  /// n, the number of panels.
  std::size_t panel_count() const { return word_.size(); }
  /// n + 1, the number of alcoves.
  std::size_t alcove_count() const { return word_.size() + 1; }

  /// c_0, ..., c_n.
  std::vector<GroupElement> alcoves(const CoxeterDatum& datum) const {
    std::vector<GroupElement> out{start_};
    out.reserve(alcove_count());
    for (std::size_t i = 0; i < word_.size(); ++i) {
      if (word_.hats.count(static_cast<int>(i + 1))) {
        out.push_back(out.back());
      } else {
        out.push_back(out.back() * datum.generator(word_.letters[i]));
      }
    }
    return out;
  }

  /// p_1, ..., p_n; p_i is the panel of type s_{j_i} of c_{i-1}.
  std::vector<Panel> panels(const CoxeterDatum& datum) const {
    auto cs = alcoves(datum);
    std::vector<Panel> out;
    for (std::size_t i = 0; i < word_.size(); ++i) out.push_back({cs[i], word_.letters[i]});
    return out;
  }

  friend bool operator==(const Gallery&, const Gallery&) = default;

 private:
  GroupElement start_;
  DecoratedWord word_;
};

inline Gallery gallery_from(const GroupElement& start, const DecoratedWord& w) { return Gallery(start, w); }

inline Gallery footprint(const Gallery& g) {
  DecoratedWord w;
  for (std::size_t i = 0; i < g.type().size(); ++i) {
    if (!g.folds().count(static_cast<int>(i + 1))) w.letters.push_back(g.type()[i]);
  }
  return Gallery(g.start(), std::move(w));
}

/// start . [type(footprint)].
inline GroupElement end_alcove(const CoxeterDatum& datum, const Gallery& g) {
  return g.start() * datum.element_from_word(footprint(g).type());
}

inline Gallery multifold(const Gallery& g, const std::set<int>& positions) {
  for (int i : positions) {
    if (i < 1 || i > static_cast<int>(g.panel_count()))
      throw Error(Errc::PositionOutOfRange, "fold position " + std::to_string(i));
  }
  return Gallery(g.start(), {g.type(), symmetric_difference(g.folds(), positions)});
}

inline Gallery fold(const Gallery& g, int i) { return multifold(g, {i}); }

/// Every fold's repeated alcove lies on the phi-positive side of its panel.
inline bool is_positively_folded(const CoxeterDatum& datum, const Gallery& g, const Orientation& phi) {
  if (g.folds().empty()) return true;
  auto cs = g.alcoves(datum);
  for (int i : g.folds()) {
    const auto& c = cs[static_cast<std::size_t>(i)];
    if (evaluate(datum, phi, {cs[static_cast<std::size_t>(i - 1)], g.type()[static_cast<std::size_t>(i - 1)]}, c) != 1)
      return false;
  }
  return true;
}

/// x . gamma: start moves to x . start; the decorated type is unchanged.
inline Gallery act_on_gallery(const GroupElement& x, const Gallery& g) { return Gallery(x * g.start(), g.dtype()); }

inline bool is_minimal(const CoxeterDatum& datum, const Gallery& g) {
  return g.folds().empty() && datum.length(datum.element_from_word(g.type())) == static_cast<int>(g.panel_count());
}

}  // namespace coxshadow
