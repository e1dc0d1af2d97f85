#pragma once

// Finite and affine crystallographic Coxeter systems.
//
// Points of the ambient space are written in the basis of fundamental
// coweights, i.e. a point q has coordinates q_j = <alpha_j, q>. In this basis
// every element of the (affine) Weyl group acts by an integral affine map, and
// a root beta = sum c_j alpha_j pairs with q as the plain dot product c . q.
// All points handled by the core are scaled by a common denominator D (see
// CoxeterDatum::scale()) so that barycenters of alcoves and of their faces are
// integer vectors as well.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "coxshadow/arith.hpp"
#include "coxshadow/error.hpp"

namespace coxshadow {

using Generator = int;
using Word = std::vector<Generator>;

enum class Side { Left, Right };

/// An element of W, stored as the integral affine map it induces on scaled
/// coweight coordinates together with its inverse and the image of the base
/// point. The image of the base point identifies the alcove labelled by the
/// element, so equality and hashing only look at it.
class GroupElement {
 public:
  GroupElement() = default;

  static GroupElement from_maps(int rank, std::vector<Int> linear, std::vector<Int> translation,
                                std::vector<Int> inv_linear, std::vector<Int> inv_translation,
                                std::span<const Int> base_point) {
    GroupElement g;
    g.n_ = rank;
    const std::size_t n = static_cast<std::size_t>(rank);
    g.data_.resize(2 * n * n + 3 * n);
    std::copy(linear.begin(), linear.end(), g.data_.begin());
    std::copy(translation.begin(), translation.end(), g.data_.begin() + static_cast<long>(n * n));
    std::copy(inv_linear.begin(), inv_linear.end(), g.data_.begin() + static_cast<long>(n * n + n));
    std::copy(inv_translation.begin(), inv_translation.end(),
              g.data_.begin() + static_cast<long>(2 * n * n + n));
    g.apply_into(base_point, g.data_.data() + 2 * n * n + 2 * n);
    return g;
  }

  int rank() const { return n_; }

  std::span<const Int> linear() const { return {data_.data(), nn()}; }
  std::span<const Int> translation() const { return {data_.data() + nn(), sz()}; }
  std::span<const Int> inverse_linear() const { return {data_.data() + nn() + sz(), nn()}; }
  std::span<const Int> inverse_translation() const { return {data_.data() + 2 * nn() + sz(), sz()}; }
  /// Scaled image of the base point b0; lies in the open alcove of this element.
  std::span<const Int> barycenter() const { return {data_.data() + 2 * nn() + 2 * sz(), sz()}; }

  bool has_zero_translation() const {
    auto t = translation();
    return std::all_of(t.begin(), t.end(), [](Int v) { return v == 0; });
  }

  /// Applies the affine map to a scaled point.
  std::vector<Int> apply(std::span<const Int> point) const {
    std::vector<Int> out(sz());
    apply_into(point, out.data());
    return out;
  }

  /// Applies only the linear part (used for directions and roots-as-vectors).
  std::vector<Int> apply_linear(std::span<const Int> v) const {
    std::vector<Int> out(sz(), 0);
    auto m = linear();
    for (std::size_t i = 0; i < sz(); ++i) out[i] = dot(m.subspan(i * sz(), sz()), v);
    return out;
  }

  GroupElement inverse() const {
    GroupElement g;
    g.n_ = n_;
    g.data_.resize(data_.size());
    const std::size_t n = sz();
    std::copy(data_.begin() + static_cast<long>(nn() + n), data_.begin() + static_cast<long>(2 * nn() + 2 * n),
              g.data_.begin());
    std::copy(data_.begin(), data_.begin() + static_cast<long>(nn() + n),
              g.data_.begin() + static_cast<long>(nn() + n));
    // b0 = M^{-1}(X - T), so x^{-1} b0 = M^{-1} b0 + T^{-1}.
    std::vector<Int> diff(n);
    auto x = barycenter();
    auto t = translation();
    for (std::size_t i = 0; i < n; ++i) diff[i] = x[i] - t[i];
    std::vector<Int> base(n);
    auto minv = inverse_linear();
    for (std::size_t i = 0; i < n; ++i) base[i] = dot(minv.subspan(i * n, n), diff);
    g.apply_into(base, g.data_.data() + 2 * nn() + 2 * n);
    return g;
  }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    GroupElement g;
    g.n_ = a.n_;
    const std::size_t n = a.sz();
    g.data_.assign(a.data_.size(), 0);
    Int* out = g.data_.data();
    // forward: (Ma Mb, Ma Tb + Ta)
    mat_mul(a.linear(), b.linear(), n, out);
    mat_vec_add(a.linear(), b.translation(), a.translation(), n, out + n * n);
    // inverse: (Mb^-1 Ma^-1, Mb^-1 Ta^-1 + Tb^-1)
    mat_mul(b.inverse_linear(), a.inverse_linear(), n, out + n * n + n);
    mat_vec_add(b.inverse_linear(), a.inverse_translation(), b.inverse_translation(), n,
                out + 2 * n * n + n);
    mat_vec_add(a.linear(), b.barycenter(), a.translation(), n, out + 2 * n * n + 2 * n);
    return g;
  }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    auto x = a.barycenter();
    auto y = b.barycenter();
    return a.n_ == b.n_ && std::equal(x.begin(), x.end(), y.begin(), y.end());
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (Int v : barycenter()) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  std::size_t sz() const { return static_cast<std::size_t>(n_); }
  std::size_t nn() const { return sz() * sz(); }

  void apply_into(std::span<const Int> p, Int* out) const {
    mat_vec_add(linear(), p, translation(), sz(), out);
  }

  static void mat_mul(std::span<const Int> a, std::span<const Int> b, std::size_t n, Int* out) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Int acc = 0;
        for (std::size_t k = 0; k < n; ++k) acc = checked_add(acc, checked_mul(a[i * n + k], b[k * n + j]));
        out[i * n + j] = acc;
      }
    }
  }

  static void mat_vec_add(std::span<const Int> m, std::span<const Int> v, std::span<const Int> t,
                          std::size_t n, Int* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = checked_add(dot(m.subspan(i * n, n), v), t[i]);
  }

  int n_ = 0;
  std::vector<Int> data_;
};

struct ElementHash {
  std::size_t operator()(const GroupElement& g) const { return g.hash(); }
};

using ElementSet = std::unordered_set<GroupElement, ElementHash>;

/// H_{beta,k} = {q : <beta,q> = k}; `root` indexes the positive-root table.
struct Hyperplane {
  int root = 0;
  Int level = 0;

  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

/// The panel of type `type` of `alcove`.
struct Panel {
  GroupElement alcove;
  Generator type = 0;
};

/// Parses "012", "0 1 2" or "0,1,2". Compact form is one digit per letter.
inline Word parse_word(std::string_view text) {
  Word w;
  bool separated = text.find_first_of(" ,") != std::string_view::npos;
  if (!separated) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw Error(Errc::Parse, "bad word '" + std::string(text) + "'");
      w.push_back(ch - '0');
    }
    return w;
  }
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      w.push_back(std::stoi(token));
    } catch (const std::logic_error&) {
      throw Error(Errc::Parse, "bad word '" + std::string(text) + "'");
    }
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

inline std::string word_string(const Word& w) {
  std::string s;
  bool wide = std::any_of(w.begin(), w.end(), [](int g) { return g > 9; });
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (wide && i > 0) s.push_back(' ');
    s += std::to_string(w[i]);
  }
  return s;
}

class CoxeterDatum {
 public:
  /// Builds the root datum of the given family. Generators are 1..rank for
  /// the finite group; the affine group adds generator 0, the reflection in
  /// H_{theta,1}.
  static CoxeterDatum build(char family, int rank, bool affine) {
    CoxeterDatum d;
    d.family_ = family;
    d.rank_ = rank;
    d.affine_ = affine;
    d.init_form();
    d.init_roots();
    d.init_geometry();
    d.init_generators();
    d.init_coxeter_matrix();
    return d;
  }

  /// "A2", "A2~", "G2~", "E8", ...
  static CoxeterDatum parse(std::string_view tag) {
    if (tag.size() < 2) throw Error(Errc::UnsupportedType, "bad type tag '" + std::string(tag) + "'");
    bool affine = false;
    std::string_view body = tag;
    if (body.back() == '~') {
      affine = true;
      body.remove_suffix(1);
    }
    char family = body.front();
    if (family >= 'a' && family <= 'z') family = static_cast<char>(family - 'a' + 'A');
    int rank = 0;
    for (char ch : body.substr(1)) {
      if (ch < '0' || ch > '9') throw Error(Errc::UnsupportedType, "bad type tag '" + std::string(tag) + "'");
      rank = rank * 10 + (ch - '0');
    }
    return build(family, rank, affine);
  }

  std::string tag() const { return std::string(1, family_) + std::to_string(rank_) + (affine_ ? "~" : ""); }
  char family() const { return family_; }
  int rank() const { return rank_; }
  bool affine() const { return affine_; }

  /// Generator indices in ascending order.
  const std::vector<Generator>& generators() const { return generators_; }
  std::vector<Generator> spherical_generators() const {
    std::vector<Generator> g;
    for (int i = 1; i <= rank_; ++i) g.push_back(i);
    return g;
  }
  bool is_generator(Generator s) const { return s >= (affine_ ? 0 : 1) && s <= rank_; }

  /// m_st; 0 encodes infinity (only in type A1~).
  int coxeter_m(Generator s, Generator t) const { return coxeter_[idx(s)][idx(t)]; }
  const std::vector<std::vector<int>>& coxeter_matrix() const { return coxeter_; }

  /// Cartan matrix entry <alpha_i^vee, alpha_j> for spherical indices 1..rank.
  Int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }

  /// Positive roots as coefficient vectors in the simple roots; simple roots first.
  const std::vector<std::vector<Int>>& positive_roots() const { return roots_; }
  /// Matching coroots as coefficient vectors in the simple coroots.
  const std::vector<std::vector<Int>>& positive_coroots() const { return coroots_; }
  int highest_root() const { return highest_; }
  /// ell(w0) = |Phi^+|.
  int longest_length() const { return static_cast<int>(roots_.size()); }

  /// Common denominator of all scaled points.
  Int scale() const { return scale_; }
  /// Scaled barycenter b0 of the fundamental alcove.
  std::span<const Int> base_point() const { return base_point_; }

  /// Scaled interior point of the face of the fundamental alcove lying on the
  /// walls of the generators in `mask` (bit s set <=> s in S').
  std::vector<Int> face_point(std::uint32_t mask) const {
    std::vector<Int> p(static_cast<std::size_t>(rank_), 0);
    std::vector<int> vertices;
    for (Generator s : generators_) {
      if (!(mask & (1u << s))) vertices.push_back(s);
    }
    if (vertices.empty()) {
      if (affine_) throw Error(Errc::UnsupportedType, "empty face of an affine alcove");
      return p;
    }
    // v_0 = 0, v_j = omega_j^vee / theta_j.
    const auto& theta = roots_[static_cast<std::size_t>(highest_)];
    Int count = static_cast<Int>(vertices.size());
    for (int v : vertices) {
      if (v == 0) continue;
      p[static_cast<std::size_t>(v - 1)] = scale_ / (count * theta[static_cast<std::size_t>(v - 1)]);
    }
    return p;
  }

  GroupElement identity() const { return identity_; }
  const GroupElement& generator(Generator s) const {
    if (!is_generator(s)) throw Error(Errc::UnsupportedType, "no generator " + std::to_string(s) + " in " + tag());
    return gens_[idx(s)];
  }

  GroupElement element_from_word(std::span<const Generator> word) const {
    GroupElement x = identity_;
    for (Generator s : word) x = x * generator(s);
    return x;
  }

  GroupElement multiply(const GroupElement& x, const GroupElement& y) const { return x * y; }

  /// Number of hyperplanes separating the alcove of x from the base alcove.
  int length(const GroupElement& x) const {
    auto X = x.barycenter();
    Int total = 0;
    for (const auto& beta : roots_) total += crossings(dot(beta, X));
    return static_cast<int>(total);
  }

  bool is_descent(const GroupElement& x, Generator s, Side side) const {
    const GroupElement y = side == Side::Right ? x * generator(s) : generator(s) * x;
    return length(y) < length(x);
  }

  std::vector<Generator> descents(const GroupElement& x, Side side) const {
    std::vector<Generator> out;
    for (Generator s : generators_) {
      if (is_descent(x, s, side)) out.push_back(s);
    }
    return out;
  }

  /// Reduced word obtained by repeatedly stripping the smallest right descent.
  Word reduced_word(const GroupElement& x) const {
    Word rev;
    GroupElement cur = x;
    int len = length(cur);
    while (len > 0) {
      bool found = false;
      for (Generator s : generators_) {
        GroupElement next = cur * generator(s);
        int l = length(next);
        if (l < len) {
          rev.push_back(s);
          cur = std::move(next);
          len = l;
          found = true;
          break;
        }
      }
      if (!found) throw Error(Errc::Exceeded, "no descent found for element of positive length");
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
  }

  std::vector<Hyperplane> separating_hyperplanes(const GroupElement& x) const {
    std::vector<Hyperplane> out;
    auto X = x.barycenter();
    for (std::size_t r = 0; r < roots_.size(); ++r) {
      Int p = dot(roots_[r], X);
      if (p > 0) {
        if (!affine_) continue;
        for (Int k = 1; k <= p / scale_; ++k) out.push_back({static_cast<int>(r), k});
      } else {
        Int deepest = affine_ ? -((-p) / scale_) : 0;
        for (Int k = 0; k >= deepest; --k) out.push_back({static_cast<int>(r), k});
      }
    }
    return out;
  }

  /// sign(<alpha, q> - k) for a scaled point q.
  int side_of(std::span<const Int> scaled_point, const Hyperplane& h) const {
    return sign(dot(roots_[static_cast<std::size_t>(h.root)], scaled_point) - checked_mul(h.level, scale_));
  }

  /// Root pairing <alpha, v> for an unscaled vector (directions).
  Int pair(int root, std::span<const Int> v) const { return dot(roots_[static_cast<std::size_t>(root)], v); }

  /// Linear part of x as an element of the finite Weyl group.
  GroupElement spherical_projection(const GroupElement& x) const {
    if (!affine_) throw Error(Errc::NotAffine, "spherical projection needs an affine datum");
    return linear_part(x);
  }

  /// Linear part of x with zero translation (works for finite data too).
  GroupElement linear_part(const GroupElement& x) const {
    auto m = x.linear();
    auto mi = x.inverse_linear();
    std::vector<Int> zero(static_cast<std::size_t>(rank_), 0);
    return GroupElement::from_maps(rank_, {m.begin(), m.end()}, zero, {mi.begin(), mi.end()}, zero, base_point_);
  }

  /// Wall of the fundamental alcove of type s.
  Hyperplane wall(Generator s) const {
    if (!is_generator(s)) throw Error(Errc::UnsupportedType, "no generator " + std::to_string(s));
    return s == 0 ? Hyperplane{highest_, 1} : Hyperplane{s - 1, 0};
  }

  /// Image of h under g, and the factor f with side_of(q, g h) = f * side_of(g^{-1} q, h).
  std::pair<Hyperplane, int> transform(const GroupElement& g, const Hyperplane& h) const {
    const std::size_t n = static_cast<std::size_t>(rank_);
    const auto& beta = roots_[static_cast<std::size_t>(h.root)];
    auto minv = g.inverse_linear();
    std::vector<Int> gamma(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      Int acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc = checked_add(acc, checked_mul(beta[j], minv[j * n + i]));
      gamma[i] = acc;
    }
    Int numer = checked_mul(h.level, scale_) - dot(beta, g.inverse_translation());
    if (numer % scale_ != 0) throw Error(Errc::ArithmeticOverflow, "hyperplane image off the lattice");
    Int level = numer / scale_;
    int factor = 1;
    if (std::all_of(gamma.begin(), gamma.end(), [](Int v) { return v <= 0; })) {
      for (auto& v : gamma) v = -v;
      level = -level;
      factor = -1;
    }
    auto it = root_index_.find(gamma);
    if (it == root_index_.end()) throw Error(Errc::ArithmeticOverflow, "image of a root is not a root");
    return {{it->second, level}, factor};
  }

  Hyperplane panel_hyperplane(const Panel& p) const { return transform(p.alcove, wall(p.type)).first; }

  /// Affine reflection across h, built directly from q -> q - (<beta,q> - k) beta^vee.
  GroupElement reflection(const Hyperplane& h) const {
    const std::size_t n = static_cast<std::size_t>(rank_);
    const auto& c = roots_[static_cast<std::size_t>(h.root)];
    const auto& u = coroot_points_[static_cast<std::size_t>(h.root)];
    std::vector<Int> m(n * n, 0), t(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[i * n + j] = (i == j ? 1 : 0) - checked_mul(u[i], c[j]);
      t[i] = checked_mul(checked_mul(h.level, scale_), u[i]);
    }
    return GroupElement::from_maps(rank_, m, t, m, t, base_point_);
  }

  /// Elements of the finite Weyl group, sorted by (length, reduced word).
  std::vector<GroupElement> spherical_elements() const {
    std::vector<GroupElement> out{identity_};
    ElementSet seen{identity_};
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (Generator s : spherical_generators()) {
        GroupElement y = out[i] * gens_[idx(s)];
        if (seen.insert(y).second) out.push_back(y);
      }
    }
    sort_canonical(out);
    return out;
  }

  /// Sorts by (length, lexicographic reduced word).
  void sort_canonical(std::vector<GroupElement>& elems) const {
    std::vector<std::pair<std::pair<int, Word>, std::size_t>> keys;
    keys.reserve(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      Word w = reduced_word(elems[i]);
      keys.push_back({{static_cast<int>(w.size()), std::move(w)}, i});
    }
    std::sort(keys.begin(), keys.end());
    std::vector<GroupElement> sorted;
    sorted.reserve(elems.size());
    for (auto& k : keys) sorted.push_back(std::move(elems[k.second]));
    elems = std::move(sorted);
  }

  /// Euclidean Gram matrix of the fundamental coweights (row-major). Only the
  /// renderer uses it, to turn exact coordinates into plane coordinates.
  std::vector<double> coweight_gram() const {
    // Coroots have coweight coordinates A_ij, so omega^vee = A^{-1} alpha^vee.
    const std::size_t n = static_cast<std::size_t>(rank_);
    std::vector<double> g(n * n), cinv(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        g[i * n + j] = 4.0 * static_cast<double>(form_[i][j]) /
                       (static_cast<double>(form_[i][i]) * static_cast<double>(form_[j][j]));
    std::vector<double> u(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) u[i * n + j] = static_cast<double>(cartan_[i][j]);
    invert(u, cinv, n);
    std::vector<double> tmp(n * n, 0.0), out(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) tmp[i * n + j] += cinv[i * n + k] * g[k * n + j];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) out[i * n + j] += tmp[i * n + k] * cinv[j * n + k];
    return out;
  }

  /// Symmetric form B_ij = (alpha_i, alpha_j), integral normalisation.
  Int form(int i, int j) const { return form_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }

 private:
  std::size_t idx(Generator s) const { return static_cast<std::size_t>(s); }

  Int crossings(Int p) const {
    if (!affine_) return p < 0 ? 1 : 0;
    return p > 0 ? p / scale_ : (-p) / scale_ + 1;
  }

  static void invert(std::vector<double> a, std::vector<double>& inv, std::size_t n) {
    inv.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      for (std::size_t r = c + 1; r < n; ++r)
        if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a[c * n + k], a[piv * n + k]);
        std::swap(inv[c * n + k], inv[piv * n + k]);
      }
      double d = a[c * n + c];
      for (std::size_t k = 0; k < n; ++k) {
        a[c * n + k] /= d;
        inv[c * n + k] /= d;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c) continue;
        double f = a[r * n + c];
        for (std::size_t k = 0; k < n; ++k) {
          a[r * n + k] -= f * a[c * n + k];
          inv[r * n + k] -= f * inv[c * n + k];
        }
      }
    }
  }

  void init_form() {
    const int n = rank_;
    auto bad = [&] {
      return Error(Errc::UnsupportedType,
                   "unsupported type " + std::string(1, family_) + std::to_string(n) + (affine_ ? "~" : ""));
    };
    if (n < 1 || n > 24) throw bad();
    form_.assign(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), 0));
    auto set = [&](int i, int j, Int v) {
      form_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
      form_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = v;
    };
    auto chain = [&](int from, int to, Int len, Int link) {
      for (int i = from; i <= to; ++i) set(i, i, len);
      for (int i = from; i < to; ++i) set(i, i + 1, link);
    };
    switch (family_) {
      case 'A':
        chain(1, n, 2, -1);
        break;
      case 'B':
        if (n < 2) throw bad();
        chain(1, n - 1, 2, -1);
        set(n, n, 1);
        set(n - 1, n, -1);
        break;
      case 'C':
        if (n < 2) throw bad();
        chain(1, n - 1, 2, -1);
        set(n, n, 4);
        set(n - 1, n, -2);
        break;
      case 'D':
        if (n < 4) throw bad();
        chain(1, n - 1, 2, -1);
        set(n, n, 2);
        set(n - 2, n, -1);
        break;
      case 'E':
        if (n < 6 || n > 8) throw bad();
        for (int i = 1; i <= n; ++i) set(i, i, 2);
        set(1, 3, -1);
        set(2, 4, -1);
        for (int i = 3; i < n; ++i) set(i, i + 1, -1);
        break;
      case 'F':
        if (n != 4) throw bad();
        set(1, 1, 4);
        set(2, 2, 4);
        set(3, 3, 2);
        set(4, 4, 2);
        set(1, 2, -2);
        set(2, 3, -2);
        set(3, 4, -1);
        break;
      case 'G':
        if (n != 2) throw bad();
        set(1, 1, 2);
        set(2, 2, 6);
        set(1, 2, -3);
        break;
      default:
        throw bad();
    }
    cartan_.assign(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), 0));
    for (std::size_t i = 0; i < form_.size(); ++i)
      for (std::size_t j = 0; j < form_.size(); ++j) cartan_[i][j] = 2 * form_[i][j] / form_[i][i];
  }

  Int norm2(const std::vector<Int>& c) const {
    Int acc = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) acc += c[i] * c[j] * form_[i][j];
    return acc;
  }

  void init_roots() {
    const std::size_t n = static_cast<std::size_t>(rank_);
    std::vector<std::vector<Int>> roots;
    std::map<std::vector<Int>, int> seen;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Int> e(n, 0);
      e[i] = 1;
      seen[e] = 0;
      roots.push_back(e);
    }
    for (std::size_t k = 0; k < roots.size(); ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        // <beta, alpha_i^vee> = sum_j c_j <alpha_i^vee, alpha_j>
        Int pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += roots[k][j] * cartan_[i][j];
        std::vector<Int> next = roots[k];
        next[i] -= pairing;
        if (std::any_of(next.begin(), next.end(), [](Int v) { return v < 0; })) continue;
        if (seen.emplace(next, 0).second) roots.push_back(next);
      }
    }
    auto height = [](const std::vector<Int>& r) { return std::accumulate(r.begin(), r.end(), Int{0}); };
    std::stable_sort(roots.begin(), roots.end(), [&](const auto& a, const auto& b) {
      Int ha = height(a), hb = height(b);
      if (ha != hb) return ha < hb;
      return a > b;  // alpha_1 before alpha_2 at height 1
    });
    roots_ = roots;
    highest_ = static_cast<int>(roots_.size()) - 1;
    for (std::size_t r = 0; r < roots_.size(); ++r) root_index_[roots_[r]] = static_cast<int>(r);
    coroots_.clear();
    coroot_points_.clear();
    for (const auto& beta : roots_) {
      Int nb = norm2(beta);
      std::vector<Int> d(n);
      for (std::size_t j = 0; j < n; ++j) {
        Int num = beta[j] * form_[j][j];
        if (num % nb != 0) throw Error(Errc::UnsupportedType, "non-integral coroot");
        d[j] = num / nb;
      }
      std::vector<Int> u(n, 0);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) u[k] += d[j] * cartan_[j][k];
      coroots_.push_back(d);
      coroot_points_.push_back(u);
    }
  }

  void init_geometry() {
    const auto& theta = roots_[static_cast<std::size_t>(highest_)];
    // Face barycenters have denominators k * theta_j with k <= rank + 1.
    Int l = 1;
    for (Int k = 1; k <= rank_ + 1; ++k)
      for (Int c : theta) l = std::lcm(l, k * c);
    scale_ = l;
    base_point_.assign(static_cast<std::size_t>(rank_), 0);
    for (std::size_t j = 0; j < base_point_.size(); ++j) base_point_[j] = scale_ / ((rank_ + 1) * theta[j]);
    std::vector<Int> id(static_cast<std::size_t>(rank_ * rank_), 0), zero(static_cast<std::size_t>(rank_), 0);
    for (int i = 0; i < rank_; ++i) id[static_cast<std::size_t>(i * rank_ + i)] = 1;
    identity_ = GroupElement::from_maps(rank_, id, zero, id, zero, base_point_);
  }

  void init_generators() {
    generators_.clear();
    if (affine_) generators_.push_back(0);
    for (int i = 1; i <= rank_; ++i) generators_.push_back(i);
    gens_.assign(static_cast<std::size_t>(rank_ + 1), identity_);
    for (Generator s : generators_) gens_[idx(s)] = reflection(wall(s));
  }

  void init_coxeter_matrix() {
    const std::size_t m = static_cast<std::size_t>(rank_ + 1);
    coxeter_.assign(m, std::vector<int>(m, 2));
    // <alpha_i^vee, alpha_j> products on the extended diagram; alpha_0 = -theta (+delta).
    const auto& theta = roots_[static_cast<std::size_t>(highest_)];
    const auto& theta_co = coroots_[static_cast<std::size_t>(highest_)];
    auto a = [&](std::size_t i, std::size_t j) -> Int {
      if (i > 0 && j > 0) return cartan_[i - 1][j - 1];
      if (i == 0 && j == 0) return 2;
      if (i == 0) {  // <theta^vee, alpha_j> negated
        Int acc = 0;
        for (std::size_t k = 0; k < theta_co.size(); ++k) acc += theta_co[k] * cartan_[k][j - 1];
        return -acc;
      }
      Int acc = 0;  // <alpha_i^vee, theta> negated
      for (std::size_t k = 0; k < theta.size(); ++k) acc += theta[k] * cartan_[i - 1][k];
      return -acc;
    };
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j) {
          coxeter_[i][j] = 1;
          continue;
        }
        switch (a(i, j) * a(j, i)) {
          case 0: coxeter_[i][j] = 2; break;
          case 1: coxeter_[i][j] = 3; break;
          case 2: coxeter_[i][j] = 4; break;
          case 3: coxeter_[i][j] = 6; break;
          default: coxeter_[i][j] = 0; break;
        }
      }
    }
  }

  char family_ = 'A';
  int rank_ = 0;
  bool affine_ = false;
  std::vector<std::vector<Int>> form_;
  std::vector<std::vector<Int>> cartan_;
  std::vector<std::vector<Int>> roots_;
  std::vector<std::vector<Int>> coroots_;
  std::vector<std::vector<Int>> coroot_points_;
  std::map<std::vector<Int>, int> root_index_;
  int highest_ = 0;
  Int scale_ = 1;
  std::vector<Int> base_point_;
  GroupElement identity_;
  std::vector<Generator> generators_;
  std::vector<GroupElement> gens_;
  std::vector<std::vector<int>> coxeter_;
};

/// Reflection length by breadth-first search over products of reflections.
///
/// The search uses the reflections whose hyperplanes meet the region of
/// alcoves of length <= radius, and only keeps intermediate products inside
/// the region of length <= 2 * radius. Every distance it reports is witnessed
/// by an explicit factorisation, so it never undercounts.
class ReflectionLengthTable {
 public:
  ReflectionLengthTable(const CoxeterDatum& datum, int radius, int cap) : cap_(cap) {
    std::vector<GroupElement> reflections;
    const int nroots = static_cast<int>(datum.positive_roots().size());
    const Int span = datum.affine() ? radius + 1 : 0;
    for (int r = 0; r < nroots; ++r)
      for (Int k = -span; k <= span; ++k) reflections.push_back(datum.reflection({r, k}));
    dist_.emplace(datum.identity(), 0);
    std::vector<GroupElement> frontier{datum.identity()};
    for (int d = 1; d <= cap && !frontier.empty(); ++d) {
      std::vector<GroupElement> next;
      for (const auto& g : frontier) {
        for (const auto& r : reflections) {
          GroupElement h = g * r;
          if (datum.affine() && datum.length(h) > 2 * radius) continue;
          if (dist_.emplace(h, d).second) next.push_back(std::move(h));
        }
      }
      frontier = std::move(next);
    }
  }

  /// nullopt when x needs more than `cap` reflections (within the region).
  std::optional<int> lookup(const GroupElement& x) const {
    auto it = dist_.find(x);
    if (it == dist_.end()) return std::nullopt;
    return it->second;
  }

  int cap() const { return cap_; }
  std::size_t size() const { return dist_.size(); }

 private:
  int cap_;
  std::unordered_map<GroupElement, int, ElementHash> dist_;
};

/// ell_R(x), or nullopt ("Exceeded") above cap. The search region is doubled
/// until the answer stabilises.
inline std::optional<int> reflection_length(const CoxeterDatum& datum, const GroupElement& x, int cap) {
  if (cap < 0) throw Error(Errc::Exceeded, "negative cap");
  if (!datum.affine()) return ReflectionLengthTable(datum, 0, cap).lookup(x);
  int radius = datum.length(x) + 2;
  std::optional<int> prev = ReflectionLengthTable(datum, radius, cap).lookup(x);
  for (int round = 0; round < 3; ++round) {
    radius *= 2;
    std::optional<int> cur = ReflectionLengthTable(datum, radius, cap).lookup(x);
    if (cur == prev) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace coxshadow
