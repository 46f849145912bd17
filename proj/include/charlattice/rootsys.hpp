#pragma once

// Root systems of the simple Cartan types in fixed ambient realizations,
// weights in the fundamental-weight basis, Weyl orbits and diagram
// automorphisms.
//
// Realizations (e_k the standard basis of the ambient space):
//   A_n  sum-zero hyperplane of Q^{n+1}, a_i = e_i - e_{i+1}
//   B_n  Q^n, a_i = e_i - e_{i+1}, a_n = e_n
//   C_n  Q^n, a_i = e_i - e_{i+1}, a_n = 2 e_n
//   D_n  Q^n, a_i = e_i - e_{i+1}, a_n = e_{n-1} + e_n
//   E_n  Q^8, first n simple roots of the even E8 lattice
//   F4   Q^4,  G2  sum-zero hyperplane of Q^3
// Node numbering is Bourbaki's throughout.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <queue>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "charlattice/error.hpp"
#include "charlattice/linalg.hpp"

namespace charlattice {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple Cartan type. Only valid (family, rank) pairs can be constructed.
class SimpleType {
 public:
  SimpleType(Family family, int rank) : family_(family), rank_(rank) {
    if (!valid(family, rank))
      throw InvalidTypeError("invalid Cartan type " + std::string(1, char(family)) +
                             std::to_string(rank));
  }

  static bool valid(Family f, int n) {
    switch (f) {
      case Family::A: return n >= 1;
      case Family::B: return n >= 2;
      case Family::C: return n >= 3;
      case Family::D: return n >= 4;
      case Family::E: return n >= 6 && n <= 8;
      case Family::F: return n == 4;
      case Family::G: return n == 2;
    }
    return false;
  }

  /// Parses names like "A2", "e7", "G2".
  static SimpleType parse(const std::string& s) {
    if (s.size() < 2) throw ParseError("bad simple type '" + s + "'");
    char f = char(std::toupper(static_cast<unsigned char>(s[0])));
    if (std::string("ABCDEFG").find(f) == std::string::npos)
      throw ParseError("bad simple type family in '" + s + "'");
    int n = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw ParseError("bad simple type rank in '" + s + "'");
      n = n * 10 + (s[i] - '0');
      if (n > 100000) throw ParseError("rank too large in '" + s + "'");
    }
    return SimpleType(Family(f), n);
  }

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, char(family_)) + std::to_string(rank_); }
  bool simply_laced() const {
    return family_ == Family::A || family_ == Family::D || family_ == Family::E;
  }

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
  friend std::ostream& operator<<(std::ostream& os, const SimpleType& t) { return os << t.name(); }

 private:
  Family family_;
  int rank_;
};

/// Integer coordinates in a fundamental-weight basis.
struct Weight {
  IntVector coords;

  Weight() = default;
  explicit Weight(IntVector c) : coords(std::move(c)) {}
  Weight(std::initializer_list<int> c) : coords(c) {}

  static Weight zero(std::size_t n) { return Weight(IntVector(n, 0)); }

  std::size_t size() const { return coords.size(); }
  int operator[](std::size_t i) const { return coords[i]; }
  int& operator[](std::size_t i) { return coords[i]; }

  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
  }
  bool is_dominant() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
  }

  Weight operator-() const {
    Weight r = *this;
    for (int& c : r.coords) c = -c;
    return r;
  }
  friend Weight operator+(Weight a, const Weight& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("weight sum: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a.coords[i] += b.coords[i];
    return a;
  }
  friend Weight operator-(Weight a, const Weight& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("weight difference: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a.coords[i] -= b.coords[i];
    return a;
  }
  friend Weight operator*(int k, Weight a) {
    for (int& c : a.coords) c *= k;
    return a;
  }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Weight& w) {
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? ", " : "") << w.coords[i];
    return os << ')';
  }
};

inline std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int c : w.coords) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(c));
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

/// A root system of a simple type.
///
/// Positive roots are stored twice: in simple-root coordinates and in
/// fundamental-weight coordinates. Ambient vectors are kept only for the
/// simple roots and the fundamental weights.
class RootSystem {
 public:
  explicit RootSystem(SimpleType t) : type_(t) { build(); }

  const SimpleType& type() const { return type_; }
  std::size_t rank() const { return std::size_t(type_.rank()); }
  std::size_t ambient_dim() const { return ambient_dim_; }

  /// cartan()(i, j) = <a_i, a_j^vee> = 2 (a_i, a_j) / (a_j, a_j).
  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<RatVector>& simple_roots() const { return simple_roots_; }
  const std::vector<RatVector>& fundamental_weights() const { return fundamental_weights_; }

  /// Positive roots in simple-root coordinates.
  const std::vector<IntVector>& positive_roots() const { return positive_roots_; }
  /// The same roots in fundamental-weight coordinates.
  const std::vector<Weight>& positive_root_weights() const { return positive_root_weights_; }
  std::size_t num_roots() const { return 2 * positive_roots_.size(); }

  /// Simple-root coordinates of the highest root.
  const IntVector& highest_root() const { return highest_root_; }

  /// (a_i, a_i) / (short root, short root), in {1, 2, 3}.
  const IntVector& length_ratios() const { return length_ratio_; }
  /// Squared ambient length of a short simple root.
  const Rational& short_norm2() const { return short_norm2_; }

  /// Symmetrized Cartan matrix S(i, j) = cartan(i, j) * length_ratio(j);
  /// (a_i, a_j) = S(i, j) * short_norm2 / 2.
  int sym(std::size_t i, std::size_t j) const { return cartan_(i, j) * length_ratio_[j]; }

  /// Scaled pairing (x, y) * 2 / short_norm2 of two root-coordinate vectors.
  std::int64_t root_pairing(const IntVector& x, const IntVector& y) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < y.size(); ++j)
        if (y[j] != 0) s += std::int64_t(x[i]) * y[j] * sym(i, j);
    }
    return s;
  }

  /// Scaled pairing (w, r) * 2 / short_norm2 of a weight with a root given
  /// in simple-root coordinates.
  std::int64_t weight_root_pairing(const Weight& w, const IntVector& r) const {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r[j] != 0) s += std::int64_t(w[j]) * r[j] * length_ratio_[j];
    return s;
  }

  /// <w, r^vee> for a root r in simple-root coordinates.
  int coroot_pairing(const Weight& w, const IntVector& r) const {
    std::int64_t num = 2 * weight_root_pairing(w, r);
    std::int64_t den = root_pairing(r, r);
    return int(num / den);
  }

  /// Fundamental-weight coordinates of an element of the root lattice.
  Weight root_to_weight(const IntVector& r) const {
    Weight w = Weight::zero(rank());
    for (std::size_t i = 0; i < rank(); ++i)
      if (r[i] != 0)
        for (std::size_t j = 0; j < rank(); ++j) w[j] += r[i] * cartan_(i, j);
    return w;
  }

  Weight reflect(const Weight& w, std::size_t i) const {
    check(w);
    Weight r = w;
    const int c = w[i];
    if (c != 0)
      for (std::size_t j = 0; j < rank(); ++j) r[j] -= c * cartan_(i, j);
    return r;
  }

  /// The dominant element of the Weyl orbit of w.
  Weight dominant_representative(Weight w) const {
    check(w);
    for (;;) {
      std::size_t i = 0;
      while (i < rank() && w[i] >= 0) ++i;
      if (i == rank()) return w;
      const int c = w[i];
      for (std::size_t j = 0; j < rank(); ++j) w[j] -= c * cartan_(i, j);
    }
  }

  RatVector to_ambient(const Weight& w) const {
    check(w);
    RatVector v(ambient_dim_, Rational(0));
    for (std::size_t i = 0; i < rank(); ++i)
      if (w[i] != 0)
        for (std::size_t k = 0; k < ambient_dim_; ++k)
          if (fundamental_weights_[i][k] != 0) v[k] += w[i] * fundamental_weights_[i][k];
    return v;
  }

  RatVector root_to_ambient(const IntVector& r) const {
    RatVector v(ambient_dim_, Rational(0));
    for (std::size_t i = 0; i < rank(); ++i)
      if (r[i] != 0)
        for (std::size_t k = 0; k < ambient_dim_; ++k)
          if (simple_roots_[i][k] != 0) v[k] += r[i] * simple_roots_[i][k];
    return v;
  }

  /// Fundamental-weight coordinates of an ambient vector in the weight
  /// lattice; throws if some coordinate is not integral.
  Weight from_ambient(const RatVector& v) const {
    if (v.size() != ambient_dim_) throw DimensionMismatchError("from_ambient: wrong length");
    Weight w = Weight::zero(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      Rational num = 0, den = 0;
      for (std::size_t k = 0; k < ambient_dim_; ++k) {
        num += v[k] * simple_roots_[i][k];
        den += simple_roots_[i][k] * simple_roots_[i][k];
      }
      Rational c = 2 * num / den;
      if (!is_integer(c)) throw PreconditionError("from_ambient: vector is not a weight");
      w[i] = static_cast<int>(boost::multiprecision::numerator(c));
    }
    return w;
  }

  /// Gram matrix (w_i, w_j) of the fundamental weights in the ambient
  /// Euclidean form. For A_n this is the normalization <e_i, e_i> = n/(n+1).
  RatMatrix weight_form() const {
    RatMatrix g(rank(), rank());
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = i; j < rank(); ++j) {
        Rational s = 0;
        for (std::size_t k = 0; k < ambient_dim_; ++k)
          if (fundamental_weights_[i][k] != 0 && fundamental_weights_[j][k] != 0)
            s += fundamental_weights_[i][k] * fundamental_weights_[j][k];
        g(i, j) = g(j, i) = s;
      }
    return g;
  }

  /// All roots (positive then negative) in fundamental-weight coordinates.
  std::vector<Weight> all_root_weights() const {
    std::vector<Weight> r = positive_root_weights_;
    for (const Weight& w : positive_root_weights_) r.push_back(-w);
    return r;
  }

  /// Order of the Weyl group from the classical formulas.
  BigInt weyl_group_order() const {
    const int n = type_.rank();
    switch (type_.family()) {
      case Family::A: return factorial(n + 1);
      case Family::B:
      case Family::C: return (BigInt(1) << n) * factorial(n);
      case Family::D: return (BigInt(1) << (n - 1)) * factorial(n);
      case Family::E: return n == 6 ? BigInt(51840) : n == 7 ? BigInt(2903040) : BigInt(696729600);
      case Family::F: return 1152;
      case Family::G: return 12;
    }
    return 0;
  }

  void check(const Weight& w) const {
    if (w.size() != rank())
      throw DimensionMismatchError("weight of length " + std::to_string(w.size()) +
                                   " used with " + type_.name());
  }

 private:
  void build();
  void build_classical_roots();
  void build_roots_by_strings();

  SimpleType type_;
  std::size_t ambient_dim_ = 0;
  IntMatrix cartan_;
  std::vector<RatVector> simple_roots_;
  std::vector<RatVector> fundamental_weights_;
  std::vector<IntVector> positive_roots_;
  std::vector<Weight> positive_root_weights_;
  IntVector highest_root_;
  IntVector length_ratio_;
  Rational short_norm2_;
};

inline RootSystem build_root_system(const SimpleType& t) { return RootSystem(t); }

namespace detail {

inline RatVector unit(std::size_t dim, std::size_t k, Rational c = 1) {
  RatVector v(dim, Rational(0));
  v[k] = c;
  return v;
}

inline RatVector axpy(RatVector a, const RatVector& b, const Rational& c) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += c * b[k];
  return a;
}

inline Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0 && b[k] != 0) s += a[k] * b[k];
  return s;
}

inline IntVector highest_root_coefficients(const SimpleType& t) {
  const int n = t.rank();
  switch (t.family()) {
    case Family::A: return IntVector(n, 1);
    case Family::B: {
      IntVector h(n, 2);
      h[0] = 1;
      return h;
    }
    case Family::C: {
      IntVector h(n, 2);
      h[n - 1] = 1;
      return h;
    }
    case Family::D: {
      IntVector h(n, 2);
      h[0] = h[n - 2] = h[n - 1] = 1;
      return h;
    }
    case Family::E:
      if (n == 6) return {1, 2, 2, 3, 2, 1};
      if (n == 7) return {2, 2, 3, 4, 3, 2, 1};
      return {2, 3, 4, 6, 5, 4, 3, 2};
    case Family::F: return {2, 3, 4, 2};
    case Family::G: return {3, 2};
  }
  return {};
}

}  // namespace detail

inline void RootSystem::build() {
  const int n = type_.rank();
  const std::size_t un = std::size_t(n);
  using detail::unit;
  const Rational half(1, 2);

  // Cartan matrix and relative lengths. Classical families use closed forms
  // so that large ranks stay cheap; exceptional ones are derived from the
  // ambient simple roots below.
  cartan_ = IntMatrix(un, un);
  length_ratio_ = IntVector(un, 1);
  const Family f = type_.family();
  if (f == Family::A || f == Family::B || f == Family::C || f == Family::D) {
    for (std::size_t i = 0; i < un; ++i) {
      cartan_(i, i) = 2;
      if (i + 1 < un) cartan_(i, i + 1) = cartan_(i + 1, i) = -1;
    }
    if (f == Family::B) {
      cartan_(un - 2, un - 1) = -2;  // <a_{n-1}, a_n^vee>
      for (std::size_t i = 0; i + 1 < un; ++i) length_ratio_[i] = 2;
      short_norm2_ = 1;
    } else if (f == Family::C) {
      cartan_(un - 1, un - 2) = -2;
      length_ratio_[un - 1] = 2;
      short_norm2_ = 2;
    } else if (f == Family::D) {
      cartan_(un - 2, un - 1) = cartan_(un - 1, un - 2) = 0;
      cartan_(un - 3, un - 1) = cartan_(un - 1, un - 3) = -1;
      short_norm2_ = 2;
    } else {
      short_norm2_ = 2;
    }
  }

  // Ambient simple roots.
  simple_roots_.clear();
  switch (f) {
    case Family::A:
      ambient_dim_ = un + 1;
      for (std::size_t i = 0; i < un; ++i)
        simple_roots_.push_back(detail::axpy(unit(ambient_dim_, i), unit(ambient_dim_, i + 1), -1));
      break;
    case Family::B:
    case Family::C:
    case Family::D:
      ambient_dim_ = un;
      for (std::size_t i = 0; i + 1 < un; ++i)
        simple_roots_.push_back(detail::axpy(unit(un, i), unit(un, i + 1), -1));
      if (f == Family::B) simple_roots_.push_back(unit(un, un - 1));
      if (f == Family::C) simple_roots_.push_back(unit(un, un - 1, 2));
      if (f == Family::D)
        simple_roots_.push_back(detail::axpy(unit(un, un - 2), unit(un, un - 1), 1));
      break;
    case Family::E: {
      ambient_dim_ = 8;
      RatVector a1(8, -half);
      a1[0] = half;
      a1[7] = half;
      simple_roots_.push_back(a1);
      simple_roots_.push_back(detail::axpy(unit(8, 0), unit(8, 1), 1));
      simple_roots_.push_back(detail::axpy(unit(8, 1), unit(8, 0), -1));
      for (std::size_t k = 2; k < 7 && simple_roots_.size() < un; ++k)
        simple_roots_.push_back(detail::axpy(unit(8, k), unit(8, k - 1), -1));
      simple_roots_.resize(un);
      break;
    }
    case Family::F: {
      ambient_dim_ = 4;
      simple_roots_.push_back(detail::axpy(unit(4, 1), unit(4, 2), -1));
      simple_roots_.push_back(detail::axpy(unit(4, 2), unit(4, 3), -1));
      simple_roots_.push_back(unit(4, 3));
      simple_roots_.push_back(RatVector{half, -half, -half, -half});
      break;
    }
    case Family::G:
      ambient_dim_ = 3;
      simple_roots_.push_back(RatVector{1, -1, 0});
      simple_roots_.push_back(RatVector{-2, 1, 1});
      break;
  }

  if (f == Family::E || f == Family::F || f == Family::G) {
    Rational shortest = -1;
    for (std::size_t i = 0; i < un; ++i) {
      Rational ni = detail::dot(simple_roots_[i], simple_roots_[i]);
      if (shortest < 0 || ni < shortest) shortest = ni;
      for (std::size_t j = 0; j < un; ++j) {
        Rational c = 2 * detail::dot(simple_roots_[i], simple_roots_[j]) /
                     detail::dot(simple_roots_[j], simple_roots_[j]);
        cartan_(i, j) = static_cast<int>(boost::multiprecision::numerator(c));
      }
    }
    short_norm2_ = shortest;
    for (std::size_t i = 0; i < un; ++i) {
      Rational r = detail::dot(simple_roots_[i], simple_roots_[i]) / shortest;
      length_ratio_[i] = static_cast<int>(boost::multiprecision::numerator(r));
    }
  }

  // Fundamental weights.
  fundamental_weights_.assign(un, RatVector(ambient_dim_, Rational(0)));
  switch (f) {
    case Family::A:
      for (std::size_t i = 0; i < un; ++i) {
        Rational shift(int(i + 1), n + 1);
        for (std::size_t k = 0; k < ambient_dim_; ++k)
          fundamental_weights_[i][k] = (k <= i ? Rational(1) : Rational(0)) - shift;
      }
      break;
    case Family::B:
    case Family::C:
    case Family::D:
      for (std::size_t i = 0; i < un; ++i)
        for (std::size_t k = 0; k <= i; ++k) fundamental_weights_[i][k] = 1;
      if (f == Family::B)
        for (std::size_t k = 0; k < un; ++k) fundamental_weights_[un - 1][k] = half;
      if (f == Family::D) {
        for (std::size_t k = 0; k < un; ++k) {
          fundamental_weights_[un - 2][k] = half;
          fundamental_weights_[un - 1][k] = half;
        }
        fundamental_weights_[un - 2][un - 1] = -half;
      }
      break;
    default: {
      RatMatrix inv = inverse(to_rational(cartan_));
      for (std::size_t i = 0; i < un; ++i)
        for (std::size_t k = 0; k < un; ++k)
          if (inv(i, k) != 0)
            fundamental_weights_[i] = detail::axpy(fundamental_weights_[i], simple_roots_[k], inv(i, k));
      break;
    }
  }

  if (f == Family::A || f == Family::B || f == Family::C || f == Family::D)
    build_classical_roots();
  else
    build_roots_by_strings();

  positive_root_weights_.clear();
  positive_root_weights_.reserve(positive_roots_.size());
  for (const IntVector& r : positive_roots_) positive_root_weights_.push_back(root_to_weight(r));
  highest_root_ = detail::highest_root_coefficients(type_);
}

// Positive roots of the classical families written in the e-basis, then
// converted to simple-root coordinates through partial sums.
inline void RootSystem::build_classical_roots() {
  const int n = type_.rank();
  const Family f = type_.family();
  positive_roots_.clear();
  const int dim = f == Family::A ? n + 1 : n;

  auto to_root_coords = [&](const IntVector& v) {
    IntVector m(std::size_t(n), 0);
    int p = 0;
    for (int i = 0; i < n; ++i) {
      p += v[std::size_t(i)];
      m[std::size_t(i)] = p;
    }
    if (f == Family::C) {
      m[std::size_t(n - 1)] = p / 2;
    } else if (f == Family::D) {
      const int pn = p;
      const int vn = v[std::size_t(n - 1)];
      m[std::size_t(n - 1)] = pn / 2;
      m[std::size_t(n - 2)] = (pn - 2 * vn) / 2;
    }
    return m;
  };

  auto add = [&](const IntVector& v) { positive_roots_.push_back(to_root_coords(v)); };
  IntVector v(std::size_t(dim), 0);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      std::fill(v.begin(), v.end(), 0);
      v[std::size_t(i)] = 1;
      v[std::size_t(j)] = -1;
      add(v);
      if (f != Family::A) {
        v[std::size_t(j)] = 1;
        add(v);
      }
    }
  if (f == Family::B || f == Family::C)
    for (int i = 0; i < n; ++i) {
      std::fill(v.begin(), v.end(), 0);
      v[std::size_t(i)] = f == Family::B ? 1 : 2;
      add(v);
    }
  std::sort(positive_roots_.begin(), positive_roots_.end(), [](const IntVector& a, const IntVector& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
    return ha != hb ? ha < hb : a > b;
  });
}

// Positive roots by alpha-strings: b + a_i is a root iff q > 0 where
// p - q = <b, a_i^vee> and p is the length of the downward string.
inline void RootSystem::build_roots_by_strings() {
  const std::size_t n = rank();
  positive_roots_.clear();
  std::unordered_set<Weight, WeightHash> known;
  std::vector<IntVector> layer;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    known.insert(Weight(e));
  }
  while (!layer.empty()) {
    std::vector<IntVector> next;
    for (const IntVector& b : layer) {
      positive_roots_.push_back(b);
      Weight bw = root_to_weight(b);
      for (std::size_t i = 0; i < n; ++i) {
        int p = 0;
        IntVector down = b;
        for (;;) {
          down[i] -= 1;
          if (down[i] < 0 || !known.count(Weight(down))) break;
          ++p;
        }
        const int q = p - bw[i];
        if (q <= 0) continue;
        IntVector up = b;
        up[i] += 1;
        if (known.insert(Weight(up)).second) next.push_back(up);
      }
    }
    std::sort(next.begin(), next.end(), std::greater<>());
    layer = std::move(next);
  }
}

/// Orbit of w under the group generated by the simple reflections, sorted.
inline std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
  rs.check(w);
  std::unordered_set<Weight, WeightHash> seen{w};
  std::vector<Weight> frontier{w};
  std::vector<Weight> out{w};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& x : frontier)
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        if (x[i] == 0) continue;
        Weight y = rs.reflect(x, i);
        if (seen.insert(y).second) {
          next.push_back(y);
          out.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// An integer involution (or the identity) of a weight lattice, acting on
/// fundamental-weight coordinates.
struct LatticeInvolution {
  IntMatrix matrix;
  int order = 1;

  LatticeInvolution() = default;
  explicit LatticeInvolution(IntMatrix m) : matrix(std::move(m)) {
    if (matrix.rows() != matrix.cols())
      throw DimensionMismatchError("involution matrix must be square");
    const IntMatrix sq = matrix * matrix;
    if (!(sq == IntMatrix::identity(matrix.rows())))
      throw PreconditionError("matrix does not square to the identity");
    order = matrix == IntMatrix::identity(matrix.rows()) ? 1 : 2;
  }

  static LatticeInvolution identity(std::size_t n) { return LatticeInvolution(IntMatrix::identity(n)); }
  static LatticeInvolution negation(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = -1;
    return LatticeInvolution(m);
  }

  std::size_t dim() const { return matrix.rows(); }

  Weight operator()(const Weight& w) const {
    if (w.size() != dim()) throw DimensionMismatchError("involution applied to weight of wrong length");
    return Weight(matrix.apply(w.coords));
  }

  friend bool operator==(const LatticeInvolution& a, const LatticeInvolution& b) { return a.matrix == b.matrix; }
};

/// Automorphisms of the Dynkin diagram, split by order.
struct DiagramAutomorphisms {
  /// Elements of order 1 or 2, identity first.
  std::vector<LatticeInvolution> involutions;
  /// Elements of order 3 (only D4 has any).
  std::vector<IntMatrix> order_three;

  std::size_t group_order() const { return involutions.size() + order_three.size(); }

  /// The non-identity involutions.
  std::vector<LatticeInvolution> nontrivial() const {
    return {involutions.begin() + (involutions.empty() ? 0 : 1), involutions.end()};
  }
};

/// All permutations of the nodes preserving the Cartan matrix, as matrices
/// sending w_i to w_{p(i)}.
inline DiagramAutomorphisms diagram_automorphisms(const SimpleType& t) {
  const RootSystem rs(t);
  const IntMatrix& a = rs.cartan();
  const std::size_t n = rs.rank();
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::vector<bool> used(n, false);

  auto degree = [&](std::size_t i) {
    int d = 0;
    for (std::size_t j = 0; j < n; ++j) d += (j != i && a(i, j) != 0);
    return d;
  };

  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) {
      perms.push_back(p);
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || degree(c) != degree(i)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = a(i, j) == a(c, p[j]) && a(j, i) == a(p[j], c);
      if (!ok) continue;
      used[c] = true;
      p[i] = c;
      extend(i + 1);
      used[c] = false;
    }
  };
  extend(0);

  DiagramAutomorphisms out;
  std::sort(perms.begin(), perms.end());
  for (const auto& q : perms) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(q[i], i) = 1;
    if (m * m == IntMatrix::identity(n))
      out.involutions.emplace_back(m);
    else
      out.order_three.push_back(m);
  }
  return out;
}

/// The standard non-identity diagram involution: the reversal for A_n, the
/// swap of the two spin nodes for D_n, the reflection of the diagram for E6.
/// Throws for types with no such involution.
inline LatticeInvolution standard_diagram_involution(const SimpleType& t) {
  const std::size_t n = std::size_t(t.rank());
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  if (t.family() == Family::A && n >= 2)
    std::reverse(p.begin(), p.end());
  else if (t.family() == Family::D)
    std::swap(p[n - 2], p[n - 1]);
  else if (t.family() == Family::E && n == 6)
    p = {5, 1, 4, 3, 2, 0};
  else
    throw PreconditionError(t.name() + " has no non-trivial diagram involution");
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(p[i], i) = 1;
  return LatticeInvolution(m);
}

}  // namespace charlattice
