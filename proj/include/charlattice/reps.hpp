#pragma once

// Irreducible representations of semisimple algebras: Weyl dimensions,
// weight multisets (Freudenthal on the dominant chamber, then Weyl orbits),
// the multiplicity-free catalog and restriction to equal-rank subsystems.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "charlattice/rootsys.hpp"
#include "charlattice/subsystems.hpp"

namespace charlattice {

/// A product of simple factors. Factor order matters.
class SemisimpleAlgebra {
 public:
  SemisimpleAlgebra() = default;
  explicit SemisimpleAlgebra(std::vector<SimpleType> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw PreconditionError("semisimple algebra needs at least one factor");
    std::size_t off = 0;
    for (const auto& t : factors_) {
      offsets_.push_back(off);
      off += std::size_t(t.rank());
      systems_.push_back(std::make_shared<const RootSystem>(t));
    }
    rank_ = off;
  }
  SemisimpleAlgebra(SimpleType t) : SemisimpleAlgebra(std::vector<SimpleType>{t}) {}

  /// Parses "A2", "A1+A1", "e6".
  static SemisimpleAlgebra parse(const std::string& s) {
    std::vector<SimpleType> f;
    std::size_t start = 0;
    for (;;) {
      std::size_t p = s.find('+', start);
      f.push_back(SimpleType::parse(s.substr(start, p == std::string::npos ? p : p - start)));
      if (p == std::string::npos) break;
      start = p + 1;
    }
    return SemisimpleAlgebra(std::move(f));
  }

  const std::vector<SimpleType>& factors() const { return factors_; }
  std::size_t num_factors() const { return factors_.size(); }
  std::size_t rank() const { return rank_; }
  std::size_t offset(std::size_t k) const { return offsets_[k]; }
  const RootSystem& root_system(std::size_t k) const { return *systems_[k]; }
  std::shared_ptr<const RootSystem> root_system_ptr(std::size_t k) const { return systems_[k]; }

  bool all_type_a() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const SimpleType& t) { return t.family() == Family::A; });
  }

  std::string name() const {
    std::string s;
    for (const auto& t : factors_) s += (s.empty() ? "" : "+") + t.name();
    return s;
  }

  /// The coordinates of w belonging to factor k.
  Weight part(const Weight& w, std::size_t k) const {
    check(w);
    return Weight(IntVector(w.coords.begin() + long(offsets_[k]),
                            w.coords.begin() + long(offsets_[k] + std::size_t(factors_[k].rank()))));
  }

  void check(const Weight& w) const {
    if (w.size() != rank_)
      throw DimensionMismatchError("weight of length " + std::to_string(w.size()) + " used with " + name());
  }

  friend bool operator==(const SemisimpleAlgebra& a, const SemisimpleAlgebra& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<SimpleType> factors_;
  std::vector<std::size_t> offsets_;
  std::vector<std::shared_ptr<const RootSystem>> systems_;
  std::size_t rank_ = 0;
};

/// Highest weights are concatenated dominant coordinate vectors, one block
/// per factor.
using HighestWeight = Weight;

/// A multiset of weights of a semisimple algebra.
class FormalCharacter {
 public:
  FormalCharacter() = default;
  explicit FormalCharacter(SemisimpleAlgebra alg) : alg_(std::move(alg)) {}

  const SemisimpleAlgebra& algebra() const { return alg_; }
  const std::map<Weight, std::int64_t>& multiplicities() const { return mult_; }

  void add(const Weight& w, std::int64_t m = 1) {
    alg_.check(w);
    if (m < 0) throw PreconditionError("negative multiplicity");
    if (m == 0) return;
    mult_[w] += m;
  }

  std::int64_t multiplicity(const Weight& w) const {
    auto it = mult_.find(w);
    return it == mult_.end() ? 0 : it->second;
  }

  /// Total size with multiplicity.
  std::int64_t size() const {
    std::int64_t s = 0;
    for (const auto& [w, m] : mult_) s += m;
    return s;
  }
  std::size_t num_distinct() const { return mult_.size(); }

  std::vector<Weight> distinct_weights() const {
    std::vector<Weight> out;
    for (const auto& [w, m] : mult_) out.push_back(w);
    return out;
  }

  /// Every weight repeated by its multiplicity, in sorted order.
  std::vector<Weight> expanded() const {
    std::vector<Weight> out;
    for (const auto& [w, m] : mult_)
      for (std::int64_t i = 0; i < m; ++i) out.push_back(w);
    return out;
  }

  std::int64_t max_multiplicity() const {
    std::int64_t best = 0;
    for (const auto& [w, m] : mult_) best = std::max(best, m);
    return best;
  }

  Weight weight_sum() const {
    Weight s = Weight::zero(alg_.rank());
    for (const auto& [w, m] : mult_)
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += int(m) * w[i];
    return s;
  }

  /// True when every simple reflection of every factor preserves the
  /// multiset.
  bool is_weyl_stable() const {
    for (const auto& [w, m] : mult_)
      for (std::size_t k = 0; k < alg_.num_factors(); ++k) {
        const RootSystem& rs = alg_.root_system(k);
        const std::size_t off = alg_.offset(k);
        for (std::size_t i = 0; i < rs.rank(); ++i) {
          const int c = w[off + i];
          if (c == 0) continue;
          Weight r = w;
          for (std::size_t j = 0; j < rs.rank(); ++j) r[off + j] -= c * rs.cartan()(i, j);
          if (multiplicity(r) != m) return false;
        }
      }
    return true;
  }

  FormalCharacter dual() const {
    FormalCharacter d(alg_);
    for (const auto& [w, m] : mult_) d.mult_[-w] = m;
    return d;
  }

  bool is_self_dual() const { return *this == dual(); }

  /// Applies a linear map on fundamental-weight coordinates to each weight.
  template <class F>
  FormalCharacter transformed(const F& f) const {
    FormalCharacter out(alg_);
    for (const auto& [w, m] : mult_) out.add(f(w), m);
    return out;
  }

  friend FormalCharacter operator+(const FormalCharacter& a, const FormalCharacter& b) {
    if (!(a.alg_ == b.alg_)) throw DimensionMismatchError("direct sum of characters of different algebras");
    FormalCharacter s = a;
    for (const auto& [w, m] : b.mult_) s.mult_[w] += m;
    return s;
  }

  friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) {
    return a.alg_ == b.alg_ && a.mult_ == b.mult_;
  }

 private:
  SemisimpleAlgebra alg_;
  std::map<Weight, std::int64_t> mult_;
};

inline bool is_multiplicity_free(const FormalCharacter& fc) { return fc.max_multiplicity() <= 1; }

/// Trivial character: the zero weight with multiplicity m.
inline FormalCharacter trivial_character(const SemisimpleAlgebra& alg, std::int64_t m = 1) {
  FormalCharacter fc(alg);
  fc.add(Weight::zero(alg.rank()), m);
  return fc;
}

namespace detail {

inline Weight rho(std::size_t rank) { return Weight(IntVector(rank, 1)); }

inline void check_dominant(const RootSystem& rs, const Weight& hw) {
  rs.check(hw);
  if (!hw.is_dominant()) throw PreconditionError("highest weight " + to_string(hw) + " is not dominant");
}

inline BigInt weyl_dimension_big(const RootSystem& rs, const Weight& hw) {
  check_dominant(rs, hw);
  BigInt num = 1, den = 1;
  Weight lr = hw + rho(rs.rank());
  const Weight r = rho(rs.rank());
  for (const IntVector& a : rs.positive_roots()) {
    num *= rs.weight_root_pairing(lr, a);
    den *= rs.weight_root_pairing(r, a);
  }
  return num / den;
}

/// Dominant weights of the irreducible module with highest weight hw and
/// their multiplicities.
inline std::map<Weight, std::int64_t> dominant_multiplicities(const RootSystem& rs, const Weight& hw) {
  check_dominant(rs, hw);
  const std::size_t n = rs.rank();
  const auto& pos = rs.positive_roots();
  const auto& posw = rs.positive_root_weights();

  // Dominant weights below hw, with the simple-root coordinates of hw - mu.
  std::map<Weight, IntVector> depth{{hw, IntVector(n, 0)}};
  std::vector<Weight> order{hw};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Weight mu = order[head];
    const IntVector k = depth[mu];
    for (std::size_t a = 0; a < pos.size(); ++a) {
      Weight nu = mu - posw[a];
      if (!nu.is_dominant() || depth.count(nu)) continue;
      IntVector kn = k;
      for (std::size_t j = 0; j < n; ++j) kn[j] += pos[a][j];
      depth.emplace(nu, kn);
      order.push_back(nu);
    }
  }
  auto height = [&](const Weight& w) {
    std::int64_t h = 0;
    for (int c : depth.at(w)) h += c;
    return h;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](const Weight& x, const Weight& y) { return height(x) < height(y); });

  std::map<Weight, std::int64_t> mult;
  std::unordered_map<Weight, std::int64_t, WeightHash> lookup;  // any weight -> multiplicity
  auto mult_of = [&](const Weight& w) -> std::int64_t {
    auto it = lookup.find(w);
    if (it != lookup.end()) return it->second;
    Weight d = rs.dominant_representative(w);
    auto jt = mult.find(d);
    std::int64_t m = jt == mult.end() ? 0 : jt->second;
    lookup.emplace(w, m);
    return m;
  };

  const Weight two_rho = 2 * rho(n);
  const IntVector& d = rs.length_ratios();
  for (const Weight& mu : order) {
    if (mu == hw) {
      mult[mu] = 1;
      continue;
    }
    const IntVector& k = depth.at(mu);
    const Weight s = hw + mu + two_rho;
    std::int64_t den = 0;
    for (std::size_t j = 0; j < n; ++j) den += std::int64_t(k[j]) * d[j] * s[j];
    std::int64_t num = 0;
    for (std::size_t a = 0; a < pos.size(); ++a) {
      Weight nu = mu;
      for (;;) {
        nu = nu + posw[a];
        std::int64_t m = mult_of(nu);
        if (m == 0) break;
        num += m * rs.weight_root_pairing(nu, pos[a]);
      }
    }
    num *= 2;
    if (den <= 0 || num % den != 0)
      throw Error("Freudenthal recursion produced a non-integral multiplicity");
    const std::int64_t m = num / den;
    if (m > 0) mult[mu] = m;
  }
  return mult;
}

}  // namespace detail

/// Default cap on the dimension of an expanded weight multiset.
inline constexpr std::uint64_t kDefaultDimensionCap = 100000;

inline BigInt weyl_dimension_big(const SemisimpleAlgebra& alg, const HighestWeight& hw) {
  alg.check(hw);
  BigInt d = 1;
  for (std::size_t k = 0; k < alg.num_factors(); ++k)
    d *= detail::weyl_dimension_big(alg.root_system(k), alg.part(hw, k));
  return d;
}

inline std::uint64_t weyl_dimension(const SemisimpleAlgebra& alg, const HighestWeight& hw) {
  BigInt d = weyl_dimension_big(alg, hw);
  if (d > std::numeric_limits<std::uint64_t>::max())
    throw ResourceLimitError("dimension exceeds 64 bits");
  return static_cast<std::uint64_t>(d);
}

/// Weights of one simple factor's irreducible module, with multiplicity.
inline std::map<Weight, std::int64_t> simple_weight_multiplicities(const RootSystem& rs, const Weight& hw) {
  std::map<Weight, std::int64_t> out;
  for (const auto& [mu, m] : detail::dominant_multiplicities(rs, hw))
    for (const Weight& w : weyl_orbit(rs, mu)) out.emplace(w, m);
  return out;
}

inline FormalCharacter weight_multiset(const SemisimpleAlgebra& alg, const HighestWeight& hw,
                                       std::uint64_t max_dim = kDefaultDimensionCap) {
  alg.check(hw);
  BigInt dim = weyl_dimension_big(alg, hw);
  if (dim > max_dim)
    throw ResourceLimitError("representation of dimension " + dim.str() + " exceeds the cap of " +
                             std::to_string(max_dim));

  std::vector<std::pair<IntVector, std::int64_t>> acc{{{}, 1}};
  for (std::size_t k = 0; k < alg.num_factors(); ++k) {
    auto part = simple_weight_multiplicities(alg.root_system(k), alg.part(hw, k));
    std::vector<std::pair<IntVector, std::int64_t>> next;
    next.reserve(acc.size() * part.size());
    for (const auto& [prefix, m0] : acc)
      for (const auto& [w, m1] : part) {
        IntVector c = prefix;
        c.insert(c.end(), w.coords.begin(), w.coords.end());
        next.emplace_back(std::move(c), m0 * m1);
      }
    acc = std::move(next);
  }
  FormalCharacter fc(alg);
  for (auto& [c, m] : acc) fc.add(Weight(std::move(c)), m);
  return fc;
}

/// Direct sum of irreducibles.
inline FormalCharacter weight_multiset(const SemisimpleAlgebra& alg, const std::vector<HighestWeight>& hws,
                                       std::uint64_t max_dim = kDefaultDimensionCap) {
  FormalCharacter fc(alg);
  for (const auto& hw : hws) fc = fc + weight_multiset(alg, hw, max_dim);
  return fc;
}

/// Highest weight of the dual module.
inline HighestWeight dual_highest_weight(const SemisimpleAlgebra& alg, const HighestWeight& hw) {
  alg.check(hw);
  Weight out = hw;
  for (std::size_t k = 0; k < alg.num_factors(); ++k) {
    const RootSystem& rs = alg.root_system(k);
    Weight low = rs.dominant_representative(-alg.part(hw, k));
    for (std::size_t i = 0; i < rs.rank(); ++i) out[alg.offset(k) + i] = low[i];
  }
  return out;
}

inline bool is_self_dual_irrep(const SemisimpleAlgebra& alg, const HighestWeight& hw) {
  return dual_highest_weight(alg, hw) == hw;
}

struct CatalogEntry {
  HighestWeight hw;
  std::uint64_t dim;
  std::string label;
};

/// The multiplicity-free nontrivial irreducibles of a simple type, listed
/// per family as in the classification: for A_m the symmetric powers of Std
/// and Std* and all alternating powers; omega_1 and omega_m for B_m;
/// omega_1 for C_m, plus omega_3 for C_3; omega_1, omega_{m-1}, omega_m for
/// D_m; omega_1 and omega_6 for E6; omega_7 for E7; omega_1 for G2. E8 and F4
/// have none. Only entries of dimension at most max_dim are returned.
/// Dimensions come from closed forms.
inline std::vector<CatalogEntry> multiplicity_free_catalog(const SimpleType& t,
                                                           std::uint64_t max_dim = kDefaultDimensionCap) {
  const int n = t.rank();
  std::vector<CatalogEntry> out;
  auto omega = [&](int i, int c = 1) {
    Weight w = Weight::zero(std::size_t(n));
    w[std::size_t(i - 1)] = c;
    return w;
  };
  auto push = [&](const Weight& hw, const BigInt& dim, std::string label) {
    if (dim > max_dim) return;
    for (const auto& e : out)
      if (e.hw == hw) return;
    out.push_back({hw, static_cast<std::uint64_t>(dim), std::move(label)});
  };
  switch (t.family()) {
    case Family::A:
      for (int a = 1; 2 * a <= n + 1 && binomial(n + 1, a) <= max_dim; ++a)
        for (int b : {a, n + 1 - a})
          push(omega(b), binomial(n + 1, b), b == 1 ? "Std" : b == n ? "Std*" : "Lambda^" + std::to_string(b) + " Std");
      for (int a = 2; binomial(n + a, a) <= max_dim; ++a) {
        push(omega(1, a), binomial(n + a, a), "Sym^" + std::to_string(a) + " Std");
        push(omega(n, a), binomial(n + a, a), "Sym^" + std::to_string(a) + " Std*");
      }
      break;
    case Family::B:
      push(omega(1), 2 * n + 1, "Std");
      push(omega(n), BigInt(1) << n, "spin");
      break;
    case Family::C:
      push(omega(1), 2 * n, "Std");
      if (n == 3) push(omega(3), 14, "omega_3");
      break;
    case Family::D:
      push(omega(1), 2 * n, "Std");
      push(omega(n - 1), BigInt(1) << (n - 1), "half-spin");
      push(omega(n), BigInt(1) << (n - 1), "half-spin");
      break;
    case Family::E:
      if (n == 6) {
        push(omega(1), 27, "minuscule");
        push(omega(6), 27, "minuscule*");
      } else if (n == 7) {
        push(omega(7), 56, "minuscule");
      }
      break;
    case Family::F:
      break;
    case Family::G:
      push(omega(1), 7, "Std");
      break;
  }
  return out;
}

/// All dominant highest weights (trivial one included) whose Weyl
/// dimension is at most dmax, sorted by (dimension, coordinates).
inline std::vector<std::pair<HighestWeight, std::uint64_t>> enumerate_irreps_up_to_dim(
    const SemisimpleAlgebra& alg, std::uint64_t dmax) {
  if (dmax < 1) throw PreconditionError("dmax must be positive");
  // Per factor: the dimension is strictly increasing in each coordinate.
  std::vector<std::vector<std::pair<IntVector, std::uint64_t>>> per;
  for (std::size_t k = 0; k < alg.num_factors(); ++k) {
    const RootSystem& rs = alg.root_system(k);
    std::vector<std::pair<IntVector, std::uint64_t>> list;
    Weight hw = Weight::zero(rs.rank());
    // Odometer over coordinates, resetting a coordinate once it overflows.
    for (;;) {
      BigInt d = detail::weyl_dimension_big(rs, hw);
      if (d <= dmax) {
        list.emplace_back(hw.coords, static_cast<std::uint64_t>(d));
        hw[0] += 1;
        continue;
      }
      std::size_t i = 0;
      while (i < rs.rank() && hw[i] == 0) ++i;
      // hw[i] is the first nonzero coordinate and pushed us past dmax.
      if (i + 1 >= rs.rank()) break;
      hw[i] = 0;
      hw[i + 1] += 1;
    }
    per.push_back(std::move(list));
  }
  std::vector<std::pair<HighestWeight, std::uint64_t>> out;
  std::vector<std::pair<IntVector, std::uint64_t>> acc{{{}, 1}};
  for (const auto& list : per) {
    std::vector<std::pair<IntVector, std::uint64_t>> next;
    for (const auto& [prefix, d0] : acc)
      for (const auto& [c, d1] : list) {
        if (d0 * d1 > dmax) continue;
        IntVector v = prefix;
        v.insert(v.end(), c.begin(), c.end());
        next.emplace_back(std::move(v), d0 * d1);
      }
    acc = std::move(next);
  }
  for (auto& [c, d] : acc) out.emplace_back(Weight(std::move(c)), d);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  return out;
}

/// The algebra whose factors are the components of the given subsystems,
/// in order.
inline SemisimpleAlgebra subsystem_algebra(const std::vector<Subsystem>& subs) {
  std::vector<SimpleType> f;
  for (const auto& s : subs) f.insert(f.end(), s.component_types.begin(), s.component_types.end());
  return SemisimpleAlgebra(std::move(f));
}

/// Re-expresses fc in the coordinates of equal-rank subsystems, one per
/// factor of fc's algebra.
inline FormalCharacter restrict_to_subsystem(const FormalCharacter& fc, const std::vector<Subsystem>& subs) {
  const SemisimpleAlgebra& alg = fc.algebra();
  if (subs.size() != alg.num_factors())
    throw DimensionMismatchError("need one subsystem per factor");
  for (std::size_t k = 0; k < subs.size(); ++k) {
    if (subs[k].parent->type() != alg.factors()[k])
      throw DimensionMismatchError("subsystem of " + subs[k].parent->type().name() + " used for factor " +
                                   alg.factors()[k].name());
    if (subs[k].rank() != subs[k].parent->rank())
      throw DimensionMismatchError("subsystem rank differs from the factor rank");
  }
  FormalCharacter out(subsystem_algebra(subs));
  for (const auto& [w, m] : fc.multiplicities()) {
    IntVector c;
    for (std::size_t k = 0; k < subs.size(); ++k) {
      Weight r = subs[k].restrict(alg.part(w, k));
      c.insert(c.end(), r.coords.begin(), r.coords.end());
    }
    out.add(Weight(std::move(c)), m);
  }
  return out;
}

inline FormalCharacter restrict_to_subsystem(const FormalCharacter& fc, const Subsystem& sub) {
  return restrict_to_subsystem(fc, std::vector<Subsystem>{sub});
}

}  // namespace charlattice
