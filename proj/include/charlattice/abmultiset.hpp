#pragma once

// Finite multisets in Z/m x Z^d under the sumset product: translation
// equivalence, factorization enumeration and the generic-ratio check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "charlattice/reps.hpp"

namespace charlattice {

struct AbGroup {
  int m = 1;          // torsion modulus, 1 for none
  std::size_t d = 0;  // free rank

  friend bool operator==(const AbGroup&, const AbGroup&) = default;
};

struct AbGroupElem {
  int torsion = 0;
  IntVector free;

  friend bool operator==(const AbGroupElem&, const AbGroupElem&) = default;
  friend auto operator<=>(const AbGroupElem&, const AbGroupElem&) = default;

  friend std::ostream& operator<<(std::ostream& os, const AbGroupElem& x) {
    os << '(' << x.torsion;
    for (int c : x.free) os << ", " << c;
    return os << ')';
  }
};

inline int reduce_mod(long long t, int m) {
  long long r = t % m;
  return int(r < 0 ? r + m : r);
}

inline AbGroupElem make_elem(const AbGroup& g, long long torsion, IntVector free) {
  if (free.size() != g.d) throw DimensionMismatchError("free part has the wrong length");
  return {reduce_mod(torsion, g.m), std::move(free)};
}

inline AbGroupElem add(const AbGroup& g, const AbGroupElem& x, const AbGroupElem& y) {
  AbGroupElem r{reduce_mod((long long)x.torsion + y.torsion, g.m), x.free};
  for (std::size_t i = 0; i < g.d; ++i) r.free[i] += y.free[i];
  return r;
}

inline AbGroupElem sub(const AbGroup& g, const AbGroupElem& x, const AbGroupElem& y) {
  AbGroupElem r{reduce_mod((long long)x.torsion - y.torsion, g.m), x.free};
  for (std::size_t i = 0; i < g.d; ++i) r.free[i] -= y.free[i];
  return r;
}

inline AbGroupElem zero_elem(const AbGroup& g) { return {0, IntVector(g.d, 0)}; }

/// A multiset kept as a sorted vector.
class GroupMultiset {
 public:
  GroupMultiset() = default;
  GroupMultiset(AbGroup g, std::vector<AbGroupElem> elems) : g_(g), elems_(std::move(elems)) {
    if (g_.m < 1) throw PreconditionError("torsion modulus must be positive");
    for (auto& e : elems_) e = make_elem(g_, e.torsion, e.free);
    std::sort(elems_.begin(), elems_.end());
  }

  /// Multiset of integers in Z.
  static GroupMultiset integers(const std::vector<int>& xs) {
    std::vector<AbGroupElem> e;
    for (int x : xs) e.push_back({0, {x}});
    return GroupMultiset({1, 1}, std::move(e));
  }

  const AbGroup& group() const { return g_; }
  const std::vector<AbGroupElem>& elems() const { return elems_; }
  std::size_t size() const { return elems_.size(); }

  GroupMultiset translated(const AbGroupElem& x) const {
    std::vector<AbGroupElem> e;
    for (const auto& y : elems_) e.push_back(add(g_, y, x));
    return GroupMultiset(g_, std::move(e));
  }

  friend bool operator==(const GroupMultiset& a, const GroupMultiset& b) {
    return a.g_ == b.g_ && a.elems_ == b.elems_;
  }
  friend bool operator<(const GroupMultiset& a, const GroupMultiset& b) { return a.elems_ < b.elems_; }

  friend std::ostream& operator<<(std::ostream& os, const GroupMultiset& s) {
    os << '{';
    for (std::size_t i = 0; i < s.elems_.size(); ++i) os << (i ? ", " : "") << s.elems_[i];
    return os << '}';
  }

 private:
  AbGroup g_;
  std::vector<AbGroupElem> elems_;
};

inline void check_same_group(const GroupMultiset& a, const GroupMultiset& b) {
  if (!(a.group() == b.group())) throw DimensionMismatchError("multisets live in different groups");
}

inline GroupMultiset multiset_product(const GroupMultiset& a, const GroupMultiset& b) {
  check_same_group(a, b);
  std::vector<AbGroupElem> e;
  e.reserve(a.size() * b.size());
  for (const auto& x : a.elems())
    for (const auto& y : b.elems()) e.push_back(add(a.group(), x, y));
  return GroupMultiset(a.group(), std::move(e));
}

inline GroupMultiset multiset_product(const std::vector<GroupMultiset>& fs) {
  if (fs.empty()) throw PreconditionError("empty product");
  GroupMultiset p = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) p = multiset_product(p, fs[i]);
  return p;
}

/// xi with xi + a == b, trying b_j - min(a) for the distinct b_j in order.
inline std::optional<AbGroupElem> equivalent(const GroupMultiset& a, const GroupMultiset& b) {
  check_same_group(a, b);
  if (a.size() != b.size()) return std::nullopt;
  if (a.size() == 0) return zero_elem(a.group());
  const AbGroupElem& a0 = a.elems().front();
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (j > 0 && b.elems()[j] == b.elems()[j - 1]) continue;
    AbGroupElem xi = sub(a.group(), b.elems()[j], a0);
    if (a.translated(xi) == b) return xi;
  }
  return std::nullopt;
}

/// The lexicographically greatest translate a - x with x in a. In a
/// torsion-free group this is a shifted so its least element is 0.
inline GroupMultiset canonical_form(const GroupMultiset& a) {
  std::optional<GroupMultiset> best;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0 && a.elems()[i] == a.elems()[i - 1]) continue;
    GroupMultiset t = a.translated(sub(a.group(), zero_elem(a.group()), a.elems()[i]));
    if (!best || *best < t) best = std::move(t);
  }
  return best ? *best : a;
}

struct Decomposition {
  std::vector<GroupMultiset> factors;
  std::vector<std::size_t> sizes;
};

namespace detail {

using ElemCount = std::map<AbGroupElem, int>;

inline ElemCount count_elems(const std::vector<AbGroupElem>& v) {
  ElemCount c;
  for (const auto& x : v) ++c[x];
  return c;
}

// Removes x + B from rest if it is contained there.
inline bool take_translate(const AbGroup& g, ElemCount& rest, const AbGroupElem& x,
                           const std::vector<AbGroupElem>& b) {
  std::vector<AbGroupElem> taken;
  for (const auto& y : b) {
    AbGroupElem s = add(g, x, y);
    auto it = rest.find(s);
    if (it == rest.end() || it->second == 0) {
      for (const auto& t : taken) ++rest[t];
      return false;
    }
    if (--it->second == 0) rest.erase(it);
    taken.push_back(s);
  }
  return true;
}

// All (A, B) with #A = a, #B = b and A + B = C, one per pair of translation
// classes (A - x, B + x).
inline std::vector<std::pair<GroupMultiset, GroupMultiset>> binary_factorizations(const GroupMultiset& c,
                                                                                  std::size_t a, std::size_t b) {
  const AbGroup& g = c.group();
  const auto& el = c.elems();
  std::vector<std::pair<GroupMultiset, GroupMultiset>> out;
  std::set<std::pair<GroupMultiset, GroupMultiset>> seen;

  // Normalize so 0 is in A and C[0] = 0 + (an element of B). Then B is a
  // submultiset of C containing C[0].
  std::vector<AbGroupElem> bset{el[0]};
  std::function<void(std::size_t)> choose_b = [&](std::size_t from) {
    if (bset.size() == b) {
      ElemCount rest = count_elems(el);
      if (!take_translate(g, rest, zero_elem(g), bset)) return;
      std::vector<AbGroupElem> aset{zero_elem(g)};
      std::vector<AbGroupElem> bd = bset;
      bd.erase(std::unique(bd.begin(), bd.end()), bd.end());
      std::function<void()> cover = [&]() {
        if (aset.size() == a) {
          GroupMultiset am(g, aset), bm(g, bset);
          auto key = std::make_pair(canonical_form(am), canonical_form(bm));
          if (seen.insert(key).second) out.emplace_back(std::move(am), std::move(bm));
          return;
        }
        const AbGroupElem r = rest.begin()->first;
        for (const auto& y : bd) {
          AbGroupElem x = sub(g, r, y);
          if (!take_translate(g, rest, x, bset)) continue;
          aset.push_back(x);
          cover();
          aset.pop_back();
          for (const auto& z : bset) ++rest[add(g, x, z)];
        }
      };
      cover();
      return;
    }
    for (std::size_t i = from; i < el.size(); ++i) {
      if (i > from && el[i] == el[i - 1]) continue;
      bset.push_back(el[i]);
      choose_b(i + 1);
      bset.pop_back();
    }
  };
  choose_b(1);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::make_pair(canonical_form(x.first), canonical_form(x.second)) <
           std::make_pair(canonical_form(y.first), canonical_form(y.second));
  });
  return out;
}

inline std::vector<std::pair<std::size_t, GroupMultiset>> decomposition_key(const Decomposition& d) {
  std::vector<std::pair<std::size_t, GroupMultiset>> k;
  for (const auto& f : d.factors) k.emplace_back(f.size(), canonical_form(f));
  std::sort(k.begin(), k.end());
  return k;
}

}  // namespace detail

/// All decompositions C = A_1 ... A_k with #A_i = profile[i], up to
/// translating the factors and reordering factors of equal size. The
/// profile is split from the left.
inline std::vector<Decomposition> factorizations(const GroupMultiset& c, const std::vector<std::size_t>& profile) {
  if (profile.empty()) throw PreconditionError("empty factorization profile");
  std::size_t prod = 1;
  for (std::size_t s : profile) {
    if (s < 1 || (s < 2 && profile.size() > 1)) throw PreconditionError("factor sizes must exceed 1");
    prod *= s;
  }
  if (prod != c.size())
    throw PreconditionError("profile product " + std::to_string(prod) + " differs from #C = " +
                            std::to_string(c.size()));
  if (profile.size() == 1) return {Decomposition{{c}, {c.size()}}};

  std::vector<Decomposition> raw;
  std::vector<std::size_t> rest(profile.begin() + 1, profile.end());
  for (auto& [a, b] : detail::binary_factorizations(c, profile[0], c.size() / profile[0]))
    for (auto& tail : factorizations(b, rest)) {
      Decomposition d{{a}, {a.size()}};
      d.factors.insert(d.factors.end(), tail.factors.begin(), tail.factors.end());
      d.sizes.insert(d.sizes.end(), tail.sizes.begin(), tail.sizes.end());
      raw.push_back(std::move(d));
    }

  std::vector<Decomposition> out;
  std::set<std::vector<std::pair<std::size_t, GroupMultiset>>> seen;
  for (auto& d : raw)
    if (seen.insert(detail::decomposition_key(d)).second) out.push_back(std::move(d));
  return out;
}

/// (ab)! / (a! b!).
inline BigInt binary_factorization_bound(std::size_t a, std::size_t b) { return binomial(int(a * b), int(a)); }

struct GenericRatioReport {
  bool ok = true;
  bool has_repeats = false;
  std::vector<std::pair<AbGroupElem, AbGroupElem>> violations;
};

/// Checks n (x - y) != 0 for all distinct values x, y of C. Repeated values
/// are not compared with themselves, only reported.
inline GenericRatioReport generic_ratio_report(const GroupMultiset& c, int n) {
  if (n < 1) throw PreconditionError("n must be positive");
  GenericRatioReport rep;
  std::vector<AbGroupElem> vals = c.elems();
  rep.has_repeats = std::adjacent_find(vals.begin(), vals.end()) != vals.end();
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  const int m = c.group().m;
  for (std::size_t i = 0; i < vals.size(); ++i)
    for (std::size_t j = i + 1; j < vals.size(); ++j)
      if (vals[i].free == vals[j].free && reduce_mod((long long)n * (vals[i].torsion - vals[j].torsion), m) == 0) {
        rep.ok = false;
        rep.violations.emplace_back(vals[i], vals[j]);
      }
  return rep;
}

inline bool generic_ratio_check(const GroupMultiset& c, int n) { return generic_ratio_report(c, n).ok; }

/// The weights of fc (with multiplicity) as a multiset in Z^rank.
inline GroupMultiset weights_as_multiset(const FormalCharacter& fc) {
  std::vector<AbGroupElem> e;
  for (const auto& [w, m] : fc.multiplicities())
    for (std::int64_t i = 0; i < m; ++i) e.push_back({0, w.coords});
  return GroupMultiset({1, fc.algebra().rank()}, std::move(e));
}

/// Sumset decompositions of the weight multiset of fc.
inline std::vector<Decomposition> character_kronecker_split(const FormalCharacter& fc,
                                                            const std::vector<std::size_t>& profile) {
  return factorizations(weights_as_multiset(fc), profile);
}

}  // namespace charlattice
