#pragma once

// Character-induced forms, Gram data, formal-character matching and the
// statistics built on them.

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

/// A symmetric form on the weight space of an algebra, in
/// fundamental-weight coordinates.
struct BilinearForm {
  SemisimpleAlgebra algebra;
  RatMatrix matrix;

  Rational operator()(const Weight& x, const Weight& y) const { return bilinear(matrix, x.coords, y.coords); }
  Rational norm2(const Weight& x) const { return (*this)(x, x); }

  /// s_i^T B s_i == B for every simple reflection s_i.
  bool is_weyl_invariant() const {
    for (std::size_t k = 0; k < algebra.num_factors(); ++k) {
      const RootSystem& rs = algebra.root_system(k);
      const std::size_t off = algebra.offset(k);
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        // column action on coordinates: w -> w - w_i * (row i of the Cartan matrix)
        RatMatrix s = RatMatrix::identity(algebra.rank());
        for (std::size_t j = 0; j < rs.rank(); ++j) s(off + j, off + i) -= rs.cartan()(i, j);
        if (!(s.transpose() * matrix * s == matrix)) return false;
      }
    }
    return true;
  }
};

namespace detail {

// A basis of the span of some integer vectors, chosen greedily in a given
// order, with a way to read off coordinates.
struct SpanBasis {
  std::vector<std::size_t> basis;   // indices of the chosen vectors
  std::vector<std::size_t> pivots;  // coordinate positions where the basis is invertible
  RatMatrix inv;                    // inverse of the basis restricted to pivots

  RatVector coords(const Weight& w) const {
    RatVector v(pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i) v[i] = w[pivots[i]];
    return inv.apply(v);
  }
};

inline SpanBasis span_basis(const std::vector<Weight>& ws, const std::vector<std::size_t>& order) {
  SpanBasis sb;
  std::vector<RatVector> rows;
  std::vector<std::size_t> piv;
  for (std::size_t idx : order) {
    RatVector v(ws[idx].coords.begin(), ws[idx].coords.end());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (v[piv[r]] == 0) continue;
      Rational f = v[piv[r]] / rows[r][piv[r]];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
    }
    std::size_t p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) continue;
    rows.push_back(std::move(v));
    piv.push_back(p);
    sb.basis.push_back(idx);
  }
  sb.pivots = piv;
  const std::size_t r = sb.basis.size();
  RatMatrix sub(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) sub(i, j) = ws[sb.basis[j]][piv[i]];
  sb.inv = inverse(sub);
  return sb;
}

// Gram matrix of the distinct weights of fc under the form the character
// induces on the span of its weights.
inline RatMatrix span_gram(const FormalCharacter& fc, const std::vector<Weight>& ws) {
  std::vector<std::size_t> order(ws.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  SpanBasis sb = span_basis(ws, order);
  const std::size_t r = sb.basis.size();
  std::vector<RatVector> c;
  for (const Weight& w : ws) c.push_back(sb.coords(w));
  RatMatrix cm(r, r);
  for (std::size_t a = 0; a < ws.size(); ++a) {
    const std::int64_t m = fc.multiplicity(ws[a]);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) cm(i, j) += m * c[a][i] * c[a][j];
  }
  RatMatrix ci = r ? inverse(cm) : RatMatrix();
  RatMatrix g(ws.size(), ws.size());
  for (std::size_t a = 0; a < ws.size(); ++a) {
    RatVector t = r ? ci.apply(c[a]) : RatVector{};
    for (std::size_t b = a; b < ws.size(); ++b) {
      Rational s = 0;
      for (std::size_t i = 0; i < r; ++i) s += t[i] * c[b][i];
      g(a, b) = g(b, a) = s;
    }
  }
  return g;
}

}  // namespace detail

/// The form dual to x, y -> sum over weights w of w(x) w(y). Throws
/// DegenerateFormError unless the weights span the weight space.
inline BilinearForm char_inner_product(const FormalCharacter& fc) {
  const std::size_t n = fc.algebra().rank();
  RatMatrix m(n, n);
  for (const auto& [w, mult] : fc.multiplicities())
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (w[j] != 0) m(i, j) += Rational(mult * w[i] * w[j]);
    }
  auto inv = try_inverse(m);
  if (!inv) throw DegenerateFormError("character of " + fc.algebra().name() + " is not faithful on every factor");
  return {fc.algebra(), *inv};
}

/// Each factor block divided by its smallest positive diagonal entry.
inline BilinearForm ratio_canonical(const BilinearForm& b) {
  BilinearForm out = b;
  const SemisimpleAlgebra& alg = b.algebra;
  for (std::size_t k = 0; k < alg.num_factors(); ++k) {
    const std::size_t off = alg.offset(k), r = alg.root_system(k).rank();
    std::optional<Rational> lo;
    for (std::size_t i = off; i < off + r; ++i)
      if (b.matrix(i, i) > 0 && (!lo || b.matrix(i, i) < *lo)) lo = b.matrix(i, i);
    if (!lo) continue;
    for (std::size_t i = off; i < off + r; ++i)
      for (std::size_t j = 0; j < alg.rank(); ++j) {
        out.matrix(i, j) /= *lo;
        if (j < off || j >= off + r) out.matrix(j, i) /= *lo;
      }
  }
  return out;
}

struct GramData {
  std::vector<Weight> weights;  // distinct, lexicographic
  RatMatrix gram;
};

inline GramData gram_data(const FormalCharacter& fc, const BilinearForm& form) {
  GramData g{fc.distinct_weights(), RatMatrix(fc.num_distinct(), fc.num_distinct())};
  for (std::size_t a = 0; a < g.weights.size(); ++a)
    for (std::size_t b = a; b < g.weights.size(); ++b)
      g.gram(a, b) = g.gram(b, a) = form(g.weights[a], g.weights[b]);
  return g;
}

/// Gram data under the character's own form.
inline GramData gram_data(const FormalCharacter& fc) {
  auto ws = fc.distinct_weights();
  if (ws.size() == 1 && ws[0].is_zero()) return {ws, RatMatrix(1, 1)};
  return gram_data(fc, char_inner_product(fc));
}

/// A linear map of weight spaces carrying one formal character onto another.
/// map acts on column vectors of fundamental-weight coordinates.
struct CharIsomorphism {
  FormalCharacter source;
  FormalCharacter target;
  RatMatrix map;

  Weight apply(const Weight& w) const {
    RatVector v = map.apply(w.coords);
    Weight out = Weight::zero(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!is_integer(v[i])) throw PreconditionError("image is not integral");
      out[i] = static_cast<int>(boost::multiprecision::numerator(v[i]));
    }
    return out;
  }

  /// Checks invertibility and that the multiset maps exactly onto target.
  bool verify() const {
    if (map.rows() != target.algebra().rank() || map.cols() != source.algebra().rank()) return false;
    if (!try_inverse(map)) return false;
    FormalCharacter img(target.algebra());
    try {
      for (const auto& [w, m] : source.multiplicities()) img.add(apply(w), m);
    } catch (const PreconditionError&) {
      return false;
    }
    return img == target;
  }
};

namespace detail {

struct MatchSide {
  std::vector<Weight> ws;
  std::vector<std::int64_t> mult;
  RatMatrix gram;
  std::vector<std::size_t> order;  // by (norm, coordinates)
  std::vector<int> profile;        // class id of each row profile
};

inline MatchSide match_side(const FormalCharacter& fc) {
  MatchSide s;
  s.ws = fc.distinct_weights();
  for (const Weight& w : s.ws) s.mult.push_back(fc.multiplicity(w));
  s.gram = span_gram(fc, s.ws);
  s.order.resize(s.ws.size());
  for (std::size_t i = 0; i < s.order.size(); ++i) s.order[i] = i;
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](std::size_t a, std::size_t b) { return s.gram(a, a) < s.gram(b, b); });
  return s;
}

using Profile = std::pair<std::int64_t, std::vector<std::pair<Rational, std::int64_t>>>;

inline Profile row_profile(const MatchSide& s, std::size_t a) {
  Profile p{s.mult[a], {}};
  for (std::size_t b = 0; b < s.ws.size(); ++b) p.second.emplace_back(s.gram(a, b), s.mult[b]);
  std::sort(p.second.begin(), p.second.end());
  return p;
}

// Extends the columns (independent vectors of length n) to an invertible
// matrix with unit vectors.
inline RatMatrix complete_basis(const std::vector<RatVector>& cols, std::size_t n) {
  std::vector<Weight> cand;
  for (const auto& c : cols) {
    Weight w = Weight::zero(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>(boost::multiprecision::numerator(c[i]));
    cand.push_back(w);
  }
  for (std::size_t i = 0; i < n; ++i) {
    Weight e = Weight::zero(n);
    e[i] = 1;
    cand.push_back(e);
  }
  std::vector<std::size_t> order(cand.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  SpanBasis sb = span_basis(cand, order);
  RatMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cand[sb.basis[j]][i];
  return m;
}

}  // namespace detail

/// A linear isomorphism of weight spaces mapping fc1's weight multiset onto
/// fc2's, if one exists. The search is complete: it backtracks over images
/// of a basis drawn from fc1's weights (taken in order of norm, then
/// coordinates), pruning by multiplicity, norm, row profile of the Gram
/// matrix and consistency with the images chosen so far.
inline std::optional<CharIsomorphism> same_formal_character(const FormalCharacter& fc1,
                                                            const FormalCharacter& fc2) {
  if (fc1.size() != fc2.size() || fc1.algebra().rank() != fc2.algebra().rank() ||
      fc1.num_distinct() != fc2.num_distinct())
    return std::nullopt;
  const std::size_t n = fc1.algebra().rank();
  detail::MatchSide s = detail::match_side(fc1), t = detail::match_side(fc2);

  std::map<detail::Profile, int> ids;
  auto id_of = [&](const detail::MatchSide& side, std::size_t a) {
    auto [it, fresh] = ids.emplace(detail::row_profile(side, a), int(ids.size()));
    return it->second;
  };
  for (std::size_t a = 0; a < s.ws.size(); ++a) s.profile.push_back(id_of(s, a));
  for (std::size_t a = 0; a < t.ws.size(); ++a) t.profile.push_back(id_of(t, a));
  {
    auto p1 = s.profile, p2 = t.profile;
    std::sort(p1.begin(), p1.end());
    std::sort(p2.begin(), p2.end());
    if (p1 != p2) return std::nullopt;
  }

  detail::SpanBasis sb = detail::span_basis(s.ws, s.order);
  const std::size_t r = sb.basis.size();
  std::vector<RatVector> coords;
  for (const Weight& w : s.ws) coords.push_back(sb.coords(w));
  std::map<Weight, std::size_t> t_index;
  for (std::size_t a = 0; a < t.ws.size(); ++a) t_index.emplace(t.ws[a], a);

  std::vector<std::size_t> image(r);
  std::vector<char> used(t.ws.size(), 0);

  auto full_map_ok = [&]() {
    for (std::size_t a = 0; a < s.ws.size(); ++a) {
      Weight img = Weight::zero(n);
      for (std::size_t i = 0; i < n; ++i) {
        Rational v = 0;
        for (std::size_t k = 0; k < r; ++k) v += coords[a][k] * t.ws[image[k]][i];
        if (!is_integer(v)) return false;
        img[i] = static_cast<int>(boost::multiprecision::numerator(v));
      }
      auto it = t_index.find(img);
      if (it == t_index.end() || t.mult[it->second] != s.mult[a]) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t slot) -> bool {
    if (slot == r) return full_map_ok();
    const std::size_t src = sb.basis[slot];
    for (std::size_t cand : t.order) {
      if (used[cand] || t.profile[cand] != s.profile[src] || t.gram(cand, cand) != s.gram(src, src)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < slot && ok; ++k)
        ok = t.gram(cand, image[k]) == s.gram(src, sb.basis[k]);
      if (!ok) continue;
      image[slot] = cand;
      used[cand] = 1;
      if (search(slot + 1)) return true;
      used[cand] = 0;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;

  std::vector<RatVector> src_cols, dst_cols;
  for (std::size_t k = 0; k < r; ++k) {
    src_cols.emplace_back(s.ws[sb.basis[k]].coords.begin(), s.ws[sb.basis[k]].coords.end());
    dst_cols.emplace_back(t.ws[image[k]].coords.begin(), t.ws[image[k]].coords.end());
  }
  RatMatrix b = detail::complete_basis(src_cols, n);
  RatMatrix c = detail::complete_basis(dst_cols, n);
  CharIsomorphism iso{fc1, fc2, c * inverse(b)};
  if (!iso.verify()) throw Error("same_formal_character: internal witness check failed");
  return iso;
}

struct TypeACountReport {
  std::map<int, int> counts1, counts2;  // a_n: number of A_n factors
  std::vector<std::string> violations;
  bool consistent() const { return violations.empty(); }
};

/// Compares the numbers of A_n factors of two all-type-A algebras: a_n must
/// agree for n = 6 and n >= 9, and a_4 must agree mod 2.
inline TypeACountReport type_a_count_report(const SemisimpleAlgebra& alg1, const SemisimpleAlgebra& alg2) {
  TypeACountReport rep;
  for (auto [alg, counts] : {std::pair{&alg1, &rep.counts1}, std::pair{&alg2, &rep.counts2}})
    for (const auto& t : alg->factors()) {
      if (t.family() != Family::A) throw PreconditionError("type_a_count_report: factor " + t.name() + " is not of type A");
      ++(*counts)[t.rank()];
    }
  auto get = [](const std::map<int, int>& m, int n) {
    auto it = m.find(n);
    return it == m.end() ? 0 : it->second;
  };
  std::set<int> ns;
  for (const auto& [n, c] : rep.counts1) ns.insert(n);
  for (const auto& [n, c] : rep.counts2) ns.insert(n);
  for (int n : ns) {
    int x = get(rep.counts1, n), y = get(rep.counts2, n);
    if ((n == 6 || n >= 9) && x != y)
      rep.violations.push_back("a_" + std::to_string(n) + " differs: " + std::to_string(x) + " vs " + std::to_string(y));
  }
  if (get(rep.counts1, 4) % 2 != get(rep.counts2, 4) % 2)
    rep.violations.push_back("a_4 parity differs: " + std::to_string(get(rep.counts1, 4)) + " vs " +
                             std::to_string(get(rep.counts2, 4)));
  return rep;
}

struct AltPowerStats {
  Rational norm2;
  Rational max_ip;
  Rational min_ip;
};

/// Norm and extreme inner products among the weights of Lambda^a Std of
/// sl_{n+1}, with <e_i, e_j> = delta_ij - 1/(n+1).
inline AltPowerStats alt_power_stats(int n, int a) {
  if (n < 1 || a < 1 || a > n) throw PreconditionError("alt_power_stats needs 1 <= a <= n");
  Rational norm2 = Rational(a * (n + 1 - a), n + 1);
  return {norm2, norm2 - 1, norm2 - std::min(a, n + 1 - a)};
}

struct MaxNormReport {
  std::vector<Weight> weights;  // distinct weights of maximal norm
  Rational norm2;
  bool spans = false;
  /// Whether #W_max >= rank + 1, with equality only for a simple algebra,
  /// when the maximal weights span. Absent unless the algebra is all type A.
  std::optional<bool> bound_ok;
};

inline MaxNormReport max_norm_weights(const FormalCharacter& fc) {
  BilinearForm b = char_inner_product(fc);
  MaxNormReport rep;
  for (const auto& [w, m] : fc.multiplicities()) {
    Rational q = b.norm2(w);
    if (rep.weights.empty() || q > rep.norm2) {
      rep.weights = {w};
      rep.norm2 = q;
    } else if (q == rep.norm2) {
      rep.weights.push_back(w);
    }
  }
  const std::size_t r = fc.algebra().rank();
  RatMatrix m(rep.weights.size(), r);
  for (std::size_t i = 0; i < rep.weights.size(); ++i)
    for (std::size_t j = 0; j < r; ++j) m(i, j) = rep.weights[i][j];
  rep.spans = rank(m) == r;
  if (fc.algebra().all_type_a()) {
    const std::size_t sz = rep.weights.size();
    rep.bound_ok = !rep.spans || sz > r + 1 || (sz == r + 1 && fc.algebra().num_factors() == 1);
  }
  return rep;
}

/// The multiset { w + c(w) } over the weights w of a character stable under
/// the involution c, recorded in the full weight lattice.
struct ConjugationMultiset {
  FormalCharacter base;
  LatticeInvolution involution;
  std::map<Weight, std::int64_t> sums;

  std::int64_t multiplicity(const Weight& w) const {
    auto it = sums.find(w);
    return it == sums.end() ? 0 : it->second;
  }
  std::int64_t size() const {
    std::int64_t s = 0;
    for (const auto& [w, m] : sums) s += m;
    return s;
  }
};

inline ConjugationMultiset conjugation_sums(const FormalCharacter& fc, const LatticeInvolution& inv) {
  if (inv.matrix.rows() != fc.algebra().rank())
    throw DimensionMismatchError("involution size differs from the algebra rank");
  if (!(fc.transformed(inv) == fc)) throw PreconditionError("involution does not stabilize the character");
  ConjugationMultiset out{fc, inv, {}};
  for (const auto& [w, m] : fc.multiplicities()) out.sums[w + inv(w)] += m;
  return out;
}

/// Whether w = -c(w) for some weight w; requires w -> -c(w) to permute the
/// multiset.
inline bool fixed_point_exists(const FormalCharacter& fc, const LatticeInvolution& inv) {
  if (inv.matrix.rows() != fc.algebra().rank())
    throw DimensionMismatchError("involution size differs from the algebra rank");
  auto s = [&](const Weight& w) { return -inv(w); };
  if (!(fc.transformed(s) == fc)) throw PreconditionError("w -> -c(w) does not permute the character");
  for (const auto& [w, m] : fc.multiplicities())
    if (s(w) == w) return true;
  return false;
}

}  // namespace charlattice
