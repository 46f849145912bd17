#pragma once

// Equal-rank root subsystems by iterated deletion of nodes from extended
// Dynkin diagrams.
//
// A subsystem is a set of roots of a fixed parent system forming a simple
// system, grouped into irreducible components. Each component is stored in
// Bourbaki order for its type so that coordinates with respect to it mean
// the same thing as for build_root_system(type).

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "charlattice/rootsys.hpp"

namespace charlattice {

struct Subsystem {
  std::shared_ptr<const RootSystem> parent;
  /// Simple roots of the subsystem in the parent's simple-root coordinates,
  /// component by component.
  std::vector<IntVector> selected_roots;
  std::vector<SimpleType> component_types;
  /// Index into selected_roots where each component starts.
  std::vector<std::size_t> component_offsets;

  std::size_t rank() const { return selected_roots.size(); }

  bool all_type_a() const {
    return std::all_of(component_types.begin(), component_types.end(),
                       [](const SimpleType& t) { return t.family() == Family::A; });
  }

  /// Component types joined with '+', largest rank first.
  std::string signature() const {
    std::vector<SimpleType> ts = component_types;
    std::sort(ts.begin(), ts.end(), [](const SimpleType& a, const SimpleType& b) {
      return a.rank() != b.rank() ? a.rank() > b.rank() : a.family() < b.family();
    });
    std::string s;
    for (const auto& t : ts) s += (s.empty() ? "" : "+") + t.name();
    return s;
  }

  /// Cartan matrix recomputed from the selected roots.
  IntMatrix cartan() const {
    const std::size_t n = rank();
    IntMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        c(i, j) = int(2 * parent->root_pairing(selected_roots[i], selected_roots[j]) /
                      parent->root_pairing(selected_roots[j], selected_roots[j]));
    return c;
  }

  /// Re-expresses a parent weight in the subsystem's fundamental-weight
  /// coordinates (components concatenated).
  Weight restrict(const Weight& w) const {
    parent->check(w);
    Weight r = Weight::zero(rank());
    for (std::size_t j = 0; j < rank(); ++j) r[j] = parent->coroot_pairing(w, selected_roots[j]);
    return r;
  }

  /// The trivial subsystem: the parent's own simple roots.
  static Subsystem identity(const RootSystem& rs) {
    Subsystem s;
    s.parent = std::make_shared<const RootSystem>(rs);
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      IntVector e(rs.rank(), 0);
      e[i] = 1;
      s.selected_roots.push_back(e);
    }
    s.component_types = {rs.type()};
    s.component_offsets = {0};
    return s;
  }
};

namespace detail {

struct Component {
  SimpleType type;
  std::vector<IntVector> roots;  // Bourbaki order
};

// Bourbaki ordering of a connected simple system with Cartan matrix c
// (c(i, j) = <r_i, r_j^vee>) and squared lengths len.
inline Component classify_connected(const std::vector<IntVector>& roots, const IntMatrix& c,
                                    const std::vector<std::int64_t>& len) {
  const std::size_t k = roots.size();
  auto nbrs = [&](std::size_t i) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < k; ++j)
      if (j != i && c(i, j) != 0) out.push_back(j);
    return out;
  };
  auto make = [&](Family f, const std::vector<std::size_t>& order) {
    Component comp{SimpleType(f, int(k)), {}};
    for (std::size_t i : order) comp.roots.push_back(roots[i]);
    return comp;
  };
  if (k == 1) return make(Family::A, {0});

  // Walks a path starting at `start`, away from `from` (if any).
  auto walk = [&](std::size_t start, std::size_t from) {
    std::vector<std::size_t> path{start};
    std::size_t prev = from, cur = start;
    for (;;) {
      std::size_t next = k;
      for (std::size_t j : nbrs(cur))
        if (j != prev) next = j;
      if (next == k) break;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    return path;
  };

  std::size_t branch = k;
  std::vector<std::size_t> ends;
  for (std::size_t i = 0; i < k; ++i) {
    auto d = nbrs(i).size();
    if (d >= 3) branch = i;
    if (d == 1) ends.push_back(i);
  }

  if (branch == k) {
    // A path: A, B, C, F or G.
    std::vector<std::size_t> path = walk(ends.front(), k);
    int multi_at = -1;
    int mult = 1;
    for (std::size_t p = 0; p + 1 < k; ++p) {
      int m = c(path[p], path[p + 1]) * c(path[p + 1], path[p]);
      if (m > 1) {
        multi_at = int(p);
        mult = m;
      }
    }
    if (mult == 1) return make(Family::A, path);
    if (mult == 3) {
      if (len[path[0]] > len[path[1]]) std::reverse(path.begin(), path.end());
      return make(Family::G, path);
    }
    if (k == 4 && multi_at == 1) {
      if (len[path[0]] < len[path[3]]) std::reverse(path.begin(), path.end());
      return make(Family::F, path);
    }
    // Double bond at one end: put that end last.
    if (k == 2 ? len[path[1]] > len[path[0]] : multi_at == 0) std::reverse(path.begin(), path.end());
    const bool last_short = len[path[k - 1]] < len[path[k - 2]];
    if (k == 2 || last_short) return make(Family::B, path);
    return make(Family::C, path);
  }

  // Branched: D or E.
  std::vector<std::vector<std::size_t>> arms;
  for (std::size_t j : nbrs(branch)) arms.push_back(walk(j, branch));
  std::stable_sort(arms.begin(), arms.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  const std::size_t a0 = arms[0].size(), a1 = arms[1].size(), a2 = arms[2].size();
  if (a0 == 1 && a1 == 1) {
    // D_k: long arm from its far end, branch node, then the two leaves.
    std::vector<std::size_t> order(arms[2].rbegin(), arms[2].rend());
    order.push_back(branch);
    order.push_back(arms[0][0]);
    order.push_back(arms[1][0]);
    return make(Family::D, order);
  }
  if (a0 == 1 && a1 == 2 && a2 >= 2 && a2 <= 4) {
    std::vector<std::size_t> order{arms[1][1], arms[0][0], arms[1][0], branch};
    order.insert(order.end(), arms[2].begin(), arms[2].end());
    return make(Family::E, order);
  }
  throw PreconditionError("simple system of non-finite type");
}

// Splits a linearly independent set of roots with pairwise non-positive
// inner products into irreducible components.
inline std::vector<Component> decompose(const RootSystem& rs, const std::vector<IntVector>& roots) {
  const std::size_t n = roots.size();
  IntMatrix c(n, n);
  std::vector<std::int64_t> len(n);
  for (std::size_t j = 0; j < n; ++j) len[j] = rs.root_pairing(roots[j], roots[j]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = int(2 * rs.root_pairing(roots[i], roots[j]) / len[j]);

  std::vector<int> label(n, -1);
  int next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j)
        if (label[j] < 0 && c(i, j) != 0) {
          label[j] = next;
          stack.push_back(j);
        }
    }
    ++next;
  }

  std::vector<Component> out;
  for (int l = 0; l < next; ++l) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (label[i] == l) idx.push_back(i);
    std::vector<IntVector> sub;
    IntMatrix sc(idx.size(), idx.size());
    std::vector<std::int64_t> sl;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      sub.push_back(roots[idx[a]]);
      sl.push_back(len[idx[a]]);
      for (std::size_t b = 0; b < idx.size(); ++b) sc(a, b) = c(idx[a], idx[b]);
    }
    out.push_back(classify_connected(sub, sc, sl));
  }
  return out;
}

inline bool component_before(const Component& a, const Component& b) {
  if (a.type.rank() != b.type.rank()) return a.type.rank() > b.type.rank();
  if (a.type.family() != b.type.family()) return a.type.family() < b.type.family();
  return a.roots < b.roots;
}

inline Subsystem assemble(const std::shared_ptr<const RootSystem>& parent, std::vector<Component> comps) {
  std::sort(comps.begin(), comps.end(), component_before);
  Subsystem s;
  s.parent = parent;
  for (const Component& c : comps) {
    s.component_offsets.push_back(s.selected_roots.size());
    s.component_types.push_back(c.type);
    s.selected_roots.insert(s.selected_roots.end(), c.roots.begin(), c.roots.end());
  }
  return s;
}

inline std::vector<Component> components_of(const Subsystem& s) {
  std::vector<Component> out;
  for (std::size_t c = 0; c < s.component_types.size(); ++c) {
    std::size_t b = s.component_offsets[c];
    std::size_t e = c + 1 < s.component_offsets.size() ? s.component_offsets[c + 1] : s.selected_roots.size();
    out.push_back({s.component_types[c], {s.selected_roots.begin() + long(b), s.selected_roots.begin() + long(e)}});
  }
  return out;
}

}  // namespace detail

/// All equal-rank subsystems reachable by iterated extended-diagram node
/// deletion, one representative per type signature, in discovery order (the
/// full system first).
inline std::vector<Subsystem> equal_rank_subsystems(const RootSystem& rs) {
  auto parent = std::make_shared<const RootSystem>(rs);
  std::vector<Subsystem> out;
  std::set<std::string> seen;
  std::deque<Subsystem> queue;
  Subsystem start = Subsystem::identity(rs);
  start.parent = parent;
  seen.insert(start.signature());
  queue.push_back(start);

  while (!queue.empty()) {
    Subsystem s = std::move(queue.front());
    queue.pop_front();
    const auto comps = detail::components_of(s);
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
      const detail::Component& comp = comps[ci];
      if (comp.type.family() == Family::A) continue;  // deletions give A_n back
      const IntVector coeff = detail::highest_root_coefficients(comp.type);
      IntVector lowest(rs.rank(), 0);
      for (std::size_t k = 0; k < comp.roots.size(); ++k)
        for (std::size_t i = 0; i < rs.rank(); ++i) lowest[i] -= coeff[k] * comp.roots[k][i];
      for (std::size_t drop = 0; drop < comp.roots.size(); ++drop) {
        std::vector<IntVector> ext{lowest};
        for (std::size_t k = 0; k < comp.roots.size(); ++k)
          if (k != drop) ext.push_back(comp.roots[k]);
        std::vector<detail::Component> next = detail::decompose(rs, ext);
        for (std::size_t cj = 0; cj < comps.size(); ++cj)
          if (cj != ci) next.push_back(comps[cj]);
        Subsystem cand = detail::assemble(parent, std::move(next));
        if (seen.insert(cand.signature()).second) queue.push_back(std::move(cand));
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

/// One equal-rank subsystem all of whose components are of type A.
///
/// Among the candidates from equal_rank_subsystems, picks the one with the
/// fewest components, then the lexicographically largest list of component
/// ranks (sorted descending). B3 gives A3, C3 gives A1+A1+A1, E7 gives A7.
inline Subsystem type_a_equal_rank(const RootSystem& rs) {
  auto key = [](const Subsystem& s) {
    std::vector<int> ranks;
    for (const auto& t : s.component_types) ranks.push_back(t.rank());
    std::sort(ranks.rbegin(), ranks.rend());
    return std::make_pair(s.component_types.size(), ranks);
  };
  std::optional<Subsystem> best;
  for (Subsystem& s : equal_rank_subsystems(rs)) {
    if (!s.all_type_a()) continue;
    if (!best) {
      best = std::move(s);
      continue;
    }
    auto kb = key(*best), ks = key(s);
    if (ks.first < kb.first || (ks.first == kb.first && ks.second > kb.second)) best = std::move(s);
  }
  if (!best) throw PreconditionError("no type A equal-rank subsystem found for " + rs.type().name());
  return *best;
}

/// Type-A subsystem of largest total component size for each factor type
/// is what restrict_to_subsystem consumes; this helper returns the chosen
/// subsystem per factor of a semisimple algebra.
inline std::vector<Subsystem> type_a_equal_rank(const std::vector<SimpleType>& factors) {
  std::vector<Subsystem> out;
  for (const auto& t : factors) out.push_back(type_a_equal_rank(RootSystem(t)));
  return out;
}

}  // namespace charlattice
