#pragma once

// Subalgebras of a product of simple algebras that project onto every
// factor: a partition of the factors into blocks of equal type, each block
// embedded diagonally.

#include <functional>
#include <string>
#include <vector>

#include "charlattice/rootsys.hpp"

namespace charlattice {

struct GoursatSpec {
  std::vector<SimpleType> factors;
  std::vector<std::vector<std::size_t>> blocks;  // 0-based factor indices

  void validate() const {
    std::vector<int> seen(factors.size(), 0);
    for (const auto& b : blocks) {
      if (b.empty()) throw PreconditionError("empty block");
      for (std::size_t i : b) {
        if (i >= factors.size()) throw PreconditionError("block index out of range");
        if (seen[i]++) throw PreconditionError("factor " + std::to_string(i) + " appears in two blocks");
        if (factors[i] != factors[b.front()])
          throw PreconditionError("block mixes " + factors[i].name() + " and " + factors[b.front()].name());
      }
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (!seen[i]) throw PreconditionError("factor " + std::to_string(i) + " is in no block");
  }

  bool all_singletons() const {
    for (const auto& b : blocks)
      if (b.size() != 1) return false;
    return true;
  }
};

inline std::size_t goursat_rank(const GoursatSpec& spec) {
  spec.validate();
  std::size_t r = 0;
  for (const auto& b : spec.blocks) r += std::size_t(spec.factors[b.front()].rank());
  return r;
}

/// Every partition of the factors into blocks of equal type.
inline std::vector<GoursatSpec> goursat_specs(const std::vector<SimpleType>& factors) {
  std::vector<GoursatSpec> out;
  GoursatSpec cur{factors, {}};
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == factors.size()) {
      out.push_back(cur);
      return;
    }
    for (std::size_t b = 0; b < cur.blocks.size(); ++b)
      if (factors[cur.blocks[b].front()] == factors[i]) {
        cur.blocks[b].push_back(i);
        rec(i + 1);
        cur.blocks[b].pop_back();
      }
    cur.blocks.push_back({i});
    rec(i + 1);
    cur.blocks.pop_back();
  };
  rec(0);
  return out;
}

struct GoursatReport {
  std::size_t specs_checked = 0;
  std::size_t full_rank = 0;
  std::vector<GoursatSpec> counterexamples;
  bool holds() const { return counterexamples.empty(); }
};

/// Checks over all specs that the rank is the full rank exactly when every
/// block is a singleton.
inline GoursatReport verify_goursat_lemma(const std::vector<SimpleType>& factors) {
  if (factors.size() > 6) throw ResourceLimitError("at most 6 factors are enumerated");
  GoursatReport rep;
  for (const auto& t : factors) rep.full_rank += std::size_t(t.rank());
  for (const auto& spec : goursat_specs(factors)) {
    ++rep.specs_checked;
    if ((goursat_rank(spec) == rep.full_rank) != spec.all_singletons()) rep.counterexamples.push_back(spec);
  }
  return rep;
}

}  // namespace charlattice
