#pragma once

#include "hecke/partitions.hpp"
#include "hecke/quantum.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hecke {

using NodeTriple = std::array<Node, 3>;  // (a,i), (a,j), (b,i)

struct ReducibilityReport {
  Partition lambda;
  QuantumProfile profile;
  bool reducible = false;
  std::optional<NodeTriple> witness;
  // The hook criterion is only a theorem for e != 2.
  bool criterion_proven() const { return profile.e && *profile.e != 2; }
};

namespace detail {

// First triple in row-major order of (a,i), then j, then b satisfying `pick`.
template <class Pick>
std::optional<NodeTriple> find_triple(const Partition& lambda, Pick pick) {
  Partition conj = conjugate(lambda);
  for (int a = 1; a <= static_cast<int>(lambda.size()); ++a)
    for (int i = 1; i <= lambda[static_cast<std::size_t>(a - 1)]; ++i) {
      int hai = hook_length(lambda, {a, i});
      for (int j = 1; j <= lambda[static_cast<std::size_t>(a - 1)]; ++j) {
        if (j == i) continue;
        int haj = hook_length(lambda, {a, j});
        for (int b = 1; b <= conj[static_cast<std::size_t>(i - 1)]; ++b) {
          if (b == a) continue;
          if (pick(hai, haj, hook_length(lambda, {b, i}))) return NodeTriple{Node{a, i}, Node{a, j}, Node{b, i}};
        }
      }
    }
  return std::nullopt;
}

}  // namespace detail

inline ReducibilityReport is_ep_reducible(const Partition& lambda, const QuantumProfile& prof) {
  require_partition(lambda, "lambda");
  require(prof.finite(), "reducibility needs a finite quantum characteristic");
  const int e = *prof.e, p = prof.p;
  ReducibilityReport r{lambda, prof, false, std::nullopt};
  r.witness = detail::find_triple(lambda, [&](int hai, int haj, int hbi) {
    int v = nu_ep(e, p, hai);
    return v > 0 && nu_ep(e, p, haj) != v && nu_ep(e, p, hbi) != v;
  });
  r.reducible = r.witness.has_value();
  return r;
}

// Triple with e | h_ai, e !| h_aj, e !| h_bi: a sufficient witness for e != 2.
inline std::optional<NodeTriple> irredone_witness(const Partition& lambda, const QuantumProfile& prof) {
  require_partition(lambda, "lambda");
  require(prof.finite(), "reducibility needs a finite quantum characteristic");
  const int e = *prof.e;
  return detail::find_triple(lambda, [e](int hai, int haj, int hbi) { return hai % e == 0 && haj % e != 0 && hbi % e != 0; });
}

inline std::vector<ReducibilityReport> classify_range(int n, const QuantumProfile& prof) {
  std::vector<ReducibilityReport> out;
  for (const Partition& lambda : partitions_of(n)) out.push_back(is_ep_reducible(lambda, prof));
  return out;
}

inline std::string to_string(const NodeTriple& t) {
  std::string s;
  for (std::size_t k = 0; k < 3; ++k)
    s += (k ? "," : "") + std::string("(") + std::to_string(t[k].row) + "," + std::to_string(t[k].col) + ")";
  return s;
}

}  // namespace hecke
