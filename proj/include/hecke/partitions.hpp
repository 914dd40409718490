#pragma once

#include "hecke/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hecke {

// A composition is a finite sequence of nonnegative integers; zero parts are
// kept (row d+1 of nu^{d,0} is empty but still indexed). A partition is a
// composition with positive, weakly decreasing parts. Inputs are validated,
// never sorted.
using Composition = std::vector<int>;
using Partition = std::vector<int>;

struct Node {
  int row = 1;  // 1-based
  int col = 1;  // 1-based
  bool operator==(const Node&) const = default;
  auto operator<=>(const Node&) const = default;
};

inline int size(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0); }

inline bool is_composition(const Composition& c) {
  return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

inline bool is_partition(const Composition& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] <= 0) return false;
    if (i > 0 && c[i] > c[i - 1]) return false;
  }
  return true;
}

inline std::string to_string(const Composition& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

inline void require_composition(const Composition& c, std::string_view what = "composition") {
  require(is_composition(c), std::string(what) + " (" + to_string(c) + ") has a negative part");
}

inline void require_partition(const Composition& c, std::string_view what = "partition") {
  require(is_partition(c), std::string(what) + " (" + to_string(c) + ") is not a partition");
}

// Parses "3,2,1" (whitespace tolerated). An empty string is the empty partition.
inline Composition parse_composition(std::string_view s) {
  Composition out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) throw DomainError("empty part in '" + std::string(s) + "'");
    for (char c : cur)
      if (c < '0' || c > '9') throw DomainError("bad part '" + cur + "' in '" + std::string(s) + "'");
    out.push_back(std::stoi(cur));
    cur.clear();
  };
  bool any = false;
  for (char c : s) {
    if (c == ' ' || c == '\t') continue;
    any = true;
    if (c == ',') {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  if (any) flush();
  return out;
}

inline Partition parse_partition(std::string_view s) {
  Partition p = parse_composition(s);
  require_partition(p);
  return p;
}

inline Partition conjugate(const Partition& lambda) {
  require_partition(lambda);
  Partition out;
  if (lambda.empty()) return out;
  for (int j = 1; j <= lambda[0]; ++j) {
    int count = 0;
    for (int part : lambda)
      if (part >= j) ++count;
    out.push_back(count);
  }
  return out;
}

// Dominance on compositions of the same integer: all partial sums of lambda are
// at least those of nu.
inline bool dominates(const Composition& lambda, const Composition& nu) {
  require_composition(lambda);
  require_composition(nu);
  require(size(lambda) == size(nu), "dominance needs compositions of the same integer");
  int a = 0, b = 0;
  std::size_t len = std::max(lambda.size(), nu.size());
  for (std::size_t i = 0; i < len; ++i) {
    a += i < lambda.size() ? lambda[i] : 0;
    b += i < nu.size() ? nu[i] : 0;
    if (a < b) return false;
  }
  return true;
}

inline bool in_diagram(const Composition& shape, Node nd) {
  return nd.row >= 1 && nd.row <= static_cast<int>(shape.size()) && nd.col >= 1 &&
         nd.col <= shape[static_cast<std::size_t>(nd.row - 1)];
}

// All nodes (i,j) of the diagram in row-major order.
inline std::vector<Node> nodes(const Composition& shape) {
  std::vector<Node> out;
  for (std::size_t i = 0; i < shape.size(); ++i)
    for (int j = 1; j <= shape[i]; ++j) out.push_back({static_cast<int>(i) + 1, j});
  return out;
}

inline int hook_length(const Partition& lambda, Node nd) {
  require_partition(lambda);
  require(in_diagram(lambda, nd), "node outside the diagram");
  Partition conj = conjugate(lambda);
  return lambda[static_cast<std::size_t>(nd.row - 1)] - nd.row + conj[static_cast<std::size_t>(nd.col - 1)] - nd.col + 1;
}

// nu^{d,t}: part d becomes mu_d + mu_{d+1} - t, part d+1 becomes t.
inline Composition nu_composition(const Composition& mu, int d, int t) {
  require_composition(mu);
  require(d >= 1 && d < static_cast<int>(mu.size()), "nu_composition needs 1 <= d < length(mu)");
  int next = mu[static_cast<std::size_t>(d)];
  require(t >= 0 && t < next, "nu_composition needs 0 <= t < mu_{d+1}");
  Composition out = mu;
  out[static_cast<std::size_t>(d - 1)] = mu[static_cast<std::size_t>(d - 1)] + next - t;
  out[static_cast<std::size_t>(d)] = t;
  return out;
}

inline std::pair<Partition, Partition> trim_first_row(const Partition& lambda, const Partition& mu) {
  require_partition(lambda);
  require_partition(mu);
  require(!lambda.empty() && !mu.empty() && lambda[0] == mu[0], "row removal needs lambda_1 = mu_1");
  return {Partition(lambda.begin() + 1, lambda.end()), Partition(mu.begin() + 1, mu.end())};
}

inline std::pair<Partition, Partition> trim_first_column(const Partition& lambda, const Partition& mu) {
  require_partition(lambda);
  require_partition(mu);
  require(!lambda.empty() && lambda.size() == mu.size(), "column removal needs lambda'_1 = mu'_1");
  auto shrink = [](const Partition& p) {
    Partition out;
    for (int part : p)
      if (part > 1) out.push_back(part - 1);
    return out;
  };
  return {shrink(lambda), shrink(mu)};
}

inline bool is_2regular(const Partition& lambda) {
  for (std::size_t i = 1; i < lambda.size(); ++i)
    if (lambda[i] == lambda[i - 1]) return false;
  return true;
}

// All partitions of n in reverse lexicographic order ((n) first).
inline std::vector<Partition> partitions_of(int n) {
  require(n >= 0, "partitions_of needs n >= 0");
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace hecke
