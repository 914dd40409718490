#pragma once

#include "hecke/errors.hpp"
#include "hecke/partitions.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

// Permutation of {1..n} in one-line notation: image(k) = k w. Products compose
// left to right, matching the right action on tableaux: k (v w) = (k v) w.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size() + 1, false);
    for (int v : img_) {
      require(v >= 1 && v <= static_cast<int>(img_.size()) && !seen[static_cast<std::size_t>(v)],
              "not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  static Permutation identity(int n) {
    Permutation p;
    p.img_.resize(static_cast<std::size_t>(n));
    std::iota(p.img_.begin(), p.img_.end(), 1);
    return p;
  }
  // s_i = (i, i+1)
  static Permutation simple(int n, int i) {
    require(i >= 1 && i < n, "simple transposition index out of range");
    Permutation p = identity(n);
    std::swap(p.img_[static_cast<std::size_t>(i - 1)], p.img_[static_cast<std::size_t>(i)]);
    return p;
  }
  // Product of simple transpositions s_{w[0]} s_{w[1]} ...
  static Permutation from_word(int n, const std::vector<int>& word) {
    Permutation p = identity(n);
    for (int i : word) p = p.times_simple(i);
    return p;
  }

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int k) const { return img_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (std::size_t k = 0; k < img_.size(); ++k) r.img_[static_cast<std::size_t>(img_[k] - 1)] = static_cast<int>(k) + 1;
    return r;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    require(a.n() == b.n(), "permutations of different degrees");
    Permutation r;
    r.img_.resize(a.img_.size());
    for (std::size_t k = 0; k < a.img_.size(); ++k) r.img_[k] = b(a.img_[k]);
    return r;
  }

  // w s_i: the values i and i+1 trade places in the one-line array.
  Permutation times_simple(int i) const {
    require(i >= 1 && i < n(), "simple transposition index out of range");
    Permutation r = *this;
    for (int& v : r.img_) {
      if (v == i) {
        v = i + 1;
      } else if (v == i + 1) {
        v = i;
      }
    }
    return r;
  }

  int position_of(int value) const {
    for (std::size_t k = 0; k < img_.size(); ++k)
      if (img_[k] == value) return static_cast<int>(k) + 1;
    return 0;
  }

  // l(w s_i) < l(w)  <=>  i w^{-1} > (i+1) w^{-1}
  bool is_right_descent(int i) const { return position_of(i) > position_of(i + 1); }

  int length() const {
    int inv = 0;
    for (std::size_t a = 0; a < img_.size(); ++a)
      for (std::size_t b = a + 1; b < img_.size(); ++b)
        if (img_[a] > img_[b]) ++inv;
    return inv;
  }

  // Reduced word (i_1..i_k) with w = s_{i_1} ... s_{i_k}, found by peeling off
  // right descents (bubble sort).
  std::vector<int> reduced_word() const {
    std::vector<int> word;
    Permutation w = *this;
    while (true) {
      int found = 0;
      for (int i = 1; i < n(); ++i)
        if (w.is_right_descent(i)) {
          found = i;
          break;
        }
      if (!found) break;
      word.push_back(found);
      w = w.times_simple(found);
    }
    std::reverse(word.begin(), word.end());
    return word;
  }

  bool is_identity() const {
    for (std::size_t k = 0; k < img_.size(); ++k)
      if (img_[k] != static_cast<int>(k) + 1) return false;
    return true;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t k = 0; k < img_.size(); ++k) out += (k ? "," : "") + std::to_string(img_[k]);
    return out + "]";
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.images()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

// Tableau as a list of rows (rows may be empty when the shape is a composition
// with zero parts).
struct Tableau {
  std::vector<std::vector<int>> rows;

  Composition shape() const {
    Composition s;
    for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
    return s;
  }
  int size() const {
    int n = 0;
    for (const auto& r : rows) n += static_cast<int>(r.size());
    return n;
  }
  int at(int i, int j) const { return rows.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(j - 1)); }
  // Entry multiplicities for values 1..len.
  Composition type(int len) const {
    Composition t(static_cast<std::size_t>(len), 0);
    for (const auto& r : rows)
      for (int v : r) {
        require(v >= 1 && v <= len, "tableau entry out of range for its type");
        ++t[static_cast<std::size_t>(v - 1)];
      }
    return t;
  }
  std::vector<int> reading_word() const {
    std::vector<int> w;
    for (const auto& r : rows) w.insert(w.end(), r.begin(), r.end());
    return w;
  }
  bool is_row_standard() const {
    for (const auto& r : rows)
      for (std::size_t j = 1; j < r.size(); ++j)
        if (r[j] < r[j - 1]) return false;
    return true;
  }
  bool is_semistandard() const {
    if (!is_row_standard()) return false;
    for (std::size_t i = 1; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        if (j < rows[i - 1].size() && rows[i][j] <= rows[i - 1][j]) return false;
    return true;
  }
  // Right action of a permutation on the entries.
  Tableau act(const Permutation& w) const {
    Tableau t = *this;
    for (auto& r : t.rows)
      for (int& v : r) v = w(v);
    return t;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out += i ? ",[" : "[";
      for (std::size_t j = 0; j < rows[i].size(); ++j) out += (j ? "," : "") + std::to_string(rows[i][j]);
      out += "]";
    }
    return out + "]";
  }

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;
};

// Parses "[[1,1,2],[3]]".
inline Tableau parse_tableau(std::string_view s) {
  Tableau t;
  std::size_t i = 0;
  auto skip = [&]() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= s.size() || s[i] != c)
      throw DomainError("malformed tableau '" + std::string(s) + "' at position " + std::to_string(i));
    ++i;
  };
  expect('[');
  skip();
  if (i < s.size() && s[i] == ']') return t;
  while (true) {
    expect('[');
    std::vector<int> row;
    skip();
    if (i < s.size() && s[i] == ']') {
      ++i;
    } else {
      while (true) {
        skip();
        std::size_t st = i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        if (st == i) throw DomainError("malformed tableau '" + std::string(s) + "' at position " + std::to_string(i));
        row.push_back(std::stoi(std::string(s.substr(st, i - st))));
        skip();
        if (i < s.size() && s[i] == ',') {
          ++i;
          continue;
        }
        expect(']');
        break;
      }
    }
    t.rows.push_back(std::move(row));
    skip();
    if (i < s.size() && s[i] == ',') {
      ++i;
      continue;
    }
    expect(']');
    break;
  }
  skip();
  require(i == s.size(), "trailing characters after tableau");
  return t;
}

// t^lambda: 1..n filled along rows.
inline Tableau t_row(const Composition& lambda) {
  require_composition(lambda);
  Tableau t;
  int k = 1;
  for (int part : lambda) {
    std::vector<int> row;
    for (int j = 0; j < part; ++j) row.push_back(k++);
    t.rows.push_back(row);
  }
  return t;
}

// t_lambda: 1..n filled down the columns.
inline Tableau t_col(const Partition& lambda) {
  require_partition(lambda);
  Tableau t;
  for (int part : lambda) t.rows.emplace_back(static_cast<std::size_t>(part), 0);
  int k = 1;
  for (int j = 0; j < (lambda.empty() ? 0 : lambda[0]); ++j)
    for (std::size_t i = 0; i < lambda.size(); ++i)
      if (j < lambda[i]) t.rows[i][static_cast<std::size_t>(j)] = k++;
  return t;
}

// w_lambda with t^lambda w_lambda = t_lambda.
inline Permutation w_lambda(const Partition& lambda) {
  Tableau a = t_row(lambda), b = t_col(lambda);
  std::vector<int> img(static_cast<std::size_t>(size(lambda)));
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    for (std::size_t j = 0; j < a.rows[i].size(); ++j) img[static_cast<std::size_t>(a.rows[i][j] - 1)] = b.rows[i][j];
  return Permutation(img);
}

// Row-standard (or semistandard) tableaux of shape lambda and type mu, in
// lexicographic order of reading words.
inline std::vector<Tableau> enumerate_tableaux(const Composition& lambda, const Composition& mu, bool semistandard) {
  require_composition(lambda, "shape");
  require_composition(mu, "type");
  require(size(lambda) == size(mu), "shape and type must have the same size");
  std::vector<Tableau> out;
  Tableau cur;
  for (int part : lambda) cur.rows.emplace_back(static_cast<std::size_t>(part), 0);
  Composition remaining = mu;
  int values = static_cast<int>(mu.size());
  // Fill node by node in row-major order; values tried in increasing order so
  // the output is already lexicographic.
  std::vector<Node> nds = nodes(lambda);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == nds.size()) {
      out.push_back(cur);
      return;
    }
    auto [i, j] = nds[k];
    auto& row = cur.rows[static_cast<std::size_t>(i - 1)];
    int lo = j > 1 ? row[static_cast<std::size_t>(j - 2)] : 1;
    if (semistandard && i > 1 && j <= static_cast<int>(cur.rows[static_cast<std::size_t>(i - 2)].size()))
      lo = std::max(lo, cur.rows[static_cast<std::size_t>(i - 2)][static_cast<std::size_t>(j - 1)] + 1);
    for (int v = lo; v <= values; ++v) {
      if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
      --remaining[static_cast<std::size_t>(v - 1)];
      row[static_cast<std::size_t>(j - 1)] = v;
      self(self, k + 1);
      ++remaining[static_cast<std::size_t>(v - 1)];
    }
  };
  rec(rec, 0);
  return out;
}

inline std::vector<Tableau> enumerate_row_standard(const Composition& lambda, const Composition& mu) {
  return enumerate_tableaux(lambda, mu, false);
}

inline std::vector<Tableau> enumerate_semistandard(const Composition& lambda, const Composition& mu) {
  return enumerate_tableaux(lambda, mu, true);
}

// Standard lambda-tableaux are the semistandard ones of type (1^n).
inline std::size_t count_standard_tableaux(const Partition& lambda) {
  require_partition(lambda);
  // hook length formula, checked in tests against enumeration
  int n = size(lambda);
  long double r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  for (const Node& nd : nodes(lambda)) r /= hook_length(lambda, nd);
  return static_cast<std::size_t>(r + 0.5L);
}

// The permutation d whose row-standard tableau t^mu d has k in row word[k-1].
inline Permutation perm_of_row_word(const std::vector<int>& word, const Composition& mu) {
  std::vector<int> start(mu.size() + 1, 1);
  for (std::size_t r = 0; r < mu.size(); ++r) start[r + 1] = start[r] + mu[r];
  std::vector<int> next(start.begin(), start.end() - 1);
  std::vector<int> img(word.size());
  for (std::size_t k = 0; k < word.size(); ++k) {
    int r = word[k];
    require(r >= 1 && r <= static_cast<int>(mu.size()), "row label out of range");
    img[static_cast<std::size_t>(next[static_cast<std::size_t>(r - 1)]++ - 1)] = static_cast<int>(k) + 1;
  }
  return Permutation(img);
}

// A -> 1_A: the entry i of t^mu 1_A lies in row r iff the place of i in
// t^lambda holds r in A.
inline Permutation perm_of_tableau(const Tableau& A, const Composition& mu) {
  Composition type = A.type(static_cast<int>(mu.size()));
  require(type == mu, "tableau does not have the declared type");
  return perm_of_row_word(A.reading_word(), mu);
}

// All tableaux with the same row contents as A, lexicographic in reading words.
inline std::vector<Tableau> row_equiv_class(const Tableau& A) {
  std::vector<Tableau> out;
  Tableau cur = A;
  for (auto& r : cur.rows) std::sort(r.begin(), r.end());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == cur.rows.size()) {
      out.push_back(cur);
      return;
    }
    auto& row = cur.rows[i];
    std::sort(row.begin(), row.end());
    do {
      self(self, i + 1);
    } while (std::next_permutation(row.begin(), row.end()));
  };
  rec(rec, 0);
  return out;
}

// Row words (k -> row of k in t^lambda d) of all d in D_lambda, lexicographic.
inline std::vector<std::vector<int>> coset_row_words(const Composition& lambda) {
  std::vector<int> word;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (int j = 0; j < lambda[r]; ++j) word.push_back(static_cast<int>(r) + 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

// D_lambda: distinguished right coset representatives of S_lambda.
inline std::vector<Permutation> coset_reps(const Composition& lambda) {
  require_composition(lambda);
  std::vector<Permutation> out;
  for (const auto& w : coset_row_words(lambda)) out.push_back(perm_of_row_word(w, lambda));
  return out;
}

// ---- one-node codes (mu : i_1, ..., i_s) ----

// For mu = (mu_1, ..., mu_s, 1) and lambda = (mu_1+1, mu_2, ..., mu_s), a tableau
// of T_0(lambda, mu) is determined by the last entries i_a = A(a, lambda_a).
class OneNodeCode {
 public:
  OneNodeCode(Partition base, std::vector<int> code) : base_(std::move(base)), code_(std::move(code)) {
    require(is_one_node_base(base_), "one-node base must be a partition (mu_1,...,mu_s,1) with s >= 1");
    require(static_cast<int>(code_.size()) == s(), "code length must be s");
    std::vector<int> sorted = code_;
    std::sort(sorted.begin(), sorted.end());
    for (int a = 0; a < s(); ++a) require(sorted[static_cast<std::size_t>(a)] == a + 2, "code entries must be {2,...,s+1}");
    for (int a = 1; a <= s(); ++a) require(i(a) >= a, "code needs i_a >= a");
  }

  static bool is_one_node_base(const Partition& mu) {
    return mu.size() >= 2 && is_partition(mu) && mu.back() == 1;
  }

  static Partition source_of(const Partition& mu) {
    require(is_one_node_base(mu), "one-node base must be a partition (mu_1,...,mu_s,1) with s >= 1");
    Partition lambda(mu.begin(), mu.end() - 1);
    lambda[0] += 1;
    return lambda;
  }

  static OneNodeCode encode(const Tableau& A, const Partition& mu) {
    Partition lambda = source_of(mu);
    require(A.shape() == lambda, "tableau shape does not match the one-node source");
    std::vector<int> code;
    for (std::size_t a = 0; a < lambda.size(); ++a) code.push_back(A.rows[a].back());
    OneNodeCode c(mu, code);
    require(c.decode() == A, "tableau is not of one-node form");
    return c;
  }

  Tableau decode() const {
    Partition lambda = source();
    Tableau t;
    for (int a = 1; a <= s(); ++a) {
      std::vector<int> row(static_cast<std::size_t>(lambda[static_cast<std::size_t>(a - 1)] - 1), a);
      row.push_back(i(a));
      t.rows.push_back(row);
    }
    return t;
  }

  const Partition& base() const { return base_; }
  Partition source() const { return source_of(base_); }
  const std::vector<int>& code() const { return code_; }
  int s() const { return static_cast<int>(base_.size()) - 1; }
  int i(int a) const { return code_.at(static_cast<std::size_t>(a - 1)); }

  // r(a'): the position a with i_a = a', for 2 <= a' <= s+1.
  int r(int a_prime) const {
    for (int a = 1; a <= s(); ++a)
      if (i(a) == a_prime) return a;
    throw DomainError("r(a') needs 2 <= a' <= s+1");
  }

  // r-check(d): the position r < d with i_r = d, when it exists.
  int r_check(int d) const {
    for (int a = 1; a < d; ++a)
      if (i(a) == d) return a;
    throw DomainError("no position r < d with i_r = d");
  }

  bool is_semistandard() const {
    Partition lambda = source();
    for (int a = 1; a < s(); ++a)
      if (lambda[static_cast<std::size_t>(a - 1)] == lambda[static_cast<std::size_t>(a)] && i(a) >= i(a + 1)) return false;
    return true;
  }

  std::string to_string() const {
    std::string out = "mu:";
    for (std::size_t k = 0; k < code_.size(); ++k) out += (k ? "," : "") + std::to_string(code_[k]);
    return out + "|base=" + hecke::to_string(base_);
  }

  static OneNodeCode parse(std::string_view text) {
    require(text.substr(0, 3) == "mu:", "one-node code must start with 'mu:'");
    auto bar = text.find("|base=");
    require(bar != std::string_view::npos, "one-node code needs '|base='");
    return OneNodeCode(parse_partition(text.substr(bar + 6)), parse_composition(text.substr(3, bar - 3)));
  }

  friend bool operator==(const OneNodeCode&, const OneNodeCode&) = default;

 private:
  Partition base_;
  std::vector<int> code_;
};

// All semistandard codes for a one-node base, in lexicographic code order.
inline std::vector<OneNodeCode> one_node_codes(const Partition& mu) {
  Partition lambda = OneNodeCode::source_of(mu);
  std::vector<OneNodeCode> out;
  for (const Tableau& A : enumerate_semistandard(lambda, mu)) out.push_back(OneNodeCode::encode(A, mu));
  std::sort(out.begin(), out.end(), [](const OneNodeCode& a, const OneNodeCode& b) { return a.code() < b.code(); });
  return out;
}

}  // namespace hecke
