#pragma once

#include "hecke/fields.hpp"
#include "hecke/partitions.hpp"
#include "hecke/tableaux.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hecke {

// Combinatorial skeleton of M^lambda for a composition lambda: the basis
// x_lambda T_d (d in D_lambda) indexed by row words, where word[k-1] is the row
// of k in the row-standard tableau t^lambda d. Also tabulates how each T_i moves
// basis elements.
class PermutationModule {
 public:
  enum class Step : std::uint8_t { Same, Up, Down };

  static constexpr int kMaxDegree = 12;

  explicit PermutationModule(Composition lambda) : shape_(std::move(lambda)) {
    require_composition(shape_);
    n_ = size(shape_);
    require(n_ <= kMaxDegree, "permutation modules are limited to n <= " + std::to_string(kMaxDegree));
    words_ = coset_row_words(shape_);
    index_.reserve(words_.size());
    for (std::size_t k = 0; k < words_.size(); ++k) index_.emplace(key(words_[k]), static_cast<std::uint32_t>(k));
    int gens = std::max(n_ - 1, 0);
    steps_.resize(words_.size() * static_cast<std::size_t>(gens));
    targets_.resize(words_.size() * static_cast<std::size_t>(gens));
    parent_.assign(words_.size(), 0);
    parent_gen_.assign(words_.size(), 0);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      const auto& w = words_[k];
      for (int i = 1; i < n_; ++i) {
        std::size_t slot = k * static_cast<std::size_t>(gens) + static_cast<std::size_t>(i - 1);
        int a = w[static_cast<std::size_t>(i - 1)], b = w[static_cast<std::size_t>(i)];
        if (a == b) {
          steps_[slot] = Step::Same;
          targets_[slot] = static_cast<std::uint32_t>(k);
          continue;
        }
        auto swapped = w;
        std::swap(swapped[static_cast<std::size_t>(i - 1)], swapped[static_cast<std::size_t>(i)]);
        steps_[slot] = a < b ? Step::Up : Step::Down;
        targets_[slot] = index_.at(key(swapped));
      }
      // canonical parent: undo the largest descent
      for (int i = n_ - 1; i >= 1; --i) {
        if (w[static_cast<std::size_t>(i - 1)] > w[static_cast<std::size_t>(i)]) {
          parent_gen_[k] = i;
          parent_[k] = target(k, i);
          break;
        }
      }
    }
    root_ = index_.at(key(words_.empty() ? std::vector<int>{} : words_.front()));
  }

  const Composition& shape() const { return shape_; }
  int n() const { return n_; }
  std::size_t dim() const { return words_.size(); }
  std::size_t root() const { return root_; }  // t^lambda itself

  const std::vector<int>& word(std::size_t k) const { return words_[k]; }
  std::size_t index_of_word(const std::vector<int>& w) const {
    auto it = index_.find(key(w));
    require(it != index_.end(), "row word is not a basis element of this module");
    return it->second;
  }
  // Index of x T_d for d in D_lambda.
  std::size_t index_of(const Permutation& d) const {
    require(d.n() == n_, "permutation of the wrong degree");
    std::vector<int> rows_of(static_cast<std::size_t>(n_));
    Tableau t = t_row(shape_);
    std::vector<int> row_of_entry(static_cast<std::size_t>(n_) + 1);
    for (std::size_t r = 0; r < t.rows.size(); ++r)
      for (int v : t.rows[r]) row_of_entry[static_cast<std::size_t>(v)] = static_cast<int>(r) + 1;
    Permutation dinv = d.inverse();
    for (int k = 1; k <= n_; ++k) rows_of[static_cast<std::size_t>(k - 1)] = row_of_entry[static_cast<std::size_t>(dinv(k))];
    return index_of_word(rows_of);
  }
  Permutation rep(std::size_t k) const { return perm_of_row_word(words_[k], shape_); }
  Tableau tableau(std::size_t k) const { return t_row(shape_).act(rep(k)); }

  Step step(std::size_t k, int i) const { return steps_[k * static_cast<std::size_t>(n_ - 1) + static_cast<std::size_t>(i - 1)]; }
  std::size_t target(std::size_t k, int i) const {
    return targets_[k * static_cast<std::size_t>(n_ - 1) + static_cast<std::size_t>(i - 1)];
  }
  // Spanning tree of D_lambda by length-increasing steps (root has gen 0).
  std::size_t parent(std::size_t k) const { return parent_[k]; }
  int parent_gen(std::size_t k) const { return parent_gen_[k]; }

 private:
  static std::uint64_t key(const std::vector<int>& w) {
    std::uint64_t h = 0;
    for (int r : w) h = (h << 5) | static_cast<std::uint64_t>(r);
    return h;
  }

  Composition shape_;
  int n_ = 0;
  std::vector<std::vector<int>> words_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<Step> steps_;
  std::vector<std::uint32_t> targets_;
  std::vector<std::uint32_t> parent_;
  std::vector<int> parent_gen_;
  std::size_t root_ = 0;
};

// Shared, immutable module skeletons keyed by composition.
inline std::shared_ptr<const PermutationModule> permutation_module(const Composition& lambda) {
  static std::mutex mu;
  static std::map<Composition, std::shared_ptr<const PermutationModule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(lambda);
  if (it != cache.end()) return it->second;
  auto m = std::make_shared<const PermutationModule>(lambda);
  cache.emplace(lambda, m);
  return m;
}

// Element of M^lambda: sparse coefficients over the basis x_lambda T_d, sorted
// by basis index, without explicit zeros.
template <Field F>
class ModuleVector {
 public:
  using value_type = typename F::value_type;
  using Term = std::pair<std::uint32_t, value_type>;

  ModuleVector() = default;
  explicit ModuleVector(std::shared_ptr<const PermutationModule> m) : mod_(std::move(m)) {}

  static ModuleVector basis(const F& f, std::shared_ptr<const PermutationModule> m, std::size_t k) {
    ModuleVector v(std::move(m));
    v.terms_.emplace_back(static_cast<std::uint32_t>(k), f.one());
    return v;
  }

  // Builds from unsorted terms (duplicates are summed, zeros dropped).
  static ModuleVector from_terms(const F& f, std::shared_ptr<const PermutationModule> m, std::vector<Term> terms) {
    ModuleVector v(std::move(m));
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& t : terms) {
      if (!v.terms_.empty() && v.terms_.back().first == t.first) {
        f.add_to(v.terms_.back().second, t.second);
      } else {
        v.terms_.push_back(std::move(t));
      }
    }
    std::erase_if(v.terms_, [&](const Term& t) { return f.is_zero(t.second); });
    return v;
  }

  static ModuleVector from_dense(const F& f, std::shared_ptr<const PermutationModule> m,
                                 const std::vector<value_type>& dense) {
    ModuleVector v(std::move(m));
    for (std::size_t k = 0; k < dense.size(); ++k)
      if (!f.is_zero(dense[k])) v.terms_.emplace_back(static_cast<std::uint32_t>(k), dense[k]);
    return v;
  }

  std::vector<value_type> to_dense(const F& f) const {
    std::vector<value_type> d(mod_->dim(), f.zero());
    for (const auto& [k, c] : terms_) d[k] = c;
    return d;
  }

  const std::shared_ptr<const PermutationModule>& module() const { return mod_; }
  const Composition& shape() const { return mod_->shape(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  value_type coefficient(const F& f, std::size_t k) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, std::size_t key) { return t.first < key; });
    return (it != terms_.end() && it->first == k) ? it->second : f.zero();
  }

  bool equals(const F& f, const ModuleVector& o) const {
    if (mod_->shape() != o.mod_->shape() || terms_.size() != o.terms_.size()) return false;
    for (std::size_t k = 0; k < terms_.size(); ++k)
      if (terms_[k].first != o.terms_[k].first || !f.equal(terms_[k].second, o.terms_[k].second)) return false;
    return true;
  }

 private:
  std::shared_ptr<const PermutationModule> mod_;
  std::vector<Term> terms_;
};

template <Field F>
ModuleVector<F> add(const F& f, const ModuleVector<F>& a, const ModuleVector<F>& b) {
  require(a.shape() == b.shape(), "adding vectors of different modules");
  auto terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return ModuleVector<F>::from_terms(f, a.module(), std::move(terms));
}

template <Field F>
ModuleVector<F> scale(const F& f, const typename F::value_type& c, const ModuleVector<F>& v) {
  std::vector<typename ModuleVector<F>::Term> terms;
  for (const auto& [k, x] : v.terms()) terms.emplace_back(k, f.mul(c, x));
  return ModuleVector<F>::from_terms(f, v.module(), std::move(terms));
}

template <Field F>
ModuleVector<F> subtract(const F& f, const ModuleVector<F>& a, const ModuleVector<F>& b) {
  return add(f, a, scale(f, f.from_int(-1), b));
}

// Right action of T_i: x T_d T_i is q x T_d when i, i+1 share a row of t^lambda d,
// x T_{d s_i} when the row of i is above that of i+1, and
// q x T_{d s_i} + (q-1) x T_d otherwise.
template <Field F>
ModuleVector<F> act_gen(const F& f, const ModuleVector<F>& v, int i) {
  const auto& m = *v.module();
  require(i >= 1 && i < m.n(), "generator index out of range");
  using Step = PermutationModule::Step;
  std::vector<typename ModuleVector<F>::Term> out;
  out.reserve(v.terms().size() * 2);
  const auto q = f.q();
  const auto qm1 = f.sub(f.q(), f.one());
  for (const auto& [k, c] : v.terms()) {
    switch (m.step(k, i)) {
      case Step::Same:
        out.emplace_back(k, f.mul(q, c));
        break;
      case Step::Up:
        out.emplace_back(static_cast<std::uint32_t>(m.target(k, i)), c);
        break;
      case Step::Down:
        out.emplace_back(static_cast<std::uint32_t>(m.target(k, i)), f.mul(q, c));
        out.emplace_back(k, f.mul(qm1, c));
        break;
    }
  }
  return ModuleVector<F>::from_terms(f, v.module(), std::move(out));
}

// Dense version of act_gen used by the spinning workspace.
template <Field F>
std::vector<typename F::value_type> act_gen_dense(const F& f, const PermutationModule& m,
                                                  const std::vector<typename F::value_type>& v, int i) {
  using Step = PermutationModule::Step;
  std::vector<typename F::value_type> out(v.size(), f.zero());
  const auto q = f.q();
  const auto qm1 = f.sub(f.q(), f.one());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (f.is_zero(v[k])) continue;
    switch (m.step(k, i)) {
      case Step::Same:
        f.add_to(out[k], f.mul(q, v[k]));
        break;
      case Step::Up:
        f.add_to(out[m.target(k, i)], v[k]);
        break;
      case Step::Down:
        f.add_to(out[m.target(k, i)], f.mul(q, v[k]));
        f.add_to(out[k], f.mul(qm1, v[k]));
        break;
    }
  }
  return out;
}

template <Field F>
ModuleVector<F> act_word(const F& f, ModuleVector<F> v, const std::vector<int>& word) {
  for (int i : word) v = act_gen(f, v, i);
  return v;
}

template <Field F>
ModuleVector<F> act_word(const F& f, const ModuleVector<F>& v, const Permutation& w) {
  require(w.n() == v.module()->n(), "permutation of the wrong degree");
  return act_word(f, v, w.reduced_word());
}

// ---- elements of H ----

// Sparse element of H over the basis T_w.
template <Field F>
class HeckeElement {
 public:
  using value_type = typename F::value_type;

  explicit HeckeElement(int n) : n_(n) {}

  static HeckeElement basis(const F& f, const Permutation& w) {
    HeckeElement h(w.n());
    h.terms_.emplace(w, f.one());
    return h;
  }
  static HeckeElement identity(const F& f, int n) { return basis(f, Permutation::identity(n)); }

  int n() const { return n_; }
  const std::map<Permutation, value_type>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const F& f, const Permutation& w, const value_type& c) {
    require(w.n() == n_, "permutation of the wrong degree");
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) f.add_to(it->second, c);
    if (f.is_zero(it->second)) terms_.erase(it);
  }

  value_type coefficient(const F& f, const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? f.zero() : it->second;
  }

  // h T_i by the defining relation.
  HeckeElement times_generator(const F& f, int i) const {
    HeckeElement r(n_);
    const auto qm1 = f.sub(f.q(), f.one());
    for (const auto& [w, c] : terms_) {
      Permutation ws = w.times_simple(i);
      if (w.is_right_descent(i)) {
        r.add_term(f, ws, f.mul(f.q(), c));
        r.add_term(f, w, f.mul(qm1, c));
      } else {
        r.add_term(f, ws, c);
      }
    }
    return r;
  }

  bool equals(const F& f, const HeckeElement& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [w, c] : terms_) {
      auto it = o.terms_.find(w);
      if (it == o.terms_.end() || !f.equal(c, it->second)) return false;
    }
    return true;
  }

 private:
  int n_;
  std::map<Permutation, value_type> terms_;
};

template <Field F>
HeckeElement<F> add(const F& f, const HeckeElement<F>& a, const HeckeElement<F>& b) {
  HeckeElement<F> r = a;
  for (const auto& [w, c] : b.terms()) r.add_term(f, w, c);
  return r;
}

template <Field F>
HeckeElement<F> scale(const F& f, const typename F::value_type& s, const HeckeElement<F>& a) {
  HeckeElement<F> r(a.n());
  for (const auto& [w, c] : a.terms()) r.add_term(f, w, f.mul(s, c));
  return r;
}

template <Field F>
HeckeElement<F> multiply(const F& f, const HeckeElement<F>& a, const HeckeElement<F>& b) {
  require(a.n() == b.n(), "Hecke elements of different degrees");
  HeckeElement<F> r(a.n());
  for (const auto& [w, c] : b.terms()) {
    HeckeElement<F> part = a;
    for (int i : w.reduced_word()) part = part.times_generator(f, i);
    r = add(f, r, scale(f, c, part));
  }
  return r;
}

// Generators s_i of the row stabilizer of t^lambda.
inline std::vector<int> row_stabilizer_generators(const Composition& lambda) {
  std::vector<int> gens;
  int start = 1;
  for (int part : lambda) {
    for (int k = 0; k + 1 < part; ++k) gens.push_back(start + k);
    start += part;
  }
  return gens;
}

// All elements of the parabolic subgroup generated by the given s_i, found by
// closing under right multiplication.
inline std::vector<Permutation> parabolic_elements(int n, const std::vector<int>& gens) {
  std::vector<Permutation> out{Permutation::identity(n)};
  std::map<Permutation, bool> seen{{out[0], true}};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int i : gens) {
      Permutation w = out[k].times_simple(i);
      if (seen.emplace(w, true).second) out.push_back(w);
    }
  return out;
}

// x_lambda = sum of T_w over the row stabilizer.
template <Field F>
HeckeElement<F> x_element(const F& f, const Composition& lambda) {
  int n = size(lambda);
  HeckeElement<F> h(n);
  for (const auto& w : parabolic_elements(n, row_stabilizer_generators(lambda))) h.add_term(f, w, f.one());
  return h;
}

// y_lambda = sum of (-q)^{-l(w)} T_w over the row stabilizer.
template <Field F>
HeckeElement<F> y_element(const F& f, const Composition& lambda) {
  int n = size(lambda);
  HeckeElement<F> h(n);
  auto mq_inv = f.neg(f.q_inv());
  for (const auto& w : parabolic_elements(n, row_stabilizer_generators(lambda))) {
    auto c = f.one();
    for (int k = 0; k < w.length(); ++k) c = f.mul(c, mq_inv);
    h.add_term(f, w, c);
  }
  return h;
}

namespace detail {

// Largest right descent of w, 0 for the identity.
inline int last_descent(const Permutation& w) {
  for (int i = w.n() - 1; i >= 1; --i)
    if (w.is_right_descent(i)) return i;
  return 0;
}

}  // namespace detail

// v h = sum_w c_w v T_w. The support of h is closed under taking canonical
// prefixes (drop the largest right descent), and v T_w is computed once per node
// of that prefix tree by a single generator step from its parent.
template <Field F>
ModuleVector<F> act_element(const F& f, const ModuleVector<F>& v, const HeckeElement<F>& h) {
  require(h.n() == v.module()->n(), "Hecke element of the wrong degree");
  std::map<Permutation, std::vector<std::pair<Permutation, int>>> children;
  for (const auto& [w, c] : h.terms()) {
    Permutation cur = w;
    while (!cur.is_identity()) {
      int i = detail::last_descent(cur);
      Permutation par = cur.times_simple(i);
      auto& kids = children[par];
      if (std::find_if(kids.begin(), kids.end(), [&](const auto& e) { return e.first == cur; }) != kids.end()) break;
      kids.emplace_back(cur, i);
      cur = par;
    }
  }
  std::vector<typename F::value_type> acc(v.module()->dim(), f.zero());
  struct Frame {
    Permutation w;
    ModuleVector<F> value;
  };
  std::vector<Frame> stack{{Permutation::identity(h.n()), v}};
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    auto c = h.coefficient(f, fr.w);
    if (!f.is_zero(c))
      for (const auto& [k, x] : fr.value.terms()) f.add_to(acc[k], f.mul(c, x));
    auto it = children.find(fr.w);
    if (it == children.end()) continue;
    for (const auto& [child, i] : it->second) stack.push_back({child, act_gen(f, fr.value, i)});
  }
  return ModuleVector<F>::from_dense(f, v.module(), acc);
}

}  // namespace hecke
