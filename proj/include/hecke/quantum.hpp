#pragma once

#include "hecke/errors.hpp"
#include "hecke/fields.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hecke {

// The pair (e, p): e is the least integer > 1 with [e] = 0 (nullopt when no
// such integer exists), p is the characteristic.
struct QuantumProfile {
  std::optional<int> e;
  int p = 0;

  bool finite() const { return e.has_value(); }
  bool operator==(const QuantumProfile&) const = default;
  std::string to_string() const {
    return "e=" + (e ? std::to_string(*e) : std::string("inf")) + ",p=" + std::to_string(p);
  }
};

// [k] = 1 + q + ... + q^(k-1)
template <Field F>
typename F::value_type qint(const F& f, int k) {
  require(k >= 0, "quantum integer of a negative number");
  auto sum = f.zero();
  auto pw = f.one();
  for (int i = 0; i < k; ++i) {
    f.add_to(sum, pw);
    pw = f.mul(pw, f.q());
  }
  return sum;
}

template <Field F>
QuantumProfile quantum_char(const F& f) {
  auto sum = f.one();
  auto pw = f.one();
  std::uint64_t bound = f.order_bound();
  for (std::uint64_t k = 2; k <= bound + 1; ++k) {
    pw = f.mul(pw, f.q());
    f.add_to(sum, pw);
    if (f.is_zero(sum)) return {static_cast<int>(k), f.characteristic()};
  }
  return {std::nullopt, f.characteristic()};
}

template <Field F>
typename F::value_type qfact(const F& f, int k) {
  require(k >= 0, "quantum factorial of a negative number");
  auto r = f.one();
  for (int i = 1; i <= k; ++i) r = f.mul(r, qint(f, i));
  return r;
}

// Table c[a][b] = [a choose b] for 0 <= b <= a <= alpha via the recurrence
// [a b] = [a-1 b] + q^(a-b) [a-1 b-1].
template <Field F>
std::vector<std::vector<typename F::value_type>> qbinom_table(const F& f, int alpha) {
  require(alpha >= 0, "negative alpha");
  std::vector<typename F::value_type> qp{f.one()};
  for (int i = 1; i <= alpha; ++i) qp.push_back(f.mul(qp.back(), f.q()));
  std::vector<std::vector<typename F::value_type>> c(static_cast<std::size_t>(alpha) + 1);
  for (int a = 0; a <= alpha; ++a) {
    auto& row = c[static_cast<std::size_t>(a)];
    row.assign(static_cast<std::size_t>(a) + 1, f.zero());
    row[0] = f.one();
    row[static_cast<std::size_t>(a)] = f.one();
    for (int b = 1; b < a; ++b) {
      const auto& prev = c[static_cast<std::size_t>(a - 1)];
      row[static_cast<std::size_t>(b)] =
          f.add(prev[static_cast<std::size_t>(b)], f.mul(qp[static_cast<std::size_t>(a - b)], prev[static_cast<std::size_t>(b - 1)]));
    }
  }
  return c;
}

template <Field F>
typename F::value_type qbinom(const F& f, int alpha, int beta) {
  require(alpha >= 0 && beta >= 0, "q-binomial needs nonnegative arguments");
  require(beta <= alpha, "q-binomial needs beta <= alpha");
  return qbinom_table(f, alpha)[static_cast<std::size_t>(alpha)][static_cast<std::size_t>(beta)];
}

// Sum over beta-subsets {i_1 < ... < i_beta} of {1..alpha} of q^G with
// G = sum_j (alpha - i_j - beta + j). Exponential; used as a cross-check.
template <Field F>
typename F::value_type qbinom_sum_oracle(const F& f, int alpha, int beta) {
  require(alpha >= 0 && beta >= 0 && beta <= alpha, "q-binomial oracle needs 0 <= beta <= alpha");
  require(alpha <= 24, "q-binomial oracle is exponential; alpha <= 24");
  auto total = f.zero();
  std::vector<int> idx(static_cast<std::size_t>(beta));
  for (int j = 0; j < beta; ++j) idx[static_cast<std::size_t>(j)] = j + 1;
  while (true) {
    int g = 0;
    for (int j = 1; j <= beta; ++j) g += alpha - idx[static_cast<std::size_t>(j - 1)] - beta + j;
    f.add_to(total, q_power(f, g));
    int j = beta - 1;
    while (j >= 0 && idx[static_cast<std::size_t>(j)] == alpha - beta + j + 1) --j;
    if (j < 0) break;
    ++idx[static_cast<std::size_t>(j)];
    for (int k = j + 1; k < beta; ++k) idx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k - 1)] + 1;
  }
  return total;
}

// Least l >= 0 with b < p^l.
inline int ell_p(int p, std::int64_t b) {
  require(p >= 2, "ell_p needs p >= 2");
  require(b >= 0, "ell_p needs b >= 0");
  int l = 0;
  std::int64_t pw = 1;
  while (b >= pw) {
    pw *= p;
    ++l;
  }
  return l;
}

inline std::int64_t bstar(int e, std::int64_t b) {
  require(e >= 1, "bstar needs e >= 1");
  require(b >= 0, "bstar needs b >= 0");
  return b / e;
}

inline std::int64_t int_pow(std::int64_t b, int k) {
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r *= b;
  return r;
}

inline std::int64_t mod_nonneg(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Closed form for: [alpha+k choose k] = 0 for every 1 <= k <= beta.
inline bool vanish_run(const QuantumProfile& prof, std::int64_t alpha, std::int64_t beta) {
  require(alpha >= 0 && beta >= 1, "vanish_run needs alpha >= 0 and beta >= 1");
  if (!prof.finite()) return false;
  std::int64_t e = *prof.e;
  if (prof.p == 0) return (alpha + 1) % e == 0 && beta < e;
  std::int64_t modulus = e * int_pow(prof.p, ell_p(prof.p, bstar(static_cast<int>(e), beta)));
  return mod_nonneg(alpha + 1, modulus) == 0;
}

// The same predicate evaluated directly in a concrete field.
template <Field F>
bool vanish_run_direct(const F& f, int alpha, int beta) {
  require(alpha >= 0 && beta >= 1, "vanish_run needs alpha >= 0 and beta >= 1");
  auto table = qbinom_table(f, alpha + beta);
  for (int k = 1; k <= beta; ++k)
    if (!f.is_zero(table[static_cast<std::size_t>(alpha + k)][static_cast<std::size_t>(k)])) return false;
  return true;
}

// p-adic valuation (0 when p = 0).
inline int nu_p(int p, std::int64_t h) {
  if (p == 0 || h == 0) return 0;
  int v = 0;
  if (h < 0) h = -h;
  while (h % p == 0) {
    h /= p;
    ++v;
  }
  return v;
}

// nu_{e,p}(h) = nu_p(h/e) + 1 if e | h, else 0.
inline int nu_ep(int e, int p, std::int64_t h) {
  require(e >= 2, "nu_ep needs e >= 2");
  require(h != 0, "nu_ep needs h != 0");
  if (h % e != 0) return 0;
  return nu_p(p, h / e) + 1;
}

}  // namespace hecke
