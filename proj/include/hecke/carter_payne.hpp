#pragma once

#include "hecke/homs.hpp"
#include "hecke/quantum.hpp"

#include <string>

namespace hecke {

// Base partition mu with gamma nodes moved from row b up to row a < b.
struct CPInstance {
  Partition base;
  int a = 1, b = 2, gamma = 1;

  Partition partner() const {
    require(a >= 1 && a < b, "rows must satisfy 1 <= a < b");
    require(gamma >= 1, "gamma must be positive");
    require(b <= static_cast<int>(base.size()), "row b exceeds the length of the base partition");
    Partition lambda = base;
    lambda[static_cast<std::size_t>(a - 1)] += gamma;
    lambda[static_cast<std::size_t>(b - 1)] -= gamma;
    require(lambda[static_cast<std::size_t>(b - 1)] >= 0, "row b has fewer than gamma nodes");
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    require(is_partition(lambda), "moving the nodes does not give a partition");
    return lambda;
  }

  void validate() const {
    require_partition(base, "base");
    (void)partner();
  }

  int part(int i) const { return i <= static_cast<int>(base.size()) ? base[static_cast<std::size_t>(i - 1)] : 0; }
};

// Recovers (a, b, gamma) from a pair (lambda, mu) that differs in exactly two rows.
inline std::optional<CPInstance> cp_instance_of(const Partition& lambda, const Partition& mu) {
  if (size(lambda) != size(mu)) return std::nullopt;
  std::size_t len = std::max(lambda.size(), mu.size());
  std::vector<int> diff;
  std::vector<int> rows;
  for (std::size_t i = 0; i < len; ++i) {
    int l = i < lambda.size() ? lambda[i] : 0, m = i < mu.size() ? mu[i] : 0;
    if (l != m) {
      rows.push_back(static_cast<int>(i) + 1);
      diff.push_back(l - m);
    }
  }
  if (rows.size() != 2 || diff[0] <= 0 || diff[0] != -diff[1]) return std::nullopt;
  return CPInstance{mu, rows[0], rows[1], diff[0]};
}

enum class Eligibility { Eligible, NotEligible, OutsideScope };

inline std::string to_string(Eligibility e) {
  switch (e) {
    case Eligibility::Eligible: return "eligible";
    case Eligibility::NotEligible: return "not eligible";
    case Eligibility::OutsideScope: return "outside proven scope";
  }
  return "?";
}

inline void require_finite(const QuantumProfile& prof) {
  require(prof.finite(), "quantum characteristic e is infinite; the criteria need a finite e");
}

// Adjacent rows use the run-vanishing criterion mu_a - mu_{a+1} + gamma = -1 mod
// e p^{l_p(gamma*)} (with gamma < e when p = 0); one node uses e | mu_a - mu_b + b - a + 1.
inline Eligibility cp_eligible(const CPInstance& inst, const QuantumProfile& prof) {
  inst.validate();
  require_finite(prof);
  if (inst.b == inst.a + 1)
    return vanish_run(prof, inst.part(inst.a) - inst.part(inst.b) + inst.gamma, inst.gamma) ? Eligibility::Eligible
                                                                                              : Eligibility::NotEligible;
  if (inst.gamma == 1)
    return mod_nonneg(inst.part(inst.a) - inst.part(inst.b) + inst.b - inst.a + 1, *prof.e) == 0 ? Eligibility::Eligible
                                                                                                  : Eligibility::NotEligible;
  return Eligibility::OutsideScope;
}

// S^mu has a trivial submodule iff [mu_i + beta choose beta] = 0 for all
// 1 <= beta <= mu_{i+1} and every i < l.
inline bool trivial_hom_exists(const Partition& mu, const QuantumProfile& prof) {
  require_partition(mu, "mu");
  require_finite(prof);
  for (std::size_t i = 0; i + 1 < mu.size(); ++i)
    if (!vanish_run(prof, mu[i], mu[i + 1])) return false;
  return true;
}

// The p = 0 shape description (mu_1, (e-1)^{l-2}, mu_l) with e | mu_1 + 1, read
// literally. It drops mu_l < e when l = 2, so it can disagree with trivial_hom_exists.
inline bool trivial_hom_shape_literal(const Partition& mu, int e) {
  require_partition(mu, "mu");
  if (mu.size() <= 1) return true;
  if ((mu[0] + 1) % e != 0) return false;
  for (std::size_t i = 1; i + 1 < mu.size(); ++i)
    if (mu[i] != e - 1) return false;
  return true;
}

// sum over T_0(eta, xi) of prod_{a<i<b} A(i) Theta_A for xi with one node moved
// from row b to row a.
template <Field F>
HomSpec<F> one_node_map(const F& f, const Partition& xi, int a, int b) {
  CPInstance inst{xi, a, b, 1};
  inst.validate();
  const Partition eta = inst.partner();
  auto eta_part = [&](int i) { return i <= static_cast<int>(eta.size()) ? eta[static_cast<std::size_t>(i - 1)] : 0; };
  HomSpec<F> h;
  h.source = eta;
  h.target = xi;
  for (const Tableau& A : enumerate_semistandard(eta, xi)) {
    auto coeff = f.one();
    for (int i = a + 1; i < b; ++i) {
      if (A.at(i, eta_part(i)) != i) continue;
      if (eta_part(i) == eta_part(i + 1)) {
        coeff = f.mul(coeff, f.neg(f.q_inv()));
      } else {
        int k = eta_part(i) - eta_part(b) + b - i - 1;
        coeff = f.mul(coeff, f.neg(f.mul(q_power(f, -k), qint(f, k))));
      }
    }
    if (!f.is_zero(coeff)) h.coefficients.emplace_back(A, coeff);
  }
  return h;
}

// Theta_A for the unique semistandard tableau of T_0(lambda, mu) when gamma nodes
// move from row a+1 to row a.
template <Field F>
HomSpec<F> adjacent_map(const F& f, const Partition& mu, int a, int gamma) {
  CPInstance inst{mu, a, a + 1, gamma};
  inst.validate();
  const Partition lambda = inst.partner();
  Tableau A;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    int row = static_cast<int>(i) + 1;
    std::vector<int> entries(static_cast<std::size_t>(lambda[i]), row);
    if (row == a)
      for (int j = mu[i]; j < lambda[i]; ++j) entries[static_cast<std::size_t>(j)] = a + 1;
    A.rows.push_back(entries);
  }
  require(A.is_semistandard(), "no semistandard tableau for this adjacent pair");
  HomSpec<F> h;
  h.source = lambda;
  h.target = mu;
  h.coefficients.emplace_back(A, f.one());
  return h;
}

struct CPVerdict {
  bool nonzero = false;
  bool lands_in_specht = false;
};

template <Field F>
CPVerdict verify_cp(const F& f, const HomSpec<F>& h) {
  ModuleVector<F> v = hom_value(f, h);
  CPVerdict out;
  out.nonzero = !v.is_zero();
  out.lands_in_specht = is_partition(h.target) && specht_membership(f, v);
  return out;
}

enum class PredictedDim { Zero, One, AtLeastOne, Unknown };

inline std::string to_string(PredictedDim d) {
  switch (d) {
    case PredictedDim::Zero: return "0";
    case PredictedDim::One: return "1";
    case PredictedDim::AtLeastOne: return ">=1";
    case PredictedDim::Unknown: return "unknown";
  }
  return "?";
}

// dim Hom(S^lambda, S^mu) as predicted for one-node and adjacent-row pairs.
inline PredictedDim predicted_hom_dim(const Partition& lambda, const Partition& mu, const QuantumProfile& prof) {
  require_partition(lambda, "lambda");
  require_partition(mu, "mu");
  require_finite(prof);
  auto inst = cp_instance_of(lambda, mu);
  if (!inst) return PredictedDim::Unknown;
  Eligibility el = cp_eligible(*inst, prof);
  if (el == Eligibility::OutsideScope) return PredictedDim::Unknown;
  const bool weak = *prof.e == 2 && !is_2regular(lambda);
  const bool ok = el == Eligibility::Eligible;
  if (!weak) return ok ? PredictedDim::One : PredictedDim::Zero;
  if (inst->gamma == 1) return ok ? PredictedDim::AtLeastOne : PredictedDim::Zero;
  return ok ? PredictedDim::AtLeastOne : PredictedDim::Unknown;
}

}  // namespace hecke
