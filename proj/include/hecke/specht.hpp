#pragma once

#include "hecke/linalg.hpp"
#include "hecke/module.hpp"

#include <memory>
#include <vector>

namespace hecke {

// v T_{w_lambda} y_{lambda'}: the tail that turns x_lambda into the Specht
// generator. Applied to x_mu-images it evaluates homomorphisms on S^lambda.
template <Field F>
ModuleVector<F> apply_specht_tail(const F& f, const ModuleVector<F>& v, const Partition& lambda) {
  require_partition(lambda);
  require(size(lambda) == v.module()->n(), "degree mismatch");
  ModuleVector<F> u = act_word(f, v, w_lambda(lambda));
  return act_element(f, u, y_element(f, conjugate(lambda)));
}

// x_lambda T_{w_lambda} y_{lambda'} in M^lambda.
template <Field F>
ModuleVector<F> specht_generator(const F& f, const Partition& lambda) {
  require_partition(lambda);
  auto m = permutation_module(lambda);
  return apply_specht_tail(f, ModuleVector<F>::basis(f, m, m->root()), lambda);
}

// S^lambda spun from its generator. Keeps two bases:
//  * the echelon basis (reduced row echelon rows over the M^lambda basis), and
//  * the spin basis s_0 = generator, s_m = s_parent(m) T_gen(m), in the order
//    the vectors were discovered.
// Generator matrices act on row vectors: b_k T_i = sum_j M_i(k,j) b_j.
template <Field F>
class SpechtModule {
 public:
  using value_type = typename F::value_type;
  using Dense = std::vector<value_type>;

  SpechtModule(const F& f, Partition lambda)
      : f_(&f), shape_(std::move(lambda)), mod_(permutation_module(shape_)), echelon_(f, mod_->dim()) {
    spin();
  }

  const Partition& shape() const { return shape_; }
  std::size_t dim() const { return echelon_.rank(); }
  const PermutationModule& module() const { return *mod_; }
  const std::shared_ptr<const PermutationModule>& module_ptr() const { return mod_; }
  const RowEchelon<F>& echelon() const { return echelon_; }
  int generators() const { return mod_->n() - 1; }

  std::vector<ModuleVector<F>> basis() const {
    std::vector<ModuleVector<F>> out;
    for (const auto& r : echelon_.rows()) out.push_back(ModuleVector<F>::from_dense(*f_, mod_, r));
    return out;
  }

  // Generator matrices in the echelon basis (index i-1 for T_i).
  const std::vector<Matrix<F>>& matrices() const { return echelon_mats_; }
  // Generator matrices in the spin basis.
  const std::vector<Matrix<F>>& spin_matrices() const { return spin_mats_; }
  std::size_t spin_parent(std::size_t m) const { return spin_parent_[m]; }
  int spin_generator(std::size_t m) const { return spin_gen_[m]; }

  bool contains(const ModuleVector<F>& v) const {
    require(v.shape() == mod_->shape(), "vector lies in a different module");
    return echelon_.contains(v.to_dense(*f_));
  }

  // Coordinates in the echelon basis; throws if v is not in S^lambda.
  Dense coordinates(const ModuleVector<F>& v) const {
    Dense d = v.to_dense(*f_);
    Dense c = echelon_.reduce(d);
    require(echelon_.is_zero(d), "vector is not in the Specht module");
    return c;
  }

 private:
  void spin() {
    const F& f = *f_;
    const int gens = mod_->n() - 1;
    std::vector<Dense> pending;  // raw spin vectors not yet pushed through the generators
    std::vector<std::vector<Dense>> rows(static_cast<std::size_t>(std::max(gens, 0)));

    Dense z = specht_generator(f, shape_).to_dense(f);
    {
      Dense zr = z;
      echelon_.reduce(zr);
      echelon_.insert_reduced(zr, Dense{f.one()});
    }
    pending.push_back(std::move(z));
    spin_parent_.push_back(0);
    spin_gen_.push_back(0);

    for (std::size_t k = 0; k < pending.size(); ++k) {
      for (int i = 1; i <= gens; ++i) {
        Dense w = act_gen_dense(f, *mod_, pending[k], i);
        Dense wr = w;
        Dense c = echelon_.reduce(wr);
        std::size_t count = pending.size();
        Dense coords(count, f.zero());
        for (std::size_t j = 0; j < c.size(); ++j) {
          if (f.is_zero(c[j])) continue;
          const auto& a = echelon_.aux()[j];
          for (std::size_t t = 0; t < a.size(); ++t)
            if (!f.is_zero(a[t])) f.add_to(coords[t], f.mul(c[j], a[t]));
        }
        if (echelon_.is_zero(wr)) {
          rows[static_cast<std::size_t>(i - 1)].push_back(std::move(coords));
          continue;
        }
        // new spin vector s_count = w; its echelon remainder is w - sum c_j r_j
        Dense aux(count + 1, f.zero());
        for (std::size_t t = 0; t < count; ++t) aux[t] = f.neg(coords[t]);
        aux[count] = f.one();
        echelon_.insert_reduced(std::move(wr), std::move(aux));
        Dense unit(count + 1, f.zero());
        unit[count] = f.one();
        rows[static_cast<std::size_t>(i - 1)].push_back(std::move(unit));
        pending.push_back(std::move(w));
        spin_parent_.push_back(k);
        spin_gen_.push_back(i);
      }
      pending[k] = Dense();  // free the raw vector once processed
    }

    std::size_t dim = pending.size();
    for (int i = 1; i <= gens; ++i) {
      Matrix<F> m(f, dim, dim);
      const auto& rs = rows[static_cast<std::size_t>(i - 1)];
      for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t j = 0; j < rs[k].size(); ++j) m(k, j) = rs[k][j];
      spin_mats_.push_back(std::move(m));
    }

    const auto& piv = echelon_.pivots();
    for (int i = 1; i <= gens; ++i) {
      Matrix<F> m(f, dim, dim);
      for (std::size_t j = 0; j < dim; ++j) {
        Dense img = act_gen_dense(f, *mod_, echelon_.rows()[j], i);
        for (std::size_t k = 0; k < dim; ++k) m(j, k) = img[piv[k]];
      }
      echelon_mats_.push_back(std::move(m));
    }
  }

  const F* f_;
  Partition shape_;
  std::shared_ptr<const PermutationModule> mod_;
  RowEchelon<F> echelon_;
  std::vector<std::size_t> spin_parent_;
  std::vector<int> spin_gen_;
  std::vector<Matrix<F>> spin_mats_;
  std::vector<Matrix<F>> echelon_mats_;
};

}  // namespace hecke
