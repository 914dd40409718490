#pragma once

#include "hecke/linalg.hpp"
#include "hecke/module.hpp"
#include "hecke/quantum.hpp"
#include "hecke/specht.hpp"
#include "hecke/tableaux.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace hecke {

// A homomorphism S^lambda -> M^mu (or M^lambda -> M^mu) given by coefficients
// over lambda-tableaux of type mu: sum_A f(A) Theta_A.
template <Field F>
struct HomSpec {
  using value_type = typename F::value_type;
  Partition source;
  Composition target;
  std::vector<std::pair<Tableau, value_type>> coefficients;

  bool is_semistandard_form() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](const auto& c) { return c.first.is_semistandard(); });
  }
};

template <Field F>
void validate(const HomSpec<F>& h) {
  require_partition(h.source, "source");
  require_composition(h.target, "target");
  require(size(h.source) == size(h.target), "source and target have different sizes");
  for (const auto& [A, c] : h.coefficients) {
    require(A.shape() == h.source, "tableau " + A.to_string() + " does not have the source shape");
    require(A.type(static_cast<int>(h.target.size())) == h.target, "tableau " + A.to_string() + " does not have the target type");
    require(A.is_row_standard(), "tableau " + A.to_string() + " is not row standard");
  }
}

// Theta_A(x_lambda) = x_mu sum_{A' ~ A} T_{1_{A'}}: one basis vector per member of
// the row class (the index of 1_{A'} is the reading word of A').
template <Field F>
ModuleVector<F> theta_on_x(const F& f, const Tableau& A, const Composition& mu) {
  require(A.is_row_standard(), "Theta_A needs a row-standard tableau");
  require(A.type(static_cast<int>(mu.size())) == mu, "tableau does not have type mu");
  auto m = permutation_module(mu);
  std::vector<typename ModuleVector<F>::Term> terms;
  for (const Tableau& B : row_equiv_class(A))
    terms.emplace_back(static_cast<std::uint32_t>(m->index_of_word(B.reading_word())), f.one());
  return ModuleVector<F>::from_terms(f, m, std::move(terms));
}

// Image of the Specht generator of S^lambda under Theta_A.
template <Field F>
ModuleVector<F> theta_on_generator(const F& f, const Tableau& A, const Composition& mu) {
  Composition shape = A.shape();
  require_partition(shape, "shape of A");
  return apply_specht_tail(f, theta_on_x(f, A, mu), shape);
}

// Same value obtained by expanding the generator as sum_d c_d x_lambda T_d and
// pushing Theta_A(x_lambda) through each T_d.
template <Field F>
ModuleVector<F> theta_on_generator_expanded(const F& f, const Tableau& A, const Composition& mu) {
  Composition shape = A.shape();
  require_partition(shape, "shape of A");
  ModuleVector<F> z = specht_generator(f, shape);
  ModuleVector<F> u = theta_on_x(f, A, mu);
  ModuleVector<F> acc(u.module());
  for (const auto& [k, c] : z.terms())
    acc = add(f, acc, scale(f, c, act_word(f, u, z.module()->rep(k))));
  return acc;
}

template <Field F>
ModuleVector<F> hom_on_x(const F& f, const HomSpec<F>& h) {
  validate(h);
  ModuleVector<F> acc(permutation_module(h.target));
  for (const auto& [A, c] : h.coefficients) acc = add(f, acc, scale(f, c, theta_on_x(f, A, h.target)));
  return acc;
}

// Value of the homomorphism at the Specht generator of S^lambda.
template <Field F>
ModuleVector<F> hom_value(const F& f, const HomSpec<F>& h) {
  return apply_specht_tail(f, hom_on_x(f, h), h.source);
}

// The mu-tableau R of type nu^{d,t} with row d+1 holding mu_{d+1}-t entries d
// followed by t entries d+1, every other row i filled with i. psi_{d,t} = Theta_R.
inline Tableau merge_tableau(const Composition& mu, int d, int t) {
  Composition nu = nu_composition(mu, d, t);
  Tableau R;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    int row = static_cast<int>(i) + 1;
    std::vector<int> entries(static_cast<std::size_t>(mu[i]), row);
    if (row == d + 1)
      for (int j = 0; j < mu[i] - t; ++j) entries[static_cast<std::size_t>(j)] = d;
    R.rows.push_back(entries);
  }
  (void)nu;
  return R;
}

// psi_{d,t} tabulated on the whole basis of M^mu: images of x_mu T_k for every
// basis index k, built along the spanning tree of D_mu (one generator step each).
template <Field F>
class PsiMap {
 public:
  PsiMap(const F& f, const Composition& mu, int d, int t)
      : f_(&f), mu_(mu), d_(d), t_(t), source_(permutation_module(mu)) {
    Composition nu = nu_composition(mu, d, t);
    target_ = permutation_module(nu);
    const auto& m = *source_;
    std::vector<std::size_t> order(m.dim());
    std::vector<int> len(m.dim());
    for (std::size_t k = 0; k < m.dim(); ++k) {
      order[k] = k;
      const auto& w = m.word(k);
      int inv = 0;
      for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b)
          if (w[a] > w[b]) ++inv;
      len[k] = inv;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return len[a] < len[b]; });
    images_.resize(m.dim());
    images_[m.root()] = theta_on_x(f, merge_tableau(mu, d, t), nu);
    for (std::size_t k : order) {
      if (k == m.root()) continue;
      images_[k] = act_gen(f, images_[m.parent(k)], m.parent_gen(k));
    }
  }

  const Composition& target() const { return target_->shape(); }
  int d() const { return d_; }
  int t() const { return t_; }

  ModuleVector<F> operator()(const ModuleVector<F>& v) const {
    require(v.shape() == mu_, "psi applied to a vector of the wrong module");
    const F& f = *f_;
    std::vector<typename F::value_type> acc(target_->dim(), f.zero());
    for (const auto& [k, c] : v.terms())
      for (const auto& [j, x] : images_[k].terms()) f.add_to(acc[j], f.mul(c, x));
    return ModuleVector<F>::from_dense(f, target_, acc);
  }

 private:
  const F* f_;
  Composition mu_;
  int d_, t_;
  std::shared_ptr<const PermutationModule> source_, target_;
  std::vector<ModuleVector<F>> images_;
};

template <Field F>
ModuleVector<F> psi_dt(const F& f, const ModuleVector<F>& v, int d, int t) {
  return PsiMap<F>(f, v.shape(), d, t)(v);
}

// All (d,t) with 1 <= d < length(mu), 0 <= t < mu_{d+1}.
inline std::vector<std::pair<int, int>> psi_indices(const Composition& mu) {
  std::vector<std::pair<int, int>> out;
  for (int d = 1; d < static_cast<int>(mu.size()); ++d)
    for (int t = 0; t < mu[static_cast<std::size_t>(d)]; ++t) out.emplace_back(d, t);
  return out;
}

// Tests v in S^mu as the intersection of the kernels of all psi_{d,t}.
template <Field F>
class SpechtMembership {
 public:
  SpechtMembership(const F& f, const Partition& mu) : mu_(mu) {
    require_partition(mu, "target");
    for (auto [d, t] : psi_indices(mu)) maps_.emplace_back(f, mu, d, t);
  }
  const std::vector<PsiMap<F>>& maps() const { return maps_; }
  bool operator()(const ModuleVector<F>& v) const {
    for (const auto& psi : maps_)
      if (!psi(v).is_zero()) return false;
    return true;
  }

 private:
  Partition mu_;
  std::vector<PsiMap<F>> maps_;
};

template <Field F>
bool specht_membership(const F& f, const ModuleVector<F>& v) {
  return SpechtMembership<F>(f, v.shape())(v);
}

template <Field F>
bool restriction_is_zero(const F& f, const HomSpec<F>& h) {
  return hom_value(f, h).is_zero();
}

template <Field F>
bool restriction_into_specht(const F& f, const HomSpec<F>& h) {
  require_partition(h.target, "target");
  return specht_membership(f, hom_value(f, h));
}

// psi_{d,t} Theta_A = sum_S b_S Theta_S where S runs over the row-standard
// tableaux obtained from A by turning mu_{d+1}-t of the entries d+1 into d, and
// b_S = prod_i q^{x_i beta_i} [y_i choose beta_i] (beta_i = entries changed in
// row i, x_i = entries d of A strictly below row i, y_i = entries d of S in row i).
template <Field F>
HomSpec<F> compose_psi_theta(const F& f, const Tableau& A, const Composition& mu, int d, int t) {
  require(A.is_row_standard(), "compose_psi_theta needs a row-standard tableau");
  require(A.type(static_cast<int>(mu.size())) == mu, "tableau does not have type mu");
  Composition shape = A.shape();
  require_partition(shape, "shape of A");
  Composition nu = nu_composition(mu, d, t);
  const int tbar = mu[static_cast<std::size_t>(d)] - t;
  const std::size_t rows = A.rows.size();
  std::vector<int> avail(rows, 0), have_d(rows, 0), below_d(rows, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (int v : A.rows[i]) {
      if (v == d + 1) ++avail[i];
      if (v == d) ++have_d[i];
    }
  for (std::size_t i = rows; i-- > 0;)
    below_d[i] = (i + 1 < rows) ? below_d[i + 1] + have_d[i + 1] : 0;

  int maxy = 0;
  for (std::size_t i = 0; i < rows; ++i) maxy = std::max(maxy, have_d[i] + avail[i]);
  auto binom = qbinom_table(f, maxy);

  HomSpec<F> out;
  out.source = shape;
  out.target = nu;
  std::vector<int> beta(rows, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == rows) {
      if (left != 0) return;
      Tableau S = A;
      auto coeff = f.one();
      for (std::size_t r = 0; r < rows; ++r) {
        int changed = 0;
        for (int& v : S.rows[r])
          if (v == d + 1 && changed < beta[r]) {
            v = d;
            ++changed;
          }
        int y = have_d[r] + beta[r];
        coeff = f.mul(coeff, q_power(f, below_d[r] * beta[r]));
        coeff = f.mul(coeff, binom[static_cast<std::size_t>(y)][static_cast<std::size_t>(beta[r])]);
      }
      if (!f.is_zero(coeff)) out.coefficients.emplace_back(S, coeff);
      return;
    }
    for (int b = 0; b <= std::min(avail[i], left); ++b) {
      beta[i] = b;
      self(self, i + 1, left - b);
    }
    beta[i] = 0;
  };
  rec(rec, 0, tbar);
  std::sort(out.coefficients.begin(), out.coefficients.end(),
            [](const auto& a, const auto& b) { return a.first.reading_word() < b.first.reading_word(); });
  return out;
}

// dim Hom(S^lambda, S^mu). A homomorphism is determined by the image y of the
// generator of S^lambda; with the spin basis s_m = s_parent T_gen of S^lambda its
// value on s_m is y P_m (P_m the product of mu-matrices along the spin path), and
// the commutation constraints s_k T_i = sum_m R_i(k,m) s_m become linear
// equations y (P_k M^mu_i - sum_m R_i(k,m) P_m) = 0.
template <Field F>
std::size_t hom_space_dim(const F& f, const SpechtModule<F>& src, const SpechtModule<F>& dst) {
  require(src.module().n() == dst.module().n(), "Specht modules of different degrees");
  const std::size_t fl = src.dim(), fm = dst.dim();
  const int gens = src.generators();
  std::vector<Matrix<F>> paths;
  paths.reserve(fl);
  paths.push_back(Matrix<F>::identity(f, fm));
  for (std::size_t m = 1; m < fl; ++m)
    paths.push_back(multiply(f, paths[src.spin_parent(m)], dst.matrices()[static_cast<std::size_t>(src.spin_generator(m) - 1)]));
  RowEchelon<F> eqs(f, fm);
  for (std::size_t k = 0; k < fl && eqs.rank() < fm; ++k)
    for (int i = 1; i <= gens && eqs.rank() < fm; ++i) {
      Matrix<F> lhs = multiply(f, paths[k], dst.matrices()[static_cast<std::size_t>(i - 1)]);
      const Matrix<F>& rel = src.spin_matrices()[static_cast<std::size_t>(i - 1)];
      for (std::size_t m = 0; m < fl; ++m) {
        if (f.is_zero(rel(k, m))) continue;
        for (std::size_t a = 0; a < fm; ++a)
          for (std::size_t b = 0; b < fm; ++b)
            if (!f.is_zero(paths[m](a, b))) f.sub_mul(lhs(a, b), rel(k, m), paths[m](a, b));
      }
      for (std::size_t col = 0; col < fm && eqs.rank() < fm; ++col) {
        std::vector<typename F::value_type> row(fm);
        for (std::size_t a = 0; a < fm; ++a) row[a] = lhs(a, col);
        eqs.insert(std::move(row));
      }
    }
  return fm - eqs.rank();
}

template <Field F>
std::size_t hom_space_dim(const F& f, const Partition& lambda, const Partition& mu) {
  require_partition(lambda, "lambda");
  require_partition(mu, "mu");
  require(size(lambda) == size(mu), "lambda and mu have different sizes");
  SpechtModule<F> src(f, lambda), dst(f, mu);
  return hom_space_dim(f, src, dst);
}

// The same dimension from the full commutant M^lambda_i X = X M^mu_i with
// f^lambda * f^mu unknowns. Slower; kept as an independent route.
template <Field F>
std::size_t hom_space_dim_commutant(const F& f, const SpechtModule<F>& src, const SpechtModule<F>& dst) {
  const std::size_t fl = src.dim(), fm = dst.dim();
  RowEchelon<F> eqs(f, fl * fm);
  for (int i = 1; i <= src.generators(); ++i) {
    const auto& A = src.matrices()[static_cast<std::size_t>(i - 1)];
    const auto& B = dst.matrices()[static_cast<std::size_t>(i - 1)];
    for (std::size_t k = 0; k < fl; ++k)
      for (std::size_t c = 0; c < fm; ++c) {
        std::vector<typename F::value_type> row(fl * fm, f.zero());
        for (std::size_t m = 0; m < fl; ++m) f.add_to(row[m * fm + c], A(k, m));
        for (std::size_t j = 0; j < fm; ++j) f.sub_mul(row[k * fm + j], B(j, c), f.one());
        eqs.insert(std::move(row));
      }
  }
  return fl * fm - eqs.rank();
}

// Linear conditions on coefficient vectors (indexed like `tableaux`) for
// sum f(A) Theta_A restricted to S^lambda to land in S^mu: one row per
// coordinate of every psi_{d,t} image. Its null space is the landing space.
template <Field F>
Matrix<F> landing_conditions(const F& f, const Partition& lambda, const Partition& mu, const std::vector<Tableau>& tableaux) {
  SpechtMembership<F> member(f, mu);
  std::vector<std::vector<ModuleVector<F>>> images;
  for (const Tableau& A : tableaux) {
    require(A.shape() == lambda, "tableau shape mismatch");
    ModuleVector<F> v = theta_on_generator(f, A, mu);
    std::vector<ModuleVector<F>> per;
    for (const auto& psi : member.maps()) per.push_back(psi(v));
    images.push_back(std::move(per));
  }
  std::size_t rows = 0;
  std::vector<std::size_t> offset;
  for (const auto& psi : member.maps()) {
    offset.push_back(rows);
    rows += permutation_module(psi.target())->dim();
  }
  Matrix<F> m(f, rows, tableaux.size());
  for (std::size_t a = 0; a < tableaux.size(); ++a)
    for (std::size_t p = 0; p < images[a].size(); ++p)
      for (const auto& [k, c] : images[a][p].terms()) m(offset[p] + k, a) = c;
  return m;
}

// Row space equality of two condition matrices over the same unknowns, i.e.
// equality of their solution spaces.
template <Field F>
bool same_solutions(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  require(a.cols == b.cols, "condition matrices over different unknowns");
  Matrix<F> both(f, a.rows + b.rows, a.cols);
  for (std::size_t k = 0; k < a.data.size(); ++k) both.data[k] = a.data[k];
  for (std::size_t k = 0; k < b.data.size(); ++k) both.data[a.data.size() + k] = b.data[k];
  std::size_t ra = rank(f, a), rb = rank(f, b), rab = rank(f, both);
  return ra == rab && rb == rab;
}

// ---- row / column removal ----

// (lambda-bar, mu-bar) -> ((m, lambda-bar), (m, mu-bar)): prepend a first row of
// m ones and shift the other entries up by one.
template <Field F>
HomSpec<F> transfer_row_removal(const HomSpec<F>& h, int first_row) {
  validate(h);
  require(h.is_semistandard_form(), "transfer needs a homomorphism in semistandard form");
  Partition lambda{first_row}, mu{first_row};
  lambda.insert(lambda.end(), h.source.begin(), h.source.end());
  mu.insert(mu.end(), h.target.begin(), h.target.end());
  require_partition(lambda, "lifted source");
  require_partition(mu, "lifted target");
  HomSpec<F> out;
  out.source = lambda;
  out.target = mu;
  for (const auto& [Abar, c] : h.coefficients) {
    Tableau A;
    A.rows.emplace_back(static_cast<std::size_t>(first_row), 1);
    for (const auto& row : Abar.rows) {
      std::vector<int> shifted = row;
      for (int& v : shifted) ++v;
      A.rows.push_back(shifted);
    }
    out.coefficients.emplace_back(A, c);
  }
  return out;
}

// (lambda-bar, mu-bar) -> (lambda-bar + (1^k), mu-bar + (1^k)): prepend the
// column 1..k.
template <Field F>
HomSpec<F> transfer_column_removal(const HomSpec<F>& h, int k) {
  validate(h);
  require(h.is_semistandard_form(), "transfer needs a homomorphism in semistandard form");
  require(k >= static_cast<int>(h.source.size()) && k >= static_cast<int>(h.target.size()),
          "column length must cover both partitions");
  auto widen = [k](const Composition& p) {
    Partition out(static_cast<std::size_t>(k), 1);
    for (std::size_t i = 0; i < p.size(); ++i) out[i] += p[i];
    return out;
  };
  HomSpec<F> out;
  out.source = widen(h.source);
  out.target = widen(h.target);
  require_partition(out.target, "lifted target");
  for (const auto& [Abar, c] : h.coefficients) {
    Tableau A;
    for (int i = 1; i <= k; ++i) {
      std::vector<int> row{i};
      if (i <= static_cast<int>(Abar.rows.size()))
        row.insert(row.end(), Abar.rows[static_cast<std::size_t>(i - 1)].begin(), Abar.rows[static_cast<std::size_t>(i - 1)].end());
      A.rows.push_back(row);
    }
    out.coefficients.emplace_back(A, c);
  }
  return out;
}

// ---- the symbolic membership conditions for one-node pairs ----

// Equations on coefficients f(mu : i_1..i_s) (columns ordered as
// one_node_codes(mu)) whose joint vanishing is equivalent to psi_d Theta = 0 for
// all 1 <= d <= s. Terms naming a code that is not semistandard are dropped.
template <Field F>
Matrix<F> sumconds_equations(const F& f, const Partition& mu) {
  require(OneNodeCode::is_one_node_base(mu), "coefficient identities need mu = (mu_1,...,mu_s,1)");
  const std::vector<OneNodeCode> codes = one_node_codes(mu);
  std::map<std::vector<int>, std::size_t> column;
  for (std::size_t c = 0; c < codes.size(); ++c) column.emplace(codes[c].code(), c);
  const Partition lambda = OneNodeCode::source_of(mu);
  const int s = static_cast<int>(lambda.size());
  auto part = [&](int i) { return mu[static_cast<std::size_t>(i - 1)]; };

  std::vector<std::vector<typename F::value_type>> rows;
  for (int d = 1; d <= s; ++d) {
    const int next = part(d + 1);
    Composition nu = nu_composition(mu, d, next - 1);
    int l = 1;
    while (d + l + 1 <= static_cast<int>(mu.size()) && part(d + l + 1) == next) ++l;
    const auto qpow = q_power(f, next - 1);
    for (const Tableau& S : enumerate_semistandard(lambda, nu)) {
      std::vector<int> j(static_cast<std::size_t>(s) + 1, 0);  // 1-based
      for (int a = 1; a <= s; ++a) {
        const auto& row = S.rows[static_cast<std::size_t>(a - 1)];
        for (std::size_t b = 0; b + 1 < row.size(); ++b)
          if (row[b] != a) throw std::logic_error("unexpected tableau in T_0(lambda, nu)");
        j[static_cast<std::size_t>(a)] = row.back();
      }
      std::vector<typename F::value_type> eq(codes.size(), f.zero());
      auto add_term = [&](std::vector<int> code1, const typename F::value_type& coeff) {
        std::vector<int> code(code1.begin() + 1, code1.end());
        auto it = column.find(code);
        if (it != column.end()) f.add_to(eq[it->second], coeff);
      };
      auto sign = [&](int k) { return (k % 2 == 0) ? f.one() : f.from_int(-1); };
      if (d == 1) {
        for (int k = 1; k <= l; ++k) {
          std::vector<int> c = j;
          c[1] = k + 1;
          int pos = 2;
          for (int v = 2; v <= l + 1; ++v)
            if (v != k + 1) c[static_cast<std::size_t>(pos++)] = v;
          auto coeff = k == 1 ? qint(f, part(1) - part(2) + 2) : sign(k - 1);
          add_term(c, coeff);
        }
        if (l + 1 <= s) {
          std::vector<int> c = j;
          c[1] = j[static_cast<std::size_t>(l + 1)];
          for (int v = 2; v <= l + 1; ++v) c[static_cast<std::size_t>(v)] = v;
          add_term(c, sign(l));
        }
      } else {
        int rc = 0;
        for (int a = 1; a < d; ++a)
          if (j[static_cast<std::size_t>(a)] == d) rc = a;
        if (rc == 0) throw std::logic_error("no position r < d holding d");
        {
          std::vector<int> c = j;
          c[static_cast<std::size_t>(rc)] = d + 1;
          add_term(c, q_power(f, part(d)));
        }
        if (part(d) == next) {
          std::vector<int> c = j;
          c[static_cast<std::size_t>(rc)] = d;
          c[static_cast<std::size_t>(d)] = d + 1;
          add_term(c, qpow);
        } else {
          for (int k = 1; k <= l; ++k) {
            std::vector<int> c = j;
            c[static_cast<std::size_t>(rc)] = d;
            c[static_cast<std::size_t>(d)] = d + k;
            int pos = d + 1;
            for (int v = d + 1; v <= d + l; ++v)
              if (v != d + k) c[static_cast<std::size_t>(pos++)] = v;
            auto coeff = k == 1 ? f.mul(qpow, qint(f, part(d) - next + 1)) : f.mul(qpow, sign(k - 1));
            add_term(c, coeff);
          }
          if (d + l <= s) {
            std::vector<int> c = j;
            c[static_cast<std::size_t>(rc)] = d;
            c[static_cast<std::size_t>(d)] = j[static_cast<std::size_t>(d + l)];
            for (int v = d + 1; v <= d + l; ++v) c[static_cast<std::size_t>(v)] = v;
            add_term(c, f.mul(qpow, sign(l)));
          }
        }
      }
      if (std::any_of(eq.begin(), eq.end(), [&](const auto& x) { return !f.is_zero(x); })) rows.push_back(std::move(eq));
    }
  }
  Matrix<F> m(f, rows.size(), codes.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < codes.size(); ++c) m(r, c) = rows[r][c];
  return m;
}

// True iff every equation of sumconds_equations vanishes on the coefficients.
template <Field F>
bool sumconds_check(const F& f, const Partition& mu, const std::vector<std::pair<OneNodeCode, typename F::value_type>>& coeffs) {
  const std::vector<OneNodeCode> codes = one_node_codes(mu);
  std::vector<typename F::value_type> x(codes.size(), f.zero());
  for (const auto& [code, c] : coeffs) {
    require(code.base() == mu, "code " + code.to_string() + " has a different base");
    auto it = std::find(codes.begin(), codes.end(), code);
    require(it != codes.end(), "code " + code.to_string() + " is not semistandard");
    f.add_to(x[static_cast<std::size_t>(it - codes.begin())], c);
  }
  Matrix<F> eqs = sumconds_equations(f, mu);
  for (std::size_t r = 0; r < eqs.rows; ++r) {
    auto acc = f.zero();
    for (std::size_t c = 0; c < eqs.cols; ++c)
      if (!f.is_zero(eqs(r, c)) && !f.is_zero(x[c])) f.add_to(acc, f.mul(eqs(r, c), x[c]));
    if (!f.is_zero(acc)) return false;
  }
  return true;
}

}  // namespace hecke
