#pragma once

#include "hecke/errors.hpp"
#include "hecke/polynomial.hpp"
#include "hecke/rational.hpp"

#include <boost/container/small_vector.hpp>

#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hecke {

// ---- runtime field descriptions ----

struct PrimeFieldSpec {
  std::uint32_t p = 2;
  std::int64_t q = 1;
  bool operator==(const PrimeFieldSpec&) const = default;
};

struct CyclotomicSpec {
  int e = 2;
  bool operator==(const CyclotomicSpec&) const = default;
};

// F_p[x]/(g). Either `modulus` is given explicitly (lowest degree first, monic)
// or it is empty and the first irreducible factor of Phi_e over F_p is used.
struct ExtensionSpec {
  std::uint32_t p = 2;
  std::vector<std::uint32_t> modulus;
  int e = 0;
  std::string q = "x";
  bool operator==(const ExtensionSpec&) const = default;
};

using FieldSpec = std::variant<PrimeFieldSpec, CyclotomicSpec, ExtensionSpec>;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---- F_p with a chosen nonzero q ----

class PrimeField {
 public:
  using value_type = std::uint32_t;

  PrimeField(std::uint32_t p, std::int64_t q) : p_(p) {
    require(p < (1u << 31), "prime too large");
    require(is_prime(p), "p=" + std::to_string(p) + " is not prime");
    q_ = from_int(q);
    require(q_ != 0, "q must be nonzero in F_p");
    q_inv_ = inv(q_);
  }

  std::uint32_t p() const { return p_; }
  int characteristic() const { return static_cast<int>(p_); }
  std::uint64_t order_bound() const { return p_; }
  FieldSpec spec() const { return PrimeFieldSpec{p_, static_cast<std::int64_t>(q_)}; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type q() const { return q_; }
  value_type q_inv() const { return q_inv_; }
  value_type from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }

  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return poly::mod_pow(a, p_ - 2, p_);
  }
  // acc -= c * a
  void sub_mul(value_type& acc, value_type c, value_type a) const { acc = sub(acc, mul(c, a)); }
  void add_to(value_type& acc, value_type a) const { acc = add(acc, a); }

  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }

  std::string format(value_type a) const { return std::to_string(a); }
  value_type parse(std::string_view s) const {
    Rational r = Rational::parse(s);
    auto big = r.to_big();
    auto num = boost::multiprecision::numerator(big) % p_;
    auto den = boost::multiprecision::denominator(big) % p_;
    require(den != 0, "denominator vanishes mod p");
    return mul(from_int(static_cast<std::int64_t>(num)), inv(from_int(static_cast<std::int64_t>(den))));
  }

  template <class Rng>
  value_type random(Rng& rng) const {
    return std::uniform_int_distribution<std::uint32_t>(0, p_ - 1)(rng);
  }

  std::string name() const { return "p=" + std::to_string(p_) + ",q=" + std::to_string(q_); }

 private:
  std::uint32_t p_;
  value_type q_ = 1;
  value_type q_inv_ = 1;
};

// ---- F_p[x]/(g) with g irreducible ----

class ExtensionField {
 public:
  using value_type = boost::container::small_vector<std::uint32_t, 8>;

  // modulus: coefficients lowest degree first; it is made monic.
  ExtensionField(std::uint32_t p, poly::ModPoly modulus, std::string_view q_text = "x") : p_(p) {
    require(p < (1u << 16), "prime too large for an extension field");
    require(is_prime(p), "p=" + std::to_string(p) + " is not prime");
    for (auto& c : modulus) c %= p;
    poly::trim(modulus);
    require(modulus.size() >= 2, "modulus must have degree at least 1");
    std::uint32_t lead_inv = poly::mod_pow(modulus.back(), p - 2, p);
    for (auto& c : modulus) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * lead_inv % p);
    require(poly::is_irreducible(modulus, p), "modulus is not irreducible over F_" + std::to_string(p));
    g_ = std::move(modulus);
    deg_ = g_.size() - 1;
    q_ = parse(q_text);
    require(!is_zero(q_), "q must be a unit");
    q_inv_ = inv(q_);
  }

  // First irreducible factor of Phi_e over F_p; requires p not dividing e.
  static poly::ModPoly auto_modulus(std::uint32_t p, int e) {
    require(e >= 2, "e must be at least 2");
    require(is_prime(p), "p=" + std::to_string(p) + " is not prime");
    require(e % static_cast<int>(p) != 0, "ext field needs p not dividing e");
    poly::ModPoly phi = poly::reduce_coeffs(poly::cyclotomic(e), p);
    for (int d = 1; d < static_cast<int>(phi.size()); ++d)
      for (const auto& f : poly::monic_of_degree(d, p))
        if (poly::mod_rem(phi, f, p).empty() && poly::is_irreducible(f, p)) return f;
    throw std::logic_error("no irreducible factor found");
  }

  std::uint32_t p() const { return p_; }
  const poly::ModPoly& modulus() const { return g_; }
  int characteristic() const { return static_cast<int>(p_); }
  std::uint64_t order_bound() const {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < deg_; ++i) s *= p_;
    return s;
  }
  FieldSpec spec() const {
    ExtensionSpec s;
    s.p = p_;
    if (from_e_) {
      s.e = from_e_;
      s.q = q_text_;
    } else {
      s.modulus = g_;
      s.q = format(q_);
    }
    return s;
  }

  // Marks the field as built from the quantum characteristic e, so spec() reports it that way.
  void set_origin(int e, std::string_view q_text) {
    from_e_ = e;
    q_text_ = q_text;
  }

  value_type zero() const { return value_type(deg_, 0); }
  value_type one() const { return from_int(1); }
  value_type q() const { return q_; }
  value_type q_inv() const { return q_inv_; }
  value_type from_int(std::int64_t v) const {
    value_type r(deg_, 0);
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    r[0] = static_cast<std::uint32_t>(m < 0 ? m + p_ : m);
    return r;
  }

  value_type add(const value_type& a, const value_type& b) const {
    value_type r(deg_);
    for (std::size_t i = 0; i < deg_; ++i) {
      std::uint32_t s = a[i] + b[i];
      r[i] = s >= p_ ? s - p_ : s;
    }
    return r;
  }
  value_type sub(const value_type& a, const value_type& b) const {
    value_type r(deg_);
    for (std::size_t i = 0; i < deg_; ++i) r[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p_ - b[i];
    return r;
  }
  value_type neg(const value_type& a) const { return sub(zero(), a); }
  value_type mul(const value_type& a, const value_type& b) const {
    boost::container::small_vector<std::uint64_t, 16> prod(2 * deg_ - 1, 0);
    for (std::size_t i = 0; i < deg_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < deg_; ++j) prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p_;
    }
    for (std::size_t k = prod.size(); k-- > deg_;) {
      std::uint64_t c = prod[k];
      if (c == 0) continue;
      for (std::size_t j = 0; j < deg_; ++j)
        prod[k - deg_ + j] = (prod[k - deg_ + j] + (p_ - c) * g_[j]) % p_;
    }
    value_type r(deg_);
    for (std::size_t i = 0; i < deg_; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
    return r;
  }
  value_type inv(const value_type& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero");
    // a^(|F|-2)
    std::uint64_t e = order_bound() - 2;
    value_type r = one(), b = a;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  void sub_mul(value_type& acc, const value_type& c, const value_type& a) const { acc = sub(acc, mul(c, a)); }
  void add_to(value_type& acc, const value_type& a) const { acc = add(acc, a); }

  bool is_zero(const value_type& a) const {
    for (auto c : a)
      if (c) return false;
    return true;
  }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  std::string format(const value_type& a) const {
    std::vector<std::uint32_t> c(a.begin(), a.end());
    return poly::format_terms(c, "x", [](std::uint32_t v) { return std::to_string(v); });
  }
  value_type parse(std::string_view s) const {
    value_type r = zero();
    PrimeField base(p_, 1);
    for (auto& [d, c] : poly::parse_terms(s, {"x"})) {
      require(d >= 0, "negative powers are not accepted in scalars");
      value_type term = from_int(0);
      term[0] = base.parse(c.to_string());
      value_type xpow = from_int(1);
      value_type xv = zero();
      if (deg_ == 1) {
        xv[0] = static_cast<std::uint32_t>((p_ - g_[0]) % p_);
      } else {
        xv[1] = 1;
      }
      for (int k = 0; k < d; ++k) xpow = mul(xpow, xv);
      r = add(r, mul(term, xpow));
    }
    return r;
  }

  template <class Rng>
  value_type random(Rng& rng) const {
    value_type r(deg_);
    std::uniform_int_distribution<std::uint32_t> dist(0, p_ - 1);
    for (auto& c : r) c = dist(rng);
    return r;
  }

  std::string name() const {
    std::vector<std::uint32_t> c(g_.begin(), g_.end());
    return "ext:p=" + std::to_string(p_) + ",modulus=" +
           poly::format_terms(c, "x", [](std::uint32_t v) { return std::to_string(v); }) + ",q=" + format(q_);
  }

 private:
  std::uint32_t p_;
  poly::ModPoly g_;
  std::size_t deg_ = 1;
  value_type q_, q_inv_;
  int from_e_ = 0;
  std::string q_text_ = "x";
};

// ---- Q(zeta_e) with q = zeta_e ----

class CyclotomicField {
 public:
  using value_type = boost::container::small_vector<Rational, 4>;

  explicit CyclotomicField(int e) : e_(e) {
    require(e >= 2, "cyclotomic field needs e >= 2");
    require(e <= 200, "e too large");
    phi_ = poly::cyclotomic(e);
    deg_ = phi_.size() - 1;
    q_ = zero();
    if (deg_ == 1) {
      q_[0] = Rational(-phi_[0]);
    } else {
      q_[1] = Rational(1);
    }
    q_inv_ = inv(q_);
  }

  int e() const { return e_; }
  int characteristic() const { return 0; }
  std::uint64_t order_bound() const { return static_cast<std::uint64_t>(e_); }
  std::size_t degree() const { return deg_; }
  FieldSpec spec() const { return CyclotomicSpec{e_}; }

  value_type zero() const { return value_type(deg_); }
  value_type one() const { return from_int(1); }
  value_type q() const { return q_; }
  value_type q_inv() const { return q_inv_; }
  value_type from_int(std::int64_t v) const {
    value_type r(deg_);
    r[0] = Rational(v);
    return r;
  }
  value_type from_rational(const Rational& v) const {
    value_type r(deg_);
    r[0] = v;
    return r;
  }

  value_type add(const value_type& a, const value_type& b) const {
    value_type r(deg_);
    for (std::size_t i = 0; i < deg_; ++i) r[i] = a[i] + b[i];
    return r;
  }
  value_type sub(const value_type& a, const value_type& b) const {
    value_type r(deg_);
    for (std::size_t i = 0; i < deg_; ++i) r[i] = a[i] - b[i];
    return r;
  }
  value_type neg(const value_type& a) const {
    value_type r(deg_);
    for (std::size_t i = 0; i < deg_; ++i) r[i] = -a[i];
    return r;
  }
  value_type mul(const value_type& a, const value_type& b) const {
    if (deg_ == 1) return value_type{a[0] * b[0]};
    boost::container::small_vector<Rational, 8> prod(2 * deg_ - 1);
    for (std::size_t i = 0; i < deg_; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < deg_; ++j)
        if (!b[j].is_zero()) prod[i + j] += a[i] * b[j];
    }
    for (std::size_t k = prod.size(); k-- > deg_;) {
      if (prod[k].is_zero()) continue;
      const Rational c = prod[k];
      for (std::size_t j = 0; j < deg_; ++j)
        if (phi_[j] != 0) prod[k - deg_ + j] -= c * Rational(phi_[j]);
    }
    value_type r(deg_);
    for (std::size_t i = 0; i < deg_; ++i) r[i] = std::move(prod[i]);
    return r;
  }
  // Solves a * x = 1 by elimination on the multiplication-by-a matrix.
  value_type inv(const value_type& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero");
    std::size_t n = deg_;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    value_type basis = one();
    value_type z = zero();
    if (n > 1) z[1] = Rational(1);
    for (std::size_t j = 0; j < n; ++j) {  // column j = a * z^j
      value_type col = mul(a, basis);
      for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
      if (n > 1) basis = mul(basis, z);
    }
    m[0][n] = Rational(1);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (m[piv][c].is_zero()) ++piv;
      std::swap(m[piv], m[c]);
      Rational pinv = m[c][c].inverse();
      for (auto& v : m[c]) v = v * pinv;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || m[r][c].is_zero()) continue;
        Rational f = m[r][c];
        for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
      }
    }
    value_type r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = m[i][n];
    return r;
  }
  void sub_mul(value_type& acc, const value_type& c, const value_type& a) const {
    if (deg_ == 1) {
      acc[0] -= c[0] * a[0];
      return;
    }
    value_type p = mul(c, a);
    for (std::size_t i = 0; i < deg_; ++i)
      if (!p[i].is_zero()) acc[i] -= p[i];
  }
  void add_to(value_type& acc, const value_type& a) const {
    for (std::size_t i = 0; i < deg_; ++i)
      if (!a[i].is_zero()) acc[i] += a[i];
  }

  bool is_zero(const value_type& a) const {
    for (const auto& c : a)
      if (!c.is_zero()) return false;
    return true;
  }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  std::string format(const value_type& a) const {
    std::vector<Rational> c(a.begin(), a.end());
    return poly::format_terms(c, "z", [](const Rational& r) { return r.to_string(); });
  }
  value_type parse(std::string_view s) const {
    value_type r = zero();
    for (auto& [d, c] : poly::parse_terms(s, {"z"})) {
      value_type term = from_rational(c);
      value_type base = d >= 0 ? q_ : q_inv_;
      for (int k = 0; k < (d >= 0 ? d : -d); ++k) term = mul(term, base);
      r = add(r, term);
    }
    return r;
  }

  template <class Rng>
  value_type random(Rng& rng) const {
    value_type r(deg_);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    for (auto& c : r) c = Rational(num(rng), den(rng));
    return r;
  }

  std::string name() const { return "cyclotomic:e=" + std::to_string(e_); }

 private:
  int e_;
  poly::IntPoly phi_;
  std::size_t deg_ = 1;
  value_type q_, q_inv_;
};

// ---- the interface every scalar field satisfies ----

template <class F>
concept Field = requires(const F& f, const typename F::value_type& a, typename F::value_type& m) {
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.q() } -> std::same_as<typename F::value_type>;
  { f.q_inv() } -> std::same_as<typename F::value_type>;
  { f.from_int(std::int64_t{}) } -> std::same_as<typename F::value_type>;
  { f.add(a, a) } -> std::same_as<typename F::value_type>;
  { f.sub(a, a) } -> std::same_as<typename F::value_type>;
  { f.mul(a, a) } -> std::same_as<typename F::value_type>;
  { f.neg(a) } -> std::same_as<typename F::value_type>;
  { f.inv(a) } -> std::same_as<typename F::value_type>;
  f.sub_mul(m, a, a);
  f.add_to(m, a);
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.equal(a, a) } -> std::same_as<bool>;
  { f.format(a) } -> std::same_as<std::string>;
  { f.characteristic() } -> std::same_as<int>;
  { f.spec() } -> std::same_as<FieldSpec>;
};

static_assert(Field<PrimeField>);
static_assert(Field<ExtensionField>);
static_assert(Field<CyclotomicField>);

// q^k for any integer k.
template <Field F>
typename F::value_type q_power(const F& f, int k) {
  typename F::value_type base = k >= 0 ? f.q() : f.q_inv();
  typename F::value_type r = f.one();
  for (int i = 0; i < (k >= 0 ? k : -k); ++i) r = f.mul(r, base);
  return r;
}

// ---- parsing and dispatch of field specs ----

namespace detail {

inline std::vector<std::pair<std::string, std::string>> split_kv(std::string_view s) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t i = 0;
  while (i <= s.size()) {
    std::size_t comma = s.find(',', i);
    if (comma == std::string_view::npos) comma = s.size();
    std::string_view part = s.substr(i, comma - i);
    auto eq = part.find('=');
    if (eq == std::string_view::npos) throw DomainError("expected key=value in field spec, got '" + std::string(part) + "'");
    out.emplace_back(std::string(part.substr(0, eq)), std::string(part.substr(eq + 1)));
    i = comma + 1;
  }
  return out;
}

inline std::int64_t to_int(const std::string& v, const std::string& key) {
  try {
    std::size_t used = 0;
    long long r = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return r;
  } catch (const std::exception&) {
    throw DomainError("field spec key '" + key + "' needs an integer, got '" + v + "'");
  }
}

}  // namespace detail

// Accepted forms: "p=7,q=2", "prime:p=7,q=2", "cyclotomic:e=3", "ext:p=2,e=3",
// "ext:p=2,modulus=x^2+x+1[,q=x]".
inline FieldSpec parse_field_spec(std::string_view text) {
  std::string_view body = text;
  std::string kind = "prime";
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    kind = std::string(text.substr(0, colon));
    body = text.substr(colon + 1);
  }
  auto kv = detail::split_kv(body);
  auto get = [&](const std::string& key) -> std::optional<std::string> {
    for (auto& [k, v] : kv)
      if (k == key) return v;
    return std::nullopt;
  };
  for (auto& [k, v] : kv) {
    bool known = (kind == "prime" && (k == "p" || k == "q")) || (kind == "cyclotomic" && k == "e") ||
                 (kind == "ext" && (k == "p" || k == "e" || k == "modulus" || k == "q"));
    if (!known) throw DomainError("unknown key '" + k + "' for field kind '" + kind + "'");
  }
  if (kind == "prime") {
    auto p = get("p");
    require(p.has_value(), "prime field spec needs p");
    auto q = get("q");
    std::int64_t pv = detail::to_int(*p, "p");
    require(pv >= 2 && pv < (1ll << 31), "p out of range");
    require(is_prime(static_cast<std::uint64_t>(pv)), "p=" + std::to_string(pv) + " is not prime");
    std::int64_t qv = q ? detail::to_int(*q, "q") : 1;
    require(qv % pv != 0, "q must be nonzero in F_p");
    return PrimeFieldSpec{static_cast<std::uint32_t>(pv), qv};
  }
  if (kind == "cyclotomic") {
    auto e = get("e");
    require(e.has_value(), "cyclotomic field spec needs e");
    std::int64_t ev = detail::to_int(*e, "e");
    require(ev >= 2 && ev <= 200, "cyclotomic field needs 2 <= e <= 200");
    return CyclotomicSpec{static_cast<int>(ev)};
  }
  if (kind == "ext") {
    ExtensionSpec s;
    auto p = get("p");
    require(p.has_value(), "ext field spec needs p");
    std::int64_t pv = detail::to_int(*p, "p");
    require(pv >= 2 && pv < (1 << 16), "p out of range");
    s.p = static_cast<std::uint32_t>(pv);
    if (auto m = get("modulus")) {
      int maxdeg = 0;
      auto terms = poly::parse_terms(*m, {"x"});
      for (auto& [d, c] : terms) {
        require(d >= 0, "modulus has a negative power");
        maxdeg = std::max(maxdeg, d);
      }
      std::vector<std::int64_t> coeffs(static_cast<std::size_t>(maxdeg) + 1, 0);
      PrimeField base(s.p, 1);
      for (auto& [d, c] : terms) coeffs[static_cast<std::size_t>(d)] += base.parse(c.to_string());
      s.modulus = poly::reduce_coeffs(coeffs, s.p);
    } else {
      auto e = get("e");
      require(e.has_value(), "ext field spec needs e or modulus");
      s.e = static_cast<int>(detail::to_int(*e, "e"));
    }
    if (auto q = get("q")) s.q = *q;
    return s;
  }
  throw DomainError("unknown field kind '" + kind + "'");
}

inline std::string to_string(const FieldSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PrimeFieldSpec>) {
          return "p=" + std::to_string(s.p) + ",q=" + std::to_string(s.q);
        } else if constexpr (std::is_same_v<T, CyclotomicSpec>) {
          return "cyclotomic:e=" + std::to_string(s.e);
        } else {
          std::string out = "ext:p=" + std::to_string(s.p);
          if (s.modulus.empty()) {
            out += ",e=" + std::to_string(s.e);
          } else {
            std::vector<std::uint32_t> c(s.modulus.begin(), s.modulus.end());
            out += ",modulus=" + poly::format_terms(c, "x", [](std::uint32_t v) { return std::to_string(v); });
          }
          if (s.q != "x") out += ",q=" + s.q;
          return out;
        }
      },
      spec);
}

inline PrimeField make_field(const PrimeFieldSpec& s) { return PrimeField(s.p, s.q); }
inline CyclotomicField make_field(const CyclotomicSpec& s) { return CyclotomicField(s.e); }
inline ExtensionField make_field(const ExtensionSpec& s) {
  poly::ModPoly g = s.modulus.empty() ? ExtensionField::auto_modulus(s.p, s.e) : s.modulus;
  ExtensionField f(s.p, g, s.q);
  if (s.modulus.empty()) f.set_origin(s.e, s.q);
  return f;
}

// Builds the concrete field and calls fn(field).
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  return std::visit([&](const auto& s) -> decltype(auto) { return fn(make_field(s)); }, spec);
}

}  // namespace hecke
