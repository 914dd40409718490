#pragma once

#include "hecke/errors.hpp"
#include "hecke/rational.hpp"

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hecke::poly {

// Integer polynomials are coefficient vectors, lowest degree first, with no
// trailing zeros (the zero polynomial is empty).
using IntPoly = std::vector<std::int64_t>;

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division a / b for integer polynomials with b monic.
inline IntPoly divide_exact(IntPoly a, const IntPoly& b) {
  trim(a);
  if (b.empty() || b.back() != 1) throw std::logic_error("divide_exact needs a monic divisor");
  if (a.size() < b.size()) {
    if (!a.empty()) throw std::logic_error("divide_exact: nonzero remainder");
    return {};
  }
  IntPoly quot(a.size() - b.size() + 1, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    std::int64_t c = a[k + b.size() - 1];
    quot[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) throw std::logic_error("divide_exact: nonzero remainder");
  return quot;
}

// Phi_e, computed as (x^e - 1) divided by Phi_d for every proper divisor d of e.
inline IntPoly cyclotomic(int e) {
  require(e >= 1, "cyclotomic polynomial needs e >= 1");
  IntPoly p(static_cast<std::size_t>(e) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(e)] = 1;
  for (int d = 1; d < e; ++d)
    if (e % d == 0) p = divide_exact(p, cyclotomic(d));
  return p;
}

// ---- polynomials over F_p (coefficients in [0,p), no trailing zeros) ----

using ModPoly = std::vector<std::uint32_t>;

inline std::uint32_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

inline void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ModPoly reduce_coeffs(const IntPoly& a, std::uint32_t p) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t v = a[i] % static_cast<std::int64_t>(p);
    r[i] = static_cast<std::uint32_t>(v < 0 ? v + p : v);
  }
  trim(r);
  return r;
}

// Remainder of a modulo b over F_p (b nonzero).
inline ModPoly mod_rem(ModPoly a, const ModPoly& b, std::uint32_t p) {
  trim(a);
  std::uint32_t lead_inv = mod_pow(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j)
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p - c) * b[j]) % p);
    trim(a);
  }
  return a;
}

// All monic polynomials of the given degree over F_p, in lexicographic order of
// their coefficient vectors read from the constant term upward.
inline std::vector<ModPoly> monic_of_degree(int deg, std::uint32_t p) {
  std::vector<ModPoly> out;
  ModPoly cur(static_cast<std::size_t>(deg) + 1, 0);
  cur[static_cast<std::size_t>(deg)] = 1;
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < static_cast<std::size_t>(deg) && ++cur[i] == p) cur[i++] = 0;
    if (i == static_cast<std::size_t>(deg)) break;
  }
  return out;
}

// Exhaustive irreducibility test: no monic factor of degree 1..deg/2.
inline bool is_irreducible(const ModPoly& g, std::uint32_t p) {
  int deg = static_cast<int>(g.size()) - 1;
  if (deg < 1) return false;
  for (int k = 1; 2 * k <= deg; ++k)
    for (const auto& f : monic_of_degree(k, p))
      if (mod_rem(g, f, p).empty()) return false;
  return true;
}

// ---- parsing / printing of univariate polynomials with rational coefficients ----

// Parses sums of terms like "3", "-1/2*z^2", "z", "+ 4 z^3". `vars` lists the
// accepted names of the indeterminate. Returns (degree, coefficient) pairs.
inline std::vector<std::pair<int, Rational>> parse_terms(std::string_view text,
                                                         std::initializer_list<std::string_view> vars) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw DomainError("empty scalar");
  std::vector<std::pair<int, Rational>> terms;
  std::size_t i = 0;
  auto fail = [&]() { throw DomainError("cannot parse scalar '" + std::string(text) + "'"); };
  while (i < s.size()) {
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
      neg = s[i] == '-';
      ++i;
    } else if (!terms.empty()) {
      fail();
    }
    std::size_t start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    Rational coeff(1);
    bool has_coeff = i > start;
    if (has_coeff) coeff = Rational::parse(std::string_view(s).substr(start, i - start));
    if (i < s.size() && s[i] == '*') {
      if (!has_coeff) fail();
      ++i;
    }
    int degree = 0;
    bool has_var = false;
    for (auto v : vars) {
      if (s.compare(i, v.size(), v) == 0) {
        has_var = true;
        i += v.size();
        break;
      }
    }
    if (has_var) {
      degree = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t ds = i;
        if (i < s.size() && s[i] == '-') ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == ds) fail();
        degree = std::stoi(s.substr(ds, i - ds));
      }
    } else if (!has_coeff) {
      fail();
    }
    terms.emplace_back(degree, neg ? -coeff : coeff);
  }
  return terms;
}

// Prints coefficients (lowest degree first) as e.g. "1-z+1/2*z^3".
template <class Coeff, class ToString>
std::string format_terms(const std::vector<Coeff>& coeffs, std::string_view var, ToString&& str) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    std::string c = str(coeffs[k]);
    if (c == "0") continue;
    bool neg = c[0] == '-';
    if (neg) c.erase(0, 1);
    if (!out.empty() || neg) out += neg ? "-" : "+";
    if (k == 0) {
      out += c;
      continue;
    }
    if (c != "1") out += c + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace hecke::poly
