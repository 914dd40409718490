#pragma once

#include "hecke/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hecke {

// Exact rational number. Values whose numerator and denominator fit in 64 bits
// are kept inline; anything larger is promoted to a boost cpp_rational and
// demoted again as soon as it fits.
class Rational {
 public:
  using big_type = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    set_from_wide(n, d);
  }
  explicit Rational(const big_type& b) { assign_big(b); }

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<big_type>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<big_type>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const {
    return big_ ? boost::multiprecision::denominator(*big_) == 1 : den_ == 1;
  }
  int sign() const {
    if (big_) return big_->sign();
    return (num_ > 0) - (num_ < 0);
  }

  big_type to_big() const { return big_ ? *big_ : big_type(num_) / big_type(den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical form: a big value never fits inline
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t r;
        if (!__builtin_add_overflow(a.num_, b.num_, &r)) return Rational(r);
      }
      __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
      __int128 d = static_cast<__int128>(a.den_) * b.den_;
      Rational out;
      out.set_from_wide(n, d);
      return out;
    }
    return Rational(a.to_big() + b.to_big());
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t r;
        if (!__builtin_sub_overflow(a.num_, b.num_, &r)) return Rational(r);
      }
      __int128 n = static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_;
      __int128 d = static_cast<__int128>(a.den_) * b.den_;
      Rational out;
      out.set_from_wide(n, d);
      return out;
    }
    return Rational(a.to_big() - b.to_big());
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t r;
        if (!__builtin_mul_overflow(a.num_, b.num_, &r)) return Rational(r);
      }
      __int128 n = static_cast<__int128>(a.num_) * b.num_;
      __int128 d = static_cast<__int128>(a.den_) * b.den_;
      Rational out;
      out.set_from_wide(n, d);
      return out;
    }
    return Rational(a.to_big() * b.to_big());
  }

  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

  Rational operator-() const {
    if (!big_ && num_ != std::numeric_limits<std::int64_t>::min()) {
      Rational r;
      r.num_ = -num_;
      r.den_ = den_;
      return r;
    }
    return Rational(-to_big());
  }

  Rational inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    if (!big_) {
      Rational r;
      r.set_from_wide(static_cast<__int128>(den_), static_cast<__int128>(num_));
      return r;
    }
    return Rational(big_type(1) / *big_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  std::string to_string() const {
    if (big_) {
      auto n = boost::multiprecision::numerator(*big_);
      auto d = boost::multiprecision::denominator(*big_);
      return d == 1 ? n.str() : n.str() + "/" + d.str();
    }
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "n" or "n/d" with optional sign.
  static Rational parse(std::string_view s) {
    using boost::multiprecision::cpp_int;
    auto slash = s.find('/');
    auto as_int = [](std::string_view t) {
      if (t.empty()) throw std::invalid_argument("empty integer literal");
      std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
      if (i == t.size()) throw std::invalid_argument("bad integer literal '" + std::string(t) + "'");
      for (std::size_t k = i; k < t.size(); ++k)
        if (t[k] < '0' || t[k] > '9') throw std::invalid_argument("bad integer literal '" + std::string(t) + "'");
      std::string body(t[0] == '+' ? t.substr(1) : t);
      return cpp_int(body);
    };
    if (slash == std::string_view::npos) return Rational(big_type(as_int(s)));
    cpp_int d = as_int(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(big_type(as_int(s.substr(0, slash)), d));
  }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  void set_from_wide(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      big_.reset();
      return;
    }
    if (d != 1) {
      __int128 g = gcd128(n, d);
      if (g != 1) {
        n /= g;
        d /= g;
      }
    }
    constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
    if (n >= lo && n <= hi && d <= hi) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      big_.reset();
      return;
    }
    assign_big(big_type(to_cpp_int(n), to_cpp_int(d)));
  }

  static boost::multiprecision::cpp_int to_cpp_int(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    boost::multiprecision::cpp_int r = static_cast<std::uint64_t>(u >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(u);
    return neg ? -r : r;
  }

  void assign_big(const big_type& b) {
    using boost::multiprecision::cpp_int;
    const cpp_int& n = boost::multiprecision::numerator(b);
    const cpp_int& d = boost::multiprecision::denominator(b);
    static const cpp_int lo = std::numeric_limits<std::int64_t>::min();
    static const cpp_int hi = std::numeric_limits<std::int64_t>::max();
    if (n >= lo && n <= hi && d <= hi) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      big_.reset();
    } else {
      big_ = std::make_unique<big_type>(b);
      num_ = 0;
      den_ = 1;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<big_type> big_;
};

}  // namespace hecke
