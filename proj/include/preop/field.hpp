#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>

#include "preop/error.hpp"

namespace preop {

/// Exact field element. Two models ship: Rational (arbitrary-precision
/// fractions) and Fp (residues modulo a prime). All coefficients, tensors and
/// matrices in the library are generic over this concept, so every identity
/// check is an exact equality.
template <class F>
concept exact_field = requires(const F a, const F b, const typename F::Config cfg, long long i,
                               const std::string s) {
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a.inverse() } -> std::same_as<F>;
  { a.is_zero() } -> std::same_as<bool>;
  { a == b } -> std::same_as<bool>;
  { a.str() } -> std::same_as<std::string>;
  { a.config() } -> std::same_as<typename F::Config>;
  { cfg.zero() } -> std::same_as<F>;
  { cfg.one() } -> std::same_as<F>;
  { cfg.from_int(i) } -> std::same_as<F>;
  { cfg.from_fraction(i, i) } -> std::same_as<F>;
  { cfg.parse(s) } -> std::same_as<F>;
  { cfg.describe() } -> std::same_as<std::string>;
  { cfg == cfg } -> std::same_as<bool>;
};

/// Element of Q as a reduced fraction. Values that fit in 64-bit
/// numerator/denominator live inline (the overwhelmingly common case in the
/// identity suites, where everything is a small integer); anything larger is
/// promoted to a GMP rational and demoted back once it fits, so elimination
/// swell never overflows and equal values always share one representation.
class Rational {
 public:
  struct Config {
    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }
    Rational from_int(long long n) const { return Rational(n); }
    Rational from_fraction(long long num, long long den) const {
      if (den == 0) throw division_by_zero();
      return make(num, den);
    }
    /// Accepts "n" or "n/d" with arbitrary-precision parts.
    Rational parse(const std::string& text) const {
      mpq_class q;
      if (q.set_str(text, 10) != 0) throw load_error("cannot parse rational literal '" + text + "'");
      if (q.get_den() == 0) throw division_by_zero();
      q.canonicalize();
      return from_mpq(std::move(q));
    }
    std::string describe() const { return "rational"; }
    bool operator==(const Config&) const = default;
  };

  Rational() = default;
  explicit Rational(long long n) : num_(n) {}
  explicit Rational(mpq_class v) {
    v.canonicalize();
    *this = from_mpq(std::move(v));
  }

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  Rational operator+(const Rational& o) const {
    if (!big_ && !o.big_)
      return make(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
    return from_mpq(mpq_class(as_mpq() + o.as_mpq()));
  }
  Rational operator-(const Rational& o) const {
    if (!big_ && !o.big_)
      return make(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
    return from_mpq(mpq_class(as_mpq() - o.as_mpq()));
  }
  Rational operator*(const Rational& o) const {
    if (!big_ && !o.big_) return make(i128(num_) * o.num_, i128(den_) * o.den_);
    return from_mpq(mpq_class(as_mpq() * o.as_mpq()));
  }
  Rational operator-() const {
    if (!big_) {
      Rational r;
      r.num_ = -num_;
      r.den_ = den_;
      return r;
    }
    return from_mpq(mpq_class(-*big_));
  }
  Rational inverse() const {
    if (is_zero()) throw division_by_zero();
    if (!big_) return make(den_, num_);
    return from_mpq(mpq_class(1 / *big_));
  }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw division_by_zero();
    if (!big_ && !o.big_) return make(i128(num_) * o.den_, i128(den_) * o.num_);
    return from_mpq(mpq_class(as_mpq() / o.as_mpq()));
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  bool is_zero() const { return !big_ && num_ == 0; }
  bool operator==(const Rational& o) const {
    if (!big_ && !o.big_) return num_ == o.num_ && den_ == o.den_;
    if (big_ && o.big_) return *big_ == *o.big_;
    return false;  // a value outside the inline range never equals one inside
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  std::string str() const {
    if (big_) return big_->get_str();
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }
  Config config() const { return Config{}; }
  mpq_class value() const { return as_mpq(); }

 private:
  using i128 = __int128;

  static i128 abs128(i128 x) { return x < 0 ? -x : x; }

  static i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static mpz_class mpz_from_i128(i128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    mpz_class out(static_cast<unsigned long>(u >> 64));
    out <<= 64;
    out += static_cast<unsigned long>(u & 0xffffffffffffffffULL);
    return neg ? mpz_class(-out) : out;
  }

  /// Reduced fraction from 128-bit intermediates; promotes when it cannot
  /// fit inline.
  static Rational make(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    Rational r;
    if (n == 0) return r;
    const i128 g = gcd128(n, d);
    n /= g;
    d /= g;
    constexpr i128 lim = 0x7fffffffffffffffLL;
    if (n <= lim && n >= -lim && d <= lim) {
      r.num_ = static_cast<long long>(n);
      r.den_ = static_cast<long long>(d);
    } else {
      r.big_ = std::make_unique<mpq_class>(mpq_class(mpz_from_i128(n)) /
                                           mpq_class(mpz_from_i128(d)));
    }
    return r;
  }

  /// From a canonical mpq, demoting into the inline form when possible.
  static Rational from_mpq(mpq_class q) {
    Rational r;
    if (mpz_fits_slong_p(q.get_num().get_mpz_t()) && mpz_fits_slong_p(q.get_den().get_mpz_t())) {
      r.num_ = q.get_num().get_si();
      r.den_ = q.get_den().get_si();
    } else {
      r.big_ = std::make_unique<mpq_class>(std::move(q));
    }
    return r;
  }

  mpq_class as_mpq() const { return big_ ? *big_ : mpq_class(static_cast<long>(num_), static_cast<long>(den_)); }

  long long num_ = 0;
  long long den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

/// Element of the prime field F_p, stored as a residue in [0, p).
/// p is validated for primality when the Config is built; p must fit in
/// 31 bits so products never overflow 64-bit intermediates.
class Fp {
 public:
  struct Config {
    std::uint64_t p;

    explicit Config(std::uint64_t prime) : p(prime) {
      if (p < 2 || p > (1ull << 31)) throw config_error("modulus out of range: " + std::to_string(p));
      for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) throw config_error("modulus " + std::to_string(p) + " is not prime");
    }

    Fp zero() const { return Fp(0, p); }
    Fp one() const { return Fp(1, p); }
    Fp from_int(long long n) const {
      long long r = n % static_cast<long long>(p);
      if (r < 0) r += static_cast<long long>(p);
      return Fp(static_cast<std::uint64_t>(r), p);
    }
    Fp from_fraction(long long num, long long den) const {
      return from_int(num) * from_int(den).inverse();
    }
    /// Accepts "n" or "n/d"; arbitrary-precision parts are reduced mod p.
    Fp parse(const std::string& text) const {
      auto slash = text.find('/');
      mpz_class num, den(1);
      if (num.set_str(text.substr(0, slash), 10) != 0)
        throw load_error("cannot parse field literal '" + text + "'");
      if (slash != std::string::npos && den.set_str(text.substr(slash + 1), 10) != 0)
        throw load_error("cannot parse field literal '" + text + "'");
      mpz_class m(static_cast<unsigned long>(p));
      mpz_class nr = ((num % m) + m) % m, dr = ((den % m) + m) % m;
      Fp n(nr.get_ui(), p), d(dr.get_ui(), p);
      return n * d.inverse();
    }
    std::string describe() const { return "prime p=" + std::to_string(p); }
    bool operator==(const Config&) const = default;

   private:
    friend class Fp;
    struct unchecked {};
    Config(std::uint64_t prime, unchecked) : p(prime) {}
  };

  Fp(std::uint64_t residue, std::uint64_t prime) : r_(residue), p_(prime) {}

  Fp operator+(const Fp& o) const {
    check(o);
    std::uint64_t s = r_ + o.r_;
    if (s >= p_) s -= p_;
    return Fp(s, p_);
  }
  Fp operator-(const Fp& o) const {
    check(o);
    return Fp(r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_, p_);
  }
  Fp operator*(const Fp& o) const {
    check(o);
    return Fp((r_ * o.r_) % p_, p_);
  }
  Fp operator-() const { return Fp(r_ == 0 ? 0 : p_ - r_, p_); }
  Fp inverse() const {
    if (r_ == 0) throw division_by_zero();
    // extended Euclid
    std::int64_t a = static_cast<std::int64_t>(r_), m = static_cast<std::int64_t>(p_);
    std::int64_t x0 = 1, x1 = 0, r0 = a, r1 = m;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t t = r0 - q * r1;
      r0 = r1;
      r1 = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    std::int64_t inv = x0 % m;
    if (inv < 0) inv += m;
    return Fp(static_cast<std::uint64_t>(inv), p_);
  }
  Fp operator/(const Fp& o) const { return *this * o.inverse(); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }

  bool is_zero() const { return r_ == 0; }
  bool operator==(const Fp& o) const { return r_ == o.r_ && p_ == o.p_; }
  bool operator!=(const Fp& o) const = default;

  std::string str() const { return std::to_string(r_); }
  Config config() const { return Config(p_, Config::unchecked{}); }
  std::uint64_t residue() const { return r_; }
  std::uint64_t modulus() const { return p_; }

 private:
  void check(const Fp& o) const {
    if (p_ != o.p_)
      throw config_error("mixed moduli: p=" + std::to_string(p_) + " vs p=" + std::to_string(o.p_));
  }

  std::uint64_t r_;
  std::uint64_t p_;
};

static_assert(exact_field<Rational>);
static_assert(exact_field<Fp>);

}  // namespace preop
