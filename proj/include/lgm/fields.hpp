#ifndef LGM_FIELDS_HPP
#define LGM_FIELDS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lgm {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always in lowest terms with positive denominator
/// (the backend normalizes on every operation).
using Rat = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline bool is_negative(const Rat& x) { return x < 0; }

/// num/den as a normalized rational; den may be negative or non-reduced.
inline Rat rat_frac(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rat_frac: zero denominator");
  Rat r(num);
  r /= Rat(den);
  return r;
}

/// Parses "a" or "a/b" (optional leading '-'), as used by CLI flags.
inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    return rat_frac(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational literal: '" + s + "'");
  }
}

inline std::string to_string(const Rat& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

inline bool is_prime(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Prime field element with its modulus carried alongside the value.
///
/// A default-constructed Zp is the zero of an unspecified field (modulus 0);
/// it absorbs into whichever field it first meets. This keeps generic code
/// (zero-initialized accumulators, default map values) working without a
/// global modulus.
class Zp {
 public:
  Zp() = default;
  Zp(uint64_t value, uint32_t p) : p_(p) {
    if (p_ < 2) throw std::invalid_argument("Zp: modulus must be >= 2");
    v_ = value % p_;
  }

  static Zp of(long long n, uint32_t p) {
    if (p < 2) throw std::invalid_argument("Zp: modulus must be >= 2");
    long long r = n % static_cast<long long>(p);
    if (r < 0) r += p;
    return Zp(static_cast<uint64_t>(r), p);
  }

  uint64_t value() const { return v_; }
  uint32_t modulus() const { return p_; }
  bool unspecified() const { return p_ == 0; }

  friend bool is_zero(const Zp& x) { return x.v_ == 0; }

  friend bool operator==(const Zp& a, const Zp& b) {
    if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
      throw std::invalid_argument("Zp: modulus mismatch");
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Zp& a, const Zp& b) { return !(a == b); }

  friend Zp operator+(const Zp& a, const Zp& b) {
    uint32_t p = join(a, b);
    if (p == 0) return Zp();
    return Zp((a.v_ + b.v_) % p, p);
  }
  friend Zp operator-(const Zp& a, const Zp& b) {
    uint32_t p = join(a, b);
    if (p == 0) return Zp();
    return Zp((a.v_ + p - b.v_) % p, p);
  }
  friend Zp operator-(const Zp& a) {
    if (a.p_ == 0) return a;
    return Zp(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_);
  }
  friend Zp operator*(const Zp& a, const Zp& b) {
    uint32_t p = join(a, b);
    if (p == 0) return Zp();
    if (a.v_ == 0 || b.v_ == 0) return Zp(0, p);
    return Zp((a.v_ * b.v_) % p, p);
  }
  friend Zp operator/(const Zp& a, const Zp& b) { return a * b.inverse(); }

  Zp& operator+=(const Zp& o) { return *this = *this + o; }
  Zp& operator-=(const Zp& o) { return *this = *this - o; }
  Zp& operator*=(const Zp& o) { return *this = *this * o; }
  Zp& operator/=(const Zp& o) { return *this = *this / o; }

  Zp inverse() const {
    if (p_ == 0 || v_ == 0) throw std::domain_error("Zp: inverse of zero");
    // extended Euclid on (v, p)
    int64_t t = 0, new_t = 1;
    int64_t r = static_cast<int64_t>(p_), new_r = static_cast<int64_t>(v_);
    while (new_r != 0) {
      int64_t q = r / new_r;
      t -= q * new_t;
      std::swap(t, new_t);
      r -= q * new_r;
      std::swap(r, new_r);
    }
    if (r != 1) throw std::domain_error("Zp: modulus not prime");
    if (t < 0) t += p_;
    return Zp(static_cast<uint64_t>(t), p_);
  }

 private:
  static uint32_t join(const Zp& a, const Zp& b) {
    if (a.p_ == 0) return b.p_;
    if (b.p_ == 0) return a.p_;
    if (a.p_ != b.p_) throw std::invalid_argument("Zp: modulus mismatch");
    return a.p_;
  }

  uint64_t v_ = 0;
  uint32_t p_ = 0;
};

inline bool is_negative(const Zp&) { return false; }

inline std::string to_string(const Zp& x) { return std::to_string(x.value()); }

/// Runtime field selector: p == 0 means the rationals, otherwise Z/p.
struct FieldCtx {
  uint32_t p = 0;
  bool rational() const { return p == 0; }
  static FieldCtx rationals() { return {0}; }
  static FieldCtx prime(uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("field modulus must be prime");
    if (p >= (1u << 31)) throw std::invalid_argument("field modulus too large");
    return {p};
  }
};

template <class K>
struct FieldIO;

template <>
struct FieldIO<Rat> {
  static Rat from_int(long long n, const FieldCtx&) { return Rat(n); }
  static Rat from_digits(const std::string& digits, const FieldCtx&) {
    return Rat(BigInt(digits));
  }
  static Rat from_rat(const Rat& x, const FieldCtx&) { return x; }
};

template <>
struct FieldIO<Zp> {
  static Zp from_int(long long n, const FieldCtx& ctx) {
    require(ctx);
    return Zp::of(n, ctx.p);
  }
  static Zp from_digits(const std::string& digits, const FieldCtx& ctx) {
    require(ctx);
    BigInt b(digits);
    return Zp(static_cast<uint64_t>(b % ctx.p), ctx.p);
  }
  /// Reduction of an exact rational mod p; throws when p divides the denominator.
  static Zp from_rat(const Rat& x, const FieldCtx& ctx) {
    require(ctx);
    BigInt num = numerator(x) % ctx.p;
    BigInt den = denominator(x) % ctx.p;
    if (den == 0) throw std::domain_error("rational has modulus in denominator");
    if (num < 0) num += ctx.p;
    Zp n(static_cast<uint64_t>(num), ctx.p);
    Zp d(static_cast<uint64_t>(den), ctx.p);
    return n / d;
  }

 private:
  static void require(const FieldCtx& ctx) {
    if (ctx.rational())
      throw std::invalid_argument("prime-field operation needs a modulus");
  }
};

/// coeff * n with n a machine integer (derivative exponents and the like).
inline Rat scale_nat(const Rat& x, uint64_t n) { return x * Rat(n); }
inline Zp scale_nat(const Zp& x, uint64_t n) {
  if (x.unspecified()) return x;
  return x * Zp(n % x.modulus(), x.modulus());
}

}  // namespace lgm

#endif
