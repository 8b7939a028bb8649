#pragma once

// Exact rational scalar for all module-theoretic linear algebra, plus the
// Eigen glue needed to use it as a matrix scalar. The wrapper deliberately
// exposes only explicit, value-like conversions: Boost's expression-template
// machinery must never leak into Eigen overload resolution.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace qgp {

namespace mp = boost::multiprecision;
using BigRat = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                 // NOLINT: implicit by design
  Rational(long long n) : v_(n) {}           // NOLINT
  Rational(long long num, long long den) : v_(BigRat(num) / BigRat(den)) {}
  explicit Rational(const std::string& text) : v_(text) {}

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) { return Rational(a.v_ / b.v_); }
  Rational operator-() const { return Rational(-v_); }
  Rational operator+() const { return *this; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }
  std::string str() const { return v_.str(); }

 private:
  explicit Rational(BigRat v) : v_(std::move(v)) {}
  BigRat v_;
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Deterministic, platform-independent generator for sampled coefficients.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform-ish integer in [-bound, bound]; the slight modulo bias is
  // irrelevant for the nonvanishing arguments this supports.
  std::int64_t coefficient(std::int64_t bound) {
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
    return static_cast<std::int64_t>(next() % span) - bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace qgp

#include <Eigen/Core>

namespace Eigen {

template <>
struct NumTraits<qgp::Rational> : GenericNumTraits<qgp::Rational> {
  typedef qgp::Rational Real;
  typedef qgp::Rational NonInteger;
  typedef qgp::Rational Nested;
  typedef qgp::Rational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace qgp {

using RMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

}  // namespace qgp
