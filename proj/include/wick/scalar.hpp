#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wick {

using Rational = mpq_class;

/// Exact complex rational number re + i*im.
///
/// All algebraic identities in the library are checked with this type, so
/// arithmetic never rounds. A double-precision view is available through
/// to_complex() for the spectral routines.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar ratio(long num, long den) { return Scalar(Rational(num, den)); }
  static Scalar imag_unit() { return Scalar(Rational(0), Rational(1)); }

  /// Parses "p/q" (or "p") into a rational; throws std::invalid_argument.
  static Rational parse_rational(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return is_real() && re_ == 1; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2 as an exact rational.
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  /// this += a * b without temporaries on the common real path.
  void add_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Integer power, n may be negative for nonzero values.
  Scalar pow(long n) const;

  /// Pair of canonical "p/q" strings, the serialized form used in files.
  std::string re_string() const { return re_.get_str(); }
  std::string im_string() const { return im_.get_str(); }

  /// Human-readable: "3/4", "-2i", "(1/2+3i)".
  std::string to_string() const;

  std::size_t hash() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace wick

template <>
struct std::hash<wick::Scalar> {
  std::size_t operator()(const wick::Scalar& s) const { return s.hash(); }
};
