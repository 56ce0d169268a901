#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace weylprice {

/// Complex number with arbitrary-precision rational parts. Every finite double
/// converts exactly, so sums and products over double inputs stay exact.
struct ExactComplex {
  mpq_class re;
  mpq_class im;

  ExactComplex() : re(0), im(0) {}
  ExactComplex(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}
  ExactComplex(int r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  static ExactComplex from_double(double r, double i = 0.0) { return {mpq_class(r), mpq_class(i)}; }
  static ExactComplex i_unit() { return {0, 1}; }

  ExactComplex& operator+=(const ExactComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ExactComplex& operator-=(const ExactComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ExactComplex& operator*=(const ExactComplex& o) {
    mpq_class r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }

  ExactComplex conj() const { return {re, -im}; }
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
  std::string str() const { return re.get_str() + (sgn(im) < 0 ? " - " : " + ") + mpq_class(abs(im)).get_str() + "i"; }
};

/// Scalar helpers shared by the double-complex and exact code paths.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<std::complex<double>> {
  using S = std::complex<double>;
  static S from_double(double r, double i = 0.0) { return {r, i}; }
  static S rational(long num, long den) { return {double(num) / double(den), 0.0}; }
  static S i_unit() { return {0.0, 1.0}; }
  static bool is_zero(const S& s) { return s == S{}; }
};

template <>
struct ScalarOps<ExactComplex> {
  using S = ExactComplex;
  static S from_double(double r, double i = 0.0) { return ExactComplex::from_double(r, i); }
  static S rational(long num, long den) {
    mpq_class q(num);
    q /= mpq_class(den);
    return {q, 0};
  }
  static S i_unit() { return ExactComplex::i_unit(); }
  static bool is_zero(const S& s) { return s.is_zero(); }
};

}  // namespace weylprice
