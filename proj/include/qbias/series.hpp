#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qbias {

// Exact unbounded integer. Every coefficient and counter in the toolkit is
// one of these; verdicts must never depend on floating point.
using Int = boost::multiprecision::cpp_int;

// Thrown by inverse() when the constant term of the operand is not 1 or -1.
struct NonUnitConstantTerm : std::domain_error {
  explicit NonUnitConstantTerm(const Int& constant_term);
};

// Dense formal power series in q with exact integer coefficients, truncated
// at a fixed order N. Coefficients of q^t for t > N are unknown, not zero;
// arithmetic between series of different orders truncates to the minimum.
class Series {
 public:
  // Zero series of the given truncation order.
  explicit Series(std::size_t order) : coeffs_(order + 1) {}

  // Constant c as a series of the given order.
  static Series constant(Int c, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }

  const Int& operator[](std::size_t t) const { return coeffs_[t]; }
  Int& operator[](std::size_t t) { return coeffs_[t]; }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  bool operator==(const Series&) const = default;

  // Drop coefficients above new_order (must not exceed the current order).
  Series& truncate(std::size_t new_order);

  // In-place multiply by (1 - q^e), e >= 1. A factor with e > order() is
  // congruent to 1 at this truncation and leaves the series unchanged.
  Series& mul_one_minus_qpow(std::size_t e);

  // In-place divide by (1 - q^e), e >= 1: c[n] += c[n - e] for ascending n.
  Series& div_one_minus_qpow(std::size_t e);

  // *this += q^shift * g (and the subtracting twin). Terms pushed past the
  // truncation order are dropped.
  Series& add_shifted(const Series& g, std::size_t shift);
  Series& sub_shifted(const Series& g, std::size_t shift);

  bool all_nonnegative() const;
  // Index of the first negative coefficient, if any.
  std::optional<std::size_t> first_negative() const;

 private:
  std::vector<Int> coeffs_;
};

// Coefficientwise sum/difference/Cauchy product, truncated at the minimum
// of the operand orders.
Series operator+(const Series& f, const Series& g);
Series operator-(const Series& f, const Series& g);
Series operator*(const Series& f, const Series& g);

// Multiplicative inverse at the order of f, by the standard recurrence
// g_0 = 1/f_0, g_t = -(sum_{i=1..t} f_i g_{t-i}) / f_0.
// Requires f[0] == 1 or f[0] == -1; throws NonUnitConstantTerm otherwise.
Series inverse(const Series& f);

// Product spec (q^s; q^m)_k: factors (1 - q^{s + i m}) for i = 0..k-1.
// length == nullopt means the infinite product (q^s; q^m)_inf, of which only
// the factors with exponent <= truncation order contribute.
struct PochhammerSpec {
  long first = 1;               // s >= 1
  long step = 1;                // m >= 1
  std::optional<long> length;   // k >= 0; nullopt = infinite

  static PochhammerSpec finite(long s, long m, long k);
  static PochhammerSpec infinite(long s, long m);

  // Throws std::invalid_argument on an out-of-domain spec.
  void validate() const;
};

Series pochhammer(const PochhammerSpec& spec, std::size_t order);
Series pochhammer(long s, long m, long k, std::size_t order);
Series pochhammer_infinite(long s, long m, std::size_t order);

// Prints as [c0, c1, ..., cN].
std::ostream& operator<<(std::ostream& os, const Series& f);

}  // namespace qbias
