#include "qbias/series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace qbias {

namespace {

std::string describe_non_unit(const Int& constant_term) {
  std::ostringstream os;
  os << "series inverse requires constant term 1 or -1, got " << constant_term;
  return os.str();
}

}  // namespace

NonUnitConstantTerm::NonUnitConstantTerm(const Int& constant_term)
    : std::domain_error(describe_non_unit(constant_term)) {}

Series Series::constant(Int c, std::size_t order) {
  Series out(order);
  out.coeffs_[0] = std::move(c);
  return out;
}

Series& Series::truncate(std::size_t new_order) {
  if (new_order > order()) {
    throw std::invalid_argument("truncate: new order exceeds current order");
  }
  coeffs_.resize(new_order + 1);
  return *this;
}

Series& Series::mul_one_minus_qpow(std::size_t e) {
  if (e == 0) {
    throw std::invalid_argument("mul_one_minus_qpow: exponent must be >= 1");
  }
  for (std::size_t n = coeffs_.size(); n-- > e;) {
    coeffs_[n] -= coeffs_[n - e];
  }
  return *this;
}

Series& Series::div_one_minus_qpow(std::size_t e) {
  if (e == 0) {
    throw std::invalid_argument("div_one_minus_qpow: exponent must be >= 1");
  }
  for (std::size_t n = e; n < coeffs_.size(); ++n) {
    coeffs_[n] += coeffs_[n - e];
  }
  return *this;
}

Series& Series::add_shifted(const Series& g, std::size_t shift) {
  for (std::size_t t = shift; t < coeffs_.size(); ++t) {
    const std::size_t src = t - shift;
    if (src > g.order()) break;
    if (g.coeffs_[src] != 0) coeffs_[t] += g.coeffs_[src];
  }
  return *this;
}

Series& Series::sub_shifted(const Series& g, std::size_t shift) {
  for (std::size_t t = shift; t < coeffs_.size(); ++t) {
    const std::size_t src = t - shift;
    if (src > g.order()) break;
    if (g.coeffs_[src] != 0) coeffs_[t] -= g.coeffs_[src];
  }
  return *this;
}

bool Series::all_nonnegative() const { return !first_negative().has_value(); }

std::optional<std::size_t> Series::first_negative() const {
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    if (coeffs_[t] < 0) return t;
  }
  return std::nullopt;
}

Series operator+(const Series& f, const Series& g) {
  const std::size_t n = std::min(f.order(), g.order());
  Series out(n);
  for (std::size_t t = 0; t <= n; ++t) out[t] = f[t] + g[t];
  return out;
}

Series operator-(const Series& f, const Series& g) {
  const std::size_t n = std::min(f.order(), g.order());
  Series out(n);
  for (std::size_t t = 0; t <= n; ++t) out[t] = f[t] - g[t];
  return out;
}

Series operator*(const Series& f, const Series& g) {
  const std::size_t n = std::min(f.order(), g.order());
  Series out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j + i <= n; ++j) {
      if (g[j] != 0) out[i + j] += f[i] * g[j];
    }
  }
  return out;
}

Series inverse(const Series& f) {
  const Int& c0 = f[0];
  if (c0 != 1 && c0 != -1) throw NonUnitConstantTerm(c0);
  const std::size_t n = f.order();
  Series g(n);
  g[0] = c0;  // 1/c0 == c0 for a unit
  for (std::size_t t = 1; t <= n; ++t) {
    Int acc = 0;
    for (std::size_t i = 1; i <= t; ++i) {
      if (f[i] != 0) acc += f[i] * g[t - i];
    }
    if (acc != 0) g[t] = -acc * c0;
  }
  return g;
}

PochhammerSpec PochhammerSpec::finite(long s, long m, long k) {
  PochhammerSpec spec{s, m, k};
  spec.validate();
  return spec;
}

PochhammerSpec PochhammerSpec::infinite(long s, long m) {
  PochhammerSpec spec{s, m, std::nullopt};
  spec.validate();
  return spec;
}

void PochhammerSpec::validate() const {
  if (first < 1) throw std::invalid_argument("PochhammerSpec: first exponent must be >= 1");
  if (step < 1) throw std::invalid_argument("PochhammerSpec: step must be >= 1");
  if (length && *length < 0) throw std::invalid_argument("PochhammerSpec: length must be >= 0");
}

Series pochhammer(const PochhammerSpec& spec, std::size_t order) {
  spec.validate();
  Series out = Series::constant(1, order);
  const long n = static_cast<long>(order);
  if (spec.length) {
    long e = spec.first;
    for (long i = 0; i < *spec.length && e <= n; ++i, e += spec.step) {
      out.mul_one_minus_qpow(static_cast<std::size_t>(e));
    }
  } else {
    for (long e = spec.first; e <= n; e += spec.step) {
      out.mul_one_minus_qpow(static_cast<std::size_t>(e));
    }
  }
  return out;
}

Series pochhammer(long s, long m, long k, std::size_t order) {
  return pochhammer(PochhammerSpec::finite(s, m, k), order);
}

Series pochhammer_infinite(long s, long m, std::size_t order) {
  return pochhammer(PochhammerSpec::infinite(s, m), order);
}

std::ostream& operator<<(std::ostream& os, const Series& f) {
  os << '[';
  for (std::size_t t = 0; t <= f.order(); ++t) {
    if (t > 0) os << ", ";
    os << f[t];
  }
  return os << ']';
}

}  // namespace qbias
