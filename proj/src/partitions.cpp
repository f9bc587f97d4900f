#include "qbias/partitions.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace qbias {

namespace {

const Int kZero = 0;

std::string cap_message(long n, long cap) {
  std::ostringstream os;
  os << "enumeration cap exceeded: n = " << n << " > cap = " << cap;
  return os.str();
}

void check_progression(long s, long m, long k) {
  if (s < 1) throw std::invalid_argument("restricted counts: s must be >= 1");
  if (m < 1) throw std::invalid_argument("restricted counts: m must be >= 1");
  if (k < 0) throw std::invalid_argument("restricted counts: k must be >= 0");
}

}  // namespace

CapExceeded::CapExceeded(long n, long cap) : std::runtime_error(cap_message(n, cap)) {}

RestrictedCountTable::RestrictedCountTable(long s, long m, long max_k, long max_n)
    : s_(s), m_(m), max_k_(max_k), max_n_(std::max(max_n, 0L)) {
  check_progression(s, m, max_k);
  // Parts beyond max_n cannot occur in any stored partition, so rows past
  // the last fitting part repeat verbatim; keep only the distinct ones.
  const long distinct = (max_n_ >= s_) ? (max_n_ - s_) / m_ + 1 : 0;
  stored_k_ = std::min(max_k_, distinct);
  rows_.reserve(static_cast<std::size_t>(stored_k_) + 1);
  std::vector<Int> row(static_cast<std::size_t>(max_n_) + 1);
  row[0] = 1;
  rows_.push_back(row);
  for (long k = 1; k <= stored_k_; ++k) {
    const long part = s_ + (k - 1) * m_;
    for (long n = part; n <= max_n_; ++n) {
      row[static_cast<std::size_t>(n)] += row[static_cast<std::size_t>(n - part)];
    }
    rows_.push_back(row);
  }
}

const Int& RestrictedCountTable::count(long k, long n) const {
  if (k < 0 || k > max_k_) {
    throw std::out_of_range("RestrictedCountTable::count: k outside table");
  }
  if (n < 0) return kZero;
  if (n > max_n_) {
    throw std::out_of_range("RestrictedCountTable::count: n outside table");
  }
  const long row = std::min(k, stored_k_);
  return rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(n)];
}

Int restricted_count(long s, long m, long k, long n) {
  check_progression(s, m, k);
  if (n < 0) return 0;
  if (n == 0) return 1;
  return RestrictedCountTable(s, m, k, n).count(k, n);
}

namespace {

// Exhaustively assigns multiplicities to the allowed parts, largest first.
Int count_by_enumeration(const std::vector<long>& parts, std::size_t idx, long remaining) {
  if (remaining == 0) return 1;
  if (idx == parts.size()) return 0;
  Int total = 0;
  const long part = parts[idx];
  for (long used = 0; used <= remaining; used += part) {
    total += count_by_enumeration(parts, idx + 1, remaining - used);
  }
  return total;
}

}  // namespace

Int restricted_count_oracle(long s, long m, long k, long n, long cap) {
  check_progression(s, m, k);
  if (n < 0) return 0;
  if (n > cap) throw CapExceeded(n, cap);
  std::vector<long> parts;
  for (long i = 0; i < k; ++i) {
    const long part = s + i * m;
    if (part > n) break;
    parts.push_back(part);
  }
  std::reverse(parts.begin(), parts.end());
  return count_by_enumeration(parts, 0, n);
}

Series restricted_gf(long s, long m, long k, std::size_t order) {
  return inverse(pochhammer(s, m, k, order));
}

void BiasQuery::validate() const {
  if (modulus < 2) throw std::invalid_argument("BiasQuery: modulus must be >= 2");
  if (residue_a < 1 || residue_a > modulus) {
    throw std::invalid_argument("BiasQuery: residue a must lie in 1..m");
  }
  if (residue_b < 1 || residue_b > modulus) {
    throw std::invalid_argument("BiasQuery: residue b must lie in 1..m");
  }
  if (residue_a == residue_b) {
    throw std::invalid_argument("BiasQuery: residues must differ");
  }
  if (n < 0) throw std::invalid_argument("BiasQuery: n must be >= 0");
}

BiasTable::BiasTable(long residue_a, long residue_b, long modulus, long max_n)
    : residue_a_(residue_a), residue_b_(residue_b), modulus_(modulus), max_n_(max_n) {
  BiasQuery{residue_a, residue_b, modulus, max_n}.validate();
  const long off = max_n_;  // difference d is stored at column d + off
  const std::size_t width = static_cast<std::size_t>(2 * max_n_ + 1);
  std::vector<std::vector<Int>> dp(static_cast<std::size_t>(max_n_) + 1,
                                   std::vector<Int>(width));
  dp[0][static_cast<std::size_t>(off)] = 1;
  const long match_a = residue_a_ % modulus_;
  const long match_b = residue_b_ % modulus_;
  for (long part = 1; part <= max_n_; ++part) {
    long delta = 0;
    if (part % modulus_ == match_a) delta = 1;
    else if (part % modulus_ == match_b) delta = -1;
    for (long n = part; n <= max_n_; ++n) {
      const auto& src = dp[static_cast<std::size_t>(n - part)];
      auto& dst = dp[static_cast<std::size_t>(n)];
      // A partition of n - part has at most n - part parts, so only the
      // band |d| <= n - part of the source row is populated.
      const long lo = off - (n - part);
      const long hi = off + (n - part);
      for (long d = lo; d <= hi; ++d) {
        const Int& c = src[static_cast<std::size_t>(d)];
        if (c != 0) dst[static_cast<std::size_t>(d + delta)] += c;
      }
    }
  }
  more_a_.resize(static_cast<std::size_t>(max_n_) + 1);
  more_b_.resize(static_cast<std::size_t>(max_n_) + 1);
  tied_.resize(static_cast<std::size_t>(max_n_) + 1);
  for (long n = 0; n <= max_n_; ++n) {
    const auto& row = dp[static_cast<std::size_t>(n)];
    Int above = 0;
    Int below = 0;
    for (long d = 1; d <= n; ++d) above += row[static_cast<std::size_t>(off + d)];
    for (long d = 1; d <= n; ++d) below += row[static_cast<std::size_t>(off - d)];
    more_a_[static_cast<std::size_t>(n)] = above;
    more_b_[static_cast<std::size_t>(n)] = below;
    tied_[static_cast<std::size_t>(n)] = row[static_cast<std::size_t>(off)];
  }
}

Int bias_count(const BiasQuery& query) {
  query.validate();
  return BiasTable(query.residue_a, query.residue_b, query.modulus, query.n)
      .more_a(query.n);
}

namespace {

struct BiasWalk {
  long match_a;
  long match_b;
  long modulus;
  Int total = 0;

  void walk(long remaining, long max_part, long diff) {
    if (remaining == 0) {
      if (diff > 0) ++total;
      return;
    }
    for (long part = std::min(remaining, max_part); part >= 1; --part) {
      long delta = 0;
      if (part % modulus == match_a) delta = 1;
      else if (part % modulus == match_b) delta = -1;
      walk(remaining - part, part, diff + delta);
    }
  }
};

}  // namespace

Int bias_oracle(const BiasQuery& query, long cap) {
  query.validate();
  if (query.n > cap) throw CapExceeded(query.n, cap);
  BiasWalk walk{query.residue_a % query.modulus, query.residue_b % query.modulus,
                query.modulus};
  walk.walk(query.n, query.n, 0);
  return walk.total;
}

namespace {

void visit_partitions(long remaining, long max_part, std::vector<long>& parts,
                      const std::function<void(const std::vector<long>&)>& visit) {
  if (remaining == 0) {
    visit(parts);
    return;
  }
  for (long part = std::min(remaining, max_part); part >= 1; --part) {
    parts.push_back(part);
    visit_partitions(remaining - part, part, parts, visit);
    parts.pop_back();
  }
}

}  // namespace

void for_each_partition(long n, const std::function<void(const std::vector<long>&)>& visit) {
  if (n < 0) return;
  std::vector<long> parts;
  visit_partitions(n, n, parts, visit);
}

}  // namespace qbias
