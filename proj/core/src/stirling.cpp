#include "cosecant/stirling.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

#include "cosecant/errors.hpp"

namespace cosecant {

StirlingTable::StirlingTable(unsigned k_max) : k_max_(k_max), rows_(k_max + 1) {
  rows_[0] = {BigInt(1)};
  for (unsigned k = 0; k < k_max; ++k) {
    auto& next = rows_[k + 1];
    next.assign(k + 2, BigInt(0));
    for (unsigned j = 1; j <= k + 1; ++j) {
      BigInt value = j - 1 <= k ? rows_[k][j - 1] : BigInt(0);
      if (j <= k) value -= rows_[k][j] * k;
      next[j] = value;
    }
  }
}

const BigInt& StirlingTable::operator()(unsigned k, unsigned j) const {
  if (j > k || k > k_max_) {
    throw DomainError("stirling1: need 0 <= j <= k <= " + std::to_string(k_max_) + ", got k=" + std::to_string(k) +
                      " j=" + std::to_string(j));
  }
  return rows_[k][j];
}

BigInt stirling1(unsigned k, unsigned j) {
  if (j > k) throw DomainError("stirling1: j > k");
  static std::mutex mutex;
  static StirlingTable table(64);
  std::lock_guard lock(mutex);
  if (k > table.k_max()) table = StirlingTable(std::max(k, 2 * table.k_max()));
  return table(k, j);
}

namespace {

// sum over i from `lo` to `hi` of i * inner(depth-1, i-1), with depth 0 = 1.
BigInt nested_sum(unsigned depth, unsigned hi) {
  if (depth == 0) return 1;
  BigInt total = 0;
  for (unsigned i = depth; i <= hi; ++i) total += BigInt(i) * nested_sum(depth - 1, i - 1);
  return total;
}

}  // namespace

BigInt stirling1_nested(unsigned k, unsigned j) {
  if (j < 1 || j > 6 || k <= j || k > 14) {
    throw DomainError("stirling1_nested: need 1 <= j <= 6 and j < k <= 14");
  }
  BigInt value = nested_sum(j, k - 1);
  return j % 2 == 0 ? value : BigInt(-value);
}

RPolynomial r_poly(unsigned ell) {
  if (ell < 1 || ell > 10) throw DomainError("r_poly: need 1 <= l <= 10");
  const auto target = [ell](unsigned k) {
    BigRational value(stirling1(k, k - ell), binomial(k, ell + 1));
    return ell % 2 == 0 ? value : -value;
  };
  std::vector<std::pair<BigRational, BigRational>> nodes;
  for (unsigned k = ell + 1; k <= 2 * ell; ++k) nodes.emplace_back(BigRational(static_cast<long>(k)), target(k));
  RPolynomial r{ell, interpolate(nodes)};
  for (unsigned k = ell + 1; k <= kRPolyValidationLimit; ++k) {
    if (r(static_cast<long>(k)) != target(k)) {
      throw std::logic_error("r_poly: interpolant fails at k=" + std::to_string(k));
    }
  }
  return r;
}

bool has_k_km1_factor(const RPolynomial& r) { return r(0).is_zero() && r(1).is_zero(); }

}  // namespace cosecant
