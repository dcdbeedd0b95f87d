// Series-composition route to c_{rho,k} and d_{rho,k}. Deliberately written
// without any use of partitions so it can check the partition transform.
#include "cosecant/genseries.hpp"

namespace cosecant {

namespace {

// Coefficients b_0..b_n (in t = z^2) of sin z / z or cos z.
std::vector<BigRational> base_series(unsigned n, SeriesKind kind) {
  std::vector<BigRational> b(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    const unsigned f = kind == SeriesKind::cosecant ? 2 * i + 1 : 2 * i;
    BigRational term(BigInt(1), factorial(f));
    b[i] = i % 2 == 0 ? term : -term;
  }
  return b;
}

// log of a series with unit constant term: m g_m = m b_m - sum_{j<m} j g_j b_{m-j}.
std::vector<BigRational> series_log(const std::vector<BigRational>& b) {
  const std::size_t n = b.size() - 1;
  std::vector<BigRational> g(n + 1);
  for (std::size_t m = 1; m <= n; ++m) {
    BigRational acc = BigRational(static_cast<long>(m)) * b[m];
    for (std::size_t j = 1; j < m; ++j) acc -= BigRational(static_cast<long>(j)) * g[j] * b[m - j];
    g[m] = acc / BigRational(static_cast<long>(m));
  }
  return g;
}

}  // namespace

std::vector<BigRational> explog_log_coefficients(unsigned k_max, SeriesKind kind) {
  auto g = series_log(base_series(k_max, kind));
  // log(z / sin z) = -log(sin z / z); log sec z = -log cos z.
  for (auto& c : g) c = -c;
  return g;
}

SeriesTable oracle_explog(unsigned k_max, SeriesKind kind) {
  const auto log_coeffs = explog_log_coefficients(k_max, kind);
  // E = exp(rho L) satisfies E' = rho L' E, i.e.
  // m E_m = rho * sum_{j=1}^{m} j L_j E_{m-j}.
  const RhoPolynomial rho = RhoPolynomial::variable();
  SeriesTable table{k_max, {}};
  table.rows.reserve(k_max + 1);
  table.rows.emplace_back(BigRational(1));
  for (unsigned m = 1; m <= k_max; ++m) {
    RhoPolynomial acc;
    for (unsigned j = 1; j <= m; ++j) {
      if (log_coeffs[j].is_zero()) continue;
      acc += table.rows[m - j] * (BigRational(static_cast<long>(j)) * log_coeffs[j]);
    }
    table.rows.push_back(rho * acc * BigRational(BigInt(1), BigInt(m)));
  }
  return table;
}

std::vector<BigRational> cosecant_values(const BigRational& rho, unsigned k_max) {
  const auto log_coeffs = explog_log_coefficients(k_max, SeriesKind::cosecant);
  std::vector<BigRational> e{BigRational(1)};
  e.reserve(k_max + 1);
  for (unsigned m = 1; m <= k_max; ++m) {
    BigRational acc;
    for (unsigned j = 1; j <= m; ++j) acc += BigRational(static_cast<long>(j)) * log_coeffs[j] * e[m - j];
    e.push_back(rho * acc / BigRational(static_cast<long>(m)));
  }
  return e;
}

}  // namespace cosecant
