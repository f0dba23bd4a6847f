#include "mb/linalg.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace mb {

namespace {

// LU with partial pivoting on long doubles; returns {log|det|, sign, pivot_ratio}.
struct LuDet {
  long double log_abs = 0.0L;
  int sign = 1;  // 0 when singular
  double pivot_ratio = 0.0;
};

LuDet lu_det(std::vector<std::vector<long double>>& a) {
  const std::size_t n = a.size();
  LuDet r;
  long double min_piv = std::numeric_limits<long double>::infinity();
  long double max_piv = 0.0L;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < n; ++i)
      if (std::fabs(static_cast<double>(a[i][col])) > std::fabs(static_cast<double>(a[piv][col]))) piv = i;
    if (a[piv][col] == 0.0L) {
      r.sign = 0;
      r.pivot_ratio = std::numeric_limits<double>::infinity();
      return r;
    }
    if (piv != col) {
      std::swap(a[piv], a[col]);
      r.sign = -r.sign;
    }
    long double p = a[col][col];
    min_piv = std::min(min_piv, std::fabs(p));
    max_piv = std::max(max_piv, std::fabs(p));
    r.log_abs += std::log(std::fabs(p));
    if (p < 0) r.sign = -r.sign;
    for (std::size_t i = col + 1; i < n; ++i) {
      long double f = a[i][col] / p;
      if (f == 0.0L) continue;
      for (std::size_t j = col + 1; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  r.pivot_ratio = static_cast<double>(max_piv / min_piv);
  return r;
}

}  // namespace

DetResult det_lu(std::vector<std::vector<double>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det_lu: matrix not square");
  if (n == 0) return {1.0, 1.0};
  std::vector<std::vector<long double>> a(n, std::vector<long double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  LuDet d = lu_det(a);
  if (std::isfinite(d.pivot_ratio) && d.pivot_ratio > 1e12)
    std::fprintf(stderr, "mb: det_lu conditioning warning, pivot ratio %.3e\n", d.pivot_ratio);
  if (d.sign == 0) return {0.0, d.pivot_ratio};
  return {static_cast<double>(d.sign) * static_cast<double>(std::exp(d.log_abs)), d.pivot_ratio};
}

SignedLogReal det_log_entries(const std::vector<std::vector<LogEntry>>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det_log_entries: matrix not square");
  if (n == 0) return SignedLogReal::one();

  long double total_scale = 0.0L;
  std::vector<std::vector<long double>> a(n, std::vector<long double>(n, 0.0L));
  for (std::size_t i = 0; i < n; ++i) {
    long double row_max = -std::numeric_limits<long double>::infinity();
    for (std::size_t j = 0; j < n; ++j)
      if (m[i][j].sign != 0) row_max = std::max(row_max, m[i][j].logmag);
    if (row_max == -std::numeric_limits<long double>::infinity()) return SignedLogReal::zero();
    total_scale += row_max;
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j].sign == 0) continue;
      a[i][j] = static_cast<long double>(m[i][j].sign) * std::exp(m[i][j].logmag - row_max);
    }
  }
  LuDet d = lu_det(a);
  if (d.sign == 0) return SignedLogReal::zero();
  return SignedLogReal::from_log(d.sign, static_cast<double>(total_scale + d.log_abs));
}

SignedLogReal det_log_domain(const std::vector<std::vector<SignedLogReal>>& m) {
  std::vector<std::vector<LogEntry>> e(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    e[i].resize(m[i].size());
    for (std::size_t j = 0; j < m[i].size(); ++j)
      e[i][j] = LogEntry{m[i][j].sign(), static_cast<long double>(m[i][j].logmag())};
  }
  return det_log_entries(e);
}

}  // namespace mb
