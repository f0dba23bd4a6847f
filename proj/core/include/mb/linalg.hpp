#pragma once

#include <vector>

#include "mb/signed_log.hpp"

namespace mb {

struct DetResult {
  double value = 0.0;
  double pivot_ratio = 0.0;  // max |pivot| / min |pivot|; inf when singular
};

/// Determinant by LU with partial pivoting, extended-precision accumulation.
/// Emits a conditioning warning on stderr when the pivot ratio exceeds 1e12.
DetResult det_lu(std::vector<std::vector<double>> m);

/// Log-domain matrix entry with extended-precision magnitude; the carrier
/// for moment-determinant oracles, whose Hankel-type matrices are
/// ill-conditioned enough that double-precision entries limit the
/// determinant to ~1e-9 relative.
struct LogEntry {
  int sign = 0;
  long double logmag = 0.0L;
};

/// Determinant of a matrix of log-domain entries.
///
/// Rows are rescaled by their max log-magnitude before exponentiation, the
/// scaled matrix is factorised in extended precision, and the subtracted
/// scales are re-added in log domain.  This keeps moment matrices spanning
/// hundreds of orders of magnitude inside floating range.
SignedLogReal det_log_entries(const std::vector<std::vector<LogEntry>>& m);

SignedLogReal det_log_domain(const std::vector<std::vector<SignedLogReal>>& m);

}  // namespace mb
