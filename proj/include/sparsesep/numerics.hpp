#pragma once

#include <algorithm>
#include <cmath>

namespace sparsesep {

// Comparison slack for inequalities whose sides involve logs or non-integer
// powers. Integer/rational comparisons are done exactly and never use this.
inline constexpr double kRelativeSlack = 1e-9;

inline bool leq_with_slack(double lhs, double rhs) {
  const double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
  return lhs <= rhs + kRelativeSlack * scale;
}

inline bool geq_with_slack(double lhs, double rhs) { return leq_with_slack(rhs, lhs); }

// Exact ceil(log_{3/2} n) for n >= 1, via integer comparison 3^t >= n * 2^t.
inline int ceil_log_3_2(long long n) {
  if (n <= 1) return 0;
  unsigned __int128 pow3 = 1;
  unsigned __int128 n2t = static_cast<unsigned __int128>(n);
  int t = 0;
  while (pow3 < n2t) {
    pow3 *= 3;
    n2t *= 2;
    ++t;
  }
  return t;
}

}  // namespace sparsesep
