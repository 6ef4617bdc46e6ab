#pragma once
// core.hpp — shared small utilities: numeric formatting, log-domain helpers,
// checked integer arithmetic.

#include <cstdint>
#include <cstdio>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace tetracone {

// Format a double with 12 significant digits (report convention).
inline std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::string(buf);
}

inline constexpr double neg_inf() { return -std::numeric_limits<double>::infinity(); }
inline constexpr double pos_inf() { return std::numeric_limits<double>::infinity(); }

// log(sum_i exp(v_i)) without overflow; empty input -> -inf.
inline double logsumexp(const std::vector<double>& v) {
  double m = neg_inf();
  for (double x : v)
    if (x > m) m = x;
  if (!std::isfinite(m)) return m;  // all -inf (or empty)
  double s = 0.0;
  for (double x : v) s += std::exp(x - m);
  return m + std::log(s);
}

// a * b with overflow detection; throws std::overflow_error.
inline std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw std::overflow_error("u64 product overflow");
  return a * b;
}

// Exact integer division that verifies divisibility.
inline std::uint64_t exact_div_u64(std::uint64_t a, std::uint64_t b) {
  if (b == 0 || a % b != 0) throw std::logic_error("non-exact integer division");
  return a / b;
}

inline double sq(double x) { return x * x; }

}  // namespace tetracone
