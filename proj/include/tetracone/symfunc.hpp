#pragma once
// symfunc.hpp — Schur polynomials on non-negative spectra via the interlacing
// branching recursion (all summands non-negative, so degenerate eigenvalues cost
// nothing and there is no cancellation), rescaled characters φ_λ = s_λ / H_λ,
// multinomial weights, and the unnormalized entropy −Σ x_i ln x_i.

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tetracone/core.hpp"
#include "tetracone/partition.hpp"
#include "tetracone/spectrum.hpp"

namespace tetracone {

namespace detail {

// s_mu(x_1..x_m) for all (mu, m) reached from the top-level shape, memoized per call.
inline double schur_rec(const Partition& p, int m, const Spectrum& x,
                        std::map<std::pair<int, Partition>, double>& memo) {
  if (p.empty()) return 1.0;
  if (m == 0) return 0.0;
  auto key = std::make_pair(m, p);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  double xm = x[m - 1];
  double total = 0.0;
  for (const auto& mu : interlacing_predecessors(p, m - 1)) {
    int d = partition_size(p) - partition_size(mu);
    total += schur_rec(mu, m - 1, x, memo) * std::pow(xm, d);
  }
  memo[key] = total;
  return total;
}

inline double log_schur_rec(const Partition& p, int m, const Spectrum& x,
                            std::map<std::pair<int, Partition>, double>& memo) {
  if (p.empty()) return 0.0;
  if (m == 0) return neg_inf();
  auto key = std::make_pair(m, p);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  double xm = x[m - 1];
  std::vector<double> terms;
  for (const auto& mu : interlacing_predecessors(p, m - 1)) {
    int d = partition_size(p) - partition_size(mu);
    double base = log_schur_rec(mu, m - 1, x, memo);
    if (d == 0) {
      terms.push_back(base);
    } else if (xm > 0.0) {
      terms.push_back(base + d * std::log(xm));
    }  // xm == 0 with d > 0 contributes nothing
  }
  double r = logsumexp(terms);
  memo[key] = r;
  return r;
}

inline void check_schur_args(const Partition& p, const Spectrum& x) {
  check_partition(p);
  check_spectrum(x);
  if (depth(p) > static_cast<int>(x.size()))
    throw std::invalid_argument("schur: partition deeper than the number of eigenvalues");
  for (double v : x)
    if (v < 0.0) throw std::invalid_argument("schur: negative eigenvalue outside the supported domain");
}

}  // namespace detail

inline double schur(const Partition& p, const Spectrum& x) {
  detail::check_schur_args(p, x);
  std::map<std::pair<int, Partition>, double> memo;
  return detail::schur_rec(p, static_cast<int>(x.size()), x, memo);
}

// log s_λ(x); -inf when the value is exactly 0.
inline double log_schur(const Partition& p, const Spectrum& x) {
  detail::check_schur_args(p, x);
  std::map<std::pair<int, Partition>, double> memo;
  return detail::log_schur_rec(p, static_cast<int>(x.size()), x, memo);
}

// Rescaled character φ_λ(x) = s_λ(x) / H_λ. Satisfies Σ_{λ⊢k} φ_λ(x) = (Tr x)^k / k!.
inline double phi(const Partition& p, const Spectrum& x) {
  double s = schur(p, x);
  if (partition_size(p) <= 20) return s / static_cast<double>(hook_product(p));
  return s * std::exp(-log_hook_product(p));
}

inline double log_phi(const Partition& p, const Spectrum& x) {
  return log_schur(p, x) - log_hook_product(p);
}

// m_x(λ) = (|λ|!/Tr[x]^{|λ|}) Π_i x_i^{λ_i} / λ_i!
inline double multinomial_weight(const Partition& p, const Spectrum& x) {
  check_partition(p);
  check_spectrum(x);
  if (depth(p) > static_cast<int>(x.size()))
    throw std::invalid_argument("multinomial_weight: partition deeper than the number of eigenvalues");
  for (double v : x)
    if (v < 0.0) throw std::invalid_argument("multinomial_weight: negative eigenvalue");
  double tr = trace(x);
  if (!(tr > 0.0)) throw std::invalid_argument("multinomial_weight: trace must be positive");
  int k = partition_size(p);
  double log_m = 0.0;
  for (int i = 2; i <= k; ++i) log_m += std::log(static_cast<double>(i));  // |λ|!
  log_m -= k * std::log(tr);
  for (int i = 0; i < depth(p); ++i) {
    if (p[i] == 0) continue;
    if (x[i] == 0.0) return 0.0;
    log_m += p[i] * std::log(x[i]);
    for (int j = 2; j <= p[i]; ++j) log_m -= std::log(static_cast<double>(j));
  }
  return std::exp(log_m);
}

// s(x) = −Σ x_i ln x_i with 0·ln 0 = 0.
inline double unnormalized_entropy(const Spectrum& x) {
  check_spectrum(x);
  double s = 0.0;
  for (double v : x) {
    if (v < 0.0) throw std::invalid_argument("unnormalized_entropy: negative eigenvalue");
    if (v > 0.0) s -= v * std::log(v);
  }
  return s;
}

}  // namespace tetracone
