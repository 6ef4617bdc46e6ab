#pragma once

// Distributions on partitions and the probabilistic estimates built on them:
// the Schur-Weyl distribution, Kolmogorov / Bhattacharyya / Kullback-Leibler
// functionals, and the eigenvalue estimation / separation bounds.
//
// Conventions:
//   K(p,q)  = (1/2)·Σ|p_i − q_i|
//   BC(p,q) = Σ√(p_i·q_i)            (same formula normalized or not; the
//                                     unnormalized variant requires equal totals)
//   KL(p‖q) = Σ p_i·ln(p_i/q_i)      with 0·ln(0/q) = 0 and p_i > 0 = q_i → +∞
//   SW_x(λ) = (k!/Tr[x]^k)·φ_λ(x)    over partitions of k with at most n rows

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "tetracone/core.hpp"
#include "tetracone/partition.hpp"
#include "tetracone/spectrum.hpp"
#include "tetracone/symfunc.hpp"

namespace tetracone {

// A distribution over a finite, explicitly listed set of partitions.  The
// normalized variant has total = 1; an unnormalized variant records its total.
struct Distribution {
  std::vector<Partition> support;
  std::vector<double> weights;
  double total = 1.0;
};

inline void check_distribution(const Distribution& d, double tol = 1e-12) {
  if (d.support.size() != d.weights.size())
    throw std::invalid_argument("check_distribution: support/weight size mismatch");
  double sum = 0.0;
  for (double w : d.weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("check_distribution: negative weight");
    sum += w;
  }
  if (std::abs(sum - d.total) > tol * std::max(1.0, std::abs(d.total)))
    throw std::invalid_argument("check_distribution: weights sum to " + fmt12(sum) +
                                " but total is " + fmt12(d.total));
}

namespace detail {

inline void check_same_length(const std::vector<double>& p, const std::vector<double>& q,
                              const char* who) {
  if (p.size() != q.size()) throw std::invalid_argument(std::string(who) + ": index sets differ");
}

inline void check_same_support(const Distribution& p, const Distribution& q, const char* who) {
  if (p.support != q.support)
    throw std::invalid_argument(std::string(who) + ": distribution supports differ");
}

}  // namespace detail

// K(p,q) = (1/2)·‖p − q‖₁.
inline double kolmogorov(const std::vector<double>& p, const std::vector<double>& q) {
  detail::check_same_length(p, q, "kolmogorov");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
  return 0.5 * sum;
}

// BC(p,q) = Σ√(p_i·q_i); for unnormalized inputs the totals must match, which
// the Distribution overload enforces.
inline double bhattacharyya(const std::vector<double>& p, const std::vector<double>& q) {
  detail::check_same_length(p, q, "bhattacharyya");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0.0 || q[i] < 0.0) throw std::invalid_argument("bhattacharyya: negative weight");
    sum += std::sqrt(p[i] * q[i]);
  }
  return sum;
}

// KL(p‖q) = Σ p_i·ln(p_i/q_i) with the standard conventions; +∞ is returned
// as the infinity sentinel, which compares larger than any finite value.
inline double kl(const std::vector<double>& p, const std::vector<double>& q) {
  detail::check_same_length(p, q, "kl");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0.0 || q[i] < 0.0) throw std::invalid_argument("kl: negative weight");
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) return std::numeric_limits<double>::infinity();
    sum += p[i] * std::log(p[i] / q[i]);
  }
  return sum;
}

inline double kolmogorov(const Distribution& p, const Distribution& q) {
  detail::check_same_support(p, q, "kolmogorov");
  return kolmogorov(p.weights, q.weights);
}

inline double bhattacharyya(const Distribution& p, const Distribution& q) {
  detail::check_same_support(p, q, "bhattacharyya");
  if (std::abs(p.total - q.total) > 1e-9 * std::max(1.0, std::abs(p.total)))
    throw std::invalid_argument("bhattacharyya: unnormalized inputs must share their total");
  return bhattacharyya(p.weights, q.weights);
}

inline double kl(const Distribution& p, const Distribution& q) {
  detail::check_same_support(p, q, "kl");
  return kl(p.weights, q.weights);
}

// p^x: the normalized eigenvalue distribution x/Tr[x] on {1..n}.
inline std::vector<double> spectrum_distribution(const Spectrum& x) {
  check_spectrum(x);
  const double tr = trace(x);
  if (!(tr > 0.0)) throw std::invalid_argument("spectrum_distribution: trace must be positive");
  std::vector<double> p(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0.0) throw std::invalid_argument("spectrum_distribution: negative eigenvalue");
    p[i] = x[i] / tr;
  }
  return p;
}

// λ/k over {1..n}: the row-length distribution of a partition of k.
inline std::vector<double> partition_distribution(const Partition& lam, int n) {
  check_partition(lam);
  if (depth(lam) > n)
    throw std::invalid_argument("partition_distribution: partition deeper than n");
  const int k = partition_size(lam);
  if (k == 0) throw std::invalid_argument("partition_distribution: empty partition");
  std::vector<double> p(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < depth(lam); ++i) p[static_cast<std::size_t>(i)] = lam[i] / static_cast<double>(k);
  return p;
}

// SW_x(λ) = (k!/Tr[x]^k)·φ_λ(x) over all partitions of k with at most n rows.
// Weights are assembled in the log domain so large k stays finite.
inline Distribution schur_weyl_dist(const Spectrum& x, int k) {
  check_spectrum(x);
  if (k < 1) throw std::invalid_argument("schur_weyl_dist: need k >= 1");
  for (double v : x)
    if (v < 0.0) throw std::invalid_argument("schur_weyl_dist: negative eigenvalue");
  const double tr = trace(x);
  if (!(tr > 0.0)) throw std::invalid_argument("schur_weyl_dist: trace must be positive");
  const int n = static_cast<int>(x.size());

  Distribution d;
  d.support = enumerate_partitions(k, n);
  d.weights.reserve(d.support.size());
  const double log_pref = std::lgamma(static_cast<double>(k) + 1.0) - k * std::log(tr);
  for (const Partition& lam : d.support) {
    const double ph = phi(lam, x);
    d.weights.push_back(ph > 0.0 ? std::exp(log_pref + std::log(ph)) : 0.0);
  }
  d.total = 1.0;
  return d;
}

// The multinomial companion m_x over the same support, for comparison tests.
inline Distribution multinomial_dist(const Spectrum& x, int k) {
  check_spectrum(x);
  if (k < 1) throw std::invalid_argument("multinomial_dist: need k >= 1");
  const int n = static_cast<int>(x.size());
  Distribution d;
  d.support = enumerate_partitions(k, n);
  d.weights.reserve(d.support.size());
  double sum = 0.0;
  for (const Partition& lam : d.support) {
    const double m = multinomial_weight(lam, x);
    d.weights.push_back(m);
    sum += m;
  }
  d.total = sum;  // the multinomial over *sorted* count vectors is not normalized
  return d;
}

// Eigenvalue estimation tail bound:
//   SW_x(λ) ≤ (k+1)^{n(n−1)/2}·exp(−k·KL(λ/k ‖ x/Tr[x])).
inline double eig_est_bound(const Partition& lam, const Spectrum& x, int n) {
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("eig_est_bound: spectrum size differs from n");
  const int k = partition_size(lam);
  const double div = kl(partition_distribution(lam, n), spectrum_distribution(x));
  const double log_pref = 0.5 * n * (n - 1) * std::log(static_cast<double>(k) + 1.0);
  if (std::isinf(div)) return 0.0;
  return std::exp(log_pref - k * div);
}

// Eigenvalue separation bound:
//   BC(SW_x, SW_y) ≤ (k+1)^{n(n−1)/2}·BC(p^x, p^y)^k, for Tr x = Tr y.
inline double eig_sep_bound(const Spectrum& x, const Spectrum& y, int k, int n) {
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw std::invalid_argument("eig_sep_bound: spectrum size differs from n");
  if (k < 1) throw std::invalid_argument("eig_sep_bound: need k >= 1");
  if (std::abs(trace(x) - trace(y)) > 1e-9 * std::max(1.0, std::abs(trace(x))))
    throw std::invalid_argument("eig_sep_bound: traces differ");
  const double bc = bhattacharyya(spectrum_distribution(x), spectrum_distribution(y));
  return std::pow(static_cast<double>(k) + 1.0, 0.5 * n * (n - 1)) * std::pow(bc, k);
}

}  // namespace tetracone
