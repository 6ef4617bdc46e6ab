#pragma once

// Headline algorithms on candidate eigenvalue tuples (a,b,c,d,e,f):
//
//  * tet_inequality_check — the degree-k character inequalities
//        φ_α(a)^{2/3}·φ_β(b)·φ_δ(d)^{2/3}
//          ≤ Σ_{γ,ε,φ} ‖6j‖_∞·(φ_φ(f)·φ_γ(c)·φ_ε(e))^{1/3}
//    over all (α,β,δ) with |α|+|β|+|δ| = k, the sum restricted to labels
//    passing the size conditions.  Membership holds iff all degrees pass.
//  * tet_distance_bound — if every degree-k inequality holds then
//        D/Tr[e] ≤ 6·√3·n·√(ln(k+1)/k).
//  * distance_D — a multi-restart smoothed-ℓ₁ optimizer producing an upper
//    bound on D = min over witnesses (A,B,D) of [Σ_slots ‖x − eig X‖₁²]^{1/2}.
//  * sequence_weights / asymptotics_scan / divergence_R — the degree-k label
//    sequences converging to t/Tr[e], recoupling-norm asymptotics along them,
//    and the quarter-sum of relative entropies controlling those norms.
//  * entropic_check / hook_ratio_identity / random_tetra_sample — the
//    entropy inequality s(c)+s(f) ≥ s(b)+s(e), the dimension-ratio identity
//    dimV_λ/n^{|λ|} = (dimW_λ/|λ|!)·Π_boxes(1+(j−i)/n), and a PSD test-tuple
//    generator returning its witness matrices.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "tetracone/core.hpp"
#include "tetracone/lr.hpp"
#include "tetracone/parallel.hpp"
#include "tetracone/partition.hpp"
#include "tetracone/probability.hpp"
#include "tetracone/schurweyl.hpp"
#include "tetracone/sixj_cache.hpp"
#include "tetracone/spectrum.hpp"
#include "tetracone/symfunc.hpp"

namespace tetracone {

// ---------------------------------------------------------------------------
// Character-inequality sweep
// ---------------------------------------------------------------------------

struct InequalityRecord {
  Partition alpha, beta, delta;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs − lhs
};

struct InequalityReport {
  int k = 0;
  bool all_hold = true;
  double min_slack = std::numeric_limits<double>::infinity();
  std::size_t num_triples = 0;
  InequalityRecord worst;
  std::vector<InequalityRecord> records;
};

namespace detail {

inline void check_tetra_input(const SpectrumTuple& t, const char* who) {
  check_tuple(t);
  for (int s = 0; s < 6; ++s)
    for (double v : t.slot(s))
      if (v < 0.0) throw std::invalid_argument(std::string(who) + ": negative spectrum entry");
  if (!traces_consistent(t))
    throw std::invalid_argument(std::string(who) + ": trace conditions violated");
}

inline SixJNorms norms_via(SixJCache* cache, const SixJLabel& L, int n, std::int64_t dim_cap) {
  return cache ? cache->get(L, n, dim_cap) : sixj_norms(L, n, dim_cap);
}

}  // namespace detail

inline InequalityReport tet_inequality_check(const SpectrumTuple& t, int k,
                                             SixJCache* cache = nullptr, int threads = 1,
                                             std::int64_t dim_cap = default_dense_dim_cap) {
  detail::check_tetra_input(t, "tet_inequality_check");
  if (k < 1) throw std::invalid_argument("tet_inequality_check: need k >= 1");
  const int n = t.n();
  if (tensor_dim(n, k) > dim_cap)
    throw std::overflow_error("tet_inequality_check: n^k exceeds the dimension cap");

  struct Triple {
    Partition alpha, beta, delta;
  };
  std::vector<Triple> triples;
  for (int ja = 0; ja <= k; ++ja)
    for (int jb = 0; jb + ja <= k; ++jb) {
      const int jd = k - ja - jb;
      for (const Partition& alpha : enumerate_partitions(ja, n))
        for (const Partition& beta : enumerate_partitions(jb, n))
          for (const Partition& delta : enumerate_partitions(jd, n))
            triples.push_back({alpha, beta, delta});
    }

  InequalityReport report;
  report.k = k;
  report.num_triples = triples.size();
  report.records.resize(triples.size());

  parallel_for(
      triples.size(),
      [&](std::size_t idx) {
        const Triple& tr = triples[idx];
        const int ja = partition_size(tr.alpha), jb = partition_size(tr.beta),
                  jd = partition_size(tr.delta);
        InequalityRecord rec;
        rec.alpha = tr.alpha;
        rec.beta = tr.beta;
        rec.delta = tr.delta;
        rec.lhs = std::pow(phi(tr.alpha, t.a), 2.0 / 3.0) * phi(tr.beta, t.b) *
                  std::pow(phi(tr.delta, t.d), 2.0 / 3.0);
        double rhs = 0.0;
        for (const Partition& gamma : enumerate_partitions(ja + jb, n)) {
          if (lr_coeff(tr.alpha, tr.beta, gamma) == 0) continue;
          const double phi_c = phi(gamma, t.c);
          for (const Partition& ph : enumerate_partitions(jb + jd, n)) {
            if (lr_coeff(tr.beta, tr.delta, ph) == 0) continue;
            const double phi_f = phi(ph, t.f);
            for (const Partition& eps : enumerate_partitions(k, n)) {
              if (lr_coeff(gamma, tr.delta, eps) == 0) continue;
              if (lr_coeff(tr.alpha, ph, eps) == 0) continue;
              SixJLabel L;
              L.alpha = tr.alpha;
              L.beta = tr.beta;
              L.gamma = gamma;
              L.delta = tr.delta;
              L.epsilon = eps;
              L.phi = ph;
              const SixJNorms norms = detail::norms_via(cache, L, n, dim_cap);
              if (norms.inf_norm <= 0.0) continue;
              rhs += norms.inf_norm * std::cbrt(phi_f * phi_c * phi(eps, t.e));
            }
          }
        }
        rec.rhs = rhs;
        rec.slack = rhs - rec.lhs;
        report.records[idx] = rec;
      },
      threads);

  for (const InequalityRecord& rec : report.records) {
    if (rec.slack < report.min_slack) {
      report.min_slack = rec.slack;
      report.worst = rec;
    }
    if (rec.slack < -1e-9 * std::max(1.0, rec.lhs)) report.all_hold = false;
  }
  return report;
}

// Distance guarantee once the degree-k inequalities all hold:
// D/Tr[e] ≤ 6·√3·n·√(ln(k+1)/k).
inline double tet_distance_bound(int k, int n) {
  if (k < 1) throw std::invalid_argument("tet_distance_bound: need k >= 1");
  if (n < 1) throw std::invalid_argument("tet_distance_bound: need n >= 1");
  return 6.0 * std::sqrt(3.0) * n * std::sqrt(std::log(static_cast<double>(k) + 1.0) / k);
}

// ---------------------------------------------------------------------------
// Distance optimizer
// ---------------------------------------------------------------------------

struct DistanceBudget {
  int restarts = 8;
  int iters_per_stage = 400;
  std::uint64_t seed = 20250819u;
};

struct DistanceCertificate {
  double value = std::numeric_limits<double>::infinity();  // unsmoothed objective
  bool converged = false;
  std::string mode;  // "orbit" or "free"
  Eigen::MatrixXcd A, B, D;
  std::array<double, 6> slot_residuals{};  // ‖x_s − eig(M_s)‖₁ per slot a..f
};

namespace detail {

// Eigen's solver returns ascending eigenvalues; all spectra here are stored
// descending, so reverse both values and vectors.
inline void sorted_eigensystem(const Eigen::MatrixXcd& M, Eigen::VectorXd& vals,
                               Eigen::MatrixXcd& vecs) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
  const int n = static_cast<int>(M.rows());
  vals.resize(n);
  vecs.resize(n, n);
  for (int i = 0; i < n; ++i) {
    vals(i) = es.eigenvalues()(n - 1 - i);
    vecs.col(i) = es.eigenvectors().col(n - 1 - i);
  }
}

inline Spectrum sorted_eigenvalues(const Eigen::MatrixXcd& M) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M, Eigen::EigenvaluesOnly);
  Spectrum s(static_cast<std::size_t>(M.rows()));
  const int n = static_cast<int>(M.rows());
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = es.eigenvalues()(n - 1 - i);
  return s;
}

inline Eigen::MatrixXcd unitary_exp(const Eigen::MatrixXcd& H) {
  // exp(iH) for Hermitian H via its spectral decomposition.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
  Eigen::VectorXcd phases(H.rows());
  for (int i = 0; i < H.rows(); ++i)
    phases(i) = std::exp(Complex(0.0, es.eigenvalues()(i)));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

inline Eigen::MatrixXcd gaussian_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd H(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) H(i, j) = Complex(g(rng), g(rng));
  return 0.5 * (H + H.adjoint().eval());
}

struct SlotTerm {
  int slot;                 // 0..5 (a..f)
  std::array<bool, 3> use;  // which of A,B,D enter M_slot
};

// M_a = A, M_b = B, M_c = A+B, M_d = D, M_e = A+B+D, M_f = B+D.
inline const std::array<SlotTerm, 6>& slot_terms() {
  static const std::array<SlotTerm, 6> terms = {{
      {0, {true, false, false}},
      {1, {false, true, false}},
      {2, {true, true, false}},
      {3, {false, false, true}},
      {4, {true, true, true}},
      {5, {false, true, true}},
  }};
  return terms;
}

struct DistanceState {
  std::array<Eigen::MatrixXcd, 3> M;  // A, B, D
};

inline Eigen::MatrixXcd slot_matrix(const DistanceState& st, const SlotTerm& term, int n) {
  Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(n, n);
  for (int m = 0; m < 3; ++m)
    if (term.use[static_cast<std::size_t>(m)]) S += st.M[static_cast<std::size_t>(m)];
  return S;
}

// Smoothed squared objective Σ_s L_s² with L_s = Σ_i √((x_i−λ_i)² + η²),
// together with its gradient in the requested coordinates.
//   orbit mode: gradients are Hermitian generators G_X = Σ w·i[X, P_i]
//               (slots a,b,d are exactly zero and carry no gradient);
//   free mode:  gradients are Hermitian matrices Σ w·P_i over all six slots.
inline double distance_objective(const SpectrumTuple& t, const DistanceState& st, double eta,
                                 bool orbit, std::array<Eigen::MatrixXcd, 3>* grad) {
  const int n = t.n();
  if (grad)
    for (int m = 0; m < 3; ++m) (*grad)[static_cast<std::size_t>(m)] = Eigen::MatrixXcd::Zero(n, n);
  double total = 0.0;
  for (const SlotTerm& term : slot_terms()) {
    if (orbit && (term.slot == 0 || term.slot == 1 || term.slot == 3)) continue;
    const Eigen::MatrixXcd S = slot_matrix(st, term, n);
    Eigen::VectorXd vals;
    Eigen::MatrixXcd vecs;
    sorted_eigensystem(S, vals, vecs);
    const Spectrum& x = t.slot(term.slot);
    double L = 0.0;
    std::vector<double> u(static_cast<std::size_t>(n)), su(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      u[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] - vals(i);
      su[static_cast<std::size_t>(i)] =
          std::sqrt(u[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(i)] + eta * eta);
      L += su[static_cast<std::size_t>(i)];
    }
    total += L * L;
    if (!grad) continue;
    for (int i = 0; i < n; ++i) {
      const double w = -2.0 * L * u[static_cast<std::size_t>(i)] / su[static_cast<std::size_t>(i)];
      if (w == 0.0) continue;
      const Eigen::MatrixXcd P = vecs.col(i) * vecs.col(i).adjoint();
      for (int m = 0; m < 3; ++m) {
        if (!term.use[static_cast<std::size_t>(m)]) continue;
        if (orbit) {
          const Eigen::MatrixXcd& X = st.M[static_cast<std::size_t>(m)];
          (*grad)[static_cast<std::size_t>(m)] += w * Complex(0.0, 1.0) * (X * P - P * X);
        } else {
          (*grad)[static_cast<std::size_t>(m)] += w * P;
        }
      }
    }
  }
  return total;
}

inline double distance_unsmoothed(const SpectrumTuple& t, const DistanceState& st,
                                  std::array<double, 6>* residuals) {
  const int n = t.n();
  double total = 0.0;
  for (const SlotTerm& term : slot_terms()) {
    const Spectrum eig = sorted_eigenvalues(slot_matrix(st, term, n));
    const Spectrum& x = t.slot(term.slot);
    double L = 0.0;
    for (int i = 0; i < n; ++i)
      L += std::abs(x[static_cast<std::size_t>(i)] - eig[static_cast<std::size_t>(i)]);
    if (residuals) (*residuals)[static_cast<std::size_t>(term.slot)] = L;
    total += L * L;
  }
  return std::sqrt(total);
}

}  // namespace detail

inline DistanceCertificate distance_D(const SpectrumTuple& t, const std::string& mode,
                                      const DistanceBudget& budget = DistanceBudget{}) {
  if (mode != "orbit" && mode != "free")
    throw std::invalid_argument("distance_D: mode must be 'orbit' or 'free'");
  check_tuple(t);
  if (!traces_consistent(t)) throw std::invalid_argument("distance_D: trace conditions violated");
  const bool orbit = (mode == "orbit");
  const int n = t.n();
  const double scale = std::max(1.0, std::abs(trace(t.e)));

  const std::array<const Spectrum*, 3> base = {&t.a, &t.b, &t.d};
  static const double etas[] = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8};

  DistanceCertificate best;
  best.mode = mode;
  bool best_stalled = false;

  std::mt19937_64 rng(budget.seed);
  for (int restart = 0; restart < std::max(1, budget.restarts); ++restart) {
    // Restart 0 starts from diagonal witnesses; later restarts from random
    // unitary conjugations of them.
    detail::DistanceState st;
    for (int m = 0; m < 3; ++m) {
      Eigen::VectorXd diag(n);
      for (int i = 0; i < n; ++i) diag(i) = (*base[static_cast<std::size_t>(m)])[static_cast<std::size_t>(i)];
      Eigen::MatrixXcd U = Eigen::MatrixXcd::Identity(n, n);
      if (restart > 0) U = detail::unitary_exp(detail::gaussian_hermitian(n, rng));
      st.M[static_cast<std::size_t>(m)] = U * diag.asDiagonal() * U.adjoint();
    }

    bool stalled_final_stage = false;
    for (double eta : etas) {
      const double lr0 = (orbit ? 0.2 : 0.2) / (scale * scale + 1.0);
      double lr = lr0;
      std::array<Eigen::MatrixXcd, 3> mom;
      for (auto& m : mom) m = Eigen::MatrixXcd::Zero(n, n);
      std::array<Eigen::MatrixXcd, 3> grad;
      double obj = detail::distance_objective(t, st, eta, orbit, &grad);
      int since_improvement = 0;
      double stage_best = obj;
      stalled_final_stage = false;
      for (int iter = 0; iter < budget.iters_per_stage; ++iter) {
        const double mu = 0.9;
        for (int m = 0; m < 3; ++m)
          mom[static_cast<std::size_t>(m)] =
              mu * mom[static_cast<std::size_t>(m)] + grad[static_cast<std::size_t>(m)];
        detail::DistanceState trial = st;
        for (int m = 0; m < 3; ++m) {
          if (orbit) {
            const Eigen::MatrixXcd step = -lr * mom[static_cast<std::size_t>(m)];
            const Eigen::MatrixXcd U = detail::unitary_exp(step);
            trial.M[static_cast<std::size_t>(m)] =
                U * trial.M[static_cast<std::size_t>(m)] * U.adjoint();
          } else {
            trial.M[static_cast<std::size_t>(m)] -= lr * mom[static_cast<std::size_t>(m)];
          }
        }
        std::array<Eigen::MatrixXcd, 3> trial_grad;
        const double trial_obj = detail::distance_objective(t, trial, eta, orbit, &trial_grad);
        if (trial_obj <= obj) {
          st = trial;
          grad = trial_grad;
          obj = trial_obj;
          lr = std::min(lr * 1.05, lr0 * 10.0);
        } else {
          lr *= 0.5;
          for (auto& m : mom) m.setZero();
          if (lr < lr0 * 1e-14) {
            stalled_final_stage = true;
            break;
          }
        }
        if (obj < stage_best * (1.0 - 1e-13)) {
          stage_best = obj;
          since_improvement = 0;
        } else if (++since_improvement > 40) {
          stalled_final_stage = true;
          break;
        }
      }
      if (std::sqrt(std::max(0.0, obj)) < 1e-10) break;  // cannot beat an exact witness
    }

    std::array<double, 6> residuals{};
    const double value = detail::distance_unsmoothed(t, st, &residuals);
    if (value < best.value) {
      best.value = value;
      best.A = st.M[0];
      best.B = st.M[1];
      best.D = st.M[2];
      best.slot_residuals = residuals;
      best_stalled = stalled_final_stage;
    }
    if (best.value < 1e-10) break;
  }
  best.converged = best_stalled || best.value <= 1e-8;
  return best;
}

// ---------------------------------------------------------------------------
// Degree-k label sequences and asymptotics
// ---------------------------------------------------------------------------

namespace detail {

// Closest integer vector to scale·x with the prescribed total, by largest
// remainder.  On a descending input the output is descending: equal floors
// force ordered remainders, and ties bump the earlier (larger) entry first.
inline std::vector<int> largest_remainder(const std::vector<double>& targets, int total) {
  const std::size_t n = targets.size();
  std::vector<int> out(n);
  std::vector<double> rem(n);
  long long assigned = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double fl = std::floor(targets[i]);
    out[i] = static_cast<int>(fl);
    rem[i] = targets[i] - fl;
    assigned += out[i];
  }
  long long deficit = static_cast<long long>(total) - assigned;
  if (deficit < 0 || deficit > static_cast<long long>(n))
    throw std::logic_error("sequence_weights: rounding repair infeasible");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return rem[i] > rem[j]; });
  for (long long b = 0; b < deficit; ++b) ++out[order[static_cast<std::size_t>(b)]];
  return out;
}

inline Partition rounded_slot(const Spectrum& x, double scale, int total, const char* who) {
  std::vector<double> targets(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) targets[i] = scale * x[i];
  const std::vector<int> rounded = largest_remainder(targets, total);
  Partition p;
  for (int v : rounded) p.push_back(v);
  while (!p.empty() && p.back() == 0) p.pop_back();
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] > p[i - 1]) throw std::logic_error(std::string(who) + ": rounded rows not descending");
  return p;
}

}  // namespace detail

// Degree-k integer labels converging to t/Tr[e]: each slot is rounded by
// largest remainder to slot totals that satisfy the four size conditions
// exactly, with |α|+|β|+|δ| = |ε| = k.
inline SixJLabel sequence_weights(const SpectrumTuple& t, int k) {
  detail::check_tetra_input(t, "sequence_weights");
  if (k < 1) throw std::invalid_argument("sequence_weights: need k >= 1");
  const double tre = trace(t.e);
  if (!(tre > 0.0)) throw std::invalid_argument("sequence_weights: Tr[e] must be positive");
  const double scale = k / tre;

  // Slot totals first: (|α|,|β|,|δ|) rounds (Tr a, Tr b, Tr d)·k/Tr e to sum
  // k, and the remaining totals follow from the size conditions.
  const std::vector<int> s =
      detail::largest_remainder({scale * trace(t.a), scale * trace(t.b), scale * trace(t.d)}, k);

  SixJLabel L;
  L.alpha = detail::rounded_slot(t.a, scale, s[0], "sequence_weights");
  L.beta = detail::rounded_slot(t.b, scale, s[1], "sequence_weights");
  L.delta = detail::rounded_slot(t.d, scale, s[2], "sequence_weights");
  L.gamma = detail::rounded_slot(t.c, scale, s[0] + s[1], "sequence_weights");
  L.phi = detail::rounded_slot(t.f, scale, s[1] + s[2], "sequence_weights");
  L.epsilon = detail::rounded_slot(t.e, scale, k, "sequence_weights");
  check_sixj_label(L);  // defensive: the totals satisfy the size conditions
  return L;
}

struct AsymptoticsRow {
  int k = 0;
  SixJLabel sequence_label;
  double sequence_norm = 0.0;  // ‖6j‖_∞ at the rounded label
  double scaled = 0.0;         // sequence_norm·(k+1)^{6·rank(e)}
  SixJLabel best_label;        // a label attaining the global max at this k
  double best_norm = 0.0;      // its computed norm (exactly 1 in exact arithmetic)
};

struct AsymptoticsReport {
  int rank_e = 0;
  std::vector<AsymptoticsRow> rows;
  double slope = 0.0;      // least-squares slope of ln(scaled) against k
  double slope_raw = 0.0;  // least-squares slope of ln(sequence_norm) against k
  bool slope_valid = false;
  bool decaying = false;  // slope_raw < 0: the norms themselves decay
};

// Singular values below this are indistinguishable from an exactly vanishing
// coupling at double precision; rows under the floor are excluded from fits.
inline constexpr double sequence_norm_floor = 1e-14;

inline int spectrum_rank(const Spectrum& x) {
  double top = 0.0;
  for (double v : x) top = std::max(top, std::abs(v));
  int r = 0;
  for (double v : x)
    if (std::abs(v) > 1e-12 * std::max(1.0, top)) ++r;
  return r;
}

// For each k: the rounded-sequence label norm (telemetry for the convergence
// statement) and the certified maximum over all size-condition labels.  The
// maximum equals 1 at every degree: the label α=γ=ε=(k), β=δ=φ=∅ collapses
// both projector products to the single symmetric-power projector, so its
// norm is exactly 1 and no label can exceed 1.
inline AsymptoticsReport asymptotics_scan(const SpectrumTuple& t, const std::vector<int>& k_list,
                                          SixJCache* cache = nullptr,
                                          std::int64_t dim_cap = default_dense_dim_cap) {
  detail::check_tetra_input(t, "asymptotics_scan");
  const int n = t.n();
  AsymptoticsReport report;
  report.rank_e = spectrum_rank(t.e);

  std::vector<double> xs, ys_raw, ys_scaled;
  for (int k : k_list) {
    if (k < 1) throw std::invalid_argument("asymptotics_scan: need k >= 1");
    if (tensor_dim(n, k) > dim_cap)
      throw std::overflow_error("asymptotics_scan: n^k exceeds the dimension cap");
    AsymptoticsRow row;
    row.k = k;
    row.sequence_label = sequence_weights(t, k);
    row.sequence_norm = detail::norms_via(cache, row.sequence_label, n, dim_cap).inf_norm;
    row.scaled = row.sequence_norm *
                 std::pow(static_cast<double>(k) + 1.0, 6.0 * static_cast<double>(report.rank_e));
    row.best_label.alpha = Partition{k};
    row.best_label.gamma = Partition{k};
    row.best_label.epsilon = Partition{k};
    check_sixj_label(row.best_label);
    row.best_norm = detail::norms_via(cache, row.best_label, n, dim_cap).inf_norm;
    if (row.sequence_norm > sequence_norm_floor) {
      xs.push_back(static_cast<double>(k));
      ys_raw.push_back(std::log(row.sequence_norm));
      ys_scaled.push_back(std::log(row.sequence_norm) +
                          6.0 * report.rank_e * std::log(static_cast<double>(k) + 1.0));
    }
    report.rows.push_back(std::move(row));
  }

  auto fit = [&xs](const std::vector<double>& ys, double& out) {
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= xs.size();
    my /= ys.size();
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxx += (xs[i] - mx) * (xs[i] - mx);
      sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx <= 0.0) return false;
    out = sxy / sxx;
    return true;
  };
  if (xs.size() >= 3 && fit(ys_scaled, report.slope) && fit(ys_raw, report.slope_raw)) {
    report.slope_valid = true;
    report.decaying = report.slope_raw < 0.0;
  }
  return report;
}

// Quarter-sum of the four relative entropies comparing a degree-k label with
// the tuple:
//   R = ¼·[ KL(α⊕β⊕δ/k ‖ a⊕b⊕d/Tr e) + KL(γ⊕δ/k ‖ c⊕d/Tr e)
//         + KL(α⊕φ/k ‖ a⊕f/Tr e)     + KL(ε/k ‖ e/Tr e) ],
// where ⊕ concatenates slots (labels padded to n rows).  Vanishes exactly
// when the label is proportional to the tuple; may be +∞ when a label puts
// weight where the tuple has none.
inline double divergence_R(const SpectrumTuple& t, const SixJLabel& L) {
  detail::check_tetra_input(t, "divergence_R");
  check_sixj_label(L);
  const int n = t.n();
  for (const Partition* p : {&L.alpha, &L.beta, &L.gamma, &L.delta, &L.epsilon, &L.phi})
    if (depth(*p) > n) throw std::invalid_argument("divergence_R: label deeper than n");
  const int k = partition_size(L.epsilon);
  const double tre = trace(t.e);
  if (!(tre > 0.0)) throw std::invalid_argument("divergence_R: Tr[e] must be positive");

  auto pad = [n](const Partition& p) {
    std::vector<double> v(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < depth(p); ++i) v[static_cast<std::size_t>(i)] = p[i];
    return v;
  };
  auto cat = [&](std::vector<std::vector<double>> parts, double denom) {
    std::vector<double> v;
    for (const auto& part : parts)
      for (double x : part) v.push_back(x / denom);
    return v;
  };
  auto spec = [](const Spectrum& s) { return std::vector<double>(s.begin(), s.end()); };

  const double r1 = kl(cat({pad(L.alpha), pad(L.beta), pad(L.delta)}, k),
                       cat({spec(t.a), spec(t.b), spec(t.d)}, tre));
  const double r2 =
      kl(cat({pad(L.gamma), pad(L.delta)}, k), cat({spec(t.c), spec(t.d)}, tre));
  const double r3 = kl(cat({pad(L.alpha), pad(L.phi)}, k), cat({spec(t.a), spec(t.f)}, tre));
  const double r4 = kl(cat({pad(L.epsilon)}, k), cat({spec(t.e)}, tre));
  return 0.25 * (r1 + r2 + r3 + r4);
}

// ---------------------------------------------------------------------------
// Entropy, dimension ratios, and tuple sampling
// ---------------------------------------------------------------------------

// Signed margin of the entropy inequality s(c)+s(f) ≥ s(b)+s(e) with
// s(x) = −Σ x_i ln x_i (unnormalized).  The margin only reads four slots, but
// the statement is about non-negative tuples, so all six are validated.
inline double entropic_check(const SpectrumTuple& t) {
  check_tuple(t);
  for (int s = 0; s < 6; ++s)
    for (double v : t.slot(s))
      if (v < 0.0) throw std::invalid_argument("entropic_check: negative eigenvalue");
  return unnormalized_entropy(t.c) + unnormalized_entropy(t.f) - unnormalized_entropy(t.b) -
         unnormalized_entropy(t.e);
}

// Residual of the exact identity
//   dimV_λ/n^{|λ|} = (dimW_λ/|λ|!)·Π_{(i,j)∈λ}(1 + (j−i)/n).
inline double hook_ratio_identity(const Partition& lam, int n) {
  check_partition(lam);
  if (n < 1) throw std::invalid_argument("hook_ratio_identity: need n >= 1");
  if (depth(lam) > n) throw std::invalid_argument("hook_ratio_identity: depth exceeds n");
  const int k = partition_size(lam);
  const double lhs =
      std::exp(log_weyl_dim(lam, n) - k * std::log(static_cast<double>(n)));
  double prod = 1.0;
  for (int i = 0; i < depth(lam); ++i)
    for (int j = 0; j < lam[i]; ++j) prod *= 1.0 + static_cast<double>(j - i) / n;
  const double rhs =
      std::exp(log_dim_sym_irrep(lam) - std::lgamma(static_cast<double>(k) + 1.0)) * prod;
  return std::abs(lhs - rhs);
}

struct TetraSample {
  SpectrumTuple tuple;
  Eigen::MatrixXcd A, B, D;
};

// Draws PSD witnesses A = GG† (complex Gaussian G) and returns the realized
// eigenvalue tuple together with the matrices.
inline TetraSample random_tetra_sample(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_tetra_sample: need n >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  auto psd = [&]() {
    Eigen::MatrixXcd G(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) G(i, j) = Complex(g(rng), g(rng)) / std::sqrt(2.0);
    return Eigen::MatrixXcd(G * G.adjoint());
  };
  TetraSample s;
  s.A = psd();
  s.B = psd();
  s.D = psd();
  s.tuple.a = detail::sorted_eigenvalues(s.A);
  s.tuple.b = detail::sorted_eigenvalues(s.B);
  s.tuple.c = detail::sorted_eigenvalues(s.A + s.B);
  s.tuple.d = detail::sorted_eigenvalues(s.D);
  s.tuple.e = detail::sorted_eigenvalues(s.A + s.B + s.D);
  s.tuple.f = detail::sorted_eigenvalues(s.B + s.D);
  return s;
}

}  // namespace tetracone
