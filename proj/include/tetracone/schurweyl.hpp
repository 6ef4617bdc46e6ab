#pragma once
// schurweyl.hpp — isotypic projectors on (ℂⁿ)^⊗k for the symmetric-group action
// on slot ranges, nested projectors of triple tensor products, numerically
// computed recoupling norms (inf and Frobenius), the φ^{αβ}_γ and φ^{αβδ}_{γεφ}
// matrix functionals, and a Monte-Carlo orbit-expectation check.
//
// Norm pipeline. For a label (α,β,γ,δ,ε,φ) put k = |ε|, a = |α|, b = |β|,
// d = |δ| and
//     q_left  = Π^ε_{[0,k)} · Π^γ_{[0,a+b)} · (Π^α ⊗ Π^β ⊗ Π^δ),
//     q_right = Π^ε_{[0,k)} · Π^φ_{[a,k)}  · (Π^α ⊗ Π^β ⊗ Π^δ).
// All factors commute (Π^ε is central for the full slot permutation group; Π^γ
// and Π^φ are central for the subgroups permuting their own slot ranges, which
// contain the respective inner factors), so both are orthogonal projectors and
//     q_left·q_right = Π^ε·Π^γ·Π^φ·(Π^α ⊗ Π^β ⊗ Π^δ).
// Let B = B_α ⊗ B_β ⊗ B_δ be the orthonormal single-tableau bases from
// tensor.hpp, r = dimV_α·dimV_β·dimV_δ. Then BB† commutes with every factor
// above, and the compression M = B†(q_left·q_right)B of size r×r carries every
// nonzero singular value of q_left·q_right with uniform multiplicity
// dimW_α·dimW_β·dimW_δ (the blocks over different tableau triples are unitarily
// equivalent). Hence
//     ‖6j‖_∞  = σ_max(M),
//     ‖6j‖₂²  = Tr(q_left·q_right)/(dimW_α dimW_β dimW_δ dimV_ε) = Tr(M)/dimV_ε,
// and M factorizes into three small chains:
//     M = E · (G ⊗ I) · (I ⊗ F),
//     E = B†Π^εB,  G = B_αβ†Π^γB_αβ,  F = B_βδ†Π^φB_βδ.

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tetracone/core.hpp"
#include "tetracone/lr.hpp"
#include "tetracone/partition.hpp"
#include "tetracone/symfunc.hpp"
#include "tetracone/tensor.hpp"

namespace tetracone {

// ---------------------------------------------------------------------------
// Hermitian-matrix validation
// ---------------------------------------------------------------------------

inline void check_hermitian(const Eigen::MatrixXcd& X, double tol = 1e-12) {
  if (X.rows() != X.cols()) throw std::invalid_argument("check_hermitian: matrix not square");
  const double scale = std::max(1.0, X.cwiseAbs().maxCoeff());
  if ((X - X.adjoint()).cwiseAbs().maxCoeff() > tol * scale)
    throw std::invalid_argument("check_hermitian: matrix is not self-adjoint");
}

inline void check_nonnegative_hermitian(const Eigen::MatrixXcd& X, double tol = 1e-10) {
  check_hermitian(X);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(X, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol)
    throw std::invalid_argument("check_nonnegative_hermitian: negative eigenvalue");
}

// ---------------------------------------------------------------------------
// Isotypic projectors (dense; test-scale dimensions)
// ---------------------------------------------------------------------------

inline constexpr std::int64_t default_dense_dim_cap = 20000;

struct IsotypicProjector {
  Eigen::MatrixXcd op;  // n^k × n^k
  Partition label;
  int first = 0;  // first slot of the permuted range
  int len = 0;    // number of permuted slots (= |label|)
};

// rank Π^λ = dimW_λ · weyl_dim(λ,n) · n^{k-|λ|}
inline std::uint64_t isotypic_rank(const Partition& lam, int n, int k) {
  std::uint64_t r = checked_mul_u64(dim_sym_irrep(lam), weyl_dim(lam, n));
  for (int i = 0; i < k - partition_size(lam); ++i) r = checked_mul_u64(r, static_cast<std::uint64_t>(n));
  return r;
}

// Orthogonal projector onto the λ-isotypic component of the symmetric-group
// action permuting slots [first, first+|λ|) of (ℂⁿ)^⊗k; identity on the rest.
inline IsotypicProjector isotypic_projector(const Partition& lam, int first, int n, int k,
                                            std::int64_t dim_cap = default_dense_dim_cap) {
  check_partition(lam);
  const int len = partition_size(lam);
  if (n < 1 || k < 0 || first < 0 || first + len > k)
    throw std::invalid_argument("isotypic_projector: slot range out of bounds");
  if (depth(lam) > n) throw std::invalid_argument("isotypic_projector: depth exceeds n");
  const std::int64_t N = tensor_dim(n, k);
  if (N > dim_cap) throw std::overflow_error("isotypic_projector: n^k exceeds the dimension cap");

  IsotypicProjector P;
  P.label = lam;
  P.first = first;
  P.len = len;
  const CMat block = jm_chain(CMat::Identity(N, N), Partition{}, 0, lam, n, k, first);
  P.op = Eigen::MatrixXcd(block);
  return P;
}

// ---------------------------------------------------------------------------
// Six-label recoupling data
// ---------------------------------------------------------------------------

struct SixJLabel {
  Partition alpha, beta, gamma, delta, epsilon, phi;
};

inline void check_sixj_label(const SixJLabel& L) {
  for (const Partition* p : {&L.alpha, &L.beta, &L.gamma, &L.delta, &L.epsilon, &L.phi})
    check_partition(*p);
  const int a = partition_size(L.alpha), b = partition_size(L.beta), g = partition_size(L.gamma),
            d = partition_size(L.delta), e = partition_size(L.epsilon), f = partition_size(L.phi);
  if (a + b != g || b + d != f || a + f != e || g + d != e)
    throw std::invalid_argument("check_sixj_label: size conditions violated");
  if (e < 1) throw std::invalid_argument("check_sixj_label: empty label");
}

// Serialization: "α;β;γ;δ;ε;φ", e.g. "[1];[1];[2];[1];[3];[2]".
inline std::string sixj_label_to_string(const SixJLabel& L) {
  return partition_to_string(L.alpha) + ";" + partition_to_string(L.beta) + ";" +
         partition_to_string(L.gamma) + ";" + partition_to_string(L.delta) + ";" +
         partition_to_string(L.epsilon) + ";" + partition_to_string(L.phi);
}

inline SixJLabel parse_sixj_label(const std::string& s) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t semi = s.find(';', pos);
    if (semi == std::string::npos) {
      parts.push_back(s.substr(pos));
      break;
    }
    parts.push_back(s.substr(pos, semi - pos));
    pos = semi + 1;
  }
  if (parts.size() != 6)
    throw std::invalid_argument("parse_sixj_label: expected six ';'-separated partitions");
  SixJLabel L;
  L.alpha = parse_partition(parts[0]);
  L.beta = parse_partition(parts[1]);
  L.gamma = parse_partition(parts[2]);
  L.delta = parse_partition(parts[3]);
  L.epsilon = parse_partition(parts[4]);
  L.phi = parse_partition(parts[5]);
  check_sixj_label(L);
  return L;
}

inline bool sixj_label_fits(const SixJLabel& L, int n) {
  for (const Partition* p : {&L.alpha, &L.beta, &L.gamma, &L.delta, &L.epsilon, &L.phi})
    if (depth(*p) > n) return false;
  return true;
}

inline std::uint64_t sixj_rank_left(const SixJLabel& L, int n) {
  check_sixj_label(L);
  if (!sixj_label_fits(L, n)) return 0;
  std::uint64_t r = checked_mul_u64(dim_sym_irrep(L.alpha), dim_sym_irrep(L.beta));
  r = checked_mul_u64(r, dim_sym_irrep(L.delta));
  r = checked_mul_u64(r, lr_coeff(L.alpha, L.beta, L.gamma));
  r = checked_mul_u64(r, lr_coeff(L.gamma, L.delta, L.epsilon));
  return checked_mul_u64(r, weyl_dim(L.epsilon, n));
}

inline std::uint64_t sixj_rank_right(const SixJLabel& L, int n) {
  check_sixj_label(L);
  if (!sixj_label_fits(L, n)) return 0;
  std::uint64_t r = checked_mul_u64(dim_sym_irrep(L.alpha), dim_sym_irrep(L.beta));
  r = checked_mul_u64(r, dim_sym_irrep(L.delta));
  r = checked_mul_u64(r, lr_coeff(L.beta, L.delta, L.phi));
  r = checked_mul_u64(r, lr_coeff(L.alpha, L.phi, L.epsilon));
  return checked_mul_u64(r, weyl_dim(L.epsilon, n));
}

namespace detail {

// The three compressed chain matrices of the factorization in the header
// comment, sized r×r with r = dimV_α·dimV_β·dimV_δ.
struct TripleOps {
  int n = 0;
  int a = 0, b = 0, d = 0, k = 0;
  int dVa = 0, dVb = 0, dVd = 0, dVe = 0;
  int r = 0;
  CMat E;   // B†Π^εB          (r × r)
  CMat Gk;  // (B_αβ†Π^γB_αβ) ⊗ I (r × r)
  CMat Fk;  // I ⊗ (B_βδ†Π^φB_βδ) (r × r)
};

inline TripleOps build_triple_ops(const SixJLabel& L, int n,
                                  std::int64_t dim_cap = default_dense_dim_cap) {
  check_sixj_label(L);
  if (n < 1) throw std::invalid_argument("build_triple_ops: need n >= 1");
  TripleOps ops;
  ops.n = n;
  ops.a = partition_size(L.alpha);
  ops.b = partition_size(L.beta);
  ops.d = partition_size(L.delta);
  ops.k = partition_size(L.epsilon);
  if (tensor_dim(n, ops.k) > dim_cap)
    throw std::overflow_error("build_triple_ops: n^k exceeds the dimension cap");
  ops.dVa = static_cast<int>(weyl_dim(L.alpha, n));
  ops.dVb = static_cast<int>(weyl_dim(L.beta, n));
  ops.dVd = static_cast<int>(weyl_dim(L.delta, n));
  ops.dVe = static_cast<int>(weyl_dim(L.epsilon, n));
  ops.r = ops.dVa * ops.dVb * ops.dVd;
  if (ops.r == 0 || ops.dVe == 0) {  // some inner label needs more than n rows
    ops.r = 0;
    return ops;
  }

  const CMat& Ba = gt_single_tableau_basis(L.alpha, n);
  const CMat& Bb = gt_single_tableau_basis(L.beta, n);
  const CMat& Bd = gt_single_tableau_basis(L.delta, n);

  // Full-space chain for Π^ε. The α-factor of B is refined along the
  // row-reading tableau path, so the chain may start at level a in shape α.
  {
    const CMat B = kron(kron(Ba, Bb), Bd);
    const CMat PeB = jm_chain(B, L.alpha, ops.a, L.epsilon, n, ops.k, 0);
    ops.E = B.adjoint() * PeB;
  }
  // Chain for Π^γ on the first a+b slots only.
  {
    const CMat Bab = kron(Ba, Bb);
    const CMat PgB = jm_chain(Bab, L.alpha, ops.a, L.gamma, n, ops.a + ops.b, 0);
    const CMat G = Bab.adjoint() * PgB;
    ops.Gk = kron(G, CMat::Identity(ops.dVd, ops.dVd));
  }
  // Chain for Π^φ on the last b+d slots only.
  {
    const CMat Bbd = kron(Bb, Bd);
    const CMat PfB = jm_chain(Bbd, L.beta, ops.b, L.phi, n, ops.b + ops.d, 0);
    const CMat F = Bbd.adjoint() * PfB;
    ops.Fk = kron(CMat::Identity(ops.dVa, ops.dVa), F);
  }
  return ops;
}

// Largest singular value by power iteration on M†M (deterministic start).
inline double power_sigma_max(const CMat& M, double tol = 1e-10, int max_iters = 100000) {
  const Eigen::Index r = M.rows();
  if (r == 0) return 0.0;
  Eigen::VectorXcd v(r);
  for (Eigen::Index i = 0; i < r; ++i) v(i) = Complex(1.0 + 0.01 * static_cast<double>(i), 0.0);
  v.normalize();
  double lambda = 0.0;
  for (int it = 0; it < max_iters; ++it) {
    Eigen::VectorXcd w = M.adjoint() * (M * v);
    const double norm = w.norm();
    if (norm < 1e-300) return 0.0;
    const double next = std::real(v.dot(w));
    v = w / norm;
    if (it > 0 && std::abs(next - lambda) <= tol * std::max(1.0, std::abs(next))) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return std::sqrt(std::max(0.0, lambda));
}

inline double sigma_max(const CMat& M) {
  if (M.rows() == 0) return 0.0;
  if (M.rows() < 512) {
    Eigen::JacobiSVD<CMat> svd(M);
    return svd.singularValues()(0);
  }
  return power_sigma_max(M);
}

}  // namespace detail

struct SixJNorms {
  double inf_norm = 0.0;      // ‖6j‖_∞ = σ_max(q_left·q_right)
  double two_norm_sq = 0.0;   // ‖6j‖₂² = Tr(q_left·q_right)/(dimW_α dimW_β dimW_δ dimV_ε)
  std::uint64_t rank_left = 0;
  std::uint64_t rank_right = 0;
  int dim_compressed = 0;  // r, the side of the compressed matrix M
};

inline SixJNorms sixj_norms(const SixJLabel& L, int n,
                            std::int64_t dim_cap = default_dense_dim_cap) {
  SixJNorms out;
  out.rank_left = sixj_rank_left(L, n);
  out.rank_right = sixj_rank_right(L, n);
  if (!sixj_label_fits(L, n)) {
    if (tensor_dim(n, partition_size(L.epsilon)) > dim_cap)
      throw std::overflow_error("sixj_norms: n^k exceeds the dimension cap");
    return out;  // some projector is identically zero on (ℂⁿ)^⊗k
  }
  detail::TripleOps ops = detail::build_triple_ops(L, n, dim_cap);
  if (ops.r == 0) return out;
  const CMat M = ops.E * ops.Gk * ops.Fk;

  const double smax = detail::sigma_max(M);
  if (smax > 1.0 + 1e-6)
    throw std::logic_error("sixj_norms: singular value exceeds 1 beyond tolerance");
  out.inf_norm = std::min(1.0, std::max(0.0, smax));

  const Complex tr = M.trace();
  if (std::abs(tr.imag()) > 1e-8 * std::max(1.0, std::abs(tr.real())))
    throw std::logic_error("sixj_norms: trace unexpectedly complex");
  out.two_norm_sq = std::max(0.0, tr.real()) / static_cast<double>(ops.dVe);
  out.dim_compressed = ops.r;
  return out;
}

inline double sixj_inf_norm(const SixJLabel& L, int n,
                            std::int64_t dim_cap = default_dense_dim_cap) {
  return sixj_norms(L, n, dim_cap).inf_norm;
}

inline double sixj_two_norm_sq(const SixJLabel& L, int n,
                               std::int64_t dim_cap = default_dense_dim_cap) {
  return sixj_norms(L, n, dim_cap).two_norm_sq;
}

// ---------------------------------------------------------------------------
// Dense q_left / q_right (test-scale oracles for the compressed pipeline)
// ---------------------------------------------------------------------------

inline Eigen::MatrixXcd q_left_dense(const SixJLabel& L, int n,
                                     std::int64_t dim_cap = default_dense_dim_cap) {
  check_sixj_label(L);
  for (const Partition* p : {&L.alpha, &L.beta, &L.gamma, &L.delta, &L.epsilon, &L.phi})
    if (depth(*p) > n) throw std::invalid_argument("q_left_dense: depth exceeds n");
  const int a = partition_size(L.alpha), b = partition_size(L.beta), k = partition_size(L.epsilon);
  const Eigen::MatrixXcd Pe = isotypic_projector(L.epsilon, 0, n, k, dim_cap).op;
  const Eigen::MatrixXcd Pg = isotypic_projector(L.gamma, 0, n, k, dim_cap).op;
  const Eigen::MatrixXcd Pa = isotypic_projector(L.alpha, 0, n, k, dim_cap).op;
  const Eigen::MatrixXcd Pb = isotypic_projector(L.beta, a, n, k, dim_cap).op;
  const Eigen::MatrixXcd Pd = isotypic_projector(L.delta, a + b, n, k, dim_cap).op;
  return Pe * Pg * (Pa * Pb * Pd);
}

inline Eigen::MatrixXcd q_right_dense(const SixJLabel& L, int n,
                                      std::int64_t dim_cap = default_dense_dim_cap) {
  check_sixj_label(L);
  for (const Partition* p : {&L.alpha, &L.beta, &L.gamma, &L.delta, &L.epsilon, &L.phi})
    if (depth(*p) > n) throw std::invalid_argument("q_right_dense: depth exceeds n");
  const int a = partition_size(L.alpha), b = partition_size(L.beta), k = partition_size(L.epsilon);
  const Eigen::MatrixXcd Pe = isotypic_projector(L.epsilon, 0, n, k, dim_cap).op;
  const Eigen::MatrixXcd Pf = isotypic_projector(L.phi, a, n, k, dim_cap).op;
  const Eigen::MatrixXcd Pa = isotypic_projector(L.alpha, 0, n, k, dim_cap).op;
  const Eigen::MatrixXcd Pb = isotypic_projector(L.beta, a, n, k, dim_cap).op;
  const Eigen::MatrixXcd Pd = isotypic_projector(L.delta, a + b, n, k, dim_cap).op;
  return Pe * Pf * (Pa * Pb * Pd);
}

// ---------------------------------------------------------------------------
// φ functionals
// ---------------------------------------------------------------------------

namespace detail {

inline double hook_product_d(const Partition& p) {
  if (partition_size(p) <= 20) return static_cast<double>(hook_product(p));
  return std::exp(log_hook_product(p));
}

// π_λ(X) = B_λ† X^{⊗|λ|} B_λ, the compression of the tensor power onto the
// single-tableau block (dimV_λ × dimV_λ).
inline CMat compressed_rep(const Partition& lam, const Eigen::MatrixXcd& X, int n) {
  const CMat& B = gt_single_tableau_basis(lam, n);
  const int m = partition_size(lam);
  CMat Y = B;
  for (int s = 0; s < m; ++s) Y = apply_slot_matrix(Y, X, n, m, s);
  return B.adjoint() * Y;
}

inline std::complex<double> phi_triple_from_ops(const TripleOps& ops, const SixJLabel& L,
                                                const Eigen::MatrixXcd& X,
                                                const Eigen::MatrixXcd& Y,
                                                const Eigen::MatrixXcd& Z) {
  if (ops.r == 0) return {0.0, 0.0};
  const CMat W = kron(kron(compressed_rep(L.alpha, X, ops.n), compressed_rep(L.beta, Y, ops.n)),
                      compressed_rep(L.delta, Z, ops.n));
  const Complex tr = (ops.E * ops.Fk * W * ops.E * ops.Gk).trace();
  const double H = hook_product_d(L.alpha) * hook_product_d(L.beta) * hook_product_d(L.delta);
  return tr / H;
}

}  // namespace detail

// φ^{αβ}_γ(X,Y) = Tr[Π^γ·(Π^α⊗Π^β)·(X^{⊗|α|}⊗Y^{⊗|β|})] / (|α|!·|β|!). Computed
// in the compressed basis: Tr[(B_αβ†Π^γB_αβ)·(π_α(X)⊗π_β(Y))] / (H_α·H_β), which
// equals the full trace because the tableau blocks are unitarily equivalent and
// |λ|!/dimW_λ = H_λ.
inline double phi_pair(const Partition& alpha, const Partition& beta, const Partition& gamma,
                       const Eigen::MatrixXcd& X, const Eigen::MatrixXcd& Y,
                       std::int64_t dim_cap = default_dense_dim_cap) {
  check_partition(alpha);
  check_partition(beta);
  check_partition(gamma);
  const int a = partition_size(alpha), b = partition_size(beta);
  if (partition_size(gamma) != a + b)
    throw std::invalid_argument("phi_pair: |gamma| must equal |alpha|+|beta|");
  if (X.rows() != Y.rows()) throw std::invalid_argument("phi_pair: X and Y sizes differ");
  check_nonnegative_hermitian(X);
  check_nonnegative_hermitian(Y);
  const int n = static_cast<int>(X.rows());
  if (tensor_dim(n, a + b) > dim_cap) throw std::overflow_error("phi_pair: n^k exceeds the dimension cap");
  if (depth(alpha) > n || depth(beta) > n || depth(gamma) > n) return 0.0;

  const CMat& Ba = gt_single_tableau_basis(alpha, n);
  const CMat& Bb = gt_single_tableau_basis(beta, n);
  const CMat Bab = kron(Ba, Bb);
  const CMat PgB = jm_chain(Bab, alpha, a, gamma, n, a + b, 0);
  const CMat G = Bab.adjoint() * PgB;
  const CMat W = kron(detail::compressed_rep(alpha, X, n), detail::compressed_rep(beta, Y, n));
  const Complex tr = (G * W).trace();
  return tr.real() / (detail::hook_product_d(alpha) * detail::hook_product_d(beta));
}

// φ^{αβδ}_{γεφ}(X,Y,Z) = Tr[q_right·(X^{⊗a}⊗Y^{⊗b}⊗Z^{⊗d})·q_left] / (a!·b!·d!);
// complex-valued in general.
inline std::complex<double> phi_triple(const SixJLabel& L, const Eigen::MatrixXcd& X,
                                       const Eigen::MatrixXcd& Y, const Eigen::MatrixXcd& Z,
                                       std::int64_t dim_cap = default_dense_dim_cap) {
  check_sixj_label(L);
  if (X.rows() != Y.rows() || X.rows() != Z.rows())
    throw std::invalid_argument("phi_triple: matrix sizes differ");
  check_nonnegative_hermitian(X);
  check_nonnegative_hermitian(Y);
  check_nonnegative_hermitian(Z);
  const int n = static_cast<int>(X.rows());
  if (tensor_dim(n, partition_size(L.epsilon)) > dim_cap)
    throw std::overflow_error("phi_triple: n^k exceeds the dimension cap");
  if (!sixj_label_fits(L, n)) return {0.0, 0.0};
  const detail::TripleOps ops = detail::build_triple_ops(L, n, dim_cap);
  return detail::phi_triple_from_ops(ops, L, X, Y, Z);
}

// ---------------------------------------------------------------------------
// Haar-orbit expectation check
// ---------------------------------------------------------------------------

namespace detail {

inline Eigen::MatrixXcd haar_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd Z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) Z(i, j) = Complex(g(rng), g(rng)) / std::sqrt(2.0);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(Z);
  Eigen::MatrixXcd Q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const Complex rii = R(i, i);
    const double mag = std::abs(rii);
    Q.col(i) *= (mag > 1e-300) ? rii / mag : Complex(1.0, 0.0);
  }
  return Q;
}

}  // namespace detail

struct HaarReport {
  double estimate = 0.0;   // sample mean of φ^{αβδ}_{γεφ}(X,Y,Z)/dimV_ε
  double std_error = 0.0;  // standard error of the mean
  double target = 0.0;     // ‖6j‖₂² · Π_{(λ,x)} φ_λ(x)/dimV_λ
  double rel_error = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;
  bool pass = false;
};

// Monte-Carlo estimate of the orbit expectation
//   E[φ^{αβδ}_{γεφ}(X,Y,Z)/dimV_ε] over Haar-random X ~ orbit(diag a), etc.,
// compared against ‖6j‖₂²·(φ_α(a)/dimV_α)(φ_β(b)/dimV_β)(φ_δ(d)/dimV_δ).
inline HaarReport haar_expectation_check(const SixJLabel& L, const Spectrum& a, const Spectrum& b,
                                         const Spectrum& d, int samples,
                                         std::uint64_t seed = 20250819u) {
  check_sixj_label(L);
  if (a.size() != b.size() || a.size() != d.size())
    throw std::invalid_argument("haar_expectation_check: spectrum sizes differ");
  for (const Spectrum* x : {&a, &b, &d}) {
    check_spectrum(*x);
    check_nonnegative(*x);
  }
  if (samples < 1) throw std::invalid_argument("haar_expectation_check: need samples >= 1");
  const int n = static_cast<int>(a.size());

  HaarReport rep;
  rep.samples = samples;
  rep.seed = seed;
  const SixJNorms norms = sixj_norms(L, n);
  if (sixj_label_fits(L, n)) {
    rep.target = norms.two_norm_sq * phi(L.alpha, a) / static_cast<double>(weyl_dim(L.alpha, n)) *
                 phi(L.beta, b) / static_cast<double>(weyl_dim(L.beta, n)) * phi(L.delta, d) /
                 static_cast<double>(weyl_dim(L.delta, n));
  }

  const detail::TripleOps ops =
      sixj_label_fits(L, n) ? detail::build_triple_ops(L, n) : detail::TripleOps{};
  const double dVe = static_cast<double>(std::max<std::uint64_t>(1, weyl_dim(L.epsilon, n)));
  std::mt19937_64 rng(seed);
  const Eigen::VectorXd da = Eigen::Map<const Eigen::VectorXd>(a.data(), n);
  const Eigen::VectorXd db = Eigen::Map<const Eigen::VectorXd>(b.data(), n);
  const Eigen::VectorXd dd = Eigen::Map<const Eigen::VectorXd>(d.data(), n);

  std::vector<double> vals(static_cast<std::size_t>(samples));
  for (int s = 0; s < samples; ++s) {
    const Eigen::MatrixXcd U = detail::haar_unitary(n, rng);
    const Eigen::MatrixXcd V = detail::haar_unitary(n, rng);
    const Eigen::MatrixXcd W = detail::haar_unitary(n, rng);
    const Eigen::MatrixXcd X = U * da.asDiagonal() * U.adjoint();
    const Eigen::MatrixXcd Y = V * db.asDiagonal() * V.adjoint();
    const Eigen::MatrixXcd Z = W * dd.asDiagonal() * W.adjoint();
    // The expectation is real; the imaginary parts average out by symmetry.
    vals[static_cast<std::size_t>(s)] = detail::phi_triple_from_ops(ops, L, X, Y, Z).real() / dVe;
  }
  double sum = 0.0;
  for (double v : vals) sum += v;
  rep.estimate = sum / samples;
  if (samples > 1) {
    // Two-pass variance: centring before squaring avoids the catastrophic
    // cancellation that would make a constant sample report a spurious spread.
    double ss = 0.0;
    for (double v : vals) ss += (v - rep.estimate) * (v - rep.estimate);
    rep.std_error = std::sqrt(ss / (samples - 1) / samples);
  }
  rep.rel_error = (std::abs(rep.target) > 1e-14) ? std::abs(rep.estimate - rep.target) / std::abs(rep.target)
                                                 : std::abs(rep.estimate);
  if (std::abs(rep.target) <= 1e-14) {
    rep.pass = std::abs(rep.estimate) <= 5.0 * rep.std_error + 1e-12;
  } else {
    rep.pass = std::abs(rep.estimate - rep.target) <=
               5.0 * rep.std_error + 1e-9 * std::max(1.0, std::abs(rep.target));
  }
  return rep;
}

}  // namespace tetracone
