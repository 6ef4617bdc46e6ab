#pragma once
// tensor.hpp — dense machinery on tensor powers (ℂⁿ)^⊗k: slot/digit index
// arithmetic, symmetric-group transpositions as row permutations, Jucys–Murphy
// operators, sequential eigenspace-refinement chains, Kronecker products, and
// orthonormal single-path bases of irreducible unitary-group blocks.
//
// Index convention: a basis vector of (ℂⁿ)^⊗k is labeled by the big-endian
// digit string (d_0, …, d_{k-1}) with slot s carrying stride n^{k-1-s}.

#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tetracone/core.hpp"
#include "tetracone/partition.hpp"

namespace tetracone {

using Complex = std::complex<double>;
// Row-major storage: slot permutations act on row indices, so row gathers and
// row AXPYs touch contiguous memory.
using CMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// n^k with an overflow guard (returns the dimension of (ℂⁿ)^⊗k).
inline std::int64_t tensor_dim(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("tensor_dim: need n >= 1, k >= 0");
  std::int64_t dim = 1;
  for (int i = 0; i < k; ++i) {
    if (dim > (std::int64_t{1} << 56) / n) throw std::overflow_error("tensor_dim: n^k overflows");
    dim *= n;
  }
  return dim;
}

namespace detail {

inline std::int64_t slot_stride(int n, int k, int s) {
  std::int64_t p = 1;
  for (int i = 0; i < k - 1 - s; ++i) p *= n;
  return p;
}

// out += ρ((s t)) · in, the transposition of tensor slots s < t acting by
// permuting basis rows: row i receives the row whose digits s and t are swapped.
inline void add_transposed_rows(const CMat& in, CMat& out, int n, int k, int s, int t) {
  const std::int64_t rows = in.rows();
  const std::int64_t ps = slot_stride(n, k, s);
  const std::int64_t pt = slot_stride(n, k, t);
  for (std::int64_t i = 0; i < rows; ++i) {
    const std::int64_t ds = (i / ps) % n;
    const std::int64_t dt = (i / pt) % n;
    const std::int64_t j = i + (dt - ds) * ps + (ds - dt) * pt;
    out.row(i) += in.row(j);
  }
}

// out = X_m · in where X_m = Σ_{j=0}^{m-2} ρ((off+j, off+m-1)) is the m-th
// Jucys–Murphy operator of the symmetric group acting on slots [off, off+m).
inline void apply_jm(const CMat& in, CMat& out, int n, int k, int off, int m) {
  out.setZero(in.rows(), in.cols());
  for (int j = 0; j + 1 < m; ++j) {
    add_transposed_rows(in, out, n, k, off + j, off + m - 1);
  }
}

// f(X_m) · in for the Lagrange polynomial over the node set `nodes` that is 1 at
// nodes[target] and 0 at the other nodes. On the invariant subspaces handled by
// the refinement chains below, the spectrum of X_m is exactly `nodes`, so this
// acts as the orthogonal spectral projector of the target eigenvalue.
inline CMat lagrange_filter(const CMat& in, int n, int k, int off, int m,
                            const std::vector<int>& nodes, std::size_t target) {
  CMat cur = in;
  CMat tmp;
  const double cstar = static_cast<double>(nodes[target]);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i == target) continue;
    const double c = static_cast<double>(nodes[i]);
    apply_jm(cur, tmp, n, k, off, m);
    cur = (tmp - c * cur) / (cstar - c);
  }
  return cur;
}

}  // namespace detail

// Sequential Jucys–Murphy refinement. Starting from `start` (assumed to satisfy
// P^{(start_level)}_μ·start = start for μ = start_shape and 0 for every other
// shape of that level), produce P_target·start, where P_target is the isotypic
// projector of `target` for the symmetric group permuting the `|target|` slots
// beginning at absolute slot `off` of (ℂⁿ)^⊗k. Branches not contained in
// `target` are pruned (they can never grow into it).
inline CMat jm_chain(const CMat& start, const Partition& start_shape, int start_level,
                     const Partition& target, int n, int k, int off) {
  if (partition_size(start_shape) != start_level)
    throw std::invalid_argument("jm_chain: start shape size must equal start level");
  const int len = partition_size(target);
  if (start_level > len) throw std::invalid_argument("jm_chain: start level beyond target size");
  CMat zero = CMat::Zero(start.rows(), start.cols());
  if (!partition_contains(target, start_shape)) return zero;

  std::map<Partition, CMat> blocks;
  blocks.emplace(start_shape, start);
  for (int m = start_level + 1; m <= len; ++m) {
    std::map<Partition, CMat> next;
    for (const auto& [mu, mat] : blocks) {
      const std::vector<int> nodes = addable_contents(mu, n);
      for (std::size_t idx = 0; idx < nodes.size(); ++idx) {
        const Partition lam = add_box_by_content(mu, nodes[idx], n);
        if (!partition_contains(target, lam)) continue;
        CMat filtered = detail::lagrange_filter(mat, n, k, off, m, nodes, idx);
        auto it = next.find(lam);
        if (it == next.end()) {
          next.emplace(lam, std::move(filtered));
        } else {
          it->second += filtered;
        }
      }
    }
    blocks.swap(next);
    if (blocks.empty()) return zero;
  }
  auto it = blocks.find(target);
  return it == blocks.end() ? zero : it->second;
}

// out = (I ⊗ … ⊗ X ⊗ … ⊗ I) · in with X acting on tensor slot s.
inline CMat apply_slot_matrix(const CMat& in, const Eigen::MatrixXcd& X, int n, int k, int s) {
  if (X.rows() != n || X.cols() != n) throw std::invalid_argument("apply_slot_matrix: X must be n x n");
  const std::int64_t stride = detail::slot_stride(n, k, s);
  const std::int64_t rows = in.rows();
  CMat out = CMat::Zero(rows, in.cols());
  for (std::int64_t base = 0; base < rows; base += stride * n) {
    for (std::int64_t lo = 0; lo < stride; ++lo) {
      for (int d = 0; d < n; ++d) {
        auto dst = out.row(base + d * stride + lo);
        for (int dp = 0; dp < n; ++dp) {
          dst += X(d, dp) * in.row(base + dp * stride + lo);
        }
      }
    }
  }
  return out;
}

// Kronecker product (big-endian: row index ia*B.rows()+ib).
inline CMat kron(const CMat& A, const CMat& B) {
  CMat out(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index ia = 0; ia < A.rows(); ++ia) {
    for (Eigen::Index ja = 0; ja < A.cols(); ++ja) {
      out.block(ia * B.rows(), ja * B.cols(), B.rows(), B.cols()) = A(ia, ja) * B;
    }
  }
  return out;
}

// Orthonormal basis (n^{|λ|} × weyl_dim(λ,n)) of the subspace of (ℂⁿ)^⊗|λ|
// selected by the row-reading standard-tableau path of λ: the irreducible
// unitary-group block attached to one fixed copy of the symmetric-group irrep.
// Built level by level: adjoin one tensor slot, project onto the Jucys–Murphy
// eigenspace of the next box's content, re-orthonormalize. Memoized per (n, λ).
inline const CMat& gt_single_tableau_basis(const Partition& lam, int n) {
  static std::map<std::pair<int, Partition>, CMat> cache;
  static std::mutex cache_mutex;
  std::lock_guard<std::mutex> lock(cache_mutex);
  const auto key = std::make_pair(n, lam);
  auto hit = cache.find(key);
  if (hit != cache.end()) return hit->second;

  check_partition(lam);
  if (n < 1) throw std::invalid_argument("gt_single_tableau_basis: need n >= 1");
  if (depth(lam) > n) throw std::invalid_argument("gt_single_tableau_basis: depth exceeds n");

  CMat B = CMat::Ones(1, 1);
  Partition shape;  // grows along the row-reading path of lam
  int m = 0;
  for (int row = 0; row < depth(lam); ++row) {
    for (int col = 0; col < lam[row]; ++col) {
      ++m;
      const int content = col - row;
      const std::vector<int> nodes = addable_contents(shape, n);
      std::size_t target = nodes.size();
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] == content) target = i;
      }
      if (target == nodes.size())
        throw std::logic_error("gt_single_tableau_basis: path box not addable");

      CMat C = kron(B, CMat::Identity(n, n));
      CMat filtered = detail::lagrange_filter(C, n, m, 0, m, nodes, target);
      shape = add_box_by_content(shape, content, n);

      const std::int64_t dim = static_cast<std::int64_t>(weyl_dim(shape, n));
      Eigen::JacobiSVD<CMat> svd(filtered, Eigen::ComputeThinU);
      const auto& sv = svd.singularValues();
      if (dim > sv.size() || sv(dim - 1) < 0.5)
        throw std::logic_error("gt_single_tableau_basis: rank deficiency in refinement");
      if (dim < sv.size() && sv(dim) > 1e-8)
        throw std::logic_error("gt_single_tableau_basis: rank excess in refinement");
      B = svd.matrixU().leftCols(dim);
    }
  }
  return cache.emplace(key, std::move(B)).first->second;
}

}  // namespace tetracone
