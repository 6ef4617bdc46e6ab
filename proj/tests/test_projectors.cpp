#include <catch_amalgamated.hpp>

#include <algorithm>
#include <complex>
#include <vector>

#include "tetracone/partition.hpp"
#include "tetracone/schurweyl.hpp"
#include "tetracone/tensor.hpp"

using namespace tetracone;

namespace {

// Independent oracle: the central character-sum projector
//   Π^λ = (dimW_λ/k!) Σ_{σ∈S_k} χ_λ(σ) ρ(σ)
// built by explicit enumeration of all k! slot permutations (full range only).
Eigen::MatrixXcd char_sum_projector(const Partition& lam, int n, int k) {
  const std::int64_t N = tensor_dim(n, k);
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(N, N);
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  double kfact = 1.0;
  for (int i = 2; i <= k; ++i) kfact *= i;
  const double dw = static_cast<double>(dim_sym_irrep(lam));
  std::vector<std::int64_t> stride(k);
  for (int s = 0; s < k; ++s) stride[s] = detail::slot_stride(n, k, s);

  do {
    // cycle type of perm
    std::vector<bool> seen(k, false);
    Partition cyc;
    for (int s = 0; s < k; ++s) {
      if (seen[s]) continue;
      int len = 0, cur = s;
      while (!seen[cur]) {
        seen[cur] = true;
        cur = perm[cur];
        ++len;
      }
      cyc.push_back(len);
    }
    std::sort(cyc.begin(), cyc.end(), std::greater<int>());
    const double coeff = dw * static_cast<double>(sym_character(lam, cyc)) / kfact;
    if (coeff == 0.0) continue;
    for (std::int64_t i = 0; i < N; ++i) {
      std::int64_t j = 0, rest = i;
      for (int s = 0; s < k; ++s) {
        const std::int64_t digit = rest / stride[s];
        rest %= stride[s];
        j += digit * stride[perm[s]];
      }
      P(j, i) += coeff;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return P;
}

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("tensor dimensions and slot strides") {
  CHECK(tensor_dim(2, 0) == 1);
  CHECK(tensor_dim(2, 12) == 4096);
  CHECK(tensor_dim(3, 6) == 729);
  CHECK_THROWS_AS(tensor_dim(2, 80), std::overflow_error);
  CHECK(detail::slot_stride(2, 3, 0) == 4);
  CHECK(detail::slot_stride(2, 3, 2) == 1);
}

TEST_CASE("slot transpositions act as the explicit swap operator") {
  // ρ((0 1)) on (ℂ²)^⊗2 in the basis |00>,|01>,|10>,|11>.
  CMat in = CMat::Identity(4, 4);
  CMat out = CMat::Zero(4, 4);
  detail::add_transposed_rows(in, out, 2, 2, 0, 1);
  Eigen::MatrixXcd swap = Eigen::MatrixXcd::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
  CHECK((Eigen::MatrixXcd(out) - swap).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("apply_slot_matrix implements I ⊗ X ⊗ I") {
  Eigen::MatrixXcd X(2, 2);
  X << Complex(1, 0), Complex(0, 2), Complex(0, -2), Complex(3, 0);
  const CMat I8 = CMat::Identity(8, 8);
  const CMat applied = apply_slot_matrix(I8, X, 2, 3, 1);
  CMat expect = kron(kron(CMat::Identity(2, 2), CMat(X)), CMat::Identity(2, 2));
  CHECK((applied - expect).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("single-tableau bases are orthonormal with the unitary-group dimension") {
  struct Case {
    Partition lam;
    int n;
  };
  const std::vector<Case> cases = {{{}, 2},    {{1}, 2},    {{2}, 2},    {{1, 1}, 2},
                                   {{3, 1}, 2}, {{2, 2}, 2}, {{2, 1}, 3}, {{3, 2, 1}, 3},
                                   {{4}, 3},    {{2, 2, 1}, 3}};
  for (const auto& c : cases) {
    const CMat& B = gt_single_tableau_basis(c.lam, c.n);
    const std::int64_t dv = static_cast<std::int64_t>(weyl_dim(c.lam, c.n));
    CHECK(B.rows() == tensor_dim(c.n, partition_size(c.lam)));
    CHECK(B.cols() == dv);
    CHECK((B.adjoint() * B - CMat::Identity(dv, dv)).cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK_THROWS_AS(gt_single_tableau_basis({2, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("single-tableau bases live inside their isotypic component") {
  // Π^λ B = B: the basis columns are path-refined, so every level-m projector of
  // the refinement chain fixes them.
  for (int n = 2; n <= 3; ++n) {
    for (const Partition& lam :
         std::vector<Partition>{{3}, {2, 1}, {3, 1}, {2, 2}, {2, 1, 1}}) {
      if (depth(lam) > n) continue;
      const int k = partition_size(lam);
      const CMat& B = gt_single_tableau_basis(lam, n);
      const auto P = isotypic_projector(lam, 0, n, k);
      CHECK((Eigen::MatrixXcd(P.op) * Eigen::MatrixXcd(B) - Eigen::MatrixXcd(B))
                .cwiseAbs()
                .maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("isotypic projectors are idempotent, self-adjoint, and of the predicted rank") {
  for (int n = 2; n <= 3; ++n) {
    for (int k = 1; k <= 5; ++k) {
      for (const Partition& lam : enumerate_partitions(k, n)) {
        const auto P = isotypic_projector(lam, 0, n, k);
        const Eigen::MatrixXcd& op = P.op;
        CHECK((op * op - op).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((op - op.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
        const double rank = op.trace().real();
        CHECK(rank == Catch::Approx(static_cast<double>(isotypic_rank(lam, n, k))).margin(1e-7));
      }
    }
  }
}

TEST_CASE("symmetric and antisymmetric ranks") {
  // λ=(k): the symmetric subspace, rank C(n+k-1, k).
  for (int n = 2; n <= 3; ++n) {
    for (int k = 2; k <= 5; ++k) {
      const auto P = isotypic_projector(Partition{k}, 0, n, k);
      CHECK(P.op.trace().real() == Catch::Approx(binom(n + k - 1, k)).margin(1e-8));
    }
  }
  const auto A = isotypic_projector({1, 1}, 0, 2, 2);
  CHECK(A.op.trace().real() == Catch::Approx(1.0).margin(1e-10));
}

TEST_CASE("the isotypic projectors of a full range resolve the identity") {
  struct Case {
    int n, k;
  };
  for (const Case& c : std::vector<Case>{{2, 4}, {2, 6}, {3, 4}, {3, 5}}) {
    const std::int64_t N = tensor_dim(c.n, c.k);
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(N, N);
    for (const Partition& lam : enumerate_partitions(c.k, c.n)) {
      sum += isotypic_projector(lam, 0, c.n, c.k).op;
    }
    CHECK((sum - Eigen::MatrixXcd::Identity(N, N)).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("refinement projectors match the character-sum oracle") {
  for (int n = 2; n <= 3; ++n) {
    for (int k = 2; k <= (n == 2 ? 6 : 5); ++k) {
      for (const Partition& lam : enumerate_partitions(k, n)) {
        const auto P = isotypic_projector(lam, 0, n, k);
        const Eigen::MatrixXcd oracle = char_sum_projector(lam, n, k);
        CHECK((P.op - oracle).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
  }
}

TEST_CASE("projectors on an inner slot range embed as identity ⊗ projector") {
  const auto small = isotypic_projector({2, 1}, 0, 2, 3);
  const auto embedded = isotypic_projector({2, 1}, 1, 2, 4);
  const CMat expect = kron(CMat::Identity(2, 2), CMat(small.op));
  CHECK((CMat(embedded.op) - expect).cwiseAbs().maxCoeff() < 1e-12);

  const auto front = isotypic_projector({2}, 0, 2, 3);
  const auto small2 = isotypic_projector({2}, 0, 2, 2);
  const CMat expect2 = kron(CMat(small2.op), CMat::Identity(2, 2));
  CHECK((CMat(front.op) - expect2).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("range and dimension guards") {
  CHECK_THROWS_AS(isotypic_projector({2, 1}, 2, 2, 4), std::invalid_argument);  // range past end
  CHECK_THROWS_AS(isotypic_projector({1, 1, 1}, 0, 2, 3), std::invalid_argument);  // depth > n
  CHECK_THROWS_AS(isotypic_projector({2}, 0, 2, 20), std::overflow_error);  // above cap
  CHECK_NOTHROW(isotypic_projector({2}, 0, 2, 10, 1 << 11));
  CHECK_THROWS_AS(isotypic_projector({2}, 0, 2, 12, 1 << 11), std::overflow_error);
}

TEST_CASE("full-range projectors commute with factor projectors") {
  // ‖[Π^ε, Π^α ⊗ Π^β ⊗ Π^δ]‖ small: the full class sum is central.
  struct Case {
    int n;
    Partition alpha, beta, delta, eps;
  };
  const std::vector<Case> cases = {
      {2, {1}, {1}, {1}, {2, 1}},
      {2, {2}, {1}, {1}, {3, 1}},
      {2, {2, 1}, {1}, {2}, {4, 2}},
      {3, {1}, {1}, {1}, {1, 1, 1}},
      {3, {2}, {1, 1}, {1}, {2, 2, 1}},
  };
  for (const auto& c : cases) {
    const int a = partition_size(c.alpha), b = partition_size(c.beta);
    const int k = partition_size(c.eps);
    REQUIRE(a + b + partition_size(c.delta) == k);
    const Eigen::MatrixXcd Pe = isotypic_projector(c.eps, 0, c.n, k).op;
    const Eigen::MatrixXcd P0 = isotypic_projector(c.alpha, 0, c.n, k).op *
                                isotypic_projector(c.beta, a, c.n, k).op *
                                isotypic_projector(c.delta, a + b, c.n, k).op;
    CHECK((Pe * P0 - P0 * Pe).norm() < 1e-10);
    // P0 itself is a projector (commuting factors on disjoint ranges).
    CHECK((P0 * P0 - P0).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((P0 - P0.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  }
}
