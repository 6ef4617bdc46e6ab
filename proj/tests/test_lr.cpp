// Littlewood–Richardson layer. Two independent algorithms (reverse-reading-word
// backtracking vs horizontal-strip chains) are cross-checked, pinned against the
// frozen degree-4 table, and validated through the tensor-product dimension count.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "frozen_values.hpp"
#include "tetracone/lr.hpp"

using namespace tetracone;

TEST_CASE("lr_coeff basics") {
  CHECK(lr_coeff({2}, {1, 1}, {3, 1}) == 1);
  CHECK(lr_coeff({2}, {1, 1}, {2, 2}) == 0);
  CHECK(lr_coeff({3, 1}, {2}, {3, 2, 1}) == 1);    // Pieri: horizontal 2-strip on rows 2,3
  CHECK(lr_coeff({3, 1}, {2}, {2, 2, 2}) == 0);    // gamma does not contain alpha
  CHECK(lr_coeff({2, 1}, {2, 1}, {3, 2, 1}) == 2);  // the classic multiplicity-2 case
  CHECK(lr_coeff({1}, {1}, {2}) == 1);
  CHECK(lr_coeff({1}, {1}, {1, 1}) == 1);
  CHECK(lr_coeff({2}, {2}, {3, 2}) == 0);  // size mismatch
  // tensoring with the empty shape
  for (const auto& g : enumerate_partitions(5, 5)) {
    CHECK(lr_coeff(g, {}, g) == 1);
    CHECK(lr_coeff({}, g, g) == 1);
    for (const auto& h : enumerate_partitions(5, 5))
      if (h != g) {
        CHECK(lr_coeff(h, {}, g) == 0);
        CHECK(lr_coeff({}, h, g) == 0);
      }
  }
}

TEST_CASE("lr_coeff symmetry in (alpha, beta)") {
  for (int ka = 0; ka <= 4; ++ka)
    for (int kb = 0; kb <= 4 - 0; ++kb)
      for (const auto& a : enumerate_partitions(ka, 3))
        for (const auto& b : enumerate_partitions(kb, 3))
          for (const auto& g : enumerate_partitions(ka + kb, 4))
            CHECK(lr_coeff(a, b, g) == lr_coeff(b, a, g));
}

TEST_CASE("frozen degree-4 table") {
  const auto& gammas = frozen::lr4_gammas();
  const auto& pairs = frozen::lr4_pairs();
  const auto& table = frozen::lr4_table();
  for (std::size_t r = 0; r < gammas.size(); ++r)
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      INFO("gamma=" << partition_to_string(gammas[r]) << " alpha=" << partition_to_string(pairs[c].first)
                    << " beta=" << partition_to_string(pairs[c].second));
      CHECK(lr_coeff(pairs[c].first, pairs[c].second, gammas[r]) == std::uint64_t(table[r][c]));
    }
}

TEST_CASE("strip-chain expansion agrees with the skew backtracking") {
  for (int ka = 0; ka <= 5; ++ka)
    for (int kb = 0; kb <= 8 - ka && kb <= 5; ++kb)
      for (const auto& a : enumerate_partitions(ka, 3))
        for (const auto& b : enumerate_partitions(kb, 3)) {
          auto expansion = lr_expand(a, b, 4);
          // every gamma in the expansion matches lr_coeff; every gamma not in it is zero
          for (const auto& g : enumerate_partitions(ka + kb, 4)) {
            std::uint64_t want = lr_coeff(a, b, g);
            std::uint64_t got = expansion.count(g) ? expansion.at(g) : 0;
            INFO("a=" << partition_to_string(a) << " b=" << partition_to_string(b)
                      << " g=" << partition_to_string(g));
            CHECK(got == want);
          }
        }
}

TEST_CASE("tensor-product dimension count") {
  for (int n = 1; n <= 4; ++n)
    for (int ka = 0; ka <= 4; ++ka)
      for (int kb = 0; kb <= 8 - ka && kb <= 4; ++kb)
        for (const auto& a : enumerate_partitions(ka, n))
          for (const auto& b : enumerate_partitions(kb, n)) {
            std::uint64_t lhs = 0;
            for (const auto& [g, c] : lr_expand(a, b, n)) lhs += c * weyl_dim(g, n);
            CHECK(lhs == weyl_dim(a, n) * weyl_dim(b, n));
          }
}

TEST_CASE("coupling feasibility: realized triples are feasible") {
  Spectrum a{1.0, 0.0}, b{1.0, 0.0};
  SECTION("aligned sum: c = (2,0)") {
    for (int k = 1; k <= 6; ++k) {
      auto res = coupling_feasible(a, b, {2.0, 0.0}, k);
      CHECK(res.feasible);
      REQUIRE(res.witness.has_value());
      // witness marginals: row sums phi_a phi_b, column sums phi_g(c)
      std::map<std::pair<Partition, Partition>, double> row;
      std::map<Partition, double> col;
      for (const auto& [key, v] : res.witness->entries) {
        CHECK(v >= -1e-12);
        row[{std::get<0>(key), std::get<1>(key)}] += v;
        col[std::get<2>(key)] += v;
      }
      for (const auto& [g, v] : col) CHECK(v == Catch::Approx(phi(g, {2.0, 0.0})).margin(1e-7));
      for (const auto& [ab, v] : row) CHECK(v <= phi(ab.first, a) * phi(ab.second, b) + 1e-7);
    }
  }
  SECTION("orthogonal sum: c = (1,1)") {
    for (int k = 1; k <= 6; ++k) CHECK(coupling_feasible(a, b, {1.0, 1.0}, k).feasible);
  }
  SECTION("trace mismatch rejected") {
    CHECK_THROWS_AS(coupling_feasible(a, b, {3.0, 0.0}, 2), std::invalid_argument);
  }
}

TEST_CASE("non-member triple: coupling infeasible and inequalities violated at frozen degrees") {
  Spectrum a{2.0, 0.0}, b{1.0, 0.0}, c{1.5, 1.5};
  // coupling: feasible strictly below the frozen degree, infeasible at it
  for (int k = 1; k < frozen::horn_first_infeasible_k; ++k) CHECK(coupling_feasible(a, b, c, k).feasible);
  CHECK_FALSE(coupling_feasible(a, b, c, frozen::horn_first_infeasible_k).feasible);
  // inequality families
  auto scan = horn_scan(a, b, c, 10);
  CHECK(scan.first_violation_k == frozen::horn_first_violation_k);
  // the first violating row: phi_(8)(a) = 2^8/8! exceeds the single-term
  // right-hand side phi_(8)(c) = 9*1.5^8/8!
  const auto& rep = scan.reports[frozen::horn_first_violation_k - 1];
  REQUIRE_FALSE(rep.pass);
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.family == 'r' && v.alpha == Partition{8} && v.beta_or_gamma.empty()) {
      found = true;
      CHECK(std::exp(v.lhs_log) == Catch::Approx(256.0 / 40320.0).epsilon(1e-9));
      CHECK(std::exp(v.rhs_log) == Catch::Approx(9.0 * std::pow(1.5, 8) / 40320.0).epsilon(1e-9));
    }
  CHECK(found);
  // once violated, the margin keeps deteriorating on this triple
  for (int k = frozen::horn_first_violation_k; k < 10; ++k)
    CHECK(scan.reports[k].min_slack < scan.reports[k - 1].min_slack);
}

TEST_CASE("member triple passes deep scans") {
  // c = eig(diag(1,0) + diag(0,1)) = (1,1): membership by construction
  auto scan = horn_scan({1.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, 50, 6);
  CHECK(scan.first_violation_k == -1);
  CHECK(scan.first_infeasible_k == -1);
  for (const auto& rep : scan.reports) CHECK(rep.min_slack >= -1e-9);
}

TEST_CASE("two-row fast path agrees with the generic path") {
  // padding with an explicit zero eigenvalue forces the generic implementation
  Spectrum a2{2.0, 0.5}, b2{1.25, 0.25}, c2{2.5, 1.5};
  Spectrum a3{2.0, 0.5, 0.0}, b3{1.25, 0.25, 0.0}, c3{2.5, 1.5, 0.0};
  for (int k = 1; k <= 8; ++k) {
    auto fast = horn_row_col_check(a2, b2, c2, k);
    auto slow = horn_row_col_check(a3, b3, c3, k);
    CHECK(fast.pass == slow.pass);
    CHECK(fast.min_slack == Catch::Approx(slow.min_slack).margin(1e-9));
  }
}

TEST_CASE("horn distance bound") {
  CHECK(horn_distance_bound(1, 1) == Catch::Approx(2.0 * std::sqrt(5.0) * std::sqrt(std::log(2.0))));
  CHECK(horn_distance_bound(7, 4) == Catch::Approx(2.0 * horn_distance_bound(7, 2)));
  for (int k = 8; k < 400; ++k) CHECK(horn_distance_bound(k + 1, 2) < horn_distance_bound(k, 2));
  CHECK(horn_distance_bound(100000, 2) < 0.1);
}
