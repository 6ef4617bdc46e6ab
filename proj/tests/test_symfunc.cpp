// Schur evaluation layer. Oracle: exhaustive semistandard-tableau summation,
// independent of the branching recursion under test.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include "tetracone/symfunc.hpp"

using namespace tetracone;

namespace {

// Sum of x^T over all semistandard tableaux of shape p with entries in 1..n:
// rows weakly increase, columns strictly increase.
double ssyt_schur(const Partition& p, const Spectrum& x) {
  int n = static_cast<int>(x.size());
  std::vector<std::vector<int>> t(depth(p));
  for (int i = 0; i < depth(p); ++i) t[i].assign(p[i], 0);
  double total = 0.0;
  auto rec = [&](auto&& self, int r, int c, double w) -> void {
    if (r == depth(p)) {
      total += w;
      return;
    }
    int nr = r, nc = c + 1;
    if (nc >= p[r]) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);      // row weakly increasing
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);  // column strictly increasing
    for (int v = lo; v <= n; ++v) {
      t[r][c] = v;
      self(self, nr, nc, w * x[v - 1]);
    }
  };
  if (depth(p) == 0) return 1.0;
  rec(rec, 0, 0, 1.0);
  return total;
}

Spectrum random_spectrum(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Spectrum x(n);
  for (auto& v : x) v = u(rng);
  std::sort(x.begin(), x.end(), std::greater<double>());
  return x;
}

}  // namespace

TEST_CASE("spectrum parse and serialize") {
  CHECK(spectrum_to_string({5.0, 0.0}) == "[5.0,0.0]");
  CHECK(parse_spectrum("[5.0,0.0]") == Spectrum{5.0, 0.0});
  CHECK(parse_spectrum("[2.5]") == Spectrum{2.5});
  CHECK(spectrum_to_string({1.25}) == "[1.25]");
  CHECK_THROWS_AS(parse_spectrum("[0.0,5.0]"), std::invalid_argument);  // ascending
  CHECK_THROWS_AS(parse_spectrum("1,2"), std::invalid_argument);
  // round trip through text at 12 significant digits
  Spectrum x{1.0 / 3.0, 1.0 / 7.0};
  auto y = parse_spectrum(spectrum_to_string(x));
  CHECK(y[0] == Catch::Approx(x[0]).epsilon(1e-11));
  CHECK(y[1] == Catch::Approx(x[1]).epsilon(1e-11));
}

TEST_CASE("schur basics") {
  CHECK(schur({1}, {0.3, 0.2, 0.1}) == Catch::Approx(0.6).epsilon(1e-12));
  CHECK(schur({3, 1}, {0.0, 0.0}) == 0.0);
  CHECK(schur({2}, {1.0, 1.0}) == Catch::Approx(3.0).epsilon(1e-12));
  CHECK(schur({}, {1.0, 1.0}) == 1.0);
  CHECK_THROWS_AS(schur({1, 1, 1}, {1.0, 1.0}), std::invalid_argument);  // depth > length
  CHECK_THROWS_AS(schur({2}, {1.0, -0.5}), std::invalid_argument);       // negative entry
}

TEST_CASE("schur equals SSYT summation for |p| <= 6, n <= 3") {
  std::mt19937 rng(20260819);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      Spectrum x = random_spectrum(rng, n);
      for (int k = 1; k <= 6; ++k)
        for (const auto& p : enumerate_partitions(k, n)) {
          double ref = ssyt_schur(p, x);
          double got = schur(p, x);
          if (ref == 0.0)
            CHECK(std::fabs(got) < 1e-14);
          else
            CHECK(got == Catch::Approx(ref).epsilon(1e-12));
        }
    }
  }
}

TEST_CASE("schur at the all-ones point equals weyl_dim") {
  for (int n = 1; n <= 4; ++n) {
    Spectrum ones(n, 1.0);
    for (int k = 0; k <= 8; ++k)
      for (const auto& p : enumerate_partitions(k, n))
        CHECK(schur(p, ones) == Catch::Approx(double(weyl_dim(p, n))).epsilon(1e-9));
  }
}

TEST_CASE("phi examples and normalization identity") {
  CHECK(phi({2}, {1.0, 1.0}) == Catch::Approx(1.5).epsilon(1e-12));
  CHECK(phi({1, 1}, {1.0, 1.0}) == Catch::Approx(0.5).epsilon(1e-12));
  std::mt19937 rng(7);
  for (int n = 1; n <= 5; ++n) {
    Spectrum x = random_spectrum(rng, n);
    double tr = trace(x);
    double logfact = 0.0;
    for (int k = 1; k <= 12; ++k) {
      logfact += std::log(double(k));
      double target = std::exp(k * std::log(tr) - logfact);
      double sum = 0.0;
      for (const auto& p : enumerate_partitions(k, n)) sum += phi(p, x);
      CHECK(sum == Catch::Approx(target).epsilon(1e-10));
    }
  }
}

TEST_CASE("log_schur and log_phi agree with linear evaluation") {
  std::mt19937 rng(11);
  for (int n = 2; n <= 4; ++n) {
    Spectrum x = random_spectrum(rng, n);
    for (int k = 1; k <= 8; ++k)
      for (const auto& p : enumerate_partitions(k, n)) {
        double lin = schur(p, x);
        if (lin > 0)
          CHECK(log_schur(p, x) == Catch::Approx(std::log(lin)).margin(1e-10));
        else
          CHECK(log_schur(p, x) == neg_inf());
        if (lin > 0) CHECK(log_phi(p, x) == Catch::Approx(std::log(phi(p, x))).margin(1e-10));
      }
  }
  // zero entries are handled in the log domain
  CHECK(log_schur({2, 1}, {1.0, 0.0}) == neg_inf());
  CHECK(std::exp(log_schur({3}, {2.0, 0.0})) == Catch::Approx(8.0).epsilon(1e-12));
  // large single-row shapes stay finite in the log domain
  double lp = log_phi({200}, {2.0, 1.0});
  CHECK(std::isfinite(lp));
}

TEST_CASE("multinomial weights") {
  // all mass on the first coordinate: only the single-row tuple survives
  CHECK(multinomial_weight({3}, {2.0, 0.0}) == Catch::Approx(1.0).epsilon(1e-12));
  CHECK(multinomial_weight({1, 1}, {1.0, 1.0}) == Catch::Approx(0.5).epsilon(1e-12));
  CHECK(multinomial_weight({2}, {1.0, 1.0}) == Catch::Approx(0.25).epsilon(1e-12));
  CHECK_THROWS_AS(multinomial_weight({1}, {0.0, 0.0}), std::invalid_argument);
  // multinomial theorem: summing over ordered tuples gives 1; partitions carry
  // multiplicity = number of distinct orderings
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= 6; ++k) {
      Spectrum x(n);
      for (auto& v : x) v = u(rng);
      std::sort(x.begin(), x.end(), std::greater<double>());
      // enumerate ordered tuples (l_1..l_n) with sum k
      double total = 0.0;
      std::vector<int> tup(n, 0);
      auto rec = [&](auto&& self, int idx, int rem) -> void {
        if (idx == n - 1) {
          tup[idx] = rem;
          // m_x over an ordered tuple = same formula without the partition sort
          double logm = 0.0;
          for (int i = 2; i <= k; ++i) logm += std::log(double(i));
          logm -= k * std::log(trace(x));
          for (int i = 0; i < n; ++i) {
            if (tup[i] == 0) continue;
            logm += tup[i] * std::log(x[i]);
            for (int j = 2; j <= tup[i]; ++j) logm -= std::log(double(j));
          }
          total += std::exp(logm);
          return;
        }
        for (int v = 0; v <= rem; ++v) {
          tup[idx] = v;
          self(self, idx + 1, rem - v);
        }
      };
      rec(rec, 0, k);
      CHECK(total == Catch::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("Schur-Weyl mass is bounded by dimension times multinomial weight") {
  std::mt19937 rng(17);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      Spectrum x = random_spectrum(rng, n);
      double tr = trace(x);
      for (int k = 1; k <= 8; ++k) {
        double logfact = 0.0;
        for (int i = 2; i <= k; ++i) logfact += std::log(double(i));
        for (const auto& p : enumerate_partitions(k, n)) {
          double sw = std::exp(logfact - k * std::log(tr)) * phi(p, x);
          CHECK(sw <= double(weyl_dim(p, n)) * multinomial_weight(p, x) + 1e-12);
        }
      }
    }
}

TEST_CASE("unnormalized entropy") {
  CHECK(unnormalized_entropy({1.0, 0.0}) == Catch::Approx(0.0).margin(1e-15));
  CHECK(unnormalized_entropy({2.0}) == Catch::Approx(-2.0 * std::log(2.0)).epsilon(1e-12));
  double ei = std::exp(-1.0);
  CHECK(unnormalized_entropy({ei, ei}) == Catch::Approx(2.0 / std::exp(1.0)).epsilon(1e-12));
  CHECK_THROWS_AS(unnormalized_entropy({1.0, -0.2}), std::invalid_argument);
}

TEST_CASE("tuple file parsing") {
  std::vector<std::string> lines = {"# comment",      "[2.0,0.0]", "[2.0,0.0]", "[3.0,1.0]",
                                    "[2.0,0.0]",      "[5.0,1.0]", "[3.0,1.0]"};
  auto t = parse_tuple_lines(lines);
  CHECK(t.a == Spectrum{2.0, 0.0});
  CHECK(t.e == Spectrum{5.0, 1.0});
  CHECK(traces_consistent(t));
  // trace conditions: c=a+b, f=b+d, e=c+d hold for the sample above
  auto r = trace_residuals(t);
  CHECK(std::fabs(r[0]) < 1e-12);
  CHECK(std::fabs(r[1]) < 1e-12);
  CHECK(std::fabs(r[2]) < 1e-12);
  lines.pop_back();
  CHECK_THROWS_AS(parse_tuple_lines(lines), std::invalid_argument);
}
