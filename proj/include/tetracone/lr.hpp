#pragma once
// lr.hpp — Littlewood–Richardson coefficients, tensor-product expansions, the
// coupling-table feasibility test (transportation polytope via max-flow), and the
// row/column character inequality families for sum-of-two membership.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "tetracone/core.hpp"
#include "tetracone/partition.hpp"
#include "tetracone/spectrum.hpp"
#include "tetracone/symfunc.hpp"

namespace tetracone {

// ---------------------------------------------------------------------------
// LR coefficient: number of column-strict fillings of the skew shape g/a with
// content b whose reverse reading word (rows top to bottom, each right to left)
// is a ballot word. Direct backtracking in reverse reading order; the ballot
// prefix condition prunes as cells are placed.
// ---------------------------------------------------------------------------
inline std::uint64_t lr_coeff(const Partition& a, const Partition& b, const Partition& g) {
  check_partition(a);
  check_partition(b);
  check_partition(g);
  if (partition_size(a) + partition_size(b) != partition_size(g)) return 0;
  if (depth(a) > depth(g)) return 0;
  for (int i = 0; i < depth(a); ++i)
    if (a[i] > g[i]) return 0;  // a must fit inside g
  if (b.empty()) return 1;  // g == a at this point (sizes match, a ⊆ g)

  static std::map<std::tuple<Partition, Partition, Partition>, std::uint64_t> cache;
  static std::mutex cache_mu;
  {
    std::lock_guard<std::mutex> lk(cache_mu);
    auto it = cache.find(std::make_tuple(a, b, g));
    if (it != cache.end()) return it->second;
  }

  int rows = depth(g);
  int letters = depth(b);
  std::vector<int> arow(rows, 0);
  for (int i = 0; i < depth(a); ++i) arow[i] = a[i];
  // cells in reverse reading order
  struct Cell {
    int r, c;
  };
  std::vector<Cell> cells;
  for (int r = 0; r < rows; ++r)
    for (int c = g[r] - 1; c >= arow[r]; --c) cells.push_back({r, c});

  std::vector<std::vector<int>> fill(rows);
  for (int r = 0; r < rows; ++r) fill[r].assign(g[r], 0);  // 0 = empty / inside a
  std::vector<int> cnt(letters + 2, 0);
  std::vector<int> remaining(letters + 1, 0);
  for (int i = 0; i < letters; ++i) remaining[i + 1] = b[i];

  std::uint64_t total = 0;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      ++total;
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 1, hi = letters;
    if (c + 1 < g[r]) hi = std::min(hi, fill[r][c + 1]);  // row weakly increasing
    // column strictness binds only when the cell above lies in the skew part
    if (r > 0 && c >= arow[r - 1]) lo = std::max(lo, fill[r - 1][c] + 1);
    for (int v = lo; v <= hi; ++v) {
      if (remaining[v] == 0) continue;
      if (v > 1 && cnt[v] + 1 > cnt[v - 1]) continue;  // ballot prefix
      cnt[v]++;
      remaining[v]--;
      fill[r][c] = v;
      self(self, idx + 1);
      fill[r][c] = 0;
      remaining[v]++;
      cnt[v]--;
    }
  };
  rec(rec, 0);

  std::lock_guard<std::mutex> lk(cache_mu);
  cache[std::make_tuple(a, b, g)] = total;
  return total;
}

// ---------------------------------------------------------------------------
// Full expansion s_a * s_b = sum_g c^g_{ab} s_g over partitions with at most
// max_rows rows, via chains of horizontal strips with a final ballot check.
// Independent of lr_coeff's algorithm; the two are cross-checked in tests.
// ---------------------------------------------------------------------------
inline std::map<Partition, std::uint64_t> lr_expand(const Partition& a, const Partition& b, int max_rows) {
  check_partition(a);
  check_partition(b);
  if (depth(a) > max_rows) return {};
  std::map<Partition, std::uint64_t> out;
  int letters = depth(b);
  if (letters == 0) {
    out[a] = 1;
    return out;
  }

  // chain[i] = shape after placing letters 1..i; strips[i] = boxes of letter i+1
  std::vector<Partition> chain(letters + 1);
  chain[0] = a;
  std::vector<std::vector<std::pair<int, int>>> strips(letters);

  auto ballot_ok = [&](const Partition& g) -> bool {
    // rebuild the filling row-wise: letter of box (r,c) from the strip lists
    int rows = depth(g);
    std::vector<std::vector<int>> fill(rows);
    for (int r = 0; r < rows; ++r) fill[r].assign(g[r], 0);
    for (int i = 0; i < letters; ++i)
      for (auto [r, c] : strips[i]) fill[r][c] = i + 1;
    std::vector<int> cnt(letters + 2, 0);
    for (int r = 0; r < rows; ++r)
      for (int c = g[r] - 1; c >= 0; --c) {
        int v = fill[r][c];
        if (v == 0) continue;  // box of `a`
        if (v > 1 && cnt[v] + 1 > cnt[v - 1]) return false;
        cnt[v]++;
      }
    return true;
  };

  // enumerate horizontal strips of size `need` added to shape `mu`
  auto rec = [&](auto&& self, int letter) -> void {
    if (letter == letters) {
      if (ballot_ok(chain[letters])) out[chain[letters]]++;
      return;
    }
    const Partition& mu = chain[letter];
    int need = b[letter];
    int rows = std::min(depth(mu) + 1, max_rows);
    // choose boxes added per row: add[r] boxes to row r; horizontal strip means
    // new_mu[r] <= mu[r-1]  (no two new boxes in one column)
    std::vector<int> add(rows, 0);
    auto strip = [&](auto&& sself, int r, int rem) -> void {
      if (rem == 0) {
        // fill the remaining rows with 0 and commit
        Partition nu(rows, 0);
        for (int i = 0; i < rows; ++i) nu[i] = (i < depth(mu) ? mu[i] : 0) + add[i];
        while (!nu.empty() && nu.back() == 0) nu.pop_back();
        if (!is_partition(nu)) return;
        auto& boxes = strips[letter];
        std::size_t before = boxes.size();
        for (int i = 0; i < rows; ++i) {
          int base = (i < depth(mu) ? mu[i] : 0);
          for (int j = 0; j < add[i]; ++j) boxes.push_back({i, base + j});
        }
        chain[letter + 1] = nu;
        self(self, letter + 1);
        boxes.resize(before);
        return;
      }
      if (r == rows) return;
      int base = (r < depth(mu) ? mu[r] : 0);
      int cap;
      if (r == 0)
        cap = rem;  // first row unbounded (up to rem)
      else {
        int above = (r - 1 < depth(mu) ? mu[r - 1] : 0);
        cap = std::min(rem, above - base);  // horizontal strip condition
      }
      for (int t = cap; t >= 0; --t) {
        add[r] = t;
        sself(sself, r + 1, rem - t);
        add[r] = 0;
      }
    };
    strip(strip, 0, need);
  };
  rec(rec, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Transportation feasibility (coupling tables) via Dinic max-flow with double
// capacities.
// ---------------------------------------------------------------------------

struct CouplingTable {
  int k = 0;
  std::map<std::tuple<Partition, Partition, Partition>, double> entries;  // (alpha,beta,gamma) -> mass
};

namespace detail {

class Dinic {
 public:
  explicit Dinic(int n) : adj_(n) {}
  void add_edge(int u, int v, double cap) {
    adj_[u].push_back(edges_.size());
    edges_.push_back({v, cap, 0.0});
    adj_[v].push_back(edges_.size());
    edges_.push_back({u, 0.0, 0.0});
  }
  double max_flow(int s, int t) {
    double flow = 0.0;
    const double eps = 1e-13;
    while (bfs(s, t, eps)) {
      iter_.assign(adj_.size(), 0);
      double f;
      while ((f = dfs(s, t, pos_inf(), eps)) > eps) flow += f;
    }
    return flow;
  }
  double edge_flow(std::size_t idx) const { return edges_[idx].flow; }

 private:
  struct Edge {
    int to;
    double cap;
    double flow;
  };
  bool bfs(int s, int t, double eps) {
    level_.assign(adj_.size(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (std::size_t id : adj_[u]) {
        const Edge& e = edges_[id];
        if (level_[e.to] < 0 && e.cap - e.flow > eps) {
          level_[e.to] = level_[u] + 1;
          q.push(e.to);
        }
      }
    }
    return level_[t] >= 0;
  }
  double dfs(int u, int t, double pushed, double eps) {
    if (u == t) return pushed;
    for (std::size_t& i = iter_[u]; i < adj_[u].size(); ++i) {
      std::size_t id = adj_[u][i];
      Edge& e = edges_[id];
      if (level_[e.to] != level_[u] + 1 || e.cap - e.flow <= eps) continue;
      double f = dfs(e.to, t, std::min(pushed, e.cap - e.flow), eps);
      if (f > eps) {
        e.flow += f;
        edges_[id ^ 1].flow -= f;
        return f;
      }
    }
    return 0.0;
  }
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Edge> edges_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

inline void check_sum_triple(const Spectrum& a, const Spectrum& b, const Spectrum& c) {
  check_nonnegative(a);
  check_nonnegative(b);
  check_nonnegative(c);
  double scale = std::max(1.0, std::fabs(trace(c)));
  if (std::fabs(trace(c) - trace(a) - trace(b)) > 1e-9 * scale)
    throw std::invalid_argument("trace condition Tr c = Tr a + Tr b violated");
}

}  // namespace detail

struct CouplingResult {
  bool feasible = false;
  double demand = 0.0;  // sum of phi_g(c)
  double flow = 0.0;
  std::optional<CouplingTable> witness;
};

// Existence of Gamma >= 0 supported on {c^g_{ab} > 0} with row sums
// phi_a(a)phi_b(b) and column sums phi_g(c), all degrees summing to k.
inline CouplingResult coupling_feasible(const Spectrum& a, const Spectrum& b, const Spectrum& c, int k) {
  if (k <= 0) throw std::invalid_argument("coupling_feasible: k must be positive");
  detail::check_sum_triple(a, b, c);
  int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size()), nc = static_cast<int>(c.size());

  std::vector<std::pair<Partition, Partition>> pairs;
  std::vector<double> supply;
  for (int j = 0; j <= k; ++j)
    for (const auto& pa : enumerate_partitions(j, na))
      for (const auto& pb : enumerate_partitions(k - j, nb)) {
        double s = phi(pa, a) * phi(pb, b);
        pairs.push_back({pa, pb});
        supply.push_back(s);
      }
  std::vector<Partition> gammas = enumerate_partitions(k, nc);
  std::vector<double> demand(gammas.size());
  double total_demand = 0.0;
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    demand[i] = phi(gammas[i], c);
    total_demand += demand[i];
  }

  int P = static_cast<int>(pairs.size()), G = static_cast<int>(gammas.size());
  int src = P + G, snk = P + G + 1;
  detail::Dinic net(P + G + 2);
  // remember arc ids for the witness
  std::vector<std::tuple<int, int, std::size_t>> arcs;  // (pair idx, gamma idx, edge id)
  std::size_t edge_counter = 0;
  auto add = [&](int u, int v, double cap) {
    net.add_edge(u, v, cap);
    std::size_t id = edge_counter;
    edge_counter += 2;
    return id;
  };
  for (int p = 0; p < P; ++p) add(src, p, supply[p]);
  for (int g = 0; g < G; ++g) add(P + g, snk, demand[g]);
  for (int p = 0; p < P; ++p)
    for (int g = 0; g < G; ++g)
      if (lr_coeff(pairs[p].first, pairs[p].second, gammas[g]) > 0)
        arcs.push_back({p, g, add(p, P + g, pos_inf())});

  CouplingResult res;
  res.demand = total_demand;
  res.flow = net.max_flow(src, snk);
  res.feasible = res.flow >= total_demand * (1.0 - 1e-9);
  if (res.feasible) {
    CouplingTable tab;
    tab.k = k;
    for (auto [p, g, id] : arcs) {
      double f = net.edge_flow(id);
      if (f > 0) tab.entries[std::make_tuple(pairs[p].first, pairs[p].second, gammas[g])] = f;
    }
    res.witness = std::move(tab);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Row/column inequality families at degree k. All values are handled in the log
// domain so deep scans (k into the hundreds) neither overflow nor underflow;
// reported lhs/rhs/slack are natural logarithms.
// ---------------------------------------------------------------------------

struct HornRow {
  int k = 0;
  char family = 'r';  // 'r': phi_a phi_b <= sum_g phi_g ; 'c': phi_g <= sum phi_a phi_b
  Partition alpha, beta_or_gamma;
  double lhs_log = 0.0, rhs_log = 0.0, slack_log = 0.0;
};

struct HornReport {
  int k = 0;
  double min_slack = pos_inf();  // log-domain slack; +inf when vacuous
  bool pass = true;
  std::vector<HornRow> violations;
  std::optional<HornRow> worst;
};

namespace detail {

// U(2) tensor products are multiplicity free with interval support: for two-row
// shapes, c^g_{ab} = 1 exactly when g1 + g2 = |a| + |b| and
// max(a1+b2, a2+b1) <= g1 <= a1 + b1. Used as the deep-scan fast path.
inline bool all_two_rows(const Spectrum& a, const Spectrum& b, const Spectrum& c) {
  return a.size() == 2 && b.size() == 2 && c.size() == 2;
}

inline HornReport horn_check_n2(const Spectrum& a, const Spectrum& b, const Spectrum& c, int k) {
  HornReport rep;
  rep.k = k;
  auto consider = [&](HornRow&& row) {
    row.slack_log = row.rhs_log - row.lhs_log;
    if (!rep.worst || row.slack_log < rep.worst->slack_log) rep.worst = row;
    if (row.slack_log < rep.min_slack) rep.min_slack = row.slack_log;
    if (row.slack_log < -1e-9) {
      rep.pass = false;
      rep.violations.push_back(row);
    }
  };

  // gamma list indexed by g1 = ceil(k/2)..k ; log phi values and shifted prefix sums
  int g1_lo = (k + 1) / 2;
  std::vector<double> lg(k - g1_lo + 1);
  double mx = neg_inf();
  for (int g1 = g1_lo; g1 <= k; ++g1) {
    Partition g = (g1 == k) ? Partition{k} : Partition{g1, k - g1};
    lg[g1 - g1_lo] = log_phi(g, c);
    mx = std::max(mx, lg[g1 - g1_lo]);
  }
  if (!std::isfinite(mx)) mx = 0.0;
  std::vector<double> pref(lg.size() + 1, 0.0);  // prefix sums of exp(lg - mx)
  for (std::size_t i = 0; i < lg.size(); ++i)
    pref[i + 1] = pref[i] + (std::isfinite(lg[i]) ? std::exp(lg[i] - mx) : 0.0);
  // column-family accumulators: sum over pairs covering each g1
  std::vector<double> col_acc(lg.size() + 1, 0.0);  // difference array, shifted by `mx2`
  struct PairRec {
    Partition alpha, beta;
    double lab;  // log(phi_a phi_b)
    int lo, hi;  // g1 interval
  };
  std::vector<PairRec> recs;
  double mx2 = neg_inf();

  for (int j = 0; j <= k; ++j)
    for (const auto& pa : enumerate_partitions(j, 2))
      for (const auto& pb : enumerate_partitions(k - j, 2)) {
        double lab = log_phi(pa, a) + log_phi(pb, b);
        int a1 = pa.empty() ? 0 : pa[0], a2 = depth(pa) > 1 ? pa[1] : 0;
        int b1 = pb.empty() ? 0 : pb[0], b2 = depth(pb) > 1 ? pb[1] : 0;
        int lo = std::max({a1 + b2, a2 + b1, g1_lo});
        int hi = a1 + b1;
        if (lo > hi) continue;  // empty support (cannot happen for valid shapes)
        // row family: lhs = phi_a phi_b, rhs = sum_{g1 in [lo,hi]} phi_g
        double rhs = pref[hi - g1_lo + 1] - pref[lo - g1_lo];
        HornRow row;
        row.k = k;
        row.family = 'r';
        row.alpha = pa;
        row.beta_or_gamma = pb;
        row.lhs_log = lab;
        row.rhs_log = (rhs > 0.0) ? mx + std::log(rhs) : neg_inf();
        consider(std::move(row));
        recs.push_back({pa, pb, lab, lo, hi});
        if (std::isfinite(lab)) mx2 = std::max(mx2, lab);
      }
  if (!std::isfinite(mx2)) mx2 = 0.0;
  for (const auto& r : recs) {
    if (!std::isfinite(r.lab)) continue;
    double w = std::exp(r.lab - mx2);
    col_acc[r.lo - g1_lo] += w;
    col_acc[r.hi - g1_lo + 1] -= w;
  }
  double run = 0.0;
  for (int g1 = g1_lo; g1 <= k; ++g1) {
    run += col_acc[g1 - g1_lo];
    Partition g = (g1 == k) ? Partition{k} : Partition{g1, k - g1};
    HornRow row;
    row.k = k;
    row.family = 'c';
    row.alpha = g;  // for the column family, `alpha` carries gamma
    row.beta_or_gamma = g;
    row.lhs_log = lg[g1 - g1_lo];
    row.rhs_log = (run > 0.0) ? mx2 + std::log(run) : neg_inf();
    consider(std::move(row));
  }
  return rep;
}

}  // namespace detail

inline HornReport horn_row_col_check(const Spectrum& a, const Spectrum& b, const Spectrum& c, int k) {
  if (k <= 0) throw std::invalid_argument("horn_row_col_check: k must be positive");
  detail::check_sum_triple(a, b, c);
  if (detail::all_two_rows(a, b, c)) return detail::horn_check_n2(a, b, c, k);

  HornReport rep;
  rep.k = k;
  auto consider = [&](HornRow&& row) {
    row.slack_log = row.rhs_log - row.lhs_log;
    if (!rep.worst || row.slack_log < rep.worst->slack_log) rep.worst = row;
    if (row.slack_log < rep.min_slack) rep.min_slack = row.slack_log;
    if (row.slack_log < -1e-9) {
      rep.pass = false;
      rep.violations.push_back(row);
    }
  };
  int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size()), nc = static_cast<int>(c.size());
  std::map<Partition, double> lphi_c;
  for (const auto& g : enumerate_partitions(k, nc)) lphi_c[g] = log_phi(g, c);
  // column accumulators in shifted linear domain
  double shift = neg_inf();
  std::vector<std::tuple<Partition, Partition, double, std::vector<Partition>>> pair_data;
  for (int j = 0; j <= k; ++j)
    for (const auto& pa : enumerate_partitions(j, na))
      for (const auto& pb : enumerate_partitions(k - j, nb)) {
        double lab = log_phi(pa, a) + log_phi(pb, b);
        auto expansion = lr_expand(pa, pb, nc);
        std::vector<Partition> support;
        std::vector<double> terms;
        for (auto& [g, cc] : expansion) {
          support.push_back(g);
          auto it = lphi_c.find(g);
          if (it != lphi_c.end() && std::isfinite(it->second)) terms.push_back(it->second);
        }
        HornRow row;
        row.k = k;
        row.family = 'r';
        row.alpha = pa;
        row.beta_or_gamma = pb;
        row.lhs_log = lab;
        row.rhs_log = logsumexp(terms);
        consider(std::move(row));
        if (std::isfinite(lab)) shift = std::max(shift, lab);
        pair_data.emplace_back(pa, pb, lab, std::move(support));
      }
  if (!std::isfinite(shift)) shift = 0.0;
  std::map<Partition, double> col_sum;
  for (auto& [pa, pb, lab, support] : pair_data) {
    if (!std::isfinite(lab)) continue;
    for (const auto& g : support) col_sum[g] += std::exp(lab - shift);
  }
  for (const auto& g : enumerate_partitions(k, nc)) {
    HornRow row;
    row.k = k;
    row.family = 'c';
    row.alpha = g;
    row.beta_or_gamma = g;
    row.lhs_log = lphi_c[g];
    double s = col_sum.count(g) ? col_sum[g] : 0.0;
    row.rhs_log = (s > 0.0) ? shift + std::log(s) : neg_inf();
    consider(std::move(row));
  }
  return rep;
}

inline double horn_distance_bound(int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("horn_distance_bound: k, n must be positive");
  return 2.0 * std::sqrt(5.0) * n * std::sqrt(std::log(k + 1.0) / k);
}

inline int default_horn_scan_depth(int n) { return n <= 2 ? 200 : 40; }

struct HornScanResult {
  int k_max = 0;
  int first_violation_k = -1;          // -1: none found
  int first_infeasible_k = -1;         // -1: none found within coupling_k_max
  int coupling_k_max = 0;              // degrees where feasibility was attempted
  std::vector<HornReport> reports;     // one per k
};

// Scan k = 1..k_max through the inequality families; coupling feasibility is
// attempted for k <= coupling_k_max (it enumerates pairs times gammas and is the
// expensive part).
inline HornScanResult horn_scan(const Spectrum& a, const Spectrum& b, const Spectrum& c, int k_max,
                                int coupling_k_max = 0) {
  HornScanResult out;
  out.k_max = k_max;
  out.coupling_k_max = coupling_k_max;
  for (int k = 1; k <= k_max; ++k) {
    out.reports.push_back(horn_row_col_check(a, b, c, k));
    if (!out.reports.back().pass && out.first_violation_k < 0) out.first_violation_k = k;
    if (k <= coupling_k_max && out.first_infeasible_k < 0) {
      if (!coupling_feasible(a, b, c, k).feasible) out.first_infeasible_k = k;
    }
  }
  return out;
}

}  // namespace tetracone
