#pragma once
// partition.hpp — integer partitions: hooks, symmetric-group irrep dimensions and
// Murnaghan–Nakayama characters, unitary-group (Weyl) dimensions, interlacing
// predecessors, enumeration, parsing.
//
// A Partition is a weakly decreasing vector of positive ints; the empty vector is
// the unique partition of 0.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tetracone/core.hpp"

namespace tetracone {

using Partition = std::vector<int>;

inline bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

inline void check_partition(const Partition& p) {
  if (!is_partition(p)) throw std::invalid_argument("not a partition (need weakly decreasing positive parts)");
}

inline int partition_size(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

inline int depth(const Partition& p) { return static_cast<int>(p.size()); }

// Containment of Young diagrams: small ⊆ big row by row.
inline bool partition_contains(const Partition& big, const Partition& small) {
  if (small.size() > big.size()) return false;
  for (std::size_t i = 0; i < small.size(); ++i) {
    if (small[i] > big[i]) return false;
  }
  return true;
}

// Serialization: "[3,1]", empty partition "[]".
inline std::string partition_to_string(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  s += ']';
  return s;
}

inline Partition parse_partition(const std::string& s) {
  std::size_t a = s.find('[');
  std::size_t b = s.rfind(']');
  if (a == std::string::npos || b == std::string::npos || b < a)
    throw std::invalid_argument("partition syntax: expected [p1,p2,...]");
  Partition p;
  std::string body = s.substr(a + 1, b - a - 1);
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    // tolerate surrounding whitespace
    std::size_t l = tok.find_first_not_of(" \t");
    if (l == std::string::npos) continue;
    std::size_t r = tok.find_last_not_of(" \t");
    p.push_back(std::stoi(tok.substr(l, r - l + 1)));
  }
  check_partition(p);
  return p;
}

// Conjugate (transpose) partition.
namespace detail {
inline unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace detail

inline Partition conjugate(const Partition& p) {
  check_partition(p);
  Partition q;
  if (p.empty()) return q;
  q.resize(p[0], 0);
  for (int part : p)
    for (int j = 0; j < part; ++j) q[j]++;
  return q;
}

// Hook length of cell (i,j), 0-indexed: arm + leg + 1.
inline int hook_length(const Partition& p, const Partition& pc, int i, int j) {
  return (p[i] - j) + (pc[j] - i) - 1;
}

// Product of all hook lengths, exact. Throws std::overflow_error if it exceeds u64
// (cannot happen for |p| <= 20 since the product divides |p|!).
inline std::uint64_t hook_product(const Partition& p) {
  check_partition(p);
  Partition pc = conjugate(p);
  std::uint64_t h = 1;
  for (int i = 0; i < depth(p); ++i)
    for (int j = 0; j < p[i]; ++j) h = checked_mul_u64(h, static_cast<std::uint64_t>(hook_length(p, pc, i, j)));
  return h;
}

inline double log_hook_product(const Partition& p) {
  check_partition(p);
  Partition pc = conjugate(p);
  double s = 0.0;
  for (int i = 0; i < depth(p); ++i)
    for (int j = 0; j < p[i]; ++j) s += std::log(static_cast<double>(hook_length(p, pc, i, j)));
  return s;
}

// dim of the symmetric-group irrep labelled by p: |p|! / hook_product(p), exact.
// Uses 128-bit intermediates; |p| <= 33 keeps |p|! below 2^127.
inline std::uint64_t dim_sym_irrep(const Partition& p) {
  check_partition(p);
  int k = partition_size(p);
  if (k > 33) throw std::overflow_error("dim_sym_irrep: |p| too large for exact integer path");
  unsigned __int128 fact = 1;
  for (int i = 2; i <= k; ++i) fact *= static_cast<unsigned>(i);
  unsigned __int128 h = hook_product(p);
  unsigned __int128 d = fact / h;
  if (fact % h != 0) throw std::logic_error("hook product does not divide |p|!");
  if (d > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("dim_sym_irrep overflow");
  return static_cast<std::uint64_t>(d);
}

inline double log_dim_sym_irrep(const Partition& p) {
  double lf = 0.0;
  for (int i = 2; i <= partition_size(p); ++i) lf += std::log(static_cast<double>(i));
  return lf - log_hook_product(p);
}

// Weyl dimension of the U(n) irrep with highest weight p (padded with zeros):
//   prod_{1<=i<j<=n} (p_i - i - p_j + j) / (j - i).
// Returns 0 if p has more than n rows. Exact: accumulates with gcd reduction.
inline std::uint64_t weyl_dim(const Partition& p, int n) {
  check_partition(p);
  if (n < 0) throw std::invalid_argument("weyl_dim: n must be >= 0");
  if (depth(p) > n) return 0;
  std::vector<long long> l(n);
  for (int i = 0; i < n; ++i) l[i] = (i < depth(p) ? p[i] : 0) - i;
  unsigned __int128 num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      unsigned __int128 a = static_cast<unsigned long long>(l[i] - l[j]);
      unsigned __int128 b = static_cast<unsigned long long>(j - i);
      num *= a;
      den *= b;
      // keep the accumulators small
      unsigned __int128 g = detail::gcd_u128(num, den);
      num /= g;
      den /= g;
    }
  if (den != 1) throw std::logic_error("weyl_dim: non-integral result");
  if (num > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("weyl_dim overflow");
  return static_cast<std::uint64_t>(num);
}

inline double log_weyl_dim(const Partition& p, int n) {
  if (depth(p) > n) return neg_inf();
  double s = 0.0;
  std::vector<long long> l(n);
  for (int i = 0; i < n; ++i) l[i] = (i < depth(p) ? p[i] : 0) - i;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s += std::log(static_cast<double>(l[i] - l[j])) - std::log(static_cast<double>(j - i));
  return s;
}

// All partitions of k with at most max_rows rows, in lexicographically decreasing
// order: enumerate_partitions(4, 2) = [[4],[3,1],[2,2]].
inline std::vector<Partition> enumerate_partitions(int k, int max_rows) {
  if (k < 0) throw std::invalid_argument("enumerate_partitions: k must be >= 0");
  std::vector<Partition> out;
  Partition cur;
  // first part at most `max_part`, at most `rows` further rows available
  auto rec = [&](auto&& self, int rem, int max_part, int rows) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    if (rows == 0) return;
    int lo = (rem + rows - 1) / rows;  // need rem <= part * rows
    for (int part = std::min(rem, max_part); part >= lo; --part) {
      cur.push_back(part);
      self(self, rem - part, part, rows - 1);
      cur.pop_back();
    }
  };
  rec(rec, k, k, max_rows);
  return out;
}

// Partitions mu interlacing p (p_1 >= mu_1 >= p_2 >= mu_2 >= ...) with at most
// max_rows rows, in lexicographically decreasing order.
inline std::vector<Partition> interlacing_predecessors(const Partition& p, int max_rows) {
  check_partition(p);
  if (max_rows < 0) max_rows = 0;
  int rows = std::min(depth(p), max_rows);
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == rows) {
      Partition mu = cur;
      while (!mu.empty() && mu.back() == 0) mu.pop_back();
      out.push_back(std::move(mu));
      return;
    }
    int hi = p[i];
    int lo = (i + 1 < depth(p)) ? p[i + 1] : 0;
    for (int v = hi; v >= lo; --v) {
      cur.push_back(v);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Predecessors under the restriction depth(mu) <= depth(p) - 1 (one fewer
// admissible row): (2,1) -> [[2],[1]]; (2,2) -> [[2]]; (1) -> [[]].
inline std::vector<Partition> branching_predecessors(const Partition& p) {
  return interlacing_predecessors(p, depth(p) - 1);
}

// ---------------------------------------------------------------------------
// Murnaghan–Nakayama characters via first-column hook lengths (beta sets).
//
// With B = {p_i + L - 1 - i : i = 0..L-1}, removing a border strip of length t
// replaces some b in B (b >= t, b - t not in B) by b - t; the strip height is
// the number of elements of B strictly between b - t and b, and contributes
// sign (-1)^height.
// ---------------------------------------------------------------------------

namespace detail {

inline Partition partition_from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<int>());
  Partition p;
  int L = static_cast<int>(beta.size());
  for (int i = 0; i < L; ++i) {
    int part = beta[i] - (L - 1 - i);
    if (part < 0) throw std::logic_error("invalid beta set");
    if (part > 0) p.push_back(part);
  }
  return p;
}

inline std::int64_t mn_rec(const Partition& p, const std::vector<int>& cycles, std::size_t idx,
                           std::map<std::pair<Partition, std::size_t>, std::int64_t>& memo) {
  if (idx == cycles.size()) return p.empty() ? 1 : 0;
  auto key = std::make_pair(p, idx);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  int t = cycles[idx];
  int L = depth(p);
  std::vector<int> beta(L);
  for (int i = 0; i < L; ++i) beta[i] = p[i] + (L - 1 - i);

  std::int64_t total = 0;
  for (int i = 0; i < L; ++i) {
    int b = beta[i];
    int nb = b - t;
    if (nb < 0) continue;
    bool occupied = false;
    int height = 0;
    for (int j = 0; j < L; ++j) {
      if (j == i) continue;
      if (beta[j] == nb) occupied = true;
      if (beta[j] > nb && beta[j] < b) ++height;
    }
    if (occupied) continue;
    std::vector<int> nbeta = beta;
    nbeta[i] = nb;
    Partition np = partition_from_beta(std::move(nbeta));
    std::int64_t sub = mn_rec(np, cycles, idx + 1, memo);
    total += (height % 2 == 0) ? sub : -sub;
  }
  memo[key] = total;
  return total;
}

}  // namespace detail

// Character of the symmetric-group irrep labelled by p at the conjugacy class of
// cycle type `cycles` (a partition of |p|). Exact integer.
inline std::int64_t sym_character(const Partition& p, const Partition& cycles) {
  check_partition(p);
  check_partition(cycles);
  if (partition_size(p) != partition_size(cycles))
    throw std::invalid_argument("sym_character: |p| must equal the sum of the cycle type");
  std::map<std::pair<Partition, std::size_t>, std::int64_t> memo;
  return detail::mn_rec(p, cycles, 0, memo);
}

// Size of the conjugacy class of the given cycle type in S_k: k! / z, where
// z = prod_i i^{m_i} m_i!  (m_i = multiplicity of cycle length i).
inline std::uint64_t conjugacy_class_size(const Partition& cycles) {
  check_partition(cycles);
  int k = partition_size(cycles);
  if (k > 20) throw std::overflow_error("conjugacy_class_size: k too large for u64 factorial");
  std::uint64_t fact = 1;
  for (int i = 2; i <= k; ++i) fact *= static_cast<std::uint64_t>(i);
  std::map<int, int> mult;
  for (int c : cycles) mult[c]++;
  std::uint64_t z = 1;
  for (auto [len, m] : mult) {
    for (int r = 0; r < m; ++r) z = checked_mul_u64(z, static_cast<std::uint64_t>(len));
    for (int r = 2; r <= m; ++r) z = checked_mul_u64(z, static_cast<std::uint64_t>(r));
  }
  return exact_div_u64(fact, z);
}

// Contents j - i of the boxes that can be added to p while keeping at most n rows.
// Used for the spectral interpolation of Jucys–Murphy elements.
inline std::vector<int> addable_contents(const Partition& p, int n) {
  std::vector<int> out;
  int L = depth(p);
  for (int i = 0; i <= L && i < n; ++i) {
    int row_len = (i < L) ? p[i] : 0;
    int above = (i == 0) ? std::numeric_limits<int>::max() : p[i - 1];
    if (row_len < above) out.push_back(row_len - i);  // content of the new box (i, row_len)
  }
  return out;
}

// The partition obtained from p by adding one box of the given content; throws if
// no addable box has that content.
inline Partition add_box_by_content(const Partition& p, int content, int n) {
  int L = depth(p);
  for (int i = 0; i <= L && i < n; ++i) {
    int row_len = (i < L) ? p[i] : 0;
    int above = (i == 0) ? std::numeric_limits<int>::max() : p[i - 1];
    if (row_len < above && row_len - i == content) {
      Partition q = p;
      if (i < L)
        q[i]++;
      else
        q.push_back(1);
      return q;
    }
  }
  throw std::invalid_argument("add_box_by_content: no addable box with that content");
}

}  // namespace tetracone
