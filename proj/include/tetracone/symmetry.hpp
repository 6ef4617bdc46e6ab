#pragma once
// symmetry.hpp — the signed-permutation symmetries of the six-slot tuple space:
// generators T1, T2, group closure (order 48), affine shifts, scaling, and the
// traceless / non-negative reductions.

#include <array>
#include <cmath>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "tetracone/spectrum.hpp"

namespace tetracone {

// y_i = x_{src[i]}, starred (negated and reversed: descending order preserved)
// where star[i] is set.
struct SignedPermutation {
  std::array<int, 6> src{0, 1, 2, 3, 4, 5};
  std::array<bool, 6> star{false, false, false, false, false, false};

  bool operator==(const SignedPermutation&) const = default;
  auto operator<=>(const SignedPermutation&) const = default;
};

inline SignedPermutation sp_identity() { return {}; }

// T1: (a,b,c,d,e,f) -> (a, f, e, d*, c, b)
inline SignedPermutation sp_t1() { return {{0, 5, 4, 3, 2, 1}, {false, false, false, true, false, false}}; }

// T2: (a,b,c,d,e,f) -> (c, e*, d*, f, b, a*)
inline SignedPermutation sp_t2() { return {{2, 4, 3, 5, 1, 0}, {false, true, true, false, false, true}}; }

// g after h: (g∘h)(x) = g(h(x)).
inline SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h) {
  SignedPermutation r;
  for (int i = 0; i < 6; ++i) {
    r.src[i] = h.src[g.src[i]];
    r.star[i] = g.star[i] ^ h.star[g.src[i]];
  }
  return r;
}

inline Spectrum star(const Spectrum& x) {
  Spectrum y(x.rbegin(), x.rend());
  for (double& v : y) v = -v;
  return y;
}

inline SpectrumTuple apply(const SignedPermutation& g, const SpectrumTuple& t) {
  SpectrumTuple out;
  for (int i = 0; i < 6; ++i) out.slot(i) = g.star[i] ? star(t.slot(g.src[i])) : t.slot(g.src[i]);
  return out;
}

namespace detail {
inline SignedPermutation sp_pow(const SignedPermutation& g, int e) {
  SignedPermutation r = sp_identity();
  for (int i = 0; i < e; ++i) r = compose(r, g);
  return r;
}
}  // namespace detail

// Closure of {T1, T2}. Hard-errors unless the order is 48 and the presentation
// relations T1^2 = T2^4 = (T1 T2)^6 = (T2 T1 T2 T1 T2)^2 = identity hold.
inline std::vector<SignedPermutation> generate_group() {
  const SignedPermutation id = sp_identity(), t1 = sp_t1(), t2 = sp_t2();
  std::set<SignedPermutation> seen{id, t1, t2};
  std::vector<SignedPermutation> frontier{id, t1, t2};
  while (!frontier.empty()) {
    std::vector<SignedPermutation> next;
    for (const auto& g : frontier)
      for (const auto* gen : {&t1, &t2}) {
        for (const auto& h : {compose(g, *gen), compose(*gen, g)})
          if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  if (seen.size() != 48) throw std::runtime_error("symmetry group closure has order " + std::to_string(seen.size()) + ", expected 48");
  using detail::sp_pow;
  if (sp_pow(t1, 2) != id) throw std::runtime_error("relation T1^2 = id failed");
  if (sp_pow(t2, 4) != id) throw std::runtime_error("relation T2^4 = id failed");
  if (sp_pow(compose(t1, t2), 6) != id) throw std::runtime_error("relation (T1 T2)^6 = id failed");
  SignedPermutation w = compose(t2, compose(t1, compose(t2, compose(t1, t2))));
  if (sp_pow(w, 2) != id) throw std::runtime_error("relation (T2 T1 T2 T1 T2)^2 = id failed");
  return std::vector<SignedPermutation>(seen.begin(), seen.end());
}

// Adds (x, y, x+y, z, x+y+z, y+z) to the slots (a,b,c,d,e,f) component-wise;
// preserves the trace conditions for every (x,y,z).
inline SpectrumTuple shift(const SpectrumTuple& t, double x, double y, double z) {
  std::array<double, 6> off{x, y, x + y, z, x + y + z, y + z};
  SpectrumTuple out = t;
  for (int i = 0; i < 6; ++i)
    for (double& v : out.slot(i)) v += off[i];
  return out;
}

inline SpectrumTuple to_traceless(const SpectrumTuple& t) {
  check_tuple(t);
  SpectrumTuple out = t;
  for (int i = 0; i < 6; ++i) {
    double m = trace(out.slot(i)) / out.slot(i).size();
    for (double& v : out.slot(i)) v -= m;
  }
  return out;
}

inline SpectrumTuple scale(const SpectrumTuple& t, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("scale: factor must be positive");
  SpectrumTuple out = t;
  for (int i = 0; i < 6; ++i)
    for (double& v : out.slot(i)) v *= s;
  return out;
}

// Necessary inequalities on minimal eigenvalues for tuples realized by Hermitian
// sums: c_n >= a_n + b_n, f_n >= b_n + d_n, e_n >= d_n + c_n, e_n >= a_n + f_n.
inline bool min_eig_inequalities_hold(const SpectrumTuple& t, double tol = 1e-12) {
  auto mn = [&](const Spectrum& x) { return x.back(); };
  return mn(t.c) >= mn(t.a) + mn(t.b) - tol && mn(t.f) >= mn(t.b) + mn(t.d) - tol &&
         mn(t.e) >= mn(t.d) + mn(t.c) - tol && mn(t.e) >= mn(t.a) + mn(t.f) - tol;
}

struct NonnegResult {
  SpectrumTuple tuple;
  double x = 0, y = 0, z = 0;                // the shift applied
  std::optional<bool> necessary_ok;          // set when the pre-filter was requested
};

// Minimal shift making all six lists non-negative. The first three slots force
// x >= -a_n, y >= -b_n, z >= -d_n; the dependent slots c, e, f then pin the
// greedy minima below. When check_filter is set, the min-eig necessary
// conditions are evaluated first and reported (false flags non-membership).
inline NonnegResult to_nonnegative(const SpectrumTuple& t, bool check_filter = false) {
  check_tuple(t);
  if (!traces_consistent(t)) throw std::invalid_argument("to_nonnegative: trace conditions violated");
  NonnegResult r;
  if (check_filter) r.necessary_ok = min_eig_inequalities_hold(t);
  auto mn = [&](const Spectrum& s) { return s.back(); };
  r.x = std::max(0.0, -mn(t.a));
  r.y = std::max({0.0, -mn(t.b), -mn(t.c) - r.x});
  r.z = std::max({0.0, -mn(t.d), -mn(t.f) - r.y, -mn(t.e) - r.x - r.y});
  r.tuple = shift(t, r.x, r.y, r.z);
  // clamp tiny negative round-off so downstream non-negative preconditions hold
  for (int i = 0; i < 6; ++i)
    for (double& v : r.tuple.slot(i))
      if (v < 0.0 && v > -1e-12) v = 0.0;
  return r;
}

}  // namespace tetracone
