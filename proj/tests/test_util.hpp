#pragma once
// Shared helpers for the test suites: explicit Euclidean constructions that act
// as membership oracles for n = 2.

#include <array>
#include <cmath>
#include <random>

#include "tetracone/geometry2.hpp"

namespace testutil {

using Vec3 = std::array<double, 3>;

inline Vec3 add(const Vec3& p, const Vec3& q) { return {p[0] + q[0], p[1] + q[1], p[2] + q[2]}; }

inline double norm(const Vec3& p) { return std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]); }

inline double det3(const Vec3& u, const Vec3& v, const Vec3& w) {
  return u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
         u[2] * (v[0] * w[1] - v[1] * w[0]);
}

// Edge lengths of the tetrahedron with vertex chain 0, u, u+v, u+v+w. Such a
// tuple is a member by construction (it is realized by traceless 2x2 Hermitian
// matrices whose Bloch vectors are u, v, w).
inline tetracone::EdgeLengths lengths_from_vectors(const Vec3& u, const Vec3& v, const Vec3& w) {
  return {norm(u), norm(v), norm(add(u, v)), norm(w), norm(add(add(u, v), w)), norm(add(v, w))};
}

inline Vec3 random_vec3(std::mt19937& rng, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  return {d(rng), d(rng), d(rng)};
}

}  // namespace testutil
