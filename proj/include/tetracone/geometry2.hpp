#pragma once
// geometry2.hpp — the exact n=2 oracle. A two-eigenvalue tuple reduces to six
// Euclidean edge lengths l = (x1 - x2)/2; membership is four triangle
// inequalities plus non-negativity of the Cayley–Menger determinant, i.e. the
// squared volume of the tetrahedron with vertex chain 0, u, u+v, u+v+w where
// a=|u|, b=|v|, c=|u+v|, d=|w|, e=|u+v+w|, f=|v+w|.

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "tetracone/spectrum.hpp"

namespace tetracone {

struct EdgeLengths {
  double la = 0, lb = 0, lc = 0, ld = 0, le = 0, lf = 0;

  double operator[](int i) const {
    switch (i) {
      case 0: return la;
      case 1: return lb;
      case 2: return lc;
      case 3: return ld;
      case 4: return le;
      case 5: return lf;
    }
    throw std::out_of_range("edge index must be 0..5");
  }
};

inline EdgeLengths edge_lengths(const SpectrumTuple& t) {
  check_tuple(t);
  if (t.n() != 2) throw std::invalid_argument("edge_lengths: all spectra must have exactly 2 entries");
  auto half_gap = [](const Spectrum& x) { return (x[0] - x[1]) / 2.0; };
  return {half_gap(t.a), half_gap(t.b), half_gap(t.c), half_gap(t.d), half_gap(t.e), half_gap(t.f)};
}

// (1/288) times the bordered determinant of squared distances for the vertex
// order P0=0, P1=u, P2=u+v, P3=u+v+w; equals the squared volume.
inline double cayley_menger(const EdgeLengths& l) {
  double a2 = l.la * l.la, b2 = l.lb * l.lb, c2 = l.lc * l.lc;
  double d2 = l.ld * l.ld, e2 = l.le * l.le, f2 = l.lf * l.lf;
  Eigen::Matrix<double, 5, 5> m;
  // D(P0,P1)=a, D(P0,P2)=c, D(P0,P3)=e, D(P1,P2)=b, D(P1,P3)=f, D(P2,P3)=d
  m << 0, a2, c2, e2, 1,
      a2, 0, b2, f2, 1,
      c2, b2, 0, d2, 1,
      e2, f2, d2, 0, 1,
      1, 1, 1, 1, 0;
  return m.determinant() / 288.0;
}

// The four faces of the tetrahedron as edge-index triples into EdgeLengths.
inline const std::array<std::array<int, 3>, 4>& tetra_faces() {
  static const std::array<std::array<int, 3>, 4> faces = {{
      {0, 1, 2},  // {a, b, c}:  u, v, u+v
      {2, 3, 4},  // {c, d, e}:  u+v, w, u+v+w
      {1, 3, 5},  // {b, d, f}:  v, w, v+w
      {0, 5, 4},  // {a, f, e}:  u, v+w, u+v+w
  }};
  return faces;
}

inline bool triangle_ok(double x, double y, double z, double tol = 1e-12) {
  double mx = std::max({x, y, z});
  return mx <= (x + y + z - mx) + tol;
}

inline bool triangles_ok(const EdgeLengths& l, double tol = 1e-12) {
  for (const auto& f : tetra_faces())
    if (!triangle_ok(l[f[0]], l[f[1]], l[f[2]], tol)) return false;
  return true;
}

enum class Tetra2Reason { member, trace_mismatch, triangle_violation, negative_volume };

inline const char* to_string(Tetra2Reason r) {
  switch (r) {
    case Tetra2Reason::member: return "member";
    case Tetra2Reason::trace_mismatch: return "trace-mismatch";
    case Tetra2Reason::triangle_violation: return "triangle-violation";
    case Tetra2Reason::negative_volume: return "negative-volume";
  }
  return "?";
}

struct Tetra2Verdict {
  bool member = false;
  Tetra2Reason reason = Tetra2Reason::member;
  double cm = 0.0;  // Cayley–Menger value (squared volume), meaningful unless trace_mismatch
};

// Membership of a two-eigenvalue tuple: trace conditions, then the four
// triangle inequalities, then CM >= -1e-12. Boundary points are members.
inline Tetra2Verdict tetra2_member(const SpectrumTuple& t) {
  Tetra2Verdict v;
  if (!traces_consistent(t, 1e-9)) {
    v.reason = Tetra2Reason::trace_mismatch;
    return v;
  }
  EdgeLengths l = edge_lengths(t);
  v.cm = cayley_menger(l);
  if (!triangles_ok(l)) {
    v.reason = Tetra2Reason::triangle_violation;
    return v;
  }
  if (v.cm < -1e-12) {
    v.reason = Tetra2Reason::negative_volume;
    return v;
  }
  v.member = true;
  return v;
}

inline Tetra2Verdict tetra2_member(const EdgeLengths& l) {
  Tetra2Verdict v;
  v.cm = cayley_menger(l);
  if (!triangles_ok(l)) {
    v.reason = Tetra2Reason::triangle_violation;
    return v;
  }
  if (v.cm < -1e-12) {
    v.reason = Tetra2Reason::negative_volume;
    return v;
  }
  v.member = true;
  return v;
}

struct SliceRecord {
  double lc = 0, le = 0, lf = 0;
  bool triangle = false;
  double cm = 0.0;
  bool member = false;
};

// Grid over (lc, le, lf) in [lo, hi]^3 with `steps` points per axis, for fixed
// (la, lb, ld).
inline std::vector<SliceRecord> slice_scan(double la, double lb, double ld, double lo, double hi, int steps) {
  if (!(la > 0 && lb > 0 && ld > 0)) throw std::invalid_argument("slice_scan: base lengths must be positive");
  if (steps < 1) throw std::invalid_argument("slice_scan: steps must be >= 1");
  if (hi < lo) throw std::invalid_argument("slice_scan: empty range");
  std::vector<SliceRecord> out;
  out.reserve(static_cast<std::size_t>(steps) * steps * steps);
  auto coord = [&](int i) { return steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1); };
  for (int ic = 0; ic < steps; ++ic)
    for (int ie = 0; ie < steps; ++ie)
      for (int iff = 0; iff < steps; ++iff) {
        EdgeLengths l{la, lb, coord(ic), ld, coord(ie), coord(iff)};
        SliceRecord r;
        r.lc = l.lc;
        r.le = l.le;
        r.lf = l.lf;
        r.triangle = triangles_ok(l);
        r.cm = cayley_menger(l);
        r.member = r.triangle && r.cm >= -1e-12;
        out.push_back(r);
      }
  return out;
}

// The six Regge images of an edge-length tuple, the first being the input.
// s1 = (a+b+d+e)/2, s2 = (a+c+d+f)/2, s3 = (b+c+e+f)/2.
inline std::array<EdgeLengths, 6> regge_orbit(const EdgeLengths& l) {
  double a = l.la, b = l.lb, c = l.lc, d = l.ld, e = l.le, f = l.lf;
  double s1 = (a + b + d + e) / 2.0;
  double s2 = (a + c + d + f) / 2.0;
  double s3 = (b + c + e + f) / 2.0;
  return {{
      {a, b, c, d, e, f},
      {s1 - a, s1 - b, c, s1 - d, s1 - e, f},
      {a, s3 - b, s3 - c, d, s3 - e, s3 - f},
      {s2 - a, b, s2 - c, s2 - d, e, s2 - f},
      {s2 - d, s1 - e, s3 - f, s2 - a, s1 - b, s3 - c},
      {s1 - d, s3 - e, s2 - f, s1 - a, s3 - b, s2 - c},
  }};
}

// Tuple of traceless two-entry spectra realizing the given edge lengths.
inline SpectrumTuple tuple_from_lengths(const EdgeLengths& l) {
  auto spec = [](double len) { return Spectrum{len, -len}; };
  return {spec(l.la), spec(l.lb), spec(l.lc), spec(l.ld), spec(l.le), spec(l.lf)};
}

}  // namespace tetracone
