// Landscape tour: the volume-form membership region in a fixed length slice,
// the 48-element symmetry group acting on a member, and the degree-growth
// signature separating members from a non-member that every finite sweep
// misses.

#include <algorithm>
#include <cstdio>
#include <vector>

#include "tetracone/geometry2.hpp"
#include "tetracone/sixj_cache.hpp"
#include "tetracone/symmetry.hpp"
#include "tetracone/tetra.hpp"

using namespace tetracone;

int main() {
  // 1. A coarse (lc, le, lf) grid over the slice with la=5, lb=7, ld=6.
  long members = 0, triangle_only = 0, outside = 0;
  for (const SliceRecord& r : slice_scan(5.0, 7.0, 6.0, 0.5, 17.5, 35)) {
    if (r.member)
      ++members;
    else if (r.triangle)
      ++triangle_only;  // all four faces close but the volume form is negative
    else
      ++outside;
  }
  std::printf("slice la=5 lb=7 ld=6 (35^3 grid): %ld members, %ld triangle-only, %ld outside\n",
              members, triangle_only, outside);

  // 2. The symmetry group: 48 signed slot permutations preserving membership.
  const auto group = generate_group();
  SpectrumTuple t = tuple_from_lengths(EdgeLengths{5.0, 7.0, 10.0, 6.0, 13.0, 9.0});
  int preserved = 0;
  for (const SignedPermutation& g : group)
    preserved += tetra2_member(apply(g, t)).member ? 1 : 0;
  std::printf("symmetry group: order %zu; member tuple stays member in %d of %zu images\n",
              group.size(), preserved, group.size());

  // 3. Degree growth: norms along the proportional label sequence stay flat for
  // a member but decay geometrically for a flat (volume-violating) tuple whose
  // finite inequalities all hold with zero slack.
  SixJCache cache;
  SpectrumTuple flat;
  flat.a = {2.0, 0.0};
  flat.b = {2.0, 0.0};
  flat.c = {4.0, 0.0};
  flat.d = {2.0, 0.0};
  flat.e = {5.0, 1.0};
  flat.f = {4.0, 0.0};

  std::vector<int> ks;
  for (int k = 3; k <= 12; ++k) ks.push_back(k);
  const AsymptoticsReport rep = asymptotics_scan(flat, ks, &cache);
  std::printf("flat tuple sequence norms:");
  for (const AsymptoticsRow& row : rep.rows) std::printf(" %.3f", row.sequence_norm);
  std::printf("\n  fitted raw slope %.6g (%s)\n", rep.slope_raw,
              rep.decaying ? "decaying: certified non-member in the limit" : "non-decaying");
  return 0;
}
