// Command-line front end: deterministic line-oriented reports over the library
// pipelines.  Exit status: 0 = run completed with a positive verdict, 1 = the
// computed verdict is negative (a violation or non-membership signal, which
// may well be the answer the caller wanted), 2 = usage or validation error.

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "tetracone/geometry2.hpp"
#include "tetracone/lr.hpp"
#include "tetracone/probability.hpp"
#include "tetracone/sixj_cache.hpp"
#include "tetracone/symmetry.hpp"
#include "tetracone/tetra.hpp"

using namespace tetracone;

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string iso_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Accepts "[1.5,0.5]", "1.5, 0.5", or whitespace-separated numbers.
Spectrum parse_spectrum(const std::string& text) {
  std::string cleaned = text;
  for (char& ch : cleaned)
    if (ch == '[' || ch == ']' || ch == ',') ch = ' ';
  std::istringstream in(cleaned);
  Spectrum x;
  double v = 0.0;
  while (in >> v) x.push_back(v);
  if (x.empty()) throw std::invalid_argument("empty spectrum: '" + text + "'");
  check_spectrum(x);
  return x;
}

Partition parse_partition(const std::string& text) {
  std::string cleaned = text;
  for (char& ch : cleaned)
    if (ch == '[' || ch == ']' || ch == ',') ch = ' ';
  std::istringstream in(cleaned);
  Partition p;
  int v = 0;
  while (in >> v) p.push_back(v);
  check_partition(p);
  return p;
}

// Six ';'-separated partitions in slot order alpha;beta;gamma;delta;epsilon;phi.
SixJLabel parse_label(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 6)
    throw std::invalid_argument("label needs six ';'-separated partitions");
  SixJLabel L;
  Partition* slots[6] = {&L.alpha, &L.beta, &L.gamma, &L.delta, &L.epsilon, &L.phi};
  for (int i = 0; i < 6; ++i) {
    std::string body = parts[static_cast<std::size_t>(i)];
    std::string digits;
    for (char ch : body)
      if (ch != '[' && ch != ']' && !std::isspace(static_cast<unsigned char>(ch))) digits += ch;
    *slots[i] = digits.empty() ? Partition{} : parse_partition(body);
  }
  check_sixj_label(L);
  return L;
}

// Tuple file: six serialized spectra, one per line, slot order a,b,c,d,e,f.
// Blank lines and lines starting with '#' are skipped.
SpectrumTuple read_tuple_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open tuple file: " + path);
  std::vector<Spectrum> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    rows.push_back(parse_spectrum(line));
  }
  if (rows.size() != 6)
    throw std::invalid_argument("tuple file must hold exactly six spectra, got " +
                                std::to_string(rows.size()));
  SpectrumTuple t;
  for (int i = 0; i < 6; ++i) t.slot(i) = rows[static_cast<std::size_t>(i)];
  check_tuple(t);
  return t;
}

SixJCache make_cache() {
  const char* dir = std::getenv("TETRACONE_CACHE_DIR");
  return SixJCache(dir ? dir : "");
}

std::string cache_desc(const SixJCache& cache) {
  return cache.disk_path().empty() ? std::string("<memory>") : cache.disk_path();
}

void emit_cache_stats(std::ostream& out, const SixJCache& cache) {
  const SixJCacheStats s = cache.stats();
  out << "# cache-stats: hits=" << s.hits << " misses=" << s.misses
      << " loaded-from-disk=" << s.loaded_from_disk << " entries=" << cache.size() << "\n";
}

void emit_header(std::ostream& out, const std::string& sub, const std::string& config) {
  out << "# tetracone " << sub << "\n";
  out << "# timestamp: " << iso_timestamp() << " (informational; strip for byte comparisons)\n";
  out << "# config: " << config << "\n";
}

int write_report(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  out << text;
  std::cout << "report written to " << out_path << "\n";
  return 0;
}

std::string sp_to_string(const SignedPermutation& g) {
  std::string s = "(";
  for (int i = 0; i < 6; ++i) {
    if (i) s += ",";
    s += slot_name(g.src[i]);
    if (g.star[i]) s += "*";
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Subcommand bodies.  Each returns the process exit status.
// ---------------------------------------------------------------------------

int run_check_tetra(const std::string& tuple_path, int kmax, const std::string& mode,
                    int threads, const std::string& out_path) {
  const SpectrumTuple t = read_tuple_file(tuple_path);
  SixJCache cache = make_cache();
  std::ostringstream out;
  emit_header(out, "check-tetra",
              "tuple=" + tuple_path + " kmax=" + std::to_string(kmax) + " mode=" + mode +
                  " threads=" + std::to_string(threads) +
                  " dim-cap=" + std::to_string(default_dense_dim_cap));
  out << "# tolerances: trace-rel=1e-09 slack-rel=-1e-09 member-distance=1e-06\n";
  out << "# cache: " << cache_desc(cache) << "\n";
  for (int i = 0; i < 6; ++i)
    out << "tuple " << slot_name(i) << " = " << spectrum_to_string(t.slot(i)) << "\n";

  if (t.n() == 2) {
    const Tetra2Verdict v = tetra2_member(t);
    out << "oracle: member=" << yesno(v.member) << " cm=" << fmt(v.cm)
        << " reason=" << to_string(v.reason) << "\n";
  }

  bool negative = false;
  if (mode == "inequalities" || mode == "both") {
    int first_violation = -1;
    for (int k = 1; k <= kmax; ++k) {
      const InequalityReport rep = tet_inequality_check(t, k, &cache, threads);
      out << "inequalities k=" << k << " triples=" << rep.num_triples
          << " min-slack=" << fmt(rep.min_slack) << " holds=" << yesno(rep.all_hold);
      out << " worst-row=" << partition_to_string(rep.worst.alpha) << ";"
          << partition_to_string(rep.worst.beta) << ";" << partition_to_string(rep.worst.delta)
          << " lhs=" << fmt(rep.worst.lhs) << " rhs=" << fmt(rep.worst.rhs) << "\n";
      if (!rep.all_hold && first_violation < 0) first_violation = k;
    }
    if (first_violation >= 0) {
      out << "inequality-verdict: VIOLATED first-degree=" << first_violation << "\n";
      negative = true;
    } else {
      out << "inequality-verdict: all families hold through k=" << kmax
          << " (distance/Tr[e] <= " << fmt(tet_distance_bound(kmax, t.n())) << ")\n";
    }
  }
  if (mode == "distance" || mode == "both") {
    DistanceCertificate orbit = distance_D(t, "orbit");
    DistanceCertificate free_mode = distance_D(t, "free");
    for (const DistanceCertificate* c : {&orbit, &free_mode}) {
      out << "distance mode=" << c->mode << " value=" << fmt(c->value)
          << " converged=" << yesno(c->converged) << " residuals=";
      for (int i = 0; i < 6; ++i) out << (i ? "," : "") << fmt(c->slot_residuals[i]);
      out << "\n";
    }
    if (orbit.value > 1e-6) {
      out << "distance-verdict: POSITIVE orbit-distance=" << fmt(orbit.value) << "\n";
      negative = true;
    } else {
      out << "distance-verdict: consistent with membership (orbit distance <= 1e-06)\n";
    }
  }
  emit_cache_stats(out, cache);
  out << "# verdict: " << (negative ? "NEGATIVE" : "PASS") << "\n";
  const int rc = write_report(out.str(), out_path);
  return rc != 0 ? rc : (negative ? 1 : 0);
}

int run_sixj(const std::string& label_text, int n, const std::string& out_path) {
  const SixJLabel L = parse_label(label_text);
  SixJCache cache = make_cache();
  std::ostringstream out;
  emit_header(out, "sixj", "label=" + label_text + " n=" + std::to_string(n) +
                               " dim-cap=" + std::to_string(default_dense_dim_cap));
  out << "# cache: " << cache_desc(cache) << "\n";
  const SixJNorms norms = cache.get(L, n);
  out << "label " << sixj_label_to_string(L) << "\n";
  out << "inf-norm = " << fmt(norms.inf_norm) << "\n";
  out << "two-norm-sq = " << fmt(norms.two_norm_sq) << "\n";
  out << "rank-left = " << norms.rank_left << "\n";
  out << "rank-right = " << norms.rank_right << "\n";
  out << "dim-compressed = " << norms.dim_compressed << "\n";
  emit_cache_stats(out, cache);
  return write_report(out.str(), out_path);
}

int run_horn(const std::string& sa, const std::string& sb, const std::string& sc, int kmax,
             int coupling_kmax, const std::string& out_path) {
  const Spectrum a = parse_spectrum(sa), b = parse_spectrum(sb), c = parse_spectrum(sc);
  std::ostringstream out;
  emit_header(out, "horn",
              "a=" + spectrum_to_string(a) + " b=" + spectrum_to_string(b) +
                  " c=" + spectrum_to_string(c) + " kmax=" + std::to_string(kmax) +
                  " coupling-kmax=" + std::to_string(coupling_kmax));
  out << "# rows: k family alpha beta-or-gamma lhs rhs slack\n";
  const HornScanResult scan = horn_scan(a, b, c, kmax, coupling_kmax);
  auto emit_row = [&out](const HornRow& r, const char* tag) {
    const double lhs = std::exp(r.lhs_log);
    const double rhs = std::isfinite(r.rhs_log) ? std::exp(r.rhs_log) : 0.0;
    out << tag << " k=" << r.k << " family=" << (r.family == 'r' ? "row" : "col") << " "
        << partition_to_string(r.alpha) << " " << partition_to_string(r.beta_or_gamma)
        << " lhs=" << fmt(lhs) << " rhs=" << fmt(rhs) << " slack=" << fmt(rhs - lhs) << "\n";
  };
  for (const HornReport& rep : scan.reports) {
    if (rep.worst) emit_row(*rep.worst, "worst");
    for (const HornRow& r : rep.violations) emit_row(r, "violation");
    out << "summary k=" << rep.k << " pass=" << yesno(rep.pass) << "\n";
  }
  for (int k = 1; k <= coupling_kmax && k <= kmax; ++k) {
    const CouplingResult cr = coupling_feasible(a, b, c, k);
    out << "coupling k=" << k << " feasible=" << yesno(cr.feasible) << " flow=" << fmt(cr.flow)
        << " demand=" << fmt(cr.demand) << "\n";
  }
  const bool negative = scan.first_violation_k >= 0 || scan.first_infeasible_k >= 0;
  if (negative)
    out << "# verdict: VIOLATED first-violation-k=" << scan.first_violation_k
        << " first-infeasible-k=" << scan.first_infeasible_k << "\n";
  else
    out << "# verdict: PASS through k=" << kmax << "\n";
  const int rc = write_report(out.str(), out_path);
  return rc != 0 ? rc : (negative ? 1 : 0);
}

int run_slice(double la, double lb, double ld, double lo, double hi, int steps,
              const std::string& out_path) {
  std::ostringstream out;
  emit_header(out, "slice",
              "la=" + fmt(la) + " lb=" + fmt(lb) + " ld=" + fmt(ld) + " min=" + fmt(lo) +
                  " max=" + fmt(hi) + " steps=" + std::to_string(steps));
  out << "# rows: lc le lf triangle cm member\n";
  long members = 0, triangle_only = 0;
  for (const SliceRecord& r : slice_scan(la, lb, ld, lo, hi, steps)) {
    out << fmt(r.lc) << " " << fmt(r.le) << " " << fmt(r.lf) << " " << yesno(r.triangle) << " "
        << fmt(r.cm) << " " << yesno(r.member) << "\n";
    members += r.member ? 1 : 0;
    triangle_only += (r.triangle && !r.member) ? 1 : 0;
  }
  out << "# summary: grid-points=" << static_cast<long>(steps) * steps * steps
      << " members=" << members << " triangle-only=" << triangle_only << "\n";
  return write_report(out.str(), out_path);
}

int run_symmetry(const std::string& tuple_path, const std::string& out_path) {
  std::ostringstream out;
  emit_header(out, "symmetry",
              tuple_path.empty() ? std::string("tuple=<none>") : "tuple=" + tuple_path);
  // generate_group() hard-errors unless the closure has order 48 and the
  // presentation relations hold, so reaching the print means both are true.
  std::vector<SignedPermutation> group = generate_group();
  std::sort(group.begin(), group.end());
  out << "group-order = " << group.size() << "\n";
  out << "relations: T1^2 = T2^4 = (T1 T2)^6 = (T2 T1 T2 T1 T2)^2 = id -> yes\n";
  for (std::size_t i = 0; i < group.size(); ++i)
    out << "g" << (i < 10 ? "0" : "") << i << " " << sp_to_string(group[i]) << "\n";

  bool negative = false;
  if (!tuple_path.empty()) {
    const SpectrumTuple t = read_tuple_file(tuple_path);
    int stay = 0;
    for (const SignedPermutation& g : group) {
      const SpectrumTuple image = to_nonnegative(apply(g, t)).tuple;
      const bool member = t.n() == 2 ? tetra2_member(image).member : true;
      stay += member ? 1 : 0;
    }
    out << "orbit: images=" << group.size() << " member-after-shift=" << stay << "\n";
    if (t.n() == 2 && stay != static_cast<int>(group.size())) negative = true;
  }
  out << "# verdict: " << (negative ? "NEGATIVE" : "PASS") << "\n";
  const int rc = write_report(out.str(), out_path);
  return rc != 0 ? rc : (negative ? 1 : 0);
}

int run_asymptotics(const std::string& tuple_path, const std::string& k_text,
                    const std::string& out_path) {
  const SpectrumTuple t = read_tuple_file(tuple_path);
  std::vector<int> ks;
  {
    std::string cleaned = k_text;
    for (char& ch : cleaned)
      if (ch == ',') ch = ' ';
    std::istringstream in(cleaned);
    int k = 0;
    while (in >> k) ks.push_back(k);
    if (ks.empty()) throw std::invalid_argument("empty degree list: '" + k_text + "'");
  }
  SixJCache cache = make_cache();
  std::ostringstream out;
  emit_header(out, "asymptotics", "tuple=" + tuple_path + " k=" + k_text +
                                      " dim-cap=" + std::to_string(default_dense_dim_cap));
  out << "# cache: " << cache_desc(cache) << "\n";
  out << "# sequence-norm-floor: " << fmt(sequence_norm_floor) << "\n";
  const AsymptoticsReport rep = asymptotics_scan(t, ks, &cache);
  out << "rank-e = " << rep.rank_e << "\n";
  for (const AsymptoticsRow& row : rep.rows)
    out << "k=" << row.k << " sequence-label=" << sixj_label_to_string(row.sequence_label)
        << " norm=" << fmt(row.sequence_norm) << " scaled=" << fmt(row.scaled)
        << " best-norm=" << fmt(row.best_norm) << "\n";
  if (rep.slope_valid) {
    out << "slope-raw = " << fmt(rep.slope_raw) << "   # ln(norm) per unit k\n";
    out << "slope-scaled = " << fmt(rep.slope) << "   # ln(norm*(k+1)^{6 rank}) per unit k\n";
  } else {
    out << "slope-raw = n/a (fewer than three norms above the floor)\n";
    out << "slope-scaled = n/a\n";
  }
  out << "decaying = " << yesno(rep.decaying) << "\n";
  emit_cache_stats(out, cache);
  out << "# verdict: " << (rep.decaying ? "NORMS-DECAY" : "PASS") << "\n";
  const int rc = write_report(out.str(), out_path);
  return rc != 0 ? rc : (rep.decaying ? 1 : 0);
}

int run_sample(const std::string& spec_text, int k, const std::string& out_path) {
  const Spectrum x = parse_spectrum(spec_text);
  std::ostringstream out;
  emit_header(out, "sample", "spec=" + spectrum_to_string(x) + " k=" + std::to_string(k));
  out << "# rows: lambda probability\n";
  const Distribution d = schur_weyl_dist(x, k);
  double total = 0.0;
  for (std::size_t i = 0; i < d.support.size(); ++i) {
    out << partition_to_string(d.support[i]) << " " << fmt(d.weights[i]) << "\n";
    total += d.weights[i];
  }
  out << "# total-mass: " << fmt(total) << "\n";
  return write_report(out.str(), out_path);
}

int run_entropy(int samples, int n, std::uint64_t seed, const std::string& out_path) {
  if (samples < 1) throw std::invalid_argument("entropy: need samples >= 1");
  std::ostringstream out;
  emit_header(out, "entropy", "samples=" + std::to_string(samples) + " n=" + std::to_string(n) +
                                  " seed=" + std::to_string(seed));
  out << "# tolerances: margin >= -1e-12\n";
  double min_margin = std::numeric_limits<double>::infinity();
  std::uint64_t argmin = seed;
  int violations = 0;
  for (int i = 0; i < samples; ++i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    const double margin = entropic_check(random_tetra_sample(n, s).tuple);
    if (margin < min_margin) {
      min_margin = margin;
      argmin = s;
    }
    if (margin < -1e-12) ++violations;
  }
  out << "min-margin = " << fmt(min_margin) << " (sample seed " << argmin << ")\n";
  out << "violations = " << violations << " of " << samples << "\n";
  out << "# verdict: " << (violations ? "VIOLATED" : "PASS") << "\n";
  const int rc = write_report(out.str(), out_path);
  return rc != 0 ? rc : (violations ? 1 : 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tetracone: membership, bounds, and certificates for six-spectrum cones"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "write the report to this file instead of stdout");

  // check-tetra
  auto* ct = app.add_subcommand("check-tetra", "inequality families and distance for a tuple");
  std::string ct_tuple, ct_mode = "both";
  int ct_kmax = 8, ct_threads = 1;
  ct->add_option("--tuple", ct_tuple, "tuple file: six spectra, order a,b,c,d,e,f")->required();
  ct->add_option("--kmax", ct_kmax, "largest inequality degree")->check(CLI::PositiveNumber);
  ct->add_option("--mode", ct_mode, "inequalities|distance|both")
      ->check(CLI::IsMember({"inequalities", "distance", "both"}));
  ct->add_option("--threads", ct_threads, "worker threads for the sweep")
      ->check(CLI::PositiveNumber);

  // sixj
  auto* sj = app.add_subcommand("sixj", "coupling norms for one label");
  std::string sj_label;
  int sj_n = 2;
  sj->add_option("--label", sj_label, "six partitions 'alpha;beta;gamma;delta;epsilon;phi'")
      ->required();
  sj->add_option("--n", sj_n, "unitary group rank")->check(CLI::PositiveNumber);

  // horn
  auto* ho = app.add_subcommand("horn", "row/column families for a sum of two spectra");
  std::string ho_a, ho_b, ho_c;
  int ho_kmax = 8, ho_ckmax = 0;
  ho->add_option("--a", ho_a, "first spectrum, e.g. '[2,0]'")->required();
  ho->add_option("--b", ho_b, "second spectrum")->required();
  ho->add_option("--c", ho_c, "candidate sum spectrum")->required();
  ho->add_option("--kmax", ho_kmax, "largest degree")->check(CLI::PositiveNumber);
  ho->add_option("--coupling-kmax", ho_ckmax, "also test coupling feasibility up to this degree");

  // slice
  auto* sl = app.add_subcommand("slice", "(lc,le,lf) verdict grid at fixed (la,lb,ld)");
  double sl_la = 0, sl_lb = 0, sl_ld = 0, sl_min = 0.5, sl_max = 18.0;
  int sl_steps = 25;
  sl->add_option("--la", sl_la, "length of the a edge")->required();
  sl->add_option("--lb", sl_lb, "length of the b edge")->required();
  sl->add_option("--ld", sl_ld, "length of the d edge")->required();
  sl->add_option("--min", sl_min, "grid lower bound per axis");
  sl->add_option("--max", sl_max, "grid upper bound per axis");
  sl->add_option("--steps", sl_steps, "grid points per axis")->check(CLI::PositiveNumber);

  // symmetry
  auto* sy = app.add_subcommand("symmetry", "signed-permutation group and optional orbit check");
  std::string sy_tuple;
  sy->add_option("--tuple", sy_tuple, "optional tuple file for an orbit membership sweep");

  // asymptotics
  auto* as = app.add_subcommand("asymptotics", "sequence-label norms against degree");
  std::string as_tuple, as_k = "3,6,9,12";
  as->add_option("--tuple", as_tuple, "tuple file")->required();
  as->add_option("--k", as_k, "comma-separated degree list");

  // sample
  auto* sa = app.add_subcommand("sample", "spectrum-estimation distribution histogram");
  std::string sa_spec;
  int sa_k = 6;
  sa->add_option("--spec", sa_spec, "spectrum, e.g. '[0.6,0.4]'")->required();
  sa->add_option("--k", sa_k, "tensor-power degree")->check(CLI::PositiveNumber);

  // entropy
  auto* en = app.add_subcommand("entropy", "entropy-margin sweep over random realized tuples");
  int en_samples = 1000, en_n = 4;
  std::uint64_t en_seed = 7;
  en->add_option("--samples", en_samples, "number of random tuples")->check(CLI::PositiveNumber);
  en->add_option("--n", en_n, "matrix size")->check(CLI::PositiveNumber);
  en->add_option("--seed", en_seed, "base seed");

  // --out may appear before or after the subcommand name
  for (CLI::App* sub : {ct, sj, ho, sl, sy, as, sa, en}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (ct->parsed()) return run_check_tetra(ct_tuple, ct_kmax, ct_mode, ct_threads, out_path);
    if (sj->parsed()) return run_sixj(sj_label, sj_n, out_path);
    if (ho->parsed()) return run_horn(ho_a, ho_b, ho_c, ho_kmax, ho_ckmax, out_path);
    if (sl->parsed()) return run_slice(sl_la, sl_lb, sl_ld, sl_min, sl_max, sl_steps, out_path);
    if (sy->parsed()) return run_symmetry(sy_tuple, out_path);
    if (as->parsed()) return run_asymptotics(as_tuple, as_k, out_path);
    if (sa->parsed()) return run_sample(sa_spec, sa_k, out_path);
    if (en->parsed()) return run_entropy(en_samples, en_n, en_seed, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}
