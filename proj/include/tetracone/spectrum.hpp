#pragma once
// spectrum.hpp — ordered eigenvalue lists and six-slot tuples (a,b,c,d,e,f), with
// the trace conditions Tr c = Tr a + Tr b, Tr f = Tr b + Tr d, Tr e = Tr c + Tr d.

#include <array>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tetracone/core.hpp"

namespace tetracone {

using Spectrum = std::vector<double>;

inline bool is_descending(const Spectrum& x) {
  for (std::size_t i = 1; i < x.size(); ++i)
    if (x[i] > x[i - 1]) return false;
  return true;
}

inline void check_spectrum(const Spectrum& x) {
  if (!is_descending(x)) throw std::invalid_argument("spectrum must be weakly decreasing");
}

inline void check_nonnegative(const Spectrum& x) {
  check_spectrum(x);
  if (!x.empty() && x.back() < 0.0) throw std::invalid_argument("spectrum must be non-negative here");
}

inline double trace(const Spectrum& x) { return std::accumulate(x.begin(), x.end(), 0.0); }

// "[5.0,0.0]" — always with a decimal point so the format round-trips as reals.
inline std::string spectrum_to_string(const Spectrum& x) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ',';
    std::string v = fmt12(x[i]);
    if (v.find('.') == std::string::npos && v.find('e') == std::string::npos &&
        v.find("inf") == std::string::npos && v.find("nan") == std::string::npos)
      v += ".0";
    s += v;
  }
  s += ']';
  return s;
}

inline Spectrum parse_spectrum(const std::string& s) {
  std::size_t a = s.find('[');
  std::size_t b = s.rfind(']');
  if (a == std::string::npos || b == std::string::npos || b < a)
    throw std::invalid_argument("spectrum syntax: expected [v1,v2,...]");
  Spectrum x;
  std::string body = s.substr(a + 1, b - a - 1);
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t l = tok.find_first_not_of(" \t");
    if (l == std::string::npos) continue;
    std::size_t r = tok.find_last_not_of(" \t");
    x.push_back(std::stod(tok.substr(l, r - l + 1)));
  }
  check_spectrum(x);
  return x;
}

// Six eigenvalue lists with the additive constraints of the tetrahedron:
// c ~ A+B, f ~ B+D, e ~ A+B+D for Hermitian A, B, D.
struct SpectrumTuple {
  Spectrum a, b, c, d, e, f;

  const Spectrum& slot(int i) const {
    switch (i) {
      case 0: return a;
      case 1: return b;
      case 2: return c;
      case 3: return d;
      case 4: return e;
      case 5: return f;
    }
    throw std::out_of_range("slot index must be 0..5");
  }
  Spectrum& slot(int i) { return const_cast<Spectrum&>(static_cast<const SpectrumTuple*>(this)->slot(i)); }

  int n() const { return static_cast<int>(a.size()); }
};

inline const char* slot_name(int i) {
  static const char* names[6] = {"a", "b", "c", "d", "e", "f"};
  if (i < 0 || i > 5) throw std::out_of_range("slot index must be 0..5");
  return names[i];
}

inline void check_tuple(const SpectrumTuple& t) {
  std::size_t n = t.a.size();
  if (n == 0) throw std::invalid_argument("tuple slots must be non-empty");
  for (int i = 0; i < 6; ++i) {
    if (t.slot(i).size() != n) throw std::invalid_argument("all six slots must have equal length");
    check_spectrum(t.slot(i));
  }
}

// Residuals of the three trace conditions (c-a-b, f-b-d, e-c-d).
inline std::array<double, 3> trace_residuals(const SpectrumTuple& t) {
  return {trace(t.c) - trace(t.a) - trace(t.b), trace(t.f) - trace(t.b) - trace(t.d),
          trace(t.e) - trace(t.c) - trace(t.d)};
}

inline bool traces_consistent(const SpectrumTuple& t, double tol = 1e-9) {
  double scale = std::max(1.0, std::fabs(trace(t.e)));
  for (double r : trace_residuals(t))
    if (std::fabs(r) > tol * scale) return false;
  return true;
}

// Tuple file: six lines, one spectrum per line, order a, b, c, d, e, f.
// Blank lines and lines starting with '#' are ignored.
inline SpectrumTuple parse_tuple_lines(const std::vector<std::string>& lines) {
  std::vector<Spectrum> slots;
  for (const auto& line : lines) {
    std::size_t l = line.find_first_not_of(" \t\r\n");
    if (l == std::string::npos || line[l] == '#') continue;
    slots.push_back(parse_spectrum(line));
  }
  if (slots.size() != 6) throw std::invalid_argument("tuple file must contain exactly six spectra (a,b,c,d,e,f)");
  SpectrumTuple t{slots[0], slots[1], slots[2], slots[3], slots[4], slots[5]};
  check_tuple(t);
  return t;
}

inline SpectrumTuple read_tuple_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tuple file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return parse_tuple_lines(lines);
}

inline std::string tuple_to_string(const SpectrumTuple& t) {
  std::string s;
  for (int i = 0; i < 6; ++i) {
    s += spectrum_to_string(t.slot(i));
    s += '\n';
  }
  return s;
}

}  // namespace tetracone
