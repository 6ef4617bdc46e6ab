#pragma once

// Memoization layer for recoupling norms.  Norm computations dominate the
// runtime of inequality sweeps, and the same (n, label) pairs recur across
// tuples, degrees, and CLI invocations, so results are cached in memory and —
// when TETRACONE_CACHE_DIR is set — appended to a TSV file shared between
// processes.  Writes are idempotent (a key always maps to the same value), so
// concurrent appends of identical keys are harmless; the file is protected
// with an advisory lock while a line is written.

#include <cstdio>
#include <cstdlib>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#ifdef __unix__
#include <sys/file.h>
#include <unistd.h>
#endif

#include "tetracone/core.hpp"
#include "tetracone/schurweyl.hpp"

namespace tetracone {

struct SixJCacheStats {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::uint64_t loaded_from_disk = 0;
};

class SixJCache {
 public:
  // dir = "" keeps the cache memory-only.
  explicit SixJCache(std::string dir = "") {
    if (!dir.empty()) path_ = dir + "/sixj_norms_v1.tsv";
    load_disk();
  }

  SixJNorms get(const SixJLabel& L, int n, std::int64_t dim_cap = default_dense_dim_cap) {
    const std::string key = sixj_label_to_string(L);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = map_.find({n, key});
      if (it != map_.end()) {
        ++stats_.hits;
        return it->second;
      }
      ++stats_.misses;
    }
    const SixJNorms norms = sixj_norms(L, n, dim_cap);
    {
      std::lock_guard<std::mutex> lock(mu_);
      const bool inserted = map_.emplace(std::make_pair(n, key), norms).second;
      if (inserted && !path_.empty()) append_disk(n, key, norms);
    }
    return norms;
  }

  SixJCacheStats stats() const {
    std::lock_guard<std::mutex> lock(mu_);
    return stats_;
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
  }

  const std::string& disk_path() const { return path_; }

 private:
  void load_disk() {
    if (path_.empty()) return;
    std::FILE* f = std::fopen(path_.c_str(), "r");
    if (!f) return;  // nothing cached yet
    char buf[1024];
    while (std::fgets(buf, sizeof(buf), f)) {
      int n = 0, dim = 0;
      char label[512];
      double inf = 0.0, two = 0.0;
      unsigned long long rl = 0, rr = 0;
      if (std::sscanf(buf, "%d\t%511[^\t]\t%lf\t%lf\t%llu\t%llu\t%d", &n, label, &inf, &two, &rl,
                      &rr, &dim) == 7) {
        SixJNorms norms;
        norms.inf_norm = inf;
        norms.two_norm_sq = two;
        norms.rank_left = rl;
        norms.rank_right = rr;
        norms.dim_compressed = dim;
        if (map_.emplace(std::make_pair(n, std::string(label)), norms).second)
          ++stats_.loaded_from_disk;
      }
    }
    std::fclose(f);
  }

  void append_disk(int n, const std::string& key, const SixJNorms& norms) {
    std::FILE* f = std::fopen(path_.c_str(), "a");
    if (!f) return;  // cache directory vanished; stay memory-only
#ifdef __unix__
    flock(fileno(f), LOCK_EX);
#endif
    std::fprintf(f, "%d\t%s\t%.17g\t%.17g\t%llu\t%llu\t%d\n", n, key.c_str(), norms.inf_norm,
                 norms.two_norm_sq, static_cast<unsigned long long>(norms.rank_left),
                 static_cast<unsigned long long>(norms.rank_right), norms.dim_compressed);
    std::fflush(f);
#ifdef __unix__
    flock(fileno(f), LOCK_UN);
#endif
    std::fclose(f);
  }

  mutable std::mutex mu_;
  std::map<std::pair<int, std::string>, SixJNorms> map_;
  SixJCacheStats stats_;
  std::string path_;
};

// Process-wide cache honoring TETRACONE_CACHE_DIR.
inline SixJCache& global_sixj_cache() {
  static SixJCache cache([] {
    const char* dir = std::getenv("TETRACONE_CACHE_DIR");
    return std::string(dir ? dir : "");
  }());
  return cache;
}

inline SixJNorms cached_sixj_norms(const SixJLabel& L, int n,
                                   std::int64_t dim_cap = default_dense_dim_cap) {
  return global_sixj_cache().get(L, n, dim_cap);
}

}  // namespace tetracone
