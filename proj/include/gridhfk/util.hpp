// Small shared helpers: cyclic arithmetic, half-integer formatting,
// deterministic thread-pool map.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gridhfk {

// (a - b) mod n in [0, n).  Works for any ints with |a|,|b| modest.
inline int cyc(int a, int n) {
  int r = a % n;
  return r < 0 ? r + n : r;
}

// Formats a doubled value (v = 2*q) as the rational q: "3", "-1/2", ...
std::string doubled_to_string(long long doubled);

// Number of worker threads to use: min(requested cap, hardware).  The cap is
// read from the GRIDHFK_THREADS environment variable (>=1); absent or
// malformed means 1 (fully serial, always deterministic).
unsigned worker_count();

// Deterministic parallel map: evaluates fn(i) for i in [0, count) using up to
// worker_count() threads on contiguous blocks.  fn must only write to
// per-index state; results are observed in index order by the caller.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace gridhfk
