// Shared helpers: rational formatting, deterministic worker pool.

#include "gridhfk/util.hpp"

#include <cstdlib>
#include <string>
#include <thread>

#include "gridhfk/errors.hpp"

namespace gridhfk {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "syntax";
    case ErrorCode::Validation: return "validation";
    case ErrorCode::IllegalMove: return "illegal-move";
    case ErrorCode::LimitExceeded: return "limit-exceeded";
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::NotAKnot: return "not-a-knot";
    case ErrorCode::NotACommutationPair: return "not-a-commutation-pair";
    case ErrorCode::UnsupportedType: return "unsupported-type";
    case ErrorCode::CycleCheckFailed: return "cycle-check-failed";
  }
  return "unknown";
}

std::string doubled_to_string(long long doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

unsigned worker_count() {
  unsigned cap = 1;
  if (const char* env = std::getenv("GRIDHFK_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 1024)
      cap = static_cast<unsigned>(v);
  }
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  return std::min(cap, hw);
}

void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& fn) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(worker_count(), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      // Contiguous blocks keep the work assignment deterministic.
      const std::size_t lo = count * w / workers;
      const std::size_t hi = count * (w + 1) / workers;
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace gridhfk
