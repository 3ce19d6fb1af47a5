#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace symcomp {

// Row-major multi-index <-> flat id over a fixed dimension vector.
// The last axis varies fastest.
struct IndexSpace {
  std::vector<std::int32_t> dims;

  IndexSpace() = default;
  explicit IndexSpace(std::vector<std::int32_t> d) : dims(std::move(d)) {}

  int rank() const { return static_cast<int>(dims.size()); }

  std::int64_t size() const {
    std::int64_t s = 1;
    for (auto d : dims) {
      if (d <= 0) return 0;
      if (s > (std::int64_t{1} << 62) / d)
        throw std::overflow_error("IndexSpace: size overflows int64");
      s *= d;
    }
    return s;
  }

  std::int64_t flatten(std::span<const std::int32_t> ix) const {
    std::int64_t id = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) id = id * dims[k] + ix[k];
    return id;
  }

  void unflatten(std::int64_t id, std::span<std::int32_t> out) const {
    for (std::size_t k = dims.size(); k-- > 0;) {
      out[k] = static_cast<std::int32_t>(id % dims[k]);
      id /= dims[k];
    }
  }

  std::vector<std::int32_t> unflatten(std::int64_t id) const {
    std::vector<std::int32_t> out(dims.size());
    unflatten(id, out);
    return out;
  }

  // Advances a multi-index in row-major order; returns false after the last one.
  bool next(std::span<std::int32_t> ix) const {
    for (std::size_t k = dims.size(); k-- > 0;) {
      if (++ix[k] < dims[k]) return true;
      ix[k] = 0;
    }
    return false;
  }
};

// Runs fn(begin, end) on up to `threads` workers over [0, total) split in
// contiguous chunks. threads <= 0 selects hardware concurrency.
inline void parallel_for(std::int64_t total, int threads,
                         const std::function<void(std::int64_t, std::int64_t)>& fn) {
  if (total <= 0) return;
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  int nw = threads <= 0 ? hw : threads;
  if (static_cast<std::int64_t>(nw) > total) nw = static_cast<int>(total);
  if (nw <= 1) {
    fn(0, total);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nw));
  std::int64_t chunk = (total + nw - 1) / nw;
  for (int w = 0; w < nw; ++w) {
    std::int64_t b = w * chunk;
    std::int64_t e = std::min(total, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto& t : pool) t.join();
}

class Stopwatch {
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();

 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  void reset() { start_ = std::chrono::steady_clock::now(); }
};

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace symcomp
