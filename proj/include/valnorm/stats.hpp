#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "valnorm/error.hpp"

namespace valnorm {

enum class StddevMode { population, sample };

inline std::string_view to_string(StddevMode m) {
  return m == StddevMode::population ? "population" : "sample";
}

inline StddevMode stddev_mode_from_string(std::string_view s) {
  if (s == "population") return StddevMode::population;
  if (s == "sample") return StddevMode::sample;
  throw Error::validation("unknown stddev mode: " + std::string(s));
}

namespace detail {

// All reductions over set-derived values fold in ascending value order so
// results are bit-stable under input reordering.
inline double sorted_fold_sum(std::span<const double> values) {
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  double acc = 0.0;
  for (double x : v) acc += x;
  return acc;
}

inline double sum_sq_dev(std::span<const double> values, double mean) {
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  double acc = 0.0;
  for (double x : v) {
    const double d = x - mean;
    acc += d * d;
  }
  return acc;
}

inline void require_finite(std::span<const double> values, const char* what) {
  for (double x : values) {
    if (!std::isfinite(x)) {
      throw Error::validation(std::string(what) + " contains a non-finite value");
    }
  }
}

}  // namespace detail

inline double mean(std::span<const double> values) {
  if (values.empty()) throw Error::validation("mean of an empty sequence");
  return detail::sorted_fold_sum(values) / static_cast<double>(values.size());
}

inline double variance(std::span<const double> values, StddevMode mode) {
  const std::size_t n = values.size();
  if (mode == StddevMode::population && n < 1)
    throw Error::validation("population variance needs n >= 1");
  if (mode == StddevMode::sample && n < 2)
    throw Error::validation("sample variance needs n >= 2");
  detail::require_finite(values, "variance input");
  const double m = mean(values);
  const double ssd = detail::sum_sq_dev(values, m);
  return mode == StddevMode::population ? ssd / static_cast<double>(n)
                                        : ssd / static_cast<double>(n - 1);
}

inline double stddev(std::span<const double> values, StddevMode mode) {
  return std::sqrt(variance(values, mode));
}

// -------------------------------------------------------------------------
// Correlation

struct PairedSample {
  std::vector<double> xs;
  std::vector<double> ys;
};

namespace detail {

inline void check_paired(const PairedSample& s) {
  if (s.xs.size() != s.ys.size())
    throw Error::validation("paired sample length mismatch");
  if (s.xs.size() < 2)
    throw Error::validation("paired sample needs n >= 2");
  require_finite(s.xs, "paired sample xs");
  require_finite(s.ys, "paired sample ys");
}

}  // namespace detail

// Product-moment coefficient. Pairs are folded in lexicographic (x, y)
// order so the result is bit-stable under pair reordering.
inline double pearson(const PairedSample& sample) {
  detail::check_paired(sample);
  const std::size_t n = sample.xs.size();
  std::vector<std::pair<double, double>> pairs(n);
  for (std::size_t i = 0; i < n; ++i) pairs[i] = {sample.xs[i], sample.ys[i]};
  std::sort(pairs.begin(), pairs.end());

  double sx = 0.0, sy = 0.0;
  for (const auto& [x, y] : pairs) sx += x;
  for (const auto& [x, y] : pairs) sy += y;
  const double mx = sx / static_cast<double>(n);
  const double my = sy / static_cast<double>(n);

  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (const auto& [x, y] : pairs) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
    syy += (y - my) * (y - my);
  }
  if (sxx == 0.0 || syy == 0.0)
    throw Error::degenerate("pearson: zero variance in a series");
  const double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

// Average ranks (1-based); ties share the mean of their positions.
inline std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

// Pearson on rank-transformed data; depends only on rank order.
inline double spearman(const PairedSample& sample) {
  detail::check_paired(sample);
  PairedSample ranked{average_ranks(sample.xs), average_ranks(sample.ys)};
  return pearson(ranked);
}

// -------------------------------------------------------------------------
// Reproducible sampling

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace detail

// Deterministic sampling source: identical (seed, stream_id) yields an
// identical sequence on every platform. The bounded draw uses rejection
// sampling, and shuffles are Fisher-Yates, because the standard library's
// distributions are not specified bit-for-bit.
class SeededSampler {
 public:
  explicit SeededSampler(std::uint64_t seed, std::uint64_t stream_id = 0)
      : engine_(detail::splitmix64(detail::splitmix64(seed) ^
                                   (stream_id * 0xA24BAED4963EE407ull))) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n); unbiased.
  std::uint64_t bounded(std::uint64_t n) {
    if (n == 0) throw Error::validation("bounded(0)");
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t x = next();
      if (x >= threshold) return x % n;
    }
  }

  // Uniform double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(bounded(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Places a uniform k-subset (without replacement) in v[0..k).
  template <class T>
  void partial_shuffle(std::vector<T>& v, std::size_t k) {
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < k && i + 1 < n; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(bounded(n - i));
      std::swap(v[i], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace valnorm
