#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "valnorm/error.hpp"
#include "valnorm/stats.hpp"
#include "valnorm/unicode.hpp"
#include "valnorm/vectorspace.hpp"

namespace valnorm {

// -------------------------------------------------------------------------
// Word sets and resolution

// Named, ordered, deduplicated stimulus list. Sets with fewer than 8 words
// are flagged, not rejected.
struct WordSet {
  static constexpr std::size_t kMinStimuli = 8;

  std::string name;
  std::string language;
  std::vector<std::string> words;  // NFC, insertion order, unique
  std::uint64_t duplicates_collapsed = 0;

  bool meets_minimum() const noexcept { return words.size() >= kMinStimuli; }
};

inline WordSet make_word_set(std::string name, std::string language,
                             std::span<const std::string> raw) {
  WordSet set;
  set.name = std::move(name);
  set.language = std::move(language);
  for (const std::string& r : raw) {
    std::string w = nfc(trim(r));
    if (w.empty()) continue;
    if (std::find(set.words.begin(), set.words.end(), w) != set.words.end()) {
      ++set.duplicates_collapsed;
      continue;
    }
    set.words.push_back(std::move(w));
  }
  if (set.words.empty())
    throw Error::validation("word set '" + set.name + "' is empty");
  return set;
}

struct ResolvedSet {
  WordSet origin;
  std::vector<std::pair<std::string, std::vector<double>>> found;
  std::vector<std::string> missing;
};

// Deterministic found/missing partition, preserving set order. Absence is
// counted, never an error.
inline ResolvedSet resolve(const WordSet& set, const EmbeddingSet& embeddings,
                           const LookupPolicy& policy) {
  ResolvedSet r;
  r.origin = set;
  for (const std::string& w : set.words) {
    if (auto vec = lookup(embeddings, w, policy)) {
      r.found.emplace_back(w, std::move(*vec));
    } else {
      r.missing.push_back(w);
    }
  }
  return r;
}

using VectorList = std::vector<std::vector<double>>;

inline VectorList vectors_of(const ResolvedSet& r) {
  VectorList v;
  v.reserve(r.found.size());
  for (const auto& [word, vec] : r.found) v.push_back(vec);
  return v;
}

// -------------------------------------------------------------------------
// Effect sizes

namespace detail {

inline std::vector<double> cosines_to(std::span<const double> w, const VectorList& vs) {
  std::vector<double> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(cosine(w, v));
  return out;
}

inline std::vector<double> concat(std::span<const double> a, std::span<const double> b) {
  std::vector<double> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace detail

// s(w, A, B): mean cosine of w with A minus mean cosine of w with B.
inline double association_score(std::span<const double> w, const VectorList& A,
                                const VectorList& B) {
  if (A.empty() || B.empty())
    throw Error::validation("association score: empty attribute side");
  const std::vector<double> ca = detail::cosines_to(w, A);
  const std::vector<double> cb = detail::cosines_to(w, B);
  return mean(ca) - mean(cb);
}

// Cohen's d of a single word's cosines across the two attribute sets;
// denominator is the stddev over the concatenation of A and B (duplicates
// kept).
inline double sc_weat_effect_size(std::span<const double> w, const VectorList& A,
                                  const VectorList& B, StddevMode mode) {
  if (A.empty() || B.empty())
    throw Error::validation("sc-weat: empty attribute side");
  if (A.size() + B.size() < 2)
    throw Error::validation("sc-weat: need at least two attribute vectors");
  const std::vector<double> ca = detail::cosines_to(w, A);
  const std::vector<double> cb = detail::cosines_to(w, B);
  const double denom = stddev(detail::concat(ca, cb), mode);
  if (denom == 0.0)
    throw Error::degenerate("sc-weat: degenerate denominator (all cosines equal)");
  return (mean(ca) - mean(cb)) / denom;
}

// Cohen's d of per-target association scores; denominator is the stddev
// over the concatenation of X and Y scores.
inline double weat_effect_size(const VectorList& X, const VectorList& Y, const VectorList& A,
                               const VectorList& B, StddevMode mode) {
  if (X.empty() || Y.empty()) throw Error::validation("weat: empty target side");
  if (A.empty() || B.empty()) throw Error::validation("weat: empty attribute side");
  if (X.size() + Y.size() < 2)
    throw Error::validation("weat: need at least two target vectors");
  std::vector<double> sx;
  sx.reserve(X.size());
  for (const auto& x : X) sx.push_back(association_score(x, A, B));
  std::vector<double> sy;
  sy.reserve(Y.size());
  for (const auto& y : Y) sy.push_back(association_score(y, A, B));
  const double denom = stddev(detail::concat(sx, sy), mode);
  if (denom == 0.0)
    throw Error::degenerate("weat: degenerate denominator (all association scores equal)");
  return (mean(sx) - mean(sy)) / denom;
}

// -------------------------------------------------------------------------
// Permutation-test p-values

enum class PStrategy { none, exact, monte_carlo, normal_approx };

inline std::string_view to_string(PStrategy s) {
  switch (s) {
    case PStrategy::none: return "none";
    case PStrategy::exact: return "exact";
    case PStrategy::monte_carlo: return "monte-carlo";
    case PStrategy::normal_approx: return "normal-approx";
  }
  return "none";
}

enum class PStrategyRequest { auto_select, exact, monte_carlo, normal_approx };

inline std::string_view to_string(PStrategyRequest s) {
  switch (s) {
    case PStrategyRequest::auto_select: return "auto";
    case PStrategyRequest::exact: return "exact";
    case PStrategyRequest::monte_carlo: return "monte-carlo";
    case PStrategyRequest::normal_approx: return "normal-approx";
  }
  return "auto";
}

inline PStrategyRequest p_strategy_request_from_string(std::string_view s) {
  if (s == "auto") return PStrategyRequest::auto_select;
  if (s == "exact") return PStrategyRequest::exact;
  if (s == "monte-carlo" || s == "mc") return PStrategyRequest::monte_carlo;
  if (s == "normal-approx" || s == "normal") return PStrategyRequest::normal_approx;
  throw Error::validation("unknown p-value strategy: " + std::string(s));
}

struct PValueConfig {
  PStrategyRequest strategy = PStrategyRequest::auto_select;
  std::uint64_t max_exact_partitions = 200000;
  std::uint64_t mc_samples = 100000;
  std::uint64_t normal_fit_samples = 10000;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

struct PValueDetail {
  std::uint64_t partitions = 0;  // exact: C(n, m), original partition included
  std::uint64_t exceed = 0;      // statistics strictly greater than observed
  std::uint64_t ties = 0;        // exact only: statistics exactly equal
  std::uint64_t samples = 0;     // monte-carlo draws or normal-fit draws
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
  double null_mean = 0.0;        // normal-approx fit
  double null_sd = 0.0;
  std::string fit_source;        // "enumerated" | "sampled"
};

struct AssociationCounts {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t a = 0;
  std::size_t b = 0;
};

// Interpretation thresholds reported alongside every result.
inline constexpr double kLargeEffectThreshold = 0.80;
inline constexpr double kSignificantP = 0.05;

struct AssociationResult {
  double effect_size = 0.0;
  std::optional<double> p_value;
  PStrategy p_strategy = PStrategy::none;
  PValueDetail p_detail;
  AssociationCounts counts;
  StddevMode stddev_mode = StddevMode::sample;

  bool large_effect() const { return std::abs(effect_size) >= kLargeEffectThreshold; }
  std::optional<bool> significant() const {
    if (!p_value) return std::nullopt;
    return *p_value <= kSignificantP || *p_value >= 1.0 - kSignificantP;
  }
};

namespace detail {

// C(n, k), saturating at max().
inline std::uint64_t binomial_saturated(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  constexpr unsigned __int128 kCap = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > kCap) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(c);
}

// Pooled permutation problem. The pool is value-sorted so every subset sum
// folds in ascending order, which keeps enumeration counts bit-stable under
// input reordering.
struct PermutationInput {
  std::vector<double> pool;  // ascending
  double total = 0.0;
  double stat_obs = 0.0;
  std::size_t m1 = 0;
  std::size_t m2 = 0;
};

inline double partition_stat(double subset_sum, std::size_t m1, std::size_t m2,
                             double total) {
  return subset_sum / static_cast<double>(m1) -
         (total - subset_sum) / static_cast<double>(m2);
}

inline PermutationInput make_permutation_input(std::span<const double> group1,
                                               std::span<const double> group2) {
  PermutationInput in;
  in.m1 = group1.size();
  in.m2 = group2.size();
  std::vector<double> g1(group1.begin(), group1.end());
  std::sort(g1.begin(), g1.end());
  double s_obs = 0.0;
  for (double v : g1) s_obs += v;

  in.pool.assign(group1.begin(), group1.end());
  in.pool.insert(in.pool.end(), group2.begin(), group2.end());
  std::sort(in.pool.begin(), in.pool.end());
  for (double v : in.pool) in.total += v;
  in.stat_obs = partition_stat(s_obs, in.m1, in.m2, in.total);
  return in;
}

struct NullCounts {
  std::uint64_t exceed = 0;
  std::uint64_t ties = 0;
  std::uint64_t total = 0;
};

// Visits every size-m1 index subset of the sorted pool. Subset sums are
// recomputed fresh per combination (ascending index = ascending value).
inline NullCounts enumerate_partitions(const PermutationInput& in,
                                       std::vector<double>* collect = nullptr) {
  const std::size_t n = in.pool.size();
  const std::size_t k = in.m1;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  NullCounts out;
  for (;;) {
    double s = 0.0;
    for (std::size_t i = 0; i < k; ++i) s += in.pool[c[i]];
    const double stat = partition_stat(s, in.m1, in.m2, in.total);
    if (stat > in.stat_obs) ++out.exceed;
    else if (stat == in.stat_obs) ++out.ties;
    ++out.total;
    if (collect) collect->push_back(stat);

    // next combination in lexicographic order
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

inline NullCounts sample_partitions(const PermutationInput& in, std::uint64_t samples,
                                    SeededSampler& rng,
                                    std::vector<double>* collect = nullptr) {
  const std::size_t n = in.pool.size();
  std::vector<std::uint32_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<std::uint32_t>(i);
  std::vector<std::uint32_t> chosen(in.m1);
  NullCounts out;
  for (std::uint64_t t = 0; t < samples; ++t) {
    rng.partial_shuffle(idx, in.m1);
    std::copy(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(in.m1), chosen.begin());
    std::sort(chosen.begin(), chosen.end());
    double s = 0.0;
    for (std::uint32_t i : chosen) s += in.pool[i];
    const double stat = partition_stat(s, in.m1, in.m2, in.total);
    if (stat > in.stat_obs) ++out.exceed;
    else if (stat == in.stat_obs) ++out.ties;
    ++out.total;
    if (collect) collect->push_back(stat);
  }
  return out;
}

inline double upper_tail_normal(double z) {
  return 0.5 * std::erfc(z / std::sqrt(2.0));
}

// Pessimistic upward rounding at four decimal places.
inline double round_up_4dp(double p) {
  const double r = std::ceil(p * 10000.0) / 10000.0;
  return std::clamp(r, 0.0, 1.0);
}

inline AssociationResult run_permutation_test(double effect_size,
                                              std::span<const double> group1,
                                              std::span<const double> group2,
                                              const PValueConfig& cfg, StddevMode mode,
                                              AssociationCounts counts) {
  AssociationResult result;
  result.effect_size = effect_size;
  result.counts = counts;
  result.stddev_mode = mode;

  const PermutationInput in = make_permutation_input(group1, group2);
  const bool equal_sizes = in.m1 == in.m2;
  const std::uint64_t partitions =
      binomial_saturated(in.m1 + in.m2, in.m1);
  const bool exact_feasible = equal_sizes && partitions <= cfg.max_exact_partitions;

  PStrategy strategy;
  switch (cfg.strategy) {
    case PStrategyRequest::auto_select:
      strategy = exact_feasible ? PStrategy::exact : PStrategy::monte_carlo;
      break;
    case PStrategyRequest::exact:
      if (!equal_sizes)
        throw Error::validation("exact p-value requires equal-sized sets (" +
                                std::to_string(in.m1) + " vs " + std::to_string(in.m2) + ")");
      if (partitions > cfg.max_exact_partitions)
        throw Error::validation("exact p-value infeasible: C(" +
                                std::to_string(in.m1 + in.m2) + "," + std::to_string(in.m1) +
                                ") = " + std::to_string(partitions) + " exceeds limit " +
                                std::to_string(cfg.max_exact_partitions));
      strategy = PStrategy::exact;
      break;
    case PStrategyRequest::monte_carlo:
      strategy = PStrategy::monte_carlo;
      break;
    case PStrategyRequest::normal_approx:
      strategy = PStrategy::normal_approx;
      break;
  }

  result.p_strategy = strategy;
  result.p_detail.seed = cfg.seed;
  result.p_detail.stream_id = cfg.stream_id;

  switch (strategy) {
    case PStrategy::exact: {
      const NullCounts nc = enumerate_partitions(in);
      result.p_detail.partitions = nc.total;
      result.p_detail.exceed = nc.exceed;
      result.p_detail.ties = nc.ties;
      result.p_value = static_cast<double>(nc.exceed) / static_cast<double>(nc.total);
      break;
    }
    case PStrategy::monte_carlo: {
      SeededSampler rng(cfg.seed, cfg.stream_id);
      const NullCounts nc = sample_partitions(in, cfg.mc_samples, rng);
      result.p_detail.samples = nc.total;
      result.p_detail.exceed = nc.exceed;
      result.p_value = static_cast<double>(nc.exceed) / static_cast<double>(nc.total);
      break;
    }
    case PStrategy::normal_approx: {
      std::vector<double> null_stats;
      if (exact_feasible) {
        null_stats.reserve(partitions);
        enumerate_partitions(in, &null_stats);
        result.p_detail.fit_source = "enumerated";
        result.p_detail.samples = null_stats.size();
        result.p_detail.null_mean = mean(null_stats);
        result.p_detail.null_sd = stddev(null_stats, StddevMode::population);
      } else {
        null_stats.reserve(cfg.normal_fit_samples);
        SeededSampler rng(cfg.seed, cfg.stream_id);
        sample_partitions(in, cfg.normal_fit_samples, rng, &null_stats);
        result.p_detail.fit_source = "sampled";
        result.p_detail.samples = null_stats.size();
        result.p_detail.null_mean = mean(null_stats);
        result.p_detail.null_sd = stddev(null_stats, StddevMode::sample);
      }
      if (result.p_detail.null_sd == 0.0)
        throw Error::degenerate("normal-approx: null distribution has zero spread");
      const double z = (in.stat_obs - result.p_detail.null_mean) / result.p_detail.null_sd;
      result.p_value = round_up_4dp(upper_tail_normal(z));
      break;
    }
    case PStrategy::none:
      break;
  }
  return result;
}

}  // namespace detail

// One-sided permutation test over target re-partitions: the statistic is
// the difference of group means of per-target association scores, which
// orders partitions identically to the effect size (the pooled denominator
// is partition-invariant). Strict '>' counting; the original partition is
// part of the enumerated null, so an exact p may be 0.
inline AssociationResult weat_p_value(const VectorList& X, const VectorList& Y,
                                      const VectorList& A, const VectorList& B,
                                      const PValueConfig& cfg, StddevMode mode) {
  const double es = weat_effect_size(X, Y, A, B, mode);
  std::vector<double> sx;
  sx.reserve(X.size());
  for (const auto& x : X) sx.push_back(association_score(x, A, B));
  std::vector<double> sy;
  sy.reserve(Y.size());
  for (const auto& y : Y) sy.push_back(association_score(y, A, B));
  return detail::run_permutation_test(es, sx, sy, cfg, mode,
                                      {X.size(), Y.size(), A.size(), B.size()});
}

// One-sided permutation test over attribute re-partitions; the statistic is
// s(w, A_i, B_i).
inline AssociationResult sc_weat_p_value(std::span<const double> w, const VectorList& A,
                                         const VectorList& B, const PValueConfig& cfg,
                                         StddevMode mode) {
  const double es = sc_weat_effect_size(w, A, B, mode);
  const std::vector<double> ca = detail::cosines_to(w, A);
  const std::vector<double> cb = detail::cosines_to(w, B);
  return detail::run_permutation_test(es, ca, cb, cfg, mode, {1, 0, A.size(), B.size()});
}

// Effect-size-only variants (p_strategy = none) for the --no-pvalue path.
inline AssociationResult weat_result(const VectorList& X, const VectorList& Y,
                                     const VectorList& A, const VectorList& B,
                                     const std::optional<PValueConfig>& cfg,
                                     StddevMode mode) {
  if (cfg) return weat_p_value(X, Y, A, B, *cfg, mode);
  AssociationResult r;
  r.effect_size = weat_effect_size(X, Y, A, B, mode);
  r.counts = {X.size(), Y.size(), A.size(), B.size()};
  r.stddev_mode = mode;
  return r;
}

inline AssociationResult sc_weat_result(std::span<const double> w, const VectorList& A,
                                        const VectorList& B,
                                        const std::optional<PValueConfig>& cfg,
                                        StddevMode mode) {
  if (cfg) return sc_weat_p_value(w, A, B, *cfg, mode);
  AssociationResult r;
  r.effect_size = sc_weat_effect_size(w, A, B, mode);
  r.counts = {1, 0, A.size(), B.size()};
  r.stddev_mode = mode;
  return r;
}

}  // namespace valnorm
