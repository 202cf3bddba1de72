#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valnorm/association.hpp"
#include "valnorm/error.hpp"
#include "valnorm/parallel.hpp"
#include "valnorm/stats.hpp"
#include "valnorm/valence.hpp"
#include "valnorm/vectorspace.hpp"

namespace valnorm {

// -------------------------------------------------------------------------
// Cross-run effect-size variance

struct VarianceReport {
  std::string bias_name;
  std::vector<std::pair<std::string, double>> runs;  // label -> effect size
  double variance = 0.0;
  StddevMode mode = StddevMode::population;
};

inline VarianceReport aggregate_variance(
    std::string bias_name, const std::vector<std::pair<std::string, AssociationResult>>& results,
    StddevMode mode = StddevMode::population) {
  if (results.size() < 2)
    throw Error::validation("variance aggregation needs at least 2 results");
  VarianceReport report;
  report.bias_name = std::move(bias_name);
  report.mode = mode;
  std::vector<double> values;
  values.reserve(results.size());
  for (const auto& [label, res] : results) {
    report.runs.emplace_back(label, res.effect_size);
    values.push_back(res.effect_size);
  }
  report.variance = variance(values, mode);
  return report;
}

// -------------------------------------------------------------------------
// Timeline sweeps (historical slices, corpus-size bins)

struct TimelineSliceSpec {
  std::string label;
  std::string path;
  EmbeddingFormat format = EmbeddingFormat::auto_detect;
};

struct TimelineSlice {
  std::string label;
  std::optional<double> pearson_rho;   // absent: slice had < 2 correlatable words
  std::optional<double> spearman_rho;
  std::size_t n_present = 0;
  std::string note;  // why a slice is null
};

struct TimelineReport {
  std::vector<TimelineSlice> slices;  // ordered by label
  std::optional<double> variance_pearson;
  std::optional<double> variance_spearman;
  StddevMode variance_mode = StddevMode::population;
};

// Runs the valence evaluation per slice and aggregates the correlation
// variance across slices. A slice that fails to load aborts with its label;
// a slice with too few correlatable words is recorded as null and excluded
// from the variance.
inline TimelineReport run_timeline(std::vector<TimelineSliceSpec> slices,
                                   const ValenceLexicon& lexicon, const WordSet& pleasant,
                                   const WordSet& unpleasant, const LookupPolicy& policy,
                                   const std::optional<PValueConfig>& pcfg, StddevMode mode,
                                   StddevMode variance_mode = StddevMode::population,
                                   unsigned threads = 1) {
  if (slices.empty()) throw Error::validation("timeline needs at least one slice");
  std::sort(slices.begin(), slices.end(),
            [](const TimelineSliceSpec& a, const TimelineSliceSpec& b) {
              return a.label < b.label;
            });

  TimelineReport report;
  report.variance_mode = variance_mode;
  report.slices.resize(slices.size());

  detail::parallel_for(slices.size(), threads, [&](std::size_t i) {
    const TimelineSliceSpec& spec = slices[i];
    TimelineSlice& out = report.slices[i];
    out.label = spec.label;
    EmbeddingSet embeddings = [&] {
      try {
        return load_embeddings(spec.path, spec.format);
      } catch (const Error& e) {
        throw Error(e.kind(), "slice '" + spec.label + "': " + e.what());
      }
    }();
    try {
      // Slices are independent runs; per-word streams stay keyed by lexicon
      // index inside each slice.
      const ValNormReport r =
          run_valnorm(embeddings, lexicon, pleasant, unpleasant, policy, pcfg, mode, 1);
      out.pearson_rho = r.pearson_rho;
      out.spearman_rho = r.spearman_rho;
      out.n_present = r.n_present;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::io) throw;
      out.note = e.what();  // recorded as a null slice
    }
  });

  std::vector<double> ps, ss;
  for (const TimelineSlice& s : report.slices) {
    if (s.pearson_rho) ps.push_back(*s.pearson_rho);
    if (s.spearman_rho) ss.push_back(*s.spearman_rho);
  }
  const std::size_t need = variance_mode == StddevMode::population ? 1 : 2;
  if (ps.size() >= need) report.variance_pearson = variance(ps, variance_mode);
  if (ss.size() >= need) report.variance_spearman = variance(ss, variance_mode);
  return report;
}

}  // namespace valnorm
