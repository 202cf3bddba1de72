#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "valnorm/association.hpp"
#include "valnorm/evalsuite.hpp"
#include "valnorm/reports.hpp"
#include "valnorm/valence.hpp"
#include "valnorm/version.hpp"

namespace valnorm {

using json = nlohmann::ordered_json;

namespace detail {

// Shortest round-trip decimal representation, same as the JSON dump.
inline std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline json opt_json(const std::optional<double>& v) {
  if (v) return *v;
  return nullptr;
}

}  // namespace detail

inline json json_of(const LookupPolicy& p) {
  return json{{"case_fallback", p.case_fallback},
              {"multiword", std::string(to_string(p.multiword))},
              {"unicode_normalize", p.unicode_normalize}};
}

inline json json_of(const PValueConfig& cfg) {
  return json{{"strategy", std::string(to_string(cfg.strategy))},
              {"max_exact_partitions", cfg.max_exact_partitions},
              {"mc_samples", cfg.mc_samples},
              {"normal_fit_samples", cfg.normal_fit_samples},
              {"seed", cfg.seed}};
}

inline json json_of(const AssociationResult& r) {
  json detail = json::object();
  switch (r.p_strategy) {
    case PStrategy::exact:
      detail["partitions"] = r.p_detail.partitions;
      detail["exceed"] = r.p_detail.exceed;
      detail["ties"] = r.p_detail.ties;
      break;
    case PStrategy::monte_carlo:
      detail["samples"] = r.p_detail.samples;
      detail["exceed"] = r.p_detail.exceed;
      detail["seed"] = r.p_detail.seed;
      detail["stream_id"] = r.p_detail.stream_id;
      break;
    case PStrategy::normal_approx:
      detail["fit_source"] = r.p_detail.fit_source;
      detail["samples"] = r.p_detail.samples;
      detail["null_mean"] = r.p_detail.null_mean;
      detail["null_sd"] = r.p_detail.null_sd;
      detail["seed"] = r.p_detail.seed;
      detail["stream_id"] = r.p_detail.stream_id;
      break;
    case PStrategy::none:
      break;
  }
  json significance{{"large_effect", r.large_effect()}};
  if (auto s = r.significant()) significance["significant"] = *s;
  else significance["significant"] = nullptr;

  return json{{"effect_size", r.effect_size},
              {"p_value", detail::opt_json(r.p_value)},
              {"p_strategy", std::string(to_string(r.p_strategy))},
              {"p_detail", detail},
              {"counts", json{{"x", r.counts.x}, {"y", r.counts.y},
                              {"a", r.counts.a}, {"b", r.counts.b}}},
              {"significance", significance},
              {"thresholds", json{{"large_effect_abs_d", kLargeEffectThreshold},
                                  {"significant_p", kSignificantP}}},
              {"stddev_mode", std::string(to_string(r.stddev_mode))}};
}

// Reads back a result written by json_of; accepts a full report envelope or
// a bare result object.
inline AssociationResult association_result_from_json(const json& doc) {
  const json& r = doc.contains("result") ? doc.at("result") : doc;
  if (!r.contains("effect_size"))
    throw Error::parse("not an association result: missing effect_size");
  AssociationResult out;
  out.effect_size = r.at("effect_size").get<double>();
  if (r.contains("p_value") && !r.at("p_value").is_null())
    out.p_value = r.at("p_value").get<double>();
  if (r.contains("stddev_mode"))
    out.stddev_mode = stddev_mode_from_string(r.at("stddev_mode").get<std::string>());
  if (r.contains("counts")) {
    const json& c = r.at("counts");
    out.counts = {c.value("x", std::size_t{0}), c.value("y", std::size_t{0}),
                  c.value("a", std::size_t{0}), c.value("b", std::size_t{0})};
  }
  if (r.contains("p_strategy")) {
    const std::string s = r.at("p_strategy").get<std::string>();
    if (s == "exact") out.p_strategy = PStrategy::exact;
    else if (s == "monte-carlo") out.p_strategy = PStrategy::monte_carlo;
    else if (s == "normal-approx") out.p_strategy = PStrategy::normal_approx;
    else out.p_strategy = PStrategy::none;
  }
  return out;
}

inline json json_of(const ValNormReport& r) {
  json records = json::array();
  for (const auto& rec : r.records) {
    records.push_back(json{{"word", rec.word},
                           {"effect_size", rec.effect_size},
                           {"p_value", detail::opt_json(rec.p_value)},
                           {"human_score", rec.human_score}});
  }
  json cfg{{"policy", json_of(r.policy)},
           {"stddev_mode", std::string(to_string(r.stddev_mode))},
           {"threads", r.threads}};
  cfg["pvalue"] = r.pvalue_config ? json_of(*r.pvalue_config) : json(nullptr);
  return json{{"lexicon", json{{"name", r.lexicon_name}, {"language", r.lexicon_language}}},
              {"embedding_source", r.embedding_source},
              {"n_present", r.n_present},
              {"n_missing", r.n_missing},
              {"missing", r.missing},
              {"skipped_degenerate", r.skipped_degenerate},
              {"pearson_rho", r.pearson_rho},
              {"spearman_rho", r.spearman_rho},
              {"attributes",
               json{{"pleasant_found", r.pleasant_found},
                    {"unpleasant_found", r.unpleasant_found},
                    {"pleasant_missing", r.pleasant_missing},
                    {"unpleasant_missing", r.unpleasant_missing},
                    {"below_minimum", r.attributes_below_minimum}}},
              {"config", cfg},
              {"records", records}};
}

inline std::string csv_of(const ValNormReport& r) {
  std::string out = "word,effect_size,p_value,human_score\n";
  for (const auto& rec : r.records) {
    out += rec.word;
    out += ',';
    out += detail::format_double(rec.effect_size);
    out += ',';
    if (rec.p_value) out += detail::format_double(*rec.p_value);
    out += ',';
    out += detail::format_double(rec.human_score);
    out += '\n';
  }
  return out;
}

inline json json_of(const SimilarityResult& r) {
  return json{{"task", r.task},
              {"n_scored", r.n_scored},
              {"n_skipped_missing", r.n_skipped_missing},
              {"spearman_rho", r.spearman_rho},
              {"pearson_rho", r.pearson_rho}};
}

inline std::string csv_of(const SimilarityResult& r) {
  return "task,n_scored,n_skipped_missing,spearman_rho,pearson_rho\n" + r.task + "," +
         std::to_string(r.n_scored) + "," + std::to_string(r.n_skipped_missing) + "," +
         detail::format_double(r.spearman_rho) + "," + detail::format_double(r.pearson_rho) +
         "\n";
}

inline json json_of(const AnalogyResult& r) {
  json sections = json::array();
  for (const auto& s : r.sections) {
    json sec{{"section", s.section},
             {"n_scored", s.n_scored},
             {"n_correct", s.n_correct}};
    sec["accuracy"] = detail::opt_json(s.accuracy());
    sections.push_back(sec);
  }
  json out{{"task", r.task},
           {"n_scored", r.n_scored},
           {"n_skipped_missing", r.n_skipped_missing},
           {"n_correct", r.n_correct}};
  out["accuracy"] = detail::opt_json(r.accuracy());
  out["sections"] = sections;
  return out;
}

inline std::string csv_of(const AnalogyResult& r) {
  std::string out = "section,n_scored,n_correct,accuracy\n";
  auto row = [&](const std::string& label, std::size_t scored, std::size_t correct,
                 std::optional<double> acc) {
    out += label + "," + std::to_string(scored) + "," + std::to_string(correct) + ",";
    if (acc) out += detail::format_double(*acc);
    out += '\n';
  };
  for (const auto& s : r.sections) row(s.section, s.n_scored, s.n_correct, s.accuracy());
  row("overall", r.n_scored, r.n_correct, r.accuracy());
  return out;
}

inline json json_of(const VarianceReport& r) {
  json runs = json::array();
  for (const auto& [label, es] : r.runs) {
    runs.push_back(json{{"label", label}, {"effect_size", es}});
  }
  return json{{"bias_name", r.bias_name},
              {"variance", r.variance},
              {"variance_mode", std::string(to_string(r.mode))},
              {"runs", runs}};
}

inline std::string csv_of(const VarianceReport& r) {
  std::string out = "label,effect_size\n";
  for (const auto& [label, es] : r.runs) {
    out += label + "," + detail::format_double(es) + "\n";
  }
  return out;
}

inline json json_of(const TimelineReport& r) {
  json slices = json::array();
  for (const auto& s : r.slices) {
    json slice{{"label", s.label}};
    slice["pearson_rho"] = detail::opt_json(s.pearson_rho);
    slice["spearman_rho"] = detail::opt_json(s.spearman_rho);
    slice["n_present"] = s.n_present;
    if (!s.note.empty()) slice["note"] = s.note;
    slices.push_back(slice);
  }
  json out{{"variance_mode", std::string(to_string(r.variance_mode))}};
  out["variance_pearson"] = detail::opt_json(r.variance_pearson);
  out["variance_spearman"] = detail::opt_json(r.variance_spearman);
  out["slices"] = slices;
  return out;
}

// Plot-ready columns.
inline std::string csv_of(const TimelineReport& r) {
  std::string out = "label,rho,n_present\n";
  for (const auto& s : r.slices) {
    out += s.label + ",";
    if (s.pearson_rho) out += detail::format_double(*s.pearson_rho);
    out += "," + std::to_string(s.n_present) + "\n";
  }
  return out;
}

// Common report wrapper: tool version, RNG contract, config echo, and an
// ignorable timestamp field so reports stay byte-comparable.
inline json make_report_envelope(json config_echo, json result, std::uint64_t seed,
                                 std::string generated_at = {}) {
  json env{{"tool", json{{"name", kToolName}, {"version", kToolVersion}}}};
  env["generated_at"] = generated_at;
  env["rng"] = json{{"algorithm", kRngAlgorithm}, {"seed", seed}};
  env["config"] = std::move(config_echo);
  env["result"] = std::move(result);
  return env;
}

}  // namespace valnorm
