#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "valnorm/association.hpp"
#include "valnorm/error.hpp"
#include "valnorm/parallel.hpp"
#include "valnorm/stats.hpp"
#include "valnorm/unicode.hpp"
#include "valnorm/vectorspace.hpp"

namespace valnorm {

// -------------------------------------------------------------------------
// Valence lexica

struct ValenceLexicon {
  std::string name;
  std::string language;
  std::vector<std::pair<std::string, double>> entries;  // word -> mean valence
  double scale_min = 1.0;
  double scale_max = 9.0;
  std::uint64_t duplicates_collapsed = 0;
};

enum class LexiconFormat { two_column_csv, anew_csv, custom };

inline std::string_view to_string(LexiconFormat f) {
  switch (f) {
    case LexiconFormat::two_column_csv: return "two-column-csv";
    case LexiconFormat::anew_csv: return "anew-csv";
    case LexiconFormat::custom: return "custom";
  }
  return "two-column-csv";
}

inline LexiconFormat lexicon_format_from_string(std::string_view s) {
  if (s == "two-column-csv" || s == "two-column") return LexiconFormat::two_column_csv;
  if (s == "anew-csv" || s == "anew") return LexiconFormat::anew_csv;
  if (s == "custom") return LexiconFormat::custom;
  throw Error::validation("unknown lexicon format: " + std::string(s));
}

// Column selector: header name or 0-based index.
using ColumnRef = std::variant<std::string, std::size_t>;

namespace detail {

// Minimal delimited-text reader: sniffs ',' / '\t' / ';' from the first
// line, honors double-quoted fields.
inline char sniff_delimiter(const std::string& line) {
  std::size_t best_count = 0;
  char best = ',';
  for (char cand : {',', '\t', ';'}) {
    std::size_t count = 0;
    bool quoted = false;
    for (char c : line) {
      if (c == '"') quoted = !quoted;
      else if (c == cand && !quoted) ++count;
    }
    if (count > best_count) {
      best_count = count;
      best = cand;
    }
  }
  return best;
}

inline std::vector<std::string> split_delimited(const std::string& line, char delim) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == delim) {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::optional<double> parse_double(std::string_view tok) {
  const std::string t = trim(tok);
  if (t.empty()) return std::nullopt;
  const char* begin = t.data();
  const char* end = t.data() + t.size();
  if (*begin == '+') ++begin;
  if (begin == end) return std::nullopt;
  double value = 0.0;
  auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc() || res.ptr != end) return std::nullopt;
  return value;
}

inline std::size_t resolve_column(const ColumnRef& ref,
                                  const std::vector<std::string>& header,
                                  const std::string& path) {
  if (std::holds_alternative<std::size_t>(ref)) return std::get<std::size_t>(ref);
  const std::string& name = std::get<std::string>(ref);
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (trim(header[i]) == name) return i;
  }
  throw Error::validation(path + ": missing column '" + name + "'");
}

}  // namespace detail

// Loads a valence lexicon from delimited UTF-8 text. Named columns require
// a header row; two-column files may omit it (detected by whether the score
// cell of the first row parses). Out-of-scale scores are rejected with row
// numbers; duplicate words keep the first occurrence.
inline ValenceLexicon load_lexicon(const std::string& path, LexiconFormat format,
                                   ColumnRef word_col, ColumnRef score_col,
                                   std::pair<double, double> scale,
                                   std::string name = {}, std::string language = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error::io("cannot open lexicon file: " + path);

  ValenceLexicon lex;
  lex.name = name.empty() ? path : std::move(name);
  lex.language = std::move(language);
  lex.scale_min = scale.first;
  lex.scale_max = scale.second;
  if (!(lex.scale_min < lex.scale_max))
    throw Error::validation("lexicon scale must satisfy min < max");

  if (format == LexiconFormat::anew_csv) {
    if (std::holds_alternative<std::string>(word_col) && std::get<std::string>(word_col).empty())
      word_col = std::string("Word");
    if (std::holds_alternative<std::string>(score_col) && std::get<std::string>(score_col).empty())
      score_col = std::string("ValMn");
  }

  std::string line;
  std::size_t row_no = 0;
  char delim = ',';
  std::size_t wi = 0, si = 0;
  bool columns_resolved = false;
  std::unordered_set<std::string> seen;

  const bool named_cols = std::holds_alternative<std::string>(word_col) ||
                          std::holds_alternative<std::string>(score_col);

  while (std::getline(in, line)) {
    ++row_no;
    if (row_no == 1) {
      strip_bom(line);
      delim = detail::sniff_delimiter(line);
    }
    if (trim(line).empty()) continue;
    const std::vector<std::string> cells = detail::split_delimited(line, delim);

    if (!columns_resolved) {
      if (named_cols) {
        // header row required
        wi = detail::resolve_column(word_col, cells, path);
        si = detail::resolve_column(score_col, cells, path);
        columns_resolved = true;
        continue;
      }
      wi = std::get<std::size_t>(word_col);
      si = std::get<std::size_t>(score_col);
      columns_resolved = true;
      // headerless two-column data starts immediately; a non-numeric score
      // cell marks a header row to skip
      if (si < cells.size() && !detail::parse_double(cells[si])) continue;
    }

    if (wi >= cells.size() || si >= cells.size()) {
      throw Error::parse(path + " row " + std::to_string(row_no) +
                         ": expected at least " + std::to_string(std::max(wi, si) + 1) +
                         " columns, found " + std::to_string(cells.size()));
    }
    const std::string word = nfc(trim(cells[wi]));
    if (word.empty()) {
      throw Error::parse(path + " row " + std::to_string(row_no) + ": empty word");
    }
    const auto score = detail::parse_double(cells[si]);
    if (!score) {
      throw Error::parse(path + " row " + std::to_string(row_no) +
                         ": unparseable score '" + cells[si] + "'");
    }
    if (*score < lex.scale_min || *score > lex.scale_max) {
      throw Error::validation(path + " row " + std::to_string(row_no) + ": score " +
                              std::to_string(*score) + " outside declared scale [" +
                              std::to_string(lex.scale_min) + ", " +
                              std::to_string(lex.scale_max) + "]");
    }
    if (!seen.insert(word).second) {
      ++lex.duplicates_collapsed;
      continue;
    }
    lex.entries.emplace_back(word, *score);
  }
  if (lex.entries.empty()) throw Error::validation(path + ": lexicon is empty");
  return lex;
}

// -------------------------------------------------------------------------
// The valence evaluation task

struct ValNormRecord {
  std::string word;
  double effect_size = 0.0;
  std::optional<double> p_value;
  double human_score = 0.0;
};

struct ValNormReport {
  std::string lexicon_name;
  std::string lexicon_language;
  std::string embedding_source;
  std::vector<ValNormRecord> records;  // lexicon order, present words only
  std::size_t n_present = 0;
  std::size_t n_missing = 0;
  std::vector<std::string> missing;
  std::vector<std::string> skipped_degenerate;
  double pearson_rho = 0.0;
  double spearman_rho = 0.0;
  // attribute resolution bookkeeping
  std::size_t pleasant_found = 0;
  std::size_t unpleasant_found = 0;
  std::vector<std::string> pleasant_missing;
  std::vector<std::string> unpleasant_missing;
  bool attributes_below_minimum = false;
  // config echo
  LookupPolicy policy;
  std::optional<PValueConfig> pvalue_config;
  StddevMode stddev_mode = StddevMode::sample;
  unsigned threads = 1;
};

// For every lexicon word present in the embeddings, computes the
// single-word effect size (and p-value unless disabled) against the
// resolved attribute sets, then correlates against the human scores.
// Degenerate-denominator words are excluded from the correlation and
// listed. Per-word Monte Carlo streams are keyed by lexicon entry index,
// so results are identical for any thread count.
inline ValNormReport run_valnorm(const EmbeddingSet& embeddings, const ValenceLexicon& lexicon,
                                 const WordSet& pleasant, const WordSet& unpleasant,
                                 const LookupPolicy& policy,
                                 const std::optional<PValueConfig>& pcfg, StddevMode mode,
                                 unsigned threads = 1) {
  ValNormReport report;
  report.lexicon_name = lexicon.name;
  report.lexicon_language = lexicon.language;
  report.embedding_source = embeddings.source().path;
  report.policy = policy;
  report.pvalue_config = pcfg;
  report.stddev_mode = mode;
  report.threads = threads;

  const ResolvedSet rp = resolve(pleasant, embeddings, policy);
  const ResolvedSet ru = resolve(unpleasant, embeddings, policy);
  report.pleasant_found = rp.found.size();
  report.unpleasant_found = ru.found.size();
  report.pleasant_missing = rp.missing;
  report.unpleasant_missing = ru.missing;
  if (rp.found.empty() && ru.found.empty())
    throw Error::validation("both attribute sets are fully missing from the embeddings");
  if (rp.found.empty())
    throw Error::validation("pleasant attribute set is fully missing from the embeddings");
  if (ru.found.empty())
    throw Error::validation("unpleasant attribute set is fully missing from the embeddings");
  report.attributes_below_minimum =
      rp.found.size() < WordSet::kMinStimuli || ru.found.size() < WordSet::kMinStimuli;

  const VectorList A = vectors_of(rp);
  const VectorList B = vectors_of(ru);

  struct Slot {
    enum class State { missing, ok, degenerate } state = State::missing;
    ValNormRecord record;
  };
  std::vector<Slot> slots(lexicon.entries.size());

  detail::parallel_for(lexicon.entries.size(), threads, [&](std::size_t i) {
    const auto& [word, human] = lexicon.entries[i];
    auto hit = lookup(embeddings, word, policy);
    if (!hit) return;  // stays missing
    Slot& slot = slots[i];
    slot.record.word = word;
    slot.record.human_score = human;
    try {
      if (pcfg) {
        PValueConfig cfg = *pcfg;
        cfg.stream_id = i;
        const AssociationResult res = sc_weat_p_value(*hit, A, B, cfg, mode);
        slot.record.effect_size = res.effect_size;
        slot.record.p_value = res.p_value;
      } else {
        slot.record.effect_size = sc_weat_effect_size(*hit, A, B, mode);
      }
      slot.state = Slot::State::ok;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::degenerate) throw;
      slot.state = Slot::State::degenerate;
    }
  });

  for (std::size_t i = 0; i < slots.size(); ++i) {
    const auto& [word, human] = lexicon.entries[i];
    switch (slots[i].state) {
      case Slot::State::missing:
        report.missing.push_back(word);
        break;
      case Slot::State::degenerate:
        report.skipped_degenerate.push_back(word);
        break;
      case Slot::State::ok:
        report.records.push_back(std::move(slots[i].record));
        break;
    }
  }
  report.n_present = report.records.size();
  report.n_missing = report.missing.size();

  if (report.records.size() < 2)
    throw Error::validation("fewer than 2 correlatable words (" +
                            std::to_string(report.records.size()) + " present)");

  PairedSample sample;
  sample.xs.reserve(report.records.size());
  sample.ys.reserve(report.records.size());
  for (const auto& rec : report.records) {
    sample.xs.push_back(rec.effect_size);
    sample.ys.push_back(rec.human_score);
  }
  report.pearson_rho = pearson(sample);
  report.spearman_rho = spearman(sample);
  return report;
}

// Spearman correlation between per-word effect sizes and p-values. Under
// the one-sided upper-tail convention larger effect sizes give smaller
// p-values, so the sign is negative; callers report the magnitude.
inline double effectsize_pvalue_correlation(const ValNormReport& report) {
  PairedSample sample;
  for (const auto& rec : report.records) {
    if (!rec.p_value) continue;
    sample.xs.push_back(rec.effect_size);
    sample.ys.push_back(*rec.p_value);
  }
  if (sample.xs.size() < 2)
    throw Error::validation("effect-size/p-value correlation needs >= 2 records with p-values");
  return spearman(sample);
}

}  // namespace valnorm
