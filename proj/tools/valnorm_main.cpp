// Command-line front door: weat, scweat, valnorm, simeval, analogy,
// timeline, variance, embed-info. Reports are JSON envelopes (config echo +
// result) or plot-ready CSV. Exit codes: 0 success, 1 I/O error, 2
// validation error.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "valnorm/valnorm.hpp"

namespace {

using valnorm::json;

struct CommonOpts {
  std::string embeddings;
  std::string format = "auto";
  std::string out;
  std::string emit = "json";
  std::uint64_t seed = 0;
  std::string stddev = "sample";
  std::string pvalue = "auto";
  std::uint64_t mc_samples = 100000;
  std::uint64_t max_exact = 200000;
  std::uint64_t normal_fit = 10000;
  bool no_pvalue = false;
  bool no_case_fallback = false;
  bool no_nfc = false;
  std::string multiword = "exact-only";
  std::string pack_lang;
  std::string pack_file;
  unsigned threads = 1;
};

void add_common_flags(CLI::App* cmd, CommonOpts& o, bool with_embeddings = true) {
  if (with_embeddings) {
    cmd->add_option("--embeddings", o.embeddings, "embedding file (text format)");
    cmd->add_option("--format", o.format,
                    "embedding format: auto|word2vec-text|glove-text|fasttext-vec");
  }
  cmd->add_option("--out", o.out, "write the report to this file instead of stdout");
  cmd->add_option("--emit", o.emit, "report format: json|csv");
  cmd->add_option("--seed", o.seed, "RNG seed (falls back to env VALNORM_SEED, then 0)");
  cmd->add_option("--stddev", o.stddev, "effect-size denominator: sample|population");
  cmd->add_option("--pvalue", o.pvalue,
                  "p-value strategy: auto|exact|monte-carlo|normal-approx|none");
  cmd->add_flag("--no-pvalue", o.no_pvalue, "effect sizes only (same as --pvalue none)");
  cmd->add_option("--mc-samples", o.mc_samples, "Monte Carlo sample count");
  cmd->add_option("--max-exact", o.max_exact, "exact-enumeration partition limit");
  cmd->add_option("--normal-fit-samples", o.normal_fit,
                  "null-fit sample count for normal-approx");
  cmd->add_flag("--no-case-fallback", o.no_case_fallback, "disable lowercase fallback");
  cmd->add_flag("--no-nfc", o.no_nfc, "disable NFC normalization of queries");
  cmd->add_option("--multiword", o.multiword,
                  "multiword lookup: exact-only|punctuation-variants|average-subtokens");
  cmd->add_option("--pack", o.pack_lang, "bundled stimulus pack language (zh en de pl pt es tr)");
  cmd->add_option("--pack-file", o.pack_file, "custom stimulus pack JSON file");
  cmd->add_option("--threads", o.threads, "worker threads for per-word computations");
}

valnorm::LookupPolicy policy_of(const CommonOpts& o) {
  valnorm::LookupPolicy p;
  p.case_fallback = !o.no_case_fallback;
  p.unicode_normalize = !o.no_nfc;
  p.multiword = valnorm::multiword_policy_from_string(o.multiword);
  return p;
}

std::optional<valnorm::PValueConfig> pvalue_config_of(const CommonOpts& o) {
  if (o.no_pvalue || o.pvalue == "none") return std::nullopt;
  valnorm::PValueConfig cfg;
  cfg.strategy = valnorm::p_strategy_request_from_string(o.pvalue);
  cfg.max_exact_partitions = o.max_exact;
  cfg.mc_samples = o.mc_samples;
  cfg.normal_fit_samples = o.normal_fit;
  cfg.seed = o.seed;
  return cfg;
}

std::optional<valnorm::StimulusPack> pack_of(const CommonOpts& o) {
  if (!o.pack_file.empty()) return valnorm::load_custom_pack(o.pack_file);
  if (!o.pack_lang.empty()) return valnorm::load_pack(o.pack_lang);
  return std::nullopt;
}

bool is_category(const std::string& s) {
  for (auto c : valnorm::kPackCategories) {
    if (s == c) return true;
  }
  return false;
}

// A word-set flag accepts: "@file" (newline-delimited), a pack category
// name (when a pack is given), or a comma-separated inline list. Inline and
// file forms take precedence over the pack.
valnorm::WordSet set_from_spec(const std::string& spec, const std::string& set_name,
                               const std::optional<valnorm::StimulusPack>& pack) {
  if (spec.empty()) {
    throw valnorm::Error::validation(
        "missing word set --" + set_name +
        " (give an inline list, an @file, or --pack/--pack-file with a category name)");
  }
  if (spec[0] == '@') {
    const std::string path = spec.substr(1);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw valnorm::Error::io("cannot open word list: " + path);
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
      const std::string w = valnorm::trim(line);
      if (!w.empty()) words.push_back(w);
    }
    return valnorm::make_word_set(set_name, pack ? pack->language : "", words);
  }
  if (pack && spec.find(',') == std::string::npos && is_category(spec)) {
    valnorm::WordSet set = pack->category(spec);
    return set;
  }
  std::vector<std::string> words;
  std::string cur;
  for (char c : spec) {
    if (c == ',') {
      words.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  words.push_back(cur);
  return valnorm::make_word_set(set_name, pack ? pack->language : "", words);
}

std::string iso8601_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json base_echo(const std::string& subcommand, const CommonOpts& o) {
  json echo{{"subcommand", subcommand}};
  if (!o.embeddings.empty()) {
    echo["embeddings"] = json{{"path", o.embeddings}, {"format", o.format}};
  }
  echo["policy"] = json_of(policy_of(o));
  const auto cfg = pvalue_config_of(o);
  echo["pvalue"] = cfg ? valnorm::json_of(*cfg) : json(nullptr);
  echo["stddev_mode"] = o.stddev;
  echo["seed"] = o.seed;
  echo["threads"] = o.threads;
  echo["emit"] = o.emit;
  if (!o.out.empty()) echo["out"] = o.out;
  if (!o.pack_lang.empty()) echo["pack"] = o.pack_lang;
  if (!o.pack_file.empty()) echo["pack_file"] = o.pack_file;
  return echo;
}

void write_report(const CommonOpts& o, json envelope, const std::string& csv) {
  std::string payload;
  if (o.emit == "json") {
    payload = envelope.dump(1) + "\n";
  } else if (o.emit == "csv") {
    payload = csv;
  } else {
    throw valnorm::Error::validation("unknown --emit format: " + o.emit);
  }
  if (o.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(o.out, std::ios::binary);
    if (!out) throw valnorm::Error::io("cannot write report: " + o.out);
    out << payload;
  }
}

std::string association_csv(const valnorm::AssociationResult& r) {
  std::string out = "effect_size,p_value,p_strategy,x,y,a,b\n";
  out += valnorm::detail::format_double(r.effect_size) + ",";
  if (r.p_value) out += valnorm::detail::format_double(*r.p_value);
  out += "," + std::string(valnorm::to_string(r.p_strategy));
  out += "," + std::to_string(r.counts.x) + "," + std::to_string(r.counts.y) + "," +
         std::to_string(r.counts.a) + "," + std::to_string(r.counts.b) + "\n";
  return out;
}

json resolution_json(const valnorm::ResolvedSet& r) {
  return json{{"name", r.origin.name},
              {"requested", r.origin.words.size()},
              {"found", r.found.size()},
              {"missing", r.missing},
              {"meets_minimum", r.origin.meets_minimum()}};
}

valnorm::EmbeddingSet load_set(const CommonOpts& o) {
  if (o.embeddings.empty()) {
    throw valnorm::Error::validation("--embeddings is required");
  }
  return valnorm::load_embeddings(o.embeddings,
                                  valnorm::embedding_format_from_string(o.format));
}

// ---------------------------------------------------------------------------

struct WeatArgs {
  std::string x, y, a, b;
};

int cmd_weat(const CommonOpts& o, const WeatArgs& args) {
  const auto emb = load_set(o);
  const auto pack = pack_of(o);
  const auto policy = policy_of(o);
  const auto X = valnorm::resolve(set_from_spec(args.x, "x", pack), emb, policy);
  const auto Y = valnorm::resolve(set_from_spec(args.y, "y", pack), emb, policy);
  const auto A = valnorm::resolve(set_from_spec(args.a, "a", pack), emb, policy);
  const auto B = valnorm::resolve(set_from_spec(args.b, "b", pack), emb, policy);
  const auto result = valnorm::weat_result(
      valnorm::vectors_of(X), valnorm::vectors_of(Y), valnorm::vectors_of(A),
      valnorm::vectors_of(B), pvalue_config_of(o),
      valnorm::stddev_mode_from_string(o.stddev));

  json echo = base_echo("weat", o);
  echo["sets"] = json{{"x", args.x}, {"y", args.y}, {"a", args.a}, {"b", args.b}};
  json envelope = valnorm::make_report_envelope(echo, valnorm::json_of(result), o.seed,
                                                iso8601_now());
  envelope["resolution"] = json{{"x", resolution_json(X)}, {"y", resolution_json(Y)},
                                {"a", resolution_json(A)}, {"b", resolution_json(B)}};
  write_report(o, envelope, association_csv(result));
  return 0;
}

struct ScweatArgs {
  std::string word, a, b;
};

int cmd_scweat(const CommonOpts& o, const ScweatArgs& args) {
  const auto emb = load_set(o);
  const auto pack = pack_of(o);
  const auto policy = policy_of(o);
  const auto hit = valnorm::lookup(emb, args.word, policy);
  if (!hit) {
    throw valnorm::Error::validation("word not found: " + args.word);
  }
  const auto A = valnorm::resolve(set_from_spec(args.a, "a", pack), emb, policy);
  const auto B = valnorm::resolve(set_from_spec(args.b, "b", pack), emb, policy);
  const auto result = valnorm::sc_weat_result(*hit, valnorm::vectors_of(A),
                                              valnorm::vectors_of(B), pvalue_config_of(o),
                                              valnorm::stddev_mode_from_string(o.stddev));

  json echo = base_echo("scweat", o);
  echo["word"] = args.word;
  echo["sets"] = json{{"a", args.a}, {"b", args.b}};
  json envelope = valnorm::make_report_envelope(echo, valnorm::json_of(result), o.seed,
                                                iso8601_now());
  envelope["resolution"] = json{{"a", resolution_json(A)}, {"b", resolution_json(B)}};
  write_report(o, envelope, association_csv(result));
  return 0;
}

struct LexiconArgs {
  std::string path;
  std::string format = "two-column-csv";
  std::string word_col;
  std::string score_col;
  int word_col_index = -1;
  int score_col_index = -1;
  double scale_min = 1.0;
  double scale_max = 9.0;
  std::string name;
  std::string language;
};

void add_lexicon_flags(CLI::App* cmd, LexiconArgs& a) {
  cmd->add_option("--lexicon", a.path, "valence lexicon file")->required();
  cmd->add_option("--lexicon-format", a.format, "two-column-csv|anew-csv|custom");
  cmd->add_option("--word-col", a.word_col, "word column name (custom/anew formats)");
  cmd->add_option("--score-col", a.score_col, "score column name (custom/anew formats)");
  cmd->add_option("--word-col-index", a.word_col_index, "word column index (0-based)");
  cmd->add_option("--score-col-index", a.score_col_index, "score column index (0-based)");
  cmd->add_option("--scale-min", a.scale_min, "declared lexicon scale minimum");
  cmd->add_option("--scale-max", a.scale_max, "declared lexicon scale maximum");
  cmd->add_option("--lexicon-name", a.name, "lexicon display name");
  cmd->add_option("--lexicon-language", a.language, "lexicon language tag");
}

valnorm::ValenceLexicon load_lexicon_args(const LexiconArgs& a) {
  const auto format = valnorm::lexicon_format_from_string(a.format);
  valnorm::ColumnRef word_col = std::size_t{0};
  valnorm::ColumnRef score_col = std::size_t{1};
  if (a.word_col_index >= 0) word_col = static_cast<std::size_t>(a.word_col_index);
  else if (!a.word_col.empty()) word_col = a.word_col;
  else if (format == valnorm::LexiconFormat::anew_csv) word_col = std::string("Word");
  else if (format == valnorm::LexiconFormat::custom)
    throw valnorm::Error::validation("custom lexicon format needs --word-col or --word-col-index");
  if (a.score_col_index >= 0) score_col = static_cast<std::size_t>(a.score_col_index);
  else if (!a.score_col.empty()) score_col = a.score_col;
  else if (format == valnorm::LexiconFormat::anew_csv) score_col = std::string("ValMn");
  else if (format == valnorm::LexiconFormat::custom)
    throw valnorm::Error::validation("custom lexicon format needs --score-col or --score-col-index");
  return valnorm::load_lexicon(a.path, format, word_col, score_col,
                               {a.scale_min, a.scale_max}, a.name, a.language);
}

json lexicon_echo(const LexiconArgs& a) {
  return json{{"path", a.path},        {"format", a.format},
              {"word_col", a.word_col}, {"score_col", a.score_col},
              {"word_col_index", a.word_col_index},
              {"score_col_index", a.score_col_index},
              {"scale_min", a.scale_min}, {"scale_max", a.scale_max}};
}

struct ValnormArgs {
  LexiconArgs lexicon;
  std::string a;
  std::string b;
};

// Attribute flags default to the pack's pleasant/unpleasant categories when
// a pack is given; without one they must be spelled out.
std::string attr_or_default(const std::string& spec, const char* category,
                            const std::optional<valnorm::StimulusPack>& pack) {
  if (!spec.empty()) return spec;
  if (pack) return category;
  return spec;
}

int cmd_valnorm(const CommonOpts& o, const ValnormArgs& args) {
  const auto emb = load_set(o);
  const auto pack = pack_of(o);
  const auto policy = policy_of(o);
  const auto lexicon = load_lexicon_args(args.lexicon);
  const auto pleasant = set_from_spec(attr_or_default(args.a, "pleasant", pack), "a", pack);
  const auto unpleasant =
      set_from_spec(attr_or_default(args.b, "unpleasant", pack), "b", pack);
  const auto report =
      valnorm::run_valnorm(emb, lexicon, pleasant, unpleasant, policy, pvalue_config_of(o),
                           valnorm::stddev_mode_from_string(o.stddev), o.threads);

  json echo = base_echo("valnorm", o);
  echo["lexicon"] = lexicon_echo(args.lexicon);
  echo["sets"] = json{{"a", args.a}, {"b", args.b}};
  write_report(o,
               valnorm::make_report_envelope(echo, valnorm::json_of(report), o.seed,
                                             iso8601_now()),
               valnorm::csv_of(report));
  return 0;
}

struct TaskArgs {
  std::string path;
  std::string name;
};

int cmd_simeval(const CommonOpts& o, const TaskArgs& args) {
  const auto emb = load_set(o);
  const auto task = valnorm::load_similarity_task(args.path, args.name);
  const auto result = valnorm::run_similarity(emb, task, policy_of(o));
  json echo = base_echo("simeval", o);
  echo["task"] = json{{"path", args.path}, {"name", task.name}};
  write_report(o,
               valnorm::make_report_envelope(echo, valnorm::json_of(result), o.seed,
                                             iso8601_now()),
               valnorm::csv_of(result));
  return 0;
}

int cmd_analogy(const CommonOpts& o, const TaskArgs& args) {
  const auto emb = load_set(o);
  const auto task = valnorm::load_analogy_task(args.path, args.name);
  const auto result = valnorm::run_analogy(emb, task, policy_of(o));
  json echo = base_echo("analogy", o);
  echo["task"] = json{{"path", args.path}, {"name", task.name}};
  write_report(o,
               valnorm::make_report_envelope(echo, valnorm::json_of(result), o.seed,
                                             iso8601_now()),
               valnorm::csv_of(result));
  return 0;
}

struct TimelineArgs {
  std::vector<std::string> slices;  // label=path
  LexiconArgs lexicon;
  std::string a;
  std::string b;
  std::string variance_mode = "population";
};

int cmd_timeline(const CommonOpts& o, const TimelineArgs& args) {
  std::vector<valnorm::TimelineSliceSpec> specs;
  for (const std::string& s : args.slices) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == s.size()) {
      throw valnorm::Error::validation("bad --slices entry (want label=path): " + s);
    }
    specs.push_back({s.substr(0, eq), s.substr(eq + 1),
                     valnorm::embedding_format_from_string(o.format)});
  }
  const auto pack = pack_of(o);
  const auto lexicon = load_lexicon_args(args.lexicon);
  const auto pleasant = set_from_spec(attr_or_default(args.a, "pleasant", pack), "a", pack);
  const auto unpleasant =
      set_from_spec(attr_or_default(args.b, "unpleasant", pack), "b", pack);
  const auto report = valnorm::run_timeline(
      specs, lexicon, pleasant, unpleasant, policy_of(o), pvalue_config_of(o),
      valnorm::stddev_mode_from_string(o.stddev),
      valnorm::stddev_mode_from_string(args.variance_mode), o.threads);

  json echo = base_echo("timeline", o);
  echo["slices"] = args.slices;
  echo["lexicon"] = lexicon_echo(args.lexicon);
  echo["sets"] = json{{"a", args.a}, {"b", args.b}};
  echo["variance_mode"] = args.variance_mode;
  write_report(o,
               valnorm::make_report_envelope(echo, valnorm::json_of(report), o.seed,
                                             iso8601_now()),
               valnorm::csv_of(report));
  return 0;
}

struct VarianceArgs {
  std::vector<std::string> inputs;
  std::string labels;
  std::string name = "weat";
  std::string mode = "population";
};

int cmd_variance(const CommonOpts& o, const VarianceArgs& args) {
  std::vector<std::string> labels;
  if (!args.labels.empty()) {
    std::string cur;
    for (char c : args.labels) {
      if (c == ',') {
        labels.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    labels.push_back(cur);
    if (labels.size() != args.inputs.size()) {
      throw valnorm::Error::validation("--labels count does not match input count");
    }
  }
  std::vector<std::pair<std::string, valnorm::AssociationResult>> results;
  for (std::size_t i = 0; i < args.inputs.size(); ++i) {
    const std::string& path = args.inputs[i];
    std::ifstream in(path, std::ios::binary);
    if (!in) throw valnorm::Error::io("cannot open report: " + path);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw valnorm::Error::parse(path + ": " + e.what());
    }
    results.emplace_back(labels.empty() ? path : labels[i],
                         valnorm::association_result_from_json(doc));
  }
  const auto report = valnorm::aggregate_variance(args.name, results,
                                                  valnorm::stddev_mode_from_string(args.mode));
  json echo = base_echo("variance", o);
  echo["inputs"] = args.inputs;
  echo["labels"] = args.labels;
  echo["bias_name"] = args.name;
  echo["variance_mode"] = args.mode;
  write_report(o,
               valnorm::make_report_envelope(echo, valnorm::json_of(report), o.seed,
                                             iso8601_now()),
               valnorm::csv_of(report));
  return 0;
}

int cmd_embed_info(const CommonOpts& o) {
  const auto emb = load_set(o);
  json result{{"dimension", emb.dimension()},
              {"vocabulary", emb.size()},
              {"duplicates_collapsed", emb.duplicates_collapsed()},
              {"source", json{{"path", emb.source().path}, {"format", emb.source().format}}}};
  if (emb.source().declared_count) {
    result["source"]["declared_count"] = *emb.source().declared_count;
  }
  std::string csv = "dimension,vocabulary,duplicates_collapsed\n" +
                    std::to_string(emb.dimension()) + "," + std::to_string(emb.size()) + "," +
                    std::to_string(emb.duplicates_collapsed()) + "\n";
  write_report(o, valnorm::make_report_envelope(base_echo("embed-info", o), result, o.seed,
                                                iso8601_now()),
               csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"valence association tests over static word embeddings"};
  app.require_subcommand(1);

  CommonOpts common;
  if (const char* env = std::getenv("VALNORM_SEED")) {
    char* end = nullptr;
    common.seed = std::strtoull(env, &end, 10);
  }

  WeatArgs weat_args;
  auto* weat = app.add_subcommand("weat", "two-set association test");
  add_common_flags(weat, common);
  weat->add_option("--x", weat_args.x, "first target set")->required();
  weat->add_option("--y", weat_args.y, "second target set")->required();
  weat->add_option("--a", weat_args.a, "first attribute set")->required();
  weat->add_option("--b", weat_args.b, "second attribute set")->required();

  ScweatArgs scweat_args;
  auto* scweat = app.add_subcommand("scweat", "single-word association test");
  add_common_flags(scweat, common);
  scweat->add_option("--word", scweat_args.word, "target word")->required();
  scweat->add_option("--a", scweat_args.a, "first attribute set")->required();
  scweat->add_option("--b", scweat_args.b, "second attribute set")->required();

  ValnormArgs valnorm_args;
  auto* vn = app.add_subcommand("valnorm", "valence-norm correlation task");
  add_common_flags(vn, common);
  add_lexicon_flags(vn, valnorm_args.lexicon);
  vn->add_option("--a", valnorm_args.a, "pleasant attribute set");
  vn->add_option("--b", valnorm_args.b, "unpleasant attribute set");

  TaskArgs sim_args;
  auto* sim = app.add_subcommand("simeval", "word-similarity benchmark");
  add_common_flags(sim, common);
  sim->add_option("--task", sim_args.path, "similarity task file")->required();
  sim->add_option("--task-name", sim_args.name, "task display name");

  TaskArgs ana_args;
  auto* ana = app.add_subcommand("analogy", "word-analogy benchmark (3CosAdd)");
  add_common_flags(ana, common);
  ana->add_option("--task", ana_args.path, "analogy task file")->required();
  ana->add_option("--task-name", ana_args.name, "task display name");

  TimelineArgs tl_args;
  auto* tl = app.add_subcommand("timeline", "valence correlation across embedding slices");
  add_common_flags(tl, common);
  tl->add_option("--slices", tl_args.slices, "label=path pairs")->required()->expected(-1);
  add_lexicon_flags(tl, tl_args.lexicon);
  tl->add_option("--a", tl_args.a, "pleasant attribute set");
  tl->add_option("--b", tl_args.b, "unpleasant attribute set");
  tl->add_option("--variance-mode", tl_args.variance_mode, "population|sample");

  VarianceArgs var_args;
  auto* var = app.add_subcommand("variance", "effect-size variance across runs");
  add_common_flags(var, common, /*with_embeddings=*/false);
  var->add_option("inputs", var_args.inputs, "association report JSON files")->required();
  var->add_option("--labels", var_args.labels, "comma-separated labels for the inputs");
  var->add_option("--name", var_args.name, "bias name for the report");
  var->add_option("--mode", var_args.mode, "population|sample");

  auto* info = app.add_subcommand("embed-info", "embedding file summary");
  add_common_flags(info, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (weat->parsed()) return cmd_weat(common, weat_args);
    if (scweat->parsed()) return cmd_scweat(common, scweat_args);
    if (vn->parsed()) return cmd_valnorm(common, valnorm_args);
    if (sim->parsed()) return cmd_simeval(common, sim_args);
    if (ana->parsed()) return cmd_analogy(common, ana_args);
    if (tl->parsed()) return cmd_timeline(common, tl_args);
    if (var->parsed()) return cmd_variance(common, var_args);
    if (info->parsed()) return cmd_embed_info(common);
  } catch (const valnorm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == valnorm::ErrorKind::io ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
