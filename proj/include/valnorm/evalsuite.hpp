#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
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
// Word similarity

struct SimilarityPair {
  std::string word1;
  std::string word2;
  double human_score = 0.0;
};

struct SimilarityTask {
  std::string name;
  std::vector<SimilarityPair> pairs;
};

// Task rows are `word1<TAB or ,>word2<sep>score`, optional header.
inline SimilarityTask load_similarity_task(const std::string& path, std::string name = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error::io("cannot open similarity task: " + path);
  SimilarityTask task;
  task.name = name.empty() ? path : std::move(name);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) strip_bom(line);
    if (trim(line).empty()) continue;
    const char sep = line.find('\t') != std::string::npos ? '\t' : ',';
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
      if (c == sep) {
        cells.push_back(cur);
        cur.clear();
      } else if (c != '\r') {
        cur += c;
      }
    }
    cells.push_back(cur);
    if (cells.size() != 3) {
      throw Error::parse(path + " line " + std::to_string(line_no) +
                         ": expected word1, word2, score");
    }
    const std::string s = trim(cells[2]);
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    if (begin != end && *begin == '+') ++begin;
    double score = 0.0;
    auto res = std::from_chars(begin, end, score);
    if (res.ec != std::errc() || res.ptr != end || begin == end) {
      if (line_no == 1) continue;  // header row
      throw Error::parse(path + " line " + std::to_string(line_no) +
                         ": unparseable score '" + cells[2] + "'");
    }
    if (!std::isfinite(score)) {
      throw Error::parse(path + " line " + std::to_string(line_no) + ": non-finite score");
    }
    task.pairs.push_back({trim(cells[0]), trim(cells[1]), score});
  }
  if (task.pairs.empty()) throw Error::validation(path + ": empty similarity task");
  return task;
}

struct SimilarityResult {
  std::string task;
  std::size_t n_scored = 0;
  std::size_t n_skipped_missing = 0;
  double spearman_rho = 0.0;  // headline
  double pearson_rho = 0.0;
};

// Cosine per resolvable pair, correlated against human scores; pairs with
// a missing word are skipped and counted.
inline SimilarityResult run_similarity(const EmbeddingSet& embeddings,
                                       const SimilarityTask& task,
                                       const LookupPolicy& policy) {
  SimilarityResult result;
  result.task = task.name;
  PairedSample sample;
  for (const SimilarityPair& p : task.pairs) {
    const auto v1 = lookup(embeddings, p.word1, policy);
    const auto v2 = lookup(embeddings, p.word2, policy);
    if (!v1 || !v2) {
      ++result.n_skipped_missing;
      continue;
    }
    sample.xs.push_back(cosine(*v1, *v2));
    sample.ys.push_back(p.human_score);
  }
  result.n_scored = sample.xs.size();
  if (result.n_scored < 2)
    throw Error::validation(task.name + ": fewer than 2 scored pairs");
  result.spearman_rho = spearman(sample);
  result.pearson_rho = pearson(sample);
  return result;
}

// -------------------------------------------------------------------------
// Analogy (3CosAdd)

struct AnalogyQuestion {
  std::string a, b, c, expected;
};

struct AnalogyTask {
  std::string name;
  // section label -> questions, in file order
  std::vector<std::pair<std::string, std::vector<AnalogyQuestion>>> sections;

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& [label, qs] : sections) n += qs.size();
    return n;
  }
};

// Conventional sectioned format: `: section-name` lines, then 4 words per
// line.
inline AnalogyTask load_analogy_task(const std::string& path, std::string name = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error::io("cannot open analogy task: " + path);
  AnalogyTask task;
  task.name = name.empty() ? path : std::move(name);
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string_view> toks;
  auto section = [&]() -> std::vector<AnalogyQuestion>& {
    if (task.sections.empty()) task.sections.emplace_back("default", std::vector<AnalogyQuestion>{});
    return task.sections.back().second;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) strip_bom(line);
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == ':') {
      task.sections.emplace_back(trim(t.substr(1)), std::vector<AnalogyQuestion>{});
      continue;
    }
    detail::split_ws(line, toks);
    if (toks.size() != 4) {
      throw Error::parse(path + " line " + std::to_string(line_no) +
                         ": expected 4 words, found " + std::to_string(toks.size()));
    }
    AnalogyQuestion q{std::string(toks[0]), std::string(toks[1]), std::string(toks[2]),
                      std::string(toks[3])};
    if (q.a == q.b || q.a == q.c || q.a == q.expected || q.b == q.c ||
        q.b == q.expected || q.c == q.expected) {
      throw Error::parse(path + " line " + std::to_string(line_no) +
                         ": question words must be distinct");
    }
    section().push_back(std::move(q));
  }
  if (task.size() == 0) throw Error::validation(path + ": empty analogy task");
  return task;
}

struct SectionAccuracy {
  std::string section;
  std::size_t n_scored = 0;
  std::size_t n_correct = 0;

  std::optional<double> accuracy() const {
    if (n_scored == 0) return std::nullopt;
    return static_cast<double>(n_correct) / static_cast<double>(n_scored);
  }
};

struct AnalogyResult {
  std::string task;
  std::size_t n_scored = 0;
  std::size_t n_skipped_missing = 0;
  std::size_t n_correct = 0;
  std::vector<SectionAccuracy> sections;

  std::optional<double> accuracy() const {
    if (n_scored == 0) return std::nullopt;
    return static_cast<double>(n_correct) / static_cast<double>(n_scored);
  }
};

// 3CosAdd: rank the vocabulary (minus the three query words) by cosine to
// b - a + c; correct iff top-1 is the expected word. Questions with a
// missing query word are skipped; a missing expected word just scores as
// incorrect.
inline AnalogyResult run_analogy(const EmbeddingSet& embeddings, const AnalogyTask& task,
                                 const LookupPolicy& policy, std::size_t top_k = 1) {
  if (embeddings.size() < 4)
    throw Error::validation("analogy needs a vocabulary of at least 4 words");
  if (top_k != 1) throw Error::validation("only top_k = 1 is supported");

  AnalogyResult result;
  result.task = task.name;
  const std::uint32_t n = static_cast<std::uint32_t>(embeddings.size());

  for (const auto& [label, questions] : task.sections) {
    SectionAccuracy acc;
    acc.section = label;
    for (const AnalogyQuestion& q : questions) {
      const auto ha = lookup_detailed(embeddings, q.a, policy);
      const auto hb = lookup_detailed(embeddings, q.b, policy);
      const auto hc = lookup_detailed(embeddings, q.c, policy);
      if (!ha || !hb || !hc) {
        ++result.n_skipped_missing;
        continue;
      }
      std::vector<double> target(embeddings.dimension());
      for (std::size_t i = 0; i < target.size(); ++i) {
        target[i] = hb->vec[i] - ha->vec[i] + hc->vec[i];
      }
      const double target_ssq = detail::sum_sq(target);

      std::optional<std::uint32_t> best;
      double best_cos = -2.0;
      if (target_ssq > 0.0) {
        for (std::uint32_t i = 0; i < n; ++i) {
          if ((ha->vocab_index && *ha->vocab_index == i) ||
              (hb->vocab_index && *hb->vocab_index == i) ||
              (hc->vocab_index && *hc->vocab_index == i)) {
            continue;
          }
          const double c =
              detail::cosine_presq(target, target_ssq, embeddings.vector_at(i),
                                   embeddings.norm_sq_at(i));
          if (c > best_cos) {
            best_cos = c;
            best = i;
          }
        }
      }

      const auto hd = lookup_detailed(embeddings, q.expected, policy);
      const bool correct = best && hd && hd->vocab_index && *hd->vocab_index == *best;
      ++acc.n_scored;
      if (correct) ++acc.n_correct;
    }
    result.n_scored += acc.n_scored;
    result.n_correct += acc.n_correct;
    result.sections.push_back(std::move(acc));
  }
  return result;
}

}  // namespace valnorm
