#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "valnorm/error.hpp"
#include "valnorm/unicode.hpp"

namespace valnorm {

enum class EmbeddingFormat { auto_detect, word2vec_text, glove_text, fasttext_vec };

inline std::string_view to_string(EmbeddingFormat f) {
  switch (f) {
    case EmbeddingFormat::auto_detect: return "auto";
    case EmbeddingFormat::word2vec_text: return "word2vec-text";
    case EmbeddingFormat::glove_text: return "glove-text";
    case EmbeddingFormat::fasttext_vec: return "fasttext-vec";
  }
  return "auto";
}

inline EmbeddingFormat embedding_format_from_string(std::string_view s) {
  if (s == "auto") return EmbeddingFormat::auto_detect;
  if (s == "word2vec-text" || s == "word2vec") return EmbeddingFormat::word2vec_text;
  if (s == "glove-text" || s == "glove") return EmbeddingFormat::glove_text;
  if (s == "fasttext-vec" || s == "fasttext") return EmbeddingFormat::fasttext_vec;
  throw Error::validation("unknown embedding format: " + std::string(s));
}

struct EmbeddingSource {
  std::string path;
  std::string format;
  std::optional<std::uint64_t> declared_count;
};

// Immutable vocabulary -> vector map with cached Euclidean norms. Keys are
// NFC-normalized at construction; safe for concurrent readers.
class EmbeddingSet {
 public:
  static EmbeddingSet from_rows(std::uint32_t dimension,
                                std::span<const std::pair<std::string, std::vector<double>>> rows,
                                EmbeddingSource source = {}) {
    EmbeddingSet set;
    set.dim_ = dimension;
    set.source_ = std::move(source);
    if (dimension == 0) throw Error::validation("embedding dimension must be positive");
    for (const auto& [word, vec] : rows) {
      if (vec.size() != dimension)
        throw Error::validation("vector length mismatch for word '" + word + "'");
      set.insert(nfc(word), vec, nullptr);
    }
    return set;
  }

  std::uint32_t dimension() const noexcept { return dim_; }
  std::size_t size() const noexcept { return words_.size(); }
  std::uint64_t duplicates_collapsed() const noexcept { return duplicates_collapsed_; }
  const EmbeddingSource& source() const noexcept { return source_; }

  std::optional<std::uint32_t> index_of(std::string_view nfc_word) const {
    auto it = index_.find(std::string(nfc_word));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::span<const double> vector_at(std::uint32_t i) const {
    return {data_.data() + static_cast<std::size_t>(i) * dim_, dim_};
  }
  double norm_at(std::uint32_t i) const { return norms_[i]; }
  double norm_sq_at(std::uint32_t i) const { return norms_sq_[i]; }
  const std::string& word_at(std::uint32_t i) const { return words_[i]; }

 private:
  EmbeddingSet() = default;

  // Returns false for a duplicate key (first occurrence wins).
  bool insert(std::string word, std::span<const double> vec, const std::size_t* line) {
    auto line_ctx = [&]() -> std::string {
      return line ? "line " + std::to_string(*line) + ": " : "";
    };
    double ssq = 0.0;
    for (double x : vec) {
      if (!std::isfinite(x))
        throw Error::parse(line_ctx() + "non-finite component for word '" + word + "'");
      ssq += x * x;
    }
    if (ssq == 0.0) {
      throw Error::validation(line_ctx() + "zero vector for word '" + word + "'");
    }
    auto [it, fresh] = index_.try_emplace(std::move(word), static_cast<std::uint32_t>(words_.size()));
    if (!fresh) {
      ++duplicates_collapsed_;
      return false;
    }
    words_.push_back(it->first);
    data_.insert(data_.end(), vec.begin(), vec.end());
    norms_.push_back(std::sqrt(ssq));
    norms_sq_.push_back(ssq);
    return true;
  }

  friend EmbeddingSet load_embeddings(const std::string&, EmbeddingFormat,
                                      std::optional<std::uint32_t>);

  std::uint32_t dim_ = 0;
  std::vector<double> data_;
  std::vector<double> norms_;
  std::vector<double> norms_sq_;
  std::vector<std::string> words_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::uint64_t duplicates_collapsed_ = 0;
  EmbeddingSource source_;
};

namespace detail {

inline void split_ws(std::string_view line, std::vector<std::string_view>& out) {
  out.clear();
  std::size_t i = 0;
  const std::size_t n = line.size();
  auto is_ws = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
  };
  while (i < n) {
    while (i < n && is_ws(line[i])) ++i;
    const std::size_t b = i;
    while (i < n && !is_ws(line[i])) ++i;
    if (i > b) out.push_back(line.substr(b, i - b));
  }
}

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

inline double parse_component(std::string_view tok, std::size_t line_no) {
  double value = 0.0;
  const char* begin = tok.data();
  const char* end = tok.data() + tok.size();
  if (begin != end && *begin == '+') ++begin;  // from_chars rejects a leading '+'
  auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc() || res.ptr != end || begin == end) {
    throw Error::parse("line " + std::to_string(line_no) + ": malformed number token '" +
                       std::string(tok) + "'");
  }
  return value;
}

}  // namespace detail

// Loads word2vec/fastText text (header "<count> <dim>") or GloVe text
// (headerless) files. `auto` sniffs: a first line of exactly two integer
// tokens means a header. Duplicate words after NFC keep the first
// occurrence and bump the duplicate counter; parse errors carry 1-based
// line numbers.
inline EmbeddingSet load_embeddings(const std::string& path,
                                    EmbeddingFormat format = EmbeddingFormat::auto_detect,
                                    std::optional<std::uint32_t> expected_dimension = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error::io("cannot open embedding file: " + path);

  EmbeddingSet set;
  set.source_.path = path;

  std::string line;
  std::vector<std::string_view> toks;
  std::size_t line_no = 0;
  bool want_header;
  switch (format) {
    case EmbeddingFormat::word2vec_text:
    case EmbeddingFormat::fasttext_vec: want_header = true; break;
    case EmbeddingFormat::glove_text: want_header = false; break;
    case EmbeddingFormat::auto_detect: want_header = false; break;  // resolved below
  }

  std::uint32_t dim = 0;
  bool dim_known = false;
  bool first_line = true;
  std::vector<double> vec;

  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) strip_bom(line);
    detail::split_ws(line, toks);
    if (toks.empty()) continue;

    if (first_line) {
      first_line = false;
      const bool looks_like_header =
          toks.size() == 2 && detail::all_digits(toks[0]) && detail::all_digits(toks[1]);
      if (format == EmbeddingFormat::auto_detect) want_header = looks_like_header;
      if (want_header) {
        if (!looks_like_header) {
          throw Error::parse("line " + std::to_string(line_no) +
                             ": expected a '<count> <dim>' header");
        }
        std::uint64_t count = 0;
        std::uint64_t d = 0;
        std::from_chars(toks[0].data(), toks[0].data() + toks[0].size(), count);
        std::from_chars(toks[1].data(), toks[1].data() + toks[1].size(), d);
        if (d == 0) throw Error::parse("line 1: header declares dimension 0");
        dim = static_cast<std::uint32_t>(d);
        dim_known = true;
        set.source_.declared_count = count;
        if (expected_dimension && *expected_dimension != dim) {
          throw Error::validation("line 1: dimension " + std::to_string(dim) +
                                  " does not match expected " +
                                  std::to_string(*expected_dimension));
        }
        continue;
      }
    }

    if (!dim_known) {
      if (toks.size() < 2)
        throw Error::parse("line " + std::to_string(line_no) + ": no vector components");
      dim = static_cast<std::uint32_t>(toks.size() - 1);
      dim_known = true;
      if (expected_dimension && *expected_dimension != dim) {
        throw Error::validation("line " + std::to_string(line_no) + ": dimension " +
                                std::to_string(dim) + " does not match expected " +
                                std::to_string(*expected_dimension));
      }
    }

    if (toks.size() != static_cast<std::size_t>(dim) + 1) {
      throw Error::parse("line " + std::to_string(line_no) + ": expected " +
                         std::to_string(dim) + " components, found " +
                         std::to_string(toks.size() - 1));
    }
    vec.resize(dim);
    for (std::uint32_t j = 0; j < dim; ++j) {
      vec[j] = detail::parse_component(toks[j + 1], line_no);
    }
    set.insert(nfc(std::string(toks[0])), vec, &line_no);
  }
  if (!dim_known) throw Error::parse("embedding file has no data rows: " + path);

  set.dim_ = dim;
  set.source_.format = want_header
      ? std::string(to_string(format == EmbeddingFormat::auto_detect
                                  ? EmbeddingFormat::word2vec_text
                                  : format))
      : std::string(to_string(EmbeddingFormat::glove_text));
  return set;
}

// -------------------------------------------------------------------------
// Cosine similarity

namespace detail {

inline double sum_sq(std::span<const double> v) {
  double ssq = 0.0;
  for (double x : v) ssq += x * x;
  return ssq;
}

// Denominator formed as sqrt(ssq_u * ssq_v): with IEEE round-to-nearest
// this makes cosine(v, v) exactly 1.
inline double cosine_presq(std::span<const double> u, double u_ssq,
                           std::span<const double> v, double v_ssq) {
  double dot = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) dot += u[i] * v[i];
  const double c = dot / std::sqrt(u_ssq * v_ssq);
  return std::clamp(c, -1.0, 1.0);
}

}  // namespace detail

// dot(u,v) / (|u||v|), accumulated in double precision and clamped to
// [-1, 1] to absorb rounding.
inline double cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size())
    throw Error::validation("cosine: dimension mismatch (" + std::to_string(u.size()) +
                            " vs " + std::to_string(v.size()) + ")");
  if (u.empty()) throw Error::validation("cosine: empty vectors");
  const double su = detail::sum_sq(u);
  const double sv = detail::sum_sq(v);
  if (su == 0.0 || sv == 0.0) throw Error::degenerate("cosine: zero-norm input");
  return detail::cosine_presq(u, su, v, sv);
}

// -------------------------------------------------------------------------
// Lookup

enum class MultiwordPolicy { exact_only, punctuation_variants, average_subtokens };

inline std::string_view to_string(MultiwordPolicy p) {
  switch (p) {
    case MultiwordPolicy::exact_only: return "exact-only";
    case MultiwordPolicy::punctuation_variants: return "punctuation-variants";
    case MultiwordPolicy::average_subtokens: return "average-subtokens";
  }
  return "exact-only";
}

inline MultiwordPolicy multiword_policy_from_string(std::string_view s) {
  if (s == "exact-only" || s == "exact") return MultiwordPolicy::exact_only;
  if (s == "punctuation-variants" || s == "punct") return MultiwordPolicy::punctuation_variants;
  if (s == "average-subtokens" || s == "average") return MultiwordPolicy::average_subtokens;
  throw Error::validation("unknown multiword policy: " + std::string(s));
}

// Pure configuration: identical policy + query + set always resolves
// identically.
struct LookupPolicy {
  bool case_fallback = true;
  MultiwordPolicy multiword = MultiwordPolicy::exact_only;
  bool unicode_normalize = true;
};

struct LookupHit {
  std::vector<double> vec;
  // Absent when the vector was synthesized by subtoken averaging.
  std::optional<std::uint32_t> vocab_index;
};

namespace detail {

inline std::optional<std::uint32_t> find_with_case(const EmbeddingSet& set,
                                                   const std::string& q,
                                                   bool case_fallback) {
  if (auto idx = set.index_of(q)) return idx;
  if (case_fallback) {
    const std::string lower = simple_lowercase(q);
    if (lower != q) {
      if (auto idx = set.index_of(lower)) return idx;
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Resolution order: exact surface form, lowercase fallback, then the
// multiword policy. Absence is a value, never an error.
inline std::optional<LookupHit> lookup_detailed(const EmbeddingSet& set,
                                                std::string_view word,
                                                const LookupPolicy& policy) {
  const std::string q = policy.unicode_normalize ? nfc(word) : std::string(word);
  if (auto idx = detail::find_with_case(set, q, policy.case_fallback)) {
    auto v = set.vector_at(*idx);
    return LookupHit{{v.begin(), v.end()}, *idx};
  }
  if (q.find(' ') == std::string::npos) return std::nullopt;

  switch (policy.multiword) {
    case MultiwordPolicy::exact_only:
      return std::nullopt;
    case MultiwordPolicy::punctuation_variants: {
      for (const char* join : {"-", "_", ""}) {
        std::string variant;
        variant.reserve(q.size());
        for (char c : q) {
          if (c == ' ') variant += join;
          else variant += c;
        }
        if (auto idx = detail::find_with_case(set, variant, policy.case_fallback)) {
          auto v = set.vector_at(*idx);
          return LookupHit{{v.begin(), v.end()}, *idx};
        }
      }
      return std::nullopt;
    }
    case MultiwordPolicy::average_subtokens: {
      std::vector<std::string_view> subs;
      detail::split_ws(q, subs);
      if (subs.empty()) return std::nullopt;
      std::vector<double> acc(set.dimension(), 0.0);
      for (std::string_view sub : subs) {
        auto idx = detail::find_with_case(set, std::string(sub), policy.case_fallback);
        if (!idx) return std::nullopt;  // every subtoken must be present
        auto v = set.vector_at(*idx);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
      }
      for (double& x : acc) x /= static_cast<double>(subs.size());
      return LookupHit{std::move(acc), std::nullopt};
    }
  }
  return std::nullopt;
}

inline std::optional<std::vector<double>> lookup(const EmbeddingSet& set,
                                                 std::string_view word,
                                                 const LookupPolicy& policy) {
  if (auto hit = lookup_detailed(set, word, policy)) return std::move(hit->vec);
  return std::nullopt;
}

}  // namespace valnorm
