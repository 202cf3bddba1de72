#pragma once

#include <array>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "valnorm/association.hpp"
#include "valnorm/error.hpp"
#include "valnorm/stimuli_data.hpp"

namespace valnorm {

inline constexpr std::array<std::string_view, 6> kPackCategories = {
    "flowers", "insects", "instruments", "weapons", "pleasant", "unpleasant"};

inline constexpr std::array<std::string_view, 7> kPackLanguages = {
    "zh", "en", "de", "pl", "pt", "es", "tr"};

// Six fixed categories of stimuli for one language. dedup_counts records how
// many repeated entries each category's source list carried.
struct StimulusPack {
  std::string language;
  std::vector<std::pair<std::string, WordSet>> categories;
  std::map<std::string, std::uint64_t> dedup_counts;

  const WordSet& category(std::string_view name) const {
    for (const auto& [cat, set] : categories) {
      if (cat == name) return set;
    }
    throw Error::validation("no such pack category: " + std::string(name));
  }
};

namespace detail {

inline StimulusPack parse_pack(const nlohmann::json& doc, const std::string& context) {
  if (!doc.is_object() || !doc.contains("language") || !doc.contains("categories")) {
    throw Error::parse(context + ": pack must be {language, categories:{...}}");
  }
  StimulusPack pack;
  pack.language = doc.at("language").get<std::string>();
  const auto& cats = doc.at("categories");
  if (!cats.is_object()) throw Error::parse(context + ": categories must be an object");
  for (std::string_view name : kPackCategories) {
    const std::string key(name);
    if (!cats.contains(key)) {
      throw Error::validation(context + ": missing category '" + key + "'");
    }
    std::vector<std::string> words;
    for (const auto& item : cats.at(key)) {
      words.push_back(item.get<std::string>());
    }
    if (words.empty()) {
      throw Error::validation(context + ": category '" + key + "' is empty");
    }
    WordSet set = make_word_set(key, pack.language, words);
    pack.dedup_counts[key] = set.duplicates_collapsed;
    pack.categories.emplace_back(key, std::move(set));
  }
  return pack;
}

}  // namespace detail

// Bundled pack for one of the seven supported languages.
inline StimulusPack load_pack(std::string_view language) {
  for (const auto& bundled : detail::kBundledPacks) {
    if (bundled.language == language) {
      return detail::parse_pack(nlohmann::json::parse(bundled.json),
                                "bundled pack '" + std::string(language) + "'");
    }
  }
  throw Error::validation("unsupported pack language: " + std::string(language) +
                          " (supported: zh en de pl pt es tr)");
}

// User-supplied pack file in the same JSON layout.
inline StimulusPack load_custom_pack(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error::io("cannot open pack file: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error::parse("pack file " + path + ": " + e.what());
  }
  return detail::parse_pack(doc, path);
}

inline std::string serialize_pack(const StimulusPack& pack) {
  nlohmann::json cats = nlohmann::json::object();
  for (const auto& [name, set] : pack.categories) {
    cats[name] = set.words;
  }
  nlohmann::json doc{{"language", pack.language}, {"categories", cats}};
  return doc.dump(1);
}

}  // namespace valnorm
