#include "catch_amalgamated.hpp"

#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "valnorm/reports.hpp"

using namespace valnorm;

namespace {

const std::string kFixtures = VALNORM_FIXTURES_DIR;

AssociationResult result_with_es(double es) {
  AssociationResult r;
  r.effect_size = es;
  return r;
}

}  // namespace

TEST_CASE("aggregate variance hand values") {
  std::vector<std::pair<std::string, AssociationResult>> runs;
  for (int i = 0; i < 7; ++i) runs.emplace_back("lang" + std::to_string(i), result_with_es(1.3));
  const auto same = aggregate_variance("flowers-insects", runs, StddevMode::population);
  CHECK(same.variance == 0.0);
  CHECK(same.runs.size() == 7);

  std::vector<std::pair<std::string, AssociationResult>> three{
      {"a", result_with_es(1.0)}, {"b", result_with_es(1.2)}, {"c", result_with_es(1.4)}};
  const auto report = aggregate_variance("hand", three, StddevMode::population);
  // frozen reference value
  CHECK(report.variance == Catch::Approx(0.026666666666666655).margin(1e-15));
  CHECK(report.mode == StddevMode::population);

  CHECK_THROWS_AS(aggregate_variance("x", {{"only", result_with_es(1.0)}}), Error);
}

TEST_CASE("aggregate variance is order-invariant exactly") {
  std::vector<std::pair<std::string, AssociationResult>> runs{
      {"a", result_with_es(0.31)}, {"b", result_with_es(-0.77)}, {"c", result_with_es(1.955)},
      {"d", result_with_es(0.002)}};
  const auto base = aggregate_variance("bias", runs, StddevMode::sample);
  std::reverse(runs.begin(), runs.end());
  const auto flipped = aggregate_variance("bias", runs, StddevMode::sample);
  CHECK(base.variance == flipped.variance);
}

TEST_CASE("variance report is self-consistent") {
  std::vector<std::pair<std::string, AssociationResult>> runs{
      {"a", result_with_es(0.4)}, {"b", result_with_es(0.9)}, {"c", result_with_es(0.65)}};
  const auto report = aggregate_variance("bias", runs, StddevMode::population);
  std::vector<double> values;
  for (const auto& [label, es] : report.runs) values.push_back(es);
  CHECK(report.variance == variance(values, StddevMode::population));
}

TEST_CASE("timeline over identical slices has zero variance") {
  const std::string emb = kFixtures + "/valnorm_synth/embeddings.vec";
  const auto lex =
      load_lexicon(kFixtures + "/valnorm_synth/lexicon.csv", LexiconFormat::two_column_csv,
                   std::size_t{0}, std::size_t{1}, {-4.0, 4.0});
  std::vector<std::string> pw, uw;
  for (int i = 0; i < 25; ++i) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "p%02d", i);
    pw.push_back(buf);
    std::snprintf(buf, sizeof(buf), "u%02d", i);
    uw.push_back(buf);
  }
  const auto pleasant = make_word_set("pleasant", "", pw);
  const auto unpleasant = make_word_set("unpleasant", "", uw);

  std::vector<TimelineSliceSpec> slices{{"1990", emb, EmbeddingFormat::auto_detect},
                                        {"1890", emb, EmbeddingFormat::auto_detect}};
  const auto report = run_timeline(slices, lex, pleasant, unpleasant, LookupPolicy{},
                                   std::nullopt, StddevMode::sample);
  REQUIRE(report.slices.size() == 2);
  // ordered by label
  CHECK(report.slices[0].label == "1890");
  CHECK(report.slices[1].label == "1990");
  REQUIRE(report.slices[0].pearson_rho.has_value());
  REQUIRE(report.slices[1].pearson_rho.has_value());
  CHECK(*report.slices[0].pearson_rho == *report.slices[1].pearson_rho);
  REQUIRE(report.variance_pearson.has_value());
  CHECK(*report.variance_pearson == 0.0);
  CHECK(report.slices[0].n_present == 20);
}

TEST_CASE("timeline variance equals stats variance of its own slices") {
  const std::string emb = kFixtures + "/valnorm_synth/embeddings.vec";
  const std::string emb2 = kFixtures + "/evalsuite/sim_embeddings.vec";
  const auto lex =
      load_lexicon(kFixtures + "/valnorm_synth/lexicon.csv", LexiconFormat::two_column_csv,
                   std::size_t{0}, std::size_t{1}, {-4.0, 4.0});
  std::vector<std::string> pw, uw;
  for (int i = 0; i < 25; ++i) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "p%02d", i);
    pw.push_back(buf);
    std::snprintf(buf, sizeof(buf), "u%02d", i);
    uw.push_back(buf);
  }
  const auto pleasant = make_word_set("pleasant", "", pw);
  const auto unpleasant = make_word_set("unpleasant", "", uw);

  // the second slice has no attribute words at all -> recorded as null
  std::vector<TimelineSliceSpec> slices{{"a", emb, EmbeddingFormat::auto_detect},
                                        {"b", emb2, EmbeddingFormat::auto_detect}};
  const auto report = run_timeline(slices, lex, pleasant, unpleasant, LookupPolicy{},
                                   std::nullopt, StddevMode::sample);
  REQUIRE(report.slices.size() == 2);
  CHECK(report.slices[0].pearson_rho.has_value());
  CHECK_FALSE(report.slices[1].pearson_rho.has_value());
  CHECK_FALSE(report.slices[1].note.empty());

  std::vector<double> rhos;
  for (const auto& s : report.slices) {
    if (s.pearson_rho) rhos.push_back(*s.pearson_rho);
  }
  REQUIRE(report.variance_pearson.has_value());
  CHECK(*report.variance_pearson ==
        Catch::Approx(variance(rhos, StddevMode::population)).margin(1e-12));
}

TEST_CASE("three-slice family reproduces per-slice reference correlations") {
  const std::string base = kFixtures + "/valnorm_synth";
  std::ifstream in(base + "/expected.json");
  REQUIRE(in.good());
  const auto expected = nlohmann::json::parse(in);

  const auto lex = load_lexicon(base + "/lexicon.csv", LexiconFormat::two_column_csv,
                                std::size_t{0}, std::size_t{1}, {-4.0, 4.0});
  std::vector<std::string> pw, uw;
  for (int i = 0; i < 25; ++i) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "p%02d", i);
    pw.push_back(buf);
    std::snprintf(buf, sizeof(buf), "u%02d", i);
    uw.push_back(buf);
  }
  const auto pleasant = make_word_set("pleasant", "", pw);
  const auto unpleasant = make_word_set("unpleasant", "", uw);

  std::vector<TimelineSliceSpec> slices{
      {"a", base + "/embeddings.vec", EmbeddingFormat::auto_detect},
      {"b", base + "/slice_b.vec", EmbeddingFormat::auto_detect},
      {"c", base + "/slice_c.vec", EmbeddingFormat::auto_detect}};
  const auto report = run_timeline(slices, lex, pleasant, unpleasant, LookupPolicy{},
                                   std::nullopt, StddevMode::sample);
  REQUIRE(report.slices.size() == 3);
  REQUIRE(report.slices[0].pearson_rho.has_value());
  CHECK(*report.slices[0].pearson_rho == Catch::Approx(1.0).margin(1e-9));
  CHECK(*report.slices[1].pearson_rho ==
        Catch::Approx(expected.at("slice_rhos").at("slice_b").get<double>()).margin(1e-12));
  CHECK(*report.slices[2].pearson_rho ==
        Catch::Approx(expected.at("slice_rhos").at("slice_c").get<double>()).margin(1e-12));

  std::vector<double> rhos{*report.slices[0].pearson_rho, *report.slices[1].pearson_rho,
                           *report.slices[2].pearson_rho};
  REQUIRE(report.variance_pearson.has_value());
  CHECK(*report.variance_pearson ==
        Catch::Approx(variance(rhos, StddevMode::population)).margin(1e-15));
}

TEST_CASE("a slice that fails to load aborts with its label") {
  const auto lex =
      load_lexicon(kFixtures + "/valnorm_synth/lexicon.csv", LexiconFormat::two_column_csv,
                   std::size_t{0}, std::size_t{1}, {-4.0, 4.0});
  const auto pleasant = make_word_set("pleasant", "", std::vector<std::string>{"p00"});
  const auto unpleasant = make_word_set("unpleasant", "", std::vector<std::string>{"u00"});
  std::vector<TimelineSliceSpec> slices{{"1850", kFixtures + "/does_not_exist.vec",
                                         EmbeddingFormat::auto_detect}};
  try {
    run_timeline(slices, lex, pleasant, unpleasant, LookupPolicy{}, std::nullopt,
                 StddevMode::sample);
    FAIL("expected io error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::io);
    CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("1850"));
  }
}
