#include "catch_amalgamated.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "valnorm/stats.hpp"
#include "valnorm/vectorspace.hpp"

using namespace valnorm;

namespace {
const std::string kFixtures = VALNORM_FIXTURES_DIR;
}

TEST_CASE("load word2vec header fixture") {
  const auto set = load_embeddings(kFixtures + "/tiny_header.vec");
  CHECK(set.dimension() == 4);
  CHECK(set.size() == 3);
  REQUIRE(set.source().declared_count.has_value());
  CHECK(*set.source().declared_count == 3);
  const auto idx = set.index_of("rose");
  REQUIRE(idx.has_value());
  const auto v = set.vector_at(*idx);
  CHECK(v[0] == 0.1);
  CHECK(v[3] == 0.4);
}

TEST_CASE("header and headerless layouts load identically") {
  const auto a = load_embeddings(kFixtures + "/tiny_header.vec");
  const auto b = load_embeddings(kFixtures + "/tiny_glove.txt");
  REQUIRE(a.dimension() == b.dimension());
  REQUIRE(a.size() == b.size());
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    const auto& word = a.word_at(i);
    const auto j = b.index_of(word);
    REQUIRE(j.has_value());
    const auto va = a.vector_at(i);
    const auto vb = b.vector_at(*j);
    for (std::size_t k = 0; k < va.size(); ++k) CHECK(va[k] == vb[k]);
    CHECK(a.norm_at(i) == b.norm_at(*j));
  }
}

TEST_CASE("explicit formats and expected dimension") {
  CHECK_NOTHROW(load_embeddings(kFixtures + "/tiny_header.vec",
                                EmbeddingFormat::word2vec_text, 4));
  CHECK_NOTHROW(load_embeddings(kFixtures + "/tiny_glove.txt",
                                EmbeddingFormat::glove_text, 4));
  CHECK_THROWS_WITH(load_embeddings(kFixtures + "/tiny_header.vec",
                                    EmbeddingFormat::auto_detect, 7),
                    Catch::Matchers::ContainsSubstring("does not match expected"));
  // glove parse of a file that starts with a header line: the header is data
  CHECK_THROWS_AS(load_embeddings(kFixtures + "/tiny_header.vec",
                                  EmbeddingFormat::glove_text),
                  Error);
  // word2vec parse of a headerless file
  CHECK_THROWS_WITH(load_embeddings(kFixtures + "/tiny_glove.txt",
                                    EmbeddingFormat::word2vec_text),
                    Catch::Matchers::ContainsSubstring("header"));
}

TEST_CASE("row with wrong component count names its line") {
  CHECK_THROWS_WITH(load_embeddings(kFixtures + "/bad_row.vec"),
                    Catch::Matchers::ContainsSubstring("line 3"));
}

TEST_CASE("zero vector rows are rejected with line numbers") {
  CHECK_THROWS_WITH(load_embeddings(kFixtures + "/zero_vector.vec"),
                    Catch::Matchers::ContainsSubstring("line 3") &&
                        Catch::Matchers::ContainsSubstring("zero vector"));
}

TEST_CASE("malformed number tokens name their line") {
  CHECK_THROWS_WITH(load_embeddings(kFixtures + "/bad_number.vec"),
                    Catch::Matchers::ContainsSubstring("line 3") &&
                        Catch::Matchers::ContainsSubstring("malformed number"));
}

TEST_CASE("BOM and plus-signed components are tolerated") {
  const auto set = load_embeddings(kFixtures + "/bom_plus.vec");
  CHECK(set.size() == 2);
  const auto idx = set.index_of("rose");
  REQUIRE(idx.has_value());
  CHECK(set.vector_at(*idx)[0] == 0.5);
}

TEST_CASE("missing file is an io error") {
  try {
    load_embeddings(kFixtures + "/no_such_file.vec");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::io);
  }
}

TEST_CASE("duplicate words keep the first occurrence and count") {
  const auto set = load_embeddings(kFixtures + "/dup_words.vec");
  CHECK(set.size() == 3);
  CHECK(set.duplicates_collapsed() == 1);
  const auto idx = set.index_of("rose");
  REQUIRE(idx.has_value());
  CHECK(set.vector_at(*idx)[0] == 1.0);  // first row wins
}

TEST_CASE("vocabulary is NFC-unique") {
  // one precomposed and one decomposed spelling of the same word
  const auto set = load_embeddings(kFixtures + "/nfc_dup.txt");
  CHECK(set.size() == 2);
  CHECK(set.duplicates_collapsed() == 1);
  const auto idx = set.index_of(nfc("café"));
  REQUIRE(idx.has_value());
  CHECK(set.vector_at(*idx)[0] == 1.0);
}

TEST_CASE("cached norms match recomputed euclidean norms") {
  const auto set = load_embeddings(kFixtures + "/tiny_header.vec");
  for (std::uint32_t i = 0; i < set.size(); ++i) {
    const auto v = set.vector_at(i);
    double ssq = 0.0;
    for (double x : v) ssq += x * x;
    const double recomputed = std::sqrt(ssq);
    CHECK(std::abs(set.norm_at(i) - recomputed) <= 1e-12 * recomputed);
    CHECK(set.norm_sq_at(i) == ssq);
  }
}

TEST_CASE("cosine identities") {
  std::vector<double> v{0.3, -0.7, 2.0};
  CHECK(cosine(v, v) == 1.0);
  std::vector<double> e1{1.0, 0.0};
  std::vector<double> e2{0.0, 1.0};
  CHECK(cosine(e1, e2) == 0.0);
  // frozen reference: 32 / (sqrt(14) * sqrt(77))
  std::vector<double> u{1, 2, 3};
  std::vector<double> w{4, 5, 6};
  CHECK(cosine(u, w) == Catch::Approx(0.9746318461970762).margin(1e-15));
}

TEST_CASE("cosine errors") {
  std::vector<double> a{1.0, 0.0};
  std::vector<double> b{1.0, 0.0, 0.0};
  CHECK_THROWS_AS(cosine(a, b), Error);
  std::vector<double> z{0.0, 0.0};
  try {
    cosine(a, z);
    FAIL("expected degenerate error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::degenerate);
  }
}

TEST_CASE("cosine symmetry and positive-scale invariance") {
  SeededSampler rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t d = 2 + rng.bounded(6);
    std::vector<double> u(d), v(d);
    for (std::size_t i = 0; i < d; ++i) {
      u[i] = rng.unit() * 4.0 - 2.0;
      v[i] = rng.unit() * 4.0 - 2.0;
    }
    const double c = cosine(u, v);
    CHECK(cosine(v, u) == c);  // exact symmetry
    const double scale = 0.25 + rng.unit() * 8.0;
    std::vector<double> su = u;
    for (double& x : su) x *= scale;
    CHECK(cosine(su, v) == Catch::Approx(c).margin(1e-12));
  }
}

TEST_CASE("lookup exact and case fallback") {
  const auto set = load_embeddings(kFixtures + "/tiny_header.vec");
  LookupPolicy policy;
  REQUIRE(lookup(set, "rose", policy).has_value());
  REQUIRE(lookup(set, "Rose", policy).has_value());
  CHECK((*lookup(set, "Rose", policy))[0] == 0.1);
  policy.case_fallback = false;
  CHECK_FALSE(lookup(set, "Rose", policy).has_value());
  CHECK_FALSE(lookup(set, "peony", LookupPolicy{}).has_value());
}

TEST_CASE("lookup determinism") {
  const auto set = load_embeddings(kFixtures + "/multiword.vec");
  LookupPolicy policy;
  policy.multiword = MultiwordPolicy::average_subtokens;
  for (int i = 0; i < 5; ++i) {
    const auto a = lookup(set, "gaita de foles", policy);
    const auto b = lookup(set, "gaita de foles", policy);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(*a == *b);
  }
}

TEST_CASE("multiword policies") {
  const auto set = load_embeddings(kFixtures + "/multiword.vec");

  LookupPolicy exact;
  exact.multiword = MultiwordPolicy::exact_only;
  CHECK_FALSE(lookup(set, "gaita de foles", exact).has_value());

  LookupPolicy punct;
  punct.multiword = MultiwordPolicy::punctuation_variants;
  const auto joined = lookup(set, "gaita de foles", punct);
  REQUIRE(joined.has_value());
  CHECK((*joined)[0] == 9.0);  // resolves the hyphenated vocabulary entry

  LookupPolicy avg;
  avg.multiword = MultiwordPolicy::average_subtokens;
  const auto mean3 = lookup(set, "gaita de foles", avg);
  REQUIRE(mean3.has_value());
  // frozen reference: component-wise mean of the three subtoken vectors
  CHECK((*mean3)[0] == Catch::Approx(1.5).margin(1e-15));
  CHECK((*mean3)[1] == Catch::Approx(1.3333333333333333).margin(1e-15));
  CHECK((*mean3)[2] == Catch::Approx(0.8333333333333334).margin(1e-15));
  CHECK((*mean3)[3] == Catch::Approx(3.0).margin(1e-15));

  // any absent subtoken means no averaged result
  CHECK_FALSE(lookup(set, "gaita de nada", avg).has_value());
}

TEST_CASE("decomposed queries hit precomposed vocabulary") {
  const auto set = load_embeddings(kFixtures + "/nfc_dup.txt");
  LookupPolicy policy;
  const auto hit = lookup(set, "café", policy);  // e + combining acute
  REQUIRE(hit.has_value());
  CHECK((*hit)[0] == 1.0);
  policy.unicode_normalize = false;
  CHECK_FALSE(lookup(set, "café", policy).has_value());
}

TEST_CASE("from_rows validates invariants") {
  using Rows = std::vector<std::pair<std::string, std::vector<double>>>;
  Rows ok{{"a", {1.0, 0.0}}, {"b", {0.0, 1.0}}};
  const auto set = EmbeddingSet::from_rows(2, ok);
  CHECK(set.size() == 2);
  CHECK(set.norm_at(0) == 1.0);

  Rows zero{{"a", {0.0, 0.0}}};
  CHECK_THROWS_AS(EmbeddingSet::from_rows(2, zero), Error);
  Rows shape{{"a", {1.0, 2.0, 3.0}}};
  CHECK_THROWS_AS(EmbeddingSet::from_rows(2, shape), Error);
}
