#include "doctest.h"
#include "ellgen/jacobi_forms.hpp"
#include "ellgen/serialize.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <tuple>

using namespace ellgen;

namespace {

Document sample_doc() {
  Document doc;
  doc.params = {{"command", "series"}, {"name", "phi_m21"}, {"q_order", "2"}};
  doc.p_trunc = 0;
  doc.q_trunc = 2;
  doc.rows = rows_of(phi_m21(2));
  return doc;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("ellgen_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("rows are ordered by (p, q, u) and exact") {
  const auto rows = rows_of(phi_m21(1));
  REQUIRE(rows.size() == 8);
  for (size_t i = 1; i < rows.size(); ++i) {
    const auto a = std::tuple(rows[i - 1].p, rows[i - 1].q, rows[i - 1].u);
    const auto b = std::tuple(rows[i].p, rows[i].q, rows[i].u);
    CHECK(a < b);
  }
  CHECK(rows[0].q == 0);
  CHECK(rows[0].u == -2);
  CHECK(rows[0].value == Rational(1));
}

TEST_CASE("JSON round trip") {
  const Document doc = sample_doc();
  const std::string payload = to_json(doc);
  const Document back = parse_json_document(payload);
  CHECK(back == doc);
  CHECK(to_json(back) == payload);
  CHECK_THROWS_AS(parse_json_document("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_json_document("{\"schema_version\": 999}"),
                  std::invalid_argument);
}

TEST_CASE("half-integer y-exponents use the doubled field") {
  Document doc;
  doc.params = {{"name", "theta_hat"}};
  doc.p_trunc = 0;
  doc.q_trunc = 1;
  doc.rows = rows_of(theta_hat(1));
  const std::string payload = to_json(doc);
  CHECK(payload.find("\"y2\"") != std::string::npos);
  CHECK(parse_json_document(payload) == doc);
  // CSV spells the exponent as an exact fraction.
  const std::string csv = to_csv(doc);
  CHECK(csv.find("/2,") != std::string::npos);
}

TEST_CASE("rendered output never contains floating point") {
  const Document doc = sample_doc();
  for (const auto format : {Format::json, Format::csv, Format::text}) {
    const std::string payload = render(doc, format);
    CHECK(payload.find('.') == std::string::npos);
  }
  // CSV is purely numeric after the header, so no exponent letter either.
  const std::string csv = to_csv(doc);
  CHECK(csv.find('e', csv.find('\n')) == std::string::npos);
}

TEST_CASE("format names") {
  CHECK(parse_format("json") == Format::json);
  CHECK(parse_format("csv") == Format::csv);
  CHECK(parse_format("text") == Format::text);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("cache stores and reloads documents") {
  const TempDir tmp;
  const SeriesCache cache(tmp.path);
  REQUIRE(cache.enabled());
  const Document doc = sample_doc();
  const std::string key = SeriesCache::key_for("series", doc);

  CHECK_FALSE(cache.load(key).has_value());
  cache.store(key, doc);
  const auto hit = cache.load(key);
  REQUIRE(hit.has_value());
  CHECK(*hit == doc);
  // A different key misses even with files present.
  CHECK_FALSE(cache.load(key + ":other").has_value());
}

TEST_CASE("corrupt cache entries are treated as misses") {
  const TempDir tmp;
  const SeriesCache cache(tmp.path);
  const Document doc = sample_doc();
  const std::string key = SeriesCache::key_for("series", doc);
  cache.store(key, doc);
  // Truncate every cache file.
  for (const auto& entry : std::filesystem::directory_iterator(tmp.path)) {
    std::ofstream f(entry.path(), std::ios::trunc);
    f << "{ not json";
  }
  CHECK_FALSE(cache.load(key).has_value());
  CHECK_FALSE(SeriesCache().enabled());
}
