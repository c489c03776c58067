#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellgen/pseries.hpp"
#include "ellgen/qseries.hpp"
#include "ellgen/verify.hpp"
#include "ellgen/ylaurent.hpp"

namespace ellgen {

enum class Format { json, csv, text };

Format parse_format(const std::string& name);  // throws std::invalid_argument

/// One exact coefficient at exponents (p, q, u); u = doubled y-exponent.
struct Row {
  int p = 0;
  int q = 0;
  int u = 0;
  Rational value;

  bool operator==(const Row&) const = default;
};

/// A fully parameterized result ready for rendering: the parameter echo (in
/// a fixed order), the truncation orders, and the coefficient rows sorted by
/// (p, q, u).
struct Document {
  std::vector<std::pair<std::string, std::string>> params;
  int p_trunc = 0;
  int q_trunc = 0;
  std::vector<Row> rows;

  bool operator==(const Document&) const = default;
};

std::vector<Row> rows_of(const PSeries& s);
std::vector<Row> rows_of(const QSeries& s, int p = 0);
std::vector<Row> rows_of(const YLaurent& s, int p = 0, int q = 0);

std::string render(const Document& doc, Format format);
std::string to_json(const Document& doc);
std::string to_csv(const Document& doc);
std::string to_text(const Document& doc);

/// Parses the JSON rendering back into a document (round-trip inverse of
/// to_json). Throws std::invalid_argument on malformed input.
Document parse_json_document(const std::string& payload);

std::string render_reports(const std::vector<CheckReport>& reports, Format format);

/// File-backed cache of rendered series documents. Writes go to a temp file
/// and are renamed into place; anything unreadable or mismatched counts as a
/// miss, so deleting the directory is always safe.
class SeriesCache {
 public:
  SeriesCache() = default;
  explicit SeriesCache(std::filesystem::path dir);

  bool enabled() const { return !dir_.empty(); }

  std::optional<Document> load(const std::string& key) const;
  void store(const std::string& key, const Document& doc) const;

  static std::string key_for(const std::string& kind,
                             const Document& doc);

 private:
  std::filesystem::path path_for(const std::string& key) const;

  std::filesystem::path dir_;
};

}  // namespace ellgen
