#include "ellgen/serialize.hpp"

#include <unistd.h>

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "json.hpp"

namespace ellgen {

namespace {

constexpr int kSchemaVersion = 1;

using ordered_json = nlohmann::ordered_json;

void append_rows(std::vector<Row>& rows, const YLaurent& y, int p, int q) {
  for (const auto& [e, c] : y.terms()) rows.push_back(Row{p, q, e, c});
}

ordered_json row_to_json(const Row& r) {
  ordered_json j;
  j["p"] = r.p;
  j["q"] = r.q;
  if (r.u % 2 == 0)
    j["y"] = r.u / 2;
  else
    j["y2"] = r.u;  // doubled exponent; only theta-like series hit this
  j["num"] = r.value.num_str();
  j["den"] = r.value.den_str();
  return j;
}

std::string y_exponent_str(int u) {
  if (u % 2 == 0) return std::to_string(u / 2);
  return std::to_string(u) + "/2";
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw std::invalid_argument("unknown format '" + name + "'");
}

std::vector<Row> rows_of(const PSeries& s) {
  std::vector<Row> rows;
  for (int l = 0; l <= s.p_order(); ++l)
    for (int m = 0; m <= s.q_order(); ++m)
      append_rows(rows, s.coeff(l).coeff(m), l, m);
  return rows;
}

std::vector<Row> rows_of(const QSeries& s, int p) {
  std::vector<Row> rows;
  for (int m = 0; m <= s.q_order(); ++m) append_rows(rows, s.coeff(m), p, m);
  return rows;
}

std::vector<Row> rows_of(const YLaurent& s, int p, int q) {
  std::vector<Row> rows;
  append_rows(rows, s, p, q);
  return rows;
}

std::string to_json(const Document& doc) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : doc.params) params[k] = v;
  j["params"] = params;
  j["truncation"] = {{"p", doc.p_trunc}, {"q", doc.q_trunc}};
  ordered_json rows = ordered_json::array();
  for (const auto& r : doc.rows) rows.push_back(row_to_json(r));
  j["coefficients"] = rows;
  return j.dump(2) + "\n";
}

std::string to_csv(const Document& doc) {
  std::ostringstream os;
  os << "p,q,y,num,den\n";
  for (const auto& r : doc.rows)
    os << r.p << "," << r.q << "," << y_exponent_str(r.u) << ","
       << r.value.num_str() << "," << r.value.den_str() << "\n";
  return os.str();
}

std::string to_text(const Document& doc) {
  std::ostringstream os;
  for (const auto& [k, v] : doc.params) os << "# " << k << " = " << v << "\n";
  os << "# truncation: p <= " << doc.p_trunc << ", q <= " << doc.q_trunc << "\n";
  size_t i = 0;
  while (i < doc.rows.size()) {
    const int p = doc.rows[i].p, q = doc.rows[i].q;
    YLaurent slice;
    while (i < doc.rows.size() && doc.rows[i].p == p && doc.rows[i].q == q) {
      slice.add_u(doc.rows[i].u, doc.rows[i].value);
      ++i;
    }
    os << "p^" << p << " q^" << q << " : " << slice.str() << "\n";
  }
  if (doc.rows.empty()) os << "0\n";
  return os.str();
}

std::string render(const Document& doc, Format format) {
  switch (format) {
    case Format::json: return to_json(doc);
    case Format::csv: return to_csv(doc);
    case Format::text: return to_text(doc);
  }
  throw std::logic_error("render: bad format");
}

Document parse_json_document(const std::string& payload) {
  ordered_json j;
  try {
    j = ordered_json::parse(payload);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON document: ") + e.what());
  }
  if (!j.is_object() || j.value("schema_version", -1) != kSchemaVersion)
    throw std::invalid_argument("bad JSON document: schema version mismatch");
  Document doc;
  for (const auto& [k, v] : j.at("params").items())
    doc.params.emplace_back(k, v.get<std::string>());
  doc.p_trunc = j.at("truncation").at("p").get<int>();
  doc.q_trunc = j.at("truncation").at("q").get<int>();
  for (const auto& row : j.at("coefficients")) {
    Row r;
    r.p = row.at("p").get<int>();
    r.q = row.at("q").get<int>();
    r.u = row.contains("y2") ? row.at("y2").get<int>() : 2 * row.at("y").get<int>();
    r.value = Rational::from_string(row.at("num").get<std::string>() + "/" +
                                    row.at("den").get<std::string>());
    doc.rows.push_back(r);
  }
  return doc;
}

std::string render_reports(const std::vector<CheckReport>& reports, Format format) {
  if (format == Format::json) {
    ordered_json out = ordered_json::array();
    for (const auto& rep : reports) {
      ordered_json j;
      j["name"] = rep.name;
      ordered_json params = ordered_json::object();
      for (const auto& [k, v] : rep.params) params[k] = v;
      j["params"] = params;
      j["status"] = rep.pass ? "pass" : "fail";
      if (rep.first_discrepancy) {
        const auto& d = *rep.first_discrepancy;
        j["first_discrepancy"] = {{"p", d.p},          {"q", d.q},
                                  {"y", y_exponent_str(d.u)}, {"lhs", d.lhs},
                                  {"rhs", d.rhs},      {"context", d.context}};
      }
      j["elapsed_us"] = rep.elapsed_us;
      out.push_back(j);
    }
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& rep : reports) {
    os << (rep.pass ? "PASS" : "FAIL") << " " << rep.name << " (";
    bool first = true;
    for (const auto& [k, v] : rep.params) {
      if (!first) os << ", ";
      os << k << "=" << v;
      first = false;
    }
    os << ") " << rep.elapsed_us / 1000 << "ms\n";
    if (rep.first_discrepancy) {
      const auto& d = *rep.first_discrepancy;
      os << "  first discrepancy at p^" << d.p << " q^" << d.q << " y^"
         << y_exponent_str(d.u) << ": " << d.lhs << " vs " << d.rhs;
      if (!d.context.empty()) os << " [" << d.context << "]";
      os << "\n";
    }
  }
  return os.str();
}

SeriesCache::SeriesCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  if (dir_.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) dir_.clear();  // unwritable cache directory disables caching
}

std::string SeriesCache::key_for(const std::string& kind, const Document& doc) {
  std::ostringstream os;
  os << "v" << kSchemaVersion << ":" << kind;
  for (const auto& [k, v] : doc.params) os << ":" << k << "=" << v;
  os << ":p" << doc.p_trunc << ":q" << doc.q_trunc;
  return os.str();
}

std::filesystem::path SeriesCache::path_for(const std::string& key) const {
  std::ostringstream os;
  os << std::hex << fnv1a(key);
  return dir_ / (os.str() + ".json");
}

std::optional<Document> SeriesCache::load(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    ordered_json j = ordered_json::parse(buf.str());
    if (j.value("cache_key", "") != key) return std::nullopt;
    return parse_json_document(j.value("document", ""));
  } catch (const std::exception&) {
    return std::nullopt;  // corrupt entries are misses, never errors
  }
}

void SeriesCache::store(const std::string& key, const Document& doc) const {
  if (!enabled()) return;
  ordered_json j;
  j["cache_key"] = key;
  j["document"] = to_json(doc);
  const auto target = path_for(key);
  const auto tmp = target.string() + ".tmp" + std::to_string(::getpid());
  std::error_code ec;
  {
    std::ofstream out(tmp);
    if (!out) return;  // cache is best-effort
    out << j.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace ellgen
