#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellgen/pseries.hpp"
#include "ellgen/qseries.hpp"
#include "ellgen/ylaurent.hpp"

namespace ellgen {

/// Location and values of the first failing coefficient, ordered
/// lexicographically by (p, q, u) exponent. y-exponents are reported in
/// u-units (u = y^{1/2}) so half-integer powers stay exact.
struct Discrepancy {
  int p = 0;
  int q = 0;
  int u = 0;
  std::string lhs;
  std::string rhs;
  std::string context;  // grid point that failed, if the check runs a grid
};

struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  bool pass = false;
  std::optional<Discrepancy> first_discrepancy;
  long elapsed_us = 0;
};

using CheckParams = std::map<std::string, std::string>;

/// Names of all registered identity checks, in canonical order.
const std::vector<std::string>& registered_checks();

/// Runs one named check. Results are deterministic given (params, seed);
/// raises UnknownCheck for unregistered names.
CheckReport run_check(const std::string& name, const CheckParams& params,
                      unsigned long seed);

/// Runs a whole suite: "all" or a single check name.
std::vector<CheckReport> run_suite(const std::string& suite,
                                   const CheckParams& params, unsigned long seed);

/// Exact coefficientwise comparison over the common truncation; nullopt when
/// equal. Exposed for tests and reused by every registered check.
std::optional<Discrepancy> first_difference(const PSeries& a, const PSeries& b);
std::optional<Discrepancy> first_difference(const QSeries& a, const QSeries& b);
std::optional<Discrepancy> first_difference(const YLaurent& a, const YLaurent& b);

}  // namespace ellgen
