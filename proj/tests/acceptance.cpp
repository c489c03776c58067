// Acceptance suite: one line per criterion, exact equality throughout.
// Exit code 0 when every criterion passes.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "ellgen/verify.hpp"

namespace {

using namespace ellgen;

struct Criterion {
  std::string label;
  std::vector<std::pair<std::string, CheckParams>> checks;
  double budget_seconds = 0;  // 0 = no stated budget
};

std::string ellgen_binary;

bool run_divisibility_probe() {
  if (ellgen_binary.empty()) {
    std::cerr << "  no ellgen binary supplied (--ellgen); cannot probe exit code\n";
    return false;
  }
  const std::string cmd =
      ellgen_binary +
      " genus k3-moduli --s 2 --r 1 --c1sq 0 --c2 3 --lc1 0 --lsq 0"
      " > /dev/null 2> /dev/null";
  const int status = std::system(cmd.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (code != 2) {
    std::cerr << "  divisibility violation exited " << code << ", expected 2\n";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--ellgen") ellgen_binary = argv[i + 1];
  if (ellgen_binary.empty())
    if (const char* env = std::getenv("ELLGEN_BIN")) ellgen_binary = env;

  const unsigned long seed = 2026;
  const std::vector<Criterion> criteria = {
      {"1 DMVV specialization (5 surfaces, L=O, P=4, Q=3)",
       {{"dmvv", {{"P", "4"}, {"Q", "3"}}}},
       30.0},
      {"2 q=0 reduction to the chi_y product (3x3x3 grid, P=8)",
       {{"q0_reduction", {{"P", "8"}}}}},
      {"3 Euler numbers at y=1 (P=10)", {{"euler_gottsche", {{"P", "10"}}}}},
      {"4 Verlinde/EGL coefficient oracle (n<=6)",
       {{"egl_binomial", {{"n_max", "6"}}}}},
      {"5 Lagrange lemma, 50 seeded samples (orders<=10)",
       {{"lagrange", {{"samples", "50"}, {"max_order", "10"}}}},
       60.0},
      {"6 K3 cross-consistency (pipeline + moduli two paths, Q=3)",
       {{"k3_pipeline_vs_extraction", {{"P", "4"}, {"Q", "3"}}},
        {"k3_moduli_two_paths", {{"Q", "3"}}}}},
      {"7 theta identity at Q=8", {{"theta_square", {{"Q", "8"}}}}},
      {"8 structural invariants (multiplicativity, support, integrality)",
       {{"lift_multiplicative", {{"P", "4"}, {"Q", "3"}, {"samples", "6"}}},
        {"jacobi_support", {{"Q", "10"}}},
        {"integrality", {{"P", "4"}, {"Q", "3"}}}}},
      {"9 vd arithmetic, 100 seeded samples + CLI exit-code probe",
       {{"vd_two_ways", {{"samples", "100"}}}}},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (const auto& [name, params] : criterion.checks) {
      const CheckReport rep = run_check(name, params, seed);
      if (!rep.pass) {
        ok = false;
        detail = name;
        if (rep.first_discrepancy) {
          const auto& d = *rep.first_discrepancy;
          detail += ": p^" + std::to_string(d.p) + " q^" + std::to_string(d.q) +
                    " u^" + std::to_string(d.u) + " " + d.lhs + " vs " + d.rhs;
          if (!d.context.empty()) detail += " [" + d.context + "]";
        }
        break;
      }
    }
    if (ok && criterion.label[0] == '9') ok = run_divisibility_probe();
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && criterion.budget_seconds > 0 && elapsed > criterion.budget_seconds) {
      ok = false;
      detail = "time budget exceeded (" + std::to_string(elapsed) + "s > " +
               std::to_string(criterion.budget_seconds) + "s)";
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << criterion.label
              << "  (" << elapsed << "s)\n";
    if (!ok) {
      ++failures;
      if (!detail.empty()) std::cout << "       " << detail << "\n";
    }
  }
  std::cout << (failures == 0 ? "all criteria passed\n"
                              : std::to_string(failures) + " criteria failed\n");
  return failures == 0 ? 0 : 1;
}
