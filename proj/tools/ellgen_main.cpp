// ellgen: exact q-expansion engine for elliptic-genus and chi_{-y}-genus
// generating functions of Hilbert schemes of points and moduli of sheaves on
// K3 surfaces. All coefficients are exact rationals; no output contains
// floating point.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ellgen/errors.hpp"
#include "ellgen/genera.hpp"
#include "ellgen/jacobi_forms.hpp"
#include "ellgen/lifts.hpp"
#include "ellgen/serialize.hpp"
#include "ellgen/verify.hpp"

namespace {

using namespace ellgen;

struct Options {
  std::string format = "text";
  std::string out;
  std::string cache_dir;
  int p_order = 4;
  int q_order = 4;
};

void emit(const Options& opt, const std::string& payload) {
  if (opt.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw std::invalid_argument("cannot write to '" + opt.out + "'");
  f << payload;
}

SeriesCache open_cache(const Options& opt) {
  if (!opt.cache_dir.empty()) return SeriesCache(opt.cache_dir);
  if (const char* env = std::getenv("ELLGEN_CACHE"); env && *env)
    return SeriesCache(env);
  return SeriesCache();
}

template <class Fn>
Document cached(const Options& opt, const std::string& kind, Document skeleton,
                Fn compute) {
  const SeriesCache cache = open_cache(opt);
  const std::string key = SeriesCache::key_for(kind, skeleton);
  if (auto hit = cache.load(key)) return *hit;
  skeleton.rows = compute();
  cache.store(key, skeleton);
  return skeleton;
}

struct SeriesArgs {
  std::string name;
  long k2 = 0;
  long chi = 2;
  bool k2_set = false;
  bool chi_set = false;
};

int run_series(const Options& opt, const SeriesArgs& args) {
  Document doc;
  doc.params.emplace_back("command", "series");
  doc.params.emplace_back("name", args.name);

  const int nq = opt.q_order, np = opt.p_order;
  std::function<std::vector<Row>()> compute;
  if (args.name == "phi_m21") {
    doc.p_trunc = 0; doc.q_trunc = nq;
    compute = [=] { return rows_of(phi_m21(nq)); };
  } else if (args.name == "h") {
    doc.p_trunc = 0; doc.q_trunc = nq;
    compute = [=] { return rows_of(h_series(nq)); };
  } else if (args.name == "wp_phi_m21") {
    doc.p_trunc = 0; doc.q_trunc = nq;
    compute = [=] { return rows_of(wp_phi_m21(nq)); };
  } else if (args.name == "phi_01") {
    doc.p_trunc = 0; doc.q_trunc = nq;
    compute = [=] { return rows_of(phi_01(nq)); };
  } else if (args.name == "ell_surface") {
    if (!args.k2_set || !args.chi_set)
      throw std::invalid_argument("series ell_surface requires --k2 and --chi");
    doc.params.emplace_back("k2", std::to_string(args.k2));
    doc.params.emplace_back("chi", std::to_string(args.chi));
    doc.p_trunc = 0; doc.q_trunc = nq;
    compute = [=] { return rows_of(ell_surface(args.k2, args.chi, nq)); };
  } else if (args.name == "theta_hat") {
    doc.p_trunc = 0; doc.q_trunc = nq;
    compute = [=] { return rows_of(theta_hat(nq)); };
  } else if (args.name == "eta_bar") {
    doc.p_trunc = 0; doc.q_trunc = nq;
    compute = [=] { return rows_of(eta_bar(nq)); };
  } else if (args.name == "delta_tilde") {
    doc.p_trunc = np; doc.q_trunc = 0;
    compute = [=] { return rows_of(delta_tilde(np)); };
  } else {
    raise(errc::unknown_series, "unknown series '" + args.name + "'");
  }
  doc.params.emplace_back("q_order", std::to_string(doc.q_trunc));
  if (doc.p_trunc > 0)
    doc.params.emplace_back("p_order", std::to_string(doc.p_trunc));
  const Document full = cached(opt, "series", doc, compute);
  emit(opt, render(full, parse_format(opt.format)));
  return 0;
}

struct LiftArgs {
  std::string name;
  int a = 0;
  int b = 0;
  bool negate = false;
};

int run_lift(const Options& opt, const LiftArgs& args) {
  SeriesProvider provider;
  if (args.name == "phi_m21") provider = [](int q) { return phi_m21(q); };
  else if (args.name == "phi_01") provider = [](int q) { return phi_01(q); };
  else if (args.name == "wp_phi_m21") provider = [](int q) { return wp_phi_m21(q); };
  else if (args.name == "h") provider = [](int q) { return h_series(q); };
  else if (args.name == "eta_bar") provider = [](int q) { return eta_bar(q); };
  else if (args.name == "theta_hat") provider = [](int q) { return theta_hat(q); };
  else raise(errc::unknown_series, "unknown liftable series '" + args.name + "'");

  Document doc;
  doc.params.emplace_back("command", "lift");
  doc.params.emplace_back("series", args.name);
  doc.params.emplace_back("a", std::to_string(args.a));
  doc.params.emplace_back("b", std::to_string(args.b));
  doc.params.emplace_back("negate", args.negate ? "true" : "false");
  doc.p_trunc = opt.p_order;
  doc.q_trunc = opt.q_order;
  const LiftSpec spec{args.a, args.b, args.negate, opt.p_order, opt.q_order};
  const Document full = cached(opt, "lift", doc, [&] {
    return rows_of(lift(provider, spec));
  });
  emit(opt, render(full, parse_format(opt.format)));
  return 0;
}

struct HilbArgs {
  long k2 = 0, chi = 0, l2 = 0, lk = 0, r = 0;
  int n_max = 4;
};

int run_genus_hilb(const Options& opt, const HilbArgs& args, bool chi_y) {
  const SurfaceInvariants inv{args.k2, args.chi, args.l2, args.lk, args.r};
  Document doc;
  doc.params.emplace_back("command", chi_y ? "chi-y hilb" : "genus hilb");
  doc.params.emplace_back("k2", std::to_string(args.k2));
  doc.params.emplace_back("chi", std::to_string(args.chi));
  doc.params.emplace_back("l2", std::to_string(args.l2));
  doc.params.emplace_back("lk", std::to_string(args.lk));
  doc.params.emplace_back("r", std::to_string(args.r));
  doc.params.emplace_back("n_max", std::to_string(args.n_max));
  doc.p_trunc = args.n_max;
  doc.q_trunc = chi_y ? 0 : opt.q_order;
  doc.rows = chi_y ? rows_of(hilb_chi_y_general_r(inv, args.n_max))
                   : rows_of(hilb_ell_general_r(inv, args.n_max, opt.q_order));
  emit(opt, render(doc, parse_format(opt.format)));
  return 0;
}

struct K3Args {
  int n = 0;
  long l2 = 0, r = 0;
};

int run_genus_k3(const Options& opt, const K3Args& args) {
  Document doc;
  doc.params.emplace_back("command", "genus k3");
  doc.params.emplace_back("n", std::to_string(args.n));
  doc.params.emplace_back("l2", std::to_string(args.l2));
  doc.params.emplace_back("r", std::to_string(args.r));
  doc.p_trunc = args.n;
  doc.q_trunc = opt.q_order;
  doc.rows = rows_of(hilb_ell_k3(args.n, args.l2, args.r, opt.q_order), args.n);
  emit(opt, render(doc, parse_format(opt.format)));
  return 0;
}

struct K3ModuliArgs {
  long s = 1, r = 0, c1sq = 0, c2 = 0;
  std::string lc1 = "0", lsq = "0";
};

int run_genus_k3_moduli(const Options& opt, const K3ModuliArgs& args) {
  K3ModuliInput input;
  input.s = args.s;
  input.r = args.r;
  input.c1_sq = args.c1sq;
  input.c2 = args.c2;
  input.l_c1 = Rational::from_string(args.lc1);
  input.l_sq = Rational::from_string(args.lsq);
  const K3ModuliDims dims = k3_moduli_vd(input);
  Document doc;
  doc.params.emplace_back("command", "genus k3-moduli");
  doc.params.emplace_back("s", std::to_string(args.s));
  doc.params.emplace_back("r", std::to_string(args.r));
  doc.params.emplace_back("c1sq", std::to_string(args.c1sq));
  doc.params.emplace_back("c2", std::to_string(args.c2));
  doc.params.emplace_back("lc1", input.l_c1.str());
  doc.params.emplace_back("lsq", input.l_sq.str());
  doc.params.emplace_back("vd_c", std::to_string(dims.vd_c));
  doc.params.emplace_back("vd_v", dims.vd_v.str());
  doc.params.emplace_back("exponent", dims.exponent.str());
  doc.p_trunc = static_cast<int>(dims.vd_c / 2);
  doc.q_trunc = opt.q_order;
  doc.rows = rows_of(k3_moduli_ell(input, opt.q_order),
                     static_cast<int>(dims.vd_c / 2));
  emit(opt, render(doc, parse_format(opt.format)));
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  unsigned long seed = 0;
};

int run_verify(const Options& opt, const VerifyArgs& args) {
  const auto reports = run_suite(args.suite, {}, args.seed);
  emit(opt, render_reports(reports, parse_format(opt.format)));
  for (const auto& rep : reports)
    if (!rep.pass) return 3;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact elliptic-genus generating functions for Hilbert schemes"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "output format: json, csv or text");
  app.add_option("--out", opt.out, "write output to a file instead of stdout");
  app.add_option("--cache-dir", opt.cache_dir,
                 "series cache directory (default: $ELLGEN_CACHE)");
  app.add_option("--p-order", opt.p_order, "p-truncation order")->check(CLI::NonNegativeNumber);
  app.add_option("--q-order", opt.q_order, "q-truncation order")->check(CLI::NonNegativeNumber);

  SeriesArgs series_args;
  auto* series_cmd = app.add_subcommand("series", "print a named q-series");
  series_cmd->add_option("name", series_args.name, "series name")->required();
  auto* k2_opt = series_cmd->add_option("--k2", series_args.k2, "K_S^2");
  auto* chi_opt = series_cmd->add_option("--chi", series_args.chi, "chi(O_S)");

  LiftArgs lift_args;
  auto* lift_cmd = app.add_subcommand("lift", "multiplicative lift of a q-series");
  lift_cmd->add_option("--series", lift_args.name, "input series")->required();
  lift_cmd->add_option("-a", lift_args.a, "weight l^a")->check(CLI::NonNegativeNumber);
  lift_cmd->add_option("-b", lift_args.b, "weight n^b")->check(CLI::NonNegativeNumber);
  lift_cmd->add_flag("--negate", lift_args.negate, "lift the negated series");

  auto* genus_cmd = app.add_subcommand("genus", "genus generating functions");
  genus_cmd->require_subcommand(1);
  genus_cmd->fallthrough();

  HilbArgs hilb_args;
  auto* hilb_cmd = genus_cmd->add_subcommand("hilb", "Hilbert schemes of points");
  hilb_cmd->add_option("--k2", hilb_args.k2, "K_S^2");
  hilb_cmd->add_option("--chi", hilb_args.chi, "chi(O_S)");
  hilb_cmd->add_option("--l2", hilb_args.l2, "L^2");
  hilb_cmd->add_option("--lk", hilb_args.lk, "L.K_S");
  hilb_cmd->add_option("--r", hilb_args.r, "power of E");
  hilb_cmd->add_option("--n-max", hilb_args.n_max, "table rows 0..n")->check(CLI::NonNegativeNumber);

  K3Args k3_args;
  auto* k3_cmd = genus_cmd->add_subcommand("k3", "Hilbert scheme of a K3 surface");
  k3_cmd->add_option("--n", k3_args.n, "number of points")->required()->check(CLI::NonNegativeNumber);
  k3_cmd->add_option("--l2", k3_args.l2, "L^2");
  k3_cmd->add_option("--r", k3_args.r, "power of E");

  K3ModuliArgs moduli_args;
  auto* moduli_cmd = genus_cmd->add_subcommand("k3-moduli", "moduli of sheaves on a K3");
  moduli_cmd->add_option("--s", moduli_args.s, "rank")->required();
  moduli_cmd->add_option("--r", moduli_args.r, "power of E");
  moduli_cmd->add_option("--c1sq", moduli_args.c1sq, "c1^2");
  moduli_cmd->add_option("--c2", moduli_args.c2, "c2");
  moduli_cmd->add_option("--lc1", moduli_args.lc1, "L.c1 (rational)");
  moduli_cmd->add_option("--lsq", moduli_args.lsq, "L^2 (rational)");

  auto* chiy_cmd = app.add_subcommand("chi-y", "chi_{-y} genus tables");
  chiy_cmd->require_subcommand(1);
  chiy_cmd->fallthrough();
  HilbArgs chiy_hilb_args;
  auto* chiy_hilb_cmd = chiy_cmd->add_subcommand("hilb", "Hilbert schemes of points");
  chiy_hilb_cmd->add_option("--k2", chiy_hilb_args.k2, "K_S^2");
  chiy_hilb_cmd->add_option("--chi", chiy_hilb_args.chi, "chi(O_S)");
  chiy_hilb_cmd->add_option("--l2", chiy_hilb_args.l2, "L^2");
  chiy_hilb_cmd->add_option("--lk", chiy_hilb_args.lk, "L.K_S");
  chiy_hilb_cmd->add_option("--r", chiy_hilb_args.r, "power of E");
  chiy_hilb_cmd->add_option("--n-max", chiy_hilb_args.n_max, "table rows 0..n")->check(CLI::NonNegativeNumber);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "run the identity checks");
  verify_cmd->add_option("--suite", verify_args.suite, "check name or 'all'");
  verify_cmd->add_option("--seed", verify_args.seed, "seed for randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    series_args.k2_set = k2_opt->count() > 0;
    series_args.chi_set = chi_opt->count() > 0;
    if (series_cmd->parsed()) return run_series(opt, series_args);
    if (lift_cmd->parsed()) return run_lift(opt, lift_args);
    if (genus_cmd->parsed()) {
      if (hilb_cmd->parsed()) return run_genus_hilb(opt, hilb_args, false);
      if (k3_cmd->parsed()) return run_genus_k3(opt, k3_args);
      if (moduli_cmd->parsed()) return run_genus_k3_moduli(opt, moduli_args);
    }
    if (chiy_cmd->parsed() && chiy_hilb_cmd->parsed())
      return run_genus_hilb(opt, chiy_hilb_args, true);
    if (verify_cmd->parsed()) return run_verify(opt, verify_args);
    std::cerr << "error: no command selected\n";
    return 1;
  } catch (const SeriesError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.usage_error() ? 1 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
