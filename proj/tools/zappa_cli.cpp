#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zappa/catalog.hpp"
#include "zappa/checks.hpp"
#include "zappa/group_file.hpp"
#include "zappa/report.hpp"
#include "zappa/scan.hpp"
#include "zappa/sylow.hpp"

namespace {

// Exit codes: 0 success / theorem-consistent, 1 witnesses where a theorem
// forbids them (or failed checks), 2 usage error, 3 limit refusal.
constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;
constexpr int exit_limit = 3;

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v) return fallback;
  try {
    return std::stoull(v);
  } catch (...) {
    throw zappa::error(std::string("bad value in environment variable ") + name);
  }
}

struct Limits {
  std::uint64_t degree_cap = 0;
  std::uint64_t cache_cap = 0;
  std::uint64_t max_cosets = 0;
  std::uint64_t budget = 0;

  void finish() {
    if (degree_cap == 0) degree_cap = env_or("ZAPPA_DEGREE_CAP", zappa::default_degree_cap);
    if (cache_cap == 0) cache_cap = env_or("ZAPPA_CACHE_CAP", 1 << 20);
    if (max_cosets == 0) max_cosets = env_or("ZAPPA_MAX_COSETS", 1'000'000);
    if (budget == 0) budget = env_or("ZAPPA_BUDGET", 4000);
  }

  zappa::ScanLimits scan_limits() const {
    return zappa::ScanLimits{static_cast<std::size_t>(max_cosets),
                             static_cast<std::size_t>(cache_cap)};
  }
};

void add_limit_flags(CLI::App* cmd, Limits& limits) {
  cmd->add_option("--degree-cap", limits.degree_cap, "max permutation degree for builders");
  cmd->add_option("--cache-cap", limits.cache_cap, "max materialized element count");
  cmd->add_option("--max-cosets", limits.max_cosets, "max transversal size for scans");
  cmd->add_option("--budget", limits.budget, "random draws allowed in Sylow search");
}

void print_report(const zappa::ZappaReport& report, const std::string& format) {
  if (format == "structured")
    std::cout << zappa::format_report_structured(report);
  else
    std::cout << zappa::format_report_text(report);
  std::cerr << "scan took " << report.duration_seconds << "s with parallelism "
            << report.parallelism << "\n";
}

int run_sylow(std::uint64_t p, std::int64_t n, std::int64_t k, const std::string& ambient,
              const std::string& out_path, const Limits& limits) {
  zappa::GroupFile gf;
  std::uint64_t expected_exponent = 0;
  if (k >= 0) {
    zappa::SylowTower tower = zappa::build_P_k(p, static_cast<unsigned>(k), limits.degree_cap);
    gf.name = "sylow_p" + std::to_string(p) + "_k" + std::to_string(k);
    gf.degree = tower.group.degree();
    gf.generators = tower.group.generators();
    expected_exponent = (zappa::checked_pow(p, static_cast<unsigned>(k)) - 1) / (p - 1);
  } else {
    zappa::SylowSubgroup sylow =
        ambient == "alt"
            ? zappa::build_sylow_alternating(static_cast<std::uint64_t>(n), p, limits.degree_cap)
            : zappa::build_sylow_symmetric(static_cast<std::uint64_t>(n), p, limits.degree_cap);
    gf.name = "sylow_" + ambient + std::to_string(n) + "_p" + std::to_string(p);
    gf.degree = sylow.group.degree();
    gf.generators = sylow.group.generators();
    expected_exponent = zappa::legendre_valuation(static_cast<std::uint64_t>(n), p);
    if (ambient == "alt" && p == 2 && expected_exponent > 0) --expected_exponent;
  }

  zappa::PermutationGroup group(gf.degree, gf.generators);
  std::uint64_t order = group.order();
  std::uint64_t expected = zappa::checked_pow(p, static_cast<unsigned>(expected_exponent));
  std::ostream& summary = out_path.empty() ? std::cerr : std::cout;
  summary << "name:   " << gf.name << "\n";
  summary << "degree: " << gf.degree << "\n";
  summary << "order:  " << order << (order == expected ? " (matches the p-part)" : "") << "\n";
  if (order == 1) summary << "warning: trivial Sylow subgroup (p exceeds every block size)\n";
  if (order != expected) {
    std::cerr << "error: order " << order << " does not equal expected p-part " << expected
              << "\n";
    return exit_violation;
  }
  if (out_path.empty())
    std::cout << zappa::format_group_file(gf);
  else
    zappa::save_group_file(out_path, gf);
  return exit_ok;
}

int run_verify(const std::string& ambient, std::uint64_t n, std::uint64_t p, unsigned threads,
               const std::string& format, const Limits& limits) {
  zappa::TheoremVerification v =
      ambient == "alt" ? zappa::verify_theorem_alternating(n, p, threads, limits.scan_limits())
                       : zappa::verify_theorem_symmetric(n, p, threads, limits.scan_limits());
  print_report(v.report, format);
  return v.holds ? exit_ok : exit_violation;
}

int run_scan(const std::string& group_name, std::uint64_t p, unsigned threads,
             const std::string& method, std::uint64_t seed, const std::string& format,
             const Limits& limits) {
  zappa::PermutationGroup g = zappa::resolve_group(group_name);
  bool want_constructed =
      method == "constructed" ||
      (method == "auto" &&
       (group_name.rfind("sym:", 0) == 0 || group_name.rfind("alt:", 0) == 0));
  zappa::SylowSubgroup sylow =
      want_constructed
          ? (group_name.rfind("alt:", 0) == 0
                 ? zappa::build_sylow_alternating(g.degree(), p, limits.degree_cap)
                 : zappa::build_sylow_symmetric(g.degree(), p, limits.degree_cap))
          : zappa::find_sylow(g, p, zappa::SylowSearchBudget{limits.budget, seed}, group_name);
  zappa::ZappaReport report = zappa::scan_zappa(g, sylow, threads, limits.scan_limits());
  print_report(report, format);
  return exit_ok;
}

int run_lemmas(std::uint64_t p, std::int64_t kmax, std::uint64_t budget, std::uint64_t seed,
               const std::string& format) {
  std::vector<zappa::CheckOutcome> outcomes;
  if (p != 0)
    outcomes = zappa::check_foundations(p, kmax >= 0 ? static_cast<unsigned>(kmax) : 2);
  else
    outcomes = zappa::run_all_checks(budget, seed);

  bool all_pass = true;
  if (format == "structured") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& o : outcomes) {
      nlohmann::ordered_json j;
      j["lemma"] = o.lemma_id;
      j["tested"] = o.instances_tested;
      j["skipped"] = o.skipped;
      j["failures"] = o.failures;
      arr.push_back(std::move(j));
      all_pass = all_pass && o.passed();
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& o : outcomes) {
      all_pass = all_pass && o.passed();
      std::cout << (o.passed() ? "[PASS] " : "[FAIL] ") << o.lemma_id << " tested="
                << o.instances_tested << " skipped=" << o.skipped << "\n";
      for (const auto& f : o.failures) std::cout << "       counterexample: " << f << "\n";
    }
  }
  return all_pass ? exit_ok : exit_violation;
}

int run_catalog(const std::string& group_name, const std::string& out_path) {
  if (group_name.empty()) {
    for (const auto& e : zappa::catalog_entries())
      std::cout << e.name << "  -  " << e.description << "\n";
    return exit_ok;
  }
  zappa::PermutationGroup g = zappa::resolve_group(group_name);
  zappa::GroupFile gf;
  gf.name = group_name;
  for (char& c : gf.name)
    if (c == ':') c = '_';
  gf.degree = g.degree();
  gf.generators = g.generators();
  std::cerr << "group " << group_name << ": degree " << g.degree() << ", order " << g.order()
            << "\n";
  if (out_path.empty())
    std::cout << zappa::format_group_file(gf);
  else
    zappa::save_group_file(out_path, gf);
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zappa: Sylow subgroups of S_n/A_n and exhaustive p-torsion coset scans"};
  app.require_subcommand(1);

  Limits limits;

  auto* sylow = app.add_subcommand("sylow", "construct and export a Sylow p-subgroup");
  std::uint64_t sylow_p = 0;
  std::int64_t sylow_n = -1, sylow_k = -1;
  std::string sylow_ambient = "sym", sylow_out;
  sylow->add_option("--p", sylow_p, "prime p")->required();
  sylow->add_option("--n", sylow_n, "ambient degree n (Sylow subgroup of S_n or A_n)");
  sylow->add_option("--k", sylow_k, "tower height k (Sylow subgroup of S_{p^k})");
  sylow->add_option("--ambient", sylow_ambient, "sym or alt (with --n)")
      ->check(CLI::IsMember({"sym", "alt"}));
  sylow->add_option("--out", sylow_out, "write the group file here instead of stdout");
  add_limit_flags(sylow, limits);

  auto* verify = app.add_subcommand("verify", "scan S_n or A_n for torsion cosets off the Sylow subgroup");
  std::string verify_ambient, verify_format = "text";
  std::uint64_t verify_n = 0, verify_p = 0;
  unsigned verify_threads = 1;
  verify->add_option("--ambient", verify_ambient, "sym or alt")
      ->required()
      ->check(CLI::IsMember({"sym", "alt"}));
  verify->add_option("--n", verify_n, "degree n")->required();
  verify->add_option("--p", verify_p, "prime p")->required();
  verify->add_option("--threads", verify_threads, "scan parallelism");
  verify->add_option("--format", verify_format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  add_limit_flags(verify, limits);

  auto* scan = app.add_subcommand("scan", "scan all Sylow cosets of a catalog or file group");
  std::string scan_group, scan_method = "auto", scan_format = "text";
  std::uint64_t scan_p = 0, scan_seed = 1;
  unsigned scan_threads = 1;
  scan->add_option("--group", scan_group, "sym:<n>, alt:<n>, psl3_<q>, or file:<path>")
      ->required();
  scan->add_option("--p", scan_p, "prime p")->required();
  scan->add_option("--sylow", scan_method, "constructed, searched, or auto")
      ->check(CLI::IsMember({"constructed", "searched", "auto"}));
  scan->add_option("--seed", scan_seed, "seed for the randomized Sylow search");
  scan->add_option("--threads", scan_threads, "scan parallelism");
  scan->add_option("--format", scan_format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  add_limit_flags(scan, limits);

  auto* lemmas = app.add_subcommand("lemmas", "run the executable lemma suite");
  std::uint64_t lemmas_p = 0, lemmas_budget = 10'000, lemmas_seed = 1729;
  std::int64_t lemmas_kmax = -1;
  std::string lemmas_format = "text";
  lemmas->add_option("--p", lemmas_p, "restrict to the foundation checks for this prime");
  lemmas->add_option("--kmax", lemmas_kmax, "tower height for --p");
  lemmas->add_option("--samples", lemmas_budget, "sample budget for randomized checks");
  lemmas->add_option("--seed", lemmas_seed, "seed for randomized checks");
  lemmas->add_option("--format", lemmas_format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  auto* catalog = app.add_subcommand("catalog", "list builtin groups or export one");
  std::string catalog_group, catalog_out;
  catalog->add_option("--group", catalog_group, "group to export");
  catalog->add_option("--out", catalog_out, "write the group file here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    limits.finish();
    if (sylow->parsed()) {
      if ((sylow_n < 0) == (sylow_k < 0)) {
        std::cerr << "error: give exactly one of --n or --k\n";
        return exit_usage;
      }
      if (sylow_k >= 0 && sylow_ambient == "alt") {
        std::cerr << "error: --k builds the tower inside the symmetric group; use --n with "
                     "--ambient alt\n";
        return exit_usage;
      }
      return run_sylow(sylow_p, sylow_n, sylow_k, sylow_ambient, sylow_out, limits);
    }
    if (verify->parsed())
      return run_verify(verify_ambient, verify_n, verify_p, verify_threads, verify_format,
                        limits);
    if (scan->parsed())
      return run_scan(scan_group, scan_p, scan_threads, scan_method, scan_seed, scan_format,
                      limits);
    if (lemmas->parsed())
      return run_lemmas(lemmas_p, lemmas_kmax, lemmas_budget, lemmas_seed, lemmas_format);
    if (catalog->parsed()) return run_catalog(catalog_group, catalog_out);
  } catch (const zappa::limit_error& e) {
    std::cerr << "limit refusal: " << e.what() << "\n";
    return exit_limit;
  } catch (const zappa::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
