// chevkit: derivation algebras of exceptional Chevalley algebras over F_p.
//
// Exit codes: 0 success, 1 internal cross-check failure, 2 bad configuration.

#include "selftest.hpp"

#include <chevkit/cartan_decomp.hpp>
#include <chevkit/chevalley.hpp>
#include <chevkit/genbasis.hpp>
#include <chevkit/liecore.hpp>
#include <chevkit/pipeline.hpp>
#include <chevkit/report.hpp>
#include <chevkit/rootsys.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace chevkit;

constexpr int kExitCrossCheck = 1;
constexpr int kExitBadConfig = 2;

struct RunConfig
{
  std::string algebra = "all";
  std::string characteristic = "all-relevant";
  std::string method = "auto";
  std::string pipeline = "chevalley";
  std::string output = "table";
  std::uint32_t primes_up_to = 50;
  bool allow_large_naive = false;
  std::string generator_file;
  std::string constants_file;
};

std::vector<Kind> selected_kinds(const RunConfig& cfg)
{
  if (cfg.algebra == "all") return {all_kinds.begin(), all_kinds.end()};
  return {parse_kind(cfg.algebra)};
}

std::vector<std::uint32_t> selected_primes(const RunConfig& cfg, Kind kind)
{
  if (cfg.characteristic == "all-relevant") return relevant_primes(kind);
  std::size_t used = 0;
  unsigned long p = 0;
  try {
    p = std::stoul(cfg.characteristic, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != cfg.characteristic.size() || !is_prime(p) || p >= (1ul << 31))
    throw std::invalid_argument("--char must be a prime or 'all-relevant'");
  return {static_cast<std::uint32_t>(p)};
}

OutputFormat parse_output(const std::string& s)
{
  if (s == "table") return OutputFormat::Table;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown output format '" + s + "'");
}

int cmd_table(const RunConfig& cfg)
{
  const OutputFormat format = parse_output(cfg.output);
  const Pipeline pipeline = parse_pipeline(cfg.pipeline);
  std::optional<Method> method;
  if (cfg.method != "auto") method = parse_method(cfg.method);

  std::vector<CellConfig> cells;
  for (Kind k : selected_kinds(cfg)) {
    if (pipeline == Pipeline::Generators && k != Kind::E6 && k != Kind::E7) {
      if (cfg.algebra == "all") continue;
      throw std::invalid_argument("the generator pipeline supports e6 and e7 only");
    }
    for (std::uint32_t p : selected_primes(cfg, k)) {
      CellConfig cell;
      cell.kind = k;
      cell.p = p;
      cell.method = method;
      if (pipeline == Pipeline::Generators && !method) cell.method = Method::Full;
      cell.pipeline = pipeline;
      cell.full.allow_large = cfg.allow_large_naive;
      if (!cfg.generator_file.empty()) cell.generator_file = cfg.generator_file;
      cells.push_back(cell);
    }
  }
  std::vector<DerivationReport> reports;
  for (const auto& cell : cells) reports.push_back(compute_report(cell));
  write_reports(std::cout, reports, format);
  return 0;
}

int cmd_killing(const RunConfig& cfg)
{
  const OutputFormat format = parse_output(cfg.output);
  const auto primes = primes_up_to(cfg.primes_up_to);
  nlohmann::json doc = nlohmann::json::object();
  if (format == OutputFormat::Csv) std::cout << "L,singular_primes\n";
  for (Kind k : selected_kinds(cfg)) {
    const auto singular = killing_singular_primes(structure_constants(k), primes);
    std::string joined;
    for (auto p : singular) joined += (joined.empty() ? "" : " ") + std::to_string(p);
    switch (format) {
      case OutputFormat::Table: std::cout << kind_name(k) << ": " << joined << '\n'; break;
      case OutputFormat::Csv: std::cout << kind_name(k) << ',' << joined << '\n'; break;
      case OutputFormat::Json: doc[std::string(kind_name(k))] = singular; break;
    }
  }
  if (format == OutputFormat::Json) std::cout << doc.dump(2) << '\n';
  return 0;
}

int cmd_roots(const RunConfig& cfg)
{
  for (Kind k : selected_kinds(cfg)) write_roots(std::cout, generate_roots(k));
  return 0;
}

int cmd_constants(const RunConfig& cfg)
{
  const auto kinds = selected_kinds(cfg);
  if (kinds.size() != 1) throw std::invalid_argument("constants needs a single --algebra");
  const auto cb = structure_constants(kinds.front());
  if (cfg.characteristic == "all-relevant") {
    write_structure_constants(std::cout, cb.table);
    return 0;
  }
  const auto primes = selected_primes(cfg, kinds.front());
  write_structure_constants(std::cout, reduce_mod_p(cb, primes.front()).table);
  return 0;
}

int cmd_blocks(const RunConfig& cfg)
{
  for (Kind k : selected_kinds(cfg))
    for (std::uint32_t p : selected_primes(cfg, k)) {
      std::cout << "# " << kind_name(k) << " p=" << p << '\n';
      write_decomposition(std::cout, decompose(chevalley_algebra(k, p)));
    }
  return 0;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Derivation algebras of exceptional Chevalley algebras over prime fields"};
  RunConfig cfg;
  app.add_option("--algebra", cfg.algebra, "g2, f4, e6, e7, e8 or all")->capture_default_str();
  app.add_option("--char", cfg.characteristic, "prime characteristic or all-relevant")->capture_default_str();
  app.add_option("--method", cfg.method, "auto, full, vspace or both")->capture_default_str();
  app.add_option("--pipeline", cfg.pipeline, "chevalley or generators")->capture_default_str();
  app.add_option("--output", cfg.output, "table, json or csv")->capture_default_str();
  app.add_option("--primes-up-to", cfg.primes_up_to, "prime bound for the killing command")->capture_default_str();
  app.add_flag("--allow-large-naive", cfg.allow_large_naive, "permit the full derivation system above 150 dimensions");
  app.add_option("--generator-file", cfg.generator_file, "generator file for the generator pipeline");

  auto* table = app.add_subcommand("table", "results table (default)")->fallthrough();
  auto* killing = app.add_subcommand("killing", "primes where the Killing form degenerates")->fallthrough();
  auto* selftest = app.add_subcommand("selftest", "run the invariant suites")->fallthrough();
  selftest->add_option("--constants", cfg.constants_file, "also check an 'i j k c' structure-constant file");
  auto* roots = app.add_subcommand("roots", "dump root systems")->fallthrough();
  auto* constants = app.add_subcommand("constants", "dump structure constants as 'i j k c'")->fallthrough();
  auto* blocks = app.add_subcommand("blocks", "weight-block report")->fallthrough();
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadConfig;
  }

  try {
    if (*killing) return cmd_killing(cfg);
    if (*selftest) {
      std::optional<std::filesystem::path> extra;
      if (!cfg.constants_file.empty()) extra = cfg.constants_file;
      return selftest::run(std::cout, extra) == 0 ? 0 : kExitCrossCheck;
    }
    if (*roots) return cmd_roots(cfg);
    if (*constants) return cmd_constants(cfg);
    if (*blocks) return cmd_blocks(cfg);
    (void)table;
    return cmd_table(cfg);
  } catch (const CrossCheckError& e) {
    std::cerr << "cross-check failure: " << e.what() << '\n';
    return kExitCrossCheck;
  } catch (const std::logic_error& e) {
    // invalid_argument derives from logic_error
    if (dynamic_cast<const std::invalid_argument*>(&e)) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitBadConfig;
    }
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitCrossCheck;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCrossCheck;
  }
}
