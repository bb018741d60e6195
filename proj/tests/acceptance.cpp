// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chevkit/cartan_decomp.hpp>
#include <chevkit/chevalley.hpp>
#include <chevkit/derivations.hpp>
#include <chevkit/genbasis.hpp>
#include <chevkit/liecore.hpp>
#include <chevkit/pipeline.hpp>
#include <chevkit/report.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

using namespace chevkit;

namespace {

struct Outcome
{
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what)
  {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string cell_name(Kind k, std::uint32_t p) { return std::string(kind_name(k)) + "@" + std::to_string(p); }

CellConfig cell(Kind k, std::uint32_t p, std::optional<Method> m = {}, Pipeline pipe = Pipeline::Chevalley)
{
  CellConfig c;
  c.kind = k;
  c.p = p;
  c.method = m;
  c.pipeline = pipe;
  return c;
}

Outcome table_reproduction()
{
  using Row = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, bool>;
  const std::vector<std::tuple<Kind, std::uint32_t, Row>> expected{
      {Kind::G2, 2, {14, 0, 14, 21, false}},   {Kind::G2, 3, {14, 0, 14, 14, true}},
      {Kind::F4, 2, {52, 0, 52, 52, true}},    {Kind::F4, 3, {52, 0, 52, 52, true}},
      {Kind::E6, 2, {78, 0, 78, 78, true}},    {Kind::E6, 3, {78, 1, 77, 78, false}},
      {Kind::E7, 2, {133, 1, 132, 133, false}}, {Kind::E7, 3, {133, 0, 133, 133, true}},
      {Kind::E8, 2, {248, 0, 248, 248, true}}, {Kind::E8, 3, {248, 0, 248, 248, true}},
      {Kind::E8, 5, {248, 0, 248, 248, true}}};
  Outcome o;
  const auto t0 = Clock::now();
  std::vector<DerivationReport> rows;
  for (Kind k : all_kinds)
    for (std::uint32_t p : relevant_primes(k)) rows.push_back(compute_report(cell(k, p)));
  const double took = seconds_since(t0);
  o.require(rows.size() == expected.size(), "11 rows");
  for (std::size_t i = 0; i < std::min(rows.size(), expected.size()); ++i) {
    const auto& [k, p, want] = expected[i];
    const auto& r = rows[i];
    const Row got{r.dim_L, r.dim_Z, r.dim_ad, r.dim_Der, r.inner};
    o.require(r.algebra == k && r.p == p && got == want, "row " + table_row(r));
  }
  o.require(took < 600, "runtime under 10 minutes");
  std::ostringstream os;
  os << rows.size() << " rows in " << std::fixed << std::setprecision(2) << took << " s";
  o.note(os.str());
  return o;
}

Outcome v_dimensions()
{
  Outcome o;
  const std::map<Kind, std::size_t> want{{Kind::E6, 6}, {Kind::E7, 7}, {Kind::E8, 8}};
  for (const auto& [k, v] : want)
    for (std::uint32_t p : relevant_primes(k)) {
      const auto L = chevalley_algebra(k, p);
      const std::size_t got = derivations_V(L, decompose(L), center(L));
      o.require(got == v, cell_name(k, p) + " dim V = " + std::to_string(got));
    }
  return o;
}

Outcome dual_method()
{
  Outcome o;
  for (Kind k : {Kind::G2, Kind::F4, Kind::E6, Kind::E7})
    for (std::uint32_t p : {2u, 3u}) {
      const auto t0 = Clock::now();
      try {
        const auto r = compute_report(cell(k, p, Method::Both));
        o.require(r.method == Method::Both, cell_name(k, p) + " both routes ran");
      } catch (const CrossCheckError& e) {
        o.require(false, e.what());
      }
      if (k == Kind::E7) {
        const double took = seconds_since(t0);
        o.require(took < 900, "e7 full system under 15 minutes");
        std::ostringstream os;
        os << cell_name(k, p) << " both routes in " << std::fixed << std::setprecision(2) << took << " s";
        o.note(os.str());
      }
    }
  return o;
}

Outcome concordance()
{
  Outcome o;
  for (auto [k, size] : {std::pair{Kind::E6, 78u}, std::pair{Kind::E7, 133u}})
    for (std::uint32_t p : {2u, 3u}) {
      const auto B = basis_builder(load_generators(generator_file(k), p));
      o.require(B.elements.size() == size,
                cell_name(k, p) + " builder gave " + std::to_string(B.elements.size()) + " elements");
      const auto a = compute_report(cell(k, p, Method::Full));
      const auto b = compute_report(cell(k, p, Method::Full, Pipeline::Generators));
      o.require(std::tie(a.dim_L, a.dim_Z, a.dim_Der) == std::tie(b.dim_L, b.dim_Z, b.dim_Der),
                cell_name(k, p) + ": " + table_row(a) + " vs " + table_row(b));
    }
  o.note("e7 uses " + generator_file(Kind::E7).filename().string());
  // the list as printed, for the record
  const auto verbatim = data_directory() / "e7_generators.txt";
  const auto B = basis_builder(load_generators(verbatim, 2));
  o.note("verbatim e7_generators.txt closes on " + std::to_string(B.elements.size()) + " elements at p=2");
  return o;
}

Outcome killing()
{
  Outcome o;
  const auto primes = primes_up_to(50);
  for (Kind k : all_kinds) {
    const auto got = killing_singular_primes(structure_constants(k), primes);
    const std::vector<std::uint32_t> want =
        k == Kind::E8 ? std::vector<std::uint32_t>{2, 3, 5} : std::vector<std::uint32_t>{2, 3};
    o.require(got == want, std::string(kind_name(k)) + " singular primes");
    const std::uint32_t p = k == Kind::E8 ? 7 : 5;
    const auto L = chevalley_algebra(k, p);
    const bool nonsingular = rank(killing_matrix(L)) == L.n;
    const auto r = compute_report(cell(k, p));
    o.require(nonsingular && r.inner, cell_name(k, p) + " nonsingular and inner");
  }
  return o;
}

Outcome properties()
{
  Outcome o;
  for (Kind k : all_kinds) {
    const auto cb = structure_constants(k);
    o.require(!jacobi_violation(cb.table, 0) && !antisymmetry_violation(cb.table, 0),
              std::string(kind_name(k)) + " Jacobi over Z");
    o.require(static_cast<int>(cb.rs.size()) == root_system_type(k).expected_root_count,
              std::string(kind_name(k)) + " root count");
  }

  using Census = std::map<std::size_t, std::size_t>;
  const std::vector<std::tuple<Kind, std::uint32_t, Census>> census{
      {Kind::E6, 2, {{2, 36}}}, {Kind::E6, 3, {{1, 72}}},  {Kind::E7, 2, {{2, 63}}}, {Kind::E7, 3, {{1, 126}}},
      {Kind::E8, 2, {{1, 240}}}, {Kind::E8, 3, {{1, 240}}}, {Kind::E8, 5, {{1, 240}}}};
  for (const auto& [k, p, want] : census) {
    const auto d = decompose(chevalley_algebra(k, p));
    Census got;
    for (const auto& b : d.blocks) ++got[b.positions.size()];
    std::string text;
    for (auto [size, count] : got) text += (text.empty() ? "" : " + ") + std::to_string(count) + "x" + std::to_string(size);
    o.require(got == want, cell_name(k, p) + " block census is " + text);
  }

  for (Kind k : all_kinds)
    for (std::uint32_t p : relevant_primes(k)) {
      const auto L = chevalley_algebra(k, p);
      const auto d = decompose(L);
      const auto Z = center(L);
      o.require(brackets_respect_weights(L, d), cell_name(k, p) + " grading");
      o.require(adV_intersection_dim(L, d, Z) == d.cartan_indices.size(), cell_name(k, p) + " adV intersection");
      o.require(Z.supported_on(d.cartan_indices), cell_name(k, p) + " center inside H");
    }
  return o;
}

Outcome eliminator()
{
  Outcome o;
  std::mt19937 rng(1000);
  std::size_t mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint32_t p = std::array<std::uint32_t, 4>{2, 3, 5, 7}[trial % 4];
    const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
    FpMatrix m(p, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng() % 2 ? rng() % p : 0;
    std::vector<std::size_t> order(rows);
    std::iota(order.begin(), order.end(), 0);
    StreamingEliminator a(p, cols), b(p, cols);
    for (auto i : order) a.push_dense(m.row(i));
    std::shuffle(order.begin(), order.end(), rng);
    for (auto i : order) b.push_dense(m.row(i));
    const std::size_t dense = rank(m);
    if (a.rank() != dense || b.rank() != dense || a.reduced_rows() != b.reduced_rows()) ++mismatches;
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " of 1000 systems disagree");
  o.note("1000 random systems");
  return o;
}

}  // namespace

int main()
{
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 results table", table_reproduction},
      {"2 dim V", v_dimensions},
      {"3 full vs V-space agreement", dual_method},
      {"4 generator pipeline concordance", concordance},
      {"5 Killing primes and nondegenerate => inner", killing},
      {"6 property suites", properties},
      {"7 streaming eliminator oracle", eliminator},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name;
    for (const auto& n : o.notes) std::cout << "; " << n;
    std::cout << std::endl;
    failed += !o.pass;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
