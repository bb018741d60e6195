#ifndef CHEVKIT_TOOLS_SELFTEST_HPP
#define CHEVKIT_TOOLS_SELFTEST_HPP

// Invariant suites run by `chevkit selftest`.

#include <chevkit/cartan_decomp.hpp>
#include <chevkit/chevalley.hpp>
#include <chevkit/derivations.hpp>
#include <chevkit/genbasis.hpp>
#include <chevkit/liecore.hpp>
#include <chevkit/pipeline.hpp>

#include <array>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace chevkit::selftest {

struct Failure : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

inline void expect(bool ok, const std::string& what)
{
  if (!ok) throw Failure(what);
}

inline std::string triple_text(const BasisTriple& t)
{
  return "(" + std::to_string(t[0] + 1) + ", " + std::to_string(t[1] + 1) + ", " + std::to_string(t[2] + 1) + ")";
}

inline void check_table(const IntTensor& t, std::uint64_t modulus, const std::string& name)
{
  if (auto bad = antisymmetry_violation(t, modulus))
    throw Failure(name + ": antisymmetry fails for basis pair (" + std::to_string((*bad)[0] + 1) + ", " +
                  std::to_string((*bad)[1] + 1) + ")");
  if (auto bad = jacobi_violation(t, modulus))
    throw Failure(name + ": Jacobi identity fails for basis triple " + triple_text(*bad));
}

inline void suite_roots()
{
  for (Kind k : all_kinds) {
    const RootSystem rs = generate_roots(k);
    const std::string name(kind_name(k));
    expect(static_cast<int>(rs.size()) == rs.type().expected_root_count, name + ": root count");
    for (std::size_t a = 0; a < rs.size(); ++a) {
      std::vector<int> neg(rs.root(a).coords);
      for (auto& x : neg) x = -x;
      expect(rs.contains(neg), name + ": not closed under negation");
      for (std::size_t b = 0; b < rs.size(); ++b) {
        const int pr = pairing(rs, rs.root(a), rs.root(b));
        std::vector<int> refl(rs.root(a).coords);
        for (std::size_t i = 0; i < refl.size(); ++i) refl[i] -= pr * rs.root(b).coords[i];
        expect(rs.contains(refl), name + ": reflection leaves the root system");
        if (b == a || b == rs.negative_of(a)) continue;
        const auto s = alpha_string(rs, rs.root(a), rs.root(b));
        expect(s.r - s.q == pairing(rs, rs.root(b), rs.root(a)), name + ": r - q != <beta, alpha>");
      }
    }
  }
}

inline void suite_structure_constants()
{
  for (Kind k : all_kinds) {
    const auto cb = structure_constants(k);
    check_table(cb.table, 0, std::string(kind_name(k)) + " over Z");
  }
}

inline void suite_reduction()
{
  for (Kind k : all_kinds) {
    const auto cb = structure_constants(k);
    for (std::uint32_t p : relevant_primes(k)) {
      const LieAlgebraFp L = reduce_mod_p(cb, p);
      const PrimeField f(p);
      for (std::size_t i = 0; i < cb.n; ++i)
        for (std::size_t j = 0; j < cb.n; ++j)
          for (const auto& t : cb.table.bracket(i, j))
            expect(L.table.get(i, j, t.index) == f.reduce(t.coeff),
                   std::string(kind_name(k)) + ": reduction mod p does not commute with the bracket");
    }
  }
}

inline void suite_killing()
{
  const auto primes = primes_up_to(50);
  for (Kind k : all_kinds) {
    const auto got = killing_singular_primes(structure_constants(k), primes);
    const std::vector<std::uint32_t> want = k == Kind::E8 ? std::vector<std::uint32_t>{2, 3, 5}
                                                          : std::vector<std::uint32_t>{2, 3};
    expect(got == want, std::string(kind_name(k)) + ": unexpected Killing-singular primes");
  }
}

inline void suite_decomposition()
{
  for (Kind k : all_kinds)
    for (std::uint32_t p : relevant_primes(k)) {
      const LieAlgebraFp L = chevalley_algebra(k, p);
      const auto d = decompose(L);
      const auto Z = center(L);
      const std::string name = std::string(kind_name(k)) + " p=" + std::to_string(p);
      expect(verify_nonzero_weights(d), name + ": a root vector has weight zero");
      expect(brackets_respect_weights(L, d), name + ": bracket does not respect the weight grading");
      expect(Z.supported_on(d.cartan_indices), name + ": center not inside H");
      expect(adV_intersection_dim(L, d, Z) == d.cartan_indices.size(), name + ": {x : [x,H] in Z} != H");
    }
}

inline void suite_dual_method()
{
  for (Kind k : {Kind::G2, Kind::F4, Kind::E6, Kind::E7})
    for (std::uint32_t p : {2u, 3u}) {
      CellConfig cfg;
      cfg.kind = k;
      cfg.p = p;
      cfg.method = Method::Both;
      compute_report(cfg);  // throws CrossCheckError on disagreement
    }
}

inline void suite_concordance()
{
  for (Kind k : {Kind::E6, Kind::E7})
    for (std::uint32_t p : {2u, 3u}) {
      CellConfig cfg;
      cfg.kind = k;
      cfg.p = p;
      cfg.method = Method::Full;
      cfg.pipeline = Pipeline::Chevalley;
      const auto a = compute_report(cfg);
      cfg.pipeline = Pipeline::Generators;
      const auto b = compute_report(cfg);
      expect(a.dim_L == b.dim_L && a.dim_Z == b.dim_Z && a.dim_Der == b.dim_Der,
             std::string(kind_name(k)) + " p=" + std::to_string(p) + ": generator and Chevalley pipelines disagree");
    }
}

inline void suite_eliminator()
{
  std::mt19937 rng(20240613);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t p = std::array<std::uint32_t, 4>{2, 3, 5, 7}[trial % 4];
    const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
    FpMatrix m(p, rows, cols);
    StreamingEliminator e(p, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      std::vector<Residue> row(cols);
      for (std::size_t j = 0; j < cols; ++j) row[j] = m(i, j) = (rng() % 3 == 0) ? rng() % p : 0;
      e.push_dense(row);
    }
    expect(e.rank() == rank(m), "streaming rank differs from dense rank");
  }
}

inline int run(std::ostream& os, const std::optional<std::filesystem::path>& constants)
{
  std::vector<std::pair<std::string, std::function<void()>>> suites{
      {"root systems", suite_roots},
      {"structure constants over Z", suite_structure_constants},
      {"reduction mod p", suite_reduction},
      {"Killing form primes", suite_killing},
      {"weight decomposition", suite_decomposition},
      {"streaming eliminator", suite_eliminator},
      {"full vs V-space derivations", suite_dual_method},
      {"generator pipeline concordance", suite_concordance},
  };
  if (constants) {
    suites.insert(suites.begin(), {"structure constants from " + constants->string(), [path = *constants] {
                                     std::ifstream in(path);
                                     if (!in) throw Failure("cannot open " + path.string());
                                     check_table(read_structure_constants(in), 0, path.filename().string());
                                   }});
  }
  for (const auto& [name, run_suite] : suites) {
    const auto start = std::chrono::steady_clock::now();
    try {
      run_suite();
    } catch (const std::exception& e) {
      os << "FAIL " << name << ": " << e.what() << '\n';
      return 1;
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    os << "pass " << name << " (" << std::fixed << std::setprecision(2) << took.count() << " s)\n";
  }
  os << "selftest: all " << suites.size() << " suites passed\n";
  return 0;
}

}  // namespace chevkit::selftest

#endif  // CHEVKIT_TOOLS_SELFTEST_HPP
