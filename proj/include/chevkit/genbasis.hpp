#ifndef CHEVKIT_GENBASIS_HPP
#define CHEVKIT_GENBASIS_HPP

// Matrix Lie algebras given by generators: loading, basis building by
// fixed-point iteration, and extraction of abstract structure constants.

#include <chevkit/chevalley.hpp>
#include <chevkit/gfp.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef CHEVKIT_DATA_DIR_DEFAULT
#define CHEVKIT_DATA_DIR_DEFAULT "data"
#endif

namespace chevkit {

/// Square matrix over F_p stored as a sparse vector of row-major coordinates.
struct SparseMatrix
{
  std::size_t order = 0;
  SparseRow entries;  // (row * order + col, value), sorted

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;
};

inline SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b, const PrimeField& f)
{
  const std::size_t n = a.order;
  std::vector<Residue> acc(n * n, 0);
  std::vector<std::uint32_t> touched;
  auto row_range = [n](const SparseMatrix& m, std::size_t row) {
    auto lo = std::lower_bound(m.entries.begin(), m.entries.end(),
                               std::make_pair(static_cast<std::uint32_t>(row * n), Residue{0}));
    auto hi = std::lower_bound(lo, m.entries.end(),
                               std::make_pair(static_cast<std::uint32_t>((row + 1) * n), Residue{0}));
    return std::make_pair(lo, hi);
  };
  auto product = [&](const SparseMatrix& x, const SparseMatrix& y, bool negate) {
    for (auto [idx, v] : x.entries) {
      const std::size_t i = idx / n, k = idx % n;
      auto [lo, hi] = row_range(y, k);
      for (auto it = lo; it != hi; ++it) {
        const auto target = static_cast<std::uint32_t>(i * n + it->first % n);
        Residue term = f.mul(v, it->second);
        if (acc[target] == 0) touched.push_back(target);
        acc[target] = negate ? f.sub(acc[target], term) : f.add(acc[target], term);
      }
    }
  };
  product(a, b, false);
  product(b, a, true);
  SparseMatrix out{n, {}};
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  for (auto t : touched)
    if (acc[t]) out.entries.emplace_back(t, acc[t]);
  return out;
}

struct GeneratorSet
{
  std::uint32_t p = 2;
  std::size_t size = 0;
  std::vector<SparseMatrix> mats;
};

struct MatrixBasis
{
  std::uint32_t p = 2;
  std::size_t size = 0;
  std::vector<SparseMatrix> elements;
  /// Number of H-steps taken from the generators to the fixed point.
  std::size_t steps = 0;
};

namespace detail {

inline bool independent(const std::vector<SparseMatrix>& mats, std::uint32_t p, std::size_t order)
{
  StreamingEliminator e(p, order * order);
  for (const auto& m : mats)
    if (!e.push(m.entries)) return false;
  return true;
}

}  // namespace detail

/**
 * Reads "order n", then blocks "gen k" followed by "i j" lines (1-based), one
 * per elementary matrix E_{i,j}. Lines starting with '#' are comments.
 */
inline GeneratorSet load_generators(std::istream& in, std::uint32_t p)
{
  PrimeField f(p);
  GeneratorSet g;
  g.p = p;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& why) {
    throw std::runtime_error("generator file line " + std::to_string(lineno) + ": " + why);
  };
  std::vector<std::vector<std::uint32_t>> coords;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "order") {
      if (g.size) fail("duplicate order header");
      long long n;
      if (!(ls >> n) || n <= 0) fail("bad order");
      g.size = static_cast<std::size_t>(n);
    } else if (word == "gen") {
      if (!g.size) fail("generator before order header");
      long long k;
      if (!(ls >> k) || k != static_cast<long long>(coords.size()) + 1) fail("generators must be numbered 1, 2, ...");
      coords.emplace_back();
    } else {
      if (coords.empty()) fail("matrix entry outside a generator block");
      long long i, j;
      std::istringstream es(line);
      std::string rest;
      if (!(es >> i >> j) || (es >> rest)) fail("expected 'i j'");
      if (i < 1 || j < 1 || static_cast<std::size_t>(i) > g.size || static_cast<std::size_t>(j) > g.size)
        fail("index out of range");
      coords.back().push_back(static_cast<std::uint32_t>((i - 1) * static_cast<long long>(g.size) + (j - 1)));
    }
  }
  if (!g.size) throw std::runtime_error("generator file has no order header");
  for (auto& c : coords) {
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) throw std::runtime_error("generator repeats an entry");
    if (c.empty()) throw std::runtime_error("empty generator");
    SparseMatrix m{g.size, {}};
    for (auto idx : c) m.entries.emplace_back(idx, 1);
    g.mats.push_back(std::move(m));
  }
  if (!detail::independent(g.mats, p, g.size)) throw std::runtime_error("generators are linearly dependent");
  return g;
}

inline GeneratorSet load_generators(const std::filesystem::path& path, std::uint32_t p)
{
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open generator file " + path.string());
  return load_generators(in, p);
}

/**
 * Fixed point of S -> S u {first bracket x_i x_j (row-major scan) outside span(S)}.
 *
 * Span membership only grows, so pairs once seen inside the span are never
 * re-tested; each pair costs one reduction overall.
 */
inline MatrixBasis basis_builder(const GeneratorSet& S)
{
  const PrimeField f(S.p);
  if (!detail::independent(S.mats, S.p, S.size)) throw std::invalid_argument("basis_builder: dependent generators");
  MatrixBasis B{S.p, S.size, S.mats, 0};
  StreamingEliminator span(S.p, S.size * S.size);
  for (const auto& m : B.elements) span.push(m.entries);

  const std::size_t cap = S.size * S.size;
  std::vector<std::vector<char>> known;
  while (true) {
    const std::size_t n = B.elements.size();
    known.resize(n);
    for (auto& row : known) row.resize(n, 0);
    bool grew = false;
    for (std::size_t i = 0; i < n && !grew; ++i)
      for (std::size_t j = 0; j < n && !grew; ++j) {
        if (known[i][j]) continue;
        SparseMatrix c = commutator(B.elements[i], B.elements[j], f);
        known[i][j] = known[j][i] = 1;
        if (span.in_row_space(c.entries)) continue;
        span.push(c.entries);
        B.elements.push_back(std::move(c));
        grew = true;
      }
    if (!grew) break;
    if (++B.steps > cap) throw std::runtime_error("basis_builder exceeded its iteration cap; input is corrupted");
  }
  return B;
}

/// Structure constants of a bracket-closed matrix basis, by coordinates over the basis.
inline LieAlgebraFp abstract_from_matrix_basis(const MatrixBasis& B)
{
  const PrimeField f(B.p);
  const std::size_t n = B.elements.size();
  StreamingEliminator span(B.p, B.size * B.size);
  for (const auto& m : B.elements)
    if (!span.push(m.entries)) throw std::invalid_argument("matrix basis is linearly dependent");
  std::vector<std::uint32_t> pivots;
  for (const auto& row : span.reduced_rows()) pivots.push_back(row.front().first);

  // P(k, i) = coordinate pivots[k] of element i
  FpMatrix P(B.p, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (auto [idx, v] : B.elements[i].entries) {
      auto it = std::lower_bound(pivots.begin(), pivots.end(), idx);
      if (it != pivots.end() && *it == idx) P(static_cast<std::size_t>(it - pivots.begin()), i) = v;
    }
  const auto Pinv = inverse(P);
  if (!Pinv) throw std::logic_error("pivot restriction of the basis is singular");

  LieAlgebraFp L;
  L.p = B.p;
  L.n = n;
  for (std::size_t i = 0; i < n; ++i) L.labels.push_back("b" + std::to_string(i + 1));
  L.table = FpTensor(n);
  std::vector<Residue> restricted(n), acc(B.size * B.size, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      SparseMatrix c = commutator(B.elements[i], B.elements[j], f);
      std::fill(restricted.begin(), restricted.end(), 0);
      for (auto [idx, v] : c.entries) {
        auto it = std::lower_bound(pivots.begin(), pivots.end(), idx);
        if (it != pivots.end() && *it == idx) restricted[static_cast<std::size_t>(it - pivots.begin())] = v;
      }
      const std::vector<Residue> lambda = Pinv->apply(restricted);
      // reconstruct and compare
      std::vector<std::uint32_t> touched;
      for (std::size_t k = 0; k < n; ++k) {
        if (!lambda[k]) continue;
        for (auto [idx, v] : B.elements[k].entries) {
          acc[idx] = f.add(acc[idx], f.mul(lambda[k], v));
          touched.push_back(idx);
        }
      }
      bool ok = true;
      for (auto [idx, v] : c.entries) {
        if (acc[idx] != v) ok = false;
        acc[idx] = 0;
      }
      for (auto idx : touched) {
        if (acc[idx]) ok = false;
        acc[idx] = 0;
      }
      if (!ok)
        throw std::runtime_error("bracket [b" + std::to_string(i + 1) + ", b" + std::to_string(j + 1) +
                                 "] escapes the span of the basis");
      for (std::size_t k = 0; k < n; ++k)
        if (lambda[k]) L.table.set(i, j, k, lambda[k]);
    }
  return L;
}

inline std::filesystem::path data_directory()
{
  if (const char* env = std::getenv("CHEVKIT_DATA_DIR"); env && *env) return env;
  return CHEVKIT_DATA_DIR_DEFAULT;
}

inline std::filesystem::path generator_file(Kind kind)
{
  if (kind != Kind::E6 && kind != Kind::E7)
    throw std::invalid_argument("generator pipeline is available for e6 and e7 only");
  // the verbatim e7 list does not close on 133 elements; see data/README.md
  return data_directory() / (kind == Kind::E6 ? "e6_generators.txt" : "e7_generators_repaired.txt");
}

}  // namespace chevkit

#endif  // CHEVKIT_GENBASIS_HPP
