#ifndef CHEVKIT_DERIVATIONS_HPP
#define CHEVKIT_DERIVATIONS_HPP

// Derivation algebras over F_p by two routes:
//  * full:   every entry of an n x n matrix D is unknown;
//  * vspace: D restricted to derivations with D(H) in Z and D(block) in block,
//            then dim Der = dim L + dim V - dim H.
// Both routes impose D[b_i,b_j] = [D b_i, b_j] + [b_i, D b_j] on all pairs i < j
// and feed the rows to a StreamingEliminator.

#include <chevkit/cartan_decomp.hpp>
#include <chevkit/chevalley.hpp>
#include <chevkit/gfp.hpp>
#include <chevkit/liecore.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chevkit {

/// Raised when two routes that must agree do not.
class CrossCheckError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/**
 * A linear family of maps D = sum_u x_u D_u. Column m lists the entries of
 * D(b_m) as (row, unknown, coefficient) triples.
 */
struct LinearMapAnsatz
{
  struct Entry
  {
    std::uint32_t row;
    std::uint32_t unknown;
    Residue coeff;
  };
  std::size_t num_unknowns = 0;
  std::vector<std::vector<Entry>> columns;
};

/// Every matrix entry free; unknown k*n + m is the (k, m) entry.
inline LinearMapAnsatz full_ansatz(std::size_t n)
{
  LinearMapAnsatz a;
  a.num_unknowns = n * n;
  a.columns.resize(n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = 0; k < n; ++k)
      a.columns[m].push_back({static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k * n + m), 1});
  return a;
}

/// Leibniz system for the ansatz, reduced into a streaming eliminator.
inline StreamingEliminator leibniz_system(const LieAlgebraFp& L, const LinearMapAnsatz& ansatz)
{
  if (ansatz.columns.size() != L.n) throw std::invalid_argument("ansatz does not match the algebra dimension");
  const PrimeField f = L.field();
  StreamingEliminator elim(L.p, ansatz.num_unknowns);
  std::vector<SparseRow> buckets(L.n);
  std::vector<std::uint32_t> used;
  auto put = [&](std::uint32_t k, std::uint32_t u, Residue v) {
    if (!v) return;
    if (buckets[k].empty()) used.push_back(k);
    buckets[k].emplace_back(u, v);
  };
  SparseRow merged;
  for (std::size_t i = 0; i < L.n; ++i)
    for (std::size_t j = i + 1; j < L.n; ++j) {
      // D[b_i, b_j]
      for (const auto& t : L.table.bracket(i, j))
        for (const auto& e : ansatz.columns[t.index]) put(e.row, e.unknown, f.mul(t.coeff, e.coeff));
      // -[D b_i, b_j]
      for (const auto& e : ansatz.columns[i])
        for (const auto& t : L.table.bracket(e.row, j)) put(t.index, e.unknown, f.neg(f.mul(e.coeff, t.coeff)));
      // -[b_i, D b_j]
      for (const auto& e : ansatz.columns[j])
        for (const auto& t : L.table.bracket(i, e.row)) put(t.index, e.unknown, f.neg(f.mul(e.coeff, t.coeff)));

      for (auto k : used) {
        auto& row = buckets[k];
        std::sort(row.begin(), row.end());
        merged.clear();
        for (const auto& [u, v] : row) {
          if (!merged.empty() && merged.back().first == u)
            merged.back().second = f.add(merged.back().second, v);
          else
            merged.emplace_back(u, v);
        }
        std::erase_if(merged, [](const auto& e) { return e.second == 0; });
        if (!merged.empty()) elim.push(merged);
        row.clear();
      }
      used.clear();
    }
  return elim;
}

struct FullSystemOptions
{
  std::size_t cap = 150;
  bool allow_large = false;
};

/// dim Der(L) from the unrestricted n^2-unknown system.
inline std::size_t derivations_full(const LieAlgebraFp& L, FullSystemOptions opts = {})
{
  if (L.n > opts.cap && !opts.allow_large)
    throw std::invalid_argument("full derivation system for n = " + std::to_string(L.n) + " exceeds the cap of " +
                                std::to_string(opts.cap) + " (override required)");
  return leibniz_system(L, full_ansatz(L.n)).solution_dim();
}

/// Basis of Der(L) as n x n matrices; column m is D(b_m).
inline std::vector<FpMatrix> derivation_basis(const LieAlgebraFp& L, FullSystemOptions opts = {})
{
  if (L.n > opts.cap && !opts.allow_large) throw std::invalid_argument("derivation basis: dimension exceeds the cap");
  auto elim = leibniz_system(L, full_ansatz(L.n));
  std::vector<FpMatrix> out;
  for (const auto& x : elim.solution_basis()) {
    FpMatrix D(L.p, L.n, L.n);
    for (std::size_t k = 0; k < L.n; ++k)
      for (std::size_t m = 0; m < L.n; ++m) D(k, m) = x[k * L.n + m];
    out.push_back(std::move(D));
  }
  return out;
}

namespace detail {

inline void check_vspace_inputs(const LieAlgebraFp& L, const CartanDecomposition& d, const Subspace& Z)
{
  if (d.n != L.n || d.p != L.p || Z.ambient_dim() != L.n || Z.modulus() != L.p)
    throw std::invalid_argument("decomposition or center does not belong to this algebra");
  if (!d.zero_class.empty())
    throw std::invalid_argument("decomposition has non-Cartan vectors of weight zero");
  if (!Z.supported_on(d.cartan_indices)) throw std::invalid_argument("center is not contained in the Cartan part");
  std::size_t covered = d.cartan_indices.size();
  for (const auto& b : d.blocks) covered += b.positions.size();
  if (covered != L.n) throw std::invalid_argument("decomposition blocks do not partition the basis");
}

}  // namespace detail

/// Ansatz for V: D(h_i) = sum_t y_it z_t over a center basis z_t, and D(block) in block.
inline LinearMapAnsatz vspace_ansatz(const LieAlgebraFp& L, const CartanDecomposition& d, const Subspace& Z)
{
  detail::check_vspace_inputs(L, d, Z);
  LinearMapAnsatz a;
  a.columns.resize(L.n);
  std::uint32_t next = 0;
  for (const auto& block : d.blocks)
    for (auto l : block.positions)
      for (auto k : block.positions) a.columns[l].push_back({static_cast<std::uint32_t>(k), next++, 1});
  for (auto h : d.cartan_indices)
    for (const auto& z : Z.basis()) {
      for (std::size_t k = 0; k < L.n; ++k)
        if (z[k]) a.columns[h].push_back({static_cast<std::uint32_t>(k), next, z[k]});
      ++next;
    }
  a.num_unknowns = next;
  return a;
}

inline std::size_t derivations_V(const LieAlgebraFp& L, const CartanDecomposition& d, const Subspace& Z)
{
  return leibniz_system(L, vspace_ansatz(L, d, Z)).solution_dim();
}

/// dim {x : [x, h] in Z for all h in H_F}.
inline std::size_t adV_intersection_dim(const LieAlgebraFp& L, const CartanDecomposition& d, const Subspace& Z)
{
  detail::check_vspace_inputs(L, d, Z);
  const PrimeField f = L.field();
  const std::size_t r = d.cartan_indices.size();
  const std::size_t zdim = Z.dim();
  // unknowns: x_0..x_{n-1}, then t_{i,s} for [x, h_i] = sum_s t_{i,s} z_s
  StreamingEliminator e(L.p, L.n + r * zdim);
  std::vector<SparseRow> rows(L.n);
  for (std::size_t i = 0; i < r; ++i) {
    for (auto& row : rows) row.clear();
    for (std::size_t l = 0; l < L.n; ++l)
      for (const auto& t : L.table.bracket(l, d.cartan_indices[i]))
        rows[t.index].emplace_back(static_cast<std::uint32_t>(l), t.coeff);
    for (std::size_t s = 0; s < zdim; ++s)
      for (std::size_t k = 0; k < L.n; ++k)
        if (Z.basis()[s][k])
          rows[k].emplace_back(static_cast<std::uint32_t>(L.n + i * zdim + s), f.neg(Z.basis()[s][k]));
    for (auto& row : rows) {
      if (row.empty()) continue;
      std::sort(row.begin(), row.end());
      e.push(row);
    }
  }
  // each admissible x determines its t uniquely, so the solution space projects isomorphically onto x
  return e.solution_dim();
}

enum class Method { Full, VSpace, Both };

inline std::string_view method_name(Method m)
{
  switch (m) {
    case Method::Full: return "full";
    case Method::VSpace: return "vspace";
    case Method::Both: return "both";
  }
  return "?";
}

inline Method parse_method(std::string_view s)
{
  if (s == "full") return Method::Full;
  if (s == "vspace") return Method::VSpace;
  if (s == "both") return Method::Both;
  throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

struct DerivationReport
{
  Kind algebra = Kind::G2;
  std::uint32_t p = 2;
  std::size_t dim_L = 0;
  std::size_t dim_Z = 0;
  std::size_t dim_H = 0;
  std::size_t dim_ad = 0;
  std::optional<std::size_t> dim_V;
  std::size_t dim_Der = 0;
  Method method = Method::Full;
  bool inner = false;

  friend bool operator==(const DerivationReport&, const DerivationReport&) = default;
};

struct DerivationInputs
{
  Kind algebra = Kind::G2;
  std::uint32_t p = 2;
  std::size_t dim_L = 0;
  std::size_t dim_Z = 0;
  std::size_t dim_H = 0;
  std::optional<std::size_t> dim_V;        // vspace route
  std::optional<std::size_t> dim_Der_full;  // full route
};

/// Assembles the report; throws CrossCheckError if the two routes disagree.
inline DerivationReport der_dimension(const DerivationInputs& in)
{
  if (!in.dim_V && !in.dim_Der_full) throw std::invalid_argument("der_dimension: no route was computed");
  if (in.dim_Z > in.dim_L) throw std::invalid_argument("der_dimension: center larger than the algebra");
  DerivationReport r;
  r.algebra = in.algebra;
  r.p = in.p;
  r.dim_L = in.dim_L;
  r.dim_Z = in.dim_Z;
  r.dim_H = in.dim_H;
  r.dim_ad = in.dim_L - in.dim_Z;
  r.dim_V = in.dim_V;
  std::optional<std::size_t> via_v;
  if (in.dim_V) via_v = in.dim_L + *in.dim_V - in.dim_H;
  if (via_v && in.dim_Der_full && *via_v != *in.dim_Der_full)
    throw CrossCheckError(std::string(kind_name(in.algebra)) + " p=" + std::to_string(in.p) +
                          ": full system gives dim Der = " + std::to_string(*in.dim_Der_full) +
                          " but dim L + dim V - dim H = " + std::to_string(*via_v));
  r.method = (via_v && in.dim_Der_full) ? Method::Both : via_v ? Method::VSpace : Method::Full;
  r.dim_Der = in.dim_Der_full ? *in.dim_Der_full : *via_v;
  if (r.dim_Der < r.dim_ad) throw CrossCheckError("dim Der smaller than dim ad");
  r.inner = r.dim_Der == r.dim_ad;
  return r;
}

}  // namespace chevkit

#endif  // CHEVKIT_DERIVATIONS_HPP
