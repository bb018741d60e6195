#ifndef CHEVKIT_LIECORE_HPP
#define CHEVKIT_LIECORE_HPP

// Brackets, adjoint maps, center, and Killing form of a structure-constant algebra.

#include <chevkit/chevalley.hpp>
#include <chevkit/gfp.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chevkit {

using Vector = std::vector<Residue>;

/// Subspace of F_p^n held by a reduced echelon basis.
class Subspace
{
public:
  Subspace(std::uint32_t p, std::size_t ambient_dim) : p_(p), ambient_(ambient_dim) {}

  Subspace(std::uint32_t p, std::size_t ambient_dim, const std::vector<Vector>& spanning)
    : p_(p), ambient_(ambient_dim)
  {
    StreamingEliminator e(p, ambient_dim);
    for (const auto& v : spanning) {
      if (v.size() != ambient_dim) throw std::invalid_argument("subspace vector length mismatch");
      e.push_dense(v);
    }
    for (const auto& row : e.reduced_rows()) {
      Vector dense(ambient_dim, 0);
      for (auto [c, v] : row) dense[c] = v;
      basis_.push_back(std::move(dense));
    }
  }

  std::uint32_t modulus() const { return p_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

  bool contains(const Vector& v) const
  {
    std::vector<Vector> all = basis_;
    all.push_back(v);
    return Subspace(p_, ambient_, all).dim() == dim();
  }

  /// True if every basis vector is supported on the given coordinate positions.
  bool supported_on(const std::vector<std::size_t>& positions) const
  {
    std::vector<char> allowed(ambient_, 0);
    for (auto i : positions) allowed[i] = 1;
    for (const auto& v : basis_)
      for (std::size_t k = 0; k < ambient_; ++k)
        if (v[k] && !allowed[k]) return false;
    return true;
  }

private:
  std::uint32_t p_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
};

using BasisTriple = std::array<std::size_t, 3>;

namespace detail {

// Arithmetic over Z (modulus 0) or F_m, in signed 64-bit.
struct Ring
{
  std::uint64_t modulus = 0;
  std::int64_t norm(std::int64_t v) const
  {
    if (!modulus) return v;
    auto m = static_cast<std::int64_t>(modulus);
    v %= m;
    return v < 0 ? v + m : v;
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const
  {
    if (!modulus) return a * b;
    return norm(norm(a) * norm(b));  // moduli stay below 2^31
  }
};

}  // namespace detail

/// First ordered triple i<j<k violating the Jacobi identity, or nullopt. modulus 0 means over Z.
template <class Coeff>
std::optional<BasisTriple> jacobi_violation(const StructureTensor<Coeff>& t, std::uint64_t modulus)
{
  const detail::Ring ring{modulus};
  const std::size_t n = t.dim();
  std::vector<std::int64_t> acc(n, 0);
  std::vector<std::uint32_t> touched;
  auto nested = [&](std::size_t a, std::size_t b, std::size_t c) {
    for (const auto& outer : t.bracket(a, b))
      for (const auto& inner : t.bracket(outer.index, c)) {
        auto& slot = acc[inner.index];
        slot = ring.norm(slot + ring.mul(static_cast<std::int64_t>(outer.coeff), static_cast<std::int64_t>(inner.coeff)));
        touched.push_back(inner.index);
      }
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        touched.clear();
        nested(i, j, k);
        nested(j, k, i);
        nested(k, i, j);
        bool bad = false;
        for (auto m : touched) {
          if (acc[m] != 0) bad = true;
          acc[m] = 0;
        }
        if (bad) return BasisTriple{i, j, k};
      }
  return std::nullopt;
}

/// First pair (i, j) with c_ij != -c_ji or c_ii != 0.
template <class Coeff>
std::optional<std::array<std::size_t, 2>> antisymmetry_violation(const StructureTensor<Coeff>& t, std::uint64_t modulus)
{
  const detail::Ring ring{modulus};
  for (std::size_t i = 0; i < t.dim(); ++i) {
    if (!t.bracket(i, i).empty()) return std::array<std::size_t, 2>{i, i};
    for (std::size_t j = i + 1; j < t.dim(); ++j) {
      const auto& a = t.bracket(i, j);
      const auto& b = t.bracket(j, i);
      bool ok = a.size() == b.size();
      for (std::size_t s = 0; ok && s < a.size(); ++s)
        ok = a[s].index == b[s].index &&
             ring.norm(static_cast<std::int64_t>(a[s].coeff) + static_cast<std::int64_t>(b[s].coeff)) == 0;
      if (!ok) return std::array<std::size_t, 2>{i, j};
    }
  }
  return std::nullopt;
}

inline Vector unit_vector(std::size_t n, std::size_t i)
{
  Vector v(n, 0);
  v.at(i) = 1;
  return v;
}

/// Bilinear extension of the structure constants.
inline Vector bracket(const LieAlgebraFp& L, const Vector& x, const Vector& y)
{
  if (x.size() != L.n || y.size() != L.n) throw std::invalid_argument("bracket: vector length mismatch");
  const PrimeField f = L.field();
  Vector out(L.n, 0);
  for (std::size_t i = 0; i < L.n; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < L.n; ++j) {
      if (!y[j]) continue;
      const Residue s = f.mul(x[i], y[j]);
      for (const auto& t : L.table.bracket(i, j)) out[t.index] = f.add(out[t.index], f.mul(s, t.coeff));
    }
  }
  return out;
}

/// Column j is [x, b_j].
inline FpMatrix ad_matrix(const LieAlgebraFp& L, const Vector& x)
{
  FpMatrix m(L.p, L.n, L.n);
  for (std::size_t j = 0; j < L.n; ++j) {
    Vector col = bracket(L, x, unit_vector(L.n, j));
    for (std::size_t k = 0; k < L.n; ++k) m(k, j) = col[k];
  }
  return m;
}

/// Z(L) = intersection of ker ad(b_j), solved as one stacked system.
inline Subspace center(const LieAlgebraFp& L)
{
  StreamingEliminator e(L.p, L.n);
  std::vector<SparseRow> rows(L.n);
  for (std::size_t j = 0; j < L.n; ++j) {
    for (auto& r : rows) r.clear();
    // sum_i x_i c_ij^k = 0 for every k
    for (std::size_t i = 0; i < L.n; ++i)
      for (const auto& t : L.table.bracket(i, j)) rows[t.index].emplace_back(static_cast<std::uint32_t>(i), t.coeff);
    for (auto& r : rows)
      if (!r.empty()) e.push(r);
  }
  return Subspace(L.p, L.n, e.solution_basis());
}

inline std::size_t ad_dimension(const LieAlgebraFp& L) { return L.n - center(L).dim(); }

/// k_ij = trace(ad b_i o ad b_j) = sum_{k,l} c_ik^l c_jl^k, over Z (modulus 0) or F_m.
template <class Coeff>
std::vector<std::vector<std::int64_t>> killing_values(const StructureTensor<Coeff>& t, std::uint64_t modulus)
{
  const detail::Ring ring{modulus};
  const std::size_t n = t.dim();
  // by_lk[l*n + k] = list of (j, c_jl^k)
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> by_lk(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l)
      for (const auto& term : t.bracket(j, l))
        by_lk[l * n + term.index].emplace_back(static_cast<std::uint32_t>(j), static_cast<std::int64_t>(term.coeff));
  std::vector<std::vector<std::int64_t>> k(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t kk = 0; kk < n; ++kk)
      for (const auto& term : t.bracket(i, kk))
        for (auto [j, c] : by_lk[term.index * n + kk])
          k[i][j] = ring.norm(k[i][j] + ring.mul(static_cast<std::int64_t>(term.coeff), c));
  return k;
}

inline FpMatrix killing_matrix(const LieAlgebraFp& L)
{
  return FpMatrix::from_integers(L.p, killing_values(L.table, L.p));
}

/// Primes among `primes` at which the Killing form of the Chevalley algebra degenerates.
inline std::vector<std::uint32_t> killing_singular_primes(const ChevalleyBasisZ& cb, const std::vector<std::uint32_t>& primes)
{
  const auto integral = killing_values(cb.table, 0);
  std::vector<std::uint32_t> out;
  for (auto p : primes) {
    if (!is_prime(p)) throw std::invalid_argument("killing_singular_primes: " + std::to_string(p) + " is not prime");
    if (rank(FpMatrix::from_integers(p, integral)) < cb.n) out.push_back(p);
  }
  return out;
}

}  // namespace chevkit

#endif  // CHEVKIT_LIECORE_HPP
