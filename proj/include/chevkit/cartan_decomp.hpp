#ifndef CHEVKIT_CARTAN_DECOMP_HPP
#define CHEVKIT_CARTAN_DECOMP_HPP

// Weight-space decomposition of L_F relative to its designated Cartan part.

#include <chevkit/chevalley.hpp>
#include <chevkit/gfp.hpp>

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace chevkit {

using Weight = std::vector<Residue>;

struct WeightBlock
{
  Weight weight;
  std::vector<std::size_t> positions;  // ascending
};

struct CartanDecomposition
{
  std::uint32_t p = 2;
  std::size_t n = 0;
  std::vector<std::size_t> cartan_indices;
  /// weights[j] = (w(h_1), ..., w(h_r)) for every basis position j.
  std::vector<Weight> weights;
  /// Non-Cartan positions grouped by weight, ordered by smallest member.
  std::vector<WeightBlock> blocks;
  /// Non-Cartan positions whose weight is zero.
  std::vector<std::size_t> zero_class;

  /// Block holding a weight, if any.
  std::optional<std::size_t> block_of_weight(const Weight& w) const
  {
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if (blocks[b].weight == w) return b;
    return std::nullopt;
  }
};

/**
 * Groups basis vectors by their ad(h_i)-eigenvalues.
 *
 * Throws if the Cartan part is not abelian or some ad(h_i) is not diagonal on
 * the basis, since both mean the basis is not adapted to H.
 */
inline CartanDecomposition decompose(const LieAlgebraFp& L)
{
  if (!L.cartan_indices) throw std::invalid_argument("decompose: algebra has no designated Cartan part");
  CartanDecomposition d;
  d.p = L.p;
  d.n = L.n;
  d.cartan_indices = *L.cartan_indices;
  const auto& H = d.cartan_indices;
  std::vector<char> is_cartan(L.n, 0);
  for (auto h : H) is_cartan.at(h) = 1;
  for (auto a : H)
    for (auto b : H)
      if (!L.table.bracket(a, b).empty()) throw std::invalid_argument("decompose: Cartan part is not abelian");

  d.weights.assign(L.n, Weight(H.size(), 0));
  for (std::size_t j = 0; j < L.n; ++j) {
    for (std::size_t i = 0; i < H.size(); ++i) {
      const auto& terms = L.table.bracket(H[i], j);
      if (terms.empty()) continue;
      if (terms.size() != 1 || terms.front().index != j)
        throw std::invalid_argument("decompose: ad(h) is not diagonal on the basis");
      d.weights[j][i] = terms.front().coeff;
    }
  }

  std::map<Weight, std::size_t> block_index;
  const Weight zero(H.size(), 0);
  for (std::size_t j = 0; j < L.n; ++j) {
    if (is_cartan[j]) continue;
    if (d.weights[j] == zero) {
      d.zero_class.push_back(j);
      continue;
    }
    auto [it, inserted] = block_index.try_emplace(d.weights[j], d.blocks.size());
    if (inserted) d.blocks.push_back({d.weights[j], {}});
    d.blocks[it->second].positions.push_back(j);
  }
  return d;
}

inline bool verify_nonzero_weights(const CartanDecomposition& d) { return d.zero_class.empty(); }

/// Lines "block k: size s, weight (w_1,...,w_r)", k 1-based.
inline void write_decomposition(std::ostream& os, const CartanDecomposition& d)
{
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    os << "block " << b + 1 << ": size " << d.blocks[b].positions.size() << ", weight (";
    for (std::size_t i = 0; i < d.blocks[b].weight.size(); ++i) os << (i ? "," : "") << d.blocks[b].weight[i];
    os << ")\n";
  }
}

/// Every bracket of basis vectors of weights w1, w2 lies in weight space w1 + w2.
inline bool brackets_respect_weights(const LieAlgebraFp& L, const CartanDecomposition& d)
{
  const PrimeField f(L.p);
  for (std::size_t i = 0; i < L.n; ++i)
    for (std::size_t j = 0; j < L.n; ++j) {
      Weight sum(d.weights[i].size());
      for (std::size_t s = 0; s < sum.size(); ++s) sum[s] = f.add(d.weights[i][s], d.weights[j][s]);
      for (const auto& t : L.table.bracket(i, j))
        if (d.weights[t.index] != sum) return false;
    }
  return true;
}

}  // namespace chevkit

#endif  // CHEVKIT_CARTAN_DECOMP_HPP
