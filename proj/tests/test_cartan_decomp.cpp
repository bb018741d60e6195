#include <chevkit/cartan_decomp.hpp>
#include <chevkit/chevalley.hpp>

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <sstream>

using namespace chevkit;

namespace {

std::map<std::size_t, std::size_t> block_size_census(const CartanDecomposition& d)
{
  std::map<std::size_t, std::size_t> census;
  for (const auto& b : d.blocks) ++census[b.positions.size()];
  return census;
}

}  // namespace

TEST(Decompose, BlockCensus)
{
  using Census = std::map<std::size_t, std::size_t>;
  EXPECT_EQ(block_size_census(decompose(chevalley_algebra(Kind::E6, 2))), (Census{{2, 36}}));
  EXPECT_EQ(block_size_census(decompose(chevalley_algebra(Kind::E6, 3))), (Census{{1, 72}}));
  EXPECT_EQ(block_size_census(decompose(chevalley_algebra(Kind::E7, 2))), (Census{{2, 63}}));
  EXPECT_EQ(block_size_census(decompose(chevalley_algebra(Kind::E7, 3))), (Census{{1, 126}}));
  EXPECT_EQ(block_size_census(decompose(chevalley_algebra(Kind::E8, 3))), (Census{{1, 240}}));
  EXPECT_EQ(block_size_census(decompose(chevalley_algebra(Kind::E8, 5))), (Census{{1, 240}}));
  const auto g2 = decompose(chevalley_algebra(Kind::G2, 2));
  EXPECT_EQ(g2.blocks.size(), 3u);
  EXPECT_EQ(block_size_census(g2).rbegin()->first, 4u);
}

TEST(Decompose, OppositeRootsShareABlockInCharacteristicTwo)
{
  for (Kind k : all_kinds) {
    const auto cb = structure_constants(k);
    const auto d = decompose(reduce_mod_p(cb, 2));
    for (std::size_t x = 0; x < cb.rs.size(); ++x)
      EXPECT_EQ(d.weights[cb.root_position(x)], d.weights[cb.root_position(cb.rs.negative_of(x))]);
  }
}

TEST(Decompose, WeightsArePairingsModP)
{
  for (Kind k : all_kinds)
    for (std::uint32_t p : {2u, 3u, 5u}) {
      const auto cb = structure_constants(k);
      const auto d = decompose(reduce_mod_p(cb, p));
      const PrimeField f(p);
      EXPECT_EQ(d.cartan_indices.size(), cb.rank());
      for (std::size_t x = 0; x < cb.rs.size(); ++x) {
        const auto& w = d.weights[cb.root_position(x)];
        ASSERT_EQ(w.size(), cb.rank());
        for (std::size_t i = 0; i < cb.rank(); ++i)
          EXPECT_EQ(w[i], f.reduce(cb.rs.pairing_with_simple(cb.rs.root(x).coords, static_cast<int>(i))));
      }
    }
}

TEST(Decompose, BlocksPartitionTheRootVectors)
{
  for (Kind k : all_kinds)
    for (std::uint32_t p : {2u, 3u}) {
      const auto L = chevalley_algebra(k, p);
      const auto d = decompose(L);
      EXPECT_TRUE(verify_nonzero_weights(d));
      EXPECT_TRUE(brackets_respect_weights(L, d));
      std::set<std::size_t> seen;
      std::set<Weight> weights;
      for (const auto& b : d.blocks) {
        EXPECT_TRUE(weights.insert(b.weight).second);
        for (auto pos : b.positions) {
          EXPECT_TRUE(seen.insert(pos).second);
          EXPECT_EQ(d.weights[pos], b.weight);
        }
        EXPECT_EQ(d.block_of_weight(b.weight), static_cast<std::size_t>(&b - d.blocks.data()));
      }
      EXPECT_EQ(seen.size(), L.n - d.cartan_indices.size());
    }
}

TEST(Decompose, AbelianAlgebraHasOnlyTheZeroWeight)
{
  LieAlgebraFp L;
  L.p = 3;
  L.n = 3;
  L.table = FpTensor(3);
  L.cartan_indices = std::vector<std::size_t>{0};
  const auto d = decompose(L);
  EXPECT_EQ(d.zero_class.size(), 2u);
  EXPECT_FALSE(verify_nonzero_weights(d));
}

TEST(Decompose, RejectsNonAbelianCartanPart)
{
  auto L = chevalley_algebra(Kind::G2, 5);
  L.cartan_indices = std::vector<std::size_t>{0, 2};  // h_1 and a root vector
  EXPECT_THROW(decompose(L), std::invalid_argument);
}

TEST(Decompose, RejectsNonDiagonalAction)
{
  auto L = chevalley_algebra(Kind::G2, 5);
  L.cartan_indices = std::vector<std::size_t>{2};
  EXPECT_THROW(decompose(L), std::invalid_argument);
  L.cartan_indices.reset();
  EXPECT_THROW(decompose(L), std::invalid_argument);
}

TEST(Decompose, ReportFormat)
{
  std::ostringstream os;
  write_decomposition(os, decompose(chevalley_algebra(Kind::G2, 2)));
  const std::string text = os.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
  EXPECT_EQ(text.rfind("block 1: size ", 0), 0u);
  EXPECT_NE(text.find(", weight ("), std::string::npos);
}
