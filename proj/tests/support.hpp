#ifndef CHEVKIT_TESTS_SUPPORT_HPP
#define CHEVKIT_TESTS_SUPPORT_HPP

// Shared fixtures: simple roots in Euclidean coordinates, basis rescaling.

#include <chevkit/chevalley.hpp>

#include <cstdint>
#include <ostream>
#include <vector>

namespace chevkit {

// readable parameter names in test listings
inline void PrintTo(Kind k, std::ostream* os) { *os << kind_name(k); }

}  // namespace chevkit

namespace chevkit::fixtures {

using Ambient = std::vector<int>;

// Simple roots in the usual orthonormal coordinates, scaled by 2 where half-integers occur.
inline std::vector<Ambient> ambient_simple_roots(Kind kind)
{
  switch (kind) {
    case Kind::G2: return {{1, -1, 0}, {-2, 1, 1}};
    case Kind::F4: return {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
    default: break;
  }
  std::vector<Ambient> e8{{1, -1, -1, -1, -1, -1, -1, 1}};
  e8.push_back({2, 2, 0, 0, 0, 0, 0, 0});
  for (int i = 0; i < 6; ++i) {
    Ambient v(8, 0);
    v[static_cast<std::size_t>(i)] = -2;
    v[static_cast<std::size_t>(i) + 1] = 2;
    e8.push_back(v);
  }
  const std::size_t r = static_cast<std::size_t>(root_system_type(kind).rank);
  e8.resize(r);
  return e8;
}

inline long dot(const Ambient& a, const Ambient& b)
{
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  return s;
}

inline Ambient to_ambient(Kind kind, const std::vector<int>& coords)
{
  const auto simple = ambient_simple_roots(kind);
  Ambient v(simple.front().size(), 0);
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t t = 0; t < v.size(); ++t) v[t] += coords[i] * simple[i][t];
  return v;
}

/// 2(a,b)/(b,b)
inline long ambient_pairing(const Ambient& a, const Ambient& b) { return 2 * dot(a, b) / dot(b, b); }

/// Structure constants after b_i -> s_i b_i: c_ij^k -> s_i s_j / s_k c_ij^k.
inline LieAlgebraFp rescale(const LieAlgebraFp& L, const std::vector<Residue>& s)
{
  const PrimeField f(L.p);
  LieAlgebraFp out = L;
  out.table = FpTensor(L.n);
  for (std::size_t i = 0; i < L.n; ++i)
    for (std::size_t j = 0; j < L.n; ++j)
      for (const auto& t : L.table.bracket(i, j))
        out.table.set(i, j, t.index, f.mul(f.mul(f.mul(s[i], s[j]), f.inv(s[t.index])), t.coeff));
  return out;
}

inline IntTensor rescale_signs(const IntTensor& t, const std::vector<int>& s)
{
  IntTensor out(t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      for (const auto& term : t.bracket(i, j)) out.set(i, j, term.index, s[i] * s[j] * s[term.index] * term.coeff);
  return out;
}

}  // namespace chevkit::fixtures

#endif  // CHEVKIT_TESTS_SUPPORT_HPP
