#ifndef CHEVKIT_ROOTSYS_HPP
#define CHEVKIT_ROOTSYS_HPP

// Root systems of the exceptional types G2, F4, E6, E7, E8.
//
// Roots are integer vectors in the basis of simple roots. Simple roots are
// numbered as in Bourbaki's plates:
//   G2: alpha_1 short, alpha_2 long.
//   F4: alpha_1, alpha_2 long; alpha_3, alpha_4 short.
//   E6/E7/E8: alpha_2 hangs off alpha_4; alpha_1-alpha_3-alpha_4-alpha_5-... is the long arm.
// The Cartan matrix entry a_ij is <alpha_i, alpha_j> = 2(alpha_i, alpha_j)/(alpha_j, alpha_j).

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chevkit {

enum class Kind { G2, F4, E6, E7, E8 };

inline constexpr std::array<Kind, 5> all_kinds{Kind::G2, Kind::F4, Kind::E6, Kind::E7, Kind::E8};

struct RootSystemType
{
  Kind kind;
  int rank;
  int expected_root_count;
  int expected_dim;
};

inline RootSystemType root_system_type(Kind kind)
{
  switch (kind) {
    case Kind::G2: return {kind, 2, 12, 14};
    case Kind::F4: return {kind, 4, 48, 52};
    case Kind::E6: return {kind, 6, 72, 78};
    case Kind::E7: return {kind, 7, 126, 133};
    case Kind::E8: return {kind, 8, 240, 248};
  }
  throw std::logic_error("unknown root system kind");
}

inline std::string_view kind_name(Kind kind)
{
  switch (kind) {
    case Kind::G2: return "g2";
    case Kind::F4: return "f4";
    case Kind::E6: return "e6";
    case Kind::E7: return "e7";
    case Kind::E8: return "e8";
  }
  return "?";
}

inline Kind parse_kind(std::string_view name)
{
  for (Kind k : all_kinds) {
    std::string_view canonical = kind_name(k);
    if (name.size() == 2 && std::tolower(static_cast<unsigned char>(name[0])) == canonical[0] &&
        name[1] == canonical[1])
      return k;
  }
  throw std::invalid_argument("unknown algebra type '" + std::string(name) + "'");
}

using IntMatrix = std::vector<std::vector<int>>;

inline IntMatrix cartan_matrix(Kind kind)
{
  switch (kind) {
    case Kind::G2: return {{2, -1}, {-3, 2}};
    case Kind::F4: return {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
    default: break;
  }
  // E-series: Bourbaki numbering, edges 1-3, 2-4, 3-4, 4-5, 5-6, ...
  const int r = root_system_type(kind).rank;
  IntMatrix a(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 0));
  auto edge = [&](int i, int j) {
    a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = -1;
    a[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = -1;
  };
  for (int i = 0; i < r; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  edge(1, 3);
  edge(2, 4);
  for (int i = 3; i < r; ++i) edge(i, i + 1);
  return a;
}

struct Root
{
  std::vector<int> coords;
  int height = 0;
  bool is_positive = false;

  explicit Root(std::vector<int> c)
    : coords(std::move(c)), height(std::accumulate(coords.begin(), coords.end(), 0)), is_positive(height > 0)
  {}

  friend bool operator==(const Root& a, const Root& b) { return a.coords == b.coords; }
};

/// Root system generated from a Cartan matrix; immutable after construction.
class RootSystem
{
public:
  RootSystemType type() const { return type_; }
  int rank() const { return type_.rank; }
  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<Root>& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }
  std::size_t num_positive() const { return roots_.size() / 2; }
  const Root& root(std::size_t i) const { return roots_.at(i); }
  /// alpha_{i+1}; height-one roots are stored in ascending lexicographic order, so alpha_r comes first.
  const Root& simple_root(int i) const { return roots_.at(static_cast<std::size_t>(rank() - 1 - i)); }

  /// Half the squared length of simple root i; short roots have 1.
  const std::vector<int>& symmetrizer() const { return sym_; }

  std::optional<std::size_t> find(const std::vector<int>& coords) const
  {
    auto it = index_.find(coords);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const std::vector<int>& coords) const { return index_.count(coords) != 0; }

  std::size_t index_of(const std::vector<int>& coords) const
  {
    auto it = index_.find(coords);
    if (it == index_.end()) throw std::invalid_argument("vector is not a root");
    return it->second;
  }

  /// Position of -alpha for the root at position i.
  std::size_t negative_of(std::size_t i) const
  {
    const std::size_t half = num_positive();
    return i < half ? i + half : i - half;
  }

  /// Symmetric bilinear form normalised so short roots have (a, a) = 2.
  int inner(const std::vector<int>& a, const std::vector<int>& b) const
  {
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        s += a[i] * b[j] * cartan_[i][j] * sym_[j];
    }
    return s;
  }

  /// <alpha, alpha_i> computed from the Cartan matrix; linear in alpha.
  int pairing_with_simple(const std::vector<int>& alpha, int i) const
  {
    int s = 0;
    for (std::size_t j = 0; j < alpha.size(); ++j) s += alpha[j] * cartan_[j][static_cast<std::size_t>(i)];
    return s;
  }

  friend RootSystem generate_roots(const IntMatrix& cartan);

private:
  RootSystemType type_{};
  IntMatrix cartan_;
  std::vector<int> sym_;
  std::vector<Root> roots_;
  std::map<std::vector<int>, std::size_t> index_;
};

namespace detail {

inline void validate_cartan(const IntMatrix& a)
{
  const std::size_t r = a.size();
  if (r == 0) throw std::invalid_argument("empty Cartan matrix");
  for (const auto& row : a)
    if (row.size() != r) throw std::invalid_argument("Cartan matrix is not square");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j && a[i][j] != 2) throw std::invalid_argument("Cartan matrix diagonal entry is not 2");
      if (i != j && a[i][j] > 0) throw std::invalid_argument("Cartan matrix has a positive off-diagonal entry");
      if (i != j && (a[i][j] == 0) != (a[j][i] == 0))
        throw std::invalid_argument("Cartan matrix violates a_ij = 0 <=> a_ji = 0");
    }
}

// d_j with a_ij d_j = a_ji d_i, smallest positive integers.
inline std::vector<int> symmetrizer(const IntMatrix& a)
{
  const std::size_t r = a.size();
  // rational d_j = num/den, propagated over the (connected) Dynkin diagram
  std::vector<std::int64_t> num(r, 0), den(r, 1);
  num[0] = 1;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j || a[i][j] == 0 || num[j] != 0) continue;
      // d_j = a_ji d_i / a_ij
      num[j] = a[j][i] * num[i];
      den[j] = a[i][j] * den[i];
      if (den[j] < 0) {
        num[j] = -num[j];
        den[j] = -den[j];
      }
      std::int64_t g = std::gcd(num[j], den[j]);
      num[j] /= g;
      den[j] /= g;
      stack.push_back(j);
    }
  }
  std::int64_t l = 1;
  for (std::size_t j = 0; j < r; ++j) {
    if (num[j] == 0) throw std::invalid_argument("Dynkin diagram is not connected");
    l = std::lcm(l, den[j]);
  }
  std::vector<std::int64_t> d(r);
  std::int64_t g = 0;
  for (std::size_t j = 0; j < r; ++j) {
    d[j] = num[j] * (l / den[j]);
    g = std::gcd(g, d[j]);
  }
  std::vector<int> out(r);
  for (std::size_t j = 0; j < r; ++j) out[j] = static_cast<int>(d[j] / g);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (a[i][j] * out[j] != a[j][i] * out[i]) throw std::invalid_argument("Cartan matrix is not symmetrizable");
  return out;
}

inline bool lex_less_by_height(const std::vector<int>& a, const std::vector<int>& b)
{
  int ha = std::accumulate(a.begin(), a.end(), 0);
  int hb = std::accumulate(b.begin(), b.end(), 0);
  if (ha != hb) return ha < hb;
  return a < b;
}

}  // namespace detail

/**
 * Builds the full root system of an exceptional Cartan matrix.
 *
 * Positive roots are grown level by level: beta + alpha_i is a root iff
 * q > 0, where q = r - <beta, alpha_i> and r is the length of the downward
 * alpha_i-string through beta (already known from lower levels).
 */
inline RootSystem generate_roots(const IntMatrix& cartan)
{
  detail::validate_cartan(cartan);
  const std::size_t r = cartan.size();
  RootSystem rs;
  rs.cartan_ = cartan;
  rs.sym_ = detail::symmetrizer(cartan);

  std::vector<std::vector<int>> positive;
  std::map<std::vector<int>, bool> seen;
  std::vector<std::vector<int>> level;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    level.push_back(e);
    seen[e] = true;
  }
  constexpr std::size_t kMaxRoots = 1000;
  while (!level.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : level) {
      positive.push_back(beta);
      for (std::size_t i = 0; i < r; ++i) {
        int down = 0;
        std::vector<int> probe = beta;
        while (true) {
          probe[i] -= 1;
          if (!seen.count(probe)) break;
          ++down;
        }
        int pair = 0;
        for (std::size_t j = 0; j < r; ++j) pair += beta[j] * cartan[j][i];
        if (down - pair <= 0) continue;
        std::vector<int> up = beta;
        up[i] += 1;
        if (!seen.count(up)) {
          seen[up] = true;
          next.push_back(up);
        }
      }
    }
    if (positive.size() > kMaxRoots) throw std::invalid_argument("Cartan matrix is not of finite type");
    level = std::move(next);
  }
  std::sort(positive.begin(), positive.end(), detail::lex_less_by_height);

  const int count = static_cast<int>(positive.size()) * 2;
  bool symmetric = true;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) symmetric = symmetric && cartan[i][j] == cartan[j][i];
  bool matched = false;
  for (Kind k : all_kinds) {
    RootSystemType t = root_system_type(k);
    bool simply_laced = k == Kind::E6 || k == Kind::E7 || k == Kind::E8;
    if (t.rank == static_cast<int>(r) && t.expected_root_count == count && simply_laced == symmetric) {
      rs.type_ = t;
      matched = true;
    }
  }
  if (!matched) throw std::invalid_argument("Cartan matrix is not of exceptional type");

  for (const auto& c : positive) rs.roots_.emplace_back(c);
  for (const auto& c : positive) {
    std::vector<int> n(c);
    for (auto& x : n) x = -x;
    rs.roots_.emplace_back(std::move(n));
  }
  for (std::size_t i = 0; i < rs.roots_.size(); ++i) rs.index_[rs.roots_[i].coords] = i;
  return rs;
}

inline RootSystem generate_roots(Kind kind) { return generate_roots(cartan_matrix(kind)); }

/// <alpha, beta> = 2(alpha, beta)/(beta, beta).
inline int pairing(const RootSystem& rs, const Root& alpha, const Root& beta)
{
  if (!rs.contains(alpha.coords) || !rs.contains(beta.coords))
    throw std::invalid_argument("pairing arguments must be roots");
  int num = 2 * rs.inner(alpha.coords, beta.coords);
  int den = rs.inner(beta.coords, beta.coords);
  if (num % den != 0) throw std::logic_error("non-integral root pairing");
  return num / den;
}

struct StringLengths
{
  int r = 0;  // steps down: beta - r alpha is a root
  int q = 0;  // steps up:   beta + q alpha is a root
};

inline StringLengths alpha_string(const RootSystem& rs, const Root& alpha, const Root& beta)
{
  if (!rs.contains(alpha.coords) || !rs.contains(beta.coords))
    throw std::invalid_argument("alpha_string arguments must be roots");
  std::vector<int> neg(alpha.coords);
  for (auto& x : neg) x = -x;
  if (alpha.coords == beta.coords || neg == beta.coords)
    throw std::invalid_argument("alpha_string requires independent roots");
  StringLengths s;
  std::vector<int> probe = beta.coords;
  while (true) {
    for (std::size_t i = 0; i < probe.size(); ++i) probe[i] -= alpha.coords[i];
    if (!rs.contains(probe)) break;
    ++s.r;
  }
  probe = beta.coords;
  while (true) {
    for (std::size_t i = 0; i < probe.size(); ++i) probe[i] += alpha.coords[i];
    if (!rs.contains(probe)) break;
    ++s.q;
  }
  return s;
}

/// One line per root, "c_1 c_2 ... c_r", positive roots first.
inline void write_roots(std::ostream& os, const RootSystem& rs)
{
  for (const auto& root : rs.roots()) {
    for (std::size_t i = 0; i < root.coords.size(); ++i) os << (i ? " " : "") << root.coords[i];
    os << '\n';
  }
}

}  // namespace chevkit

#endif  // CHEVKIT_ROOTSYS_HPP
