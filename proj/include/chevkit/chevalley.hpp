#ifndef CHEVKIT_CHEVALLEY_HPP
#define CHEVKIT_CHEVALLEY_HPP

// Integer structure constants of a Chevalley basis and their reduction mod p.
//
// Basis order: positions 0..r-1 hold h_1..h_r, positions r..n-1 hold v_alpha
// in RootSystem order. Signs of N_{alpha,beta} are anchored at extraspecial
// pairs (N = +(r+1)) and propagated with the standard identities
//   N_{a,b} = -N_{b,a},   N_{-a,-b} = -N_{a,b},
//   N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)        when a+b+c = 0,
// and the four-root relation for a+b+c+d = 0 with no opposite pair.

#include <chevkit/gfp.hpp>
#include <chevkit/rootsys.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace chevkit {

/// Sparse structure-constant tensor: [b_i, b_j] = sum_k c_ij^k b_k.
template <class Coeff>
class StructureTensor
{
public:
  struct Term
  {
    std::uint32_t index;
    Coeff coeff;
  };

  StructureTensor() = default;
  explicit StructureTensor(std::size_t n) : n_(n), terms_(n * n) {}

  std::size_t dim() const { return n_; }

  const std::vector<Term>& bracket(std::size_t i, std::size_t j) const { return terms_[i * n_ + j]; }

  /// Sets c_ij^k; a zero coefficient removes the entry.
  void set(std::size_t i, std::size_t j, std::size_t k, Coeff c)
  {
    auto& list = terms_[i * n_ + j];
    auto it = std::find_if(list.begin(), list.end(), [&](const Term& t) { return t.index == k; });
    if (c == Coeff{}) {
      if (it != list.end()) list.erase(it);
      return;
    }
    if (it != list.end()) {
      it->coeff = c;
      return;
    }
    list.push_back({static_cast<std::uint32_t>(k), c});
    std::sort(list.begin(), list.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  }

  Coeff get(std::size_t i, std::size_t j, std::size_t k) const
  {
    for (const auto& t : bracket(i, j))
      if (t.index == k) return t.coeff;
    return Coeff{};
  }

  std::size_t nonzeros() const
  {
    std::size_t s = 0;
    for (const auto& l : terms_) s += l.size();
    return s;
  }

private:
  std::size_t n_ = 0;
  std::vector<std::vector<Term>> terms_;
};

using IntTensor = StructureTensor<std::int64_t>;
using FpTensor = StructureTensor<Residue>;

struct ChevalleyBasisZ
{
  RootSystem rs;
  std::size_t n = 0;
  std::vector<std::string> labels;
  /// N[a][b] for root positions a, b; zero when a+b is not a root.
  std::vector<std::vector<int>> N;
  /// coroot[a]: coefficients of h_alpha in h_1..h_r.
  std::vector<std::vector<int>> coroot;
  IntTensor table;

  std::size_t rank() const { return static_cast<std::size_t>(rs.rank()); }
  std::size_t root_position(std::size_t root_index) const { return rank() + root_index; }
};

struct LieAlgebraFp
{
  std::uint32_t p = 2;
  std::size_t n = 0;
  std::vector<std::string> labels;
  FpTensor table;
  std::optional<std::vector<std::size_t>> cartan_indices;
  /// Source type, when known (Chevalley or generator pipeline).
  std::optional<Kind> kind;

  PrimeField field() const { return PrimeField(p); }
};

/// Coefficients of h_alpha = sum_i c_i h_i, i.e. of the coroot alpha^vee in the simple coroots.
inline std::vector<int> coroot_coeffs(const RootSystem& rs, const Root& alpha)
{
  if (!rs.contains(alpha.coords)) throw std::invalid_argument("coroot_coeffs: not a root");
  const int len = rs.inner(alpha.coords, alpha.coords);
  std::vector<int> out(alpha.coords.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    int num = alpha.coords[i] * 2 * rs.symmetrizer()[i];
    if (num % len != 0) throw std::logic_error("non-integral coroot coefficient");
    out[i] = num / len;
  }
  return out;
}

namespace detail {

inline std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b, int sb = 1)
{
  std::vector<int> out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += sb * b[i];
  return out;
}

class StructureConstantSolver
{
public:
  explicit StructureConstantSolver(const RootSystem& rs)
    : rs_(rs), np_(rs.num_positive()), pos_(np_, std::vector<int>(np_, 0)), known_(np_, std::vector<char>(np_, 0))
  {
    for (std::size_t xi = 0; xi < np_; ++xi) {
      if (rs_.root(xi).height == 1) continue;
      solve_target(xi);
    }
  }

  /// N_{a,b} for arbitrary root positions.
  int N(std::size_t a, std::size_t b) const
  {
    const auto sum = add(rs_.root(a).coords, rs_.root(b).coords);
    auto s = rs_.find(sum);
    if (!s) return 0;
    const bool pa = a < np_, pb = b < np_;
    if (pa && pb) {
      if (!known_[a][b]) throw std::logic_error("structure constant requested before it was derived");
      return pos_[a][b];
    }
    if (!pa && !pb) return -N(rs_.negative_of(a), rs_.negative_of(b));
    if (!pa) return -N(b, a);
    // a positive, b negative; c = -(a+b)
    const std::size_t c = rs_.negative_of(*s);
    const int la = len(a), lb = len(b), lc = len(c);
    if (*s < np_) {
      // c negative: N_{a,b} = (c,c)/(a,a) N_{b,c}
      return exact_div(lc * N(b, c), la);
    }
    // c positive: N_{a,b} = (c,c)/(b,b) N_{c,a}
    return exact_div(lc * N(c, a), lb);
  }

private:
  int len(std::size_t a) const { return rs_.inner(rs_.root(a).coords, rs_.root(a).coords); }
  int len(const std::vector<int>& v) const { return rs_.inner(v, v); }

  static int exact_div(int num, int den)
  {
    if (num % den != 0) throw std::logic_error("structure constant sign propagation produced a fraction");
    return num / den;
  }

  int string_down(std::size_t alpha, std::size_t beta) const
  {
    int r = 0;
    std::vector<int> probe = rs_.root(beta).coords;
    while (true) {
      probe = add(probe, rs_.root(alpha).coords, -1);
      if (!rs_.contains(probe)) return r;
      ++r;
    }
  }

  void store(std::size_t a, std::size_t b, int v)
  {
    pos_[a][b] = v;
    pos_[b][a] = -v;
    known_[a][b] = known_[b][a] = 1;
  }

  void solve_target(std::size_t xi)
  {
    const auto& xc = rs_.root(xi).coords;
    // extraspecial pair: smallest gamma with xi - gamma positive
    std::size_t gamma = np_, delta = np_;
    for (std::size_t g = 0; g < np_ && gamma == np_; ++g) {
      auto d = rs_.find(add(xc, rs_.root(g).coords, -1));
      if (d && *d < np_) {
        gamma = g;
        delta = *d;
      }
    }
    if (gamma == np_) throw std::logic_error("non-simple positive root without a decomposition");
    const int n_extra = string_down(gamma, delta) + 1;
    store(gamma, delta, n_extra);

    const int lxi = len(xi);
    for (std::size_t a = gamma + 1; a < np_; ++a) {
      auto bopt = rs_.find(add(xc, rs_.root(a).coords, -1));
      if (!bopt || *bopt >= np_ || *bopt <= a) continue;
      const std::size_t b = *bopt;
      const std::size_t ng = rs_.negative_of(gamma), nd = rs_.negative_of(delta);
      // N_{a,b} N_{g,d}/(xi,xi) = N_{b,-g} N_{a,-d}/(b-g)^2 + N_{-g,a} N_{b,-d}/(a-g)^2
      const auto bg = add(rs_.root(b).coords, rs_.root(gamma).coords, -1);
      const auto ag = add(rs_.root(a).coords, rs_.root(gamma).coords, -1);
      int t1 = 0, l1 = 1, t2 = 0, l2 = 1;
      if (rs_.contains(bg)) {
        t1 = N(b, ng) * N(a, nd);
        l1 = len(bg);
      }
      if (rs_.contains(ag)) {
        t2 = N(ng, a) * N(b, nd);
        l2 = len(ag);
      }
      const int num = lxi * (t1 * l2 + t2 * l1);
      const int den = l1 * l2 * n_extra;
      const int value = exact_div(num, den);
      const int expected = string_down(a, b) + 1;
      if (value != expected && value != -expected)
        throw std::logic_error("derived structure constant has wrong magnitude");
      store(a, b, value);
    }
  }

  const RootSystem& rs_;
  std::size_t np_;
  std::vector<std::vector<int>> pos_;
  std::vector<std::vector<char>> known_;
};

}  // namespace detail

/// Builds the integer Chevalley basis; throws std::logic_error on any inconsistency.
inline ChevalleyBasisZ structure_constants(const RootSystem& rs)
{
  ChevalleyBasisZ cb{rs, 0, {}, {}, {}, {}};
  const std::size_t r = cb.rank();
  const std::size_t m = rs.size();
  cb.n = r + m;
  for (std::size_t i = 0; i < r; ++i) cb.labels.push_back("h" + std::to_string(i + 1));
  for (const auto& root : rs.roots()) {
    std::string s = "v(";
    for (std::size_t i = 0; i < root.coords.size(); ++i) s += (i ? "," : "") + std::to_string(root.coords[i]);
    cb.labels.push_back(s + ")");
  }

  detail::StructureConstantSolver solver(rs);
  cb.N.assign(m, std::vector<int>(m, 0));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) cb.N[a][b] = solver.N(a, b);
  for (const auto& root : rs.roots()) cb.coroot.push_back(coroot_coeffs(rs, root));

  cb.table = IntTensor(cb.n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t a = 0; a < m; ++a) {
      const int w = rs.pairing_with_simple(rs.root(a).coords, static_cast<int>(i));
      cb.table.set(i, r + a, r + a, w);
      cb.table.set(r + a, i, r + a, -w);
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (b == rs.negative_of(a)) {
        for (std::size_t i = 0; i < r; ++i) cb.table.set(r + a, r + b, i, cb.coroot[a][i]);
        continue;
      }
      if (cb.N[a][b] == 0) continue;
      const auto sum = detail::add(rs.root(a).coords, rs.root(b).coords);
      cb.table.set(r + a, r + b, r + rs.index_of(sum), cb.N[a][b]);
    }
  return cb;
}

inline ChevalleyBasisZ structure_constants(Kind kind) { return structure_constants(generate_roots(kind)); }

/// Reduces a structure tensor over Z mod p, dropping entries divisible by p.
inline FpTensor reduce_tensor(const IntTensor& t, const PrimeField& f)
{
  FpTensor out(t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      for (const auto& term : t.bracket(i, j)) {
        Residue v = f.reduce(term.coeff);
        if (v) out.set(i, j, term.index, v);
      }
  return out;
}

inline LieAlgebraFp reduce_mod_p(const ChevalleyBasisZ& cb, std::uint32_t p)
{
  PrimeField f(p);
  LieAlgebraFp L;
  L.p = p;
  L.n = cb.n;
  L.labels = cb.labels;
  L.table = reduce_tensor(cb.table, f);
  std::vector<std::size_t> cartan(cb.rank());
  for (std::size_t i = 0; i < cartan.size(); ++i) cartan[i] = i;
  L.cartan_indices = std::move(cartan);
  L.kind = cb.rs.type().kind;
  return L;
}

/// Chevalley algebra of the given type over F_p.
inline LieAlgebraFp chevalley_algebra(Kind kind, std::uint32_t p) { return reduce_mod_p(structure_constants(kind), p); }

// ---- structure-constant dump format: "i j k c", 1-based, lexicographic ----

template <class Coeff>
void write_structure_constants(std::ostream& os, const StructureTensor<Coeff>& t)
{
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      for (const auto& term : t.bracket(i, j))
        os << i + 1 << ' ' << j + 1 << ' ' << term.index + 1 << ' ' << term.coeff << '\n';
}

/// Parses an "i j k c" dump. The dimension is the largest index seen unless given.
inline IntTensor read_structure_constants(std::istream& is, std::size_t dim = 0)
{
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::int64_t>> entries;
  std::string line;
  std::size_t lineno = 0, maxidx = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::istringstream ls(line);
    long long i, j, k, c;
    std::string rest;
    if (!(ls >> i >> j >> k >> c) || (ls >> rest) || i < 1 || j < 1 || k < 1)
      throw std::runtime_error("malformed structure-constant line " + std::to_string(lineno) + ": '" + line + "'");
    entries.emplace_back(i - 1, j - 1, k - 1, c);
    maxidx = std::max({maxidx, static_cast<std::size_t>(i), static_cast<std::size_t>(j), static_cast<std::size_t>(k)});
  }
  if (dim == 0) dim = maxidx;
  if (maxidx > dim) throw std::runtime_error("structure-constant index exceeds the declared dimension");
  IntTensor t(dim);
  for (auto [i, j, k, c] : entries) t.set(i, j, k, c);
  return t;
}

}  // namespace chevkit

#endif  // CHEVKIT_CHEVALLEY_HPP
