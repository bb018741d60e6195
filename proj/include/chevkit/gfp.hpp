#ifndef CHEVKIT_GFP_HPP
#define CHEVKIT_GFP_HPP

// Exact linear algebra over prime fields F_p: dense row reduction, kernels,
// inverses, and a sparse streaming eliminator for very large equation streams.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chevkit {

using Residue = std::uint32_t;

inline bool is_prime(std::uint64_t n)
{
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint32_t> primes_up_to(std::uint32_t bound)
{
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = 2; q <= bound; ++q)
    if (is_prime(q)) out.push_back(q);
  return out;
}

/// Arithmetic in F_p for a prime p < 2^31. Products are formed in 64 bits.
class PrimeField
{
public:
  explicit PrimeField(std::uint32_t p) : p_(p)
  {
    if (p >= (1u << 31) || !is_prime(p))
      throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^31");
  }

  std::uint32_t modulus() const { return p_; }

  Residue reduce(std::int64_t v) const
  {
    const auto p = static_cast<std::int64_t>(p_);
    std::int64_t r = v % p;
    return static_cast<Residue>(r < 0 ? r + p : r);
  }
  Residue add(Residue a, Residue b) const
  {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Residue>(s >= p_ ? s - p_ : s);
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const
  {
    return static_cast<Residue>((std::uint64_t{a} * b) % p_);
  }
  Residue inv(Residue a) const
  {
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
      if (e & 1) result = (result * base) % p_;
      base = (base * base) % p_;
      e >>= 1;
    }
    return static_cast<Residue>(result);
  }

private:
  std::uint32_t p_;
};

/// Dense matrix over F_p, row-major.
class FpMatrix
{
public:
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : field_(p), rows_(rows), cols_(cols), data_(rows * cols, 0)
  {}

  static FpMatrix identity(std::uint32_t p, std::size_t n)
  {
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Builds from signed integers, reducing each entry mod p.
  static FpMatrix from_integers(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows)
  {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    FpMatrix m(p, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = m.field_.reduce(rows[i][j]);
    }
    return m;
  }

  std::uint32_t modulus() const { return field_.modulus(); }
  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Residue& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Residue operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Residue> row(std::size_t i) const
  {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  std::vector<Residue> apply(const std::vector<Residue>& v) const
  {
    if (v.size() != cols_) throw std::invalid_argument("vector length does not match matrix columns");
    std::vector<Residue> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < cols_; ++j) acc = (acc + std::uint64_t{(*this)(i, j)} * v[j]) % modulus();
      out[i] = static_cast<Residue>(acc);
    }
    return out;
  }

  FpMatrix operator*(const FpMatrix& other) const
  {
    if (cols_ != other.rows_ || modulus() != other.modulus())
      throw std::invalid_argument("incompatible matrix product");
    FpMatrix out(modulus(), rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        Residue a = (*this)(i, k);
        if (!a) continue;
        for (std::size_t j = 0; j < other.cols_; ++j)
          out(i, j) = field_.add(out(i, j), field_.mul(a, other(k, j)));
      }
    return out;
  }

  bool is_zero() const
  {
    return std::all_of(data_.begin(), data_.end(), [](Residue r) { return r == 0; });
  }

  friend bool operator==(const FpMatrix& a, const FpMatrix& b)
  {
    return a.modulus() == b.modulus() && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

struct RrefResult
{
  FpMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form; pivots are the first nonzero entry in column order.
inline RrefResult rref(FpMatrix m)
{
  const PrimeField& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    Residue scale = f.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), scale);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Residue factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), row, std::move(pivots)};
}

inline std::size_t rank(const FpMatrix& m) { return rref(m).rank; }

/// Basis of {v : m v = 0}, one vector per free column.
inline std::vector<std::vector<Residue>> kernel_basis(const FpMatrix& m)
{
  RrefResult r = rref(m);
  const PrimeField& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Residue>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Residue> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t k = 0; k < r.rank; ++k) v[r.pivot_cols[k]] = f.neg(r.reduced(k, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::optional<FpMatrix> inverse(const FpMatrix& m)
{
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  FpMatrix aug(m.modulus(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RrefResult r = rref(std::move(aug));
  if (r.rank < n || r.pivot_cols[n - 1] != n - 1) return std::nullopt;
  FpMatrix out(m.modulus(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r.reduced(i, n + j);
  return out;
}

/// One particular solution of m x = b, if the system is consistent.
inline std::optional<std::vector<Residue>> solve(const FpMatrix& m, const std::vector<Residue>& b)
{
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  FpMatrix aug(m.modulus(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i] % m.modulus();
  }
  RrefResult r = rref(std::move(aug));
  if (r.rank && r.pivot_cols[r.rank - 1] == m.cols()) return std::nullopt;
  std::vector<Residue> x(m.cols(), 0);
  for (std::size_t k = 0; k < r.rank; ++k) x[r.pivot_cols[k]] = r.reduced(k, m.cols());
  return x;
}

/// Sparse vector: (column, nonzero residue) pairs sorted by column.
using SparseRow = std::vector<std::pair<std::uint32_t, Residue>>;

/**
 * Incremental Gaussian elimination over F_p for equation streams far larger
 * than memory would allow as a dense matrix.
 *
 * Pivot rows are kept in fully reduced echelon form: every pivot column is
 * zero in all pivot rows but its own. An incoming row is therefore reduced in
 * a single pass, and fill-in never leaves the connected component of the
 * variable/equation incidence graph that the row lives in.
 */
class StreamingEliminator
{
public:
  StreamingEliminator(std::uint32_t p, std::size_t num_unknowns)
    : field_(p),
      num_unknowns_(num_unknowns),
      pivot_row_of_(num_unknowns, -1),
      occurrences_(num_unknowns),
      scratch_(num_unknowns, 0),
      touched_flag_(num_unknowns, 0)
  {
    if (num_unknowns > UINT32_MAX) throw std::invalid_argument("too many unknowns");
  }

  std::uint32_t modulus() const { return field_.modulus(); }
  std::size_t num_unknowns() const { return num_unknowns_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t solution_dim() const { return num_unknowns_ - rows_.size(); }
  std::size_t equations_seen() const { return pushed_; }

  /// Adds an equation row. Returns true when the rank increased.
  bool push(const SparseRow& row)
  {
    ++pushed_;
    SparseRow residual = reduce(row);
    if (residual.empty()) return false;
    insert_pivot(std::move(residual));
    return true;
  }

  /// Dense convenience overload.
  bool push_dense(const std::vector<Residue>& row)
  {
    SparseRow sparse;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] % modulus()) sparse.emplace_back(static_cast<std::uint32_t>(j), row[j] % modulus());
    return push(sparse);
  }

  /// Remainder of `row` after elimination against the current pivots; empty iff in the row space.
  SparseRow reduce(const SparseRow& row)
  {
    touched_.clear();
    for (auto [col, val] : row) {
      if (col >= num_unknowns_) throw std::out_of_range("equation column out of range");
      touch(col);
      scratch_[col] = field_.add(scratch_[col], val % modulus());
    }
    const std::size_t original = touched_.size();
    for (std::size_t t = 0; t < original; ++t) {
      const std::uint32_t col = touched_[t];
      const Residue factor = scratch_[col];
      const std::int64_t pr = pivot_row_of_[col];
      if (factor == 0 || pr < 0) continue;
      for (auto [c, v] : rows_[static_cast<std::size_t>(pr)]) {
        touch(c);
        scratch_[c] = field_.sub(scratch_[c], field_.mul(factor, v));
      }
    }
    SparseRow out;
    for (auto col : touched_) {
      if (scratch_[col]) out.emplace_back(col, scratch_[col]);
      scratch_[col] = 0;
      touched_flag_[col] = 0;
    }
    touched_.clear();
    std::sort(out.begin(), out.end());
    return out;
  }

  bool in_row_space(const SparseRow& row) { return reduce(row).empty(); }

  bool is_pivot(std::size_t col) const { return pivot_row_of_[col] >= 0; }

  /// Pivot rows sorted by pivot column (the unique RREF of the row space).
  std::vector<SparseRow> reduced_rows() const
  {
    std::vector<SparseRow> out;
    out.reserve(rows_.size());
    for (std::size_t c = 0; c < num_unknowns_; ++c)
      if (pivot_row_of_[c] >= 0) out.push_back(rows_[static_cast<std::size_t>(pivot_row_of_[c])]);
    return out;
  }

  /// Basis of the solution space {x : row·x = 0 for all pushed rows}.
  std::vector<std::vector<Residue>> solution_basis() const
  {
    std::vector<std::int64_t> free_index(num_unknowns_, -1);
    std::size_t nfree = 0;
    for (std::size_t c = 0; c < num_unknowns_; ++c)
      if (pivot_row_of_[c] < 0) free_index[c] = static_cast<std::int64_t>(nfree++);
    std::vector<std::vector<Residue>> basis(nfree, std::vector<Residue>(num_unknowns_, 0));
    for (std::size_t c = 0; c < num_unknowns_; ++c)
      if (free_index[c] >= 0) basis[static_cast<std::size_t>(free_index[c])][c] = 1;
    for (const auto& row : rows_) {
      const std::uint32_t pivot = row.front().first;
      for (std::size_t t = 1; t < row.size(); ++t) {
        auto [c, v] = row[t];
        basis[static_cast<std::size_t>(free_index[c])][pivot] = field_.neg(v);
      }
    }
    return basis;
  }

private:
  void touch(std::uint32_t col)
  {
    if (!touched_flag_[col]) {
      touched_flag_[col] = 1;
      touched_.push_back(col);
    }
  }

  void insert_pivot(SparseRow row)
  {
    const Residue scale = field_.inv(row.front().second);
    for (auto& entry : row) entry.second = field_.mul(entry.second, scale);
    const std::uint32_t pivot = row.front().first;
    const auto id = static_cast<std::uint32_t>(rows_.size());

    // Clear the new pivot column from every existing pivot row.
    std::vector<std::uint32_t> holders;
    holders.swap(occurrences_[pivot]);
    for (std::uint32_t h : holders) {
      SparseRow& target = rows_[h];
      auto it = std::lower_bound(target.begin(), target.end(), std::make_pair(pivot, Residue{0}));
      if (it == target.end() || it->first != pivot) continue;
      const Residue factor = it->second;
      SparseRow merged;
      merged.reserve(target.size() + row.size());
      std::size_t a = 0, b = 0;
      while (a < target.size() || b < row.size()) {
        if (b == row.size() || (a < target.size() && target[a].first < row[b].first)) {
          merged.push_back(target[a++]);
        } else if (a == target.size() || row[b].first < target[a].first) {
          Residue v = field_.neg(field_.mul(factor, row[b].second));
          if (v) {
            merged.emplace_back(row[b].first, v);
            occurrences_[row[b].first].push_back(h);
          }
          ++b;
        } else {
          Residue v = field_.sub(target[a].second, field_.mul(factor, row[b].second));
          if (v) merged.emplace_back(target[a].first, v);
          ++a;
          ++b;
        }
      }
      target.swap(merged);
    }
    for (std::size_t t = 1; t < row.size(); ++t) occurrences_[row[t].first].push_back(id);
    pivot_row_of_[pivot] = id;
    rows_.push_back(std::move(row));
  }

  PrimeField field_;
  std::size_t num_unknowns_;
  std::size_t pushed_ = 0;
  std::vector<SparseRow> rows_;
  std::vector<std::int64_t> pivot_row_of_;
  std::vector<std::vector<std::uint32_t>> occurrences_;  // col -> rows that may hold it (lazy)
  std::vector<Residue> scratch_;
  std::vector<std::uint8_t> touched_flag_;
  std::vector<std::uint32_t> touched_;
};

}  // namespace chevkit

#endif  // CHEVKIT_GFP_HPP
