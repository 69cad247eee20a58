#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "lga/fields.hpp"

namespace lga {

// Dense row-major matrix over a field F.  Row vectors act on the left:
// a matrix M with n rows and m columns is the map F^n -> F^m, x |-> x*M.
template <class F>
struct Matrix {
  using Elem = typename F::Elem;

  std::size_t rows = 0, cols = 0;
  std::vector<Elem> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const F& f)
      : rows(r), cols(c), a(r * c, f.zero()) {}

  Elem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Elem& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  std::vector<Elem> row(std::size_t r) const {
    return std::vector<Elem>(a.begin() + r * cols, a.begin() + (r + 1) * cols);
  }

  Matrix transpose(const F& f) const {
    Matrix t(cols, rows, f);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  bool operator==(const Matrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

// Incremental Gaussian elimination.  Rows are inserted one by one; the
// builder keeps an echelon basis of their span and can finish it into a
// canonical reduced row-echelon matrix.  Over GF(p) with a small modulus the
// inner loop runs on u64 accumulators with delayed reduction.
template <class F>
class RrefBuilder {
 public:
  using Elem = typename F::Elem;

  RrefBuilder(const F& f, std::size_t cols)
      : f_(f), cols_(cols), row_of_pivot_(cols, kNone) {
    if constexpr (std::is_same_v<F, Gf>) {
      // delayed-reduction bound: p^2 * cols must stay well below 2^64
      delayed_ = f_.modulus() < (1u << 20) && cols_ < (1u << 21);
    }
  }

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const F& field() const { return f_; }

  // Inserts the span of one more row vector.  Returns true if the rank grew.
  bool insert(std::vector<Elem> row) {
    if (row.size() != cols_) throw std::invalid_argument("row width mismatch");
    if constexpr (std::is_same_v<F, Gf>) {
      if (delayed_) return insert_delayed(row);
    }
    return insert_generic(std::move(row));
  }

  bool insert_sparse(const std::vector<std::pair<std::size_t, Elem>>& terms) {
    std::vector<Elem> row(cols_, f_.zero());
    for (const auto& [c, v] : terms) row[c] = f_.add(row[c], v);
    return insert(std::move(row));
  }

  // Back-eliminates above all pivots and returns the canonical RREF matrix,
  // rows ordered by pivot column.  The builder stays usable.
  Matrix<F> rref() const {
    std::vector<std::size_t> order;
    for (std::size_t c = 0; c < cols_; ++c)
      if (row_of_pivot_[c] != kNone) order.push_back(c);
    Matrix<F> out(order.size(), cols_, f_);
    // process right-to-left so every row is reduced against finished rows
    std::vector<std::vector<Elem>> done(order.size());
    for (std::size_t n = order.size(); n-- > 0;) {
      std::vector<Elem> row = rows_[row_of_pivot_[order[n]]];
      for (std::size_t j = n + 1; j < order.size(); ++j) {
        const Elem& c = row[order[j]];
        if (!f_.is_zero(c)) axpy(row, f_.neg(c), done[j], order[j]);
      }
      done[n] = std::move(row);
    }
    for (std::size_t n = 0; n < order.size(); ++n)
      std::copy(done[n].begin(), done[n].end(), out.a.begin() + n * cols_);
    return out;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  bool insert_generic(std::vector<Elem> row) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (f_.is_zero(row[c])) continue;
      std::size_t r = row_of_pivot_[c];
      if (r == kNone) {
        Elem s = f_.inv(row[c]);
        for (std::size_t i = c; i < cols_; ++i) row[i] = f_.mul(row[i], s);
        row_of_pivot_[c] = rows_.size();
        rows_.push_back(std::move(row));
        return true;
      }
      axpy(row, f_.neg(row[c]), rows_[r], c);
    }
    return false;
  }

  void axpy(std::vector<Elem>& y, const Elem& c, const std::vector<Elem>& x,
            std::size_t from) const {
    for (std::size_t i = from; i < cols_; ++i)
      y[i] = f_.add(y[i], f_.mul(c, x[i]));
  }

  bool insert_delayed(const std::vector<Elem>& row) {
    static_assert(std::is_same_v<Elem, std::uint32_t>);
    const std::uint64_t p = f_.modulus();
    std::vector<std::uint64_t> buf(row.begin(), row.end());
    for (std::size_t c = 0; c < cols_; ++c) {
      std::uint32_t v = static_cast<std::uint32_t>(buf[c] % p);
      if (v == 0) continue;
      std::size_t r = row_of_pivot_[c];
      if (r == kNone) {
        std::uint64_t s = f_.inv(v);
        std::vector<Elem> stored(cols_, 0);
        for (std::size_t i = c; i < cols_; ++i)
          stored[i] = static_cast<Elem>(buf[i] % p * s % p);
        row_of_pivot_[c] = rows_.size();
        rows_.push_back(std::move(stored));
        return true;
      }
      const std::uint64_t coef = p - v;  // add coef*pivot == subtract v*pivot
      const Elem* px = rows_[r].data();
      std::uint64_t* py = buf.data();
      for (std::size_t i = c; i < cols_; ++i) py[i] += coef * px[i];
      buf[c] = 0;
    }
    return false;
  }

  F f_;
  std::size_t cols_;
  bool delayed_ = false;
  std::vector<std::vector<Elem>> rows_;      // unit leading entry at pivot
  std::vector<std::size_t> row_of_pivot_;    // per column, kNone if free
};

// Canonical reduced row-echelon form of an arbitrary matrix, zero rows
// dropped.
template <class F>
Matrix<F> rref(const F& f, const Matrix<F>& m) {
  RrefBuilder<F> b(f, m.cols);
  for (std::size_t r = 0; r < m.rows; ++r) b.insert(m.row(r));
  return b.rref();
}

// A subspace of F^n held in canonical form: the basis matrix is in reduced
// row-echelon form with strictly increasing pivot columns, so two Subspace
// values are equal as sets iff they compare equal entry-wise.
template <class F>
class Subspace {
 public:
  using Elem = typename F::Elem;

  Subspace(const F& f, std::size_t ambient)
      : f_(f), ambient_(ambient), basis_(0, ambient, f) {}

  static Subspace zero(const F& f, std::size_t ambient) {
    return Subspace(f, ambient);
  }

  static Subspace full(const F& f, std::size_t ambient) {
    Subspace s(f, ambient);
    s.basis_ = Matrix<F>(ambient, ambient, f);
    for (std::size_t i = 0; i < ambient; ++i) s.basis_.at(i, i) = f.one();
    s.refresh_pivots();
    return s;
  }

  static Subspace span(const F& f, const Matrix<F>& rows) {
    Subspace s(f, rows.cols);
    s.basis_ = rref(f, rows);
    s.refresh_pivots();
    return s;
  }

  static Subspace from_builder(const RrefBuilder<F>& b) {
    Subspace s(b.field(), b.cols());
    s.basis_ = b.rref();
    s.refresh_pivots();
    return s;
  }

  // Accepts a matrix that is already in reduced row-echelon form (used where
  // the construction guarantees it, e.g. tensor products of canonical bases).
  static Subspace from_rref(const F& f, Matrix<F> m) {
    Subspace s(f, m.cols);
    s.basis_ = std::move(m);
    s.refresh_pivots();
    return s;
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows; }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const F& field() const { return f_; }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  // Residual of v after eliminating all pivot coordinates; zero iff v lies
  // in the subspace.
  std::vector<Elem> reduce(std::vector<Elem> v) const {
    if (v.size() != ambient_) throw std::invalid_argument("ambient mismatch");
    for (std::size_t r = 0; r < basis_.rows; ++r) {
      const Elem& c = v[pivots_[r]];
      if (f_.is_zero(c)) continue;
      Elem s = f_.neg(c);
      for (std::size_t i = pivots_[r]; i < ambient_; ++i)
        v[i] = f_.add(v[i], f_.mul(s, basis_.at(r, i)));
    }
    return v;
  }

  bool contains(const std::vector<Elem>& v) const {
    auto res = reduce(v);
    return std::all_of(res.begin(), res.end(),
                       [&](const Elem& e) { return f_.is_zero(e); });
  }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("ambient mismatch");
    for (std::size_t r = 0; r < other.basis_.rows; ++r)
      if (!contains(other.basis_.row(r))) return false;
    return true;
  }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

  // Total order for canonical sets of subspaces (lattice closures).
  bool operator<(const Subspace& o) const {
    if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
    if (dim() != o.dim()) return dim() < o.dim();
    if (pivots_ != o.pivots_) return pivots_ < o.pivots_;
    return basis_.a < o.basis_.a;
  }

 private:
  void refresh_pivots() {
    pivots_.clear();
    for (std::size_t r = 0; r < basis_.rows; ++r) {
      std::size_t c = 0;
      while (c < ambient_ && f_.is_zero(basis_.at(r, c))) ++c;
      pivots_.push_back(c);
    }
  }

  F f_;
  std::size_t ambient_;
  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

namespace detail {

// Nullspace basis rows of an RREF matrix, one per free column.  Rows are not
// themselves in RREF; canonicalize before exposing.
template <class F>
std::vector<std::vector<typename F::Elem>> nullspace_rows(
    const F& f, const Matrix<F>& r, const std::vector<std::size_t>& pivots) {
  std::vector<bool> is_pivot(r.cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<typename F::Elem>> out;
  for (std::size_t c = 0; c < r.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<typename F::Elem> v(r.cols, f.zero());
    v[c] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = f.neg(r.at(i, c));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

// Solution space of the homogeneous system with the rows of m as equations.
template <class F>
Subspace<F> solution_space(const F& f, const Matrix<F>& m) {
  RrefBuilder<F> b(f, m.cols);
  for (std::size_t r = 0; r < m.rows; ++r) b.insert(m.row(r));
  Matrix<F> rr = b.rref();
  std::vector<std::size_t> piv;
  for (std::size_t r = 0; r < rr.rows; ++r) {
    std::size_t c = 0;
    while (c < rr.cols && f.is_zero(rr.at(r, c))) ++c;
    piv.push_back(c);
  }
  auto rows = detail::nullspace_rows(f, rr, piv);
  RrefBuilder<F> nb(f, m.cols);
  for (auto& r : rows) nb.insert(std::move(r));
  return Subspace<F>::from_rref(f, nb.rref());
}

// Annihilator of s under the standard dot pairing.  Over any field this is a
// true complement in the dimension-count sense, and double annihilation is
// the identity; that is all the lattice computations rely on.
template <class F>
Subspace<F> complement(const Subspace<F>& s) {
  return solution_space(s.field(), s.basis());
}

// Kernel of the row-vector map x |-> x*m.
template <class F>
Subspace<F> kernel(const F& f, const Matrix<F>& m) {
  return solution_space(f, m.transpose(f));
}

// Image of s under the row-vector map given by m.
template <class F>
Subspace<F> apply_map(const F& f, const Matrix<F>& m, const Subspace<F>& s) {
  if (s.ambient() != m.rows) throw std::invalid_argument("dimension mismatch");
  RrefBuilder<F> b(f, m.cols);
  for (std::size_t r = 0; r < s.dim(); ++r) {
    std::vector<typename F::Elem> img(m.cols, f.zero());
    for (std::size_t i = 0; i < m.rows; ++i) {
      const auto& c = s.basis().at(r, i);
      if (f.is_zero(c)) continue;
      for (std::size_t j = 0; j < m.cols; ++j)
        img[j] = f.add(img[j], f.mul(c, m.at(i, j)));
    }
    b.insert(std::move(img));
  }
  return Subspace<F>::from_rref(f, b.rref());
}

// Preimage {x : x*m in s}: the kernel of m composed with reduction mod s.
template <class F>
Subspace<F> preimage(const F& f, const Matrix<F>& m, const Subspace<F>& s) {
  if (s.ambient() != m.cols) throw std::invalid_argument("dimension mismatch");
  Matrix<F> residuals(m.rows, m.cols, f);
  for (std::size_t r = 0; r < m.rows; ++r) {
    auto res = s.reduce(m.row(r));
    std::copy(res.begin(), res.end(), residuals.a.begin() + r * m.cols);
  }
  return kernel(f, residuals);
}

template <class F>
Subspace<F> subspace_sum(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch");
  const F& f = a.field();
  RrefBuilder<F> builder(f, a.ambient());
  for (std::size_t r = 0; r < a.dim(); ++r) builder.insert(a.basis().row(r));
  for (std::size_t r = 0; r < b.dim(); ++r) builder.insert(b.basis().row(r));
  return Subspace<F>::from_rref(f, builder.rref());
}

template <class F>
Subspace<F> subspace_intersect(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch");
  const F& f = a.field();
  const std::size_t n = a.ambient();
  if (a.is_zero() || b.is_zero()) return Subspace<F>::zero(f, n);
  if (a.is_full()) return b;
  if (b.is_full()) return a;

  if (a.dim() + b.dim() > n) {
    // high-dimensional inputs: intersect through annihilators, where the
    // same computation is a cheap sum
    return complement(subspace_sum(complement(a), complement(b)));
  }

  // columns are the basis vectors of a and b; a nullspace element (alpha,
  // beta) encodes a vector alpha*A = -beta*B lying in both spans
  Matrix<F> stacked(n, a.dim() + b.dim(), f);
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) stacked.at(c, r) = a.basis().at(r, c);
  for (std::size_t r = 0; r < b.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c)
      stacked.at(c, a.dim() + r) = b.basis().at(r, c);
  Subspace<F> ns = solution_space(f, stacked);

  RrefBuilder<F> builder(f, n);
  for (std::size_t r = 0; r < ns.dim(); ++r) {
    std::vector<typename F::Elem> v(n, f.zero());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const auto& c = ns.basis().at(r, i);
      if (f.is_zero(c)) continue;
      for (std::size_t j = 0; j < n; ++j)
        v[j] = f.add(v[j], f.mul(c, a.basis().at(i, j)));
    }
    builder.insert(std::move(v));
  }
  return Subspace<F>::from_rref(f, builder.rref());
}

}  // namespace lga
