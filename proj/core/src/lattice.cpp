#include "toric/lattice.hpp"

#include "toric/family.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace toric {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, std::span<const std::vector<Int>> columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<Int> IntMatrix::column(std::size_t c) const {
  std::vector<Int> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
    }
  }
  return out;
}

std::vector<Int> IntMatrix::operator*(std::span<const Int> v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<Int> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? "," : "") << (*this)(r, c).get_str();
    out << "]";
  }
  out << "]";
  return out.str();
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Column operations applied simultaneously to h and u.
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// (col_a, col_b) <- (s*col_a + t*col_b, x*col_a + y*col_b)
void combine_cols(IntMatrix& m, std::size_t a, std::size_t b, const Int& s, const Int& t, const Int& x, const Int& y) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Int va = m(r, a), vb = m(r, b);
    m(r, a) = s * va + t * vb;
    m(r, b) = x * va + y * vb;
  }
}

// col_a <- col_a - q * col_b
void sub_col(IntMatrix& m, std::size_t a, std::size_t b, const Int& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, a) -= q * m(r, b);
}

void negate_col(IntMatrix& m, std::size_t a) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, a) = -m(r, a);
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  HnfResult res{m, IntMatrix::identity(m.cols()), 0, {}};
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  std::size_t pc = 0;  // next pivot column
  for (std::size_t r = 0; r < m.rows() && pc < m.cols(); ++r) {
    // Bring a nonzero entry into the pivot column, then fold the rest of the row into it.
    for (std::size_t k = pc + 1; k < m.cols(); ++k) {
      if (h(r, k) == 0) continue;
      if (h(r, pc) == 0) {
        swap_cols(h, pc, k);
        swap_cols(u, pc, k);
        continue;
      }
      const Int a = h(r, pc), b = h(r, k);
      auto [g, s, t] = ext_gcd(a, b);
      const Int x = -b / g, y = a / g;
      combine_cols(h, pc, k, s, t, x, y);
      combine_cols(u, pc, k, s, t, x, y);
    }
    if (h(r, pc) == 0) continue;
    if (h(r, pc) < 0) {
      negate_col(h, pc);
      negate_col(u, pc);
    }
    const Int pivot = h(r, pc);
    for (std::size_t k = 0; k < pc; ++k) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(r, k).get_mpz_t(), pivot.get_mpz_t());
      if (q == 0) continue;
      sub_col(h, k, pc, q);
      sub_col(u, k, pc, q);
    }
    res.pivot_rows.push_back(r);
    ++pc;
  }
  res.rank = pc;
  return res;
}

std::size_t rank(const IntMatrix& m) { return hnf(m).rank; }

LatticeBasis kernel_basis(const IntMatrix& m) {
  auto res = hnf(m);
  LatticeBasis basis;
  for (std::size_t c = res.rank; c < m.cols(); ++c) basis.vectors.push_back(res.u.column(c));
  return basis;
}

std::optional<std::vector<Int>> lattice_coordinates(const LatticeBasis& basis, std::span<const Int> v) {
  const std::size_t dim = v.size();
  if (basis.empty()) {
    bool zero = std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
    return zero ? std::optional<std::vector<Int>>(std::vector<Int>{}) : std::nullopt;
  }
  for (const auto& b : basis.vectors) {
    if (b.size() != dim) throw std::invalid_argument("lattice vector length mismatch");
  }
  const IntMatrix b = IntMatrix::from_columns(dim, basis.vectors);
  const auto res = hnf(b);
  // Forward substitution on the echelon form h * c' == v.
  std::vector<Int> cprime(b.cols());
  for (std::size_t k = 0; k < res.rank; ++k) {
    const std::size_t row = res.pivot_rows[k];
    Int acc = v[row];
    for (std::size_t j = 0; j < k; ++j) acc -= res.h(row, j) * cprime[j];
    if (mpz_divisible_p(acc.get_mpz_t(), res.h(row, k).get_mpz_t()) == 0) return std::nullopt;
    cprime[k] = acc / res.h(row, k);
  }
  if (res.h * std::span<const Int>(cprime) != std::vector<Int>(v.begin(), v.end())) return std::nullopt;
  return res.u * std::span<const Int>(cprime);
}

bool check_relation(const BinomialVector& v, const IntMatrix& m) {
  auto e = v.entries();
  if (e.size() != m.cols()) throw std::invalid_argument("relation length does not match matrix");
  auto image = m * std::span<const Int>(e);
  return std::all_of(image.begin(), image.end(), [](const Int& x) { return x == 0; });
}

bool check_relation(const BinomialVector& v, const FamilyParams& params) {
  if (v.alpha.size() != params.n || v.beta.size() != params.n) {
    throw std::invalid_argument("relation vector must have length 2n");
  }
  return check_relation(v, exponent_matrix(params));
}

}  // namespace toric
