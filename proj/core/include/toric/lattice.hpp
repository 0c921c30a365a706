#pragma once

// Integer linear algebra: column Hermite normal form and integer kernels.

#include "toric/exactmath.hpp"
#include "toric/polyring.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace toric {

struct FamilyParams;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static IntMatrix from_columns(std::size_t rows, std::span<const std::vector<Int>> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<Int> column(std::size_t c) const;

  IntMatrix operator*(const IntMatrix& other) const;
  std::vector<Int> operator*(std::span<const Int> v) const;
  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Exact determinant (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& m);

struct HnfResult {
  IntMatrix h;  // column Hermite normal form, h == m * u
  IntMatrix u;  // unimodular
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;  // pivot_rows[k] is the pivot row of column k < rank
};

/// Column-style Hermite normal form. Pivots are positive; entries left of a
/// pivot are reduced into [0, pivot); columns rank..cols-1 of h are zero.
HnfResult hnf(const IntMatrix& m);

struct LatticeBasis {
  std::vector<std::vector<Int>> vectors;

  std::size_t size() const { return vectors.size(); }
  bool empty() const { return vectors.empty(); }
};

/// Z-basis of {v : m * v == 0}; its size is cols - rank(m).
LatticeBasis kernel_basis(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Integer coordinates c with sum c_k * basis_k == v, or nullopt if v is not
/// in the lattice spanned by `basis`.
std::optional<std::vector<Int>> lattice_coordinates(const LatticeBasis& basis, std::span<const Int> v);

/// m * v == 0 for the concatenated vector (alpha, beta).
bool check_relation(const BinomialVector& v, const IntMatrix& m);
/// Same, against the exponent matrix of a family. Throws std::invalid_argument
/// when v does not have length 2n.
bool check_relation(const BinomialVector& v, const FamilyParams& params);

}  // namespace toric
