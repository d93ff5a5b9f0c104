#pragma once

#include "qwb/field.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace qwb {

/// Sparse vector: (index, value) pairs sorted by index, no stored zeros.
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec sparse_unit(const Field& F, int index);
/// a + c * b.
SparseVec sparse_axpy(const Field& F, const SparseVec& a, const Scalar& c, const SparseVec& b);
SparseVec sparse_scale(const Field& F, const SparseVec& a, const Scalar& c);
SparseVec sparse_add(const Field& F, const SparseVec& a, const SparseVec& b);
SparseVec sparse_sub(const Field& F, const SparseVec& a, const SparseVec& b);
Scalar sparse_get(const Field& F, const SparseVec& a, int index);

/// Sums c_k * v_k over many sparse vectors through a dense accumulator.
class SparseAccumulator {
 public:
  SparseAccumulator(const Field& F, std::size_t dim);
  void add(int index, const Scalar& c);
  void add_scaled(const SparseVec& v, const Scalar& c);
  SparseVec take();
  void resize(std::size_t dim);

 private:
  const Field* F_;
  std::vector<Scalar> dense_;
  std::vector<char> used_;
  std::vector<int> touched_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, int rows, int cols);
  static Matrix identity(FieldPtr field, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }
  const Scalar& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  Scalar& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  FieldElement element(int i, int j) const { return {field_, at(i, j)}; }
  SparseVec row_sparse(int i) const;
  void set_row(int i, const SparseVec& v);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;
  bool is_scalar(Scalar* value = nullptr) const;
  friend bool operator==(const Matrix& a, const Matrix& b);

  int rank() const;
  FieldElement determinant() const;
  /// Throws FieldError when singular.
  Matrix inverse() const;
  /// Kronecker product.
  Matrix kron(const Matrix& o) const;
  /// Rows rendered with the field's scalar formatting.
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  FieldPtr field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

/// Row space maintained in reduced echelon form together with, for every
/// echelon row, its expression in the vectors inserted so far.
class EchelonBasis {
 public:
  EchelonBasis(FieldPtr field, int dim);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(rows_.size()); }
  /// Inserts v as generator number size(); returns false (and stores
  /// nothing) when v is already in the span.
  bool insert(const SparseVec& v);
  /// Reduces v against the span: returns the remainder and, through coeffs,
  /// the combination of inserted generators that was subtracted.
  SparseVec reduce(const SparseVec& v, SparseVec* coeffs = nullptr) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

 private:
  FieldPtr field_;
  int dim_;
  std::vector<SparseVec> rows_;     // echelon rows, leading coefficient 1
  std::vector<int> pivot_;          // pivot column of each echelon row
  std::vector<int> pivot_row_;      // column -> echelon row or -1
  std::vector<SparseVec> express_;  // echelon row in terms of generators
  int generators_ = 0;
};

/// Rank of a list of sparse vectors.
int sparse_rank(const FieldPtr& field, int dim, const std::vector<SparseVec>& vs);

/// Basis of {x : x m = 0}, as sparse vectors of length m.rows().
std::vector<SparseVec> left_kernel(const Matrix& m);

}  // namespace qwb
