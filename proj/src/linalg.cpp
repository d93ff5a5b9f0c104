#include "qwb/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qwb {

SparseVec sparse_unit(const Field& F, int index) { return {{index, F.one()}}; }

SparseVec sparse_axpy(const Field& F, const SparseVec& a, const Scalar& c, const SparseVec& b) {
  if (F.is_zero(c) || b.empty()) return a;
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, F.mul(c, b[j].second));
      ++j;
    } else {
      Scalar v = F.fma(a[i].second, c, b[j].second);
      if (!F.is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec sparse_scale(const Field& F, const SparseVec& a, const Scalar& c) {
  if (F.is_zero(c)) return {};
  if (F.is_one(c)) return a;
  SparseVec out;
  out.reserve(a.size());
  for (const auto& [k, v] : a) out.emplace_back(k, F.mul(v, c));
  return out;
}

SparseVec sparse_add(const Field& F, const SparseVec& a, const SparseVec& b) { return sparse_axpy(F, a, F.one(), b); }

SparseVec sparse_sub(const Field& F, const SparseVec& a, const SparseVec& b) {
  return sparse_axpy(F, a, F.from_int(-1), b);
}

Scalar sparse_get(const Field& F, const SparseVec& a, int index) {
  auto it = std::lower_bound(a.begin(), a.end(), index, [](const auto& e, int k) { return e.first < k; });
  if (it != a.end() && it->first == index) return it->second;
  return F.zero();
}

// ------------------------------------------------------- SparseAccumulator

SparseAccumulator::SparseAccumulator(const Field& F, std::size_t dim) : F_(&F), dense_(dim, F.zero()), used_(dim, 0) {}

void SparseAccumulator::resize(std::size_t dim) {
  if (dim > dense_.size()) {
    dense_.resize(dim, F_->zero());
    used_.resize(dim, 0);
  }
}

void SparseAccumulator::add(int index, const Scalar& c) {
  if (static_cast<std::size_t>(index) >= dense_.size()) resize(static_cast<std::size_t>(index) * 2 + 1);
  if (!used_[index]) {
    used_[index] = 1;
    touched_.push_back(index);
    dense_[index] = c;
  } else {
    dense_[index] = F_->add(dense_[index], c);
  }
}

void SparseAccumulator::add_scaled(const SparseVec& v, const Scalar& c) {
  if (F_->is_zero(c)) return;
  const bool unit = F_->is_one(c);
  for (const auto& [k, x] : v) add(k, unit ? x : F_->mul(x, c));
}

SparseVec SparseAccumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  SparseVec out;
  out.reserve(touched_.size());
  for (int k : touched_) {
    if (!F_->is_zero(dense_[k])) out.emplace_back(k, std::move(dense_[k]));
    dense_[k] = F_->zero();
    used_[k] = 0;
  }
  touched_.clear();
  return out;
}

// ------------------------------------------------------------------ Matrix

Matrix::Matrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, field_->zero()) {}

Matrix Matrix::identity(FieldPtr field, int n) {
  Matrix m(field, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = field->one();
  return m;
}

SparseVec Matrix::row_sparse(int i) const {
  SparseVec out;
  for (int j = 0; j < cols_; ++j)
    if (!field_->is_zero(at(i, j))) out.emplace_back(j, at(i, j));
  return out;
}

void Matrix::set_row(int i, const SparseVec& v) {
  for (int j = 0; j < cols_; ++j) at(i, j) = field_->zero();
  for (const auto& [k, x] : v) at(i, k) = x;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  const Field& F = *field_;
  Matrix out(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (F.is_zero(a)) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (!F.is_zero(o.at(k, j))) out.at(i, j) = F.fma(out.at(i, j), a, o.at(k, j));
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_->add(data_[k], o.data_[k]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_->sub(data_[k], o.data_[k]);
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out = *this;
  for (auto& x : out.data_) x = field_->mul(x, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!field_->is_zero(x)) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i == j ? !field_->is_one(at(i, j)) : !field_->is_zero(at(i, j))) return false;
  return true;
}

bool Matrix::is_scalar(Scalar* value) const {
  if (rows_ != cols_) return false;
  Scalar d = rows_ ? at(0, 0) : field_->zero();
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i == j ? !field_->equal(at(i, j), d) : !field_->is_zero(at(i, j))) return false;
  if (value) *value = d;
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

int Matrix::rank() const {
  std::vector<SparseVec> rows;
  for (int i = 0; i < rows_; ++i) rows.push_back(row_sparse(i));
  return sparse_rank(field_, cols_, rows);
}

FieldElement Matrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  const Field& F = *field_;
  Matrix a = *this;
  Scalar det = F.one();
  for (int c = 0; c < rows_; ++c) {
    int piv = -1;
    for (int r = c; r < rows_; ++r)
      if (!F.is_zero(a.at(r, c))) {
        piv = r;
        break;
      }
    if (piv < 0) return {field_, F.zero()};
    if (piv != c) {
      for (int j = 0; j < cols_; ++j) std::swap(a.at(piv, j), a.at(c, j));
      det = F.neg(det);
    }
    det = F.mul(det, a.at(c, c));
    Scalar inv = F.inv(a.at(c, c));
    for (int r = c + 1; r < rows_; ++r) {
      if (F.is_zero(a.at(r, c))) continue;
      Scalar m = F.neg(F.mul(a.at(r, c), inv));
      for (int j = c; j < cols_; ++j) a.at(r, j) = F.fma(a.at(r, j), m, a.at(c, j));
    }
  }
  return {field_, det};
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  const Field& F = *field_;
  const int n = rows_;
  Matrix a = *this;
  Matrix inv = identity(field_, n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!F.is_zero(a.at(r, c))) {
        piv = r;
        break;
      }
    if (piv < 0) throw FieldError("matrix is singular");
    for (int j = 0; j < n; ++j) {
      std::swap(a.at(piv, j), a.at(c, j));
      std::swap(inv.at(piv, j), inv.at(c, j));
    }
    Scalar p = F.inv(a.at(c, c));
    for (int j = 0; j < n; ++j) {
      a.at(c, j) = F.mul(a.at(c, j), p);
      inv.at(c, j) = F.mul(inv.at(c, j), p);
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || F.is_zero(a.at(r, c))) continue;
      Scalar m = F.neg(a.at(r, c));
      for (int j = 0; j < n; ++j) {
        a.at(r, j) = F.fma(a.at(r, j), m, a.at(c, j));
        inv.at(r, j) = F.fma(inv.at(r, j), m, inv.at(c, j));
      }
    }
  }
  return inv;
}

Matrix Matrix::kron(const Matrix& o) const {
  Matrix out(field_, rows_ * o.rows_, cols_ * o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      for (int k = 0; k < o.rows_; ++k)
        for (int l = 0; l < o.cols_; ++l) out.at(i * o.rows_ + k, j * o.cols_ + l) = field_->mul(at(i, j), o.at(k, l));
  return out;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i].push_back(field_->format(at(i, j)));
  return out;
}

// ------------------------------------------------------------ EchelonBasis

EchelonBasis::EchelonBasis(FieldPtr field, int dim) : field_(std::move(field)), dim_(dim), pivot_row_(dim, -1) {}

SparseVec EchelonBasis::reduce(const SparseVec& v, SparseVec* coeffs) const {
  const Field& F = *field_;
  std::vector<Scalar> dense(dim_, F.zero());
  for (const auto& [k, x] : v) dense[k] = x;
  SparseAccumulator acc(F, generators_ + 1);
  for (int j = 0; j < dim_; ++j) {
    if (F.is_zero(dense[j]) || pivot_row_[j] < 0) continue;
    const int r = pivot_row_[j];
    Scalar c = dense[j];
    Scalar m = F.neg(c);
    for (const auto& [k, x] : rows_[r]) dense[k] = F.fma(dense[k], m, x);
    if (coeffs) acc.add_scaled(express_[r], c);
  }
  if (coeffs) *coeffs = acc.take();
  SparseVec out;
  for (int j = 0; j < dim_; ++j)
    if (!F.is_zero(dense[j])) out.emplace_back(j, std::move(dense[j]));
  return out;
}

bool EchelonBasis::insert(const SparseVec& v) {
  const Field& F = *field_;
  SparseVec coeffs;
  SparseVec rem = reduce(v, &coeffs);
  if (rem.empty()) return false;
  Scalar lead_inv = F.inv(rem.front().second);
  // rem = v - sum coeffs[g] gen_g, so rem / lead expresses in generators as below.
  SparseVec expr = sparse_axpy(F, sparse_unit(F, generators_), F.from_int(-1), coeffs);
  pivot_row_[rem.front().first] = static_cast<int>(rows_.size());
  pivot_.push_back(rem.front().first);
  rows_.push_back(sparse_scale(F, rem, lead_inv));
  express_.push_back(sparse_scale(F, expr, lead_inv));
  ++generators_;
  return true;
}

int sparse_rank(const FieldPtr& field, int dim, const std::vector<SparseVec>& vs) {
  const Field& F = *field;
  std::vector<SparseVec> rows;
  std::vector<int> pivot_row(dim, -1);
  int rank = 0;
  for (const auto& v : vs) {
    std::vector<Scalar> dense(dim, F.zero());
    for (const auto& [k, x] : v) dense[k] = x;
    int lead = -1;
    for (int j = 0; j < dim; ++j) {
      if (F.is_zero(dense[j])) continue;
      if (pivot_row[j] < 0) {
        if (lead < 0) lead = j;
        continue;
      }
      if (lead >= 0) continue;
      Scalar m = F.neg(dense[j]);
      for (const auto& [k, x] : rows[pivot_row[j]]) dense[k] = F.fma(dense[k], m, x);
    }
    // Columns past the first free one stay unreduced; echelon form only needs
    // everything before the new pivot cleared.
    if (lead < 0) continue;
    SparseVec row;
    Scalar inv = F.inv(dense[lead]);
    for (int j = lead; j < dim; ++j)
      if (!F.is_zero(dense[j])) row.emplace_back(j, F.mul(dense[j], inv));
    pivot_row[lead] = static_cast<int>(rows.size());
    rows.push_back(std::move(row));
    ++rank;
  }
  return rank;
}

std::vector<SparseVec> left_kernel(const Matrix& m) {
  const Field& F = *m.field();
  EchelonBasis ech(m.field(), m.cols());
  std::vector<int> row_of;  // generator number -> row of m
  std::vector<SparseVec> out;
  for (int i = 0; i < m.rows(); ++i) {
    const SparseVec row = m.row_sparse(i);
    SparseVec coeffs;
    if (ech.reduce(row, &coeffs).empty()) {
      SparseVec x{{i, F.one()}};
      for (const auto& [g, c] : coeffs) x.emplace_back(row_of[g], F.neg(c));
      std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      out.push_back(std::move(x));
    } else {
      ech.insert(row);
      row_of.push_back(i);
    }
  }
  return out;
}

}  // namespace qwb
