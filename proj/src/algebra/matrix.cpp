#include "tgs/algebra/matrix.hpp"

#include "tgs/algebra/upoly.hpp"
#include "tgs/error.hpp"

namespace tgs {

Matrix::Matrix(FieldPtr f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, f_->zero()) {}

Matrix Matrix::identity(FieldPtr f, std::size_t n) {
  Matrix m(std::move(f), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.f_->one();
  return m;
}

Matrix Matrix::from_columns(FieldPtr f, std::size_t rows, const std::vector<Coeffs>& cols) {
  Matrix m(std::move(f), rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw InvalidArgument("matrix shape mismatch");
  const Field& F = *f_;
  Matrix r(f_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Value& a = at(i, k);
      if (F.is_zero(a)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Value& b = o.at(k, j);
        if (F.is_zero(b)) continue;
        r.at(i, j) = F.add(r.at(i, j), F.mul(a, b));
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix shape mismatch");
  Matrix r(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->add(a_[i], o.a_[i]);
  return r;
}

Matrix Matrix::scaled(const Value& c) const {
  Matrix r(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->mul(a_[i], c);
  return r;
}

Coeffs Matrix::apply(const Coeffs& v) const {
  const Field& F = *f_;
  Coeffs r(rows_, F.zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!F.is_zero(at(i, j)) && !F.is_zero(v[j])) r[i] = F.add(r[i], F.mul(at(i, j), v[j]));
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (f_ != o.f_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!f_->equal(a_[i], o.a_[i])) return false;
  return true;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  const Field& F = *m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && F.is_zero(m.at(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
    Value inv = F.inv(m.at(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = F.mul(m.at(row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || F.is_zero(m.at(i, col))) continue;
      Value c = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!F.is_zero(m.at(row, j))) m.at(i, j) = F.sub(m.at(i, j), F.mul(c, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  Matrix c = m;
  return rref(c).size();
}

std::vector<Coeffs> kernel(const Matrix& m) {
  const Field& F = *m.field();
  Matrix c = m;
  auto piv = rref(c);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<Coeffs> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_piv[free]) continue;
    Coeffs v(m.cols(), F.zero());
    v[free] = F.one();
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F.neg(c.at(r, free));
    out.push_back(std::move(v));
  }
  return out;
}

Value determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  const Field& F = *m.field();
  Matrix a = m;
  std::size_t n = m.rows();
  Value det = F.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && F.is_zero(a.at(piv, col))) ++piv;
    if (piv == n) return F.zero();
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
      det = F.neg(det);
    }
    det = F.mul(det, a.at(col, col));
    Value inv = F.inv(a.at(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (F.is_zero(a.at(i, col))) continue;
      Value c = F.mul(a.at(i, col), inv);
      for (std::size_t j = col + 1; j < n; ++j)
        if (!F.is_zero(a.at(col, j))) a.at(i, j) = F.sub(a.at(i, j), F.mul(c, a.at(col, j)));
    }
  }
  return det;
}

Value trace(const Matrix& m) {
  const Field& F = *m.field();
  Value t = F.zero();
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t = F.add(t, m.at(i, i));
  return t;
}

Coeffs charpoly(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("characteristic polynomial of a non-square matrix");
  const Field& F = *m.field();
  std::size_t n = m.rows();
  Matrix H = m;
  // Reduce to upper Hessenberg form by similarity transforms.
  for (std::size_t k = 1; k + 1 < n; ++k) {
    std::size_t i = k;
    while (i < n && F.is_zero(H.at(i, k - 1))) ++i;
    if (i == n) continue;
    if (i != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(H.at(i, j), H.at(k, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(H.at(j, i), H.at(j, k));
    }
    Value inv = F.inv(H.at(k, k - 1));
    for (std::size_t r = k + 1; r < n; ++r) {
      if (F.is_zero(H.at(r, k - 1))) continue;
      Value u = F.mul(H.at(r, k - 1), inv);
      for (std::size_t j = 0; j < n; ++j) H.at(r, j) = F.sub(H.at(r, j), F.mul(u, H.at(k, j)));
      for (std::size_t j = 0; j < n; ++j) H.at(j, k) = F.add(H.at(j, k), F.mul(u, H.at(j, r)));
    }
  }
  std::vector<Coeffs> p(n + 1);
  p[0] = upoly::constant(F, F.one());
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = upoly::mul(F, Coeffs{F.neg(H.at(k - 1, k - 1)), F.one()}, p[k - 1]);
    Value t = F.one();
    for (std::size_t i = 1; i < k; ++i) {
      t = F.mul(t, H.at(k - i, k - i - 1));
      Value c = F.mul(t, H.at(k - i - 1, k - 1));
      p[k] = upoly::sub(F, p[k], upoly::scale(F, p[k - i - 1], c));
    }
  }
  return p[n];
}

Coeffs minpoly(const Matrix& m) {
  const Field& F = *m.field();
  std::size_t n = m.rows();
  RelationFinder rf(m.field(), n * n);
  Matrix pw = Matrix::identity(m.field(), n);
  for (;;) {
    Coeffs v;
    v.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v.push_back(pw.at(i, j));
    if (auto rel = rf.add(v)) {
      upoly::trim(F, *rel);
      return *rel;
    }
    pw = pw * m;
  }
}

std::optional<Coeffs> solve(const Matrix& a, const Coeffs& b) {
  const Field& F = *a.field();
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  Coeffs x(a.cols(), F.zero());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug.at(r, a.cols());
  return x;
}

Matrix inverse(const Matrix& m) {
  std::size_t n = m.rows();
  if (n != m.cols()) throw InvalidArgument("inverse of a non-square matrix");
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = m.field()->one();
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw DivisionByZero("singular matrix");
  Matrix r(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
  return r;
}

Matrix poly_eval(const Coeffs& p, const Matrix& m) {
  Matrix r(m.field(), m.rows(), m.cols());
  Matrix id = Matrix::identity(m.field(), m.rows());
  for (std::size_t i = p.size(); i-- > 0;) r = r * m + id.scaled(p[i]);
  return r;
}

RelationFinder::RelationFinder(FieldPtr f, std::size_t dim) : f_(std::move(f)), dim_(dim) {}

std::optional<Coeffs> RelationFinder::add(const Coeffs& v0) {
  const Field& F = *f_;
  Coeffs v = v0;
  Coeffs combo(count_ + 1, F.zero());
  combo[count_] = F.one();
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Value& c = v[pivots_[k]];
    if (F.is_zero(c)) continue;
    Value cc = c;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!F.is_zero(rows_[k][j])) v[j] = F.sub(v[j], F.mul(cc, rows_[k][j]));
    for (std::size_t j = 0; j < combos_[k].size(); ++j)
      if (!F.is_zero(combos_[k][j])) combo[j] = F.sub(combo[j], F.mul(cc, combos_[k][j]));
  }
  std::size_t piv = 0;
  while (piv < dim_ && F.is_zero(v[piv])) ++piv;
  ++count_;
  if (piv == dim_) return combo;
  Value inv = F.inv(v[piv]);
  for (auto& x : v) x = F.mul(x, inv);
  for (auto& x : combo) x = F.mul(x, inv);
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  combos_.push_back(std::move(combo));
  return std::nullopt;
}

}  // namespace tgs
