#include "siltgeo/qlinalg.hpp"

#include <algorithm>
#include <sstream>

#include "siltgeo/errors.hpp"

namespace siltgeo {

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Rat rat_from_string(const std::string& s) {
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(std::size_t cols, const std::vector<RatVec>& rows) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

RatVec RatMatrix::row(std::size_t i) const {
  RatVec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void RatMatrix::set_row(std::size_t i, const RatVec& v) {
  if (v.size() != cols_) throw DimensionMismatch("set_row: width mismatch");
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& r) { return r == 0; });
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
  RatMatrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rat& b = o.at(k, j);
        if (b != 0) p.at(i, j) += a * b;
      }
    }
  return p;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape");
  RatMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] + o.data_[i];
  return s;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix diff shape");
  RatMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] - o.data_[i];
  return s;
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
  RatMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] * c;
  return s;
}

RatMatrix RatMatrix::vstack(const RatMatrix& o) const {
  if (o.rows_ == 0) {
    RatMatrix r = *this;
    return r;
  }
  if (rows_ == 0) return o;
  if (cols_ != o.cols_) throw DimensionMismatch("vstack width");
  RatMatrix r(rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

RatMatrix RatMatrix::hstack(const RatMatrix& o) const {
  if (rows_ != o.rows_) throw DimensionMismatch("hstack height");
  RatMatrix r(rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

RatVec operator*(const RatVec& v, const RatMatrix& m) {
  if (v.size() != m.rows()) throw DimensionMismatch("row-vector action shape");
  RatVec w(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) w[j] += v[i] * m.at(i, j);
  }
  return w;
}

RatVec operator+(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum");
  RatVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector diff");
  RatVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

RatVec scaled(const RatVec& v, const Rat& c) {
  RatVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] * c;
  return w;
}

bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& r) { return r == 0; });
}

std::pair<RatMatrix, std::vector<std::size_t>> rref(const RatMatrix& m) {
  RatMatrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < r.rows() && r.at(piv, col) == 0) ++piv;
    if (piv == r.rows()) continue;
    for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(lead, j), r.at(piv, j));
    Rat inv = Rat(1) / r.at(lead, col);
    for (std::size_t j = col; j < r.cols(); ++j) r.at(lead, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead || r.at(i, col) == 0) continue;
      Rat f = r.at(i, col);
      for (std::size_t j = col; j < r.cols(); ++j) r.at(i, j) -= f * r.at(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return {r, pivots};
}

std::size_t rank(const RatMatrix& m) { return rref(m).second.size(); }

bool is_invertible(const RatMatrix& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  std::size_t n = m.rows();
  auto [r, piv] = rref(m.hstack(RatMatrix::identity(n)));
  if (piv.size() != n || (n > 0 && piv.back() != n - 1))
    throw DimensionMismatch("inverse of singular matrix");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
  return inv;
}

Subspace::Subspace(std::size_t ambient_dim, const std::vector<RatVec>& spanning)
    : ambient_(ambient_dim) {
  auto [r, piv] = rref(RatMatrix::from_rows(ambient_dim, spanning));
  basis_ = RatMatrix(piv.size(), ambient_dim);
  for (std::size_t i = 0; i < piv.size(); ++i) basis_.set_row(i, r.row(i));
  pivots_ = piv;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = RatMatrix::identity(ambient_dim);
  s.pivots_.resize(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots_[i] = i;
  return s;
}

RatVec Subspace::reduce(const RatVec& v) const {
  if (v.size() != ambient_) throw AmbientMismatch("reduce: ambient mismatch");
  RatVec w = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rat& c = w[pivots_[i]];
    if (c == 0) continue;
    Rat f = c;  /* pivot entries are 1 */
    for (std::size_t j = 0; j < ambient_; ++j)
      if (basis_.at(i, j) != 0) w[j] -= f * basis_.at(i, j);
  }
  return w;
}

bool Subspace::contains(const RatVec& v) const { return siltgeo::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw AmbientMismatch("contains: ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

RatVec Subspace::coordinates(const RatVec& v) const {
  if (!contains(v)) throw DimensionMismatch("coordinates: vector not in subspace");
  RatVec c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::sum(const Subspace& other) const {
  return sum_and_intersect(*this, other).first;
}

Subspace Subspace::intersect(const Subspace& other) const {
  return sum_and_intersect(*this, other).second;
}

std::pair<Subspace, Subspace> sum_and_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw AmbientMismatch("sum_and_intersect: ambient mismatch");
  std::size_t n = a.ambient_dim();
  /* Zassenhaus: rref of [A|A ; B|0]; left half spans the sum, rows with
     zero left half carry the intersection in the right half. */
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    RatVec r = a.basis().row(i);
    RatVec v(2 * n);
    for (std::size_t j = 0; j < n; ++j) v[j] = r[j], v[n + j] = r[j];
    rows.push_back(v);
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    RatVec r = b.basis().row(i);
    RatVec v(2 * n);
    for (std::size_t j = 0; j < n; ++j) v[j] = r[j];
    rows.push_back(v);
  }
  auto [r, piv] = rref(RatMatrix::from_rows(2 * n, rows));
  std::vector<RatVec> sum_rows, int_rows;
  for (std::size_t i = 0; i < piv.size(); ++i) {
    RatVec full = r.row(i);
    RatVec left(full.begin(), full.begin() + n);
    RatVec right(full.begin() + n, full.end());
    if (is_zero(left))
      int_rows.push_back(right);
    else
      sum_rows.push_back(left);
  }
  return {Subspace(n, sum_rows), Subspace(n, int_rows)};
}

Subspace kernel(const RatMatrix& m) {
  auto [r, piv] = rref(m);
  std::vector<RatVec> basis;
  std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : piv) is_pivot[p] = true;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVec v(n);
    v[free_col] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r.at(i, free_col);
    basis.push_back(v);
  }
  return Subspace(n, basis);
}

Subspace left_kernel(const RatMatrix& m) { return kernel(m.transpose()); }

Subspace row_space(const RatMatrix& m) {
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return Subspace(m.cols(), rows);
}

Subspace column_space(const RatMatrix& m) { return row_space(m.transpose()); }

std::optional<std::pair<RatVec, Subspace>> solve(const RatMatrix& m, const RatVec& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: rhs length");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  auto [r, piv] = rref(aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;  /* inconsistent */
  RatVec x(m.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r.at(i, m.cols());
  return std::make_pair(x, kernel(m));
}

std::optional<RatVec> solve_left(const RatMatrix& m, const RatVec& b) {
  auto s = solve(m.transpose(), b);
  if (!s) return std::nullopt;
  return s->first;
}

}  // namespace siltgeo
