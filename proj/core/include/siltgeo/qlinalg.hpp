#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "siltgeo/rational.hpp"

namespace siltgeo {

/* Dense matrix over the rationals, row major.  Rows and columns may be
   zero; all the degenerate shapes occur in practice (stalk complexes,
   zero algebras) and must round-trip through every routine. */
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(std::size_t cols, const std::vector<RatVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatVec row(std::size_t i) const;
  void set_row(std::size_t i, const RatVec& v);
  bool is_zero() const;

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix scaled(const Rat& c) const;
  bool operator==(const RatMatrix& o) const = default;

  /* rows of `this` followed by rows of `o` */
  RatMatrix vstack(const RatMatrix& o) const;
  /* columns of `this` followed by columns of `o` */
  RatMatrix hstack(const RatMatrix& o) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

RatVec operator*(const RatVec& v, const RatMatrix& m);  /* row vector action */
RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec scaled(const RatVec& v, const Rat& c);
bool is_zero(const RatVec& v);

/* Unique reduced row echelon form together with the pivot columns. */
std::pair<RatMatrix, std::vector<std::size_t>> rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);
bool is_invertible(const RatMatrix& m);
RatMatrix inverse(const RatMatrix& m);  /* throws DimensionMismatch if singular */

/* A linear subspace of Q^ambient in canonical form: the basis rows are the
   nonzero rows of a reduced row echelon form, so two subspaces are equal
   iff their representations are identical. */
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  Subspace(std::size_t ambient_dim, const std::vector<RatVec>& spanning);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /* Normal form of v modulo the subspace: subtract basis rows to clear the
     pivot coordinates.  Zero iff v lies in the subspace. */
  RatVec reduce(const RatVec& v) const;
  bool contains(const RatVec& v) const;
  bool contains(const Subspace& other) const;
  /* Coordinates of v in the basis; throws if v is not in the subspace. */
  RatVec coordinates(const RatVec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  bool operator==(const Subspace& o) const = default;

 private:
  std::size_t ambient_;
  RatMatrix basis_{0, 0};
  std::vector<std::size_t> pivots_;
};

/* (sum, intersection); Grassmann identity dim A + dim B = dim(A+B) + dim(A∩B)
   holds by construction (Zassenhaus). */
std::pair<Subspace, Subspace> sum_and_intersect(const Subspace& a, const Subspace& b);

Subspace kernel(const RatMatrix& m);       /* right null space {x : m x = 0} */
Subspace left_kernel(const RatMatrix& m);  /* {v : v m = 0} */
Subspace row_space(const RatMatrix& m);
Subspace column_space(const RatMatrix& m);

/* Solves m x = b for a column vector x.  Empty optional iff b is not in the
   column space; otherwise a particular solution plus the kernel. */
std::optional<std::pair<RatVec, Subspace>> solve(const RatMatrix& m, const RatVec& b);

/* Solves x m = b for a row vector x (the module-map orientation). */
std::optional<RatVec> solve_left(const RatMatrix& m, const RatVec& b);

}  // namespace siltgeo
