#ifndef BSYM_MATRIX_HPP
#define BSYM_MATRIX_HPP

#include <compare>
#include <span>
#include <vector>

#include "bsym/field.hpp"

namespace bsym {

/// Dense matrix over a Field, entries stored row-major as integer reprs.
/// Immutable by convention after construction; all operations return copies.
class FqMatrix {
  public:
    FqMatrix(const Field& f, int rows, int cols)
        : f_(&f), rows_(rows), cols_(cols), a_((size_t)rows * cols, 0) {
        if (rows < 0 || cols < 0) throw DomainError("bad matrix shape");
    }
    FqMatrix(const Field& f, int rows, int cols, std::vector<int> entries);

    static FqMatrix identity(const Field& f, int n);
    /// Rows stacked from a list of equal-length vectors.
    static FqMatrix from_rows(const Field& f, const std::vector<std::vector<int>>& rows);

    const Field& field() const { return *f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int at(int r, int c) const { return a_[(size_t)r * cols_ + c]; }
    void set(int r, int c, int v) { a_[(size_t)r * cols_ + c] = v; }
    const std::vector<int>& entries() const { return a_; }

    std::vector<int> row(int r) const;
    std::span<const int> row_span(int r) const { return {a_.data() + (size_t)r * cols_, (size_t)cols_}; }

    FqMatrix transpose() const;
    FqMatrix operator*(const FqMatrix& o) const;
    bool operator==(const FqMatrix& o) const;
    std::strong_ordering operator<=>(const FqMatrix& o) const;

  private:
    const Field* f_;
    int rows_, cols_;
    std::vector<int> a_;
};

/// row vector x matrix
std::vector<int> vec_mat(std::span<const int> v, const FqMatrix& m);

struct RrefResult {
    FqMatrix mat;                  // reduced row-echelon form, same shape
    int rank;
    std::vector<int> pivot_cols;   // strictly increasing
};

/// Plain Gaussian elimination, first nonzero pivot; exact and deterministic.
RrefResult rref(const FqMatrix& m);

/// Columns listed in `cols` (strictly increasing), as a new matrix.
FqMatrix select_columns(const FqMatrix& m, const std::vector<int>& cols);

int rank_of(const FqMatrix& m);

/// Canonical (RREF, no zero rows) basis of the right kernel of m.
FqMatrix nullspace_basis(const FqMatrix& m);

/**
 * A subspace of F_q^ambient in canonical form: the RREF basis with no zero
 * rows. Equality of subspaces is equality of canonical bases, which makes
 * Subspace usable as an ordered map key.
 */
class Subspace {
  public:
    /// Canonicalize the row space of `rows`.
    static Subspace span_of(const FqMatrix& rows);
    static Subspace zero(const Field& f, int ambient) { return Subspace(FqMatrix(f, 0, ambient)); }
    static Subspace full(const Field& f, int ambient) {
        return Subspace(FqMatrix::identity(f, ambient));
    }
    /// Trusted constructor: basis must already be canonical.
    static Subspace from_canonical(FqMatrix basis) { return Subspace(std::move(basis)); }

    const FqMatrix& basis() const { return basis_; }
    int dim() const { return basis_.rows(); }
    int ambient() const { return basis_.cols(); }
    const Field& field() const { return basis_.field(); }

    bool contains(std::span<const int> v) const;
    bool contains(const Subspace& other) const;
    Subspace orthocomplement() const { return Subspace(nullspace_basis(basis_)); }

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
    std::strong_ordering operator<=>(const Subspace& o) const { return basis_ <=> o.basis_; }

  private:
    explicit Subspace(FqMatrix basis) : basis_(std::move(basis)) {}
    FqMatrix basis_;
};

/// Right kernel of m as a canonical Subspace.
Subspace nullspace(const FqMatrix& m);

}  // namespace bsym

#endif
