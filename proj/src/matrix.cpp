#include "bsym/matrix.hpp"

#include <algorithm>

namespace bsym {

FqMatrix::FqMatrix(const Field& f, int rows, int cols, std::vector<int> entries)
    : f_(&f), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (rows < 0 || cols < 0 || a_.size() != (size_t)rows * cols)
        throw DomainError("bad matrix shape");
    for (int v : a_)
        if (v < 0 || v >= f.q()) throw DomainError("entry out of field range");
}

FqMatrix FqMatrix::identity(const Field& f, int n) {
    FqMatrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FqMatrix FqMatrix::from_rows(const Field& f, const std::vector<std::vector<int>>& rows) {
    int cols = rows.empty() ? 0 : (int)rows[0].size();
    FqMatrix m(f, (int)rows.size(), cols);
    for (int i = 0; i < (int)rows.size(); ++i) {
        if ((int)rows[i].size() != cols) throw DomainError("ragged rows");
        for (int j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

std::vector<int> FqMatrix::row(int r) const {
    return std::vector<int>(a_.begin() + (size_t)r * cols_, a_.begin() + (size_t)(r + 1) * cols_);
}

FqMatrix FqMatrix::transpose() const {
    FqMatrix t(*f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
    if (f_ != o.f_) throw DomainError("field mismatch");
    if (cols_ != o.rows_) throw DomainError("shape mismatch in product");
    FqMatrix r(*f_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int l = 0; l < cols_; ++l) {
            int v = at(i, l);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.set(i, j, f_->add(r.at(i, j), f_->mul(v, o.at(l, j))));
        }
    return r;
}

bool FqMatrix::operator==(const FqMatrix& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::strong_ordering FqMatrix::operator<=>(const FqMatrix& o) const {
    if (auto c = rows_ <=> o.rows_; c != 0) return c;
    if (auto c = cols_ <=> o.cols_; c != 0) return c;
    return a_ <=> o.a_;
}

std::vector<int> vec_mat(std::span<const int> v, const FqMatrix& m) {
    if ((int)v.size() != m.rows()) throw DomainError("shape mismatch in product");
    const Field& f = m.field();
    std::vector<int> out(m.cols(), 0);
    for (int i = 0; i < m.rows(); ++i) {
        int c = v[i];
        if (c == 0) continue;
        for (int j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(c, m.at(i, j)));
    }
    return out;
}

RrefResult rref(const FqMatrix& m) {
    const Field& f = m.field();
    FqMatrix r = m;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < r.cols() && row < r.rows(); ++col) {
        int pr = -1;
        for (int i = row; i < r.rows(); ++i)
            if (r.at(i, col) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < r.cols(); ++j) {
                int t = r.at(row, j);
                r.set(row, j, r.at(pr, j));
                r.set(pr, j, t);
            }
        int s = f.inv(r.at(row, col));
        if (s != 1)
            for (int j = col; j < r.cols(); ++j) r.set(row, j, f.mul(s, r.at(row, j)));
        for (int i = 0; i < r.rows(); ++i) {
            if (i == row) continue;
            int c = r.at(i, col);
            if (c == 0) continue;
            for (int j = col; j < r.cols(); ++j)
                r.set(i, j, f.sub(r.at(i, j), f.mul(c, r.at(row, j))));
        }
        pivots.push_back(col);
        ++row;
    }
    return RrefResult{std::move(r), (int)pivots.size(), std::move(pivots)};
}

FqMatrix select_columns(const FqMatrix& m, const std::vector<int>& cols) {
    for (size_t i = 0; i < cols.size(); ++i) {
        if (cols[i] < 0 || cols[i] >= m.cols()) throw DomainError("column index out of range");
        if (i > 0 && cols[i] <= cols[i - 1]) throw DomainError("column set not increasing");
    }
    FqMatrix r(m.field(), m.rows(), (int)cols.size());
    for (int i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) r.set(i, (int)j, m.at(i, cols[j]));
    return r;
}

int rank_of(const FqMatrix& m) { return rref(m).rank; }

FqMatrix nullspace_basis(const FqMatrix& m) {
    const Field& f = m.field();
    RrefResult rr = rref(m);
    std::vector<char> is_pivot(m.cols(), 0);
    for (int c : rr.pivot_cols) is_pivot[c] = 1;
    std::vector<std::vector<int>> basis;
    for (int fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<int> v(m.cols(), 0);
        v[fc] = 1;
        for (int i = 0; i < rr.rank; ++i) v[rr.pivot_cols[i]] = f.neg(rr.mat.at(i, fc));
        basis.push_back(std::move(v));
    }
    // re-reduce so the basis is canonical
    RrefResult canon = rref(FqMatrix::from_rows(f, basis));
    FqMatrix out(f, canon.rank, m.cols());
    for (int i = 0; i < canon.rank; ++i)
        for (int j = 0; j < m.cols(); ++j) out.set(i, j, canon.mat.at(i, j));
    return out;
}

Subspace Subspace::span_of(const FqMatrix& rows) {
    RrefResult rr = rref(rows);
    FqMatrix basis(rows.field(), rr.rank, rows.cols());
    for (int i = 0; i < rr.rank; ++i)
        for (int j = 0; j < rows.cols(); ++j) basis.set(i, j, rr.mat.at(i, j));
    return Subspace(std::move(basis));
}

bool Subspace::contains(std::span<const int> v) const {
    if ((int)v.size() != ambient()) throw DomainError("vector length mismatch");
    const Field& f = field();
    std::vector<int> w(v.begin(), v.end());
    int row = 0;
    for (int col = 0; col < ambient() && row < dim(); ++col) {
        if (basis_.at(row, col) == 0) continue;  // not this row's pivot
        // rows are RREF: pivot of row `row` is the first nonzero column
        int lead = col;
        if (w[lead] != 0) {
            int c = w[lead];
            for (int j = lead; j < ambient(); ++j) w[j] = f.sub(w[j], f.mul(c, basis_.at(row, j)));
        }
        ++row;
    }
    for (int x : w)
        if (x != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.dim() > dim()) return false;
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row_span(i))) return false;
    return true;
}

Subspace nullspace(const FqMatrix& m) {
    return Subspace::from_canonical(nullspace_basis(m));
}

}  // namespace bsym
