#include "idealforge/matrix.hpp"

#include <sstream>

namespace idealforge {

DenseMatrix DenseMatrix::identity(const FieldSpec& field, std::size_t n) {
    DenseMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(field));
    return m;
}

DenseMatrix DenseMatrix::from_rows(const FieldSpec& field,
                                   const std::vector<std::vector<Scalar>>& rows) {
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    DenseMatrix m(field, rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc)
            throw Error(ErrorCode::DimensionMismatch, "ragged row list");
        for (std::size_t c = 0; c < nc; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

DenseMatrix DenseMatrix::from_ints(const FieldSpec& field,
                                   const std::vector<std::vector<long long>>& rows) {
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    DenseMatrix m(field, rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc)
            throw Error(ErrorCode::DimensionMismatch, "ragged row list");
        for (std::size_t c = 0; c < nc; ++c) m.set(r, c, Scalar::of(field, rows[r][c]));
    }
    return m;
}

const Scalar& DenseMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw Error(ErrorCode::IndexOutOfRange,
                    "(" + std::to_string(r) + "," + std::to_string(c) + ") in " +
                        std::to_string(rows_) + "x" + std::to_string(cols_));
    return entries_[r * cols_ + c];
}

void DenseMatrix::set(std::size_t r, std::size_t c, Scalar v) {
    if (r >= rows_ || c >= cols_)
        throw Error(ErrorCode::IndexOutOfRange,
                    "(" + std::to_string(r) + "," + std::to_string(c) + ") in " +
                        std::to_string(rows_) + "x" + std::to_string(cols_));
    if (v.field() != field_)
        throw Error(ErrorCode::FieldMismatch, v.field().tag() + " entry in " + field_.tag());
    entries_[r * cols_ + c] = std::move(v);
}

std::vector<Scalar> DenseMatrix::row(std::size_t r) const {
    if (r >= rows_) throw Error(ErrorCode::IndexOutOfRange, "row " + std::to_string(r));
    return std::vector<Scalar>(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                               entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<Scalar> DenseMatrix::col(std::size_t c) const {
    if (c >= cols_) throw Error(ErrorCode::IndexOutOfRange, "column " + std::to_string(c));
    std::vector<Scalar> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(entries_[r * cols_ + c]);
    return out;
}

void DenseMatrix::set_col(std::size_t c, std::span<const Scalar> v) {
    if (v.size() != rows_)
        throw Error(ErrorCode::DimensionMismatch,
                    "column of length " + std::to_string(v.size()) + " into " +
                        std::to_string(rows_) + " rows");
    for (std::size_t r = 0; r < rows_; ++r) set(r, c, v[r]);
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
    if (field_ != rhs.field_)
        throw Error(ErrorCode::FieldMismatch, field_.tag() + " vs " + rhs.field_.tag());
    if (cols_ != rhs.rows_)
        throw Error(ErrorCode::DimensionMismatch,
                    std::to_string(cols_) + " columns vs " + std::to_string(rhs.rows_) + " rows");
    DenseMatrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = entries_[i * cols_ + k];
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                Scalar s = out.at(i, j) + a * rhs.at(k, j);
                out.set(i, j, std::move(s));
            }
        }
    return out;
}

std::vector<Scalar> DenseMatrix::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_)
        throw Error(ErrorCode::DimensionMismatch,
                    "vector of length " + std::to_string(v.size()) + " vs " +
                        std::to_string(cols_) + " columns");
    std::vector<Scalar> out(rows_, Scalar::zero(field_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out[r] += entries_[r * cols_ + c] * v[c];
    return out;
}

DenseMatrix DenseMatrix::columns_block(std::size_t start, std::size_t count) const {
    if (start + count > cols_)
        throw Error(ErrorCode::IndexOutOfRange,
                    "column block [" + std::to_string(start) + ", " +
                        std::to_string(start + count) + ") of " + std::to_string(cols_));
    DenseMatrix out(field_, rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < count; ++c) out.set(r, c, at(r, start + c));
    return out;
}

DenseMatrix DenseMatrix::rows_block(std::size_t start, std::size_t count) const {
    if (start + count > rows_)
        throw Error(ErrorCode::IndexOutOfRange,
                    "row block [" + std::to_string(start) + ", " +
                        std::to_string(start + count) + ") of " + std::to_string(rows_));
    DenseMatrix out(field_, count, cols_);
    for (std::size_t r = 0; r < count; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, at(start + r, c));
    return out;
}

DenseMatrix DenseMatrix::vstack(const DenseMatrix& top, const DenseMatrix& bottom) {
    if (top.field_ != bottom.field_)
        throw Error(ErrorCode::FieldMismatch, top.field_.tag() + " vs " + bottom.field_.tag());
    if (top.cols_ != bottom.cols_)
        throw Error(ErrorCode::DimensionMismatch, "vstack with different column counts");
    DenseMatrix out(top.field_, top.rows_ + bottom.rows_, top.cols_);
    for (std::size_t r = 0; r < top.rows_; ++r)
        for (std::size_t c = 0; c < top.cols_; ++c) out.set(r, c, top.at(r, c));
    for (std::size_t r = 0; r < bottom.rows_; ++r)
        for (std::size_t c = 0; c < top.cols_; ++c) out.set(top.rows_ + r, c, bottom.at(r, c));
    return out;
}

DenseMatrix DenseMatrix::hstack(const DenseMatrix& left, const DenseMatrix& right) {
    if (left.field_ != right.field_)
        throw Error(ErrorCode::FieldMismatch, left.field_.tag() + " vs " + right.field_.tag());
    if (left.rows_ != right.rows_)
        throw Error(ErrorCode::DimensionMismatch, "hstack with different row counts");
    DenseMatrix out(left.field_, left.rows_, left.cols_ + right.cols_);
    for (std::size_t r = 0; r < left.rows_; ++r) {
        for (std::size_t c = 0; c < left.cols_; ++c) out.set(r, c, left.at(r, c));
        for (std::size_t c = 0; c < right.cols_; ++c) out.set(r, left.cols_ + c, right.at(r, c));
    }
    return out;
}

DenseMatrix DenseMatrix::with_appended_row(std::span<const Scalar> v) const {
    if (v.size() != cols_)
        throw Error(ErrorCode::DimensionMismatch,
                    "row of length " + std::to_string(v.size()) + " vs " +
                        std::to_string(cols_) + " columns");
    DenseMatrix out(field_, rows_ + 1, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, at(r, c));
    for (std::size_t c = 0; c < cols_; ++c) out.set(rows_, c, v[c]);
    return out;
}

bool DenseMatrix::is_zero() const {
    for (const Scalar& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

std::string DenseMatrix::str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << "[";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << " ";
            os << at(r, c).str();
        }
        os << "]";
        if (r + 1 < rows_) os << "\n";
    }
    return os.str();
}

std::size_t mat_rank(const DenseMatrix& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Scalar>> a;
    a.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) a.push_back(m.row(r));

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        Scalar inv = a[rank][c].inverse();
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][c].is_zero()) continue;
            Scalar factor = a[r][c] * inv;
            for (std::size_t j = c; j < cols; ++j)
                a[r][j] -= factor * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

bool mat_row_space_contains(const DenseMatrix& m, std::span<const Scalar> v) {
    if (v.size() != m.cols())
        throw Error(ErrorCode::DimensionMismatch,
                    "vector of length " + std::to_string(v.size()) + " vs " +
                        std::to_string(m.cols()) + " columns");
    for (const Scalar& x : v)
        if (x.field() != m.field())
            throw Error(ErrorCode::FieldMismatch, x.field().tag() + " vs " + m.field().tag());
    return mat_rank(m) == mat_rank(m.with_appended_row(v));
}

bool columns_independent(const DenseMatrix& m, std::size_t start, std::size_t count) {
    if (start + count > m.cols())
        throw Error(ErrorCode::IndexOutOfRange,
                    "column window [" + std::to_string(start) + ", " +
                        std::to_string(start + count) + ") of " + std::to_string(m.cols()));
    if (count == 0) return true;
    return mat_rank(m.columns_block(start, count)) == count;
}

}  // namespace idealforge
