#ifndef IDEALFORGE_MATRIX_HPP
#define IDEALFORGE_MATRIX_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "idealforge/field.hpp"

namespace idealforge {

/// Exact dense matrix, row-major, every entry in the matrix's field.
class DenseMatrix {
public:
    DenseMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols),
          entries_(rows * cols, Scalar::zero(field)) {}

    static DenseMatrix identity(const FieldSpec& field, std::size_t n);
    static DenseMatrix from_rows(const FieldSpec& field,
                                 const std::vector<std::vector<Scalar>>& rows);
    static DenseMatrix from_ints(const FieldSpec& field,
                                 const std::vector<std::vector<long long>>& rows);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Scalar& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, Scalar v);

    std::vector<Scalar> row(std::size_t r) const;
    std::vector<Scalar> col(std::size_t c) const;
    void set_col(std::size_t c, std::span<const Scalar> v);

    DenseMatrix transpose() const;
    DenseMatrix operator*(const DenseMatrix& rhs) const;
    /// Matrix-vector product M*v.
    std::vector<Scalar> apply(std::span<const Scalar> v) const;

    DenseMatrix columns_block(std::size_t start, std::size_t count) const;
    DenseMatrix rows_block(std::size_t start, std::size_t count) const;
    static DenseMatrix vstack(const DenseMatrix& top, const DenseMatrix& bottom);
    static DenseMatrix hstack(const DenseMatrix& left, const DenseMatrix& right);
    DenseMatrix with_appended_row(std::span<const Scalar> v) const;

    bool is_zero() const;

    bool operator==(const DenseMatrix& rhs) const {
        return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ &&
               entries_ == rhs.entries_;
    }
    bool operator!=(const DenseMatrix& rhs) const { return !(*this == rhs); }

    std::string str() const;

private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> entries_;
};

/// Rank by exact Gaussian elimination, pivoting on the first nonzero entry
/// scanning top to bottom. Deterministic; exactness makes pivot magnitude
/// irrelevant.
std::size_t mat_rank(const DenseMatrix& m);

/// True iff v lies in the row space of m, decided by comparing rank(m)
/// with rank(m extended by v).
bool mat_row_space_contains(const DenseMatrix& m, std::span<const Scalar> v);

/// True iff the column block [start, start+count) has rank count. The empty
/// block is independent.
bool columns_independent(const DenseMatrix& m, std::size_t start, std::size_t count);

}  // namespace idealforge

#endif  // IDEALFORGE_MATRIX_HPP
