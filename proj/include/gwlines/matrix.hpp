#ifndef GWLINES_MATRIX_HPP
#define GWLINES_MATRIX_HPP

#include <vector>

#include "gwlines/field.hpp"

namespace gwlines {

/// Dense matrix of FieldElements sharing one descriptor, row-major.
class ExactMatrix {
public:
    ExactMatrix(const FieldDescPtr& d, int rows, int cols);
    static ExactMatrix identity(const FieldDescPtr& d, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldDescPtr& descriptor() const { return desc_; }

    FieldElement& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const FieldElement& at(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator-() const;
    ExactMatrix transpose() const;
    ExactMatrix scaled(const FieldElement& c) const;
    ExactMatrix hconcat(const ExactMatrix& right) const;
    ExactMatrix vconcat(const ExactMatrix& below) const;

    bool is_zero() const;
    bool operator==(const ExactMatrix& o) const;

    /// Exact determinant. Over Q: denominators cleared row by row, then
    /// fraction-free Bareiss elimination on integers, scale restored.
    /// Other fields: Gaussian elimination with exact division.
    FieldElement determinant() const;

    /// Gauss-Jordan inverse; throws DegenerateError when singular.
    ExactMatrix inverse() const;

    /// Classical adjugate: det * inverse when nonsingular, cofactor
    /// expansion otherwise (the adjugate is defined for singular matrices).
    ExactMatrix adjugate() const;

    int rank() const;

private:
    FieldDescPtr desc_;
    int rows_, cols_;
    std::vector<FieldElement> data_;

    FieldElement minor_det(int drop_row, int drop_col) const;
};

/// Kronecker product M (x) I_2: the interleaved 2n x 2n layout with
/// det(M (x) I_2) = det(M)^2.
ExactMatrix kronecker_with_identity2(const ExactMatrix& m);

} // namespace gwlines

#endif
