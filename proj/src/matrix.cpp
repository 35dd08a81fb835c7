#include "gwlines/matrix.hpp"

namespace gwlines {

ExactMatrix::ExactMatrix(const FieldDescPtr& d, int rows, int cols)
    : desc_(d), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(rows) * cols, FieldElement::zero(d));
}

ExactMatrix ExactMatrix::identity(const FieldDescPtr& d, int n) {
    ExactMatrix m(d, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(d);
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw InputError("matrix shape mismatch in product");
    if (!same_field(desc_, o.desc_)) throw InputError("matrix descriptor mismatch");
    ExactMatrix r(desc_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const FieldElement& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix r = *this;
    for (auto& e : r.data_) e = -e;
    return r;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix r(desc_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

ExactMatrix ExactMatrix::scaled(const FieldElement& c) const {
    ExactMatrix r = *this;
    for (auto& e : r.data_) e = e * c;
    return r;
}

ExactMatrix ExactMatrix::hconcat(const ExactMatrix& right) const {
    if (rows_ != right.rows_) throw InputError("hconcat row mismatch");
    ExactMatrix r(desc_, rows_, cols_ + right.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < right.cols_; ++j) r.at(i, cols_ + j) = right.at(i, j);
    }
    return r;
}

ExactMatrix ExactMatrix::vconcat(const ExactMatrix& below) const {
    if (cols_ != below.cols_) throw InputError("vconcat column mismatch");
    ExactMatrix r(desc_, rows_ + below.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < below.rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = below.at(i, j);
    return r;
}

bool ExactMatrix::is_zero() const {
    for (const auto& e : data_)
        if (!e.is_zero()) return false;
    return true;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!(data_[i] == o.data_[i])) return false;
    return true;
}

namespace {

// Fraction-free Bareiss determinant of an integer matrix.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    mpz_class prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

} // namespace

FieldElement ExactMatrix::determinant() const {
    if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
    const int n = rows_;
    if (n == 0) return FieldElement::one(desc_);
    if (desc_->is_rational()) {
        std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
        mpq_class scale(1);
        for (int i = 0; i < n; ++i) {
            mpz_class l(1);
            for (int j = 0; j < n; ++j)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), at(i, j).rat().get_den().get_mpz_t());
            for (int j = 0; j < n; ++j) {
                mpq_class v = at(i, j).rat() * l;
                m[i][j] = v.get_num();
            }
            scale *= l;
        }
        mpq_class det = mpq_class(bareiss_det(std::move(m))) / scale;
        det.canonicalize();
        return FieldElement::constant(desc_, det);
    }
    // generic field path
    std::vector<std::vector<FieldElement>> m(n, std::vector<FieldElement>(n, FieldElement::zero(desc_)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = at(i, j);
    FieldElement det = FieldElement::one(desc_);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!m[i][k].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) return FieldElement::zero(desc_);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det = det * m[k][k];
        FieldElement pinv = m[k][k].inverse();
        for (int i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            FieldElement f = m[i][k] * pinv;
            for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

ExactMatrix ExactMatrix::inverse() const {
    if (rows_ != cols_) throw InputError("inverse of a non-square matrix");
    const int n = rows_;
    ExactMatrix aug = hconcat(identity(desc_, n));
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!aug.at(i, k).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) throw DegenerateError("singular matrix has no inverse");
        if (piv != k)
            for (int j = 0; j < 2 * n; ++j) std::swap(aug.at(piv, j), aug.at(k, j));
        FieldElement pinv = aug.at(k, k).inverse();
        for (int j = 0; j < 2 * n; ++j) aug.at(k, j) = aug.at(k, j) * pinv;
        for (int i = 0; i < n; ++i) {
            if (i == k || aug.at(i, k).is_zero()) continue;
            FieldElement f = aug.at(i, k);
            for (int j = 0; j < 2 * n; ++j) aug.at(i, j) -= f * aug.at(k, j);
        }
    }
    ExactMatrix inv(desc_, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

FieldElement ExactMatrix::minor_det(int drop_row, int drop_col) const {
    ExactMatrix m(desc_, rows_ - 1, cols_ - 1);
    for (int i = 0, mi = 0; i < rows_; ++i) {
        if (i == drop_row) continue;
        for (int j = 0, mj = 0; j < cols_; ++j) {
            if (j == drop_col) continue;
            m.at(mi, mj) = at(i, j);
            ++mj;
        }
        ++mi;
    }
    return m.determinant();
}

ExactMatrix ExactMatrix::adjugate() const {
    if (rows_ != cols_) throw InputError("adjugate of a non-square matrix");
    const int n = rows_;
    if (n == 0) return *this;
    if (n == 1) {
        ExactMatrix r(desc_, 1, 1);
        r.at(0, 0) = FieldElement::one(desc_);
        return r;
    }
    FieldElement det = determinant();
    if (!det.is_zero()) return inverse().scaled(det);
    ExactMatrix adj(desc_, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            FieldElement c = minor_det(i, j);
            if ((i + j) % 2 != 0) c = -c;
            adj.at(j, i) = c;
        }
    return adj;
}

int ExactMatrix::rank() const {
    std::vector<std::vector<FieldElement>> m(rows_, std::vector<FieldElement>(cols_, FieldElement::zero(desc_)));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m[i][j] = at(i, j);
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int piv = -1;
        for (int i = rank; i < rows_; ++i)
            if (!m[i][col].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        FieldElement pinv = m[rank][col].inverse();
        for (int i = rank + 1; i < rows_; ++i) {
            if (m[i][col].is_zero()) continue;
            FieldElement f = m[i][col] * pinv;
            for (int j = col; j < cols_; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

ExactMatrix kronecker_with_identity2(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw InputError("kronecker_with_identity2 needs a square input");
    const int n = m.rows();
    ExactMatrix r(m.descriptor(), 2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            r.at(2 * i, 2 * j) = m.at(i, j);
            r.at(2 * i + 1, 2 * j + 1) = m.at(i, j);
        }
    return r;
}

} // namespace gwlines
