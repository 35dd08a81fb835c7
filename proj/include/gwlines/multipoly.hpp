#ifndef GWLINES_MULTIPOLY_HPP
#define GWLINES_MULTIPOLY_HPP

#include <vector>

#include "gwlines/binary_form.hpp"
#include "gwlines/field.hpp"
#include "gwlines/matrix.hpp"

namespace gwlines {

/// Sparse multivariate polynomial: (exponent vector, coefficient) pairs in
/// graded-lexicographic order, no duplicates, no stored zeros.
class MultiPoly {
public:
    struct Term {
        std::vector<int> exps;
        FieldElement coeff;
    };

    MultiPoly(const FieldDescPtr& d, int nvars);
    static MultiPoly zero(const FieldDescPtr& d, int nvars) { return MultiPoly(d, nvars); }
    static MultiPoly constant(const FieldDescPtr& d, int nvars, const FieldElement& c);
    static MultiPoly variable(const FieldDescPtr& d, int nvars, int index);
    static MultiPoly monomial(const FieldDescPtr& d, std::vector<int> exps,
                              const FieldElement& c);

    const FieldDescPtr& descriptor() const { return desc_; }
    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    int total_degree() const; // -1 for zero
    bool is_homogeneous() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const FieldElement& c) const;
    bool operator==(const MultiPoly& o) const;

    MultiPoly pow(int e) const;
    MultiPoly promote(const FieldDescPtr& target) const;

    /// Substitute variable i by the linear combination sum_j T(i, j) y_j.
    MultiPoly substitute_linear(const ExactMatrix& T) const;

    /// Substitute each variable by a binary form; all forms must share one
    /// degree e and the polynomial must be homogeneous of some degree D.
    /// The result is the binary form of degree e*D.
    BinaryForm substitute_forms(const std::vector<BinaryForm>& forms) const;

    /// The coefficient of one variable at exponent exactly 1 (all other
    /// variables beyond the first `keep` at exponent 0), read as a binary
    /// form in the first two variables.
    BinaryForm linear_coefficient(int var, int form_degree) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    FieldDescPtr desc_;
    int nvars_;
    std::vector<Term> terms_;

    void add_term(const std::vector<int>& exps, const FieldElement& c);
    void normalize();
};

/// f(Q0, Q1, Q2) for a homogeneous plane curve f in the coordinate order
/// (z, x, y): variable 0 -> Q0, variable 1 -> Q1, variable 2 -> Q2.
BinaryForm substitute_conic(const MultiPoly& curve, const BinaryForm& q0,
                            const BinaryForm& q1, const BinaryForm& q2);

/// b^2 - 4ac with polynomial coefficients (nested discriminants).
MultiPoly discriminant_quadratic(const MultiPoly& a, const MultiPoly& b,
                                 const MultiPoly& c);

} // namespace gwlines

#endif
