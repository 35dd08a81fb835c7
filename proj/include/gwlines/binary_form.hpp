#ifndef GWLINES_BINARY_FORM_HPP
#define GWLINES_BINARY_FORM_HPP

#include <array>
#include <vector>

#include "gwlines/field.hpp"
#include "gwlines/matrix.hpp"

namespace gwlines {

/// Homogeneous polynomial in (u, v) of a fixed declared degree. Coefficients
/// are stored in descending powers of u: coeffs[j] is the coefficient of
/// u^{d-j} v^j. The zero form (all coefficients zero) is legal; resultants
/// of forms with vanishing leading coefficients are taken at the declared
/// degree.
class BinaryForm {
public:
    BinaryForm(const FieldDescPtr& d, int degree);
    BinaryForm(const FieldDescPtr& d, int degree, std::vector<FieldElement> coeffs);
    /// Convenience: integer coefficients in descending-u order.
    static BinaryForm from_ints(const FieldDescPtr& d, int degree,
                                const std::vector<long>& coeffs);

    const FieldDescPtr& descriptor() const { return desc_; }
    int degree() const { return degree_; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }

    /// Coefficient of u^{d-j} v^j (storage order).
    const FieldElement& coeff_desc(int j) const { return coeffs_[j]; }
    /// Coefficient of u^j v^{d-j}: the single place where the stored order
    /// is translated to indexing by the exponent of u.
    const FieldElement& coeff_u(int j) const { return coeffs_[degree_ - j]; }

    bool is_zero() const;
    bool operator==(const BinaryForm& o) const;

    BinaryForm operator+(const BinaryForm& o) const;
    BinaryForm operator-(const BinaryForm& o) const;
    BinaryForm operator-() const;
    BinaryForm operator*(const BinaryForm& o) const;
    BinaryForm scaled(const FieldElement& c) const;

    FieldElement eval(const FieldElement& u0, const FieldElement& v0) const;

    /// f(a u + b v, c u + d v) for m = [[a, b], [c, d]].
    BinaryForm compose(const std::array<std::array<FieldElement, 2>, 2>& m) const;

    BinaryForm promote(const FieldDescPtr& target) const;

    /// Number of leading zero coefficients = multiplicity of v as a factor.
    int v_multiplicity() const;

    std::string str() const;

private:
    FieldDescPtr desc_;
    int degree_;
    std::vector<FieldElement> coeffs_;
};

/// Sylvester resultant at the declared degrees, with the deg(g) shifted
/// coefficient rows of f on top and the deg(f) rows of g below. This sign
/// convention is used everywhere; the main identity needs it globally
/// consistent.
FieldElement resultant(const BinaryForm& f, const BinaryForm& g);

/// b^2 - 4ac of a s^2 + b st + c t^2.
FieldElement discriminant_quadratic(const FieldElement& a, const FieldElement& b,
                                    const FieldElement& c);

/// Exact quotient f / g; throws InputError when the division leaves a
/// remainder (the claimed common factor is absent).
BinaryForm exact_div(const BinaryForm& f, const BinaryForm& g);

/// Quotient and remainder of the dehomogenizations at v = 1. Requires the
/// u-leading coefficient of g to be nonzero, so that deg_u g equals the
/// declared degree. The remainder is returned homogenized to degree
/// deg(g) - 1.
void divrem_affine(const BinaryForm& f, const BinaryForm& g, BinaryForm& quot,
                   BinaryForm& rem);

/// Monic gcd (u-leading coefficient 1 after normalization), with common
/// powers of v accounted for.
BinaryForm binary_gcd(const BinaryForm& f, const BinaryForm& g);

} // namespace gwlines

#endif
