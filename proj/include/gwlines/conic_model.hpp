#ifndef GWLINES_CONIC_MODEL_HPP
#define GWLINES_CONIC_MODEL_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gwlines/binary_form.hpp"
#include "gwlines/field.hpp"
#include "gwlines/matrix.hpp"

namespace gwlines {

/// A point locus B of binom(n, 2) affine plane points together with a
/// parameterized conic [Q0 : Q1 : Q2]. Points are geometric: Galois
/// conjugates are listed explicitly over a common field. B lives in the
/// affine patch Z != 0 of coordinates [Z : X : Y], with (x, y) = (X/Z, Y/Z).
struct ConicModel {
    int n = 0;
    std::vector<std::pair<FieldElement, FieldElement>> points; // (b_x, b_y)
    std::array<BinaryForm, 3> conic; // (Q0, Q1, Q2), each of degree 2

    ConicModel(int n_, std::vector<std::pair<FieldElement, FieldElement>> pts,
               std::array<BinaryForm, 3> q);

    const FieldDescPtr& descriptor() const { return conic[0].descriptor(); }
    int locus_size() const { return static_cast<int>(points.size()); }
};

struct IdentityReport {
    FieldElement a_value;
    FieldElement det_vb;
    FieldElement r_value;
    FieldElement v_value; // (det V_B)^{2n}
    bool lhs_equals_rhs = false;
    bool zero_locus_consistent = false;
};

/// Interpolation matrix of the monomials 1, x, y, x^2, x y, y^2, ...,
/// y^{n-2} evaluated at B; square of size binom(n, 2). Its determinant
/// vanishes exactly when a curve of degree n-2 passes through all of B.
ExactMatrix vandermonde_vb(const ConicModel& m);

/// The n extra columns x^{n-1}, x^{n-2} y, ..., y^{n-1} evaluated at B.
ExactMatrix rb_matrix(const ConicModel& m);

/// Block matrix [ -adj(V_B) R_B ; det(V_B) I_n ]. Satisfies
/// [V_B | R_B] K_B = 0 identically (checked internally), and is defined
/// even when det V_B = 0.
ExactMatrix kb_matrix(const ConicModel& m);

/// Matrix of the substitution f(x, y, z) -> f(Q0, Q1, Q2) from plane curves
/// of degree n-1 to binary forms of degree 2n-2: one column per monomial
/// z^{n-1-i-j} x^i y^j in the shared column order of [V_B | R_B], one row
/// per coefficient of the target form (2n-1 rows, descending u).
ExactMatrix substitution_matrix(const std::array<BinaryForm, 3>& q, int n);

/// A(B, Q): determinant of the 2n x 2n index matrix of the n binary forms
/// read off the columns of substitution_matrix * kb_matrix.
FieldElement a_invariant(const ConicModel& m);

/// The forms P'_1, ..., P'_n themselves (columns of Q * K_B).
std::vector<BinaryForm> conic_model_forms(const ConicModel& m);

/// R(B, Q) = prod over geometric b in B of Res(Q1 - b_x Q0, Q2 - b_y Q0).
FieldElement r_invariant(const ConicModel& m);

/// Evaluates both sides of A(B, Q) = (det V_B)^{2n} R(B, Q) exactly.
IdentityReport verify_identity(const ConicModel& m);

/// The closed-form family: B = {(a_i, a_j) : i < j}, Q = (v^2, u^2, u^2).
ConicModel symmetric_family(const std::vector<FieldElement>& a);

struct ClosedFormReport {
    bool r_product_ok = false;      // R = prod (a_i - a_j)^2
    bool det_vb_nonzero = false;    // det V_B != 0
    bool coefficients_ok = false;   // p_{j,i} match the symmetric formula
    bool det_n_ok = false;          // det N = +-prod (a_i - a_j), det(N (x) I2) = det(N)^2
    bool identity_ok = false;       // A = (det V_B)^{2n} R
    std::string detail;             // first divergence, when any

    bool all_ok() const {
        return r_product_ok && det_vb_nonzero && coefficients_ok && det_n_ok && identity_ok;
    }
};

ClosedFormReport closed_form_checks(const std::vector<FieldElement>& a);

/// Deterministic random model: B with distinct points and Q with
/// coefficients drawn from [-coeff_bound, coeff_bound] (coerced into F_p
/// for prime fields), reproducible from the seed.
ConicModel random_instance(int n, long coeff_bound, std::uint64_t seed,
                           const FieldDescPtr& field);

} // namespace gwlines

#endif
