#ifndef GWLINES_LINE_INDEX_HPP
#define GWLINES_LINE_INDEX_HPP

#include <optional>
#include <vector>

#include "gwlines/binary_form.hpp"
#include "gwlines/gw.hpp"
#include "gwlines/matrix.hpp"
#include "gwlines/multipoly.hpp"

namespace gwlines {

/// A line on a degree 2n-1 hypersurface: F homogeneous in the n+2 variables
/// (x_0, ..., x_{n+1}), and a 2 x (n+2) span matrix whose rows span the
/// line. The common field of F and the span is k(l).
struct LineOnHypersurface {
    int n = 0;
    MultiPoly hypersurface;
    ExactMatrix span;

    LineOnHypersurface(int n_, MultiPoly f, ExactMatrix span_);
    const FieldDescPtr& field_of_line() const { return span.descriptor(); }
};

/// Output of coordinate normalization: F in coordinates [u : v : x_1 : ...]
/// with the line at V(x_1, ..., x_n), the extracted degree 2n-2 forms P_i,
/// the determinant-1 change of coordinates used, and the quadratic-part
/// remainder retained for audit.
struct NormalizedLine {
    std::vector<BinaryForm> forms;   // P_1, ..., P_n
    ExactMatrix change_of_coords;    // old coords = C * new coords
    MultiPoly quadratic_part;        // the (x_1, ..., x_n)^2 part
};

NormalizedLine normalize_line(const LineOnHypersurface& input);

/// The 2n x 2n Jacobian-block matrix: one column pair per P_i, holding the
/// coefficients of u P_i and v P_i in the basis u^{2n-1}, ..., v^{2n-1}.
ExactMatrix index_matrix(const std::vector<BinaryForm>& forms);

/// det of the index matrix; DegenerateError when the line is not simple.
FieldElement local_index_det(const LineOnHypersurface& input);

/// ind_l sigma_F = Tr_{k(l)/ground} <det A>.
GWClass local_index(const LineOnHypersurface& input, const FieldDescPtr& ground);

/// alpha = Disc_{x1,x2}(Disc_{u,v}(x1 P2 - x2 P1)) for n = 2; asserts the
/// identity 16 Res(P1, P2) = alpha internally.
FieldElement segre_alpha_n2(const BinaryForm& p1, const BinaryForm& p2);

/// One node of the plane quartic Gauss curve [P1 : P2 : P3] (n = 3).
struct NodeData {
    std::vector<FieldElement> point;  // [nu_1 : nu_2 : nu_3] over k(nu)
    BinaryForm nodal_quadratic;       // q_nu, vanishing on the two preimages
    BinaryForm residual_1, residual_2;// the degree-2 pair [Q1^nu : Q2^nu]
    FieldElement alpha;               // Res(Q1^nu, Q2^nu), nonzero for simple lines
    FieldDescPtr node_field;          // k(nu)
    FieldElement pair_discriminant;   // disc of q_nu: the parameter pair lives
                                      // over k(nu)(sqrt(disc))
    std::optional<bool> pair_split;   // whether the pair is k(nu)-rational,
                                      // when decidable

    NodeData() : nodal_quadratic(FieldDescriptor::rationals(), 2),
                 residual_1(FieldDescriptor::rationals(), 2),
                 residual_2(FieldDescriptor::rationals(), 2) {}
};

/// The nodes of the rational plane quartic parameterized by three degree-4
/// forms over Q or F_p. Galois-conjugate nodes are reported once, over
/// their field of definition; the field degrees over k(l) always sum to 3.
/// Throws DegenerateError for non-generic configurations.
std::vector<NodeData> quartic_nodes(const BinaryForm& p1, const BinaryForm& p2,
                                    const BinaryForm& p3);

/// seg(X, l) for n = 3: Tr_{k(l)/ground} < prod_nu N_{k(nu)/k(l)}(alpha_nu) >.
GWClass segre_index_n3(const BinaryForm& p1, const BinaryForm& p2,
                       const BinaryForm& p3, const FieldDescPtr& ground);

} // namespace gwlines

#endif
