#include "gwlines/line_index.hpp"

#include <algorithm>
#include <array>

#include "gwlines/upoly.hpp"

namespace gwlines {

LineOnHypersurface::LineOnHypersurface(int n_, MultiPoly f, ExactMatrix span_)
    : n(n_), hypersurface(std::move(f)), span(std::move(span_)) {
    if (n < 2) throw InputError("lines on hypersurfaces need n >= 2");
    if (hypersurface.nvars() != n + 2)
        throw InputError("hypersurface must live in n + 2 variables");
    if (!hypersurface.is_homogeneous() || hypersurface.total_degree() != 2 * n - 1)
        throw InputError("hypersurface must be homogeneous of degree 2n - 1");
    if (span.rows() != 2 || span.cols() != n + 2)
        throw InputError("span must be a 2 x (n+2) matrix");
    if (!same_field(span.descriptor(), hypersurface.descriptor()))
        throw InputError("span and hypersurface over different fields");
}

NormalizedLine normalize_line(const LineOnHypersurface& input) {
    const int n = input.n;
    const int nv = n + 2;
    const FieldDescPtr& k = input.field_of_line();
    if (input.span.rank() != 2) throw InputError("span has rank < 2");

    // F restricted to the parameterized line must vanish identically
    std::vector<BinaryForm> param;
    for (int i = 0; i < nv; ++i)
        param.emplace_back(k, 1, std::vector<FieldElement>{input.span.at(0, i),
                                                           input.span.at(1, i)});
    if (!input.hypersurface.substitute_forms(param).is_zero())
        throw InputError("line not on hypersurface");

    // pivot columns of the span via row echelon
    ExactMatrix re = input.span;
    int pivots[2] = {-1, -1};
    {
        int row = 0;
        for (int col = 0; col < nv && row < 2; ++col) {
            int piv = -1;
            for (int i = row; i < 2; ++i)
                if (!re.at(i, col).is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            if (piv != row)
                for (int j = 0; j < nv; ++j) std::swap(re.at(piv, j), re.at(row, j));
            FieldElement inv = re.at(row, col).inverse();
            for (int i = 0; i < 2; ++i) {
                if (i == row || re.at(i, col).is_zero()) continue;
                FieldElement f = re.at(i, col) * inv;
                for (int j = 0; j < nv; ++j) re.at(i, j) -= f * re.at(row, j);
            }
            pivots[row++] = col;
        }
    }

    // old coordinates = C * (u, v, x_1, ..., x_n): spans first, then the
    // complementary standard basis vectors, one scaled for det C = 1
    ExactMatrix c(k, nv, nv);
    for (int i = 0; i < nv; ++i) {
        c.at(i, 0) = input.span.at(0, i);
        c.at(i, 1) = input.span.at(1, i);
    }
    int col = 2;
    for (int j = 0; j < nv; ++j) {
        if (j == pivots[0] || j == pivots[1]) continue;
        c.at(j, col++) = FieldElement::one(k);
    }
    FieldElement det = c.determinant();
    if (det.is_zero()) throw Error("internal: coordinate completion is singular");
    FieldElement dinv = det.inverse();
    for (int i = 0; i < nv; ++i) c.at(i, 2) = c.at(i, 2) * dinv;

    MultiPoly transformed = input.hypersurface.substitute_linear(c);

    NormalizedLine out{{}, c, MultiPoly::zero(k, nv)};
    MultiPoly linear_part = MultiPoly::zero(k, nv);
    for (int i = 0; i < n; ++i) {
        BinaryForm p = transformed.linear_coefficient(2 + i, 2 * n - 2);
        for (int j = 0; j <= p.degree(); ++j) {
            if (p.coeff_desc(j).is_zero()) continue;
            std::vector<int> e(nv, 0);
            e[0] = p.degree() - j;
            e[1] = j;
            e[2 + i] = 1;
            linear_part = linear_part + MultiPoly::monomial(k, e, p.coeff_desc(j));
        }
        out.forms.push_back(std::move(p));
    }
    out.quadratic_part = transformed - linear_part;
    for (const auto& t : out.quadratic_part.terms()) {
        int xdeg = 0;
        for (int i = 2; i < nv; ++i) xdeg += t.exps[i];
        if (xdeg < 2)
            throw Error("internal: residual part escapes (x_1, ..., x_n)^2");
    }
    return out;
}

ExactMatrix index_matrix(const std::vector<BinaryForm>& forms) {
    const int n = static_cast<int>(forms.size());
    if (n < 1) throw InputError("index matrix of an empty family");
    const FieldDescPtr& k = forms[0].descriptor();
    for (const auto& f : forms) {
        if (f.degree() != 2 * n - 2)
            throw InputError("index matrix needs forms of degree 2n - 2");
        if (!same_field(f.descriptor(), k)) throw InputError("forms over mixed fields");
    }
    ExactMatrix a(k, 2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int r = 0; r <= 2 * n - 2; ++r) {
            a.at(r, 2 * i) = forms[i].coeff_desc(r);         // u P_i
            a.at(r + 1, 2 * i + 1) = forms[i].coeff_desc(r); // v P_i
        }
    return a;
}

FieldElement local_index_det(const LineOnHypersurface& input) {
    NormalizedLine norm = normalize_line(input);
    FieldElement det = index_matrix(norm.forms).determinant();
    if (det.is_zero())
        throw DegenerateError("non-simple line: index matrix is singular");
    return det;
}

GWClass local_index(const LineOnHypersurface& input, const FieldDescPtr& ground) {
    return trace_form(local_index_det(input), ground);
}

FieldElement segre_alpha_n2(const BinaryForm& p1, const BinaryForm& p2) {
    if (p1.degree() != 2 || p2.degree() != 2)
        throw InputError("segre_alpha_n2 expects quadratics");
    const FieldDescPtr& k = p1.descriptor();
    FieldElement res = resultant(p1, p2);
    if (res.is_zero()) throw DegenerateError("degenerate line: Res(P1, P2) = 0");
    // x1 P2 - x2 P1 as a quadratic in (u, v) with coefficients linear in
    // (x1, x2); its (u, v)-discriminant is a quadratic in (x1, x2)
    MultiPoly x1 = MultiPoly::variable(k, 2, 0), x2 = MultiPoly::variable(k, 2, 1);
    auto lincoef = [&](int j) {
        return x1.scaled(p2.coeff_desc(j)) - x2.scaled(p1.coeff_desc(j));
    };
    MultiPoly disc_uv = discriminant_quadratic(lincoef(0), lincoef(1), lincoef(2));
    FieldElement a = FieldElement::zero(k), b = a, c = a;
    for (const auto& t : disc_uv.terms()) {
        if (t.exps[0] == 2) a = t.coeff;
        else if (t.exps[0] == 1 && t.exps[1] == 1) b = t.coeff;
        else if (t.exps[1] == 2) c = t.coeff;
        else throw Error("internal: inner discriminant is not a quadratic form");
    }
    FieldElement alpha = discriminant_quadratic(a, b, c);
    if (!(alpha == FieldElement::integer(k, 16) * res))
        throw Error("internal: 16 Res(P1, P2) != nested discriminant");
    return alpha;
}

// --- quartic nodes (n = 3) --------------------------------------------------

namespace {

struct RetryShear {}; // projection-dependent failure; try the next shear

const long kShears[][2][2] = {
    {{1, 0}, {0, 1}}, {{1, 1}, {0, 1}},  {{1, -1}, {0, 1}}, {{0, 1}, {1, 0}},
    {{1, 0}, {1, 1}}, {{1, 2}, {0, 1}},  {{2, 1}, {1, 1}},  {{1, 1}, {1, 2}},
    {{1, -2}, {0, 1}}, {{3, 1}, {1, 0}}, {{1, 3}, {1, 2}},  {{2, -1}, {1, 1}},
};

std::array<std::array<FieldElement, 2>, 2> shear_matrix(const FieldDescPtr& k, int idx) {
    std::array<std::array<FieldElement, 2>, 2> m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            m[i][j] = FieldElement::integer(k, kShears[idx][i][j]);
    return m;
}

std::array<std::array<FieldElement, 2>, 2> shear_inverse(const FieldDescPtr& k, int idx) {
    FieldElement a = FieldElement::integer(k, kShears[idx][0][0]);
    FieldElement b = FieldElement::integer(k, kShears[idx][0][1]);
    FieldElement c = FieldElement::integer(k, kShears[idx][1][0]);
    FieldElement d = FieldElement::integer(k, kShears[idx][1][1]);
    FieldElement det = a * d - b * c;
    FieldElement inv = det.inverse();
    return {{{d * inv, -b * inv}, {-c * inv, a * inv}}};
}

// Ternary cubic in the pair coordinates (A, B, C) of Sym^2 P^1, where the
// unordered parameter pair {s, t} has A = s_u t_u, B = s_u t_v + s_v t_u,
// C = s_v t_v; the pair is the root set of C u^2 - B uv + A v^2.
struct TernaryCubic {
    // coefficient per monomial A^al B^be C^ga, al+be+ga = 3, listed in the
    // fixed order of cubic_monomials()
    std::vector<FieldElement> c;
};

const std::vector<std::array<int, 3>>& cubic_monomials() {
    static const std::vector<std::array<int, 3>> mons = [] {
        std::vector<std::array<int, 3>> m;
        for (int al = 3; al >= 0; --al)
            for (int be = 3 - al; be >= 0; --be) m.push_back({al, be, 3 - al - be});
        return m;
    }();
    return mons;
}

const std::vector<std::pair<int, int>>& sym_pairs() {
    static const std::vector<std::pair<int, int>> pairs = [] {
        std::vector<std::pair<int, int>> p;
        for (int k = 0; k <= 3; ++k)
            for (int l = k; l <= 3; ++l) p.emplace_back(k, l);
        return p;
    }();
    return pairs;
}

// The divided difference C_ij(s, t) = (P_i(s) P_j(t) - P_j(s) P_i(t)) / (s - t)
// as a symmetric (3,3)-biform, then rewritten as a cubic in (A, B, C).
TernaryCubic divided_difference_cubic(const BinaryForm& pi, const BinaryForm& pj,
                                      const ExactMatrix& reduction_inverse) {
    const FieldDescPtr& k = pi.descriptor();
    FieldElement zero = FieldElement::zero(k);
    // b[k][l] with k, l the v-exponents in s and t
    FieldElement b[5][5], c[4][4];
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y)
            b[x][y] = pi.coeff_desc(x) * pj.coeff_desc(y) - pj.coeff_desc(x) * pi.coeff_desc(y);
    // b_{k,l} = c_{k,l-1} - c_{k-1,l} with out-of-range c = 0
    for (int x = 0; x < 4; ++x)
        for (int y = 1; y <= 4; ++y) {
            FieldElement carry = (x >= 1 && y <= 3) ? c[x - 1][y] : zero;
            c[x][y - 1] = b[x][y] + carry;
        }
    for (int y = 0; y <= 3; ++y)
        if (!(b[4][y] == -c[3][y]))
            throw Error("internal: divided difference is not polynomial");
    for (int x = 0; x <= 3; ++x)
        for (int y = 0; y <= 3; ++y)
            if (!(c[x][y] == c[y][x]))
                throw Error("internal: divided difference is not symmetric");
    // solve the 10 x 10 change of basis to pair coordinates
    ExactMatrix rhs(k, 10, 1);
    for (std::size_t r = 0; r < sym_pairs().size(); ++r)
        rhs.at(static_cast<int>(r), 0) = c[sym_pairs()[r].first][sym_pairs()[r].second];
    ExactMatrix sol = reduction_inverse * rhs;
    TernaryCubic gamma;
    for (int r = 0; r < 10; ++r) gamma.c.push_back(sol.at(r, 0));
    return gamma;
}

// Matrix of the expansion of cubic monomials in (A, B, C) into symmetric
// (3,3)-biform coefficients; shared by the three divided differences.
ExactMatrix reduction_matrix(const FieldDescPtr& k) {
    ExactMatrix m(k, 10, 10);
    const auto& mons = cubic_monomials();
    for (std::size_t col = 0; col < mons.size(); ++col) {
        int be = mons[col][1], ga = mons[col][2];
        for (int r = 0; r <= be; ++r) {
            int kk = be - r + ga, ll = r + ga;
            if (kk > ll) continue; // symmetric partner handles it
            for (std::size_t row = 0; row < sym_pairs().size(); ++row)
                if (sym_pairs()[row] == std::make_pair(kk, ll)) {
                    mpz_class bin;
                    mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(be),
                                 static_cast<unsigned long>(r));
                    m.at(static_cast<int>(row), static_cast<int>(col)) +=
                        FieldElement::constant(k, mpq_class(bin));
                }
        }
    }
    return m;
}

// View the cubic as a polynomial in A: coefficient of A^al is a binary form
// of degree 3 - al in (B, C), returned dehomogenized at C = 1 (ascending B).
std::vector<upoly::Poly> a_coefficients(const TernaryCubic& g, const FieldDescPtr& k) {
    std::vector<upoly::Poly> out(4);
    const auto& mons = cubic_monomials();
    for (int al = 0; al <= 3; ++al)
        out[al].assign(4 - al, FieldElement::zero(k));
    for (std::size_t i = 0; i < mons.size(); ++i)
        out[mons[i][0]][mons[i][1]] = g.c[i];
    for (auto& p : out) upoly::trim(p);
    return out;
}

// Determinant of a matrix of univariate polynomials by Laplace expansion.
upoly::Poly poly_det(std::vector<std::vector<upoly::Poly>>& m, std::vector<int>& cols,
                     int row, const FieldDescPtr& k) {
    if (static_cast<std::size_t>(row) == m.size()) return {FieldElement::one(k)};
    upoly::Poly acc;
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        int col = cols[ci];
        if (col < 0 || m[row][col].empty()) continue;
        std::vector<int> rest = cols;
        rest.erase(rest.begin() + static_cast<long>(ci));
        upoly::Poly sub = poly_det(m, rest, row + 1, k);
        upoly::Poly term = upoly::mul(m[row][col], sub);
        acc = (ci % 2 == 0) ? upoly::add(acc, term) : upoly::sub(acc, term);
    }
    return acc;
}

// Resultant in A of two pair-coordinate cubics, as a polynomial in B
// (dehomogenized at C = 1; homogeneous degree 9 in (B, C) abstractly).
upoly::Poly eliminate_a(const TernaryCubic& f, const TernaryCubic& g,
                        const FieldDescPtr& k) {
    auto fc = a_coefficients(f, k), gc = a_coefficients(g, k);
    std::vector<std::vector<upoly::Poly>> syl(6, std::vector<upoly::Poly>(6));
    for (int r = 0; r < 3; ++r)
        for (int j = 0; j <= 3; ++j) syl[r][r + j] = fc[3 - j];
    for (int r = 0; r < 3; ++r)
        for (int j = 0; j <= 3; ++j) syl[3 + r][r + j] = gc[3 - j];
    std::vector<int> cols{0, 1, 2, 3, 4, 5};
    return poly_det(syl, cols, 0, k);
}

struct ExtractedNode {
    FieldDescPtr field;
    FieldElement b0, a0; // pair coordinates (A, B, C) = (a0, b0, 1)
};

// Substitute (B, C) = (b0, 1) into the cubic, leaving a polynomial in A.
upoly::Poly substitute_bc(const TernaryCubic& g, const FieldElement& b0,
                          const FieldDescPtr& target) {
    upoly::Poly out(4, FieldElement::zero(target));
    const auto& mons = cubic_monomials();
    for (std::size_t i = 0; i < mons.size(); ++i)
        out[mons[i][0]] += g.c[i].promote(target) * b0.pow(mons[i][1]);
    upoly::trim(out);
    return out;
}

FieldElement common_linear_root(const std::vector<upoly::Poly>& polys) {
    upoly::Poly g = polys[0];
    for (std::size_t i = 1; i < polys.size(); ++i) g = upoly::gcd_monic(g, polys[i]);
    if (upoly::degree(g) != 1) throw RetryShear{};
    return -g[0];
}

} // namespace

std::vector<NodeData> quartic_nodes(const BinaryForm& p1, const BinaryForm& p2,
                                    const BinaryForm& p3) {
    const FieldDescPtr& k = p1.descriptor();
    if (!k->is_rational() && !k->is_prime())
        throw InputError("quartic_nodes supports forms over Q and F_p");
    std::vector<const BinaryForm*> ps{&p1, &p2, &p3};
    for (const auto* p : ps) {
        if (p->degree() != 4) throw InputError("quartic_nodes expects degree-4 forms");
        if (!same_field(p->descriptor(), k)) throw InputError("forms over mixed fields");
        if (p->is_zero()) throw DegenerateError("zero coordinate form");
    }
    if (binary_gcd(binary_gcd(p1, p2), p3).degree() > 0)
        throw DegenerateError("parameterization has a base point");

    ExactMatrix reduction_inv = reduction_matrix(k).inverse();

    const int shear_count = static_cast<int>(sizeof(kShears) / sizeof(kShears[0]));
    for (int shear = 0; shear < shear_count; ++shear) {
        try {
            auto m = shear_matrix(k, shear);
            BinaryForm q1 = p1.compose(m), q2 = p2.compose(m), q3 = p3.compose(m);
            TernaryCubic g12 = divided_difference_cubic(q1, q2, reduction_inv);
            TernaryCubic g13 = divided_difference_cubic(q1, q3, reduction_inv);
            TernaryCubic g23 = divided_difference_cubic(q2, q3, reduction_inv);

            upoly::Poly h1 = eliminate_a(g12, g13, k);
            upoly::Poly h2 = eliminate_a(g12, g23, k);
            upoly::Poly h3 = eliminate_a(g13, g23, k);
            if (h1.empty() || h2.empty() || h3.empty())
                throw RetryShear{}; // a lost leading coefficient, typically
            upoly::Poly h = upoly::gcd_monic(upoly::gcd_monic(h1, h2), h3);
            if (upoly::degree(h) != 3) throw RetryShear{};
            if (upoly::degree(upoly::gcd_monic(h, upoly::derivative(h))) != 0)
                throw RetryShear{};

            // factor the node cubic over the base field
            std::vector<FieldElement> roots = field_roots_deg3(h, k);
            std::sort(roots.begin(), roots.end(),
                      [](const FieldElement& a, const FieldElement& b) {
                          return a.rat() < b.rat();
                      });
            upoly::Poly rem = h;
            for (const auto& r : roots) {
                upoly::Poly lin{-r, FieldElement::one(k)}, q, rr;
                upoly::divmod(rem, lin, q, rr);
                if (!rr.empty()) throw Error("internal: claimed root does not divide");
                rem = q;
            }

            std::vector<ExtractedNode> extracted;
            for (const auto& r : roots) extracted.push_back({k, r, FieldElement()});
            if (upoly::degree(rem) >= 2) {
                // irreducible factor: no roots of h remain in the base field
                std::vector<mpq_class> minpoly;
                upoly::Poly monic_rem = upoly::monic(rem);
                for (const auto& cf : monic_rem) minpoly.push_back(cf.rat());
                FieldDescPtr ext = make_extension(k, minpoly);
                extracted.push_back({ext, FieldElement::generator(ext), FieldElement()});
            } else if (upoly::degree(rem) == 1) {
                throw Error("internal: linear factor left after root extraction");
            }

            std::array<TernaryCubic, 3> gammas{g12, g13, g23};
            std::vector<NodeData> nodes;
            auto minv = shear_inverse(k, shear);
            for (auto& ex : extracted) {
                std::vector<upoly::Poly> in_a;
                for (const auto& gg : gammas) in_a.push_back(substitute_bc(gg, ex.b0, ex.field));
                ex.a0 = common_linear_root(in_a);

                // monic nodal quadratic in the sheared parameters
                BinaryForm q_shear(ex.field, 2,
                                   {FieldElement::one(ex.field), -ex.b0, ex.a0});
                // remainders of the sheared forms modulo q certify one image
                std::array<BinaryForm, 3> rems{BinaryForm(ex.field, 1),
                                               BinaryForm(ex.field, 1),
                                               BinaryForm(ex.field, 1)};
                std::array<BinaryForm, 3> sheared{q1.promote(ex.field),
                                                  q2.promote(ex.field),
                                                  q3.promote(ex.field)};
                for (int i = 0; i < 3; ++i) {
                    BinaryForm quot(ex.field, 2);
                    divrem_affine(sheared[i], q_shear, quot, rems[i]);
                }
                for (int i = 0; i < 3; ++i)
                    for (int j = i + 1; j < 3; ++j) {
                        FieldElement minor = rems[i].coeff_desc(0) * rems[j].coeff_desc(1) -
                                             rems[j].coeff_desc(0) * rems[i].coeff_desc(1);
                        if (!minor.is_zero()) throw RetryShear{};
                    }
                NodeData node;
                node.node_field = ex.field;
                std::vector<FieldElement> col_u, col_v;
                for (int i = 0; i < 3; ++i) {
                    col_u.push_back(rems[i].coeff_desc(0));
                    col_v.push_back(rems[i].coeff_desc(1));
                }
                bool u_nonzero = !(col_u[0].is_zero() && col_u[1].is_zero() && col_u[2].is_zero());
                bool v_nonzero = !(col_v[0].is_zero() && col_v[1].is_zero() && col_v[2].is_zero());
                if (!u_nonzero && !v_nonzero)
                    throw DegenerateError("nodal quadratic divides every coordinate form");
                node.point = u_nonzero ? col_u : col_v;
                for (int i = 2; i >= 0; --i)
                    if (!node.point[i].is_zero()) {
                        FieldElement inv = node.point[i].inverse();
                        for (auto& x : node.point) x = x * inv;
                        break;
                    }

                // back to the original parameters
                std::array<std::array<FieldElement, 2>, 2> minv_f;
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) minv_f[i][j] = minv[i][j].promote(ex.field);
                node.nodal_quadratic = q_shear.compose(minv_f);

                // two independent lines through the node
                int pivot = -1;
                for (int i = 2; i >= 0; --i)
                    if (!node.point[i].is_zero()) {
                        pivot = i;
                        break;
                    }
                std::array<BinaryForm, 3> originals{p1.promote(ex.field),
                                                    p2.promote(ex.field),
                                                    p3.promote(ex.field)};
                std::vector<BinaryForm> residuals;
                for (int j = 0; j < 3; ++j) {
                    if (j == pivot) continue;
                    // L = e_j - nu_j e_pivot
                    BinaryForm v = originals[j] - originals[pivot].scaled(node.point[j]);
                    residuals.push_back(exact_div(v, node.nodal_quadratic));
                }
                node.residual_1 = residuals[0];
                node.residual_2 = residuals[1];
                node.alpha = resultant(node.residual_1, node.residual_2);
                if (node.alpha.is_zero())
                    throw DegenerateError("non-simple line: vanishing node index");
                node.pair_discriminant = discriminant_quadratic(
                    node.nodal_quadratic.coeff_desc(0), node.nodal_quadratic.coeff_desc(1),
                    node.nodal_quadratic.coeff_desc(2));
                if (node.pair_discriminant.is_zero())
                    throw DegenerateError("non-generic Gauss curve: cuspidal parameter pair");
                if (ex.field->is_rational() || ex.field->is_prime())
                    node.pair_split = is_square_in_field(node.pair_discriminant);
                nodes.push_back(std::move(node));
            }

            // distinct nodes over a common field must be distinct points
            for (std::size_t i = 0; i < nodes.size(); ++i)
                for (std::size_t j = i + 1; j < nodes.size(); ++j) {
                    if (!same_field(nodes[i].node_field, nodes[j].node_field)) continue;
                    if (nodes[i].point == nodes[j].point)
                        throw DegenerateError("non-generic Gauss curve: coincident nodes");
                }
            int degsum = 0;
            for (const auto& nd : nodes) degsum += nd.node_field->degree();
            if (degsum != 3)
                throw Error("internal: node field degrees do not sum to 3");
            return nodes;
        } catch (const RetryShear&) {
            continue;
        }
    }
    throw DegenerateError("non-generic Gauss curve: node extraction failed for all shears");
}

GWClass segre_index_n3(const BinaryForm& p1, const BinaryForm& p2,
                       const BinaryForm& p3, const FieldDescPtr& ground) {
    const FieldDescPtr& k = p1.descriptor();
    std::vector<NodeData> nodes = quartic_nodes(p1, p2, p3);
    FieldElement prod = FieldElement::one(k);
    for (const auto& node : nodes) {
        if (same_field(node.node_field, k))
            prod = prod * node.alpha;
        else
            prod = prod * field_norm(node.alpha);
    }
    return trace_form(prod, ground);
}

} // namespace gwlines
