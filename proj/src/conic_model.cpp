#include "gwlines/conic_model.hpp"

#include <sstream>

#include "gwlines/line_index.hpp"
#include "gwlines/rng.hpp"

namespace gwlines {

namespace {

// Shared column order of V_B, R_B, K_B and the substitution matrix: a
// single source of truth, since a misaligned column silently breaks the
// main identity. Monomials x^i y^j of degree <= k, graded, x-exponent
// descending within a degree: 1, x, y, x^2, xy, y^2, ...
std::vector<std::pair<int, int>> monomials_upto(int k) {
    std::vector<std::pair<int, int>> out;
    for (int d = 0; d <= k; ++d)
        for (int i = d; i >= 0; --i) out.emplace_back(i, d - i);
    return out;
}

// The appended degree-(n-1) block: x^{n-1}, x^{n-2} y, ..., y^{n-1}.
std::vector<std::pair<int, int>> monomials_top(int n) {
    std::vector<std::pair<int, int>> out;
    for (int i = n - 1; i >= 0; --i) out.emplace_back(i, n - 1 - i);
    return out;
}

FieldElement eval_monomial(const std::pair<FieldElement, FieldElement>& b, int i, int j) {
    return b.first.pow(i) * b.second.pow(j);
}

} // namespace

ConicModel::ConicModel(int n_, std::vector<std::pair<FieldElement, FieldElement>> pts,
                       std::array<BinaryForm, 3> q)
    : n(n_), points(std::move(pts)), conic(std::move(q)) {
    if (n < 3) throw InputError("conic models need n >= 3");
    mpz_class want;
    mpz_bin_uiui(want.get_mpz_t(), static_cast<unsigned long>(n), 2);
    if (mpz_class(static_cast<long>(points.size())) != want)
        throw InputError("conic model needs binom(n,2) = " + want.get_str() +
                         " geometric points, got " + std::to_string(points.size()));
    const FieldDescPtr& d = conic[0].descriptor();
    for (const auto& f : conic) {
        if (f.degree() != 2) throw InputError("conic parameterization must have degree 2");
        if (!same_field(f.descriptor(), d)) throw InputError("conic model over mixed fields");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!same_field(points[i].first.descriptor(), d) ||
            !same_field(points[i].second.descriptor(), d))
            throw InputError("conic model over mixed fields");
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first && points[i].second == points[j].second)
                throw InputError("duplicate point in B");
    }
}

ExactMatrix vandermonde_vb(const ConicModel& m) {
    auto mons = monomials_upto(m.n - 2);
    const int sz = m.locus_size();
    if (static_cast<int>(mons.size()) != sz)
        throw Error("internal: monomial count mismatch");
    ExactMatrix vb(m.descriptor(), sz, sz);
    for (int r = 0; r < sz; ++r)
        for (int c = 0; c < sz; ++c)
            vb.at(r, c) = eval_monomial(m.points[r], mons[c].first, mons[c].second);
    return vb;
}

ExactMatrix rb_matrix(const ConicModel& m) {
    auto mons = monomials_top(m.n);
    const int sz = m.locus_size();
    ExactMatrix rb(m.descriptor(), sz, m.n);
    for (int r = 0; r < sz; ++r)
        for (int c = 0; c < m.n; ++c)
            rb.at(r, c) = eval_monomial(m.points[r], mons[c].first, mons[c].second);
    return rb;
}

ExactMatrix kb_matrix(const ConicModel& m) {
    ExactMatrix vb = vandermonde_vb(m);
    ExactMatrix rb = rb_matrix(m);
    FieldElement det = vb.determinant();
    ExactMatrix top = -(vb.adjugate() * rb);
    ExactMatrix bottom = ExactMatrix::identity(m.descriptor(), m.n).scaled(det);
    ExactMatrix kb = top.vconcat(bottom);
    if (!(vb.hconcat(rb) * kb).is_zero())
        throw Error("internal: [V_B | R_B] K_B != 0");
    return kb;
}

ExactMatrix substitution_matrix(const std::array<BinaryForm, 3>& q, int n) {
    const FieldDescPtr& d = q[0].descriptor();
    for (const auto& f : q)
        if (f.degree() != 2) throw InputError("substitution needs degree-2 forms");
    auto cols = monomials_upto(n - 2);
    auto top = monomials_top(n);
    cols.insert(cols.end(), top.begin(), top.end());
    // powers of Q0, Q1, Q2 up to n-1
    std::vector<std::vector<BinaryForm>> pw(3);
    for (int t = 0; t < 3; ++t) {
        pw[t].push_back(BinaryForm(d, 0, {FieldElement::one(d)}));
        for (int k = 1; k <= n - 1; ++k) pw[t].push_back(pw[t].back() * q[t]);
    }
    const int rows = 2 * n - 1; // dim of degree 2n-2 binary forms
    ExactMatrix s(d, rows, static_cast<int>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        int i = cols[c].first, j = cols[c].second;
        BinaryForm f = pw[0][n - 1 - i - j] * pw[1][i] * pw[2][j];
        for (int r = 0; r < rows; ++r) s.at(r, static_cast<int>(c)) = f.coeff_desc(r);
    }
    return s;
}

std::vector<BinaryForm> conic_model_forms(const ConicModel& m) {
    ExactMatrix qk = substitution_matrix(m.conic, m.n) * kb_matrix(m);
    std::vector<BinaryForm> forms;
    forms.reserve(m.n);
    for (int c = 0; c < m.n; ++c) {
        std::vector<FieldElement> cs;
        cs.reserve(qk.rows());
        for (int r = 0; r < qk.rows(); ++r) cs.push_back(qk.at(r, c));
        forms.emplace_back(m.descriptor(), 2 * m.n - 2, std::move(cs));
    }
    return forms;
}

FieldElement a_invariant(const ConicModel& m) {
    return index_matrix(conic_model_forms(m)).determinant();
}

FieldElement r_invariant(const ConicModel& m) {
    FieldElement r = FieldElement::one(m.descriptor());
    for (const auto& b : m.points) {
        BinaryForm f = m.conic[1] - m.conic[0].scaled(b.first);
        BinaryForm g = m.conic[2] - m.conic[0].scaled(b.second);
        r = r * resultant(f, g);
    }
    return r;
}

IdentityReport verify_identity(const ConicModel& m) {
    IdentityReport rep{a_invariant(m), vandermonde_vb(m).determinant(),
                       r_invariant(m), FieldElement(), false, false};
    rep.v_value = rep.det_vb.pow(static_cast<unsigned long>(2 * m.n));
    FieldElement rhs = rep.v_value * rep.r_value;
    rep.lhs_equals_rhs = rep.a_value == rhs;
    rep.zero_locus_consistent = rep.a_value.is_zero() == rhs.is_zero();
    return rep;
}

ConicModel symmetric_family(const std::vector<FieldElement>& a) {
    const int n = static_cast<int>(a.size());
    if (n < 3) throw InputError("symmetric family needs n >= 3");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a[i] == a[j]) throw InputError("symmetric family needs distinct values");
    const FieldDescPtr& d = a[0].descriptor();
    std::vector<std::pair<FieldElement, FieldElement>> pts;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pts.emplace_back(a[i], a[j]);
    BinaryForm u2 = BinaryForm::from_ints(d, 2, {1, 0, 0});
    BinaryForm v2 = BinaryForm::from_ints(d, 2, {0, 0, 1});
    return ConicModel(n, std::move(pts), {v2, u2, u2});
}

namespace {

FieldElement elem_sym(int k, const std::vector<FieldElement>& vals, const FieldDescPtr& d) {
    const int n = static_cast<int>(vals.size());
    if (k < 0 || k > n) return FieldElement::zero(d);
    std::vector<FieldElement> e(k + 1, FieldElement::zero(d));
    e[0] = FieldElement::one(d);
    for (int i = 0; i < n; ++i)
        for (int j = std::min(k, i + 1); j >= 1; --j) e[j] += e[j - 1] * vals[i];
    return e[k];
}

} // namespace

ClosedFormReport closed_form_checks(const std::vector<FieldElement>& a) {
    ClosedFormReport rep;
    ConicModel model = symmetric_family(a);
    const int n = model.n;
    const FieldDescPtr& d = model.descriptor();
    std::ostringstream detail;

    // Step 1: R(B, Q) = prod_{i<j} (a_i - a_j)^2
    FieldElement r = r_invariant(model);
    FieldElement direct = FieldElement::one(d);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            FieldElement t = a[i] - a[j];
            direct = direct * t * t;
        }
    rep.r_product_ok = r == direct;
    if (!rep.r_product_ok) detail << "step 1: R(B,Q) != prod (a_i - a_j)^2; ";

    // Step 2: det V_B != 0
    FieldElement det_vb = vandermonde_vb(model).determinant();
    rep.det_vb_nonzero = !det_vb.is_zero();
    if (!rep.det_vb_nonzero) detail << "step 2: det V_B = 0; ";

    // Step 3: normalized coefficients match the symmetric-polynomial formula
    rep.coefficients_ok = true;
    std::vector<BinaryForm> pp;
    if (rep.det_vb_nonzero) {
        FieldElement inv = det_vb.inverse();
        for (const auto& f : conic_model_forms(model)) pp.push_back(f.scaled(inv));
        for (int i = 1; i <= n && rep.coefficients_ok; ++i) {
            const BinaryForm& f = pp[i - 1];
            std::vector<FieldElement> omit;
            for (int t = 0; t < n; ++t)
                if (t != n - i) omit.push_back(a[t]); // omit a_{n-i+1} (1-indexed)
            for (int jj = 0; jj <= 2 * n - 2; ++jj) {
                FieldElement want = FieldElement::zero(d);
                if (jj % 2 == 0) {
                    int l = (2 * n - 2 - jj) / 2;
                    want = elem_sym(l, omit, d);
                    if (l % 2 == 1) want = -want; // (-1)^l e_l, +1 at l = 0
                }
                if (!(f.coeff_u(jj) == want)) {
                    rep.coefficients_ok = false;
                    detail << "step 3: p_{" << jj << "," << i << "} diverges; ";
                    break;
                }
            }
        }
    } else {
        rep.coefficients_ok = false;
    }

    // Step 4: det N = +-prod (a_i - a_j) and det(N (x) I_2) = det(N)^2
    if (rep.coefficients_ok) {
        ExactMatrix nmat(d, n, n);
        for (int row = 0; row < n; ++row)
            for (int i = 0; i < n; ++i)
                nmat.at(row, i) = pp[i].coeff_u(2 * n - 2 - 2 * row);
        FieldElement det_n = nmat.determinant();
        FieldElement prod = FieldElement::one(d);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) prod = prod * (a[i] - a[j]);
        FieldElement det_kron = kronecker_with_identity2(nmat).determinant();
        rep.det_n_ok = (det_n == prod || det_n == -prod) && det_kron == det_n * det_n;
        if (!rep.det_n_ok) detail << "step 4: det N or det N~ diverges; ";
    }

    // the corollary itself, with a nonzero value
    IdentityReport idr = verify_identity(model);
    rep.identity_ok = idr.lhs_equals_rhs && !idr.a_value.is_zero();
    if (!rep.identity_ok) detail << "identity: A != (det V_B)^{2n} R or A = 0; ";

    rep.detail = detail.str();
    return rep;
}

ConicModel random_instance(int n, long coeff_bound, std::uint64_t seed,
                           const FieldDescPtr& field) {
    if (n < 3) throw InputError("random_instance needs n >= 3");
    if (!field->is_rational() && !field->is_prime())
        throw InputError("random_instance supports Q and F_p");
    if (coeff_bound < 1) throw InputError("coefficient bound must be positive");
    const long m_target = static_cast<long>(n) * (n - 1) / 2;
    if (field->is_prime() && field->modulus() * field->modulus() < 4 * m_target)
        throw InputError("prime field too small to draw binom(n,2) distinct points");
    if (field->is_rational() && (2 * coeff_bound + 1) * (2 * coeff_bound + 1) < 4 * m_target)
        throw InputError("coefficient bound too small to draw binom(n,2) distinct points");
    SplitMix64 rng(seed);
    auto draw = [&]() {
        if (field->is_rational())
            return FieldElement::integer(field, rng.next_in_range(-coeff_bound, coeff_bound));
        long p = mpz_get_si(field->modulus().get_mpz_t());
        return FieldElement::integer(field, rng.next_in_range(0, p - 1));
    };
    const int m = n * (n - 1) / 2;
    std::vector<std::pair<FieldElement, FieldElement>> pts;
    while (static_cast<int>(pts.size()) < m) {
        FieldElement bx = draw(), by = draw();
        bool dup = false;
        for (const auto& p : pts)
            if (p.first == bx && p.second == by) {
                dup = true;
                break;
            }
        if (!dup) pts.emplace_back(std::move(bx), std::move(by));
    }
    std::array<BinaryForm, 3> q{BinaryForm(field, 2), BinaryForm(field, 2),
                                BinaryForm(field, 2)};
    for (int t = 0; t < 3; ++t) {
        std::vector<FieldElement> cs{draw(), draw(), draw()};
        q[t] = BinaryForm(field, 2, std::move(cs));
    }
    return ConicModel(n, std::move(pts), std::move(q));
}

} // namespace gwlines
