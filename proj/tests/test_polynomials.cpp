#include <doctest.h>

#include <algorithm>

#include "gwlines/binary_form.hpp"
#include "gwlines/matrix.hpp"
#include "gwlines/multipoly.hpp"
#include "gwlines/rng.hpp"

using namespace gwlines;

namespace {

FieldDescPtr Q() { return FieldDescriptor::rationals(); }
FieldDescPtr Fp(long p) { return FieldDescriptor::prime_field(mpz_class(p)); }

BinaryForm bf(const FieldDescPtr& d, const std::vector<long>& coeffs) {
    return BinaryForm::from_ints(d, static_cast<int>(coeffs.size()) - 1, coeffs);
}

BinaryForm random_form(SplitMix64& rng, const FieldDescPtr& d, int deg, long bound) {
    std::vector<FieldElement> cs;
    for (int i = 0; i <= deg; ++i)
        cs.push_back(FieldElement::integer(d, rng.next_in_range(-bound, bound)));
    return BinaryForm(d, deg, std::move(cs));
}

// permutation-expansion determinant, the independent oracle
FieldElement det_oracle(const ExactMatrix& m) {
    const int n = m.rows();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    FieldElement acc = FieldElement::zero(m.descriptor());
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        FieldElement term = FieldElement::one(m.descriptor());
        for (int i = 0; i < n; ++i) term = term * m.at(i, perm[i]);
        acc = inv % 2 == 0 ? acc + term : acc - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

} // namespace

TEST_CASE("resultant examples") {
    // Res(u^2 - v^2, u^2 - 4v^2) = 9
    CHECK(resultant(bf(Q(), {1, 0, -1}), bf(Q(), {1, 0, -4})) ==
          FieldElement::integer(Q(), 9));
    // Res(f, f) = 0
    BinaryForm f = bf(Q(), {2, -3, 5, 1});
    CHECK(resultant(f, f).is_zero());
    // Res(uv, u^2 - v^2) = -1
    CHECK(resultant(bf(Q(), {0, 1, 0}), bf(Q(), {1, 0, -1})) ==
          FieldElement::integer(Q(), -1));
    CHECK_THROWS_AS(resultant(bf(Q(), {1, 1}), bf(Fp(5), {1, 1})), InputError);
}

TEST_CASE("resultant laws on random quadratics") {
    SplitMix64 rng(42);
    auto one = FieldElement::one(Q());
    for (int t = 0; t < 60; ++t) {
        BinaryForm a = random_form(rng, Q(), 2, 6), b = random_form(rng, Q(), 2, 6);
        // swap symmetry: Res(f,g) = (-1)^{deg f deg g} Res(g,f)
        CHECK(resultant(a, b) == resultant(b, a)); // 2*2 even
        // scaling the variable: Res(f(lz), g(lz)) = l^{deg f deg g} Res(f, g)
        FieldElement lam = FieldElement::integer(Q(), rng.next_in_range(1, 7));
        std::array<std::array<FieldElement, 2>, 2> scale{
            {{lam, FieldElement::zero(Q())}, {FieldElement::zero(Q()), one}}};
        CHECK(resultant(a.compose(scale), b.compose(scale)) ==
              lam.pow(4) * resultant(a, b));
        // scaling the forms: Res(lf, lg) = l^{deg f + deg g} Res(f, g)
        CHECK(resultant(a.scaled(lam), b.scaled(lam)) == lam.pow(4) * resultant(a, b));
        // translation invariance: z -> z + c
        FieldElement c = FieldElement::integer(Q(), rng.next_in_range(-5, 5));
        std::array<std::array<FieldElement, 2>, 2> shift{
            {{one, c}, {FieldElement::zero(Q()), one}}};
        CHECK(resultant(a.compose(shift), b.compose(shift)) == resultant(a, b));
    }
    // odd-degree swap picks up the sign
    for (int t = 0; t < 20; ++t) {
        BinaryForm a = random_form(rng, Q(), 1, 6), b = random_form(rng, Q(), 1, 6);
        CHECK(resultant(a, b) == -resultant(b, a));
    }
}

TEST_CASE("resultant Moebius covariance: det(M)^4") {
    SplitMix64 rng(43);
    for (int t = 0; t < 60; ++t) {
        BinaryForm a = random_form(rng, Q(), 2, 6), b = random_form(rng, Q(), 2, 6);
        std::array<std::array<FieldElement, 2>, 2> m;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                m[i][j] = FieldElement::integer(Q(), rng.next_in_range(-4, 4));
        FieldElement det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        CHECK(resultant(a.compose(m), b.compose(m)) == det.pow(4) * resultant(a, b));
    }
}

TEST_CASE("discriminant of quadratics") {
    auto d = discriminant_quadratic(FieldElement::integer(Q(), 1),
                                    FieldElement::integer(Q(), 0),
                                    FieldElement::integer(Q(), -1));
    CHECK(d == FieldElement::integer(Q(), 4));
    CHECK(discriminant_quadratic(FieldElement::integer(Q(), 0),
                                 FieldElement::integer(Q(), 36),
                                 FieldElement::integer(Q(), 0)) ==
          FieldElement::integer(Q(), 1296));

    // symbolic: a = -3 x2, b = 0, c = 3 x1 gives 36 x1 x2
    MultiPoly x1 = MultiPoly::variable(Q(), 2, 0), x2 = MultiPoly::variable(Q(), 2, 1);
    MultiPoly disc = discriminant_quadratic(x2.scaled(FieldElement::integer(Q(), -3)),
                                            MultiPoly::zero(Q(), 2),
                                            x1.scaled(FieldElement::integer(Q(), 3)));
    CHECK(disc == (x1 * x2).scaled(FieldElement::integer(Q(), 36)));
}

TEST_CASE("substitute_conic") {
    // variable order (z, x, y) -> (Q0, Q1, Q2)
    BinaryForm q0 = bf(Q(), {0, 0, 1}); // v^2
    BinaryForm q1 = bf(Q(), {1, 0, 0}); // u^2
    BinaryForm q2 = bf(Q(), {0, 1, 0}); // uv
    MultiPoly x = MultiPoly::variable(Q(), 3, 1);
    CHECK(substitute_conic(x, q0, q1, q2) == bf(Q(), {1, 0, 0}));

    // x^2 - yz -> u^4 - uv^3
    MultiPoly curve = x * x - MultiPoly::variable(Q(), 3, 2) * MultiPoly::variable(Q(), 3, 0);
    CHECK(substitute_conic(curve, q0, q1, q2) == bf(Q(), {1, 0, 0, -1, 0}));

    // z + x + y -> Q0 + Q1 + Q2 (linearity)
    MultiPoly lin = MultiPoly::variable(Q(), 3, 0) + x + MultiPoly::variable(Q(), 3, 2);
    CHECK(substitute_conic(lin, q0, q1, q2) == q0 + q1 + q2);

    MultiPoly nonhom = x + x * x;
    CHECK_THROWS_AS(substitute_conic(nonhom, q0, q1, q2), InputError);
}

TEST_CASE("exact division") {
    // (u^4 - v^4) / (u^2 - v^2) = u^2 + v^2
    CHECK(exact_div(bf(Q(), {1, 0, 0, 0, -1}), bf(Q(), {1, 0, -1})) == bf(Q(), {1, 0, 1}));
    // (uv(u^2 + v^2)) / (uv) = u^2 + v^2
    CHECK(exact_div(bf(Q(), {0, 1, 0, 1, 0}), bf(Q(), {0, 1, 0})) == bf(Q(), {1, 0, 1}));
    // ((u^2 - v^2)(3u^2 + 5uv + 7v^2)) / (u^2 - v^2)
    BinaryForm prod = bf(Q(), {1, 0, -1}) * bf(Q(), {3, 5, 7});
    CHECK(exact_div(prod, bf(Q(), {1, 0, -1})) == bf(Q(), {3, 5, 7}));
    // inexact division reports the absent factor
    CHECK_THROWS_AS(exact_div(bf(Q(), {1, 0, 0, 0, -1}), bf(Q(), {1, 1, 1})), InputError);

    SplitMix64 rng(17);
    for (int t = 0; t < 40; ++t) {
        BinaryForm f = random_form(rng, Q(), static_cast<int>(rng.next_in_range(1, 4)), 5);
        BinaryForm g = random_form(rng, Q(), static_cast<int>(rng.next_in_range(1, 3)), 5);
        if (g.is_zero()) continue;
        CHECK(exact_div(f * g, g) == f);
    }
    for (int t = 0; t < 40; ++t) {
        BinaryForm f = random_form(rng, Fp(101), 3, 100);
        BinaryForm g = random_form(rng, Fp(101), 2, 100);
        if (g.is_zero()) continue;
        CHECK(exact_div(f * g, g) == f);
    }
}

TEST_CASE("determinants") {
    CHECK(ExactMatrix::identity(Q(), 6).determinant().is_one());

    ExactMatrix m(Q(), 3, 3);
    long vals[3][3] = {{1, 1, 2}, {1, 1, 3}, {1, 2, 3}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = FieldElement::integer(Q(), vals[i][j]);
    CHECK(m.determinant() == FieldElement::integer(Q(), -1));

    ExactMatrix r(Q(), 2, 2);
    r.at(0, 0) = r.at(1, 0) = FieldElement::integer(Q(), 3);
    r.at(0, 1) = r.at(1, 1) = FieldElement::integer(Q(), -5);
    CHECK(r.determinant().is_zero());

    ExactMatrix ns(Q(), 2, 3);
    CHECK_THROWS_AS(ns.determinant(), InputError);
}

TEST_CASE("determinant agrees with the permutation oracle") {
    SplitMix64 rng(23);
    for (int t = 0; t < 30; ++t) {
        int n = static_cast<int>(rng.next_in_range(1, 5));
        ExactMatrix m(Q(), n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.at(i, j) = FieldElement::integer(Q(), rng.next_in_range(-2, 2));
        CHECK(m.determinant() == det_oracle(m));
    }
    // rational entries exercise the denominator-clearing path
    for (int t = 0; t < 15; ++t) {
        int n = static_cast<int>(rng.next_in_range(2, 4));
        ExactMatrix m(Q(), n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.at(i, j) = FieldElement::constant(
                    Q(), mpq_class(rng.next_in_range(-6, 6), rng.next_in_range(1, 4)));
        CHECK(m.determinant() == det_oracle(m));
    }
    for (int t = 0; t < 15; ++t) {
        int n = static_cast<int>(rng.next_in_range(2, 5));
        ExactMatrix m(Fp(13), n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.at(i, j) = FieldElement::integer(Fp(13), rng.next_in_range(0, 12));
        CHECK(m.determinant() == det_oracle(m));
    }
    // extension-field entries take the generic elimination path
    auto qi = make_extension(Q(), {1, 0, 1});
    for (int t = 0; t < 10; ++t) {
        int n = static_cast<int>(rng.next_in_range(2, 3));
        ExactMatrix m(qi, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.at(i, j) = FieldElement::from_coords(
                    qi, {mpq_class(rng.next_in_range(-3, 3)),
                         mpq_class(rng.next_in_range(-3, 3))});
        CHECK(m.determinant() == det_oracle(m));
    }
}

TEST_CASE("inverse and adjugate") {
    SplitMix64 rng(29);
    for (int t = 0; t < 20; ++t) {
        int n = static_cast<int>(rng.next_in_range(1, 5));
        ExactMatrix m(Q(), n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.at(i, j) = FieldElement::integer(Q(), rng.next_in_range(-4, 4));
        FieldElement det = m.determinant();
        ExactMatrix adj = m.adjugate();
        // M adj(M) = det(M) I, including the singular case
        CHECK(m * adj == ExactMatrix::identity(Q(), n).scaled(det));
        if (!det.is_zero()) CHECK(m * m.inverse() == ExactMatrix::identity(Q(), n));
    }
}

TEST_CASE("kronecker_with_identity2") {
    ExactMatrix a(Q(), 1, 1);
    a.at(0, 0) = FieldElement::integer(Q(), 7);
    ExactMatrix ka = kronecker_with_identity2(a);
    CHECK(ka.rows() == 2);
    CHECK(ka.at(0, 0) == FieldElement::integer(Q(), 7));
    CHECK(ka.at(1, 1) == FieldElement::integer(Q(), 7));
    CHECK(ka.at(0, 1).is_zero());

    ExactMatrix swp(Q(), 2, 2);
    swp.at(0, 1) = FieldElement::one(Q());
    swp.at(1, 0) = FieldElement::one(Q());
    CHECK(kronecker_with_identity2(swp).determinant().is_one());

    SplitMix64 rng(31);
    for (int t = 0; t < 20; ++t) {
        ExactMatrix m(Q(), 3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                m.at(i, j) = FieldElement::integer(Q(), rng.next_in_range(-5, 5));
        FieldElement d = m.determinant();
        CHECK(kronecker_with_identity2(m).determinant() == d * d);
    }
}

TEST_CASE("multipoly basics") {
    MultiPoly x = MultiPoly::variable(Q(), 2, 0), y = MultiPoly::variable(Q(), 2, 1);
    MultiPoly p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK(p.is_homogeneous());
    CHECK(p.total_degree() == 2);
    CHECK((p - p).is_zero());
    CHECK_FALSE((x + x * x).is_homogeneous());

    // substitution by a linear change of variables
    ExactMatrix t(Q(), 2, 2);
    t.at(0, 0) = FieldElement::integer(Q(), 1);
    t.at(0, 1) = FieldElement::integer(Q(), 1);
    t.at(1, 1) = FieldElement::integer(Q(), 1);
    // x -> x + y, y -> y: (x+y)^2 - y^2 = x^2 + 2xy
    CHECK(p.substitute_linear(t) ==
          x * x + (x * y).scaled(FieldElement::integer(Q(), 2)));
}

TEST_CASE("zero forms and declared degrees") {
    BinaryForm z(Q(), 3);
    CHECK(z.is_zero());
    CHECK(z.v_multiplicity() == 4);
    // vanishing leading coefficients still give the declared-degree resultant
    BinaryForm f = bf(Q(), {0, 1, 0}); // uv
    BinaryForm g = bf(Q(), {0, 0, 1}); // v^2
    CHECK(resultant(f, g).is_zero());  // common root [1:0]
    BinaryForm h = bf(Q(), {0, 1, 1}); // uv + v^2
    CHECK(resultant(h, g).is_zero());
    BinaryForm k = bf(Q(), {1, 0, 1});
    CHECK_FALSE(resultant(g, k).is_zero());
}
