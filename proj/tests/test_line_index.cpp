#include <doctest.h>

#include "gwlines/json_io.hpp"
#include "gwlines/line_index.hpp"
#include "gwlines/rng.hpp"

using namespace gwlines;

namespace {

FieldDescPtr Q() { return FieldDescriptor::rationals(); }
FieldDescPtr Fp(long p) { return FieldDescriptor::prime_field(mpz_class(p)); }

BinaryForm bf(const FieldDescPtr& d, const std::vector<long>& coeffs) {
    return BinaryForm::from_ints(d, static_cast<int>(coeffs.size()) - 1, coeffs);
}

MultiPoly fermat_cubic(const FieldDescPtr& d) {
    MultiPoly f = MultiPoly::zero(d, 4);
    for (int i = 0; i < 4; ++i) {
        std::vector<int> e(4, 0);
        e[i] = 3;
        f = f + MultiPoly::monomial(d, e, FieldElement::one(d));
    }
    return f;
}

LineOnHypersurface fermat_line(const FieldDescPtr& d, const FieldElement& zeta,
                               const FieldElement& zetap) {
    // x1 = -zeta x0, x3 = -zetap x2 (partition (01)(23))
    ExactMatrix span(d, 2, 4);
    span.at(0, 0) = FieldElement::one(d);
    span.at(0, 1) = -zeta;
    span.at(1, 2) = FieldElement::one(d);
    span.at(1, 3) = -zetap;
    return LineOnHypersurface(2, fermat_cubic(d), span);
}

// F = x1 Q2 Q3 + x2 Q1 Q3 + x3 Q1 Q2 on the standard line
LineOnHypersurface product_quintic(const BinaryForm& q1, const BinaryForm& q2,
                                   const BinaryForm& q3) {
    const FieldDescPtr& d = q1.descriptor();
    std::vector<BinaryForm> ps{q2 * q3, q1 * q3, q1 * q2};
    MultiPoly f = MultiPoly::zero(d, 5);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j <= 4; ++j) {
            if (ps[static_cast<std::size_t>(i)].coeff_desc(j).is_zero()) continue;
            std::vector<int> e(5, 0);
            e[0] = 4 - j;
            e[1] = j;
            e[2 + i] = 1;
            f = f + MultiPoly::monomial(d, e, ps[static_cast<std::size_t>(i)].coeff_desc(j));
        }
    ExactMatrix span(d, 2, 5);
    span.at(0, 0) = FieldElement::one(d);
    span.at(1, 1) = FieldElement::one(d);
    return LineOnHypersurface(3, f, span);
}

BinaryForm random_quadratic(SplitMix64& rng, const FieldDescPtr& d, long bound) {
    std::vector<FieldElement> cs;
    for (int i = 0; i < 3; ++i)
        cs.push_back(FieldElement::integer(d, rng.next_in_range(-bound, bound)));
    return BinaryForm(d, 2, std::move(cs));
}

} // namespace

TEST_CASE("index matrix layout") {
    // P = (3u^2, 3v^2): diagonal matrix with determinant 81
    ExactMatrix a = index_matrix({bf(Q(), {3, 0, 0}), bf(Q(), {0, 0, 3})});
    CHECK(a.rows() == 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(a.at(i, j) == FieldElement::integer(Q(), i == j ? 3 : 0));
    CHECK(a.determinant() == FieldElement::integer(Q(), 81));

    // repeated forms share all roots, so the determinant vanishes
    BinaryForm p = bf(Q(), {2, -1, 3});
    CHECK(index_matrix({p, p}).determinant().is_zero());

    CHECK_THROWS_AS(index_matrix({bf(Q(), {1, 0, 0}), bf(Q(), {1, 0})}), InputError);
}

TEST_CASE("det of the index matrix is the resultant (n = 2)") {
    SplitMix64 rng(61);
    auto check_over = [&](const FieldDescPtr& d, long bound) {
        for (int t = 0; t < 110; ++t) {
            BinaryForm p1 = random_quadratic(rng, d, bound);
            BinaryForm p2 = random_quadratic(rng, d, bound);
            CHECK(index_matrix({p1, p2}).determinant() == resultant(p1, p2));
        }
    };
    check_over(Q(), 8);
    check_over(Fp(101), 50);
}

TEST_CASE("normalize_line on the Fermat cubic") {
    LineOnHypersurface line = fermat_line(Q(), FieldElement::one(Q()), FieldElement::one(Q()));
    NormalizedLine norm = normalize_line(line);
    REQUIRE(norm.forms.size() == 2);
    // P1, P2 are +-3u^2 and +-3v^2 up to the unimodular completion choice
    CHECK(norm.forms[0].coeff_u(1).is_zero());
    CHECK(norm.forms[1].coeff_u(1).is_zero());
    CHECK(norm.change_of_coords.determinant().is_one());
    FieldElement det = index_matrix(norm.forms).determinant();
    CHECK(det == FieldElement::integer(Q(), 81));

    CHECK(local_index_det(line) == FieldElement::integer(Q(), 81));
    GWClass cls = local_index(line, Q());
    CHECK(cls.rank() == 1);
    CHECK(cls.diagonal()[0].is_one()); // square class of 81

    // a line not on the hypersurface is rejected
    ExactMatrix bad(Q(), 2, 4);
    bad.at(0, 0) = FieldElement::one(Q());
    bad.at(1, 2) = FieldElement::one(Q());
    CHECK_THROWS_AS(normalize_line(LineOnHypersurface(2, fermat_cubic(Q()), bad)),
                    InputError);
    // a rank-1 span is rejected
    ExactMatrix thin(Q(), 2, 4);
    thin.at(0, 0) = FieldElement::one(Q());
    thin.at(1, 0) = FieldElement::integer(Q(), 2);
    CHECK_THROWS_AS(normalize_line(LineOnHypersurface(2, fermat_cubic(Q()), thin)),
                    InputError);
}

TEST_CASE("normalize_line keeps a normal form fixed") {
    BinaryForm q1 = bf(Q(), {0, 1, 0});   // uv
    BinaryForm q2 = bf(Q(), {1, 0, -1});  // u^2 - v^2
    BinaryForm q3 = bf(Q(), {1, 0, 1});   // u^2 + v^2
    LineOnHypersurface line = product_quintic(q1, q2, q3);
    NormalizedLine norm = normalize_line(line);
    CHECK(norm.forms[0] == q2 * q3);
    CHECK(norm.forms[1] == q1 * q3);
    CHECK(norm.forms[2] == q1 * q2);
    CHECK(norm.quadratic_part.is_zero());
}

TEST_CASE("local index over Q(omega) lines of the Fermat cubic") {
    auto qw = make_extension(Q(), {1, 1, 1});
    FieldElement w = FieldElement::generator(qw);
    LineOnHypersurface line = fermat_line(qw, w, FieldElement::one(qw));
    GWClass cls = local_index(line, Q());
    CHECK(cls.rank() == 2);
    GWInvariants inv = gw_invariants(cls);
    CHECK(inv.signature == 0);
    CHECK(inv.discriminant == 3); // signed disc of the omega trace form
}

TEST_CASE("segre alpha for cubic surfaces") {
    CHECK(segre_alpha_n2(bf(Q(), {3, 0, 0}), bf(Q(), {0, 0, 3})) ==
          FieldElement::integer(Q(), 1296));
    CHECK(segre_alpha_n2(bf(Q(), {1, 0, 0}), bf(Q(), {0, 0, 1})) ==
          FieldElement::integer(Q(), 16));
    CHECK(segre_alpha_n2(bf(Q(), {1, 0, 1}), bf(Q(), {1, 0, -1})) ==
          FieldElement::integer(Q(), 64));
    CHECK_THROWS_AS(segre_alpha_n2(bf(Q(), {1, 0, 0}), bf(Q(), {2, 0, 0})),
                    DegenerateError);

    // 16 Res(P1, P2) = alpha on random pairs over Q and F_101 (the identity
    // is asserted inside segre_alpha_n2; these calls would throw otherwise)
    SplitMix64 rng(62);
    int done = 0;
    while (done < 110) {
        BinaryForm p1 = random_quadratic(rng, Q(), 9), p2 = random_quadratic(rng, Q(), 9);
        if (resultant(p1, p2).is_zero()) continue;
        CHECK(segre_alpha_n2(p1, p2) == FieldElement::integer(Q(), 16) * resultant(p1, p2));
        ++done;
    }
    done = 0;
    while (done < 110) {
        BinaryForm p1 = random_quadratic(rng, Fp(101), 100);
        BinaryForm p2 = random_quadratic(rng, Fp(101), 100);
        if (resultant(p1, p2).is_zero()) continue;
        CHECK(segre_alpha_n2(p1, p2) ==
              FieldElement::integer(Fp(101), 16) * resultant(p1, p2));
        ++done;
    }
}

TEST_CASE("quartic nodes of the product construction") {
    BinaryForm q1 = bf(Q(), {0, 1, 0});   // uv
    BinaryForm q2 = bf(Q(), {1, 0, -1});  // u^2 - v^2
    BinaryForm q3 = bf(Q(), {1, 0, 1});   // u^2 + v^2
    auto nodes = quartic_nodes(q2 * q3, q1 * q3, q1 * q2);
    REQUIRE(nodes.size() == 3);
    // all three nodes are rational coordinate points
    int seen[3] = {0, 0, 0};
    for (const auto& node : nodes) {
        CHECK(node.node_field->is_rational());
        int nonzero = -1, count = 0;
        for (int i = 0; i < 3; ++i)
            if (!node.point[i].is_zero()) {
                nonzero = i;
                ++count;
            }
        CHECK(count == 1);
        seen[nonzero] += 1;
        // the nodal quadratic matches Q_i up to a scalar
        const BinaryForm* want = nonzero == 0 ? &q1 : (nonzero == 1 ? &q2 : &q3);
        BinaryForm qn = node.nodal_quadratic;
        bool proportional = false;
        for (int j = 0; j <= 2 && !proportional; ++j) {
            if (want->coeff_desc(j).is_zero() || qn.coeff_desc(j).is_zero()) continue;
            FieldElement ratio = qn.coeff_desc(j) / want->coeff_desc(j);
            proportional = qn == want->scaled(ratio);
        }
        CHECK(proportional);
    }
    CHECK(seen[0] == 1);
    CHECK(seen[1] == 1);
    CHECK(seen[2] == 1);

    // alpha values: the node over Q_i sees Res of the other two quadratics
    FieldElement prod = FieldElement::one(Q());
    for (const auto& node : nodes) prod = prod * node.alpha;
    CHECK(square_class(prod) == FieldElement::integer(Q(), -1)); // class of -4

    GWClass seg = segre_index_n3(q2 * q3, q1 * q3, q1 * q2, Q());
    CHECK(seg.rank() == 1);
    CHECK(seg.diagonal()[0] == FieldElement::integer(Q(), -1));
}

TEST_CASE("quartic nodes with an irrational parameter pair") {
    // Q2 = u^2 - 2v^2 is irreducible over Q; its node is still rational
    BinaryForm q1 = bf(Q(), {0, 1, 0});
    BinaryForm q2 = bf(Q(), {1, 0, -2});
    BinaryForm q3 = bf(Q(), {1, 0, 1});
    auto nodes = quartic_nodes(q2 * q3, q1 * q3, q1 * q2);
    REQUIRE(nodes.size() == 3);
    int degree_sum = 0;
    for (const auto& node : nodes) {
        degree_sum += node.node_field->degree();
        CHECK(node.node_field->is_rational()); // [k(nu) : Q] = 1 for all three
    }
    CHECK(degree_sum == 3);
    // the q2-node has an irrational fixed pair: disc(q2) = 8 is not a square
    bool found_nonsplit = false;
    for (const auto& node : nodes)
        if (node.pair_split.has_value() && !*node.pair_split) found_nonsplit = true;
    CHECK(found_nonsplit);
}

TEST_CASE("quartic nodes over extension fields") {
    // generic parameterized plane quartics: three nodes over the closure,
    // typically conjugate over a quadratic or cubic extension of Q
    SplitMix64 rng(63);
    int ext_seen = 0, trials = 0, attempts = 0;
    while (trials < 10 && attempts < 60) {
        ++attempts;
        std::vector<BinaryForm> ps;
        for (int i = 0; i < 3; ++i) {
            std::vector<FieldElement> cs;
            for (int j = 0; j <= 4; ++j)
                cs.push_back(FieldElement::integer(Q(), rng.next_in_range(-4, 4)));
            ps.emplace_back(Q(), 4, std::move(cs));
        }
        std::vector<NodeData> nodes;
        try {
            nodes = quartic_nodes(ps[0], ps[1], ps[2]);
        } catch (const Error&) {
            continue;
        }
        ++trials;
        int degree_sum = 0;
        for (const auto& node : nodes) {
            degree_sum += node.node_field->degree();
            if (node.node_field->is_extension()) ++ext_seen;
            CHECK_FALSE(node.alpha.is_zero());
            // the nodal quadratic divides both residual pencils exactly:
            // recheck by multiplying back
            int pivot = -1;
            for (int i = 2; i >= 0; --i)
                if (!node.point[i].is_zero()) {
                    pivot = i;
                    break;
                }
            std::array<BinaryForm, 3> proms{ps[0].promote(node.node_field),
                                            ps[1].promote(node.node_field),
                                            ps[2].promote(node.node_field)};
            int got = 0;
            for (int j = 0; j < 3; ++j) {
                if (j == pivot) continue;
                BinaryForm v = proms[j] - proms[pivot].scaled(node.point[j]);
                BinaryForm res = got == 0 ? node.residual_1 : node.residual_2;
                CHECK(res * node.nodal_quadratic == v);
                ++got;
            }
        }
        CHECK(degree_sum == 3);
    }
    CHECK(trials >= 5);
    // at least one instance should produce a non-rational node
    CHECK(ext_seen > 0);
}

TEST_CASE("all node indices square gives the trivial class") {
    // Q1 = uv, Q2 = u^2 + v^2, Q3 = u^2 + 4v^2: the three resultants are
    // 1, 4, 9, so every alpha is a square and seg = <1>
    BinaryForm q1 = bf(Q(), {0, 1, 0});
    BinaryForm q2 = bf(Q(), {1, 0, 1});
    BinaryForm q3 = bf(Q(), {1, 0, 4});
    GWClass seg = segre_index_n3(q2 * q3, q1 * q3, q1 * q2, Q());
    CHECK(seg.rank() == 1);
    CHECK(seg.diagonal()[0].is_one());
}

TEST_CASE("quartic nodes over a prime field") {
    auto f101 = Fp(101);
    SplitMix64 rng(66);
    int done = 0;
    while (done < 10) {
        BinaryForm q1 = random_quadratic(rng, f101, 100);
        BinaryForm q2 = random_quadratic(rng, f101, 100);
        BinaryForm q3 = random_quadratic(rng, f101, 100);
        if (resultant(q1, q2).is_zero() || resultant(q1, q3).is_zero() ||
            resultant(q2, q3).is_zero())
            continue;
        BinaryForm p1 = q2 * q3, p2 = q1 * q3, p3 = q1 * q2;
        GWClass seg(f101);
        try {
            seg = segre_index_n3(p1, p2, p3, f101);
        } catch (const DegenerateError&) {
            continue;
        }
        FieldElement det = index_matrix({p1, p2, p3}).determinant();
        REQUIRE_FALSE(det.is_zero());
        CHECK(det == resultant(q1, q2) * resultant(q1, q3) * resultant(q2, q3));
        CHECK(gw_equal(seg, GWClass(f101, {det})));
        ++done;
    }
    // genuinely random quartics over F_p, including extension nodes
    done = 0;
    int attempts = 0;
    while (done < 8 && attempts < 50) {
        ++attempts;
        std::vector<BinaryForm> ps;
        for (int i = 0; i < 3; ++i) {
            std::vector<FieldElement> cs;
            for (int j = 0; j <= 4; ++j)
                cs.push_back(FieldElement::integer(f101, rng.next_in_range(0, 100)));
            ps.emplace_back(f101, 4, std::move(cs));
        }
        std::vector<NodeData> nodes;
        try {
            nodes = quartic_nodes(ps[0], ps[1], ps[2]);
        } catch (const Error&) {
            continue;
        }
        ++done;
        int degsum = 0;
        for (const auto& node : nodes) degsum += node.node_field->degree();
        CHECK(degsum == 3);
    }
    CHECK(done >= 5);
}

TEST_CASE("segre equals local on product instances") {
    SplitMix64 rng(64);
    int done = 0;
    while (done < 50) {
        BinaryForm q1 = random_quadratic(rng, Q(), 6);
        BinaryForm q2 = random_quadratic(rng, Q(), 6);
        BinaryForm q3 = random_quadratic(rng, Q(), 6);
        if (resultant(q1, q2).is_zero() || resultant(q1, q3).is_zero() ||
            resultant(q2, q3).is_zero())
            continue;
        BinaryForm p1 = q2 * q3, p2 = q1 * q3, p3 = q1 * q2;
        GWClass seg(Q());
        try {
            seg = segre_index_n3(p1, p2, p3, Q());
        } catch (const DegenerateError&) {
            continue;
        }
        FieldElement det = index_matrix({p1, p2, p3}).determinant();
        REQUIRE_FALSE(det.is_zero());
        // det A = prod Res(Q_i, Q_j) exactly, per the product construction
        CHECK(det == resultant(q1, q2) * resultant(q1, q3) * resultant(q2, q3));
        CHECK(gw_equal(seg, trace_form(det, Q())));
        ++done;
    }
}

TEST_CASE("index square class is invariant under SL2 x GLn moves") {
    SplitMix64 rng(65);
    int done = 0;
    while (done < 50) {
        int n = 2 + static_cast<int>(rng.next_in_range(0, 1));
        std::vector<BinaryForm> ps;
        for (int i = 0; i < n; ++i) {
            std::vector<FieldElement> cs;
            for (int j = 0; j <= 2 * n - 2; ++j)
                cs.push_back(FieldElement::integer(Q(), rng.next_in_range(-5, 5)));
            ps.emplace_back(Q(), 2 * n - 2, std::move(cs));
        }
        FieldElement det = index_matrix(ps).determinant();
        if (det.is_zero()) continue;
        // SL2 reparameterization of (u, v)
        long a = rng.next_in_range(-3, 3), b = rng.next_in_range(-3, 3);
        long c = rng.next_in_range(-3, 3);
        // choose d with ad - bc = 1 when possible: use unipotent builds
        std::array<std::array<FieldElement, 2>, 2> m{
            {{FieldElement::one(Q()), FieldElement::integer(Q(), a)},
             {FieldElement::zero(Q()), FieldElement::one(Q())}}};
        std::array<std::array<FieldElement, 2>, 2> m2{
            {{FieldElement::one(Q()), FieldElement::zero(Q())},
             {FieldElement::integer(Q(), b), FieldElement::one(Q())}}};
        std::vector<BinaryForm> moved;
        for (const auto& p : ps) moved.push_back(p.compose(m).compose(m2));
        // GLn mix: replace P_1 by P_1 + c P_2
        if (c != 0)
            moved[0] = moved[0] + moved[1].scaled(FieldElement::integer(Q(), c));
        FieldElement det2 = index_matrix(moved).determinant();
        REQUIRE_FALSE(det2.is_zero());
        CHECK(square_class(det) == square_class(det2));
        ++done;
    }
}

TEST_CASE("quintic product fixture end to end") {
    json j = load_json_file(std::string(GWLINES_DATA_DIR) + "/quintic_product.json");
    LineOnHypersurface line = line_from_json(j);
    FieldElement det = local_index_det(line);
    CHECK(det == FieldElement::integer(Q(), -4));
    GWClass cls = local_index(line, Q());
    CHECK(cls.rank() == 1);
    CHECK(cls.diagonal()[0] == FieldElement::integer(Q(), -1));
}

TEST_CASE("degenerate guards") {
    // P1 = P2 makes the line non-simple
    BinaryForm p = bf(Q(), {1, 2, 1});
    MultiPoly f = MultiPoly::zero(Q(), 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j <= 2; ++j) {
            if (p.coeff_desc(j).is_zero()) continue;
            std::vector<int> e(4, 0);
            e[0] = 2 - j;
            e[1] = j;
            e[2 + i] = 1;
            f = f + MultiPoly::monomial(Q(), e, p.coeff_desc(j));
        }
    ExactMatrix span(Q(), 2, 4);
    span.at(0, 0) = FieldElement::one(Q());
    span.at(1, 1) = FieldElement::one(Q());
    CHECK_THROWS_AS(local_index(LineOnHypersurface(2, f, span), Q()), DegenerateError);

    // base point: all three quartics share a root
    BinaryForm shared = bf(Q(), {1, 1, 0});
    CHECK_THROWS_AS(quartic_nodes(shared * bf(Q(), {1, 0, -1}), shared * bf(Q(), {1, 0, 1}),
                                  shared * bf(Q(), {0, 1, 1})),
                    DegenerateError);

    // degree bookkeeping is validated up front
    CHECK_THROWS_AS(LineOnHypersurface(2, fermat_cubic(Q()), ExactMatrix(Q(), 2, 5)),
                    InputError);
    MultiPoly wrong_degree = MultiPoly::variable(Q(), 4, 0) * MultiPoly::variable(Q(), 4, 2);
    CHECK_THROWS_AS(LineOnHypersurface(2, wrong_degree, ExactMatrix(Q(), 2, 4)),
                    InputError);
}
