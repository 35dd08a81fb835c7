#include <doctest.h>

#include "gwlines/gw.hpp"
#include "gwlines/rng.hpp"

using namespace gwlines;

namespace {

FieldDescPtr Q() { return FieldDescriptor::rationals(); }
FieldDescPtr Fp(long p) { return FieldDescriptor::prime_field(mpz_class(p)); }

GWClass diag(const FieldDescPtr& d, const std::vector<long>& entries) {
    std::vector<FieldElement> es;
    for (long e : entries) es.push_back(FieldElement::integer(d, e));
    return GWClass(d, std::move(es));
}

} // namespace

TEST_CASE("ring operations and the hyperbolic form") {
    GWClass h = gw_add(diag(Q(), {1}), diag(Q(), {-1}));
    GWInvariants hi = gw_invariants(h);
    CHECK(hi.rank == 2);
    CHECK(hi.signature == 0);
    CHECK(hi.discriminant == 1); // signed: (-1)^1 * (-1) = 1
    CHECK(gw_equal(h, hyperbolic(Q(), 1)));

    // <2><2> = <4> = <1>
    CHECK(gw_equal(gw_mul(diag(Q(), {2}), diag(Q(), {2})), diag(Q(), {1})));

    // <3> H = H: the hyperbolic class absorbs rank-1 factors
    CHECK(gw_equal(gw_mul(diag(Q(), {3}), h), h));

    GWClass big = hyperbolic(Q(), 1430);
    CHECK(big.rank() == 2860);
    CHECK(gw_invariants(big).signature == 0);

    CHECK_THROWS_AS(hyperbolic(Q(), -1), InputError);
    CHECK_THROWS_AS(gw_add(diag(Q(), {1}), diag(Fp(5), {1})), InputError);
    CHECK_THROWS_AS(diag(Q(), {0, 1}), InputError); // degenerate entries rejected
}

TEST_CASE("ring laws on random classes") {
    SplitMix64 rng(3);
    auto random_class = [&](const FieldDescPtr& d, long pmax) {
        std::vector<FieldElement> es;
        int r = static_cast<int>(rng.next_in_range(1, 3));
        while (static_cast<int>(es.size()) < r) {
            FieldElement v = FieldElement::integer(d, rng.next_in_range(-pmax, pmax));
            if (!v.is_zero()) es.push_back(std::move(v)); // 7 = 0 in F_7
        }
        return GWClass(d, std::move(es));
    };
    for (auto d : {Q(), Fp(7)}) {
        for (int t = 0; t < 12; ++t) {
            GWClass a = random_class(d, 10), b = random_class(d, 10), c = random_class(d, 10);
            CHECK(gw_equal(gw_add(a, b), gw_add(b, a)));
            CHECK(gw_equal(gw_add(gw_add(a, b), c), gw_add(a, gw_add(b, c))));
            CHECK(gw_equal(gw_mul(a, gw_add(b, c)), gw_add(gw_mul(a, b), gw_mul(a, c))));
            CHECK(gw_equal(gw_mul(a, b), gw_mul(b, a)));
        }
    }
    // <a> + <-a> is hyperbolic for every nonzero a
    for (long a : {1L, 2L, 3L, 5L, 6L, 30L, -7L}) {
        CHECK(gw_equal(diag(Q(), {a, -a}), hyperbolic(Q(), 1)));
    }
}

TEST_CASE("trace forms") {
    // degree-1 extension: identity
    CHECK(gw_equal(trace_form(FieldElement::integer(Q(), 5), Q()), diag(Q(), {5})));

    // Tr_{Q(i)/Q}<1> has Gram diag(2, -2), the hyperbolic class
    auto qi = make_extension(Q(), {1, 0, 1});
    GWClass ti = trace_form(FieldElement::one(qi), Q());
    CHECK(ti.rank() == 2);
    CHECK(gw_equal(ti, hyperbolic(Q(), 1)));

    // Tr_{Q(omega)/Q}<1>: Gram [[2, -1], [-1, -1]], rank 2, disc class -3
    auto qw = make_extension(Q(), {1, 1, 1});
    GWClass tw = trace_form(FieldElement::one(qw), Q());
    CHECK(tw.rank() == 2);
    GWInvariants twi = gw_invariants(tw);
    CHECK(twi.signature == 0);
    // unsigned determinant class -3; signed discriminant flips the sign
    CHECK(twi.discriminant == 3);

    CHECK_THROWS_AS(trace_form(FieldElement::zero(qi), Q()), InputError);
}

TEST_CASE("trace form rank equals the extension degree") {
    // cubic extension of Q
    auto cubic = make_extension(Q(), {1, -1, 0, 1}); // z^3 - z + 1
    FieldElement z = FieldElement::generator(cubic);
    GWClass t3 = trace_form(FieldElement::one(cubic) + z, Q());
    CHECK(t3.rank() == 3);
    CHECK(gw_invariants(t3).rank == 3);

    // quadratic extension of F_5 by a non-residue
    auto f25 = make_extension(Fp(5), {-2, 0, 1}); // z^2 - 2
    GWClass t2 = trace_form(FieldElement::generator(f25) + FieldElement::one(f25), Fp(5));
    CHECK(t2.rank() == 2);

    SplitMix64 rng(31);
    for (int t = 0; t < 10; ++t) {
        std::vector<mpq_class> c{mpq_class(rng.next_in_range(-9, 9)),
                                 mpq_class(rng.next_in_range(-9, 9)),
                                 mpq_class(rng.next_in_range(-9, 9))};
        FieldElement alpha = FieldElement::from_coords(cubic, c);
        if (alpha.is_zero()) continue;
        CHECK(trace_form(alpha, Q()).rank() == 3);
    }
}

TEST_CASE("trace form discriminant closed form over quadratic fields") {
    // L = Q(sqrt(d)): det Gram(alpha) = 4 d N(alpha), so the signed
    // discriminant class is -d N(alpha)
    SplitMix64 rng(8);
    for (long d : {2L, 3L, -1L, -5L, 7L}) {
        auto l = make_extension(Q(), {-d, 0, 1}); // z^2 - d
        for (int t = 0; t < 10; ++t) {
            FieldElement alpha = FieldElement::from_coords(
                l, {mpq_class(rng.next_in_range(-6, 6)), mpq_class(rng.next_in_range(-6, 6))});
            if (alpha.is_zero()) continue;
            GWClass tf = trace_form(alpha, Q());
            CHECK(tf.rank() == 2);
            FieldElement want = FieldElement::integer(Q(), -d) * field_norm(alpha);
            CHECK(gw_invariants(tf).discriminant == square_class(want).rat().get_num());
        }
    }
}

TEST_CASE("hilbert symbols") {
    // (1, b)_p = 1 always
    for (long b : {2L, -3L, 5L, 30L})
        for (long p : {2L, 3L, 5L, 7L, 11L})
            CHECK(hilbert_symbol(mpq_class(1), mpq_class(b), mpz_class(p)) == 1);
    CHECK(hilbert_symbol(mpq_class(-1), mpq_class(-1), mpz_class(2)) == -1);
    CHECK(hilbert_symbol(mpq_class(-1), mpq_class(-1), std::string("real")) == -1);
    CHECK(hilbert_symbol(mpq_class(2), mpq_class(-1), std::string("real")) == 1);
    CHECK_THROWS_AS(hilbert_symbol(mpq_class(0), mpq_class(1), mpz_class(3)), InputError);
    CHECK_THROWS_AS(hilbert_symbol(mpq_class(1), mpq_class(1), mpz_class(6)), InputError);

    // bilinearity at an odd prime: (a, b c)_p = (a, b)_p (a, c)_p
    SplitMix64 rng(21);
    for (int t = 0; t < 50; ++t) {
        long a = 0, b = 0, c = 0;
        while (a == 0) a = rng.next_in_range(-30, 30);
        while (b == 0) b = rng.next_in_range(-30, 30);
        while (c == 0) c = rng.next_in_range(-30, 30);
        for (long p : {2L, 3L, 5L, 7L}) {
            CHECK(hilbert_symbol(mpq_class(a), mpq_class(b) * mpq_class(c), mpz_class(p)) ==
                  hilbert_symbol(mpq_class(a), mpq_class(b), mpz_class(p)) *
                      hilbert_symbol(mpq_class(a), mpq_class(c), mpz_class(p)));
        }
    }
}

TEST_CASE("hilbert reciprocity") {
    SplitMix64 rng(22);
    for (int t = 0; t < 50; ++t) {
        long a = 0, b = 0;
        while (a == 0) a = rng.next_in_range(-50, 50);
        while (b == 0) b = rng.next_in_range(-50, 50);
        int prod = hilbert_symbol(mpq_class(a), mpq_class(b), std::string("real"));
        prod *= hilbert_symbol(mpq_class(a), mpq_class(b), mpz_class(2));
        for (long p = 3; p <= 53; p += 2) {
            if (mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 30) == 0) continue;
            prod *= hilbert_symbol(mpq_class(a), mpq_class(b), mpz_class(p));
        }
        CHECK(prod == 1); // |a|, |b| <= 50, so all relevant places are covered
    }
}

TEST_CASE("gw_invariants") {
    GWInvariants i1 = gw_invariants(diag(Q(), {1, -1}));
    CHECK(i1.rank == 2);
    CHECK(i1.signature == 0);
    CHECK(i1.discriminant == 1);

    // 15<1> + 12<-1>: rank 27, signature 3
    std::vector<long> entries(15, 1);
    entries.insert(entries.end(), 12, -1);
    GWInvariants i2 = gw_invariants(diag(Q(), entries));
    CHECK(i2.rank == 27);
    CHECK(i2.signature == 3);

    GWInvariants i3 = gw_invariants(diag(Fp(5), {3}));
    CHECK(i3.rank == 1);
    CHECK(i3.discriminant == 2); // 3 is a non-residue mod 5; canonical rep is 2

    auto qi = make_extension(Q(), {1, 0, 1});
    CHECK_THROWS_AS(gw_invariants(GWClass(qi, {FieldElement::one(qi)})), InputError);
}

TEST_CASE("gw_equal") {
    CHECK(gw_equal(diag(Q(), {2, -2}), diag(Q(), {1, -1})));
    CHECK_FALSE(gw_equal(diag(Q(), {1, 1}), diag(Q(), {1, -1})));
    CHECK(gw_equal(diag(Fp(5), {1, 1}), diag(Fp(5), {2, 2}))); // disc 4 ~ 1
    CHECK_FALSE(gw_equal(diag(Fp(5), {1}), diag(Fp(5), {2})));
    // 3x^2 + 5y^2 represents 8, so <3, 5> = <8, 3*5*8> = <2, 30>
    CHECK(gw_equal(diag(Q(), {3, 5}), diag(Q(), {2, 30})));
    CHECK_FALSE(gw_equal(diag(Q(), {3, 5}), diag(Q(), {15, 1}))); // Hasse at 3
    CHECK_FALSE(gw_equal(diag(Q(), {3, 5}), diag(Q(), {1, 15}))); // same, swapped
    // sums of two squares represent 2 but never 3: <1,1> = <2,2> != <3,3>,
    // distinguished only by the Hasse symbol at 3
    CHECK(gw_equal(diag(Q(), {1, 1}), diag(Q(), {2, 2})));
    CHECK_FALSE(gw_equal(diag(Q(), {1, 1}), diag(Q(), {3, 3})));
}
