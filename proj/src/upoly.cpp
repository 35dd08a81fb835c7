#include "gwlines/upoly.hpp"

#include <algorithm>

namespace gwlines {
namespace upoly {

void trim(Poly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Poly& f, const Poly& g) {
    Poly r = f.size() >= g.size() ? f : g;
    const Poly& s = f.size() >= g.size() ? g : f;
    for (std::size_t i = 0; i < s.size(); ++i) r[i] += s[i];
    trim(r);
    return r;
}

Poly sub(const Poly& f, const Poly& g) {
    Poly ng = g;
    for (auto& c : ng) c = -c;
    return add(f, ng);
}

Poly mul(const Poly& f, const Poly& g) {
    if (f.empty() || g.empty()) return {};
    Poly r(f.size() + g.size() - 1, FieldElement::zero(f[0].descriptor()));
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i].is_zero()) continue;
        for (std::size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
    }
    trim(r);
    return r;
}

Poly scale(const Poly& f, const FieldElement& c) {
    Poly r = f;
    for (auto& x : r) x = x * c;
    trim(r);
    return r;
}

void divmod(const Poly& f, const Poly& g, Poly& quot, Poly& rem) {
    if (g.empty()) throw InputError("division by the zero polynomial");
    rem = f;
    trim(rem);
    if (rem.size() < g.size()) {
        quot.clear();
        return;
    }
    quot.assign(rem.size() - g.size() + 1, FieldElement::zero(g[0].descriptor()));
    FieldElement linv = g.back().inverse();
    while (rem.size() >= g.size()) {
        FieldElement c = rem.back() * linv;
        std::size_t shift = rem.size() - g.size();
        quot[shift] = c;
        if (!c.is_zero())
            for (std::size_t i = 0; i < g.size(); ++i) rem[shift + i] -= c * g[i];
        rem.pop_back();
        while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    }
}

Poly monic(Poly f) {
    trim(f);
    if (f.empty()) return f;
    FieldElement linv = f.back().inverse();
    for (auto& c : f) c = c * linv;
    return f;
}

Poly gcd_monic(Poly f, Poly g) {
    trim(f);
    trim(g);
    while (!g.empty()) {
        Poly q, r;
        divmod(f, g, q, r);
        f = std::move(g);
        g = std::move(r);
    }
    return monic(std::move(f));
}

Poly derivative(const Poly& f) {
    if (f.size() <= 1) return {};
    Poly r;
    r.reserve(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i)
        r.push_back(f[i] * FieldElement::integer(f[i].descriptor(), static_cast<long>(i)));
    trim(r);
    return r;
}

FieldElement eval(const Poly& f, const FieldElement& x) {
    FieldElement acc = FieldElement::zero(x.descriptor());
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

Poly pow_mod(Poly base, mpz_class e, const Poly& m) {
    if (m.empty()) throw InputError("pow_mod by zero modulus");
    const FieldDescPtr& d = m[0].descriptor();
    Poly acc{FieldElement::one(d)};
    Poly q, r;
    divmod(base, m, q, base);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) {
            acc = mul(acc, base);
            divmod(acc, m, q, acc);
        }
        base = mul(base, base);
        divmod(base, m, q, base);
        e /= 2;
    }
    return acc;
}

} // namespace upoly

namespace {

using upoly::Poly;

// ---- rational real-root extraction (degree <= 3) -------------------------

int sign_of(const mpq_class& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

mpq_class eval_q(const std::vector<mpq_class>& f, const mpq_class& x) {
    mpq_class acc(0);
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

// Approximate all real roots of a squarefree rational polynomial to within
// 2^-prec, recursively separating by the critical points.
std::vector<mpq_class> approx_real_roots(const std::vector<mpq_class>& f, long prec) {
    const int deg = static_cast<int>(f.size()) - 1;
    std::vector<mpq_class> roots;
    if (deg < 1) return roots;
    if (deg == 1) {
        roots.push_back(-f[0] / f[1]);
        return roots;
    }
    // derivative
    std::vector<mpq_class> df;
    for (int i = 1; i <= deg; ++i) df.push_back(f[i] * i);
    std::vector<mpq_class> breaks = approx_real_roots(df, prec + 8);
    // Cauchy bound
    mpq_class bound(1);
    for (int i = 0; i < deg; ++i) {
        mpq_class t = abs(f[i] / f[deg]);
        if (t > bound) bound = t;
    }
    bound += 1;
    breaks.insert(breaks.begin(), -bound);
    breaks.push_back(bound);
    std::sort(breaks.begin(), breaks.end());
    mpq_class eps = mpq_class(1) / (mpz_class(1) << static_cast<unsigned long>(prec));
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        mpq_class a = breaks[k], b = breaks[k + 1];
        if (!(a < b)) continue;
        mpq_class fa = eval_q(f, a), fb = eval_q(f, b);
        if (fa == 0) {
            if (roots.empty() || roots.back() != a) roots.push_back(a);
            continue;
        }
        if (fb == 0) continue; // picked up as the left endpoint of the next interval
        if (sign_of(fa) * sign_of(fb) > 0) continue;
        while (b - a > eps) {
            mpq_class mid = (a + b) / 2;
            mpq_class fm = eval_q(f, mid);
            if (fm == 0) {
                a = mid;
                b = mid;
                break;
            }
            if (sign_of(fm) == sign_of(fa)) {
                a = mid;
                fa = fm;
            } else {
                b = mid;
            }
        }
        roots.push_back((a + b) / 2);
    }
    return roots;
}

// Best rational approximations of x by continued fractions, denominators
// bounded by qmax.
std::vector<mpq_class> convergents(mpq_class x, const mpz_class& qmax) {
    std::vector<mpq_class> out;
    mpz_class p0(1), q0(0), p1, q1(1);
    mpz_fdiv_q(p1.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    mpq_class frac = x - mpq_class(p1);
    out.push_back(mpq_class(p1));
    while (frac != 0 && q1 <= qmax && out.size() < 128) {
        mpq_class inv = 1 / frac;
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), inv.get_num().get_mpz_t(), inv.get_den().get_mpz_t());
        frac = inv - mpq_class(a);
        mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > qmax) break;
        out.emplace_back(p2);
        out.back() /= mpq_class(q2);
        out.back().canonicalize();
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    return out;
}

std::vector<FieldElement> rational_roots_deg3(const Poly& f, const FieldDescPtr& d) {
    // exact coefficients as rationals, made primitive-integer
    std::vector<mpq_class> c;
    for (const auto& x : f) c.push_back(x.rat());
    mpz_class den(1);
    for (const auto& x : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<mpz_class> ci;
    mpz_class content(0);
    for (const auto& x : c) {
        mpq_class v = x * den;
        ci.push_back(v.get_num());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ci.back().get_mpz_t());
    }
    if (content > 1)
        for (auto& x : ci) x /= content;
    std::vector<mpq_class> prim(ci.begin(), ci.end());

    // squarefree part for clean sign-change isolation
    std::vector<mpq_class> dprim;
    for (std::size_t i = 1; i < prim.size(); ++i) dprim.push_back(prim[i] * static_cast<long>(i));
    // gcd over Q via the generic field machinery
    Poly pf, pdf;
    for (const auto& x : prim) pf.push_back(FieldElement::constant(d, x));
    for (const auto& x : dprim) pdf.push_back(FieldElement::constant(d, x));
    upoly::trim(pf);
    upoly::trim(pdf);
    Poly g = upoly::gcd_monic(pf, pdf);
    Poly sf = pf;
    if (upoly::degree(g) > 0) {
        Poly q, r;
        upoly::divmod(pf, g, q, r);
        sf = q;
    }
    std::vector<mpq_class> sfq;
    for (const auto& x : sf) sfq.push_back(x.rat());

    // precision: Mahler-style margin for degree <= 3
    std::size_t maxbits = 1;
    for (const auto& x : sfq) {
        maxbits = std::max(maxbits, mpz_sizeinbase(x.get_num().get_mpz_t(), 2));
        maxbits = std::max(maxbits, mpz_sizeinbase(x.get_den().get_mpz_t(), 2));
    }
    long prec = static_cast<long>(4 * maxbits + 64);
    // a rational root p/q in lowest terms has q dividing the integer
    // leading coefficient of the primitive polynomial
    mpz_class qmax = abs(ci.back()) + 1;

    std::vector<FieldElement> roots;
    // a convergent is accepted only when it vanishes exactly AND sits inside
    // the isolation radius: other rational roots of the same polynomial can
    // appear among the convergents of an unrelated approximation
    mpq_class radius = mpq_class(16) / (mpz_class(1) << static_cast<unsigned long>(prec));
    for (const auto& approx : approx_real_roots(sfq, prec)) {
        for (const auto& cand : convergents(approx, qmax)) {
            if (abs(cand - approx) >= radius) continue;
            if (eval_q(sfq, cand) == 0) {
                FieldElement r = FieldElement::constant(d, cand);
                bool seen = false;
                for (const auto& have : roots)
                    if (have == r) seen = true;
                if (!seen) roots.push_back(r);
                break;
            }
        }
    }
    return roots;
}

// ---- prime-field root extraction (degree <= 3) ----------------------------

void collect_fp_roots(const Poly& g, const FieldDescPtr& d,
                      std::vector<FieldElement>& out);

// g is a squarefree product of distinct linear factors; split it.
void split_linear_product(const Poly& g, const FieldDescPtr& d,
                          std::vector<FieldElement>& out) {
    int deg = upoly::degree(g);
    if (deg <= 0) return;
    if (deg == 1) {
        out.push_back(-(g[0] / g[1]));
        return;
    }
    if (deg == 2) {
        // quadratic formula
        FieldElement a = g[2], b = g[1], c = g[0];
        FieldElement disc = b * b - FieldElement::integer(d, 4) * a * c;
        mpz_class s;
        if (!mod_sqrt(disc.rat().get_num(), d->modulus(), s))
            throw Error("internal: linear product with non-square discriminant");
        FieldElement sq = FieldElement::constant(d, mpq_class(s));
        FieldElement two_a = FieldElement::integer(d, 2) * a;
        out.push_back((-b + sq) / two_a);
        out.push_back((-b - sq) / two_a);
        return;
    }
    // deg == 3: peel a factor with gcd((x+a)^{(p-1)/2} - 1, g)
    const mpz_class& p = d->modulus();
    for (long shift = 0;; ++shift) {
        Poly x_plus_a{FieldElement::integer(d, shift), FieldElement::one(d)};
        Poly w = upoly::pow_mod(x_plus_a, (p - 1) / 2, g);
        w = upoly::sub(w, Poly{FieldElement::one(d)});
        Poly h = upoly::gcd_monic(w, g);
        int dh = upoly::degree(h);
        if (dh > 0 && dh < deg) {
            split_linear_product(h, d, out);
            Poly q, r;
            upoly::divmod(g, h, q, r);
            split_linear_product(q, d, out);
            return;
        }
        if (shift > 200)
            throw Error("internal: failed to split linear product over F_p");
    }
}

void collect_fp_roots(const Poly& f, const FieldDescPtr& d,
                      std::vector<FieldElement>& out) {
    // distinct roots = roots of gcd(x^p - x, f)
    const mpz_class& p = d->modulus();
    Poly x{FieldElement::zero(d), FieldElement::one(d)};
    Poly xp = upoly::pow_mod(x, p, f);
    Poly g = upoly::gcd_monic(upoly::sub(xp, x), f);
    split_linear_product(g, d, out);
}

} // namespace

std::vector<FieldElement> field_roots_deg3(const upoly::Poly& f, const FieldDescPtr& d) {
    Poly g = f;
    upoly::trim(g);
    if (upoly::degree(g) > 3) throw InputError("field_roots_deg3: degree exceeds 3");
    if (upoly::degree(g) < 1) return {};
    if (d->is_rational()) return rational_roots_deg3(g, d);
    if (d->is_prime()) {
        std::vector<FieldElement> out;
        collect_fp_roots(g, d, out);
        return out;
    }
    throw InputError("field_roots_deg3 supports Q and F_p coefficients");
}

} // namespace gwlines
