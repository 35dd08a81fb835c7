#include "gwlines/field.hpp"

#include <algorithm>
#include <sstream>

namespace gwlines {

namespace {

bool is_odd_prime(const mpz_class& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t())) return false;
    return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

// --- base-field scalar helpers -------------------------------------------
// A scalar is an mpq_class: a plain rational over Q, a residue in [0, p)
// with denominator 1 over F_p.

mpq_class sc_reduce(const FieldDescriptor& base, const mpq_class& v) {
    if (base.is_rational()) {
        // rebuild from the numerator/denominator references: a user-made
        // mpq_class(n, d) with d < 0 is not safe to copy before it has been
        // canonicalized, but its two halves are valid integers
        mpq_class r;
        mpz_set(mpq_numref(r.get_mpq_t()), mpq_numref(v.get_mpq_t()));
        mpz_set(mpq_denref(r.get_mpq_t()), mpq_denref(v.get_mpq_t()));
        if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
            throw InputError("zero denominator");
        r.canonicalize();
        return r;
    }
    const mpz_class& p = base.modulus();
    mpz_class num = v.get_num(), den = v.get_den();
    mpz_class dinv;
    den %= p;
    if (den == 0) throw InputError("denominator divisible by modulus");
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw InputError("denominator not invertible mod p");
    mpz_class r = (num % p) * dinv % p;
    if (r < 0) r += p;
    return mpq_class(r);
}

mpq_class sc_add(const FieldDescriptor& base, const mpq_class& a, const mpq_class& b) {
    if (base.is_rational()) return a + b;
    mpz_class r = (a.get_num() + b.get_num()) % base.modulus();
    return mpq_class(r);
}

mpq_class sc_sub(const FieldDescriptor& base, const mpq_class& a, const mpq_class& b) {
    if (base.is_rational()) return a - b;
    mpz_class r = (a.get_num() - b.get_num()) % base.modulus();
    if (r < 0) r += base.modulus();
    return mpq_class(r);
}

mpq_class sc_mul(const FieldDescriptor& base, const mpq_class& a, const mpq_class& b) {
    if (base.is_rational()) return a * b;
    mpz_class r = (a.get_num() * b.get_num()) % base.modulus();
    return mpq_class(r);
}

mpq_class sc_neg(const FieldDescriptor& base, const mpq_class& a) {
    if (base.is_rational()) return -a;
    if (a == 0) return a;
    return mpq_class(base.modulus() - a.get_num());
}

mpq_class sc_inv(const FieldDescriptor& base, const mpq_class& a) {
    if (a == 0) throw InputError("division by zero");
    if (base.is_rational()) return 1 / a;
    mpz_class inv;
    mpz_class num = a.get_num();
    if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), base.modulus().get_mpz_t()) == 0)
        throw InputError("element not invertible mod p");
    return mpq_class(inv);
}

mpq_class sc_div(const FieldDescriptor& base, const mpq_class& a, const mpq_class& b) {
    return sc_mul(base, a, sc_inv(base, b));
}

// Polynomial helpers over base scalars (coefficients ascending).

void poly_trim(std::vector<mpq_class>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::vector<mpq_class> poly_mul(const FieldDescriptor& base,
                                const std::vector<mpq_class>& f,
                                const std::vector<mpq_class>& g) {
    if (f.empty() || g.empty()) return {};
    std::vector<mpq_class> out(f.size() + g.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            out[i + j] = sc_add(base, out[i + j], sc_mul(base, f[i], g[j]));
    return out;
}

// Remainder of f modulo a monic polynomial m.
std::vector<mpq_class> poly_mod_monic(const FieldDescriptor& base,
                                      std::vector<mpq_class> f,
                                      const std::vector<mpq_class>& m) {
    const std::size_t d = m.size() - 1;
    while (f.size() > d) {
        mpq_class lead = f.back();
        std::size_t shift = f.size() - 1 - d;
        if (lead != 0) {
            for (std::size_t i = 0; i < d; ++i)
                f[shift + i] = sc_sub(base, f[shift + i], sc_mul(base, lead, m[i]));
        }
        f.pop_back();
    }
    f.resize(d, mpq_class(0));
    return f;
}

// Extended Euclid: returns g = gcd(f, m) monic together with s with
// s*f == g (mod m). Used for inversion modulo the minimal polynomial.
void poly_ext_gcd(const FieldDescriptor& base,
                  std::vector<mpq_class> r0, std::vector<mpq_class> r1,
                  std::vector<mpq_class>& g, std::vector<mpq_class>& s_out) {
    std::vector<mpq_class> s0{mpq_class(1)}, s1{};
    poly_trim(r0);
    poly_trim(r1);
    while (!r1.empty()) {
        // divide r0 by r1
        std::vector<mpq_class> q;
        std::vector<mpq_class> rem = r0;
        if (rem.size() >= r1.size()) {
            q.assign(rem.size() - r1.size() + 1, mpq_class(0));
            mpq_class linv = sc_inv(base, r1.back());
            for (std::size_t k = rem.size(); k-- >= r1.size();) {
                mpq_class c = sc_mul(base, rem[k], linv);
                q[k - (r1.size() - 1)] = c;
                if (c != 0)
                    for (std::size_t i = 0; i < r1.size(); ++i)
                        rem[k - (r1.size() - 1) + i] =
                            sc_sub(base, rem[k - (r1.size() - 1) + i], sc_mul(base, c, r1[i]));
                if (k == 0) break;
            }
            poly_trim(rem);
        }
        // s2 = s0 - q*s1
        std::vector<mpq_class> qs = poly_mul(base, q, s1);
        std::vector<mpq_class> s2(std::max(s0.size(), qs.size()), mpq_class(0));
        for (std::size_t i = 0; i < s2.size(); ++i) {
            mpq_class a = i < s0.size() ? s0[i] : mpq_class(0);
            mpq_class b = i < qs.size() ? qs[i] : mpq_class(0);
            s2[i] = sc_sub(base, a, b);
        }
        poly_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.empty()) throw InputError("gcd of zero polynomials");
    mpq_class linv = sc_inv(base, r0.back());
    for (auto& c : r0) c = sc_mul(base, c, linv);
    for (auto& c : s0) c = sc_mul(base, c, linv);
    g = std::move(r0);
    s_out = std::move(s0);
}

} // namespace

// --- FieldDescriptor ------------------------------------------------------

FieldDescPtr FieldDescriptor::rationals() {
    static FieldDescPtr q = [] {
        auto d = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
        d->kind_ = FieldKind::Rational;
        return FieldDescPtr(d);
    }();
    return q;
}

FieldDescPtr FieldDescriptor::prime_field(const mpz_class& p) {
    if (!is_odd_prime(p))
        throw InputError("prime-field modulus must be an odd prime >= 3, got " + p.get_str());
    auto d = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
    d->kind_ = FieldKind::Prime;
    d->modulus_ = p;
    return d;
}

FieldDescPtr FieldDescriptor::extension(const FieldDescPtr& base,
                                        const std::vector<mpq_class>& min_poly) {
    if (!base) throw InputError("null base descriptor");
    if (base->is_extension())
        throw InputError("towers of extensions are not supported; "
                         "supply a single minimal polynomial over Q or F_p");
    if (min_poly.size() < 3)
        throw InputError("minimal polynomial must have degree >= 2");
    auto d = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
    d->kind_ = FieldKind::Extension;
    d->base_ = base;
    d->min_poly_.reserve(min_poly.size());
    for (const auto& c : min_poly) d->min_poly_.push_back(sc_reduce(*base, c));
    if (d->min_poly_.back() != 1)
        throw InputError("minimal polynomial must be monic");
    d->degree_ = static_cast<int>(min_poly.size()) - 1;
    return d;
}

const mpz_class& FieldDescriptor::modulus() const {
    if (!is_prime()) throw InputError("modulus() on non-prime field");
    return modulus_;
}

const FieldDescPtr& FieldDescriptor::base() const {
    if (!is_extension()) throw InputError("base() on non-extension field");
    return base_;
}

const std::vector<mpq_class>& FieldDescriptor::min_poly() const {
    if (!is_extension()) throw InputError("min_poly() on non-extension field");
    return min_poly_;
}

bool FieldDescriptor::same(const FieldDescriptor& o) const {
    if (this == &o) return true;
    if (kind_ != o.kind_) return false;
    switch (kind_) {
    case FieldKind::Rational: return true;
    case FieldKind::Prime: return modulus_ == o.modulus_;
    case FieldKind::Extension:
        return base_->same(*o.base_) && min_poly_ == o.min_poly_;
    }
    return false;
}

std::string FieldDescriptor::name() const {
    switch (kind_) {
    case FieldKind::Rational: return "Q";
    case FieldKind::Prime: return "F_" + modulus_.get_str();
    case FieldKind::Extension: {
        std::ostringstream os;
        os << base_->name() << "[z]/(";
        bool first = true;
        for (std::size_t i = min_poly_.size(); i-- > 0;) {
            const mpq_class& c = min_poly_[i];
            if (c == 0) continue;
            if (!first) os << (c < 0 && base_->is_rational() ? " - " : " + ");
            mpq_class a = (!first && c < 0 && base_->is_rational()) ? mpq_class(-c) : c;
            if (i == 0 || a != 1) os << a.get_str();
            if (i >= 1) os << "z";
            if (i >= 2) os << "^" << i;
            first = false;
        }
        os << ")";
        return os.str();
    }
    }
    return "?";
}

bool same_field(const FieldDescPtr& a, const FieldDescPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same(*b);
}

FieldDescPtr base_field(const FieldDescPtr& d) {
    return d->is_extension() ? d->base() : d;
}

FieldDescPtr make_extension(const FieldDescPtr& base,
                            const std::vector<mpq_class>& min_poly) {
    return FieldDescriptor::extension(base, min_poly);
}

// --- FieldElement ---------------------------------------------------------

FieldElement::FieldElement()
    : desc_(FieldDescriptor::rationals()), coords_{mpq_class(0)} {}

FieldElement FieldElement::zero(const FieldDescPtr& d) {
    FieldElement e;
    e.desc_ = d;
    e.coords_.assign(d->degree(), mpq_class(0));
    return e;
}

FieldElement FieldElement::one(const FieldDescPtr& d) {
    FieldElement e = zero(d);
    e.coords_[0] = 1;
    return e;
}

FieldElement FieldElement::constant(const FieldDescPtr& d, const mpq_class& v) {
    FieldElement e = zero(d);
    e.coords_[0] = sc_reduce(*base_field(d), v);
    return e;
}

FieldElement FieldElement::from_coords(const FieldDescPtr& d,
                                       std::vector<mpq_class> coords) {
    if (static_cast<int>(coords.size()) != d->degree())
        throw InputError("coordinate vector length does not match field degree");
    FieldElement e;
    e.desc_ = d;
    e.coords_ = std::move(coords);
    e.normalize();
    return e;
}

FieldElement FieldElement::generator(const FieldDescPtr& d) {
    if (!d->is_extension()) throw InputError("generator() of a non-extension field");
    FieldElement e = zero(d);
    e.coords_[1] = 1;
    return e;
}

FieldElement FieldElement::integer(const FieldDescPtr& d, long v) {
    return constant(d, mpq_class(v));
}

void FieldElement::normalize() {
    const FieldDescriptor& base = *base_field(desc_);
    for (auto& c : coords_) c = sc_reduce(base, c);
}

const mpq_class& FieldElement::rat() const {
    if (desc_->is_extension())
        throw InputError("rat() on an extension-field element");
    return coords_[0];
}

bool FieldElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const mpq_class& c) { return c == 0; });
}

bool FieldElement::is_one() const {
    if (coords_[0] != 1) return false;
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

FieldElement FieldElement::operator-() const {
    const FieldDescriptor& base = *base_field(desc_);
    FieldElement e = *this;
    for (auto& c : e.coords_) c = sc_neg(base, c);
    return e;
}

static void check_same(const FieldElement& a, const FieldElement& b) {
    if (!same_field(a.descriptor(), b.descriptor()))
        throw InputError("field descriptor mismatch: " + a.descriptor()->name() +
                         " vs " + b.descriptor()->name());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(*this, o);
    const FieldDescriptor& base = *base_field(desc_);
    FieldElement e = *this;
    for (std::size_t i = 0; i < coords_.size(); ++i)
        e.coords_[i] = sc_add(base, coords_[i], o.coords_[i]);
    return e;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(*this, o);
    const FieldDescriptor& base = *base_field(desc_);
    FieldElement e = *this;
    for (std::size_t i = 0; i < coords_.size(); ++i)
        e.coords_[i] = sc_sub(base, coords_[i], o.coords_[i]);
    return e;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(*this, o);
    const FieldDescriptor& base = *base_field(desc_);
    if (!desc_->is_extension()) {
        FieldElement e = *this;
        e.coords_[0] = sc_mul(base, coords_[0], o.coords_[0]);
        return e;
    }
    std::vector<mpq_class> prod = poly_mul(base, coords_, o.coords_);
    prod = poly_mod_monic(base, std::move(prod), desc_->min_poly());
    FieldElement e;
    e.desc_ = desc_;
    e.coords_ = std::move(prod);
    return e;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw InputError("inverse of zero");
    const FieldDescriptor& base = *base_field(desc_);
    if (!desc_->is_extension()) {
        FieldElement e = *this;
        e.coords_[0] = sc_inv(base, coords_[0]);
        return e;
    }
    std::vector<mpq_class> g, s;
    poly_ext_gcd(base, coords_, desc_->min_poly(), g, s);
    if (g.size() != 1)
        throw InputError("element not invertible: minimal polynomial is reducible");
    // s * x == g (a unit); rescale so s * x == 1.
    mpq_class ginv = sc_inv(base, g[0]);
    std::vector<mpq_class> inv(desc_->degree(), mpq_class(0));
    for (std::size_t i = 0; i < s.size(); ++i) inv[i] = sc_mul(base, s[i], ginv);
    FieldElement e;
    e.desc_ = desc_;
    e.coords_ = std::move(inv);
    return e;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return *this * o.inverse();
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (!same_field(desc_, o.desc_)) return false;
    return coords_ == o.coords_;
}

FieldElement FieldElement::pow(unsigned long e) const {
    FieldElement acc = FieldElement::one(desc_);
    FieldElement b = *this;
    while (e > 0) {
        if (e & 1UL) acc = acc * b;
        b = b * b;
        e >>= 1UL;
    }
    return acc;
}

FieldElement FieldElement::promote(const FieldDescPtr& target) const {
    if (same_field(desc_, target)) return *this;
    if (target->is_extension() && same_field(desc_, target->base()))
        return FieldElement::constant(target, coords_[0]);
    throw InputError("cannot promote element of " + desc_->name() + " into " +
                     target->name());
}

std::string FieldElement::str() const {
    if (!desc_->is_extension()) return coords_[0].get_str();
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ", ";
        os << coords_[i].get_str();
    }
    os << "]";
    return os.str();
}

// --- trace and norm -------------------------------------------------------

namespace {

// Columns of the multiplication-by-x endomorphism on the power basis.
std::vector<std::vector<mpq_class>> mult_matrix(const FieldElement& x) {
    const FieldDescPtr& d = x.descriptor();
    int deg = d->degree();
    std::vector<std::vector<mpq_class>> cols;
    FieldElement zpow = x;
    for (int j = 0; j < deg; ++j) {
        cols.push_back(zpow.coords());
        if (j + 1 < deg) zpow = zpow * FieldElement::generator(d);
    }
    return cols;
}

// Determinant over the base field by Gaussian elimination with exact
// division (the base is a field, so any nonzero pivot works).
mpq_class base_det(const FieldDescriptor& base,
                   std::vector<std::vector<mpq_class>> m) {
    const std::size_t n = m.size();
    mpq_class det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return mpq_class(0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = sc_neg(base, det);
        }
        det = sc_mul(base, det, m[k][k]);
        mpq_class pinv = sc_inv(base, m[k][k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            mpq_class f = sc_mul(base, m[i][k], pinv);
            for (std::size_t j = k; j < n; ++j)
                m[i][j] = sc_sub(base, m[i][j], sc_mul(base, f, m[k][j]));
        }
    }
    return det;
}

} // namespace

FieldElement field_trace(const FieldElement& x) {
    const FieldDescPtr& d = x.descriptor();
    if (!d->is_extension())
        throw InputError("field_trace: element does not live in an extension");
    const FieldDescriptor& base = *d->base();
    auto cols = mult_matrix(x);
    mpq_class tr(0);
    for (std::size_t j = 0; j < cols.size(); ++j) tr = sc_add(base, tr, cols[j][j]);
    return FieldElement::constant(d->base(), tr);
}

FieldElement field_norm(const FieldElement& x) {
    const FieldDescPtr& d = x.descriptor();
    if (!d->is_extension())
        throw InputError("field_norm: element does not live in an extension");
    const FieldDescriptor& base = *d->base();
    auto cols = mult_matrix(x);
    // transpose columns into rows; determinant is transpose-invariant
    std::vector<std::vector<mpq_class>> rows(cols.size(),
                                             std::vector<mpq_class>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < cols.size(); ++i) rows[i][j] = cols[j][i];
    return FieldElement::constant(d->base(), base_det(base, std::move(rows)));
}

// --- square classes -------------------------------------------------------

namespace {

constexpr unsigned long kTrialBound = 1000000UL;
constexpr unsigned long kRhoBudget = 2000000UL;

mpz_class pollard_rho(const mpz_class& n, unsigned long& budget) {
    // Brent's variant with deterministic parameter sweep.
    for (unsigned long c = 1;; ++c) {
        mpz_class x(2), y(2), d(1);
        mpz_class diff, two_to_256;
        mpz_ui_pow_ui(two_to_256.get_mpz_t(), 2, 256);
        if (n > two_to_256)
            throw BudgetError("factorization budget exceeded: operand above 2^256");
        while (d == 1) {
            if (budget-- == 0)
                throw BudgetError("factorization budget exceeded (Pollard rho)");
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            diff = x - y;
            if (diff < 0) diff = -diff;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

// Multiply the squarefree accumulator by the squarefree part of n.
void squarefree_accumulate(mpz_class n, mpz_class& acc, unsigned long& budget) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        acc *= n;
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) return; // even exponents throughout
    mpz_class d = pollard_rho(n, budget);
    mpz_class q = n / d;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), q.get_mpz_t());
    if (g == 1) {
        squarefree_accumulate(d, acc, budget);
        squarefree_accumulate(q, acc, budget);
    } else {
        // d and q share the factors of g; strip g^2 and continue
        squarefree_accumulate(n / (g * g), acc, budget);
    }
}

} // namespace

mpz_class squarefree_part(const mpz_class& n) {
    if (n == 0) throw InputError("squarefree part of zero");
    mpz_class m = abs(n);
    mpz_class acc(1);
    // trial division first
    for (unsigned long p = 2; p <= kTrialBound && m > 1; p += (p == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            int e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
                m /= static_cast<long>(p);
                ++e;
            }
            if (e % 2 == 1) acc *= static_cast<long>(p);
        }
        if (mpz_class(p) * p > m) break;
    }
    if (m > 1) {
        if (mpz_class(kTrialBound) * kTrialBound > m) {
            acc *= m; // remaining cofactor must be prime
        } else {
            unsigned long budget = kRhoBudget;
            squarefree_accumulate(m, acc, budget);
        }
    }
    return n < 0 ? mpz_class(-acc) : acc;
}

mpz_class mod_pow(mpz_class base, mpz_class exp, const mpz_class& p) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
    return r;
}

int legendre_symbol(const mpz_class& a, const mpz_class& p) {
    mpz_class r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    mpz_class e = (p - 1) / 2;
    mpz_class s = mod_pow(r, e, p);
    return s == 1 ? 1 : -1;
}

bool mod_sqrt(const mpz_class& a, const mpz_class& p, mpz_class& out) {
    mpz_class r = a % p;
    if (r < 0) r += p;
    if (r == 0) {
        out = 0;
        return true;
    }
    if (legendre_symbol(r, p) != 1) return false;
    // Tonelli-Shanks
    mpz_class q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    if (s == 1) {
        out = mod_pow(r, (p + 1) / 4, p);
        return true;
    }
    mpz_class z(2);
    while (legendre_symbol(z, p) != -1) ++z;
    mpz_class m(s), c = mod_pow(z, q, p), t = mod_pow(r, q, p),
              x = mod_pow(r, (q + 1) / 2, p);
    while (t != 1) {
        mpz_class tt = t;
        unsigned long i = 0;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        mpz_class b = c;
        for (mpz_class j = 0; j < m - i - 1; ++j) b = b * b % p;
        x = x * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    out = x;
    return true;
}

bool rational_sqrt(const mpq_class& x, mpq_class& out) {
    if (x < 0) return false;
    if (x == 0) {
        out = 0;
        return true;
    }
    const mpz_class &num = x.get_num(), &den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) ||
        !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    out = mpq_class(rn) / mpq_class(rd);
    return true;
}

FieldElement square_class(const FieldElement& x) {
    if (x.is_zero()) throw InputError("square class of zero");
    const FieldDescPtr& d = x.descriptor();
    if (d->is_rational()) {
        const mpq_class& v = x.rat();
        mpz_class n = v.get_num() * v.get_den();
        return FieldElement::constant(d, mpq_class(squarefree_part(n)));
    }
    if (d->is_prime()) {
        if (legendre_symbol(x.rat().get_num(), d->modulus()) == 1)
            return FieldElement::one(d);
        mpz_class nr(2);
        while (legendre_symbol(nr, d->modulus()) != -1) ++nr;
        return FieldElement::constant(d, mpq_class(nr));
    }
    throw InputError("square_class is not canonical over extension fields; "
                     "use is_square_in_field");
}

namespace {

bool is_square_base(const FieldDescPtr& d, const mpq_class& v) {
    if (v == 0) return true;
    if (d->is_rational()) {
        mpq_class r;
        return rational_sqrt(v, r);
    }
    return legendre_symbol(v.get_num(), d->modulus()) == 1;
}

bool sqrt_base(const FieldDescPtr& d, const mpq_class& v, mpq_class& out) {
    if (d->is_rational()) return rational_sqrt(v, out);
    mpz_class r;
    if (!mod_sqrt(v.get_num(), d->modulus(), r)) return false;
    out = mpq_class(r);
    return true;
}

} // namespace

bool is_square_in_field(const FieldElement& x) {
    if (x.is_zero()) throw InputError("square test of zero");
    const FieldDescPtr& d = x.descriptor();
    if (!d->is_extension()) return is_square_base(d, x.rat());
    if (d->degree() != 2)
        throw InputError("is_square_in_field supports extensions of degree 2 only");
    const FieldDescPtr& k = d->base();
    const FieldDescriptor& base = *k;
    // minimal polynomial z^2 + b z + c; z = (-b + sqrt(D))/2, D = b^2 - 4c
    const mpq_class& b = d->min_poly()[0 + 1];
    const mpq_class& c = d->min_poly()[0];
    mpq_class D = sc_sub(base, sc_mul(base, b, b),
                         sc_mul(base, mpq_class(4), c));
    D = sc_reduce(base, D);
    // x = x0 + x1 z = A + B sqrt(D)
    mpq_class x0 = x.coords()[0], x1 = x.coords()[1];
    mpq_class A = sc_sub(base, x0, sc_div(base, sc_mul(base, x1, b), mpq_class(2)));
    mpq_class B = sc_div(base, x1, mpq_class(2));
    if (B == 0) {
        // x lies in the base: square iff A or A/D is a base square
        if (is_square_base(k, A)) return true;
        return is_square_base(k, sc_div(base, A, D));
    }
    // (u + v sqrt(D))^2 = x requires u^2, Dv^2 to be the roots of
    // t^2 - A t + D (B/2)^2, so A^2 - D B^2 must be a base square.
    mpq_class N = sc_sub(base, sc_mul(base, A, A), sc_mul(base, D, sc_mul(base, B, B)));
    mpq_class n;
    if (!sqrt_base(k, sc_reduce(base, N), n)) return false;
    for (int sign = 0; sign < 2; ++sign) {
        mpq_class u2 = sc_div(base, sc_add(base, A, sign ? sc_neg(base, n) : n),
                              mpq_class(2));
        mpq_class u;
        if (sqrt_base(k, sc_reduce(base, u2), u) && u != 0) return true;
    }
    return false;
}

} // namespace gwlines
