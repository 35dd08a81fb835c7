#include "gwlines/gw.hpp"

#include <algorithm>
#include <sstream>

#include "gwlines/matrix.hpp"

namespace gwlines {

namespace {

FieldElement reduce_entry(const FieldDescPtr& base, const FieldElement& a) {
    if (a.is_zero()) throw InputError("GW diagonal entries must be nonzero");
    if (base->is_rational() || base->is_prime()) return square_class(a);
    return a;
}

} // namespace

GWClass::GWClass(const FieldDescPtr& base) : base_(base) {}

GWClass::GWClass(const FieldDescPtr& base, std::vector<FieldElement> diagonal)
    : base_(base) {
    diag_.reserve(diagonal.size());
    for (auto& a : diagonal) {
        if (!same_field(a.descriptor(), base))
            throw InputError("GW diagonal entry over the wrong field");
        diag_.push_back(reduce_entry(base, a));
    }
}

std::string GWClass::str() const {
    if (diag_.empty()) return "0";
    // canonical a<1> + b<-1> rendering when the class is equivalent to a
    // +-1 diagonal, else the diagonal list
    if (base_->is_rational()) {
        GWInvariants inv = gw_invariants(*this);
        long pos = (inv.rank + inv.signature) / 2;
        long neg = (inv.rank - inv.signature) / 2;
        GWClass pm(base_);
        for (long i = 0; i < pos; ++i)
            pm.diag_.push_back(FieldElement::integer(base_, 1));
        for (long i = 0; i < neg; ++i)
            pm.diag_.push_back(FieldElement::integer(base_, -1));
        if (gw_equal(*this, pm)) {
            std::ostringstream os;
            if (pos > 0) os << pos << "<1>";
            if (neg > 0) {
                if (pos > 0) os << " + ";
                os << neg << "<-1>";
            }
            if (pos == 0 && neg == 0) os << "0";
            return os.str();
        }
    }
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < diag_.size(); ++i) {
        if (i) os << ", ";
        os << diag_[i].str();
    }
    os << ">";
    return os.str();
}

GWClass gw_add(const GWClass& a, const GWClass& b) {
    if (!same_field(a.base(), b.base())) throw InputError("GW base mismatch in sum");
    std::vector<FieldElement> d = a.diagonal();
    d.insert(d.end(), b.diagonal().begin(), b.diagonal().end());
    return GWClass(a.base(), std::move(d));
}

GWClass gw_mul(const GWClass& a, const GWClass& b) {
    if (!same_field(a.base(), b.base())) throw InputError("GW base mismatch in product");
    std::vector<FieldElement> d;
    d.reserve(a.diagonal().size() * b.diagonal().size());
    for (const auto& x : a.diagonal())
        for (const auto& y : b.diagonal()) d.push_back(x * y);
    return GWClass(a.base(), std::move(d));
}

GWClass hyperbolic(const FieldDescPtr& base, long m) {
    if (m < 0)
        throw InputError("hyperbolic(m) needs m >= 0; virtual classes are "
                         "reported as formal differences only");
    std::vector<FieldElement> d;
    d.reserve(2 * m);
    for (long i = 0; i < m; ++i) {
        d.push_back(FieldElement::integer(base, 1));
        d.push_back(FieldElement::integer(base, -1));
    }
    return GWClass(base, std::move(d));
}

GWClass trace_form(const FieldElement& alpha, const FieldDescPtr& ground) {
    if (alpha.is_zero()) throw InputError("trace form of zero");
    const FieldDescPtr& L = alpha.descriptor();
    if (same_field(L, ground)) return GWClass(ground, {alpha});
    if (!L->is_extension() || !same_field(L->base(), ground))
        throw InputError("trace_form: " + L->name() + " is not an extension of " +
                         ground->name());
    const int d = L->degree();
    // Gram matrix of (x, y) -> Tr(alpha x y) on 1, z, ..., z^{d-1}
    ExactMatrix gram(ground, d, d);
    std::vector<FieldElement> zpow;
    FieldElement z = FieldElement::generator(L);
    FieldElement cur = FieldElement::one(L);
    for (int i = 0; i < 2 * d - 1; ++i) {
        zpow.push_back(cur);
        cur = cur * z;
    }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            gram.at(i, j) = field_trace(alpha * zpow[i + j]);
    // symmetric diagonalization by congruence
    ExactMatrix m = gram;
    std::vector<FieldElement> diag;
    const int n = d;
    for (int k = 0; k < n; ++k) {
        if (m.at(k, k).is_zero()) {
            int swap_i = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m.at(i, i).is_zero()) {
                    swap_i = i;
                    break;
                }
            if (swap_i >= 0) {
                for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(swap_i, j));
                for (int i = k; i < n; ++i) std::swap(m.at(i, k), m.at(i, swap_i));
            } else {
                // pivot recovery: add a row/column with a nonzero
                // off-diagonal entry (char != 2 makes the new pivot 2*m_ij)
                int oi = -1, oj = -1;
                for (int i = k; i < n && oi < 0; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (!m.at(i, j).is_zero()) {
                            oi = i;
                            oj = j;
                            break;
                        }
                if (oi < 0) throw DegenerateError("degenerate trace form");
                if (oi != k) {
                    for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(oi, j));
                    for (int i = k; i < n; ++i) std::swap(m.at(i, k), m.at(i, oi));
                }
                for (int j = k; j < n; ++j) m.at(k, j) += m.at(oj, j);
                for (int i = k; i < n; ++i) m.at(i, k) += m.at(i, oj);
            }
        }
        FieldElement piv = m.at(k, k);
        if (piv.is_zero()) throw DegenerateError("degenerate trace form");
        FieldElement pinv = piv.inverse();
        for (int i = k + 1; i < n; ++i) {
            if (m.at(i, k).is_zero()) continue;
            FieldElement f = m.at(i, k) * pinv;
            for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
            for (int j = k; j < n; ++j) m.at(j, i) -= f * m.at(j, k);
        }
        diag.push_back(piv);
    }
    return GWClass(ground, std::move(diag));
}

namespace {

int hilbert_odd(const mpz_class& a, const mpz_class& b, const mpz_class& p) {
    mpz_class u = a, w = b;
    unsigned long alpha = 0, beta = 0;
    while (u % p == 0) {
        u /= p;
        ++alpha;
    }
    while (w % p == 0) {
        w /= p;
        ++beta;
    }
    int eps_p = mpz_class((p - 1) / 2).get_ui() % 2 == 1 ? -1 : 1;
    int s = 1;
    if ((alpha % 2) && (beta % 2) && eps_p == -1) s = -s;
    if (beta % 2) s *= legendre_symbol(u, p);
    if (alpha % 2) s *= legendre_symbol(w, p);
    return s;
}

int hilbert_two(const mpz_class& a, const mpz_class& b) {
    mpz_class u = a, w = b;
    unsigned long alpha = 0, beta = 0;
    while (mpz_even_p(u.get_mpz_t())) {
        u /= 2;
        ++alpha;
    }
    while (mpz_even_p(w.get_mpz_t())) {
        w /= 2;
        ++beta;
    }
    auto eps = [](const mpz_class& x) {
        mpz_class r = (x - 1) / 2 % 2;
        return r != 0;
    };
    auto omega = [](const mpz_class& x) {
        mpz_class r = (x * x - 1) / 8 % 2;
        return r != 0;
    };
    bool exp = (eps(u) && eps(w)) ^ (alpha % 2 == 1 && omega(w)) ^
               (beta % 2 == 1 && omega(u));
    return exp ? -1 : 1;
}

mpz_class rational_to_class_int(const mpq_class& x) {
    if (x == 0) throw InputError("Hilbert symbol of zero");
    // num * den represents the same square class; the Hilbert formulas do
    // not need a squarefree representative
    return x.get_num() * x.get_den();
}

// Pollard rho split of an odd composite, with the same budget discipline
// as squarefree_part.
mpz_class rho_split(const mpz_class& n, unsigned long& budget) {
    for (unsigned long c = 1;; ++c) {
        mpz_class x(2), y(2), g(1), diff;
        while (g == 1) {
            if (budget-- == 0)
                throw BudgetError("factorization budget exceeded (Hasse support)");
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            diff = x - y;
            if (diff < 0) diff = -diff;
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (g != n) return g;
    }
}

void factor_odd_part(mpz_class m, std::vector<mpz_class>& out, unsigned long& budget) {
    if (m <= 1) return;
    if (mpz_probab_prime_p(m.get_mpz_t(), 40)) {
        out.push_back(m);
        return;
    }
    mpz_class d = rho_split(m, budget);
    factor_odd_part(d, out, budget);
    factor_odd_part(m / d, out, budget);
}

void odd_prime_factors_into(const mpz_class& n, std::vector<mpz_class>& out) {
    mpz_class m = abs(n);
    while (m > 1 && mpz_even_p(m.get_mpz_t())) m /= 2;
    for (unsigned long p = 3; p <= 1000000UL && m > 1; p += 2) {
        if (mpz_class(p) * p > m) break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            out.push_back(mpz_class(p));
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) m /= static_cast<long>(p);
        }
    }
    unsigned long budget = 2000000UL;
    factor_odd_part(m, out, budget);
}

} // namespace

int hilbert_symbol(const mpq_class& a, const mpq_class& b, const mpz_class& p) {
    if (a == 0 || b == 0) throw InputError("Hilbert symbol of zero");
    if (p == 2) return hilbert_two(rational_to_class_int(a), rational_to_class_int(b));
    if (!(p > 2) || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
        throw InputError("Hilbert symbol place must be a prime or \"real\"");
    return hilbert_odd(rational_to_class_int(a), rational_to_class_int(b), p);
}

int hilbert_symbol(const mpq_class& a, const mpq_class& b, const std::string& place) {
    if (place == "real") {
        if (a == 0 || b == 0) throw InputError("Hilbert symbol of zero");
        return (a < 0 && b < 0) ? -1 : 1;
    }
    return hilbert_symbol(a, b, mpz_class(place));
}

GWInvariants gw_invariants(const GWClass& c) {
    const FieldDescPtr& base = c.base();
    GWInvariants inv;
    inv.rank = c.rank();
    if (base->is_prime()) {
        mpz_class prod(1);
        for (const auto& a : c.diagonal())
            prod = prod * a.rat().get_num() % base->modulus();
        // discriminant square class over F_p: 1 or the canonical non-residue
        if (inv.rank == 0 || legendre_symbol(prod, base->modulus()) == 1) {
            inv.discriminant = 1;
        } else {
            mpz_class nr(2);
            while (legendre_symbol(nr, base->modulus()) != -1) ++nr;
            inv.discriminant = nr;
        }
        return inv;
    }
    if (!base->is_rational())
        throw InputError("gw_invariants supports Q and F_p only");
    // entries are squarefree integers; fold the discriminant with
    // gcd-reduction so products of many entries stay squarefree
    mpz_class prod(1);
    for (const auto& a : c.diagonal()) {
        const mpq_class& v = a.rat();
        inv.signature += v > 0 ? 1 : -1;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), prod.get_mpz_t(), v.get_num().get_mpz_t());
        prod = prod / g * (v.get_num() / g);
    }
    long r = inv.rank;
    bool flip = ((r * (r - 1) / 2) % 2) != 0;
    inv.discriminant = inv.rank == 0 ? mpz_class(1) : (flip ? mpz_class(-prod) : prod);
    // Hasse symbols at 2 and every odd prime dividing an entry
    std::vector<mpz_class> places{mpz_class(2)};
    {
        std::vector<mpz_class> distinct;
        for (const auto& a : c.diagonal()) {
            mpz_class v = abs(a.rat().get_num());
            bool seen = false;
            for (const auto& w : distinct)
                if (w == v) seen = true;
            if (!seen) distinct.push_back(v);
        }
        std::vector<mpz_class> primes;
        for (const auto& v : distinct) odd_prime_factors_into(v, primes);
        std::sort(primes.begin(), primes.end());
        primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
        places.insert(places.end(), primes.begin(), primes.end());
    }
    // prod_{i<j} (a_i, a_j)_p = prod_j (A_{j-1}, a_j)_p with A the running
    // product, by bimultiplicativity; the prefix is kept squarefree via gcd
    for (const auto& p : places) {
        int h = 1;
        mpz_class prefix(1);
        bool first = true;
        for (const auto& a : c.diagonal()) {
            const mpz_class& v = a.rat().get_num();
            if (!first) h *= hilbert_symbol(mpq_class(prefix), mpq_class(v), p);
            first = false;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), prefix.get_mpz_t(), v.get_mpz_t());
            prefix = prefix / g * (v / g);
        }
        if (h == -1) inv.hasse[p] = -1;
    }
    return inv;
}

bool gw_equal(const GWClass& a, const GWClass& b) {
    if (!same_field(a.base(), b.base())) throw InputError("GW base mismatch in comparison");
    const FieldDescPtr& base = a.base();
    if (!base->is_rational() && !base->is_prime())
        throw InputError("gw_equal supports Q and F_p only");
    GWInvariants ia = gw_invariants(a), ib = gw_invariants(b);
    if (ia.rank != ib.rank || ia.discriminant != ib.discriminant) return false;
    if (base->is_prime()) return true;
    return ia.signature == ib.signature && ia.hasse == ib.hasse;
}

} // namespace gwlines
