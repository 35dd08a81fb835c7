#include "gwlines/counts.hpp"

#include "gwlines/errors.hpp"

namespace gwlines {

mpz_class chern_number(int n) {
    if (n < 2) throw InputError("chern_number needs n >= 2");
    // poly[i] = coefficient of a^i b^{deg-i}, homogeneous throughout
    std::vector<mpz_class> poly{1};
    const int d = 2 * n - 1;
    for (int k = 0; k <= d; ++k) {
        std::vector<mpz_class> next(poly.size() + 1);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i] * k;       // times k*a
            next[i] += poly[i] * (d - k);     // times (d-k)*b
        }
        poly = std::move(next);
    }
    // times (a - b): coefficient of a^{n+1} b^n in (a - b) * poly
    // = poly[n] - poly[n+1]
    return poly[n] - poly[n + 1];
}

mpz_class double_factorial(int n) {
    if (n < 1) throw InputError("double_factorial needs n >= 1");
    mpz_class r(1);
    for (int k = 1; k <= 2 * n - 1; k += 2) r *= k;
    return r;
}

void euler_counts(int n, mpz_class& rank, mpz_class& signature) {
    rank = chern_number(n);
    signature = double_factorial(n);
    if ((rank - signature) % 2 != 0)
        throw Error("parity violation: c(n) and (2n-1)!! disagree mod 2");
}

GWClass euler_class(int n) {
    mpz_class c, d;
    euler_counts(n, c, d);
    mpz_class pos = (c + d) / 2, neg = (c - d) / 2;
    if (c > 4000000)
        throw InputError("euler_class rank " + c.get_str() +
                         " is too large to materialize; use euler_counts");
    FieldDescPtr q = FieldDescriptor::rationals();
    std::vector<FieldElement> diag;
    diag.reserve(mpz_get_ui(c.get_mpz_t()));
    FieldElement one = FieldElement::integer(q, 1), mone = FieldElement::integer(q, -1);
    for (mpz_class i = 0; i < pos; ++i) diag.push_back(one);
    for (mpz_class i = 0; i < neg; ++i) diag.push_back(mone);
    return GWClass(q, std::move(diag));
}

mpz_class binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

mpz_class castelnuovo_count(int n) {
    if (n < 3) throw InputError("castelnuovo_count needs n >= 3");
    return binomial(n, 2);
}

bool porteous_identity_check(int n) {
    if (n < 3) throw InputError("porteous_identity_check needs n >= 3");
    mpz_class lhs = binomial(n, 2) * binomial(n, 2) - binomial(n + 1, 2) * binomial(n - 1, 2);
    return lhs == binomial(n, 2);
}

mpq_class elementary_symmetric(int k, const std::vector<mpq_class>& values) {
    const int n = static_cast<int>(values.size());
    if (k < 0 || k > n) return 0;
    // e[j] after processing a prefix of the values
    std::vector<mpq_class> e(k + 1);
    e[0] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = std::min(k, i + 1); j >= 1; --j) e[j] += e[j - 1] * values[i];
    return e[k];
}

bool symmetric_identity_check(int n, int j, int i, const std::vector<mpq_class>& values) {
    if (j < 1 || j > n) throw InputError("symmetric_identity_check needs 1 <= j <= n");
    if (static_cast<int>(values.size()) != n)
        throw InputError("symmetric_identity_check needs n values");
    std::vector<mpq_class> left(values.begin(), values.begin() + j);
    std::vector<mpq_class> right(values.begin() + j, values.end());
    mpq_class lhs = elementary_symmetric(i + 1, values);
    mpq_class rhs(0);
    for (int z = 0; z <= i + 1; ++z)
        rhs += elementary_symmetric(z, left) * elementary_symmetric(i - z + 1, right);
    return lhs == rhs;
}

} // namespace gwlines
