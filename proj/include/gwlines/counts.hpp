#ifndef GWLINES_COUNTS_HPP
#define GWLINES_COUNTS_HPP

#include <gmpxx.h>

#include <vector>

#include "gwlines/gw.hpp"

namespace gwlines {

/// Top Chern number of Sym^{2n-1}(S^v) on the Grassmannian of lines in
/// P^{n+1}: the coefficient of a^{n+1} b^n in
/// (a - b) * prod_{k=0}^{2n-1} (k a + (2n-1-k) b).
mpz_class chern_number(int n);

/// (2n-1)!! = product of the odd integers up to 2n-1.
mpz_class double_factorial(int n);

/// (2n-1)!!<1> + (c(n) - (2n-1)!!)/2 * H as an explicit diagonal class.
/// Throws InputError when the rank is too large to materialize.
GWClass euler_class(int n);

/// Rank and signature of euler_class(n) without materializing it.
void euler_counts(int n, mpz_class& rank, mpz_class& signature);

mpz_class binomial(long n, long k);

/// binom(n, 2), the number of (n-3)-dimensional (2n-4)-secants.
mpz_class castelnuovo_count(int n);

/// binom(n,2)^2 - binom(n+1,2) binom(n-1,2) == binom(n,2), exactly.
bool porteous_identity_check(int n);

/// e_{i+1}(X_1..X_n) == sum_z e_z(X_1..X_j) e_{i-z+1}(X_{j+1}..X_n) on the
/// given values, with e_0 = 1 and e_m = 0 outside range.
bool symmetric_identity_check(int n, int j, int i, const std::vector<mpq_class>& values);

/// Elementary symmetric polynomial e_k of the given values.
mpq_class elementary_symmetric(int k, const std::vector<mpq_class>& values);

} // namespace gwlines

#endif
