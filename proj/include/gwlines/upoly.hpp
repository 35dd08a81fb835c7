#ifndef GWLINES_UPOLY_HPP
#define GWLINES_UPOLY_HPP

#include <vector>

#include "gwlines/field.hpp"

namespace gwlines {

/// Dense univariate polynomials over a field descriptor, coefficients in
/// ascending degree, trailing zeros trimmed. The empty vector is zero.
namespace upoly {

using Poly = std::vector<FieldElement>;

void trim(Poly& f);
int degree(const Poly& f); // -1 for zero
Poly add(const Poly& f, const Poly& g);
Poly sub(const Poly& f, const Poly& g);
Poly mul(const Poly& f, const Poly& g);
Poly scale(const Poly& f, const FieldElement& c);
void divmod(const Poly& f, const Poly& g, Poly& quot, Poly& rem);
Poly gcd_monic(Poly f, Poly g);
Poly derivative(const Poly& f);
FieldElement eval(const Poly& f, const FieldElement& x);
Poly monic(Poly f);
/// base^e modulo m by repeated squaring.
Poly pow_mod(Poly base, mpz_class e, const Poly& m);

} // namespace upoly

/// Roots of f in its own base field, each listed once (multiplicities
/// ignored). Supported coefficients: Q (real-root isolation plus continued-
/// fraction reconstruction, every claimed root verified exactly) and F_p
/// (gcd with x^p - x, then explicit splitting). Degree of f at most 3.
std::vector<FieldElement> field_roots_deg3(const upoly::Poly& f, const FieldDescPtr& d);

} // namespace gwlines

#endif
