#ifndef GWLINES_GW_HPP
#define GWLINES_GW_HPP

#include <map>
#include <string>
#include <vector>

#include "gwlines/field.hpp"

namespace gwlines {

/// A diagonal quadratic form <a_1, ..., a_r> over a base field. Entries are
/// nonzero; over Q and F_p they are kept square-class reduced. The empty
/// diagonal is the rank-0 class.
class GWClass {
public:
    explicit GWClass(const FieldDescPtr& base);
    GWClass(const FieldDescPtr& base, std::vector<FieldElement> diagonal);

    const FieldDescPtr& base() const { return base_; }
    const std::vector<FieldElement>& diagonal() const { return diag_; }
    int rank() const { return static_cast<int>(diag_.size()); }

    std::string str() const;

private:
    FieldDescPtr base_;
    std::vector<FieldElement> diag_;
};

struct GWInvariants {
    int rank = 0;
    int signature = 0;                 // Q only
    mpz_class discriminant;            // signed discriminant square class
    std::map<mpz_class, int> hasse;    // Q only: prime -> +-1, finite support
};

GWClass gw_add(const GWClass& a, const GWClass& b);
GWClass gw_mul(const GWClass& a, const GWClass& b);

/// m copies of <1> + <-1>.
GWClass hyperbolic(const FieldDescPtr& base, long m);

/// Trace form Tr_{L/k}<alpha>: the Gram matrix of (x, y) -> Tr(alpha x y) on
/// the power basis, diagonalized symmetrically. For L = k this is <alpha>.
GWClass trace_form(const FieldElement& alpha, const FieldDescPtr& ground);

/// Hilbert symbol (a, b)_p for a prime p, or the real place when
/// place = "real".
int hilbert_symbol(const mpq_class& a, const mpq_class& b, const std::string& place);
int hilbert_symbol(const mpq_class& a, const mpq_class& b, const mpz_class& p);

GWInvariants gw_invariants(const GWClass& c);

/// Complete-invariant equality: rank + discriminant over F_p; rank,
/// signature, signed discriminant and all Hasse symbols over Q.
bool gw_equal(const GWClass& a, const GWClass& b);

} // namespace gwlines

#endif
