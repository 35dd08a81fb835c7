#ifndef GWLINES_FIELD_HPP
#define GWLINES_FIELD_HPP

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "gwlines/errors.hpp"

namespace gwlines {

enum class FieldKind { Rational, Prime, Extension };

class FieldDescriptor;
using FieldDescPtr = std::shared_ptr<const FieldDescriptor>;

/// Descriptor of an exact base field: Q, F_p (p an odd prime), or a simple
/// monic extension k[z]/(f) with k itself Q or F_p. Towers of extensions are
/// rejected; callers supply a single minimal polynomial over the prime base.
/// Irreducibility of the minimal polynomial is recorded, not proven.
class FieldDescriptor : public std::enable_shared_from_this<FieldDescriptor> {
public:
    static FieldDescPtr rationals();
    static FieldDescPtr prime_field(const mpz_class& p);
    /// min_poly: coefficients in ascending degree order, monic, degree >= 2.
    static FieldDescPtr extension(const FieldDescPtr& base,
                                  const std::vector<mpq_class>& min_poly);

    FieldKind kind() const { return kind_; }
    bool is_rational() const { return kind_ == FieldKind::Rational; }
    bool is_prime() const { return kind_ == FieldKind::Prime; }
    bool is_extension() const { return kind_ == FieldKind::Extension; }

    const mpz_class& modulus() const;
    const FieldDescPtr& base() const;
    const std::vector<mpq_class>& min_poly() const;

    /// Extension degree over the base (1 for Q and F_p).
    int degree() const { return degree_; }

    bool same(const FieldDescriptor& other) const;
    std::string name() const;

private:
    FieldDescriptor() = default;

    FieldKind kind_ = FieldKind::Rational;
    mpz_class modulus_;              // Prime only
    FieldDescPtr base_;              // Extension only
    std::vector<mpq_class> min_poly_; // Extension only, ascending, monic
    int degree_ = 1;
};

bool same_field(const FieldDescPtr& a, const FieldDescPtr& b);

/// The base field underneath a descriptor (itself for Q and F_p).
FieldDescPtr base_field(const FieldDescPtr& d);

/// make_extension in the public vocabulary: min_poly given as base-field
/// values in ascending degree order.
FieldDescPtr make_extension(const FieldDescPtr& base,
                            const std::vector<mpq_class>& min_poly);

/// An exact element of the field named by its descriptor. Coordinates are
/// base-field values on the power basis 1, z, ..., z^{d-1} (a single
/// coordinate for Q and F_p). Rational values are kept in lowest terms with
/// positive denominator; prime-field values are reduced to [0, p).
class FieldElement {
public:
    FieldElement(); // zero over Q

    static FieldElement zero(const FieldDescPtr& d);
    static FieldElement one(const FieldDescPtr& d);
    /// Embed a base-field value as a constant.
    static FieldElement constant(const FieldDescPtr& d, const mpq_class& v);
    static FieldElement from_coords(const FieldDescPtr& d,
                                    std::vector<mpq_class> coords);
    /// The class of z in an extension k[z]/(f).
    static FieldElement generator(const FieldDescPtr& d);
    static FieldElement integer(const FieldDescPtr& d, long v);

    const FieldDescPtr& descriptor() const { return desc_; }
    const std::vector<mpq_class>& coords() const { return coords_; }
    /// Degree-1 access (Q and F_p).
    const mpq_class& rat() const;

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement inverse() const;
    FieldElement pow(unsigned long e) const;

    /// Promote into an extension of this element's field (or reinterpret a
    /// value of the base field inside `target`).
    FieldElement promote(const FieldDescPtr& target) const;

    std::string str() const;

private:
    FieldDescPtr desc_;
    std::vector<mpq_class> coords_;

    void normalize();
};

/// Trace of multiplication-by-x on an extension, as a base-field element.
FieldElement field_trace(const FieldElement& x);
/// Determinant of multiplication-by-x on an extension.
FieldElement field_norm(const FieldElement& x);

/// Canonical square-class representative: over Q the signed squarefree
/// integer, over F_p either 1 or the smallest positive non-residue.
/// Extensions are not canonicalized; use is_square_in_field there.
FieldElement square_class(const FieldElement& x);

/// Whether x has a square root in its own field. Supported: Q, F_p, and
/// quadratic extensions (solved by the explicit radical formula).
bool is_square_in_field(const FieldElement& x);

/// Signed squarefree part of a nonzero integer. Trial division up to 10^6,
/// then Pollard rho; throws BudgetError once operands outgrow the budget.
mpz_class squarefree_part(const mpz_class& n);

/// Square root of a rational that is known (or suspected) to be a perfect
/// square; returns false if it is not one.
bool rational_sqrt(const mpq_class& x, mpq_class& out);

/// Square root modulo an odd prime (Tonelli-Shanks); false for non-residues.
bool mod_sqrt(const mpz_class& a, const mpz_class& p, mpz_class& out);

mpz_class mod_pow(mpz_class base, mpz_class exp, const mpz_class& p);
int legendre_symbol(const mpz_class& a, const mpz_class& p);

} // namespace gwlines

#endif
