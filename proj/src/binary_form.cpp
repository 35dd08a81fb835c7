#include "gwlines/binary_form.hpp"

#include <sstream>

namespace gwlines {

BinaryForm::BinaryForm(const FieldDescPtr& d, int degree)
    : desc_(d), degree_(degree) {
    if (degree < 0) throw InputError("negative degree");
    coeffs_.assign(degree + 1, FieldElement::zero(d));
}

BinaryForm::BinaryForm(const FieldDescPtr& d, int degree,
                       std::vector<FieldElement> coeffs)
    : desc_(d), degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree < 0) throw InputError("negative degree");
    if (static_cast<int>(coeffs_.size()) != degree + 1)
        throw InputError("coefficient count does not match degree");
    for (const auto& c : coeffs_)
        if (!same_field(c.descriptor(), desc_))
            throw InputError("binary form coefficients over mixed fields");
}

BinaryForm BinaryForm::from_ints(const FieldDescPtr& d, int degree,
                                 const std::vector<long>& coeffs) {
    std::vector<FieldElement> cs;
    cs.reserve(coeffs.size());
    for (long c : coeffs) cs.push_back(FieldElement::integer(d, c));
    return BinaryForm(d, degree, std::move(cs));
}

bool BinaryForm::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool BinaryForm::operator==(const BinaryForm& o) const {
    return degree_ == o.degree_ && coeffs_ == o.coeffs_;
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
    if (degree_ != o.degree_) throw InputError("degree mismatch in form addition");
    BinaryForm r = *this;
    for (int j = 0; j <= degree_; ++j) r.coeffs_[j] += o.coeffs_[j];
    return r;
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const {
    if (degree_ != o.degree_) throw InputError("degree mismatch in form subtraction");
    BinaryForm r = *this;
    for (int j = 0; j <= degree_; ++j) r.coeffs_[j] -= o.coeffs_[j];
    return r;
}

BinaryForm BinaryForm::operator-() const {
    BinaryForm r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
    if (!same_field(desc_, o.desc_)) throw InputError("descriptor mismatch in form product");
    BinaryForm r(desc_, degree_ + o.degree_);
    for (int i = 0; i <= degree_; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (int j = 0; j <= o.degree_; ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return r;
}

BinaryForm BinaryForm::scaled(const FieldElement& c) const {
    BinaryForm r = *this;
    for (auto& x : r.coeffs_) x = x * c;
    return r;
}

FieldElement BinaryForm::eval(const FieldElement& u0, const FieldElement& v0) const {
    // Horner in u with v-powers folded in.
    FieldElement acc = FieldElement::zero(desc_);
    for (int j = 0; j <= degree_; ++j) acc = acc * u0 + coeffs_[j] * v0.pow(j);
    return acc;
}

BinaryForm BinaryForm::compose(
    const std::array<std::array<FieldElement, 2>, 2>& m) const {
    // f(a u + b v, c u + d v): accumulate coeff_desc(j) * L1^{d-j} * L2^{j}
    BinaryForm l1(desc_, 1, {m[0][0], m[0][1]});
    BinaryForm l2(desc_, 1, {m[1][0], m[1][1]});
    std::vector<BinaryForm> p1{BinaryForm(desc_, 0, {FieldElement::one(desc_)})};
    std::vector<BinaryForm> p2 = p1;
    for (int k = 1; k <= degree_; ++k) {
        p1.push_back(p1.back() * l1);
        p2.push_back(p2.back() * l2);
    }
    BinaryForm r(desc_, degree_);
    for (int j = 0; j <= degree_; ++j) {
        if (coeffs_[j].is_zero()) continue;
        r = r + (p1[degree_ - j] * p2[j]).scaled(coeffs_[j]);
    }
    return r;
}

BinaryForm BinaryForm::promote(const FieldDescPtr& target) const {
    std::vector<FieldElement> cs;
    cs.reserve(coeffs_.size());
    for (const auto& c : coeffs_) cs.push_back(c.promote(target));
    return BinaryForm(target, degree_, std::move(cs));
}

int BinaryForm::v_multiplicity() const {
    int a = 0;
    while (a <= degree_ && coeffs_[a].is_zero()) ++a;
    return a; // degree_+1 for the zero form
}

std::string BinaryForm::str() const {
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j <= degree_; ++j) {
        if (coeffs_[j].is_zero()) continue;
        if (!first) os << " + ";
        os << coeffs_[j].str();
        int eu = degree_ - j;
        if (eu > 0) os << "*u" << (eu > 1 ? "^" + std::to_string(eu) : "");
        if (j > 0) os << "*v" << (j > 1 ? "^" + std::to_string(j) : "");
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

FieldElement resultant(const BinaryForm& f, const BinaryForm& g) {
    if (!same_field(f.descriptor(), g.descriptor()))
        throw InputError("descriptor mismatch in resultant");
    const int m = f.degree(), n = g.degree();
    if (m < 1 || n < 1) throw InputError("resultant needs degrees >= 1");
    ExactMatrix s(f.descriptor(), m + n, m + n);
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) s.at(r, r + j) = f.coeff_desc(j);
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) s.at(n + r, r + j) = g.coeff_desc(j);
    return s.determinant();
}

FieldElement discriminant_quadratic(const FieldElement& a, const FieldElement& b,
                                    const FieldElement& c) {
    FieldElement four = FieldElement::integer(a.descriptor(), 4);
    return b * b - four * a * c;
}

namespace {

// Dehomogenization at v = 1 in ascending powers of u.
std::vector<FieldElement> affine_coeffs(const BinaryForm& f) {
    std::vector<FieldElement> a(f.degree() + 1, FieldElement::zero(f.descriptor()));
    for (int j = 0; j <= f.degree(); ++j) a[f.degree() - j] = f.coeff_desc(j);
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    return a;
}

BinaryForm homogenize(const FieldDescPtr& d, const std::vector<FieldElement>& a,
                      int degree) {
    BinaryForm f(d, degree);
    std::vector<FieldElement> cs(degree + 1, FieldElement::zero(d));
    for (std::size_t k = 0; k < a.size(); ++k) cs[degree - static_cast<int>(k)] = a[k];
    return BinaryForm(d, degree, std::move(cs));
}

void affine_divmod(const FieldDescPtr& d, std::vector<FieldElement> num,
                   const std::vector<FieldElement>& den,
                   std::vector<FieldElement>& quot, std::vector<FieldElement>& rem) {
    if (den.empty()) throw InputError("division by the zero polynomial");
    quot.assign(num.size() >= den.size() ? num.size() - den.size() + 1 : 0,
                FieldElement::zero(d));
    FieldElement linv = den.back().inverse();
    while (num.size() >= den.size()) {
        FieldElement c = num.back() * linv;
        std::size_t shift = num.size() - den.size();
        quot[shift] = c;
        if (!c.is_zero())
            for (std::size_t i = 0; i < den.size(); ++i)
                num[shift + i] -= c * den[i];
        num.pop_back();
        while (!num.empty() && num.back().is_zero() && num.size() >= den.size())
            num.pop_back();
    }
    while (!num.empty() && num.back().is_zero()) num.pop_back();
    rem = std::move(num);
}

} // namespace

BinaryForm exact_div(const BinaryForm& f, const BinaryForm& g) {
    if (!same_field(f.descriptor(), g.descriptor()))
        throw InputError("descriptor mismatch in exact_div");
    if (g.is_zero()) throw InputError("exact_div by the zero form");
    if (f.degree() < g.degree()) throw InputError("exact_div: degree of divisor exceeds dividend");
    const FieldDescPtr& d = f.descriptor();
    const int a = g.v_multiplicity();
    if (f.v_multiplicity() < a)
        throw InputError("exact_div: inexact division (v-power factor missing)");
    // strip v^a from both; the stripped divisor has nonzero u-leading coeff
    std::vector<FieldElement> fa = affine_coeffs(f), ga = affine_coeffs(g);
    std::vector<FieldElement> q, r;
    if (fa.empty()) return BinaryForm(d, f.degree() - g.degree());
    affine_divmod(d, fa, ga, q, r);
    if (!r.empty()) throw InputError("exact_div: inexact division (nonzero remainder)");
    return homogenize(d, q, f.degree() - g.degree());
}

void divrem_affine(const BinaryForm& f, const BinaryForm& g, BinaryForm& quot,
                   BinaryForm& rem) {
    if (g.is_zero()) throw InputError("division by the zero form");
    if (g.v_multiplicity() != 0)
        throw InputError("divrem_affine requires a nonzero u-leading coefficient");
    const FieldDescPtr& d = f.descriptor();
    std::vector<FieldElement> q, r;
    affine_divmod(d, affine_coeffs(f), affine_coeffs(g), q, r);
    int qdeg = f.degree() - g.degree();
    quot = homogenize(d, q, qdeg >= 0 ? qdeg : 0);
    rem = homogenize(d, r, g.degree() - 1);
}

BinaryForm binary_gcd(const BinaryForm& f, const BinaryForm& g) {
    if (!same_field(f.descriptor(), g.descriptor()))
        throw InputError("descriptor mismatch in gcd");
    const FieldDescPtr& d = f.descriptor();
    if (f.is_zero() && g.is_zero()) throw InputError("gcd of two zero forms");
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    int vcommon = std::min(f.v_multiplicity(), g.v_multiplicity());
    std::vector<FieldElement> a = affine_coeffs(f), b = affine_coeffs(g);
    while (!b.empty()) {
        std::vector<FieldElement> q, r;
        affine_divmod(d, a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    FieldElement linv = a.back().inverse();
    for (auto& c : a) c = c * linv;
    BinaryForm core = homogenize(d, a, static_cast<int>(a.size()) - 1);
    if (vcommon == 0) return core;
    BinaryForm v(d, 1, {FieldElement::zero(d), FieldElement::one(d)});
    for (int i = 0; i < vcommon; ++i) core = core * v;
    return core;
}

} // namespace gwlines
