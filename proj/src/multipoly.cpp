#include "gwlines/multipoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace gwlines {

namespace {

int degree_of(const std::vector<int>& exps) {
    return std::accumulate(exps.begin(), exps.end(), 0);
}

// graded-lexicographic: higher total degree first, then lex on exponents
bool grlex_before(const std::vector<int>& a, const std::vector<int>& b) {
    int da = degree_of(a), db = degree_of(b);
    if (da != db) return da > db;
    return a > b;
}

} // namespace

MultiPoly::MultiPoly(const FieldDescPtr& d, int nvars) : desc_(d), nvars_(nvars) {
    if (nvars < 1) throw InputError("polynomial needs at least one variable");
}

MultiPoly MultiPoly::constant(const FieldDescPtr& d, int nvars, const FieldElement& c) {
    MultiPoly p(d, nvars);
    if (!c.is_zero()) p.terms_.push_back({std::vector<int>(nvars, 0), c});
    return p;
}

MultiPoly MultiPoly::variable(const FieldDescPtr& d, int nvars, int index) {
    if (index < 0 || index >= nvars) throw InputError("variable index out of range");
    MultiPoly p(d, nvars);
    std::vector<int> e(nvars, 0);
    e[index] = 1;
    p.terms_.push_back({std::move(e), FieldElement::one(d)});
    return p;
}

MultiPoly MultiPoly::monomial(const FieldDescPtr& d, std::vector<int> exps,
                              const FieldElement& c) {
    MultiPoly p(d, static_cast<int>(exps.size()));
    if (!c.is_zero()) p.terms_.push_back({std::move(exps), c});
    return p;
}

int MultiPoly::total_degree() const {
    int deg = -1;
    for (const auto& t : terms_) deg = std::max(deg, degree_of(t.exps));
    return deg;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = degree_of(terms_[0].exps);
    for (const auto& t : terms_)
        if (degree_of(t.exps) != d) return false;
    return true;
}

void MultiPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grlex_before(a.exps, b.exps); });
    std::vector<Term> out;
    for (auto& t : terms_) {
        if (!out.empty() && out.back().exps == t.exps)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Term& t) { return t.coeff.is_zero(); }),
              out.end());
    terms_ = std::move(out);
}

void MultiPoly::add_term(const std::vector<int>& exps, const FieldElement& c) {
    if (c.is_zero()) return;
    terms_.push_back({exps, c});
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw InputError("variable count mismatch");
    MultiPoly r = *this;
    r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
    r.normalize();
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw InputError("variable count mismatch");
    MultiPoly r(desc_, nvars_);
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            std::vector<int> e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = a.exps[i] + b.exps[i];
            r.add_term(e, a.coeff * b.coeff);
        }
    r.normalize();
    return r;
}

MultiPoly MultiPoly::scaled(const FieldElement& c) const {
    MultiPoly r(desc_, nvars_);
    for (const auto& t : terms_) r.add_term(t.exps, t.coeff * c);
    r.normalize();
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exps != o.terms_[i].exps || !(terms_[i].coeff == o.terms_[i].coeff))
            return false;
    return true;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw InputError("negative power");
    MultiPoly acc = constant(desc_, nvars_, FieldElement::one(desc_));
    MultiPoly b = *this;
    while (e > 0) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

MultiPoly MultiPoly::promote(const FieldDescPtr& target) const {
    MultiPoly r(target, nvars_);
    for (const auto& t : terms_) r.terms_.push_back({t.exps, t.coeff.promote(target)});
    return r;
}

MultiPoly MultiPoly::substitute_linear(const ExactMatrix& T) const {
    if (T.rows() != nvars_ || T.cols() != nvars_)
        throw InputError("substitution matrix shape mismatch");
    std::vector<MultiPoly> images;
    images.reserve(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        MultiPoly li(desc_, nvars_);
        for (int j = 0; j < nvars_; ++j) {
            std::vector<int> e(nvars_, 0);
            e[j] = 1;
            li.add_term(e, T.at(i, j));
        }
        li.normalize();
        images.push_back(std::move(li));
    }
    MultiPoly r(desc_, nvars_);
    for (const auto& t : terms_) {
        MultiPoly m = constant(desc_, nvars_, t.coeff);
        for (int i = 0; i < nvars_; ++i)
            if (t.exps[i] > 0) m = m * images[i].pow(t.exps[i]);
        r = r + m;
    }
    return r;
}

BinaryForm MultiPoly::substitute_forms(const std::vector<BinaryForm>& forms) const {
    if (static_cast<int>(forms.size()) != nvars_)
        throw InputError("one binary form per variable required");
    if (!is_homogeneous()) throw InputError("substitution requires a homogeneous polynomial");
    if (is_zero()) return BinaryForm(desc_, 0);
    int e = forms[0].degree();
    for (const auto& f : forms)
        if (f.degree() != e) throw InputError("substituted forms must share one degree");
    int D = total_degree();
    BinaryForm r(desc_, e * D);
    for (const auto& t : terms_) {
        BinaryForm m(desc_, 0, {t.coeff});
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < t.exps[i]; ++k) m = m * forms[i];
        r = r + m;
    }
    return r;
}

BinaryForm MultiPoly::linear_coefficient(int var, int form_degree) const {
    BinaryForm f(desc_, form_degree);
    std::vector<FieldElement> cs(form_degree + 1, FieldElement::zero(desc_));
    for (const auto& t : terms_) {
        bool match = t.exps[var] == 1;
        for (int i = 2; match && i < nvars_; ++i)
            if (i != var && t.exps[i] != 0) match = false;
        if (!match) continue;
        int eu = t.exps[0], ev = t.exps[1];
        if (eu + ev != form_degree)
            throw InputError("linear coefficient has unexpected (u, v)-degree");
        cs[ev] += t.coeff;
    }
    return BinaryForm(desc_, form_degree, std::move(cs));
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        os << t.coeff.str();
        for (int i = 0; i < nvars_; ++i) {
            if (t.exps[i] == 0) continue;
            os << "*" << (i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i));
            if (t.exps[i] > 1) os << "^" << t.exps[i];
        }
        first = false;
    }
    return os.str();
}

BinaryForm substitute_conic(const MultiPoly& curve, const BinaryForm& q0,
                            const BinaryForm& q1, const BinaryForm& q2) {
    if (curve.nvars() != 3) throw InputError("substitute_conic expects a plane curve in 3 variables");
    if (!curve.is_homogeneous()) throw InputError("substitute_conic expects a homogeneous curve");
    return curve.substitute_forms({q0, q1, q2});
}

MultiPoly discriminant_quadratic(const MultiPoly& a, const MultiPoly& b,
                                 const MultiPoly& c) {
    MultiPoly four = MultiPoly::constant(a.descriptor(), a.nvars(),
                                         FieldElement::integer(a.descriptor(), 4));
    return b * b - four * a * c;
}

} // namespace gwlines
