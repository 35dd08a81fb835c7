#include "gwlines/json_io.hpp"

#include <fstream>

namespace gwlines {

namespace {

mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw SchemaError("malformed rational literal: \"" + s + "\"");
    q.canonicalize();
    return q;
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

} // namespace

json descriptor_to_json(const FieldDescPtr& d) {
    switch (d->kind()) {
    case FieldKind::Rational: return json{{"kind", "rational"}};
    case FieldKind::Prime: return json{{"kind", "prime"}, {"p", d->modulus().get_str()}};
    case FieldKind::Extension: {
        json mp = json::array();
        for (const auto& c : d->min_poly()) mp.push_back(rational_str(c));
        return json{{"kind", "extension"}, {"base", descriptor_to_json(d->base())},
                    {"min_poly", mp}};
    }
    }
    throw SchemaError("unknown field kind");
}

FieldDescPtr descriptor_from_json(const json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "Q") return FieldDescriptor::rationals();
        if (s.rfind("fp:", 0) == 0) {
            mpz_class p;
            if (mpz_set_str(p.get_mpz_t(), s.substr(3).c_str(), 10) != 0)
                throw SchemaError("malformed prime in \"" + s + "\"");
            return FieldDescriptor::prime_field(p);
        }
        throw SchemaError("unknown field shorthand \"" + s + "\"");
    }
    if (!j.is_object() || !j.contains("kind"))
        throw SchemaError("field descriptor must be an object with \"kind\"");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return FieldDescriptor::rationals();
    if (kind == "prime") {
        mpz_class p;
        std::string ps = j.at("p").is_string() ? j.at("p").get<std::string>()
                                               : j.at("p").dump();
        if (mpz_set_str(p.get_mpz_t(), ps.c_str(), 10) != 0)
            throw SchemaError("malformed prime modulus");
        return FieldDescriptor::prime_field(p);
    }
    if (kind == "extension") {
        FieldDescPtr base = descriptor_from_json(j.at("base"));
        std::vector<mpq_class> mp;
        for (const auto& c : j.at("min_poly")) mp.push_back(parse_rational(c.get<std::string>()));
        return FieldDescriptor::extension(base, mp);
    }
    throw SchemaError("unknown field kind \"" + kind + "\"");
}

json element_to_json(const FieldElement& e) {
    if (!e.descriptor()->is_extension()) return rational_str(e.coords()[0]);
    json a = json::array();
    for (const auto& c : e.coords()) a.push_back(rational_str(c));
    return a;
}

FieldElement element_from_json(const json& j, const FieldDescPtr& d) {
    try {
        if (j.is_string()) return FieldElement::constant(d, parse_rational(j.get<std::string>()));
        if (j.is_number_integer())
            return FieldElement::integer(d, j.get<long>());
        if (j.is_array()) {
            std::vector<mpq_class> coords;
            for (const auto& c : j) coords.push_back(parse_rational(c.get<std::string>()));
            return FieldElement::from_coords(d, std::move(coords));
        }
    } catch (const InputError& e) {
        throw SchemaError(e.what());
    }
    throw SchemaError("field element must be a string, integer, or coordinate array");
}

json form_to_json(const BinaryForm& f) {
    json cs = json::array();
    for (const auto& c : f.coeffs()) cs.push_back(element_to_json(c));
    return json{{"degree", f.degree()}, {"coeffs", cs}};
}

BinaryForm form_from_json(const json& j, const FieldDescPtr& d) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs"))
        throw SchemaError("binary form needs \"degree\" and \"coeffs\"");
    int deg = j.at("degree").get<int>();
    std::vector<FieldElement> cs;
    for (const auto& c : j.at("coeffs")) cs.push_back(element_from_json(c, d));
    if (static_cast<int>(cs.size()) != deg + 1)
        throw SchemaError("binary form of degree " + std::to_string(deg) + " needs " +
                          std::to_string(deg + 1) + " coefficients");
    return BinaryForm(d, deg, std::move(cs));
}

json poly_to_json(const MultiPoly& p, const std::vector<std::string>& names) {
    json terms = json::array();
    for (const auto& t : p.terms()) {
        json e = json::array();
        for (int x : t.exps) e.push_back(x);
        terms.push_back(json{{"exps", e}, {"coeff", element_to_json(t.coeff)}});
    }
    json vars = json::array();
    for (int i = 0; i < p.nvars(); ++i)
        vars.push_back(i < static_cast<int>(names.size()) ? names[i]
                                                          : "x" + std::to_string(i));
    return json{{"vars", vars}, {"terms", terms}};
}

MultiPoly poly_from_json(const json& j, const FieldDescPtr& d) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw SchemaError("polynomial needs \"vars\" and \"terms\"");
    int nvars = static_cast<int>(j.at("vars").size());
    MultiPoly p = MultiPoly::zero(d, nvars);
    for (const auto& t : j.at("terms")) {
        std::vector<int> exps;
        for (const auto& e : t.at("exps")) exps.push_back(e.get<int>());
        if (static_cast<int>(exps.size()) != nvars)
            throw SchemaError("term exponent vector length != variable count");
        for (int e : exps)
            if (e < 0) throw SchemaError("negative exponent");
        p = p + MultiPoly::monomial(d, exps, element_from_json(t.at("coeff"), d));
    }
    return p;
}

json gwclass_to_json(const GWClass& c) {
    std::string base;
    if (c.base()->is_rational()) base = "Q";
    else if (c.base()->is_prime()) base = "fp:" + c.base()->modulus().get_str();
    else throw SchemaError("GW classes serialize over Q and F_p only");
    json diag = json::array();
    for (const auto& a : c.diagonal()) diag.push_back(element_to_json(a));
    return json{{"base", base}, {"diagonal", diag}};
}

namespace {

ExactMatrix span_from_json(const json& j, const FieldDescPtr& d, int nv) {
    if (!j.is_array() || j.size() != 2)
        throw SchemaError("span must hold exactly two rows");
    ExactMatrix span(d, 2, nv);
    for (int r = 0; r < 2; ++r) {
        const json& row = j.at(r);
        if (!row.is_array() || static_cast<int>(row.size()) != nv)
            throw SchemaError("span rows need n + 2 entries");
        for (int i = 0; i < nv; ++i) span.at(r, i) = element_from_json(row.at(i), d);
    }
    return span;
}

} // namespace

LineOnHypersurface line_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("F") || !j.contains("line"))
        throw SchemaError("line input needs \"n\", \"F\", \"line\"");
    int n = j.at("n").get<int>();
    const json& line = j.at("line");
    FieldDescPtr k = descriptor_from_json(line.at("field"));
    MultiPoly f = poly_from_json(j.at("F"), k);
    try {
        return LineOnHypersurface(n, std::move(f), span_from_json(line.at("span"), k, n + 2));
    } catch (const InputError& e) {
        throw SchemaError(e.what());
    }
}

std::vector<LineOnHypersurface> line_catalog_from_json(const json& j, int& n_out) {
    if (!j.is_object() || !j.contains("n") || !j.contains("F") || !j.contains("lines"))
        throw SchemaError("line catalog needs \"n\", \"F\", \"lines\"");
    n_out = j.at("n").get<int>();
    std::vector<LineOnHypersurface> out;
    for (const auto& entry : j.at("lines")) {
        FieldDescPtr k = descriptor_from_json(entry.at("field"));
        MultiPoly f = poly_from_json(j.at("F"), k);
        try {
            out.emplace_back(n_out, std::move(f),
                             span_from_json(entry.at("span"), k, n_out + 2));
        } catch (const InputError& e) {
            throw SchemaError(e.what());
        }
    }
    return out;
}

json model_to_json(const ConicModel& m) {
    json b = json::array();
    for (const auto& pt : m.points)
        b.push_back(json::array({element_to_json(pt.first), element_to_json(pt.second)}));
    json q = json::array();
    for (const auto& f : m.conic) {
        json cs = json::array();
        for (const auto& c : f.coeffs()) cs.push_back(element_to_json(c));
        q.push_back(cs);
    }
    return json{{"n", m.n}, {"B", b}, {"Q", q},
                {"field", descriptor_to_json(m.descriptor())}};
}

ConicModel model_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("B") || !j.contains("Q") ||
        !j.contains("field"))
        throw SchemaError("conic model needs \"n\", \"B\", \"Q\", \"field\"");
    int n = j.at("n").get<int>();
    FieldDescPtr d = descriptor_from_json(j.at("field"));
    std::vector<std::pair<FieldElement, FieldElement>> pts;
    for (const auto& p : j.at("B")) {
        if (!p.is_array() || p.size() != 2)
            throw SchemaError("points of B are [bx, by] pairs");
        pts.emplace_back(element_from_json(p.at(0), d), element_from_json(p.at(1), d));
    }
    const json& q = j.at("Q");
    if (!q.is_array() || q.size() != 3)
        throw SchemaError("Q must list three degree-2 coefficient triples");
    std::array<BinaryForm, 3> conic{BinaryForm(d, 2), BinaryForm(d, 2), BinaryForm(d, 2)};
    for (int t = 0; t < 3; ++t) {
        const json& cs = q.at(t);
        if (!cs.is_array() || cs.size() != 3)
            throw SchemaError("each conic coordinate needs 3 coefficients (descending u)");
        std::vector<FieldElement> c;
        for (const auto& x : cs) c.push_back(element_from_json(x, d));
        conic[t] = BinaryForm(d, 2, std::move(c));
    }
    try {
        return ConicModel(n, std::move(pts), std::move(conic));
    } catch (const InputError& e) {
        throw SchemaError(e.what());
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SchemaError("JSON parse error in " + path + ": " + e.what());
    }
    return j;
}

} // namespace gwlines
