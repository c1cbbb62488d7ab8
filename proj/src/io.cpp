#include "liediag/io.hpp"

#include <sstream>

#include "liediag/error.hpp"

namespace liediag {

namespace {

constexpr std::size_t kNoOffset = std::string::npos;

[[noreturn]] void schema_error(const std::string& path, const std::string& what)
{
    throw ParseError("JSON field " + path + ": " + what, kNoOffset);
}

const Json& field(const Json& j, const char* key, const std::string& path)
{
    if (!j.is_object()) schema_error(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) schema_error(path + "/" + key, "missing");
    return *it;
}

const Json& array_field(const Json& j, const char* key, const std::string& path)
{
    const Json& a = field(j, key, path);
    if (!a.is_array()) schema_error(path + "/" + key, "expected an array");
    return a;
}

std::string get_string(const Json& j, const std::string& path)
{
    if (!j.is_string()) schema_error(path, "expected a string");
    return j.get<std::string>();
}

Index get_index(const Json& j, const std::string& path, Index bound)
{
    if (!j.is_number_integer()) schema_error(path, "expected an integer");
    const auto v = j.get<long long>();
    if (v < 0 || v >= bound) schema_error(path, "index " + std::to_string(v) + " out of range");
    return static_cast<Index>(v);
}

Rational get_rational(const Json& j, const std::string& path)
{
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) schema_error(path, "expected a rational string such as \"3/4\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
        schema_error(path, e.what());
    }
}

std::vector<std::string> string_list(const Json& a, const std::string& path)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(get_string(a[i], path + "/" + std::to_string(i)));
    return out;
}

std::string dot_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

Json label_to_json(const LinForm& f)
{
    Json terms = Json::array();
    for (const auto& [index, c] : f.entries())
        for (const auto& t : c.terms()) {
            Json mono = Json::array();
            for (const auto& [id, e] : t.mono.powers()) mono.push_back({id, e});
            terms.push_back({{"coeff", t.coeff.str()}, {"monomial", mono}, {"dual_index", index}});
        }
    return terms;
}

LinForm label_from_json(const Json& a, Index dim, const std::string& path)
{
    if (!a.is_array()) schema_error(path, "expected an array of terms");
    LinForm f(dim);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string p = path + "/" + std::to_string(i);
        const Index index = get_index(field(a[i], "dual_index", p), p + "/dual_index", dim);
        const Rational c = get_rational(field(a[i], "coeff", p), p + "/coeff");
        std::vector<Monomial::Power> powers;
        const Json& mono = array_field(a[i], "monomial", p);
        for (std::size_t k = 0; k < mono.size(); ++k) {
            const std::string mp = p + "/monomial/" + std::to_string(k);
            if (!mono[k].is_array() || mono[k].size() != 2 || !mono[k][0].is_number_unsigned() ||
                !mono[k][1].is_number_unsigned())
                schema_error(mp, "expected [param id, exponent]");
            const auto id = mono[k][0].get<std::uint32_t>(), e = mono[k][1].get<std::uint32_t>();
            if (id == 0 || e == 0) schema_error(mp, "parameter id and exponent must be positive");
            powers.emplace_back(id, e);
        }
        Monomial m;
        try {
            m = Monomial(std::move(powers));
        } catch (const Error& e) {
            schema_error(p + "/monomial", e.what());
        }
        f.set(index, f.coeff(index) + Poly::term(std::move(m), c));
    }
    return f;
}

}  // namespace

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // nlohmann counts the offending byte 1-based
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
}

// ------------------------------------------------------------------- DOT

std::string export_dot(const Diagram& d)
{
    std::ostringstream os;
    os << "digraph diagram {\n";
    for (Index v = 0; v < d.size(); ++v) os << "  v" << v << " [label=\"" << dot_escape(d.vertices()[v].label) << "\"];\n";
    for (const auto& [e, label] : d.edges())
        os << "  v" << e.first << " -> v" << e.second << " [label=\""
           << dot_escape(label.str(d.algebra().dual_labels())) << "\"];\n";
    os << "}\n";
    return os.str();
}

// ------------------------------------------------------------ algebra JSON

Json algebra_to_json(const LieAlgebra& algebra)
{
    Json brackets = Json::array();
    for (const auto& [key, value] : algebra.brackets()) {
        Json result = Json::array();
        for (Index k = 0; k < value.size(); ++k)
            if (!value(k).is_zero()) result.push_back({{"index", k}, {"coeff", value(k).str()}});
        brackets.push_back({{"left", key.first}, {"right", key.second}, {"result", result}});
    }
    return {{"labels", algebra.labels()}, {"dual_labels", algebra.dual_labels()}, {"brackets", brackets}};
}

AlgebraPtr algebra_from_json(const Json& j)
{
    const std::string path = "/algebra";
    auto labels = string_list(array_field(j, "labels", path), path + "/labels");
    std::vector<std::string> duals;
    if (j.contains("dual_labels")) duals = string_list(array_field(j, "dual_labels", path), path + "/dual_labels");
    const Index n = static_cast<Index>(labels.size());
    std::vector<BracketEntry> brackets;
    const Json& bs = array_field(j, "brackets", path);
    for (std::size_t i = 0; i < bs.size(); ++i) {
        const std::string p = path + "/brackets/" + std::to_string(i);
        BracketEntry b{get_index(field(bs[i], "left", p), p + "/left", n),
                       get_index(field(bs[i], "right", p), p + "/right", n), zeros<Rational>(n)};
        const Json& result = array_field(bs[i], "result", p);
        for (std::size_t k = 0; k < result.size(); ++k) {
            const std::string rp = p + "/result/" + std::to_string(k);
            const Index idx = get_index(field(result[k], "index", rp), rp + "/index", n);
            b.result(idx) += get_rational(field(result[k], "coeff", rp), rp + "/coeff");
        }
        brackets.push_back(std::move(b));
    }
    return new_lie_algebra(std::move(labels), brackets, std::move(duals));
}

// ------------------------------------------------------------ diagram JSON

Json diagram_to_json(const Diagram& d)
{
    Json vertices = Json::array(), duals = Json::array(), edges = Json::array();
    for (const auto& v : d.vertices()) {
        vertices.push_back(v.label);
        duals.push_back(v.dual_label);
    }
    for (const auto& [e, label] : d.edges())
        edges.push_back({{"from", e.first}, {"to", e.second}, {"label", label_to_json(label)}});
    return {{"algebra", algebra_to_json(d.algebra())}, {"vertices", vertices}, {"vertex_duals", duals}, {"edges", edges}};
}

Diagram diagram_from_json(const Json& j)
{
    AlgebraPtr algebra = algebra_from_json(field(j, "algebra", ""));
    auto labels = string_list(array_field(j, "vertices", ""), "/vertices");
    std::vector<std::string> duals;
    if (j.contains("vertex_duals"))
        duals = string_list(array_field(j, "vertex_duals", ""), "/vertex_duals");
    else
        for (const auto& l : labels) duals.push_back(l + "*");
    if (duals.size() != labels.size()) schema_error("/vertex_duals", "length differs from /vertices");
    std::vector<Vertex> vertices;
    for (std::size_t i = 0; i < labels.size(); ++i) vertices.push_back({labels[i], duals[i]});
    Diagram d(algebra, std::move(vertices));
    const Json& edges = array_field(j, "edges", "");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string p = "/edges/" + std::to_string(i);
        const Index from = get_index(field(edges[i], "from", p), p + "/from", d.size());
        const Index to = get_index(field(edges[i], "to", p), p + "/to", d.size());
        if (d.edge(from, to)) schema_error(p, "duplicate edge");
        LinForm label = label_from_json(field(edges[i], "label", p), algebra->dim(), p + "/label");
        if (label.is_zero()) schema_error(p + "/label", "edge label is zero");
        d.set_edge(from, to, std::move(label));
    }
    return d;
}

std::string export_json(const Diagram& d)
{
    return diagram_to_json(d).dump(2) + "\n";
}

Diagram import_json(std::string_view text)
{
    return diagram_from_json(parse_json(text));
}

// ------------------------------------------------------------ pattern JSON

Json pattern_to_json(const Pattern& p, const Diagram& d)
{
    Json coords = Json::array(), memorized = Json::array(), conditions = Json::array(), equalities = Json::array();
    for (const auto& c : p.coords) {
        if (c)
            coords.push_back({{"free", c->name()}});
        else
            coords.push_back("zero");
    }
    for (const auto& m : p.memorized)
        memorized.push_back({{"position", m.position + 1}, {"form", m.form.str(d.algebra().dual_labels())}});
    for (const auto& c : p.conditions) conditions.push_back(c.str());
    for (const auto& e : p.equalities) equalities.push_back(e.str());
    Json out = {{"coords", coords}, {"memorized", memorized}, {"conditions", conditions}};
    if (!p.equalities.empty()) out["equalities"] = equalities;
    return out;
}

Pattern pattern_from_json(const Json& j, const Diagram& d)
{
    Pattern p;
    const Json& coords = array_field(j, "coords", "");
    if (static_cast<Index>(coords.size()) != d.size()) schema_error("/coords", "length differs from the diagram");
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const std::string path = "/coords/" + std::to_string(i);
        if (coords[i] == "zero") {
            p.coords.push_back(std::nullopt);
            continue;
        }
        const std::string name = get_string(field(coords[i], "free", path), path + "/free");
        const Poly param = Poly::parse(name);
        if (!param.is_monomial() || param.degree() != 1 || param.leading().coeff != Rational(1))
            schema_error(path + "/free", "expected a parameter name such as c_4");
        p.coords.push_back(Param{param.leading().mono.powers()[0].first});
    }
    const Json& memorized = array_field(j, "memorized", "");
    for (std::size_t i = 0; i < memorized.size(); ++i) {
        const std::string path = "/memorized/" + std::to_string(i);
        const Index pos = get_index(field(memorized[i], "position", path), path + "/position", d.size() + 1);
        if (pos == 0) schema_error(path + "/position", "positions are 1-based");
        const std::string form = get_string(field(memorized[i], "form", path), path + "/form");
        p.memorized.push_back({pos - 1, LinForm::parse(form, d.algebra().dual_labels())});
    }
    for (const char* key : {"conditions", "equalities"}) {
        if (!j.contains(key)) continue;
        auto& list = std::string(key) == "conditions" ? p.conditions : p.equalities;
        for (const auto& s : string_list(array_field(j, key, ""), std::string("/") + key)) list.push_back(Poly::parse(s));
    }
    return p;
}

// ------------------------------------------------------------------ vectors

RatVector parse_vector(std::string_view text)
{
    const Json j = parse_json(text);
    if (!j.is_array()) schema_error("", "expected a JSON array of rationals");
    RatVector v(static_cast<Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = get_rational(j[i], "/" + std::to_string(i));
    return v;
}

Json vector_to_json(const RatVector& v)
{
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

Json transcript_to_json(const Transcript& t)
{
    Json out = Json::array();
    for (const auto& s : t) out.push_back({{"l", vector_to_json(s.l)}, {"t", s.t.str()}});
    return out;
}

}  // namespace liediag
