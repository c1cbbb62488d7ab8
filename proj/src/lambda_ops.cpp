#include "liediag/lambda_ops.hpp"

#include <algorithm>
#include <map>

#include "liediag/error.hpp"

namespace liediag {

namespace {

using Tuple = std::vector<Index>;

enum class Kind { SymQuotient, SymSub, Exterior };

void tuples(Index count, int n, bool strict, Tuple& cur, std::vector<Tuple>& out)
{
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    Index start = cur.empty() ? 0 : cur.back() + (strict ? 1 : 0);
    for (Index v = start; v < count; ++v) {
        cur.push_back(v);
        tuples(count, n, strict, cur, out);
        cur.pop_back();
    }
}

std::string tuple_label(const Tuple& t, const std::vector<std::string>& names, Kind kind)
{
    if (kind == Kind::Exterior) {
        std::string out;
        for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "∧" : "") + names[t[i]];
        return out;
    }
    const bool short_names = std::all_of(t.begin(), t.end(), [&](Index v) { return names[v].size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < t.size();) {
        std::size_t j = i;
        while (j < t.size() && t[j] == t[i]) ++j;
        if (i && !short_names) out += "·";
        out += names[t[i]];
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

Diagram lambda_op(const Diagram& d, int n, std::optional<long> char_p, Kind kind)
{
    if (n <= 0) throw Error("power degree must be positive, got " + std::to_string(n));
    if (char_p && *char_p < 2) throw Error("characteristic must be a prime, got " + std::to_string(*char_p));
    const bool strict = kind == Kind::Exterior;
    if (strict && n > d.size())
        throw Error("exterior power degree " + std::to_string(n) + " exceeds vertex count " + std::to_string(d.size()));

    std::vector<Tuple> verts;
    Tuple cur;
    tuples(d.size(), n, strict, cur, verts);
    std::map<Tuple, Index> index;
    std::vector<std::string> labels, duals;
    for (const auto& v : d.vertices()) {
        labels.push_back(v.label);
        duals.push_back(v.dual_label);
    }
    std::vector<Vertex> vertices;
    for (std::size_t k = 0; k < verts.size(); ++k) {
        index[verts[k]] = static_cast<Index>(k);
        vertices.push_back({tuple_label(verts[k], labels, kind), tuple_label(verts[k], duals, kind)});
    }

    std::vector<std::vector<std::pair<Index, const LinForm*>>> out_edges(d.size());
    for (const auto& [e, label] : d.edges())
        if (e.first != e.second) out_edges[e.first].emplace_back(e.second, &label);

    Diagram result(d.algebra_ptr(), std::move(vertices));
    for (std::size_t k = 0; k < verts.size(); ++k) {
        const Tuple& a_tuple = verts[k];
        LinForm loop(d.algebra().dim());
        for (Index v : a_tuple)
            if (const LinForm* w = d.edge(v, v)) loop += *w;
        result.set_edge(static_cast<Index>(k), static_cast<Index>(k), loop);

        for (std::size_t pos = 0; pos < a_tuple.size(); ++pos) {
            if (pos && a_tuple[pos] == a_tuple[pos - 1]) continue;  // same entry a, already handled
            const Index a = a_tuple[pos];
            const auto mult_a = std::count(a_tuple.begin(), a_tuple.end(), a);
            for (const auto& [b, w] : out_edges[a]) {
                Tuple b_tuple = a_tuple;
                b_tuple.erase(b_tuple.begin() + static_cast<std::ptrdiff_t>(pos));
                if (strict && std::find(b_tuple.begin(), b_tuple.end(), b) != b_tuple.end()) continue;
                auto at = std::upper_bound(b_tuple.begin(), b_tuple.end(), b);
                const auto bpos = at - b_tuple.begin();
                b_tuple.insert(at, b);
                Rational factor(1);
                switch (kind) {
                case Kind::SymQuotient: factor = Rational(mult_a); break;
                case Kind::SymSub: factor = Rational(std::count(b_tuple.begin(), b_tuple.end(), b)); break;
                case Kind::Exterior: factor = Rational((static_cast<long>(bpos) - static_cast<long>(pos)) % 2 ? -1 : 1); break;
                }
                result.set_edge(static_cast<Index>(k), index.at(b_tuple), Poly(factor) * *w);
            }
        }
    }
    if (char_p) {
        std::vector<Diagram::Edge> doomed;
        for (const auto& [e, label] : result.edges())
            if (label.vanishes_mod(*char_p)) doomed.push_back(e);
        for (const auto& e : doomed) result.set_edge(e.first, e.second, LinForm(d.algebra().dim()));
    }
    return result;
}

}  // namespace

Diagram sym_power(const Diagram& d, int n, std::optional<long> char_p)
{
    return lambda_op(d, n, char_p, Kind::SymQuotient);
}

Diagram sym_sub(const Diagram& d, int n, std::optional<long> char_p)
{
    return lambda_op(d, n, char_p, Kind::SymSub);
}

Diagram ext_power(const Diagram& d, int n, std::optional<long> char_p)
{
    return lambda_op(d, n, char_p, Kind::Exterior);
}

}  // namespace liediag
