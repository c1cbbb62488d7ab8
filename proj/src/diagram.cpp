#include "liediag/diagram.hpp"

#include <algorithm>
#include <numeric>

#include "liediag/error.hpp"

namespace liediag {

Diagram::Diagram(AlgebraPtr algebra, std::vector<Vertex> vertices)
    : algebra_(std::move(algebra)), vertices_(std::move(vertices))
{
    if (!algebra_) throw Error("diagram without an algebra");
}

void Diagram::check_vertex(Index i) const
{
    if (i < 0 || i >= size()) throw Error("vertex index " + std::to_string(i) + " out of range");
}

const LinForm* Diagram::edge(Index i, Index j) const
{
    auto it = edges_.find({i, j});
    return it == edges_.end() ? nullptr : &it->second;
}

void Diagram::set_edge(Index i, Index j, LinForm label)
{
    check_vertex(i);
    check_vertex(j);
    if (label.dim() != algebra_->dim()) throw Error("edge label is not a form on the diagram's algebra");
    if (label.is_zero())
        edges_.erase({i, j});
    else
        edges_[{i, j}] = std::move(label);
}

void Diagram::add_to_edge(Index i, Index j, const LinForm& label)
{
    const LinForm* existing = edge(i, j);
    set_edge(i, j, existing ? *existing + label : label);
}

Diagram build_diagram(const Representation& t, const std::vector<Index>& ordering)
{
    std::vector<Index> order = ordering;
    if (order.empty()) {
        order.resize(t.dim());
        std::iota(order.begin(), order.end(), Index{0});
    }
    if (!is_permutation(order, t.dim())) throw Error("ordering is not a permutation of the module basis");
    std::vector<Vertex> vertices;
    for (Index p : order) vertices.push_back({t.labels()[p], t.dual_labels()[p]});
    Diagram d(t.algebra_ptr(), std::move(vertices));
    const Index dim_l = t.algebra().dim();
    for (Index p = 0; p < t.dim(); ++p)
        for (Index q = 0; q < t.dim(); ++q) {
            LinForm label(dim_l);
            for (Index a = 0; a < dim_l; ++a) {
                const Rational& v = t.matrix(a)(order[q], order[p]);
                if (!v.is_zero()) label.set(a, Poly(v));
            }
            if (!label.is_zero()) d.set_edge(p, q, std::move(label));
        }
    return d;
}

Representation to_representation(const Diagram& d)
{
    const Index n = d.size();
    std::vector<RatMatrix> mats(d.algebra().dim(), zeros<Rational>(n, n));
    for (const auto& [e, label] : d.edges()) {
        if (!label.is_concrete())
            throw Error("edge (" + d.vertices()[e.first].label + ", " + d.vertices()[e.second].label +
                        ") has a parameterized label");
        for (const auto& [a, c] : label.entries()) mats[a](e.second, e.first) = c.constant();
    }
    std::vector<std::string> labels, duals;
    for (const auto& v : d.vertices()) {
        labels.push_back(v.label);
        duals.push_back(v.dual_label);
    }
    Representation t(d.algebra_ptr(), std::move(labels), std::move(duals), std::move(mats));
    const ValidationReport report = validate_representation(t);
    if (!report.ok) throw Error("diagram is not the diagram of a representation: " + report.message);
    return t;
}

Diagram permute_vertices(const Diagram& d, const std::vector<Index>& ordering)
{
    if (!is_permutation(ordering, d.size())) throw Error("ordering is not a permutation of the vertices");
    std::vector<Index> where(d.size());
    std::vector<Vertex> vertices;
    for (Index p = 0; p < d.size(); ++p) {
        where[ordering[p]] = p;
        vertices.push_back(d.vertices()[ordering[p]]);
    }
    Diagram out(d.algebra_ptr(), std::move(vertices));
    for (const auto& [e, label] : d.edges()) out.set_edge(where[e.first], where[e.second], label);
    return out;
}

Diagram dual_diagram(const Diagram& d)
{
    std::vector<Vertex> vertices;
    for (const auto& v : d.vertices()) vertices.push_back({v.dual_label, v.label});
    Diagram out(d.algebra_ptr(), std::move(vertices));
    for (const auto& [e, label] : d.edges()) out.set_edge(e.second, e.first, -label);
    return out;
}

Diagram disjoint_union(const Diagram& a, const Diagram& b)
{
    if (!(a.algebra() == b.algebra())) throw Error("disjoint union of diagrams over different algebras");
    std::vector<Vertex> vertices = a.vertices();
    vertices.insert(vertices.end(), b.vertices().begin(), b.vertices().end());
    Diagram out(a.algebra_ptr(), std::move(vertices));
    for (const auto& [e, label] : a.edges()) out.set_edge(e.first, e.second, label);
    for (const auto& [e, label] : b.edges()) out.set_edge(e.first + a.size(), e.second + a.size(), label);
    return out;
}

Diagram product(const Diagram& a, const Diagram& b)
{
    if (!(a.algebra() == b.algebra())) throw Error("product of diagrams over different algebras");
    const Index nb = b.size();
    std::vector<Vertex> vertices;
    for (const auto& va : a.vertices())
        for (const auto& vb : b.vertices())
            vertices.push_back({va.label + "⊗" + vb.label, va.dual_label + "⊗" + vb.dual_label});
    Diagram out(a.algebra_ptr(), std::move(vertices));
    auto idx = [nb](Index i, Index j) { return i * nb + j; };
    for (const auto& [e, label] : a.edges())
        for (Index j = 0; j < nb; ++j) out.add_to_edge(idx(e.first, j), idx(e.second, j), label);
    for (const auto& [e, label] : b.edges())
        for (Index i = 0; i < a.size(); ++i) out.add_to_edge(idx(i, e.first), idx(i, e.second), label);
    return out;
}

std::optional<Diagram::Edge> first_violating_edge(const Diagram& d, bool strict)
{
    for (const auto& [e, label] : d.edges())
        if (strict ? e.first >= e.second : e.first > e.second) return e;
    return std::nullopt;
}

bool is_triangular(const Diagram& d)
{
    return !first_violating_edge(d, false);
}

bool is_strictly_triangular(const Diagram& d)
{
    return !first_violating_edge(d, true);
}

std::optional<Index> longest_path(const Diagram& d)
{
    const Index n = d.size();
    std::vector<std::vector<Index>> out(n);
    std::vector<Index> indegree(n, 0);
    for (const auto& [e, label] : d.edges()) {
        if (e.first == e.second) return std::nullopt;
        out[e.first].push_back(e.second);
        ++indegree[e.second];
    }
    // Kahn's algorithm; dist[v] is the longest path ending at v.
    std::vector<Index> queue, dist(n, 0);
    for (Index v = 0; v < n; ++v)
        if (indegree[v] == 0) queue.push_back(v);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Index v = queue[head];
        for (Index w : out[v]) {
            dist[w] = std::max(dist[w], dist[v] + 1);
            if (--indegree[w] == 0) queue.push_back(w);
        }
    }
    if (static_cast<Index>(queue.size()) != n) return std::nullopt;
    return n == 0 ? 0 : *std::max_element(dist.begin(), dist.end());
}

std::optional<Index> nilpotency_bound(const Diagram& d)
{
    auto l = longest_path(d);
    if (!l) return std::nullopt;
    return *l + 1;
}

namespace {

std::vector<bool> membership(const Diagram& d, const std::vector<Index>& subset)
{
    std::vector<bool> in(d.size(), false);
    for (Index v : subset) {
        if (v < 0 || v >= d.size()) throw Error("vertex index " + std::to_string(v) + " out of range");
        in[v] = true;
    }
    return in;
}

Diagram induced(const Diagram& d, const std::vector<bool>& in)
{
    std::vector<Index> map(d.size(), -1);
    std::vector<Vertex> vertices;
    for (Index v = 0; v < d.size(); ++v)
        if (in[v]) {
            map[v] = static_cast<Index>(vertices.size());
            vertices.push_back(d.vertices()[v]);
        }
    Diagram out(d.algebra_ptr(), std::move(vertices));
    for (const auto& [e, label] : d.edges())
        if (in[e.first] && in[e.second]) out.set_edge(map[e.first], map[e.second], label);
    return out;
}

std::string edge_name(const Diagram& d, const Diagram::Edge& e)
{
    return "(" + d.vertices()[e.first].label + ", " + d.vertices()[e.second].label + ")";
}

}  // namespace

Diagram subdiagram(const Diagram& d, const std::vector<Index>& subset)
{
    const auto in = membership(d, subset);
    for (const auto& [e, label] : d.edges())
        if (in[e.first] && !in[e.second])
            throw Error("not a subdiagram: edge " + edge_name(d, e) + " leaves the vertex set");
    return induced(d, in);
}

Diagram quotient_diagram(const Diagram& d, const std::vector<Index>& subset)
{
    const auto in = membership(d, subset);
    for (const auto& [e, label] : d.edges())
        if (!in[e.first] && in[e.second])
            throw Error("not a quotient diagram: edge " + edge_name(d, e) + " enters the vertex set");
    return induced(d, in);
}

Diagram complement(const Diagram& d, const std::vector<Index>& subset)
{
    auto in = membership(d, subset);
    in.flip();
    return induced(d, in);
}

std::vector<Index> complement_vertices(const Diagram& d, const std::vector<Index>& subset)
{
    const auto in = membership(d, subset);
    std::vector<Index> out;
    for (Index v = 0; v < d.size(); ++v)
        if (!in[v]) out.push_back(v);
    return out;
}

}  // namespace liediag
