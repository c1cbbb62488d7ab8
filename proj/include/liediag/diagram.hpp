#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liediag/lie_algebra.hpp"
#include "liediag/linform.hpp"

namespace liediag {

struct Vertex {
    std::string label;
    std::string dual_label;
    friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Diagram of a representation: a digraph on the ordered module basis whose
/// edge (i, j) carries the nonzero linear form l ↦ x_j(T(l) e_i). At most
/// one edge per ordered pair; loops allowed.
class Diagram {
public:
    using Edge = std::pair<Index, Index>;

    Diagram(AlgebraPtr algebra, std::vector<Vertex> vertices);

    const LieAlgebra& algebra() const { return *algebra_; }
    const AlgebraPtr& algebra_ptr() const { return algebra_; }
    Index size() const { return static_cast<Index>(vertices_.size()); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::map<Edge, LinForm>& edges() const { return edges_; }

    /// Label of (i, j), or nullptr when there is no edge.
    const LinForm* edge(Index i, Index j) const;

    /// Sets the label; a zero label removes the edge.
    void set_edge(Index i, Index j, LinForm label);
    /// Adds to the existing label (the "reduced" merge); drops the edge if
    /// the sum vanishes.
    void add_to_edge(Index i, Index j, const LinForm& label);

    friend bool operator==(const Diagram& a, const Diagram& b)
    {
        return *a.algebra_ == *b.algebra_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    void check_vertex(Index i) const;

    AlgebraPtr algebra_;
    std::vector<Vertex> vertices_;
    std::map<Edge, LinForm> edges_;
};

/// Diagram of `t` with vertices in the given order (vertex p is basis
/// vector ordering[p]). An empty ordering means the basis order.
Diagram build_diagram(const Representation& t, const std::vector<Index>& ordering = {});

/// Inverse of build_diagram: T(e_a) is the transposed weight matrix
/// evaluated at e_a. Throws liediag::Error when a label has parameters or
/// the result is not a representation.
Representation to_representation(const Diagram& d);

/// Same diagram with vertex p of the result being vertex ordering[p] of d.
Diagram permute_vertices(const Diagram& d, const std::vector<Index>& ordering);

/// Reverse every arrow, negate every label, dualize vertex labels.
Diagram dual_diagram(const Diagram& d);

Diagram disjoint_union(const Diagram& a, const Diagram& b);
/// Reduced Cartesian product on I × J ordered lexicographically; coincident
/// loops merge by summing labels.
Diagram product(const Diagram& a, const Diagram& b);

bool is_triangular(const Diagram& d);
bool is_strictly_triangular(const Diagram& d);
/// First edge (i, j) with i ≥ j (strict) or i > j (non-strict), in edge order.
std::optional<Diagram::Edge> first_violating_edge(const Diagram& d, bool strict);

/// Number of edges in the longest directed path; std::nullopt when the
/// digraph has a directed cycle (a loop counts).
std::optional<Index> longest_path(const Diagram& d);
/// longest_path + 1: the nilpotency-class bound for an acyclic adjoint
/// diagram.
std::optional<Index> nilpotency_bound(const Diagram& d);

/// Induced diagram on J; J must be closed under outgoing edges. Throws
/// liediag::Error naming the escaping edge otherwise. J is taken in D's
/// vertex order.
Diagram subdiagram(const Diagram& d, const std::vector<Index>& subset);
/// Induced diagram on J; no edge may enter J from outside.
Diagram quotient_diagram(const Diagram& d, const std::vector<Index>& subset);
/// Induced diagram on the vertices of D not in J.
Diagram complement(const Diagram& d, const std::vector<Index>& subset);
std::vector<Index> complement_vertices(const Diagram& d, const std::vector<Index>& subset);

}  // namespace liediag
