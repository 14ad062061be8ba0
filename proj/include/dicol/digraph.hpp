#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dicol/errors.hpp"
#include "dicol/rational.hpp"

namespace dicol {

using Arc = std::pair<Vertex, Vertex>;
using Edge = std::pair<Vertex, Vertex>;

// Digraph on the dense vertex set 0..n-1. Immutable once built: arcs are
// deduplicated, neighbourhoods are sorted, and membership tests hash.
class Digraph {
public:
    Digraph() = default;

    /// Throws std::invalid_argument naming the offending pair on a self-loop
    /// or an out-of-range endpoint. Duplicate arcs collapse to one.
    Digraph(int n, std::span<const Arc> arcs);

    int order() const noexcept { return n_; }
    std::size_t arc_count() const noexcept { return arcs_.size(); }
    std::size_t digon_count() const noexcept { return digons_; }
    std::size_t simple_arc_count() const noexcept { return arcs_.size() - 2 * digons_; }

    bool has_arc(Vertex u, Vertex v) const;
    bool has_digon(Vertex u, Vertex v) const { return has_arc(u, v) && has_arc(v, u); }
    /// Either direction present.
    bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }

    std::span<const Vertex> out_neighbours(Vertex v) const { return out_[v]; }
    std::span<const Vertex> in_neighbours(Vertex v) const { return in_[v]; }

    /// Number of digons incident to v, i.e. the degree of v in B(D).
    int digon_degree(Vertex v) const;

    /// All arcs sorted lexicographically.
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    friend bool operator==(const Digraph& a, const Digraph& b)
    {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

private:
    std::uint64_t key(Vertex u, Vertex v) const
    {
        return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(v);
    }

    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    std::unordered_set<std::uint64_t> index_;
    std::size_t digons_ = 0;
};

class UndirectedGraph {
public:
    UndirectedGraph() = default;

    /// Edges are unordered; (u,v) and (v,u) name the same edge. Throws
    /// std::invalid_argument on a self-loop or an out-of-range endpoint.
    UndirectedGraph(int n, std::span<const Edge> edges);

    int order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool has_edge(Vertex u, Vertex v) const;
    std::span<const Vertex> neighbours(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;

    /// Edges as (min, max) pairs, sorted.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::uint64_t key(Vertex u, Vertex v) const
    {
        if (u > v)
            std::swap(u, v);
        return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(v);
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::unordered_set<std::uint64_t> index_;
};

// Total map vertex -> colour in 1..num_colours, normalized so that every
// colour in that range is used.
struct Colouring {
    std::vector<int> colours;
    int num_colours = 0;

    int operator[](Vertex v) const { return colours[v]; }
    std::size_t size() const noexcept { return colours.size(); }

    /// Relabels the used colours to 1..c preserving their relative order.
    /// Throws std::invalid_argument on a colour below 1.
    static Colouring normalized(std::vector<int> raw);

    friend bool operator==(const Colouring&, const Colouring&) = default;
};

Digraph build_digraph(int n, std::span<const Arc> arcs);

/// UG(D): uv is an edge iff uv or vu is an arc.
UndirectedGraph underlying_graph(const Digraph& d);

/// B(D): uv is an edge iff uv is a digon.
UndirectedGraph bidirected_graph(const Digraph& d);

/// Maximum degree of B(D).
int max_bidegree(const Digraph& d);

/// Subdigraph induced by `vertices`, renumbered in the given order.
Digraph induced_subdigraph(const Digraph& d, std::span<const Vertex> vertices);

UndirectedGraph induced_subgraph(const UndirectedGraph& g, std::span<const Vertex> vertices);

/// Vertices of b are shifted by a.order().
Digraph disjoint_union(const Digraph& a, const Digraph& b);

/// Connected components of g, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const UndirectedGraph& g);

struct DicolouringCheck {
    /// Empty iff the colouring is a dicolouring. Otherwise a monochromatic
    /// directed cycle v0 -> v1 -> ... -> v0; a digon reports as two vertices.
    std::vector<Vertex> cycle;

    bool valid() const noexcept { return cycle.empty(); }
    explicit operator bool() const noexcept { return valid(); }
};

/// Throws std::invalid_argument when the colouring does not cover exactly
/// the vertices of d.
DicolouringCheck validate_dicolouring(const Digraph& d, const Colouring& c);

/// Finds a directed cycle of d, or an empty vector when d is acyclic.
std::vector<Vertex> find_directed_cycle(const Digraph& d);

/// Exact clique number by pivoting Bron-Kerbosch. Exponential worst case.
int clique_number(const UndirectedGraph& g);

/// Exact Mad(G) as a reduced fraction; 0 for the empty graph. Exhaustive
/// over induced subgraphs up to 20 vertices, flow-based above.
Rational max_average_degree(const UndirectedGraph& g);

/// Exhaustive search over all vertex subsets. Requires order() <= 30.
Rational max_average_degree_exhaustive(const UndirectedGraph& g);

/// Binary search over candidate densities 2e/s, deciding each with a
/// max-closure min-cut.
Rational max_average_degree_flow(const UndirectedGraph& g);

struct C4Check {
    /// Empty when C4-free; otherwise a 4-cycle a-b-c-d-a (edges ab, bc, cd, da).
    std::vector<Vertex> cycle;

    bool c4_free() const noexcept { return cycle.empty(); }
    explicit operator bool() const noexcept { return c4_free(); }
};

/// C4 as a subgraph, not necessarily induced.
C4Check is_c4_free(const UndirectedGraph& g);

/// Returns an induced P4 a-b-c-d, or an empty vector when g is a cograph.
std::vector<Vertex> find_induced_p4(const UndirectedGraph& g);

} // namespace dicol
