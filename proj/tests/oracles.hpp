#pragma once

// Slow, obviously-correct reference implementations. Nothing here calls into
// the library beyond the Digraph / UndirectedGraph containers.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "dicol/digraph.hpp"
#include "dicol/rational.hpp"

namespace oracle {

using dicol::Arc;
using dicol::Digraph;
using dicol::Edge;
using dicol::Rational;
using dicol::UndirectedGraph;
using dicol::Vertex;

// Kahn's algorithm on the subdigraph induced by the vertices with keep[v].
inline bool acyclic(const Digraph& d, const std::vector<char>& keep)
{
    const int n = d.order();
    std::vector<int> indeg(n, 0);
    for (auto [u, v] : d.arcs())
        if (keep[u] && keep[v])
            ++indeg[v];
    std::vector<Vertex> queue;
    int total = 0;
    for (Vertex v = 0; v < n; ++v)
        if (keep[v]) {
            ++total;
            if (!indeg[v])
                queue.push_back(v);
        }
    int removed = 0;
    while (!queue.empty()) {
        Vertex u = queue.back();
        queue.pop_back();
        ++removed;
        for (auto [a, b] : d.arcs())
            if (a == u && keep[b] && --indeg[b] == 0)
                queue.push_back(b);
    }
    return removed == total;
}

inline bool is_dicolouring(const Digraph& d, const std::vector<int>& colour)
{
    int top = 0;
    for (int c : colour)
        top = std::max(top, c);
    for (int c = 1; c <= top; ++c) {
        std::vector<char> keep(d.order());
        for (Vertex v = 0; v < d.order(); ++v)
            keep[v] = colour[v] == c;
        if (!acyclic(d, keep))
            return false;
    }
    return true;
}

// Minimum number of acyclic sets covering V, by dynamic programming over
// vertex subsets. Needs n <= 20.
inline int dichromatic_number(const Digraph& d)
{
    const int n = d.order();
    if (n == 0)
        return 0;
    const std::uint32_t full = (1u << n) - 1;
    std::vector<char> acyc(full + 1, 0);
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        std::vector<char> keep(n);
        for (Vertex v = 0; v < n; ++v)
            keep[v] = mask >> v & 1;
        acyc[mask] = acyclic(d, keep);
    }
    std::vector<int> best(full + 1, n + 1);
    best[0] = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        // Fix the lowest vertex in the part that covers it.
        const std::uint32_t low = mask & (~mask + 1);
        const std::uint32_t rest = mask ^ low;
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            if (acyc[sub | low])
                best[mask] = std::min(best[mask], best[rest ^ sub] + 1);
            if (sub == 0)
                break;
        }
    }
    return best[full];
}

inline bool is_clique(const UndirectedGraph& g, const std::vector<Vertex>& s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j]))
                return false;
    return true;
}

// Plain recursive clique search: extend by a later vertex adjacent to all chosen.
inline int clique_number(const UndirectedGraph& g)
{
    const int n = g.order();
    int best = 0;
    std::vector<Vertex> chosen;
    auto grow = [&](auto&& self, Vertex from) -> void {
        best = std::max(best, static_cast<int>(chosen.size()));
        for (Vertex v = from; v < n; ++v) {
            bool ok = true;
            for (Vertex u : chosen)
                ok = ok && g.has_edge(u, v);
            if (!ok)
                continue;
            chosen.push_back(v);
            self(self, v + 1);
            chosen.pop_back();
        }
    };
    grow(grow, 0);
    return best;
}

// max over non-empty subsets of 2|E(H)|/|V(H)|.
inline Rational mad(const UndirectedGraph& g)
{
    const int n = g.order();
    Rational best(0);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::int64_t e = 0, s = 0;
        for (Vertex v = 0; v < n; ++v)
            if (mask >> v & 1)
                ++s;
        for (auto [u, v] : g.edges())
            if ((mask >> u & 1) && (mask >> v & 1))
                ++e;
        best = std::max(best, Rational(2 * e, s));
    }
    return best;
}

// Any 4-cycle a-b-c-d-a as a subgraph.
inline bool has_c4(const UndirectedGraph& g)
{
    const int n = g.order();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            for (Vertex c = 0; c < n; ++c)
                for (Vertex d = 0; d < n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d)
                        continue;
                    if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) && g.has_edge(d, a))
                        return true;
                }
    return false;
}

inline bool has_induced_p4(const UndirectedGraph& g)
{
    const int n = g.order();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            for (Vertex c = 0; c < n; ++c)
                for (Vertex d = 0; d < n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d)
                        continue;
                    if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) && !g.has_edge(a, c) &&
                        !g.has_edge(a, d) && !g.has_edge(b, d))
                        return true;
                }
    return false;
}

// Chordal iff no vertex subset of size >= 4 induces a cycle.
inline bool chordal(const UndirectedGraph& g)
{
    const int n = g.order();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Vertex> s;
        for (Vertex v = 0; v < n; ++v)
            if (mask >> v & 1)
                s.push_back(v);
        if (s.size() < 4)
            continue;
        bool two_regular = true;
        for (Vertex v : s) {
            int deg = 0;
            for (Vertex w : s)
                deg += g.has_edge(v, w);
            two_regular &= deg == 2;
        }
        if (!two_regular)
            continue;
        // connected?
        std::vector<Vertex> stack{s[0]}, seen{s[0]};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : s)
                if (g.has_edge(v, w) && std::find(seen.begin(), seen.end(), w) == seen.end()) {
                    seen.push_back(w);
                    stack.push_back(w);
                }
        }
        if (seen.size() == s.size())
            return false;
    }
    return true;
}

inline Digraph random_digraph(int n, double arc_prob, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(arc_prob);
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && coin(rng))
                arcs.emplace_back(u, v);
    return Digraph(n, arcs);
}

inline UndirectedGraph random_graph(int n, double edge_prob, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(edge_prob);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return UndirectedGraph(n, edges);
}

// Tree-decomposition axioms checked from scratch: the node graph is a tree,
// bags cover every vertex and edge, and each vertex's bags are connected.
inline bool decomposition_axioms(const UndirectedGraph& g, const std::vector<std::vector<Vertex>>& bags,
                                 const std::vector<std::pair<int, int>>& tree_edges)
{
    const int nodes = static_cast<int>(bags.size());
    if (nodes == 0)
        return g.order() == 0;
    if (static_cast<int>(tree_edges.size()) != nodes - 1)
        return false;
    auto contains = [&](int node, Vertex v) {
        return std::find(bags[node].begin(), bags[node].end(), v) != bags[node].end();
    };
    // Connected within the node subset `keep`.
    auto connected = [&](const std::vector<char>& keep) {
        int start = -1, total = 0;
        for (int i = 0; i < nodes; ++i)
            if (keep[i]) {
                ++total;
                if (start < 0)
                    start = i;
            }
        if (total == 0)
            return false;
        std::vector<char> seen(nodes, 0);
        std::vector<int> stack{start};
        seen[start] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (auto [a, b] : tree_edges) {
                int y = a == x ? b : b == x ? a : -1;
                if (y >= 0 && keep[y] && !seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    stack.push_back(y);
                }
            }
        }
        return reached == total;
    };
    if (!connected(std::vector<char>(nodes, 1)))
        return false;
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<char> keep(nodes, 0);
        for (int i = 0; i < nodes; ++i)
            keep[i] = contains(i, v);
        if (!connected(keep))
            return false;
    }
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int i = 0; i < nodes && !covered; ++i)
            covered = contains(i, u) && contains(i, v);
        if (!covered)
            return false;
    }
    return true;
}

// Union of the neighbourhoods of o[0..k-1], closed.
inline int closed_union(const UndirectedGraph& g, const std::vector<Vertex>& o, int k)
{
    std::vector<char> in(g.order(), 0);
    for (int i = 0; i < k; ++i) {
        in[o[i]] = 1;
        for (Vertex w : g.neighbours(o[i]))
            in[w] = 1;
    }
    return static_cast<int>(std::count(in.begin(), in.end(), 1));
}

} // namespace oracle
