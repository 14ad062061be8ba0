#include "dicol/chordal.hpp"

#include <algorithm>
#include <stdexcept>

namespace dicol {

std::vector<int> Ordering::positions(int n) const
{
    if (static_cast<int>(sequence.size()) != n)
        throw std::invalid_argument("ordering has " + std::to_string(sequence.size()) + " entries, expected " +
                                    std::to_string(n));
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        Vertex v = sequence[i];
        if (v < 0 || v >= n || pos[v] != -1)
            throw std::invalid_argument("ordering is not a permutation");
        pos[v] = i;
    }
    return pos;
}

std::vector<std::vector<int>> TreeDecomposition::tree_adjacency() const
{
    std::vector<std::vector<int>> adj(bags.size());
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& l : adj)
        std::sort(l.begin(), l.end());
    return adj;
}

void TreeDecomposition::refresh_width()
{
    width = -1;
    for (const auto& bag : bags)
        width = std::max(width, static_cast<int>(bag.size()) - 1);
}

Ordering lex_bfs(const UndirectedGraph& g)
{
    const int n = g.order();
    // Labels grow by appending n-1-step, so plain lexicographic vector
    // comparison is the Lex-BFS order.
    std::vector<std::vector<int>> label(n);
    std::vector<char> visited(n, 0);
    Ordering order;
    order.sequence.reserve(n);
    for (int step = 0; step < n; ++step) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!visited[v] && (pick < 0 || label[v] > label[pick]))
                pick = v;
        visited[pick] = 1;
        order.sequence.push_back(pick);
        for (Vertex w : g.neighbours(pick))
            if (!visited[w])
                label[w].push_back(n - 1 - step);
    }
    return order;
}

PeoCheck is_perfect_elimination_ordering(const UndirectedGraph& g, const Ordering& o)
{
    const auto pos = o.positions(g.order());
    // For each v, its earliest later neighbour p must see every other later
    // neighbour of v. This is equivalent to all later neighbourhoods being cliques.
    for (Vertex v : o.sequence) {
        Vertex parent = -1;
        for (Vertex w : g.neighbours(v))
            if (pos[w] > pos[v] && (parent < 0 || pos[w] < pos[parent]))
                parent = w;
        if (parent < 0)
            continue;
        for (Vertex w : g.neighbours(v))
            if (pos[w] > pos[v] && w != parent && !g.has_edge(parent, w))
                return {false, v, std::min(parent, w), std::max(parent, w)};
    }
    return {};
}

std::optional<Ordering> recognize_chordal(const UndirectedGraph& g)
{
    Ordering peo = lex_bfs(g);
    std::reverse(peo.sequence.begin(), peo.sequence.end());
    peo.role = OrderingRole::PerfectElimination;
    if (!is_perfect_elimination_ordering(g, peo))
        return std::nullopt;
    return peo;
}

bool is_chordal(const UndirectedGraph& g)
{
    return recognize_chordal(g).has_value();
}

Ordering require_chordal(const UndirectedGraph& g)
{
    Ordering peo = lex_bfs(g);
    std::reverse(peo.sequence.begin(), peo.sequence.end());
    peo.role = OrderingRole::PerfectElimination;
    if (auto check = is_perfect_elimination_ordering(g, peo); !check)
        throw PreconditionError("underlying graph is not chordal", {check.left, check.vertex, check.right});
    return peo;
}

int clique_number_chordal(const UndirectedGraph& g, const Ordering& peo)
{
    if (!is_perfect_elimination_ordering(g, peo))
        throw std::invalid_argument("ordering is not a perfect elimination ordering");
    if (g.order() == 0)
        return 0;
    const auto pos = peo.positions(g.order());
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        int later = 0;
        for (Vertex w : g.neighbours(v))
            later += pos[w] > pos[v];
        best = std::max(best, later);
    }
    return best + 1;
}

TreeDecomposition clique_tree(const UndirectedGraph& g, const Ordering& peo)
{
    if (auto check = is_perfect_elimination_ordering(g, peo); !check)
        throw PreconditionError("graph is not chordal along the given ordering", {check.left, check.vertex, check.right});
    const int n = g.order();
    const auto pos = peo.positions(n);
    TreeDecomposition td;
    // Build G[v_i..v_n] from the back. The later neighbourhood L of v_i is
    // contained in the clique owning its earliest later neighbour p; either L
    // is that whole clique (which then absorbs v_i) or v_i starts a new
    // maximal clique hanging off it.
    std::vector<int> owner(n, -1);
    for (int i = n - 1; i >= 0; --i) {
        Vertex v = peo[i];
        std::vector<Vertex> later;
        Vertex parent = -1;
        for (Vertex w : g.neighbours(v))
            if (pos[w] > i) {
                later.push_back(w);
                if (parent < 0 || pos[w] < pos[parent])
                    parent = w;
            }
        if (parent >= 0 && td.bags[owner[parent]].size() == later.size()) {
            int node = owner[parent];
            auto& bag = td.bags[node];
            bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
            owner[v] = node;
            continue;
        }
        later.push_back(v);
        std::sort(later.begin(), later.end());
        int node = td.node_count();
        td.bags.push_back(std::move(later));
        owner[v] = node;
        if (parent >= 0)
            td.edges.emplace_back(owner[parent], node);
        else if (node > 0)
            td.edges.emplace_back(0, node); // new component
    }
    td.refresh_width();
    return td;
}

} // namespace dicol
