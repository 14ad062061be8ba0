#include "dicol/chordal.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <set>
#include <stdexcept>

namespace dicol {

namespace {

std::vector<Vertex> difference(const std::vector<Vertex>& a, const std::vector<Vertex>& b)
{
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool includes(const std::vector<Vertex>& big, const std::vector<Vertex>& small)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::string tree_error(const TreeDecomposition& td)
{
    const int nodes = td.node_count();
    if (nodes == 0)
        return td.edges.empty() ? "" : "edges without nodes";
    if (static_cast<int>(td.edges.size()) != nodes - 1)
        return "tree has " + std::to_string(td.edges.size()) + " edges for " + std::to_string(nodes) + " nodes";
    for (auto [a, b] : td.edges)
        if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b)
            return "bad tree edge (" + std::to_string(a) + "," + std::to_string(b) + ")";
    auto adj = td.tree_adjacency();
    std::vector<char> seen(nodes, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int w : adj[queue[head]])
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    if (static_cast<int>(queue.size()) != nodes)
        return "tree is disconnected";
    return "";
}

} // namespace

std::string decomposition_error(const UndirectedGraph& g, const TreeDecomposition& td)
{
    if (auto e = tree_error(td); !e.empty())
        return e;
    const int n = g.order();
    std::vector<std::vector<int>> nodes_of(n);
    for (int t = 0; t < td.node_count(); ++t) {
        const auto& bag = td.bags[t];
        for (std::size_t i = 0; i < bag.size(); ++i) {
            if (bag[i] < 0 || bag[i] >= n)
                return "bag " + std::to_string(t) + " holds unknown vertex " + std::to_string(bag[i]);
            if (i > 0 && bag[i - 1] >= bag[i])
                return "bag " + std::to_string(t) + " is not sorted and duplicate-free";
            nodes_of[bag[i]].push_back(t);
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (nodes_of[v].empty())
            return "vertex " + std::to_string(v) + " is in no bag";
    for (auto [u, v] : g.edges()) {
        std::vector<int> common;
        std::set_intersection(nodes_of[u].begin(), nodes_of[u].end(), nodes_of[v].begin(), nodes_of[v].end(),
                              std::back_inserter(common));
        if (common.empty())
            return "edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag";
    }
    // A node set of a tree induces a subtree iff it spans exactly |set|-1 tree edges.
    std::vector<int> inner_edges(n, 0);
    for (auto [a, b] : td.edges) {
        std::vector<Vertex> common;
        std::set_intersection(td.bags[a].begin(), td.bags[a].end(), td.bags[b].begin(), td.bags[b].end(),
                              std::back_inserter(common));
        for (Vertex v : common)
            ++inner_edges[v];
    }
    for (Vertex v = 0; v < n; ++v)
        if (inner_edges[v] != static_cast<int>(nodes_of[v].size()) - 1)
            return "bags containing vertex " + std::to_string(v) + " do not form a subtree";
    return "";
}

bool is_full(const TreeDecomposition& td)
{
    for (const auto& bag : td.bags)
        if (static_cast<int>(bag.size()) != td.width + 1)
            return false;
    return true;
}

bool is_reduced(const TreeDecomposition& td)
{
    for (auto [a, b] : td.edges)
        if (includes(td.bags[a], td.bags[b]) || includes(td.bags[b], td.bags[a]))
            return false;
    return true;
}

bool is_valid_decomposition(const TreeDecomposition& td)
{
    for (auto [a, b] : td.edges)
        if (difference(td.bags[a], td.bags[b]).size() != 1 || difference(td.bags[b], td.bags[a]).size() != 1)
            return false;
    return true;
}

TreeDecomposition make_valid(const TreeDecomposition& input, const UndirectedGraph& g)
{
    if (auto e = decomposition_error(g, input); !e.empty())
        throw std::invalid_argument("not a tree-decomposition: " + e);
    TreeDecomposition td = input;
    td.refresh_width();
    if (td.node_count() == 0)
        return td;
    const std::size_t full_size = static_cast<std::size_t>(td.width) + 1;

    std::vector<std::set<int>> adj(td.node_count());
    for (auto [a, b] : td.edges) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    std::vector<char> alive(td.node_count(), 1);

    // Reduce: contract every edge whose one bag contains the other.
    for (bool changed = true; changed;) {
        changed = false;
        for (int a = 0; a < td.node_count() && !changed; ++a) {
            if (!alive[a])
                continue;
            for (int b : adj[a]) {
                if (!includes(td.bags[b], td.bags[a]))
                    continue;
                for (int c : adj[a])
                    if (c != b) {
                        adj[c].erase(a);
                        adj[c].insert(b);
                        adj[b].insert(c);
                    }
                adj[b].erase(a);
                adj[a].clear();
                alive[a] = 0;
                changed = true;
                break;
            }
        }
    }

    // Fill: a short bag next to a full one borrows that bag's smallest extra vertex.
    for (bool changed = true; changed;) {
        changed = false;
        for (int a = 0; a < td.node_count(); ++a) {
            if (!alive[a] || td.bags[a].size() >= full_size)
                continue;
            for (int b : adj[a]) {
                if (td.bags[b].size() != full_size)
                    continue;
                Vertex v = difference(td.bags[b], td.bags[a]).front();
                auto& bag = td.bags[a];
                bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
                changed = true;
                break;
            }
        }
    }

    // Subdivide: an edge t-t' whose bags differ by two or more gets a middle
    // bag (X_t' - u) + x, which moves the remaining difference onto t-t''.
    std::deque<std::pair<int, int>> work;
    for (int a = 0; a < td.node_count(); ++a)
        for (int b : adj[a])
            if (a < b)
                work.emplace_back(a, b);
    std::vector<std::pair<int, int>> final_edges;
    while (!work.empty()) {
        auto [t, tp] = work.front();
        work.pop_front();
        auto only_t = difference(td.bags[t], td.bags[tp]);
        if (only_t.size() <= 1) {
            final_edges.emplace_back(t, tp);
            continue;
        }
        Vertex x = only_t.front();
        Vertex u = difference(td.bags[tp], td.bags[t]).front();
        std::vector<Vertex> middle = td.bags[tp];
        middle.erase(std::lower_bound(middle.begin(), middle.end(), u));
        middle.insert(std::lower_bound(middle.begin(), middle.end(), x), x);
        int tpp = td.node_count();
        td.bags.push_back(std::move(middle));
        alive.push_back(1);
        final_edges.emplace_back(tpp, tp);
        work.emplace_front(t, tpp);
    }

    // Compact node ids in creation order.
    std::vector<int> index(td.node_count(), -1);
    TreeDecomposition out;
    for (int t = 0; t < td.node_count(); ++t)
        if (alive[t]) {
            index[t] = out.node_count();
            out.bags.push_back(std::move(td.bags[t]));
        }
    for (auto [a, b] : final_edges)
        out.edges.emplace_back(std::min(index[a], index[b]), std::max(index[a], index[b]));
    std::sort(out.edges.begin(), out.edges.end());
    out.refresh_width();
    return out;
}

TreeDecomposition valid_decomposition(const UndirectedGraph& g)
{
    return make_valid(clique_tree(g, require_chordal(g)), g);
}

namespace {

// BFS distances; farthest node, ties to the smallest index.
std::pair<int, std::vector<int>> farthest_node(const std::vector<std::vector<int>>& adj, int from)
{
    std::vector<int> dist(adj.size(), -1), parent(adj.size(), -1);
    std::vector<int> queue{from};
    dist[from] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int w : adj[queue[head]])
            if (dist[w] < 0) {
                dist[w] = dist[queue[head]] + 1;
                parent[w] = queue[head];
                queue.push_back(w);
            }
    int best = from;
    for (int t = 0; t < static_cast<int>(adj.size()); ++t)
        if (dist[t] > dist[best])
            best = t;
    return {best, parent};
}

} // namespace

std::vector<int> longest_tree_path(const TreeDecomposition& td)
{
    if (td.node_count() == 0)
        return {};
    auto adj = td.tree_adjacency();
    int a = farthest_node(adj, 0).first;
    auto [b, parent] = farthest_node(adj, a);
    std::vector<int> path;
    for (int t = b; t != -1; t = parent[t])
        path.push_back(t);
    std::reverse(path.begin(), path.end()); // a ... b
    return path;
}

Ordering lemma_ordering(const TreeDecomposition& td, std::span<const int> path)
{
    Ordering out;
    out.role = OrderingRole::Prefix;
    if (td.node_count() == 0)
        return out;
    if (path.empty())
        throw std::invalid_argument("empty path");
    auto adj = td.tree_adjacency();
    std::vector<int> path_index(td.node_count(), -1);
    for (std::size_t i = 0; i < path.size(); ++i)
        path_index[path[i]] = static_cast<int>(i);
    const int root = path.back();

    // Post-order DFS from the root; the path child goes first, then the
    // remaining children by node index.
    std::vector<int> father(td.node_count(), -1);
    std::vector<int> post;
    std::vector<std::pair<int, std::vector<int>>> stack;
    auto children_of = [&](int u, int from) {
        int on_path = path_index[u] > 0 ? path[path_index[u] - 1] : -1;
        std::vector<int> kids;
        if (on_path >= 0)
            kids.push_back(on_path);
        for (int w : adj[u])
            if (w != from && w != on_path)
                kids.push_back(w);
        std::reverse(kids.begin(), kids.end()); // popped from the back
        return kids;
    };
    stack.emplace_back(root, children_of(root, -1));
    while (!stack.empty()) {
        auto& [u, kids] = stack.back();
        if (kids.empty()) {
            post.push_back(u);
            stack.pop_back();
            continue;
        }
        int child = kids.back();
        kids.pop_back();
        father[child] = u;
        int parent = u;
        stack.emplace_back(child, children_of(child, parent));
    }

    for (int t : post) {
        if (t == root)
            break;
        auto introduced = difference(td.bags[t], td.bags[father[t]]);
        if (introduced.size() != 1)
            throw std::invalid_argument("decomposition is not valid");
        out.sequence.push_back(introduced.front());
    }
    for (Vertex v : td.bags[root])
        out.sequence.push_back(v);
    return out;
}

Ordering lemma_ordering(const UndirectedGraph& g)
{
    auto peo = require_chordal(g);
    auto components = connected_components(g);
    if (components.size() > 1)
        throw PreconditionError("graph is disconnected", {components[0].front(), components[1].front()});
    auto td = make_valid(clique_tree(g, peo), g);
    auto path = longest_tree_path(td);
    return lemma_ordering(td, path);
}

PrefixCheck check_prefix_properties(const UndirectedGraph& g, const Ordering& o)
{
    const int n = g.order();
    o.positions(n); // permutation check
    int omega = 0;
    if (auto peo = recognize_chordal(g))
        omega = clique_number_chordal(g, *peo);
    else
        omega = clique_number(g);
    std::vector<char> in_union(n, 0);
    int union_size = 0;
    for (int k = 1; k <= n; ++k) {
        Vertex a = o[k - 1];
        if (g.degree(a) > omega + k - 2)
            return {false, k, 1};
        auto mark = [&](Vertex v) {
            if (!in_union[v]) {
                in_union[v] = 1;
                ++union_size;
            }
        };
        mark(a);
        for (Vertex w : g.neighbours(a))
            mark(w);
        if (union_size > omega + 2 * k - 1)
            return {false, k, 2};
    }
    return {};
}

} // namespace dicol
