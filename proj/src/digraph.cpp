#include "dicol/digraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace dicol {

namespace {

std::string pair_text(Vertex u, Vertex v)
{
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void check_pair(int n, Vertex u, Vertex v, const char* what)
{
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument(std::string(what) + " " + pair_text(u, v) + " has an endpoint outside [0," +
                                    std::to_string(n) + ")");
    if (u == v)
        throw std::invalid_argument(std::string("self-loop ") + pair_text(u, v));
}

} // namespace

Digraph::Digraph(int n, std::span<const Arc> arcs) : n_(n), out_(n), in_(n)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    arcs_.assign(arcs.begin(), arcs.end());
    for (auto [u, v] : arcs_)
        check_pair(n, u, v, "arc");
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
    index_.reserve(arcs_.size());
    for (auto [u, v] : arcs_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
        index_.insert(key(u, v));
    }
    for (auto& l : in_)
        std::sort(l.begin(), l.end());
    for (auto [u, v] : arcs_)
        if (u < v && index_.contains(key(v, u)))
            ++digons_;
}

bool Digraph::has_arc(Vertex u, Vertex v) const
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        return false;
    return index_.contains(key(u, v));
}

int Digraph::digon_degree(Vertex v) const
{
    int count = 0;
    for (Vertex w : out_[v])
        if (has_arc(w, v))
            ++count;
    return count;
}

UndirectedGraph::UndirectedGraph(int n, std::span<const Edge> edges) : n_(n), adj_(n)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        check_pair(n, u, v, "edge");
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    index_.reserve(edges_.size());
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        index_.insert(key(u, v));
    }
    for (auto& l : adj_)
        std::sort(l.begin(), l.end());
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        return false;
    return index_.contains(key(u, v));
}

int UndirectedGraph::max_degree() const
{
    int best = 0;
    for (const auto& l : adj_)
        best = std::max(best, static_cast<int>(l.size()));
    return best;
}

Colouring Colouring::normalized(std::vector<int> raw)
{
    std::map<int, int> relabel;
    for (int c : raw) {
        if (c < 1)
            throw std::invalid_argument("colour " + std::to_string(c) + " below 1");
        relabel.emplace(c, 0);
    }
    int next = 0;
    for (auto& [from, to] : relabel)
        to = ++next;
    for (int& c : raw)
        c = relabel[c];
    return Colouring{std::move(raw), next};
}

Digraph build_digraph(int n, std::span<const Arc> arcs)
{
    return Digraph(n, arcs);
}

UndirectedGraph underlying_graph(const Digraph& d)
{
    std::vector<Edge> edges;
    edges.reserve(d.arc_count());
    for (auto [u, v] : d.arcs())
        if (u < v || !d.has_arc(v, u))
            edges.emplace_back(u, v);
    return UndirectedGraph(d.order(), edges);
}

UndirectedGraph bidirected_graph(const Digraph& d)
{
    std::vector<Edge> edges;
    for (auto [u, v] : d.arcs())
        if (u < v && d.has_arc(v, u))
            edges.emplace_back(u, v);
    return UndirectedGraph(d.order(), edges);
}

int max_bidegree(const Digraph& d)
{
    int best = 0;
    for (Vertex v = 0; v < d.order(); ++v)
        best = std::max(best, d.digon_degree(v));
    return best;
}

Digraph induced_subdigraph(const Digraph& d, std::span<const Vertex> vertices)
{
    std::vector<int> index(d.order(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index[vertices[i]] = static_cast<int>(i);
    std::vector<Arc> arcs;
    for (Vertex u : vertices)
        for (Vertex v : d.out_neighbours(u))
            if (index[v] >= 0)
                arcs.emplace_back(index[u], index[v]);
    return Digraph(static_cast<int>(vertices.size()), arcs);
}

UndirectedGraph induced_subgraph(const UndirectedGraph& g, std::span<const Vertex> vertices)
{
    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (Vertex u : vertices)
        for (Vertex v : g.neighbours(u))
            if (index[v] > index[u])
                edges.emplace_back(index[u], index[v]);
    return UndirectedGraph(static_cast<int>(vertices.size()), edges);
}

Digraph disjoint_union(const Digraph& a, const Digraph& b)
{
    std::vector<Arc> arcs = a.arcs();
    for (auto [u, v] : b.arcs())
        arcs.emplace_back(u + a.order(), v + a.order());
    return Digraph(a.order() + b.order(), arcs);
}

std::vector<std::vector<Vertex>> connected_components(const UndirectedGraph& g)
{
    std::vector<std::vector<Vertex>> components;
    std::vector<char> seen(g.order(), 0);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> component{s};
        seen[s] = 1;
        for (std::size_t head = 0; head < component.size(); ++head)
            for (Vertex w : g.neighbours(component[head]))
                if (!seen[w]) {
                    seen[w] = 1;
                    component.push_back(w);
                }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    return components;
}

namespace {

// Iterative DFS over the arcs accepted by `keep`; returns the first cycle met.
template <typename Keep>
std::vector<Vertex> find_cycle_where(const Digraph& d, Keep keep)
{
    enum : char { White, Grey, Black };
    std::vector<char> state(d.order(), White);
    std::vector<Vertex> stack;
    std::vector<std::size_t> next;
    for (Vertex root = 0; root < d.order(); ++root) {
        if (state[root] != White)
            continue;
        stack.assign(1, root);
        next.assign(1, 0);
        state[root] = Grey;
        while (!stack.empty()) {
            Vertex u = stack.back();
            auto outs = d.out_neighbours(u);
            if (next.back() == outs.size()) {
                state[u] = Black;
                stack.pop_back();
                next.pop_back();
                continue;
            }
            Vertex w = outs[next.back()++];
            if (!keep(u, w))
                continue;
            if (state[w] == Grey) {
                auto from = std::find(stack.begin(), stack.end(), w);
                return std::vector<Vertex>(from, stack.end());
            }
            if (state[w] == White) {
                state[w] = Grey;
                stack.push_back(w);
                next.push_back(0);
            }
        }
    }
    return {};
}

} // namespace

DicolouringCheck validate_dicolouring(const Digraph& d, const Colouring& c)
{
    if (static_cast<int>(c.size()) != d.order())
        throw std::invalid_argument("colouring covers " + std::to_string(c.size()) + " vertices, digraph has " +
                                    std::to_string(d.order()));
    return {find_cycle_where(d, [&](Vertex u, Vertex v) { return c[u] == c[v]; })};
}

std::vector<Vertex> find_directed_cycle(const Digraph& d)
{
    return find_cycle_where(d, [](Vertex, Vertex) { return true; });
}

} // namespace dicol
