#include "dicol/digraph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>

namespace dicol {

namespace {

// Tomita-style pivoting; p and x are kept sorted.
void expand_cliques(const UndirectedGraph& g, int size, std::vector<Vertex> p, std::vector<Vertex> x, int& best)
{
    if (p.empty()) {
        best = std::max(best, size);
        return;
    }
    if (size + static_cast<int>(p.size()) <= best)
        return;
    Vertex pivot = -1;
    int pivot_hits = -1;
    for (const auto* set : {&p, &x})
        for (Vertex u : *set) {
            int hits = 0;
            for (Vertex w : p)
                hits += g.has_edge(u, w);
            if (hits > pivot_hits) {
                pivot_hits = hits;
                pivot = u;
            }
        }
    std::vector<Vertex> candidates;
    for (Vertex v : p)
        if (!g.has_edge(pivot, v))
            candidates.push_back(v);
    for (Vertex v : candidates) {
        std::vector<Vertex> np, nx;
        auto nb = g.neighbours(v);
        std::set_intersection(p.begin(), p.end(), nb.begin(), nb.end(), std::back_inserter(np));
        std::set_intersection(x.begin(), x.end(), nb.begin(), nb.end(), std::back_inserter(nx));
        expand_cliques(g, size + 1, std::move(np), std::move(nx), best);
        p.erase(std::lower_bound(p.begin(), p.end(), v));
        x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
}

} // namespace

int clique_number(const UndirectedGraph& g)
{
    int best = 0;
    std::vector<Vertex> all(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        all[v] = v;
    expand_cliques(g, 0, std::move(all), {}, best);
    return best;
}

Rational max_average_degree(const UndirectedGraph& g)
{
    if (g.order() <= 20)
        return max_average_degree_exhaustive(g);
    return max_average_degree_flow(g);
}

Rational max_average_degree_exhaustive(const UndirectedGraph& g)
{
    const int n = g.order();
    if (n > 30)
        throw std::invalid_argument("exhaustive Mad limited to 30 vertices");
    if (n == 0)
        return Rational(0);
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    // best = best_edges2 / best_size, kept as integers to avoid renormalizing
    std::int64_t best_edges2 = 0, best_size = 1;
    const std::uint32_t limit = 1u << n;
    for (std::uint32_t s = 1; s != limit; ++s) {
        std::int64_t twice_edges = 0;
        for (std::uint32_t rest = s; rest; rest &= rest - 1)
            twice_edges += std::popcount(adj[std::countr_zero(rest)] & s);
        std::int64_t size = std::popcount(s);
        if (twice_edges * best_size > best_edges2 * size) {
            best_edges2 = twice_edges;
            best_size = size;
        }
    }
    return Rational(best_edges2, best_size);
}

namespace {

using FlowTraits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<boost::edge_capacity_t, std::int64_t,
                    boost::property<boost::edge_residual_capacity_t, std::int64_t,
                                    boost::property<boost::edge_reverse_t, FlowTraits::edge_descriptor>>>>;

// True iff some non-empty S has 2|E(S)| / |S| > density. Max-closure over
// edge nodes (profit 2q) requiring their endpoints (cost p), density = p/q.
bool denser_subgraph_exists(const UndirectedGraph& g, const Rational& density)
{
    const std::int64_t p = density.numerator();
    const std::int64_t q = density.denominator();
    const int m = static_cast<int>(g.edge_count());
    const int n = g.order();
    FlowGraph net(m + n + 2);
    const int source = m + n, sink = m + n + 1;
    auto capacity = boost::get(boost::edge_capacity, net);
    auto reverse = boost::get(boost::edge_reverse, net);
    auto link = [&](int a, int b, std::int64_t cap) {
        auto e = boost::add_edge(a, b, net).first;
        auto r = boost::add_edge(b, a, net).first;
        capacity[e] = cap;
        capacity[r] = 0;
        reverse[e] = r;
        reverse[r] = e;
    };
    const std::int64_t profit = 2 * q;
    const std::int64_t infinite = profit * m + 1;
    for (int e = 0; e < m; ++e) {
        link(source, e, profit);
        link(e, m + g.edges()[e].first, infinite);
        link(e, m + g.edges()[e].second, infinite);
    }
    for (int v = 0; v < n; ++v)
        link(m + v, sink, p);
    std::int64_t flow = boost::push_relabel_max_flow(net, source, sink);
    return profit * m - flow > 0;
}

} // namespace

Rational max_average_degree_flow(const UndirectedGraph& g)
{
    const int n = g.order();
    const std::int64_t m = static_cast<std::int64_t>(g.edge_count());
    if (n == 0 || m == 0)
        return Rational(0);
    std::vector<Rational> candidates;
    for (std::int64_t s = 1; s <= n; ++s) {
        std::int64_t max_edges = std::min(m, s * (s - 1) / 2);
        for (std::int64_t e = 0; e <= max_edges; ++e)
            candidates.emplace_back(2 * e, s);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    // first candidate with no strictly denser subgraph
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (denser_subgraph_exists(g, candidates[mid]))
            lo = mid + 1;
        else
            hi = mid;
    }
    return candidates[lo];
}

C4Check is_c4_free(const UndirectedGraph& g)
{
    const int n = g.order();
    std::vector<Vertex> via(n, -1);
    std::vector<Vertex> stamp(n, -1);
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b : g.neighbours(a)) {
            for (Vertex c : g.neighbours(b)) {
                if (c == a)
                    continue;
                if (stamp[c] == a)
                    return {{a, via[c], c, b}};
                stamp[c] = a;
                via[c] = b;
            }
        }
    }
    return {};
}

std::vector<Vertex> find_induced_p4(const UndirectedGraph& g)
{
    for (auto [x, y] : g.edges()) {
        for (auto [b, c] : {Edge{x, y}, Edge{y, x}}) {
            for (Vertex a : g.neighbours(b)) {
                if (a == c || g.has_edge(a, c))
                    continue;
                for (Vertex d : g.neighbours(c)) {
                    if (d == b || g.has_edge(d, b) || g.has_edge(a, d))
                        continue;
                    return {a, b, c, d};
                }
            }
        }
    }
    return {};
}

} // namespace dicol
