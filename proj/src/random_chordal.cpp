#include "dicol/constructions.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace dicol {

namespace {

// Uniform draw from [0, bound) by rejection, so results do not depend on the
// standard library's distribution implementation.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

int draw_int(std::mt19937_64& rng, int lo, int hi)
{
    return lo + static_cast<int>(draw(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

UndirectedGraph chordal_graph(int n, int target_omega, std::mt19937_64& rng)
{
    if (target_omega < 1 || target_omega > n)
        throw std::invalid_argument("need 1 <= omega <= n, got n=" + std::to_string(n) +
                                    " omega=" + std::to_string(target_omega));
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> cliques;
    std::vector<Vertex> seed(target_omega);
    std::iota(seed.begin(), seed.end(), 0);
    for (Vertex u = 0; u < target_omega; ++u)
        for (Vertex v = u + 1; v < target_omega; ++v)
            edges.emplace_back(u, v);
    cliques.push_back(seed);

    for (Vertex v = target_omega; v < n; ++v) {
        auto index = static_cast<std::size_t>(draw(rng, cliques.size()));
        std::vector<Vertex> pool = cliques[index];
        const int cap = std::min(static_cast<int>(pool.size()), target_omega - 1);
        const int s = cap == 0 ? 0 : draw_int(rng, 1, cap);
        for (int i = 0; i < s; ++i)
            std::swap(pool[i], pool[i + static_cast<int>(draw(rng, pool.size() - i))]);
        pool.resize(s);
        for (Vertex w : pool)
            edges.emplace_back(w, v);
        if (s == static_cast<int>(cliques[index].size())) {
            cliques[index].push_back(v);
        } else {
            pool.push_back(v);
            cliques.push_back(std::move(pool));
        }
    }

    std::vector<Vertex> label(n);
    std::iota(label.begin(), label.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(label[i], label[draw(rng, static_cast<std::uint64_t>(i) + 1)]);
    for (auto& [a, b] : edges) {
        a = label[a];
        b = label[b];
    }
    return UndirectedGraph(n, edges);
}

} // namespace

UndirectedGraph random_chordal_graph(int n, int target_omega, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    return chordal_graph(n, target_omega, rng);
}

Digraph random_chordal_superorientation(int n, int target_omega, const Rational& digon_prob, std::uint64_t seed)
{
    if (digon_prob < 0 || digon_prob > 1)
        throw std::invalid_argument("digon probability must lie in [0, 1], got " + to_string(digon_prob));
    std::mt19937_64 rng(seed);
    const UndirectedGraph g = chordal_graph(n, target_omega, rng);
    const auto num = static_cast<std::uint64_t>(digon_prob.numerator());
    const auto den = static_cast<std::uint64_t>(digon_prob.denominator());
    std::vector<Arc> arcs;
    for (auto [u, v] : g.edges()) {
        if (draw(rng, den) < num) {
            arcs.emplace_back(u, v);
            arcs.emplace_back(v, u);
        } else if (draw(rng, 2)) {
            arcs.emplace_back(u, v);
        } else {
            arcs.emplace_back(v, u);
        }
    }
    return Digraph(n, arcs);
}

} // namespace dicol
