#include "dicol/colouring.hpp"

#include <algorithm>

namespace dicol {

int greedy_bound(int omega, int delta_b)
{
    return (omega + delta_b + 1) / 2;
}

int c4free_bound(int omega)
{
    return (omega + 4) / 2;
}

Colouring greedy_peo_dicolouring(const Digraph& d)
{
    const int n = d.order();
    const Ordering peo = require_chordal(underlying_graph(d));
    std::vector<int> colour(n, 0);
    std::vector<int> out_mark(n + 2, -1), in_mark(n + 2, -1);
    for (int i = n - 1; i >= 0; --i) {
        Vertex v = peo[i];
        for (Vertex w : d.out_neighbours(v))
            if (colour[w])
                out_mark[colour[w]] = v;
        for (Vertex w : d.in_neighbours(v))
            if (colour[w])
                in_mark[colour[w]] = v;
        int c = 1;
        while (out_mark[c] == v && in_mark[c] == v)
            ++c;
        colour[v] = c;
    }
    return Colouring::normalized(std::move(colour));
}

std::vector<Vertex> omega_reducing_independent_set(const Digraph& d)
{
    const auto g = underlying_graph(d);
    const Ordering peo = require_chordal(g);
    const int n = g.order();
    std::vector<int> colour(n, 0);
    std::vector<int> used(n + 2, -1);
    for (int i = n - 1; i >= 0; --i) {
        Vertex v = peo[i];
        for (Vertex w : g.neighbours(v))
            if (colour[w])
                used[colour[w]] = v;
        int c = 1;
        while (used[c] == v)
            ++c;
        colour[v] = c;
    }
    std::vector<Vertex> first_class;
    for (Vertex v = 0; v < n; ++v)
        if (colour[v] == 1)
            first_class.push_back(v);
    return first_class;
}

} // namespace dicol
