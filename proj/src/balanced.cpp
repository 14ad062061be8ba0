#include "dicol/colouring.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace dicol {

namespace {

// Vertices of `bag` alone in their colour class within the bag.
std::vector<Vertex> singletons(std::span<const Vertex> bag, std::span<const int> colours)
{
    std::map<int, int> count;
    for (Vertex v : bag)
        ++count[colours[v]];
    std::vector<Vertex> alone;
    for (Vertex v : bag)
        if (count[colours[v]] == 1)
            alone.push_back(v);
    return alone;
}

// s and t are the two ends of a bidirected path s-m-t with m already coloured.
bool p3_connected(const Digraph& d, Vertex s, Vertex t, std::span<const int> colours)
{
    for (Vertex m : d.out_neighbours(s))
        if (m != t && colours[m] != 0 && d.has_arc(m, s) && d.has_digon(m, t))
            return true;
    return false;
}

// The other bag vertex sharing u's colour.
Vertex partner(std::span<const Vertex> bag, std::span<const int> colours, Vertex u)
{
    for (Vertex w : bag)
        if (w != u && colours[w] == colours[u])
            return w;
    throw std::logic_error("vertex " + std::to_string(u) + " has no partner in its bag");
}

int missing_colour(std::span<const Vertex> bag, std::span<const int> colours, int palette)
{
    std::vector<char> used(palette + 1, 0);
    for (Vertex v : bag)
        if (colours[v] <= palette)
            used[colours[v]] = 1;
    for (int c = 1; c <= palette; ++c)
        if (!used[c])
            return c;
    throw std::logic_error("bag uses every colour");
}

std::vector<Vertex> bag_difference(const std::vector<Vertex>& a, const std::vector<Vertex>& b)
{
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Colours the root bag: pair up endpoints of simple arcs (lexicographically
// smallest pair first) until one or three vertices are left; three leftovers
// form a bidirected triangle and take a colour each.
void colour_root_bag(const Digraph& d, const std::vector<Vertex>& bag, std::vector<int>& colours)
{
    int next = 1;
    for (std::size_t i = 0; i < bag.size(); ++i) {
        Vertex a = bag[i];
        if (colours[a])
            continue;
        for (std::size_t j = i + 1; j < bag.size(); ++j) {
            Vertex b = bag[j];
            if (!colours[b] && d.has_arc(a, b) != d.has_arc(b, a)) {
                colours[a] = colours[b] = next++;
                break;
            }
        }
    }
    std::vector<Vertex> left;
    for (Vertex v : bag)
        if (!colours[v])
            left.push_back(v);
    if (left.size() != 1 && left.size() != 3)
        throw std::logic_error("root bag pairing left " + std::to_string(left.size()) + " vertices");
    for (Vertex v : left)
        colours[v] = next++;
}

// Extends the colouring to v, the vertex of the child bag missing from the
// parent bag, following the type (1) / type (2) case analysis.
int extend_colouring(const Digraph& d, const std::vector<Vertex>& parent_bag, Vertex u, Vertex v,
                     std::vector<int>& colours, int palette)
{
    auto alone = singletons(parent_bag, colours);
    auto digon = [&](Vertex a) { return d.has_digon(v, a); };
    if (alone.size() == 1) {
        Vertex r = alone[0];
        if (u == r)
            return colours[u];
        Vertex w = partner(parent_bag, colours, u);
        if (!digon(w))
            return colours[u];
        if (!digon(r))
            return colours[r];
        return missing_colour(parent_bag, colours, palette);
    }
    if (alone.size() != 3)
        throw std::logic_error("parent bag has " + std::to_string(alone.size()) + " singleton classes");

    Vertex r = -1, s = -1, t = -1;
    for (int skip = 0; skip < 3 && r < 0; ++skip) {
        Vertex a = alone[(skip + 1) % 3], b = alone[(skip + 2) % 3];
        if (p3_connected(d, a, b, colours)) {
            r = alone[skip];
            s = a;
            t = b;
        }
    }
    if (r < 0)
        throw std::logic_error("type (2) bag without a bidirected P3 between its singletons");

    if (u == r)
        return colours[u];
    if (u == s || u == t) {
        Vertex other = u == s ? t : s;
        if (!digon(r))
            return colours[r];
        if (!digon(other))
            return colours[other];
        return colours[u];
    }
    Vertex w = partner(parent_bag, colours, u);
    if (!digon(r))
        return colours[r];
    if (!digon(w))
        return colours[w];
    if (!digon(s))
        return colours[s];
    if (!digon(t))
        return colours[t];
    throw std::logic_error("new vertex is bidirected to w, r, s and t: bidirected C4");
}

// Odd clique number: balanced colouring along a valid decomposition.
void colour_odd_stage(const Digraph& stage, BalancedRun& run)
{
    const int n = stage.order();
    const auto g = underlying_graph(stage);
    const Ordering peo = require_chordal(g);
    const int omega = clique_number_chordal(g, peo);
    if (omega % 2 == 0)
        throw std::logic_error("odd stage received even clique number");
    run.palette = (omega + 3) / 2;
    run.decomposition = make_valid(clique_tree(g, peo), g);

    std::vector<Arc> arcs = stage.arcs();
    for (const auto& bag : run.decomposition.bags)
        for (std::size_t i = 0; i < bag.size(); ++i)
            for (std::size_t j = i + 1; j < bag.size(); ++j)
                if (!stage.adjacent(bag[i], bag[j]))
                    arcs.emplace_back(bag[i], bag[j]);
    run.saturated = Digraph(n, arcs);

    const auto& td = run.decomposition;
    std::vector<int>& colours = run.stage_colours;
    colours.assign(n, 0);
    run.bag_types.assign(td.node_count(), 0);
    auto record_type = [&](int node) {
        int type = bag_type(run.saturated, td.bags[node], colours);
        if (type == 0)
            throw std::logic_error("bag " + std::to_string(node) + " is neither type (1) nor type (2)");
        run.bag_types[node] = type;
    };

    colour_root_bag(run.saturated, td.bags[0], colours);
    record_type(0);
    auto adj = td.tree_adjacency();
    std::vector<int> queue{0};
    std::vector<char> seen(td.node_count(), 0);
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int y = queue[head];
        for (int x : adj[y]) {
            if (seen[x])
                continue;
            seen[x] = 1;
            queue.push_back(x);
            auto only_x = bag_difference(td.bags[x], td.bags[y]);
            auto only_y = bag_difference(td.bags[y], td.bags[x]);
            if (only_x.size() != 1 || only_y.size() != 1)
                throw std::logic_error("decomposition is not valid");
            Vertex v = only_x[0], u = only_y[0];
            colours[v] = extend_colouring(run.saturated, td.bags[y], u, v, colours, run.palette);
            if (colours[v] < 1 || colours[v] > run.palette)
                throw std::logic_error("colour outside the palette");
            record_type(x);
        }
    }
}

} // namespace

int bag_singleton_count(std::span<const Vertex> bag, std::span<const int> colours)
{
    std::map<int, int> count;
    for (Vertex v : bag)
        ++count[colours[v]];
    int alone = 0;
    for (auto [c, k] : count) {
        if (k >= 3)
            return -1;
        alone += k == 1;
    }
    return alone;
}

int bag_type(const Digraph& d, std::span<const Vertex> bag, std::span<const int> colours)
{
    for (Vertex v : bag)
        if (colours[v] == 0)
            return 0;
    int alone = bag_singleton_count(bag, colours);
    if (alone == 1)
        return 1;
    if (alone != 3)
        return 0;
    auto three = singletons(bag, colours);
    for (int i = 0; i < 3; ++i)
        if (p3_connected(d, three[(i + 1) % 3], three[(i + 2) % 3], colours))
            return 2;
    return 0;
}

BalancedRun balanced_c4free_run(const Digraph& d)
{
    BalancedRun run;
    const int n = d.order();
    if (n == 0)
        return run;
    const auto g = underlying_graph(d);
    const Ordering peo = require_chordal(g);
    if (auto c4 = is_c4_free(bidirected_graph(d)); !c4)
        throw PreconditionError("bidirected graph contains a C4", c4.cycle);
    const int omega = clique_number_chordal(g, peo);

    if (omega % 2 == 0)
        run.reduced_class = omega_reducing_independent_set(d);
    std::vector<char> removed(n, 0);
    for (Vertex v : run.reduced_class)
        removed[v] = 1;
    for (Vertex v = 0; v < n; ++v)
        if (!removed[v])
            run.stage_vertices.push_back(v);

    colour_odd_stage(induced_subdigraph(d, run.stage_vertices), run);

    std::vector<int> raw(n, 0);
    for (std::size_t i = 0; i < run.stage_vertices.size(); ++i)
        raw[run.stage_vertices[i]] = run.stage_colours[i];
    for (Vertex v : run.reduced_class)
        raw[v] = run.palette + 1;
    run.colouring = Colouring::normalized(std::move(raw));
    if (auto check = validate_dicolouring(d, run.colouring); !check)
        throw std::logic_error("balanced colouring produced a monochromatic cycle");
    return run;
}

Colouring balanced_c4free_dicolouring(const Digraph& d)
{
    return balanced_c4free_run(d).colouring;
}

} // namespace dicol
