#include "dicol/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace dicol {

bool FamilyCertificate::claims(const std::string& s) const
{
    return std::find(structure.begin(), structure.end(), s) != structure.end();
}

int IntervalMeta::bit(Vertex v, int j) const
{
    if (j < 1 || j >= level[v])
        throw std::out_of_range("bit index outside the label");
    return static_cast<int>((label[v] >> (level[v] - 1 - j)) & 1u);
}

std::string IntervalMeta::label_string(Vertex v) const
{
    std::string s;
    for (int j = 1; j < level[v]; ++j)
        s.push_back(bit(v, j) ? '1' : '0');
    return s;
}

std::int64_t interval_family_size(int k)
{
    if (k < 1)
        throw std::invalid_argument("interval family needs k >= 1");
    std::int64_t total = 0;
    for (int i = 1; i <= k; ++i)
        total += std::int64_t{1} << (i * (i - 1) / 2);
    return total;
}

IntervalFamily interval_family(int k)
{
    if (k < 1 || k > 6)
        throw std::invalid_argument("interval family needs 1 <= k <= 6, got " + std::to_string(k));
    IntervalFamily fam;
    IntervalMeta& m = fam.meta;
    m.k = k;
    const auto n = static_cast<std::size_t>(interval_family_size(k));
    m.level.reserve(n);
    m.label.reserve(n);
    m.interval.reserve(n);
    m.ancestors.reserve(n);
    m.children.reserve(n);

    m.level.push_back(1);
    m.label.push_back(0);
    m.interval.push_back({Rational(0), Rational(1)});
    m.ancestors.emplace_back();
    m.children.emplace_back();

    std::vector<Arc> arcs;
    std::vector<Vertex> previous{0};
    for (int i = 2; i <= k; ++i) {
        const std::uint32_t count = 1u << (i - 1);
        std::vector<Vertex> current;
        for (Vertex parent : previous) {
            const Rational lo = m.interval[parent].lo;
            const Rational width = (m.interval[parent].hi - lo) / static_cast<std::int64_t>(count);
            const Rational margin = width / static_cast<std::int64_t>(2 * count);
            auto chain = m.ancestors[parent];
            chain.push_back(parent);
            for (std::uint32_t b = 0; b < count; ++b) {
                const auto v = static_cast<Vertex>(m.level.size());
                m.level.push_back(i);
                m.label.push_back(b);
                m.interval.push_back({lo + width * static_cast<std::int64_t>(b) + margin,
                                      lo + width * static_cast<std::int64_t>(b + 1) - margin});
                m.ancestors.push_back(chain);
                m.children.emplace_back();
                m.children[parent].push_back(v);
                for (int j = 1; j < i; ++j) {
                    Vertex a = chain[j - 1];
                    if (m.bit(v, j))
                        arcs.emplace_back(v, a);
                    else
                        arcs.emplace_back(a, v);
                }
                current.push_back(v);
            }
        }
        previous = std::move(current);
    }

    fam.digraph = Digraph(static_cast<int>(n), arcs);
    auto& cert = fam.certificate;
    cert.family = "interval";
    cert.params["k"] = std::to_string(k);
    cert.vertices = static_cast<int>(n);
    cert.omega = k;
    cert.delta_b = 0;
    cert.chi_lower = (k + 1) / 2;
    cert.chi_upper = (k + 1) / 2;
    cert.structure = {"chordal", "cograph", "oriented"};
    return fam;
}

std::vector<Vertex> interval_lowerbound_witness(const Digraph& d, const IntervalMeta& meta, const Colouring& c)
{
    if (d.order() != static_cast<int>(meta.level.size()))
        throw std::invalid_argument("metadata does not match the digraph");
    if (!validate_dicolouring(d, c))
        throw std::invalid_argument("not a dicolouring");

    std::vector<Vertex> chain{0};
    std::map<int, std::vector<Vertex>> by_colour;
    by_colour[c[0]].push_back(0);
    for (int i = 2; i <= meta.k; ++i) {
        // One monochromatic arc x -> y per twice-used colour; the child must
        // send an arc to x and receive one from y.
        std::uint32_t label = 0;
        for (const auto& [colour, members] : by_colour) {
            if (members.size() < 2)
                continue;
            Vertex x = members[0], y = members[1];
            if (!d.has_arc(x, y))
                std::swap(x, y);
            label |= 1u << (i - 1 - meta.level[x]);
        }
        Vertex z = meta.children[chain.back()][label];
        auto& cls = by_colour[c[z]];
        if (cls.size() >= 2)
            throw std::logic_error("chain extension put a colour three times");
        cls.push_back(z);
        chain.push_back(z);
    }
    return chain;
}

std::int64_t cograph_family_size(int k)
{
    if (k < 1)
        throw std::invalid_argument("cograph family needs k >= 1");
    std::int64_t s = 1;
    for (int i = 1; i < k; ++i)
        s = (i + 1) * (s + 1);
    return s;
}

Family cograph_family(int k)
{
    if (k < 1 || k > 6)
        throw std::invalid_argument("cograph family needs 1 <= k <= 6, got " + std::to_string(k));
    Digraph d(1, std::vector<Arc>{});
    for (int m = 1; m < k; ++m) {
        // m+1 copies of the current digraph, then v_1..v_{m+1}.
        const int s = d.order();
        const int copies = m + 1;
        const int n = copies * (s + 1);
        std::vector<Arc> arcs;
        for (int i = 0; i < copies; ++i)
            for (auto [a, b] : d.arcs())
                arcs.emplace_back(i * s + a, i * s + b);
        for (int i = 0; i < copies; ++i) {
            Vertex v = copies * s + i;
            for (int j = 0; j < copies; ++j)
                for (int w = 0; w < s; ++w) {
                    if (i == j)
                        arcs.emplace_back(v, j * s + w);
                    else
                        arcs.emplace_back(j * s + w, v);
                }
        }
        d = Digraph(n, arcs);
    }
    Family fam{std::move(d), {}};
    auto& cert = fam.certificate;
    cert.family = "cograph";
    cert.params["k"] = std::to_string(k);
    cert.vertices = fam.digraph.order();
    cert.omega = k;
    cert.delta_b = 0;
    cert.chi = k;
    cert.structure = {"cograph", "oriented"};
    return fam;
}

Vertex hajos_image(int n1, Vertex v1, Vertex v2, Vertex w)
{
    if (w == v2)
        return v1;
    return n1 + (w < v2 ? w : w - 1);
}

Digraph hajos_join(const Digraph& d1, Vertex u1, Vertex v1, const Digraph& d2, Vertex v2, Vertex u2)
{
    if (!(u1 >= 0 && v1 >= 0 && u1 < d1.order() && v1 < d1.order() && d1.has_arc(u1, v1)))
        throw std::invalid_argument("first digraph has no arc " + std::to_string(u1) + "->" + std::to_string(v1));
    if (!(u2 >= 0 && v2 >= 0 && u2 < d2.order() && v2 < d2.order() && d2.has_arc(v2, u2)))
        throw std::invalid_argument("second digraph has no arc " + std::to_string(v2) + "->" + std::to_string(u2));
    const int n1 = d1.order();
    std::vector<Arc> arcs;
    for (const Arc& a : d1.arcs())
        if (a != Arc{u1, v1})
            arcs.push_back(a);
    for (auto [a, b] : d2.arcs())
        if (Arc{a, b} != Arc{v2, u2})
            arcs.emplace_back(hajos_image(n1, v1, v2, a), hajos_image(n1, v1, v2, b));
    arcs.emplace_back(u1, hajos_image(n1, v1, v2, u2));
    return Digraph(n1 + d2.order() - 1, arcs);
}

Digraph bidirected_complete(int n)
{
    if (n < 0)
        throw std::invalid_argument("negative order");
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v)
                arcs.emplace_back(u, v);
    return Digraph(n, arcs);
}

Digraph transitive_tournament(int n)
{
    if (n < 0)
        throw std::invalid_argument("negative order");
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            arcs.emplace_back(u, v);
    return Digraph(n, arcs);
}

Digraph add_source(const Digraph& d)
{
    const int n = d.order();
    std::vector<Arc> arcs = d.arcs();
    for (Vertex v = 0; v < n; ++v)
        arcs.emplace_back(n, v);
    return Digraph(n + 1, arcs);
}

Digraph tournament_wrap(int m, const Digraph& inner)
{
    if (m < 1)
        throw std::invalid_argument("tournament needs at least one vertex");
    const int s = inner.order();
    std::vector<Arc> arcs;
    int next = m;
    for (Vertex x = 0; x < m; ++x)
        for (Vertex y = x + 1; y < m; ++y) {
            arcs.emplace_back(x, y);
            for (auto [a, b] : inner.arcs())
                arcs.emplace_back(next + a, next + b);
            for (int w = 0; w < s; ++w) {
                arcs.emplace_back(y, next + w);
                arcs.emplace_back(next + w, x);
            }
            next += s;
        }
    return Digraph(next, arcs);
}

namespace {

Digraph chordal_kl_digraph(int k, int l)
{
    if (k == l + 1)
        return bidirected_complete(l + 1);
    if ((k + l) % 2 == 0)
        return add_source(chordal_kl_digraph(k - 1, l));
    return tournament_wrap((k + l + 1) / 2, chordal_kl_digraph(k - 2, l));
}

// Chain of joins of bidirected triangles. The tip digon t-q loses q->t at
// each step, so UG stays a 2-tree and B a single path.
Digraph c4free_base(int n)
{
    const Digraph k3 = bidirected_complete(3);
    Digraph d = k3;
    Vertex t = 1, q = 0;
    const int joins = std::max(1, (n - 3 + 1) / 2);
    for (int i = 0; i < joins; ++i) {
        const int n1 = d.order();
        d = hajos_join(d, q, t, k3, 0, 2);
        const Vertex next_t = hajos_image(n1, t, 0, 1);
        q = hajos_image(n1, t, 0, 2);
        t = next_t;
    }
    return d;
}

Digraph c4free_digraph(int k, int n)
{
    if (k == 3)
        return c4free_base(n);
    if (k % 2 == 0)
        return add_source(c4free_digraph(k - 1, n));
    return tournament_wrap((k + 3) / 2, c4free_digraph(k - 2, n));
}

} // namespace

Family chordal_kl_family(int k, int l)
{
    if (l < 0 || k < l + 1)
        throw std::invalid_argument("chordal-kl family needs k >= l + 1 >= 1, got k=" + std::to_string(k) +
                                    " l=" + std::to_string(l));
    Family fam{chordal_kl_digraph(k, l), {}};
    auto& cert = fam.certificate;
    cert.family = "chordal-kl";
    cert.params["k"] = std::to_string(k);
    cert.params["l"] = std::to_string(l);
    cert.vertices = fam.digraph.order();
    cert.omega = k;
    cert.delta_b = l;
    cert.chi = (k + l + 1) / 2;
    cert.structure = {"chordal"};
    if (l == 0)
        cert.structure.push_back("oriented");
    return fam;
}

Family c4free_family(int k, int n)
{
    if (k < 3 || n < 1)
        throw std::invalid_argument("c4free family needs k >= 3 and n >= 1, got k=" + std::to_string(k) +
                                    " n=" + std::to_string(n));
    Family fam{c4free_digraph(k, n), {}};
    auto& cert = fam.certificate;
    cert.family = "c4free";
    cert.params["k"] = std::to_string(k);
    cert.params["n"] = std::to_string(n);
    cert.vertices = fam.digraph.order();
    cert.omega = k;
    cert.delta_b = 2;
    cert.chi = (k + 3) / 2;
    cert.structure = {"chordal", "b-paths", "b-c4free"};
    return fam;
}

} // namespace dicol
