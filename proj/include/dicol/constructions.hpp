#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dicol/digraph.hpp"
#include "dicol/rational.hpp"

namespace dicol {

/// Claims attached to a generated digraph. Every field is checkable by the
/// other modules; optional fields are claims not made.
struct FamilyCertificate {
    std::string family;
    std::map<std::string, std::string> params; // ordered for stable output
    int vertices = 0;
    std::optional<int> omega;
    std::optional<int> delta_b;
    std::optional<int> chi;
    std::optional<int> chi_lower;
    std::optional<int> chi_upper;
    /// Any of: chordal, cograph, oriented, b-paths, b-c4free.
    std::vector<std::string> structure;

    bool claims(const std::string& s) const;

    friend bool operator==(const FamilyCertificate&, const FamilyCertificate&) = default;
};

struct Interval {
    Rational lo;
    Rational hi;
};

/// Per-vertex data of the nested interval family. Vertex 0 is the level-1
/// root; levels are laid out consecutively, children in label order.
struct IntervalMeta {
    int k = 0;
    std::vector<int> level;                   // 1-based
    std::vector<std::uint32_t> label;         // level-1 bits, bit j (1-based, from the left) is (label >> (level-1-j)) & 1
    std::vector<Interval> interval;
    std::vector<std::vector<Vertex>> ancestors; // ancestors[v][j-1] = level-j ancestor, j < level[v]
    std::vector<std::vector<Vertex>> children;  // in label order

    /// Bit j (1-based from the left) of v's label; 1 means v -> level-j ancestor.
    int bit(Vertex v, int j) const;
    std::string label_string(Vertex v) const;
};

struct IntervalFamily {
    Digraph digraph;
    IntervalMeta meta;
    FamilyCertificate certificate;
};

struct Family {
    Digraph digraph;
    FamilyCertificate certificate;
};

/// Number of vertices of interval_family(k): sum of 2^{i(i-1)/2}.
std::int64_t interval_family_size(int k);

/// Throws std::invalid_argument for k < 1 or k > 6 (k = 7 already has over
/// two million vertices).
IntervalFamily interval_family(int k);

/// Nested chain root -> ... -> level k in which no colour of c occurs three
/// times. Throws std::invalid_argument when c is not a dicolouring of d.
std::vector<Vertex> interval_lowerbound_witness(const Digraph& d, const IntervalMeta& meta, const Colouring& c);

/// S(1) = 1, S(k+1) = (k+1)(S(k)+1).
std::int64_t cograph_family_size(int k);

/// Throws std::invalid_argument for k < 1 or k > 6.
Family cograph_family(int k);

/// Directed Hajos join: drop u1->v1 from d1 and v2->u2 from d2, merge v2 into
/// v1, add u1->u2. d1 keeps its numbering; the other vertices of d2 follow in
/// order. Throws std::invalid_argument when either arc is missing.
Digraph hajos_join(const Digraph& d1, Vertex u1, Vertex v1, const Digraph& d2, Vertex v2, Vertex u2);

/// Index of vertex w of d2 inside hajos_join(d1, ., v1, d2, v2, .).
Vertex hajos_image(int n1, Vertex v1, Vertex v2, Vertex w);

/// Requires k >= l + 1.
Family chordal_kl_family(int k, int l);

/// Requires k >= 3 and n >= 1. B(D) is a union of paths; at least one join
/// is always applied so that holds already at k = 3.
Family c4free_family(int k, int n);

/// Bidirected complete digraph on n vertices.
Digraph bidirected_complete(int n);

/// Transitive tournament on n vertices with arcs i -> j for i < j.
Digraph transitive_tournament(int n);

/// New vertex n with an arc to every old vertex.
Digraph add_source(const Digraph& d);

/// Transitive tournament on m vertices; for each arc x -> y (lexicographic)
/// a copy of `inner` with arcs y -> copy and copy -> x.
Digraph tournament_wrap(int m, const Digraph& inner);

/// Seeded random super-orientation of a chordal graph with clique number
/// exactly target_omega. Throws std::invalid_argument on bad parameters.
Digraph random_chordal_superorientation(int n, int target_omega, const Rational& digon_prob, std::uint64_t seed);

/// Underlying chordal graph generator used above, also handy on its own.
UndirectedGraph random_chordal_graph(int n, int target_omega, std::uint64_t seed);

} // namespace dicol
