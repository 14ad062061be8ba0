#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dicol/digraph.hpp"

namespace dicol {

enum class OrderingRole { Search, PerfectElimination, Prefix };

/// A permutation of 0..n-1 tagged with what it is meant to be.
struct Ordering {
    std::vector<Vertex> sequence;
    OrderingRole role = OrderingRole::Search;

    std::size_t size() const noexcept { return sequence.size(); }
    Vertex operator[](std::size_t i) const { return sequence[i]; }

    /// position[v] = index of v in the sequence. Throws std::invalid_argument
    /// when the sequence is not a permutation of 0..n-1.
    std::vector<int> positions(int n) const;
};

struct TreeDecomposition {
    std::vector<std::vector<Vertex>> bags; // sorted
    std::vector<std::pair<int, int>> edges;
    int width = -1;

    int node_count() const noexcept { return static_cast<int>(bags.size()); }
    std::vector<std::vector<int>> tree_adjacency() const;
    /// Recomputes width from the bags.
    void refresh_width();

    friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

/// Lexicographic BFS visit order; ties go to the smallest vertex index. The
/// reverse of the result is a PEO whenever g is chordal.
Ordering lex_bfs(const UndirectedGraph& g);

struct PeoCheck {
    bool ok = true;
    /// When !ok: `vertex` has later neighbours `left` and `right` that are not adjacent.
    Vertex vertex = -1;
    Vertex left = -1;
    Vertex right = -1;

    explicit operator bool() const noexcept { return ok; }
};

PeoCheck is_perfect_elimination_ordering(const UndirectedGraph& g, const Ordering& o);

/// A verified PEO when g is chordal, nullopt otherwise.
std::optional<Ordering> recognize_chordal(const UndirectedGraph& g);

bool is_chordal(const UndirectedGraph& g);

/// Throws PreconditionError with a chordless-cycle witness (the three PEO
/// violation vertices) when g is not chordal.
Ordering require_chordal(const UndirectedGraph& g);

/// 1 + the largest later neighbourhood along the PEO. Throws
/// std::invalid_argument when `peo` is not a PEO of g.
int clique_number_chordal(const UndirectedGraph& g, const Ordering& peo);

/// Clique tree: one bag per maximal clique. Components are chained by
/// empty-intersection edges so the result is always a single tree.
TreeDecomposition clique_tree(const UndirectedGraph& g, const Ordering& peo);

/// Empty string when td satisfies the three tree-decomposition axioms for g
/// (and its edge set is a tree); otherwise a description of the first failure.
std::string decomposition_error(const UndirectedGraph& g, const TreeDecomposition& td);

bool is_full(const TreeDecomposition& td);
bool is_reduced(const TreeDecomposition& td);
/// Adjacent bags differ by exactly one vertex each way.
bool is_valid_decomposition(const TreeDecomposition& td);

/// Reduces, fills up, and subdivides a decomposition until it is valid, at
/// the same width. Throws std::invalid_argument when td is not a
/// tree-decomposition of g.
TreeDecomposition make_valid(const TreeDecomposition& td, const UndirectedGraph& g);

/// Valid decomposition of a chordal graph at width omega-1.
TreeDecomposition valid_decomposition(const UndirectedGraph& g);

/// Two-sweep longest path of a tree, ties by smallest node index.
std::vector<int> longest_tree_path(const TreeDecomposition& td);

/// Prefix-bounded ordering of a connected chordal graph. Throws
/// PreconditionError on non-chordal or disconnected input.
Ordering lemma_ordering(const UndirectedGraph& g);

/// The labelling step on its own: `td` must be valid and `path` a longest
/// path of its tree; the tree is rooted at path.back().
Ordering lemma_ordering(const TreeDecomposition& td, std::span<const int> path);

struct PrefixCheck {
    bool ok = true;
    int k = 0;        // 1-based prefix length of the first failure
    int property = 0; // 1: |N(a_k)| bound, 2: closed-neighbourhood union bound

    explicit operator bool() const noexcept { return ok; }
};

/// For every k: |N(a_k)| <= omega+k-2 and |N[a_1] u ... u N[a_k]| <= omega+2k-1.
PrefixCheck check_prefix_properties(const UndirectedGraph& g, const Ordering& o);

} // namespace dicol
