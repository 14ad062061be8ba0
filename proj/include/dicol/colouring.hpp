#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "dicol/chordal.hpp"
#include "dicol/digraph.hpp"
#include "dicol/rational.hpp"

namespace dicol {

/// Reverse-PEO greedy: each vertex takes the smallest colour missing from its
/// coloured out-neighbours or missing from its coloured in-neighbours. Uses at
/// most ceil((omega + Delta(B))/2) colours. Throws PreconditionError when UG(D)
/// is not chordal.
Colouring greedy_peo_dicolouring(const Digraph& d);

/// ceil((omega + delta_b) / 2)
int greedy_bound(int omega, int delta_b);

/// ceil((omega + 3) / 2)
int c4free_bound(int omega);

/// Colour class 1 of the PEO-greedy proper colouring of UG(D). It is
/// independent and meets every maximum clique.
std::vector<Vertex> omega_reducing_independent_set(const Digraph& d);

/// What the balanced colouring did, kept for auditing.
struct BalancedRun {
    Colouring colouring; // for the input digraph

    /// Vertices removed by the even-omega reduction (original numbering);
    /// they form the last colour class of the raw colouring. Empty for odd omega.
    std::vector<Vertex> reduced_class;

    /// Odd-omega stage: original id of each vertex of the stage digraph.
    std::vector<Vertex> stage_vertices;
    /// Stage digraph with every bag saturated by temporary simple arcs.
    Digraph saturated;
    TreeDecomposition decomposition;
    /// Colours on the stage digraph, before normalization.
    std::vector<int> stage_colours;
    /// 1 or 2 per decomposition node, as recorded when the node was coloured.
    std::vector<int> bag_types;
    int palette = 0; // (omega' + 3) / 2 for the stage's odd omega'
};

/// Colours with at most ceil((omega+3)/2) colours when UG(D) is chordal and
/// B(D) has no C4 subgraph. Throws PreconditionError (with witness) otherwise,
/// and std::logic_error if a balancedness invariant fails during the run.
Colouring balanced_c4free_dicolouring(const Digraph& d);
BalancedRun balanced_c4free_run(const Digraph& d);

/// Number of colours alone in their class within `bag`, or -1 when some class
/// holds three or more bag vertices.
int bag_singleton_count(std::span<const Vertex> bag, std::span<const int> colours);

/// Type of a bag under a balanced colouring: 1, 2, or 0 when neither applies.
/// `colours` indexes vertices of d; uncoloured vertices (colour 0) are ignored
/// as P3 midpoints.
int bag_type(const Digraph& d, std::span<const Vertex> bag, std::span<const int> colours);

struct DichromaticResult {
    int chi = 0;
    Colouring witness;
};

struct BudgetExceeded {
    int budget = 0;
};

struct ExactOptions {
    std::optional<int> colour_budget;
    int threads = 1;
};

/// Exact dichromatic number by iterative deepening with incremental
/// per-class acyclicity checks.
std::variant<DichromaticResult, BudgetExceeded> exact_dichromatic(const Digraph& d, ExactOptions options = {});

/// Convenience wrapper without budget; returns chi only.
int dichromatic_number(const Digraph& d);

/// Is there a dicolouring with at most k colours?
std::optional<Colouring> find_dicolouring(const Digraph& d, int k);

struct BoundReport {
    int omega = 0;
    int delta_b = 0;
    Rational mad_b;            // d
    Rational epsilon;
    Rational bound_value;      // ((1+eps)/2) omega + d/eps + 1
    Rational proof_constant;   // max(ceil(d/(2 eps)), 3d/4 + d/(8 eps) + 1/2)
    int chi = 0;
    bool chi_exact = false;    // false: chi is the best heuristic colour count
    bool satisfied = false;
};

struct BoundOptions {
    std::optional<Rational> epsilon; // default: sqrt(d/omega) rounded to 1/1000
    int exact_limit = 20;            // vertex count up to which chi is exact
};

/// Throws std::invalid_argument for epsilon <= 0 and PreconditionError for a
/// non-chordal underlying graph.
BoundReport mad_bound_report(const Digraph& d, BoundOptions options = {});

Rational mad_bound_value(int omega, const Rational& d, const Rational& epsilon);

/// sqrt(d/omega) to three decimals, at least 1/1000.
Rational default_epsilon(const Rational& d, int omega);

} // namespace dicol
