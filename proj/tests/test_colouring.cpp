#include <gtest/gtest.h>

#include <random>

#include "dicol/chordal.hpp"
#include "dicol/colouring.hpp"
#include "dicol/constructions.hpp"
#include "oracles.hpp"

using namespace dicol;

namespace {

Digraph c3() { return build_digraph(3, std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}}); }

int omega_of(const Digraph& d)
{
    auto g = underlying_graph(d);
    return clique_number_chordal(g, require_chordal(g));
}

Digraph random_instance(std::uint64_t seed, int max_n, int max_omega)
{
    std::mt19937_64 rng(seed);
    int n = 1 + static_cast<int>(rng() % max_n);
    int omega = 1 + static_cast<int>(rng() % std::min(n, max_omega));
    Rational p(static_cast<std::int64_t>(rng() % 5), 4);
    return random_chordal_superorientation(n, omega, p, seed);
}

} // namespace

TEST(Greedy, Examples)
{
    EXPECT_EQ(greedy_peo_dicolouring(bidirected_complete(3)).num_colours, 3);
    EXPECT_EQ(greedy_peo_dicolouring(c3()).num_colours, 2);
    EXPECT_EQ(greedy_peo_dicolouring(chordal_kl_family(5, 0).digraph).num_colours, 3);
}

TEST(Greedy, RejectsNonChordal)
{
    auto c4 = build_digraph(4, std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    EXPECT_THROW(greedy_peo_dicolouring(c4), PreconditionError);
}

TEST(Greedy, ValidAndWithinBound)
{
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        auto d = random_instance(seed, 30, 8);
        auto c = greedy_peo_dicolouring(d);
        ASSERT_TRUE(validate_dicolouring(d, c)) << "seed " << seed;
        ASSERT_TRUE(oracle::is_dicolouring(d, c.colours));
        EXPECT_LE(c.num_colours, greedy_bound(omega_of(d), max_bidegree(d))) << "seed " << seed;
    }
}

TEST(OmegaReducing, Examples)
{
    EXPECT_EQ(omega_reducing_independent_set(bidirected_complete(3)).size(), 1u);
    auto edgeless = build_digraph(4, std::vector<Arc>{});
    EXPECT_EQ(omega_reducing_independent_set(edgeless), (std::vector<Vertex>{0, 1, 2, 3}));

    auto d = c4free_family(4, 10).digraph;
    auto g = underlying_graph(d);
    auto set = omega_reducing_independent_set(d);
    for (Vertex u : set)
        for (Vertex v : set)
            EXPECT_FALSE(g.has_edge(u, v));
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < d.order(); ++v)
        if (std::find(set.begin(), set.end(), v) == set.end())
            rest.push_back(v);
    EXPECT_EQ(clique_number(induced_subgraph(g, rest)), 3);
}

TEST(OmegaReducing, DropsCliqueNumberByOne)
{
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        auto d = random_instance(seed, 25, 7);
        auto g = underlying_graph(d);
        auto set = omega_reducing_independent_set(d);
        std::vector<char> in(d.order(), 0);
        for (Vertex v : set)
            in[v] = 1;
        for (auto [u, v] : g.edges())
            ASSERT_FALSE(in[u] && in[v]);
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < d.order(); ++v)
            if (!in[v])
                rest.push_back(v);
        EXPECT_EQ(clique_number(induced_subgraph(g, rest)), clique_number(g) - 1);
    }
}

TEST(Balanced, Examples)
{
    EXPECT_EQ(balanced_c4free_dicolouring(bidirected_complete(3)).num_colours, 3);
    auto d = c4free_family(3, 13).digraph;
    auto c = balanced_c4free_dicolouring(d);
    EXPECT_TRUE(validate_dicolouring(d, c));
    EXPECT_EQ(c.num_colours, 3);
    EXPECT_EQ(dichromatic_number(d), 3);
}

TEST(Balanced, RejectsC4InB)
{
    auto d = bidirected_complete(4);
    try {
        balanced_c4free_dicolouring(d);
        FAIL();
    } catch (const PreconditionError& e) {
        EXPECT_EQ(e.witness().size(), 4u);
    }
}

TEST(Balanced, OrientedOmegaFiveUsesAtMostFour)
{
    int tested = 0;
    for (std::uint64_t seed = 0; tested < 30; ++seed) {
        auto d = random_chordal_superorientation(12 + static_cast<int>(seed % 20), 5, Rational(0), seed);
        ++tested;
        auto c = balanced_c4free_dicolouring(d);
        EXPECT_TRUE(validate_dicolouring(d, c));
        EXPECT_LE(c.num_colours, 4);
    }
}

TEST(Balanced, RunInvariants)
{
    int tested = 0;
    for (std::uint64_t seed = 0; tested < 120; ++seed) {
        auto d = random_instance(seed, 40, 9);
        if (!is_c4_free(bidirected_graph(d)))
            continue;
        ++tested;
        auto run = balanced_c4free_run(d);
        ASSERT_TRUE(validate_dicolouring(d, run.colouring)) << "seed " << seed;
        const int omega = omega_of(d);
        EXPECT_LE(run.colouring.num_colours, c4free_bound(omega));
        EXPECT_EQ(run.reduced_class.empty(), omega % 2 == 1);
        const auto& td = run.decomposition;
        EXPECT_TRUE(is_valid_decomposition(td));
        for (int node = 0; node < td.node_count(); ++node) {
            int alone = bag_singleton_count(td.bags[node], run.stage_colours);
            EXPECT_GE(alone, 0) << "a colour appears three times in a bag";
            EXPECT_TRUE(run.bag_types[node] == 1 || run.bag_types[node] == 2);
            EXPECT_EQ(bag_type(run.saturated, td.bags[node], run.stage_colours), run.bag_types[node]);
        }
    }
}

TEST(Exact, Examples)
{
    auto r = std::get<DichromaticResult>(exact_dichromatic(c3()));
    EXPECT_EQ(r.chi, 2);
    EXPECT_TRUE(validate_dicolouring(c3(), r.witness));
    for (int n = 1; n <= 6; ++n)
        EXPECT_EQ(dichromatic_number(bidirected_complete(n)), n);
    EXPECT_EQ(dichromatic_number(cograph_family(3).digraph), 3);
    EXPECT_EQ(dichromatic_number(interval_family(3).digraph), 2);
    EXPECT_EQ(dichromatic_number(build_digraph(0, std::vector<Arc>{})), 0);
}

TEST(Exact, Budget)
{
    auto r = exact_dichromatic(bidirected_complete(4), ExactOptions{3, 1});
    ASSERT_TRUE(std::holds_alternative<BudgetExceeded>(r));
    EXPECT_EQ(std::get<BudgetExceeded>(r).budget, 3);
    auto ok = exact_dichromatic(bidirected_complete(4), ExactOptions{4, 1});
    EXPECT_EQ(std::get<DichromaticResult>(ok).chi, 4);
    EXPECT_THROW(exact_dichromatic(c3(), ExactOptions{-1, 1}), std::invalid_argument);
}

TEST(Exact, AgreesWithEnumeration)
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        auto d = oracle::random_digraph(n, 0.2 + 0.1 * (trial % 6), rng);
        auto r = std::get<DichromaticResult>(exact_dichromatic(d));
        ASSERT_EQ(r.chi, oracle::dichromatic_number(d));
        EXPECT_TRUE(oracle::is_dicolouring(d, r.witness.colours));
        EXPECT_EQ(r.witness.num_colours, r.chi);
    }
}

TEST(Exact, ThreadsGiveSameAnswerAndWitness)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto d = random_instance(seed, 16, 6);
        auto one = std::get<DichromaticResult>(exact_dichromatic(d, ExactOptions{std::nullopt, 1}));
        auto four = std::get<DichromaticResult>(exact_dichromatic(d, ExactOptions{std::nullopt, 4}));
        auto again = std::get<DichromaticResult>(exact_dichromatic(d, ExactOptions{std::nullopt, 4}));
        EXPECT_EQ(one.chi, four.chi);
        EXPECT_TRUE(validate_dicolouring(d, four.witness));
        EXPECT_EQ(four.witness, again.witness);
    }
}

TEST(Exact, DeletingAVertexNeverIncreases)
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        auto d = oracle::random_digraph(n, 0.45, rng);
        int chi = dichromatic_number(d);
        for (Vertex v = 0; v < n; ++v) {
            std::vector<Vertex> keep;
            for (Vertex w = 0; w < n; ++w)
                if (w != v)
                    keep.push_back(w);
            EXPECT_LE(dichromatic_number(induced_subdigraph(d, keep)), chi);
        }
    }
}

TEST(FindDicolouring, Basic)
{
    EXPECT_FALSE(find_dicolouring(c3(), 1));
    auto c = find_dicolouring(c3(), 2);
    ASSERT_TRUE(c);
    EXPECT_TRUE(validate_dicolouring(c3(), *c));
}

TEST(BoundReport, OrientedDigraph)
{
    auto d = chordal_kl_family(5, 0).digraph;
    auto r = mad_bound_report(d, BoundOptions{Rational(1, 2), 20});
    EXPECT_EQ(r.mad_b, Rational(0));
    EXPECT_EQ(r.bound_value, Rational(3, 4) * 5 + 1);
    EXPECT_TRUE(r.chi_exact);
    EXPECT_EQ(r.chi, 3);
    EXPECT_TRUE(r.satisfied);
}

TEST(BoundReport, BidirectedTriangle)
{
    auto r = mad_bound_report(bidirected_complete(3), BoundOptions{Rational(1), 20});
    EXPECT_EQ(r.mad_b, Rational(2));
    EXPECT_EQ(r.bound_value, Rational(6));
    EXPECT_EQ(r.chi, 3);
    EXPECT_TRUE(r.satisfied);
    // max(ceil(2/2), 3*2/4 + 2/8 + 1/2) = 9/4
    EXPECT_EQ(r.proof_constant, Rational(9, 4));
}

TEST(BoundReport, RejectsNonPositiveEpsilon)
{
    EXPECT_THROW(mad_bound_report(c3(), BoundOptions{Rational(0), 20}), std::invalid_argument);
    EXPECT_THROW(mad_bound_report(c3(), BoundOptions{Rational(-1, 2), 20}), std::invalid_argument);
}

TEST(BoundReport, DefaultEpsilon)
{
    EXPECT_EQ(default_epsilon(Rational(0), 5), Rational(1, 1000));
    EXPECT_EQ(default_epsilon(Rational(4), 4), Rational(1));
    EXPECT_EQ(default_epsilon(Rational(1), 4), Rational(1, 2));
    EXPECT_EQ(default_epsilon(Rational(2), 1), Rational(1414, 1000));
}

TEST(BoundReport, HeuristicAboveExactLimit)
{
    auto d = c4free_family(5, 13).digraph;
    auto r = mad_bound_report(d, BoundOptions{std::nullopt, 20});
    EXPECT_FALSE(r.chi_exact);
    EXPECT_LE(r.chi, 4);
    EXPECT_TRUE(r.satisfied);
}
