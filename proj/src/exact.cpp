#include "dicol/colouring.hpp"

#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

namespace dicol {

namespace {

struct SearchState {
    std::vector<int> colour; // 0 = unassigned
    int used = 0;            // colours 1..used appear
    int assigned = 0;
};

// Backtracking for a k-dicolouring. Branches on the unassigned vertex with the
// fewest admissible colours (ties: larger UG degree, then smaller index) and
// tries colours in ascending order; colour used+1 is the only new colour
// offered, which breaks the colour-permutation symmetry.
class Search {
public:
    Search(const Digraph& d, const std::vector<int>& degree, int k)
        : d_(d), degree_(degree), k_(k), stamp_(d.order(), 0), seen_(d.order(), 0)
    {
    }

    bool solve(SearchState& s)
    {
        if (s.assigned == d_.order())
            return true;
        Vertex v;
        std::vector<int> options;
        if (!pick(s, v, options))
            return false;
        for (int c : options) {
            assign(s, v, c);
            if (solve(s))
                return true;
            unassign(s, v, c);
        }
        return false;
    }

    // Search-order prefixes of the tree, `depth` decisions deep.
    void frontier(SearchState& s, int depth, std::vector<SearchState>& out)
    {
        if (s.assigned == d_.order() || depth == 0) {
            out.push_back(s);
            return;
        }
        Vertex v;
        std::vector<int> options;
        if (!pick(s, v, options))
            return;
        for (int c : options) {
            assign(s, v, c);
            frontier(s, depth - 1, out);
            unassign(s, v, c);
        }
    }

private:
    void assign(SearchState& s, Vertex v, int c)
    {
        s.colour[v] = c;
        ++s.assigned;
        prev_used_.push_back(s.used);
        s.used = std::max(s.used, c);
    }

    void unassign(SearchState& s, Vertex v, int)
    {
        s.colour[v] = 0;
        --s.assigned;
        s.used = prev_used_.back();
        prev_used_.pop_back();
    }

    // Would colouring v with c close a directed cycle inside class c?
    bool closes_cycle(const SearchState& s, Vertex v, int c)
    {
        ++epoch_;
        bool any_target = false;
        for (Vertex w : d_.in_neighbours(v))
            if (s.colour[w] == c) {
                stamp_[w] = epoch_;
                any_target = true;
            }
        if (!any_target)
            return false;
        stack_.clear();
        for (Vertex w : d_.out_neighbours(v))
            if (s.colour[w] == c && seen_[w] != epoch_) {
                seen_[w] = epoch_;
                stack_.push_back(w);
            }
        while (!stack_.empty()) {
            Vertex x = stack_.back();
            stack_.pop_back();
            if (stamp_[x] == epoch_)
                return true;
            for (Vertex y : d_.out_neighbours(x))
                if (s.colour[y] == c && seen_[y] != epoch_) {
                    seen_[y] = epoch_;
                    stack_.push_back(y);
                }
        }
        return false;
    }

    bool pick(const SearchState& s, Vertex& best, std::vector<int>& options)
    {
        best = -1;
        int best_count = std::numeric_limits<int>::max();
        std::vector<int> current;
        const int fresh = s.used < k_ ? s.used + 1 : 0;
        for (Vertex v = 0; v < d_.order(); ++v) {
            if (s.colour[v])
                continue;
            current.clear();
            for (int c = 1; c <= s.used; ++c)
                if (!closes_cycle(s, v, c))
                    current.push_back(c);
            if (fresh)
                current.push_back(fresh);
            int count = static_cast<int>(current.size());
            if (count < best_count || (count == best_count && degree_[v] > degree_[best])) {
                best = v;
                best_count = count;
                options = current;
                if (count == 0)
                    return false;
            }
        }
        return best >= 0;
    }

    const Digraph& d_;
    const std::vector<int>& degree_;
    int k_;
    std::vector<int> prev_used_;
    std::vector<unsigned> stamp_, seen_;
    unsigned epoch_ = 0;
    std::vector<Vertex> stack_;
};

std::vector<int> ug_degrees(const Digraph& d)
{
    auto g = underlying_graph(d);
    std::vector<int> degree(d.order());
    for (Vertex v = 0; v < d.order(); ++v)
        degree[v] = g.degree(v);
    return degree;
}

std::optional<Colouring> search_k(const Digraph& d, const std::vector<int>& degree, int k, int threads)
{
    SearchState root;
    root.colour.assign(d.order(), 0);
    if (threads <= 1) {
        Search search(d, degree, k);
        if (!search.solve(root))
            return std::nullopt;
        return Colouring::normalized(root.colour);
    }

    std::vector<SearchState> prefixes;
    {
        Search splitter(d, degree, k);
        splitter.frontier(root, 4, prefixes);
    }
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> next{0}, best{none};
    auto worker = [&] {
        Search search(d, degree, k);
        for (std::size_t i = next++; i < prefixes.size(); i = next++) {
            if (i > best.load())
                break;
            if (search.solve(prefixes[i])) {
                for (std::size_t cur = best.load(); i < cur && !best.compare_exchange_weak(cur, i);) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    if (best.load() == none)
        return std::nullopt;
    return Colouring::normalized(prefixes[best.load()].colour);
}

} // namespace

std::variant<DichromaticResult, BudgetExceeded> exact_dichromatic(const Digraph& d, ExactOptions options)
{
    if (options.colour_budget && *options.colour_budget < 0)
        throw std::invalid_argument("negative colour budget");
    if (d.order() == 0)
        return DichromaticResult{0, Colouring{}};
    const auto degree = ug_degrees(d);
    const int first = find_directed_cycle(d).empty() ? 1 : 2;
    for (int k = first; k <= d.order(); ++k) {
        if (options.colour_budget && k > *options.colour_budget)
            return BudgetExceeded{*options.colour_budget};
        if (auto c = search_k(d, degree, k, options.threads))
            return DichromaticResult{k, std::move(*c)};
    }
    throw std::logic_error("no dicolouring with n colours");
}

int dichromatic_number(const Digraph& d)
{
    return std::get<DichromaticResult>(exact_dichromatic(d)).chi;
}

std::optional<Colouring> find_dicolouring(const Digraph& d, int k)
{
    if (d.order() == 0)
        return Colouring{};
    if (k <= 0)
        return std::nullopt;
    return search_k(d, ug_degrees(d), k, 1);
}

} // namespace dicol
