#include "dicol/colouring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dicol {

Rational mad_bound_value(int omega, const Rational& d, const Rational& epsilon)
{
    return (Rational(1) + epsilon) / 2 * omega + d / epsilon + 1;
}

Rational default_epsilon(const Rational& d, int omega)
{
    if (omega <= 0 || d <= 0)
        return Rational(1, 1000);
    double optimum = std::sqrt(boost::rational_cast<double>(d) / omega);
    auto thousandths = static_cast<std::int64_t>(std::llround(optimum * 1000.0));
    return Rational(std::max<std::int64_t>(thousandths, 1), 1000);
}

BoundReport mad_bound_report(const Digraph& d, BoundOptions options)
{
    if (options.epsilon && *options.epsilon <= 0)
        throw std::invalid_argument("epsilon must be positive");
    const auto g = underlying_graph(d);
    const Ordering peo = require_chordal(g);
    BoundReport report;
    report.omega = clique_number_chordal(g, peo);
    report.delta_b = max_bidegree(d);
    report.mad_b = max_average_degree(bidirected_graph(d));
    report.epsilon = options.epsilon ? *options.epsilon : default_epsilon(report.mad_b, report.omega);
    report.bound_value = mad_bound_value(report.omega, report.mad_b, report.epsilon);

    const Rational& md = report.mad_b;
    const Rational& eps = report.epsilon;
    Rational first(ceil(md / (eps * 2)));
    Rational second = md * 3 / 4 + md / (eps * 8) + Rational(1, 2);
    report.proof_constant = std::max(first, second);

    if (d.order() <= options.exact_limit) {
        report.chi = dichromatic_number(d);
        report.chi_exact = true;
    } else {
        report.chi = greedy_peo_dicolouring(d).num_colours;
        if (is_c4_free(bidirected_graph(d)))
            report.chi = std::min(report.chi, balanced_c4free_dicolouring(d).num_colours);
        report.chi_exact = false;
    }
    report.satisfied = Rational(report.chi) <= report.bound_value;
    return report;
}

} // namespace dicol
