#include "dicol/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "dicol/chordal.hpp"
#include "dicol/colouring.hpp"
#include "dicol/constructions.hpp"
#include "dicol/io.hpp"

namespace dicol::cli {

namespace {

struct GenerateArgs {
    std::string family;
    std::optional<int> k, l, n, omega;
    std::uint64_t seed = 0;
    std::string digon_prob = "0";
    std::string out, cert;
};

struct ColourArgs {
    std::string algorithm;
    std::string in, out;
    int threads = 1;
    std::optional<int> budget;
};

struct VerifyArgs {
    std::string in, colouring, cert;
    int oracle_limit = 20;
};

struct StatsArgs {
    std::string in;
    std::string epsilon;
};

struct DecomposeArgs {
    std::string in, out;
    bool ordering = false;
};

std::string join(const std::vector<Vertex>& vs, char sep = ' ')
{
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i)
            s.push_back(sep);
        s += std::to_string(vs[i]);
    }
    return s;
}

int need(const std::optional<int>& value, const std::string& family, const char* flag)
{
    if (!value)
        throw std::invalid_argument("family " + family + " requires " + flag);
    return *value;
}

int cmd_generate(const GenerateArgs& a, std::ostream& out)
{
    Digraph d;
    FamilyCertificate cert;
    if (a.family == "interval") {
        auto fam = interval_family(need(a.k, a.family, "--k"));
        d = std::move(fam.digraph);
        cert = std::move(fam.certificate);
    } else if (a.family == "cograph") {
        auto fam = cograph_family(need(a.k, a.family, "--k"));
        d = std::move(fam.digraph);
        cert = std::move(fam.certificate);
    } else if (a.family == "chordal-kl") {
        auto fam = chordal_kl_family(need(a.k, a.family, "--k"), a.l.value_or(0));
        d = std::move(fam.digraph);
        cert = std::move(fam.certificate);
    } else if (a.family == "c4free") {
        auto fam = c4free_family(need(a.k, a.family, "--k"), need(a.n, a.family, "--n"));
        d = std::move(fam.digraph);
        cert = std::move(fam.certificate);
    } else if (a.family == "random-chordal") {
        const int n = need(a.n, a.family, "--n");
        const int omega = need(a.omega, a.family, "--omega");
        const Rational p = parse_rational(a.digon_prob);
        d = random_chordal_superorientation(n, omega, p, a.seed);
        cert.family = a.family;
        cert.params = {{"n", std::to_string(n)},
                       {"omega", std::to_string(omega)},
                       {"seed", std::to_string(a.seed)},
                       {"digon_prob", to_string(p)}};
        cert.vertices = n;
        cert.omega = omega;
        cert.delta_b = max_bidegree(d);
        cert.chi_upper = greedy_bound(omega, *cert.delta_b);
        cert.structure = {"chordal"};
    } else {
        throw std::invalid_argument("unknown family '" + a.family + "'");
    }

    const std::string cert_text = serialize_certificate(cert);
    if (a.out.empty()) {
        out << serialize_digraph(d);
        std::istringstream lines(cert_text);
        for (std::string line; std::getline(lines, line);)
            out << "# " << line << '\n';
        return Success;
    }
    const std::string cert_path = a.cert.empty() ? a.out + ".cert" : a.cert;
    write_file(a.out, serialize_digraph(d));
    write_file(cert_path, cert_text);
    out << "n=" << d.order() << " arcs=" << d.arc_count() << " out=" << a.out << " cert=" << cert_path << '\n';
    return Success;
}

int cmd_colour(const ColourArgs& a, std::ostream& out)
{
    const Digraph d = parse_digraph(read_file(a.in));
    Colouring c;
    std::optional<int> bound;
    if (a.algorithm == "greedy-peo") {
        c = greedy_peo_dicolouring(d);
        const auto g = underlying_graph(d);
        bound = greedy_bound(clique_number_chordal(g, require_chordal(g)), max_bidegree(d));
    } else if (a.algorithm == "balanced-c4free") {
        c = balanced_c4free_dicolouring(d);
        const auto g = underlying_graph(d);
        bound = c4free_bound(clique_number_chordal(g, require_chordal(g)));
    } else if (a.algorithm == "exact") {
        if (a.threads < 1)
            throw std::invalid_argument("--threads must be at least 1");
        auto result = exact_dichromatic(d, ExactOptions{a.budget, a.threads});
        if (auto* over = std::get_if<BudgetExceeded>(&result)) {
            out << "budget_exceeded=true budget=" << over->budget << '\n';
            return VerificationFailed;
        }
        c = std::get<DichromaticResult>(result).witness;
    } else {
        throw std::invalid_argument("unknown algorithm '" + a.algorithm + "'");
    }

    const bool valid = validate_dicolouring(d, c).valid();
    out << "colours=" << c.num_colours << " valid=" << (valid ? "true" : "false");
    if (bound)
        out << " bound=" << *bound;
    out << '\n';
    if (a.out.empty())
        out << serialize_colouring(c);
    else
        write_file(a.out, serialize_colouring(c));
    return valid ? Success : VerificationFailed;
}

struct ClaimReport {
    std::ostream& out;
    bool failed = false;

    void line(const std::string& claim, const std::string& expected, const std::string& actual, bool pass)
    {
        out << "claim=" << claim << " expected=" << expected << " actual=" << actual
            << " status=" << (pass ? "pass" : "fail") << '\n';
        failed |= !pass;
    }

    void skip(const std::string& claim, const std::string& expected, const std::string& reason)
    {
        out << "claim=" << claim << " expected=" << expected << " status=skip reason=" << reason << '\n';
    }
};

bool b_is_paths(const Digraph& d)
{
    const auto b = bidirected_graph(d);
    if (b.max_degree() > 2)
        return false;
    // A forest of maximum degree 2 is a union of paths.
    std::size_t edges = b.edge_count();
    std::size_t components = connected_components(b).size();
    return edges + components == static_cast<std::size_t>(b.order());
}

int verify_certificate(const Digraph& d, const FamilyCertificate& cert, int oracle_limit, std::ostream& out)
{
    ClaimReport report{out};
    const auto g = underlying_graph(d);
    const auto peo = recognize_chordal(g);

    report.line("vertices", std::to_string(cert.vertices), std::to_string(d.order()), cert.vertices == d.order());
    for (const auto& s : cert.structure) {
        bool pass;
        if (s == "chordal")
            pass = peo.has_value();
        else if (s == "cograph")
            pass = find_induced_p4(g).empty();
        else if (s == "oriented")
            pass = d.digon_count() == 0;
        else if (s == "b-paths")
            pass = b_is_paths(d);
        else if (s == "b-c4free")
            pass = is_c4_free(bidirected_graph(d)).c4_free();
        else
            throw std::invalid_argument("unknown structural claim '" + s + "'");
        report.line(s, "yes", pass ? "yes" : "no", pass);
    }
    if (cert.omega) {
        int omega = peo ? clique_number_chordal(g, *peo) : clique_number(g);
        report.line("omega", std::to_string(*cert.omega), std::to_string(omega), omega == *cert.omega);
    }
    if (cert.delta_b) {
        int delta = max_bidegree(d);
        report.line("delta_b", std::to_string(*cert.delta_b), std::to_string(delta), delta == *cert.delta_b);
    }

    std::optional<int> chi;
    auto exact_chi = [&]() -> std::optional<int> {
        if (!chi && d.order() <= oracle_limit)
            chi = dichromatic_number(d);
        return chi;
    };
    // Best heuristic upper bound available without the oracle.
    auto heuristic = [&]() -> std::optional<int> {
        if (!peo)
            return std::nullopt;
        int best = greedy_peo_dicolouring(d).num_colours;
        if (is_c4_free(bidirected_graph(d)))
            best = std::min(best, balanced_c4free_dicolouring(d).num_colours);
        return best;
    };
    const std::string too_large = "order_above_oracle_limit";
    if (cert.chi) {
        if (auto x = exact_chi())
            report.line("chi", std::to_string(*cert.chi), std::to_string(*x), *x == *cert.chi);
        else
            report.skip("chi", std::to_string(*cert.chi), too_large);
    }
    if (cert.chi_lower) {
        if (auto x = exact_chi())
            report.line("chi_lower", std::to_string(*cert.chi_lower), std::to_string(*x), *x >= *cert.chi_lower);
        else
            report.skip("chi_lower", std::to_string(*cert.chi_lower), too_large);
    }
    if (cert.chi_upper) {
        if (auto x = exact_chi())
            report.line("chi_upper", std::to_string(*cert.chi_upper), std::to_string(*x), *x <= *cert.chi_upper);
        else if (auto h = heuristic(); h && *h <= *cert.chi_upper)
            report.line("chi_upper", std::to_string(*cert.chi_upper), std::to_string(*h), true);
        else
            report.skip("chi_upper", std::to_string(*cert.chi_upper), too_large);
    }
    return report.failed ? VerificationFailed : Success;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out)
{
    if (a.colouring.empty() == a.cert.empty())
        throw CLI::ValidationError("verify needs exactly one of --colouring and --cert");
    const Digraph d = parse_digraph(read_file(a.in));
    if (!a.cert.empty())
        return verify_certificate(d, parse_certificate(read_file(a.cert)), a.oracle_limit, out);

    const Colouring c = parse_colouring(read_file(a.colouring), d.order());
    auto check = validate_dicolouring(d, c);
    if (check) {
        out << "claim=dicolouring status=pass colours=" << c.num_colours << '\n';
        return Success;
    }
    out << "claim=dicolouring status=fail witness=" << join(check.cycle, ',') << '\n';
    return VerificationFailed;
}

int cmd_stats(const StatsArgs& a, std::ostream& out)
{
    const Digraph d = parse_digraph(read_file(a.in));
    const auto g = underlying_graph(d);
    const auto b = bidirected_graph(d);
    const auto peo = recognize_chordal(g);
    const int omega = peo ? clique_number_chordal(g, *peo) : clique_number(g);
    out << "n=" << d.order() << " arcs=" << d.arc_count() << " digons=" << d.digon_count()
        << " simple_arcs=" << d.simple_arc_count() << " omega=" << omega << " delta_b=" << max_bidegree(d)
        << " mad_b=" << to_string(max_average_degree(b)) << " chordal=" << (peo ? "yes" : "no")
        << " b_c4free=" << (is_c4_free(b) ? "yes" : "no") << '\n';
    if (a.epsilon.empty())
        return Success;
    BoundOptions options;
    if (a.epsilon != "auto")
        options.epsilon = parse_rational(a.epsilon);
    auto r = mad_bound_report(d, options);
    out << "epsilon=" << to_string(r.epsilon) << " bound=" << to_string(r.bound_value)
        << " proof_constant=" << to_string(r.proof_constant) << " chi=" << r.chi
        << " chi_exact=" << (r.chi_exact ? "true" : "false") << " bound_satisfied=" << (r.satisfied ? "true" : "false")
        << '\n';
    return r.satisfied ? Success : VerificationFailed;
}

int cmd_decompose(const DecomposeArgs& a, std::ostream& out)
{
    const Digraph d = parse_digraph(read_file(a.in));
    const auto g = underlying_graph(d);
    std::string text;
    if (a.ordering) {
        text = "ordering=" + join(lemma_ordering(g).sequence) + "\n";
    } else {
        text = serialize_decomposition(valid_decomposition(g));
    }
    if (a.out.empty())
        out << text;
    else
        write_file(a.out, text);
    return Success;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Dicolouring super-orientations of chordal graphs", "dicol"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Write a member of a digraph family");
    generate->add_option("--family", gen.family, "interval | cograph | chordal-kl | c4free | random-chordal")
        ->required()
        ->check(CLI::IsMember({"interval", "cograph", "chordal-kl", "c4free", "random-chordal"}));
    generate->add_option("--k", gen.k, "Clique number parameter");
    generate->add_option("--l", gen.l, "Maximum degree of B for chordal-kl");
    generate->add_option("--n", gen.n, "Minimum order (c4free) or order (random-chordal)");
    generate->add_option("--omega", gen.omega, "Clique number for random-chordal");
    generate->add_option("--seed", gen.seed, "Random seed");
    generate->add_option("--digon-prob", gen.digon_prob, "Digon probability, e.g. 1/4");
    generate->add_option("--out", gen.out, "Digraph output file (default: stdout)");
    generate->add_option("--cert", gen.cert, "Certificate output file (default: <out>.cert)");

    ColourArgs col;
    auto* colour = app.add_subcommand("colour", "Dicolour a digraph");
    colour->add_option("--algorithm", col.algorithm, "greedy-peo | balanced-c4free | exact")
        ->required()
        ->check(CLI::IsMember({"greedy-peo", "balanced-c4free", "exact"}));
    colour->add_option("--in", col.in, "Digraph file")->required();
    colour->add_option("--out", col.out, "Colouring output file (default: stdout)");
    colour->add_option("--threads", col.threads, "Worker threads for the exact solver");
    colour->add_option("--budget", col.budget, "Give up above this many colours (exact only)");

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "Check a colouring or a family certificate");
    verify->add_option("--in", ver.in, "Digraph file")->required();
    verify->add_option("--colouring", ver.colouring, "Colouring file");
    verify->add_option("--cert", ver.cert, "Certificate file");
    verify->add_option("--oracle-limit", ver.oracle_limit, "Largest order handed to the exact solver");

    StatsArgs st;
    auto* stats = app.add_subcommand("stats", "Print digraph parameters");
    stats->add_option("--in", st.in, "Digraph file")->required();
    stats->add_option("--epsilon", st.epsilon, "Also report the Mad bound at this epsilon ('auto' for the default)");

    DecomposeArgs dec;
    auto* decompose = app.add_subcommand("decompose", "Valid tree decomposition of UG(D)");
    decompose->add_option("--in", dec.in, "Digraph file")->required();
    decompose->add_option("--out", dec.out, "Output file (default: stdout)");
    decompose->add_flag("--ordering", dec.ordering, "Print the prefix-bounded vertex ordering instead");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Success : UsageError;
    }

    try {
        if (*generate)
            return cmd_generate(gen, out);
        if (*colour)
            return cmd_colour(col, out);
        if (*verify)
            return cmd_verify(ver, out);
        if (*stats)
            return cmd_stats(st, out);
        return cmd_decompose(dec, out);
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        out << "precondition_failed=true witness=" << join(e.witness(), ',') << '\n';
        return PreconditionFailed;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return UsageError;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return UsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return UsageError;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return UsageError;
    }
}

} // namespace dicol::cli
