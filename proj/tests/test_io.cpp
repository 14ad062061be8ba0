#include <gtest/gtest.h>

#include "dicol/chordal.hpp"
#include "dicol/constructions.hpp"
#include "dicol/io.hpp"

using namespace dicol;

TEST(DigraphText, RoundTripGenerated)
{
    std::vector<Digraph> all{interval_family(4).digraph, cograph_family(3).digraph, chordal_kl_family(5, 1).digraph,
                             c4free_family(5, 9).digraph, build_digraph(0, std::vector<Arc>{})};
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        all.push_back(random_chordal_superorientation(30, 5, Rational(1, 3), seed));
    for (const auto& d : all)
        EXPECT_EQ(parse_digraph(serialize_digraph(d)), d);
}

TEST(DigraphText, Format)
{
    auto d = build_digraph(3, std::vector<Arc>{{2, 0}, {0, 1}, {1, 0}});
    EXPECT_EQ(serialize_digraph(d), "digraph 3\n0 1\n1 0\n2 0\n");
}

TEST(DigraphText, CommentsBlankLinesAndDuplicates)
{
    auto d = parse_digraph("# leading comment\n\ndigraph 3\n0 1\n# note\n0 1\n1 2   # trailing\n");
    EXPECT_EQ(d.order(), 3);
    EXPECT_EQ(d.arc_count(), 2u);
}

TEST(DigraphText, ErrorsCarryLineNumbers)
{
    auto line_of = [](const std::string& text) {
        try {
            parse_digraph(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    EXPECT_EQ(line_of("graph 3\n"), 1);
    EXPECT_EQ(line_of("digraph 3\n0 1\n0 x\n"), 3);
    EXPECT_EQ(line_of("digraph 3\n0 1\n0 3\n"), 3);
    EXPECT_EQ(line_of("digraph 3\n\n1 1\n"), 3);
    EXPECT_EQ(line_of("digraph 3\n0 1 2\n"), 2);
    EXPECT_EQ(line_of("digraph -1\n"), 1);
    EXPECT_THROW(parse_digraph(""), ParseError);
}

TEST(ColouringText, RoundTrip)
{
    Colouring c{{1, 2, 1, 3}, 3};
    EXPECT_EQ(serialize_colouring(c), "0 1\n1 2\n2 1\n3 3\n");
    EXPECT_EQ(parse_colouring(serialize_colouring(c)), c);
    EXPECT_EQ(parse_colouring(serialize_colouring(c), 4), c);
}

TEST(ColouringText, Errors)
{
    EXPECT_THROW(parse_colouring("0 1\n0 2\n"), ParseError);
    EXPECT_THROW(parse_colouring("0 1\n2 1\n"), ParseError);
    EXPECT_THROW(parse_colouring("0 1\n1 1\n", 3), ParseError);
    EXPECT_THROW(parse_colouring("0 1\n1 1\n2 1\n", 2), ParseError);
    EXPECT_THROW(parse_colouring("0 0\n"), ParseError);
}

TEST(ColouringText, NormalizesGaps)
{
    auto c = parse_colouring("0 4\n1 7\n");
    EXPECT_EQ(c.colours, (std::vector<int>{1, 2}));
}

TEST(DecompositionText, RoundTrip)
{
    auto g = random_chordal_graph(20, 4, 5);
    auto td = valid_decomposition(g);
    auto text = serialize_decomposition(td);
    EXPECT_EQ(text.rfind("td ", 0), 0u);
    EXPECT_EQ(parse_decomposition(text), td);
}

TEST(DecompositionText, Errors)
{
    EXPECT_THROW(parse_decomposition("td 1 2\nbag 0 0 1\n"), ParseError);
    EXPECT_THROW(parse_decomposition("td 1 1\nbag 3 0 1\n"), ParseError);
    EXPECT_THROW(parse_decomposition("td 2 1\nbag 0 0 1\nbag 1 1 2\ntedge 0 5\n"), ParseError);
    EXPECT_THROW(parse_decomposition("td 1 1\nleaf 0\n"), ParseError);
}

TEST(CertificateText, RoundTrip)
{
    std::vector<FamilyCertificate> certs{interval_family(3).certificate, cograph_family(2).certificate,
                                         chordal_kl_family(4, 1).certificate, c4free_family(3, 7).certificate};
    for (const auto& c : certs)
        EXPECT_EQ(parse_certificate(serialize_certificate(c)), c);
}

TEST(CertificateText, Keys)
{
    auto text = serialize_certificate(interval_family(3).certificate);
    EXPECT_NE(text.find("omega=3\n"), std::string::npos);
    EXPECT_NE(text.find("delta_b=0\n"), std::string::npos);
    EXPECT_NE(text.find("chi_lower=2\n"), std::string::npos);
    EXPECT_NE(text.find("chi_upper=2\n"), std::string::npos);
    EXPECT_NE(text.find("structure=chordal,cograph,oriented\n"), std::string::npos);
}

TEST(CertificateText, CommentPrefixedLines)
{
    auto c = parse_certificate("# family=cograph\n# chi=2\n# some prose\n");
    EXPECT_EQ(c.family, "cograph");
    EXPECT_EQ(c.chi, 2);
    EXPECT_THROW(parse_certificate("chi=2\n"), ParseError);
    EXPECT_THROW(parse_certificate("family=x\nbogus=1\n"), ParseError);
    EXPECT_THROW(parse_certificate("family=x\nno equals sign\n"), ParseError);
}
