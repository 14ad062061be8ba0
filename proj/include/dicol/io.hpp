#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "dicol/chordal.hpp"
#include "dicol/constructions.hpp"
#include "dicol/digraph.hpp"

namespace dicol {

// Digraph text:   "digraph <n>" then one "<u> <v>" arc per line; '#' lines are comments.
// Colouring text: "<vertex> <colour>" per line, sorted by vertex.
// Decomposition:  "td <nodes> <width>", "bag <node> v1 v2 ...", "tedge <a> <b>".
// Certificate:    "key=value" per line.

std::string serialize_digraph(const Digraph& d);
Digraph parse_digraph(std::string_view text);

std::string serialize_colouring(const Colouring& c);
/// Throws ParseError unless every vertex 0..n-1 occurs exactly once. With
/// expected_n < 0 the vertex count is inferred from the largest vertex.
Colouring parse_colouring(std::string_view text, int expected_n = -1);

std::string serialize_decomposition(const TreeDecomposition& td);
TreeDecomposition parse_decomposition(std::string_view text);

std::string serialize_certificate(const FamilyCertificate& cert);
FamilyCertificate parse_certificate(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

} // namespace dicol
