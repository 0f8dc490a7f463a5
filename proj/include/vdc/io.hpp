#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "vdc/certificate.hpp"
#include "vdc/complex.hpp"
#include "vdc/graph.hpp"

namespace vdc {

/// Malformed input document (edge list, facet list, certificate, order).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Edge-list format: first line "n m", then m lines "u v" with
// 0 <= u < v < n. Lines whose first non-space character is '#' are
// comments; blank lines are ignored.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

// Facet-list format: first line "n k", then k facet lines, each an
// ascending space-separated vertex list; the empty facet is "-".
// Non-maximal input facets are normalized away.
SimplicialComplex read_facet_list(std::istream& in);
SimplicialComplex parse_facet_list(const std::string& text);
std::string write_facet_list(const SimplicialComplex& c);

std::string facet_line(const std::vector<int>& facet);
std::vector<int> parse_facet_line(const std::string& line);

/// Reads facet lines (one per line, "-" for the empty facet) until EOF.
std::vector<std::vector<int>> read_facet_lines(std::istream& in);

// Certificate documents are JSON. Internal nodes carry "rule", "vertex",
// "del", "link"; leaves carry "leaf": {"kind", "facet"|"vertices"}. The
// root object additionally carries "format_version": 1.
std::string write_certificate_document(const Certificate::Ptr& cert);
Certificate::Ptr parse_certificate_document(const std::string& text);
Certificate::Ptr read_certificate_document(std::istream& in);

}  // namespace vdc
