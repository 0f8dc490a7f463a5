#include "vdc/io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "json.hpp"

namespace vdc {

namespace {

// Data lines of the stream: comments and blank lines removed.
std::vector<std::string> data_lines(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out.push_back(line);
    }
    return out;
}

std::vector<long long> parse_ints(const std::string& line, const char* what) {
    std::istringstream ss(line);
    std::vector<long long> out;
    long long x;
    while (ss >> x) out.push_back(x);
    if (!ss.eof())
        throw ParseError(std::string("expected only integers on ") + what + " line: '" + line +
                         "'");
    return out;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    const auto lines = data_lines(in);
    if (lines.empty()) throw ParseError("empty edge-list document");
    const auto header = parse_ints(lines[0], "header");
    if (header.size() != 2 || header[0] < 0 || header[1] < 0)
        throw ParseError("edge-list header must be 'n m'");
    const long long n = header[0], m = header[1];
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw ParseError("expected " + std::to_string(m) + " edge lines, found " +
                         std::to_string(lines.size() - 1));
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        const auto e = parse_ints(lines[static_cast<std::size_t>(i + 1)], "edge");
        if (e.size() != 2) throw ParseError("edge line must be 'u v'");
        const long long u = e[0], v = e[1];
        if (!(0 <= u && u < v && v < n))
            throw ParseError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") violates 0 <= u < v < n");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ")");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string facet_line(const std::vector<int>& facet) {
    if (facet.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < facet.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(facet[i]);
    }
    return out;
}

std::vector<int> parse_facet_line(const std::string& line) {
    {
        std::istringstream ss(line);
        std::string tok;
        if (ss >> tok && tok == "-") {
            if (ss >> tok) throw ParseError("unexpected content after '-' facet");
            return {};
        }
    }
    const auto vals = parse_ints(line, "facet");
    if (vals.empty()) throw ParseError("empty facet line (use '-' for the empty facet)");
    std::vector<int> out;
    out.reserve(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (vals[i] < 0) throw ParseError("facet vertices must be nonnegative");
        if (i > 0 && vals[i] <= vals[i - 1])
            throw ParseError("facet vertices must be strictly ascending: '" + line + "'");
        out.push_back(static_cast<int>(vals[i]));
    }
    return out;
}

SimplicialComplex read_facet_list(std::istream& in) {
    const auto lines = data_lines(in);
    if (lines.empty()) throw ParseError("empty facet-list document");
    const auto header = parse_ints(lines[0], "header");
    if (header.size() != 2 || header[0] < 0 || header[1] < 1)
        throw ParseError("facet-list header must be 'n k' with k >= 1");
    const long long n = header[0], k = header[1];
    if (static_cast<long long>(lines.size()) - 1 != k)
        throw ParseError("expected " + std::to_string(k) + " facet lines, found " +
                         std::to_string(lines.size() - 1));
    std::vector<std::vector<int>> facets;
    facets.reserve(static_cast<std::size_t>(k));
    for (long long i = 0; i < k; ++i) {
        auto f = parse_facet_line(lines[static_cast<std::size_t>(i + 1)]);
        if (!f.empty() && f.back() >= n)
            throw ParseError("facet vertex " + std::to_string(f.back()) + " out of range");
        facets.push_back(std::move(f));
    }
    return SimplicialComplex(static_cast<int>(n), std::move(facets));
}

SimplicialComplex parse_facet_list(const std::string& text) {
    std::istringstream in(text);
    return read_facet_list(in);
}

std::string write_facet_list(const SimplicialComplex& c) {
    std::string out =
        std::to_string(c.vertex_count()) + " " + std::to_string(c.facet_count()) + "\n";
    for (const auto& f : c.facets()) out += facet_line(f) + "\n";
    return out;
}

std::vector<std::vector<int>> read_facet_lines(std::istream& in) {
    std::vector<std::vector<int>> out;
    for (const auto& line : data_lines(in)) out.push_back(parse_facet_line(line));
    return out;
}

namespace {

using nlohmann::json;

json certificate_node_to_json(const Certificate::Ptr& cert) {
    if (cert->is_leaf()) {
        json leaf;
        leaf["kind"] = leaf_kind_name(cert->leaf_kind());
        leaf[cert->leaf_kind() == LeafKind::SingleFacet ? "facet" : "vertices"] =
            cert->leaf_set();
        return json{{"leaf", std::move(leaf)}};
    }
    return json{{"rule", rule_tag_name(cert->rule())},
                {"vertex", cert->shed_vertex()},
                {"del", certificate_node_to_json(cert->deletion_child())},
                {"link", certificate_node_to_json(cert->link_child())}};
}

std::vector<int> ascending_vertices(const json& arr, const char* what) {
    if (!arr.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<int> out;
    out.reserve(arr.size());
    for (const auto& x : arr) {
        if (!x.is_number_integer() || x.get<long long>() < 0)
            throw ParseError(std::string(what) + " entries must be nonnegative integers");
        out.push_back(x.get<int>());
        if (out.size() >= 2 && out[out.size() - 2] >= out.back())
            throw ParseError(std::string(what) + " must be strictly ascending");
    }
    return out;
}

Certificate::Ptr certificate_node_from_json(const json& node) {
    if (!node.is_object()) throw ParseError("certificate node must be a JSON object");
    if (node.contains("leaf")) {
        const auto& leaf = node.at("leaf");
        if (!leaf.is_object() || !leaf.contains("kind") || !leaf.at("kind").is_string())
            throw ParseError("leaf must be an object with a 'kind' string");
        const auto kind = parse_leaf_kind(leaf.at("kind").get<std::string>());
        if (!kind) throw ParseError("unknown leaf kind '" + leaf.at("kind").get<std::string>() + "'");
        const char* key = *kind == LeafKind::SingleFacet ? "facet" : "vertices";
        if (!leaf.contains(key))
            throw ParseError(std::string("leaf of kind '") + leaf_kind_name(*kind) +
                             "' needs the '" + key + "' array");
        auto vs = ascending_vertices(leaf.at(key), key);
        return *kind == LeafKind::SingleFacet ? Certificate::make_single_facet(std::move(vs))
                                              : Certificate::make_discrete(std::move(vs));
    }
    for (const char* key : {"rule", "vertex", "del", "link"})
        if (!node.contains(key))
            throw ParseError(std::string("internal certificate node needs '") + key + "'");
    if (!node.at("rule").is_string()) throw ParseError("'rule' must be a string");
    const auto rule = parse_rule_tag(node.at("rule").get<std::string>());
    if (!rule) throw ParseError("unknown rule tag '" + node.at("rule").get<std::string>() + "'");
    if (!node.at("vertex").is_number_integer() || node.at("vertex").get<long long>() < 0)
        throw ParseError("'vertex' must be a nonnegative integer");
    return Certificate::make_internal(*rule, node.at("vertex").get<int>(),
                                      certificate_node_from_json(node.at("del")),
                                      certificate_node_from_json(node.at("link")));
}

}  // namespace

std::string write_certificate_document(const Certificate::Ptr& cert) {
    if (!cert) throw std::invalid_argument("cannot serialize a null certificate");
    json doc = certificate_node_to_json(cert);
    doc["format_version"] = 1;
    return doc.dump(2);
}

Certificate::Ptr parse_certificate_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("certificate document must be a JSON object");
    if (!doc.contains("format_version") || doc.at("format_version") != 1)
        throw ParseError("certificate document must carry format_version 1");
    doc.erase("format_version");
    return certificate_node_from_json(doc);
}

Certificate::Ptr read_certificate_document(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_certificate_document(ss.str());
}

}  // namespace vdc
