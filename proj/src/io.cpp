#include "cdgraph/io.hpp"

#include <sstream>

namespace cdg::io {
namespace {

using nlohmann::json;

int require_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) {
        throw ParseError(where + ": expected an integer");
    }
    return j.get<int>();
}

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

int parse_int_token(const std::string& tok, const std::string& where) {
    try {
        size_t pos = 0;
        const int value = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError(where + ": '" + tok + "' is not an integer");
    }
}

}  // namespace

std::optional<GraphFormat> format_from_name(const std::string& name) {
    if (name == "json") return GraphFormat::Json;
    if (name == "edgelist") return GraphFormat::EdgeList;
    if (name == "auto") return GraphFormat::Auto;
    return std::nullopt;
}

GraphDocument parse_graph_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("top-level value must be an object");
    if (!j.contains("n")) throw ParseError("missing field 'n'");
    const int n = require_int(j.at("n"), "field 'n'");
    if (!j.contains("edges") || !j.at("edges").is_array()) {
        throw ParseError("missing or non-array field 'edges'");
    }
    std::vector<std::pair<int, int>> edges;
    size_t idx = 0;
    for (const auto& e : j.at("edges")) {
        const std::string where = "edges[" + std::to_string(idx) + "]";
        if (!e.is_array() || e.size() != 2) {
            throw ParseError(where + ": expected a pair [u, v]");
        }
        edges.emplace_back(require_int(e[0], where), require_int(e[1], where));
        ++idx;
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j.at("labels").is_array()) throw ParseError("field 'labels' must be an array");
        for (const auto& l : j.at("labels")) {
            if (!l.is_string()) throw ParseError("labels must be strings");
            labels.push_back(l.get<std::string>());
        }
        if (static_cast<int>(labels.size()) != n) {
            throw ParseError("expected " + std::to_string(n) + " labels, got " +
                             std::to_string(labels.size()));
        }
    }
    try {
        return GraphDocument{Graph(n, edges), std::move(labels)};
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

GraphDocument parse_graph_edgelist(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        const std::string where = "line " + std::to_string(line_no);
        if (n < 0) {
            if (tokens.size() != 2 || tokens[0] != "n") {
                throw ParseError(where + ": expected header 'n <count>'");
            }
            n = parse_int_token(tokens[1], where);
            continue;
        }
        if (tokens.size() != 2) {
            throw ParseError(where + ": expected an edge 'u v'");
        }
        edges.emplace_back(parse_int_token(tokens[0], where),
                           parse_int_token(tokens[1], where));
    }
    if (n < 0) throw ParseError("empty input: expected header 'n <count>'");
    try {
        return GraphDocument{Graph(n, edges), {}};
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

GraphDocument parse_graph(const std::string& text, GraphFormat format) {
    if (format == GraphFormat::Auto) {
        const auto first = text.find_first_not_of(" \t\r\n");
        format = (first != std::string::npos && text[first] == '{') ? GraphFormat::Json
                                                                    : GraphFormat::EdgeList;
    }
    return format == GraphFormat::Json ? parse_graph_json(text) : parse_graph_edgelist(text);
}

OrderedJson graph_json(const GraphDocument& doc) {
    OrderedJson j;
    j["n"] = doc.graph.vertex_count();
    auto edges = OrderedJson::array();
    for (const auto& [u, v] : doc.graph.edges()) {
        edges.push_back(OrderedJson::array({u, v}));
    }
    j["edges"] = std::move(edges);
    if (!doc.labels.empty()) j["labels"] = doc.labels;
    return j;
}

std::string write_graph_json(const GraphDocument& doc) {
    return graph_json(doc).dump(2) + "\n";
}

std::string write_graph_edgelist(const GraphDocument& doc) {
    std::string out = "n " + std::to_string(doc.graph.vertex_count()) + "\n";
    for (const auto& [u, v] : doc.graph.edges()) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return out;
}

std::string write_graph(const GraphDocument& doc, GraphFormat format) {
    return format == GraphFormat::EdgeList ? write_graph_edgelist(doc)
                                           : write_graph_json(doc);
}

OrderedJson spectrum_json(const Spectrum& s) {
    auto values = OrderedJson::array();
    for (const auto& [value, mult] : s.values) {
        values.push_back(OrderedJson::array({value, mult}));
    }
    return values;
}

namespace {

OrderedJson poly_strings(const IntPolynomial& p) {
    auto coeffs = OrderedJson::array();
    for (const auto& c : p.coeffs) coeffs.push_back(c.get_str());
    return coeffs;
}

OrderedJson check_json(const CheckResult& c) {
    OrderedJson j;
    j["name"] = c.name;
    j["verdict"] = verdict_name(c.verdict);
    j["note"] = c.note;
    if (!c.witness.empty()) j["witness"] = c.witness;
    if (!c.witness_pairs.empty()) {
        auto pairs = OrderedJson::array();
        for (const auto& [u, v] : c.witness_pairs) {
            pairs.push_back(OrderedJson::array({u, v}));
        }
        j["witness_pairs"] = std::move(pairs);
    }
    if (!c.partition_u.empty() || !c.partition_w.empty() ||
        (c.name == "fitting_height_2" && c.verdict == Verdict::Pass)) {
        j["partition"] = OrderedJson{{"u", c.partition_u}, {"w", c.partition_w}};
    }
    return j;
}

}  // namespace

OrderedJson check_report_json(const GraphDocument& doc, const CheckReport& report) {
    OrderedJson j;
    j["command"] = "check";
    j["input"] = graph_json(doc);
    auto checks = OrderedJson::array();
    for (const auto& c : report.checks) checks.push_back(check_json(c));
    j["checks"] = std::move(checks);
    j["necessary_failures"] = report.failed_checks;
    j["overall"] = report.necessary_pass ? "passes necessary conditions"
                                         : "fails necessary conditions";
    j["note"] =
        "necessary conditions only; a pass does not certify the graph as a "
        "character degree graph of a solvable group";
    return j;
}

OrderedJson spectrum_report_json(const GraphDocument& doc, const std::string& which,
                                 const IntPolynomial& poly, const Spectrum& spectrum,
                                 const BigInt* spanning_trees) {
    OrderedJson j;
    j["command"] = "spectrum";
    j["which"] = which;
    j["input"] = graph_json(doc);
    j["char_poly"] = poly_strings(poly);
    j["spectrum"] = spectrum_json(spectrum);
    if (!spectrum.fully_factored()) {
        j["residual"] = poly_strings(spectrum.residual);
    }
    if (spanning_trees != nullptr) {
        j["spanning_trees"] = spanning_trees->get_str();
    }
    return j;
}

OrderedJson verify_point_json(const VerificationReport& point) {
    OrderedJson j;
    j["n"] = point.params.n;
    j["n1"] = point.params.n1;
    j["l_match"] = point.l_match;
    j["dl_transfer_match"] = point.dl_transfer_match;
    j["diameter_at_most_two"] = point.diameter_at_most_two;
    j["dl_direct_match"] = point.dl_direct_match;
    j["tree_match"] = point.tree_match;
    j["tree_match_stated"] = point.tree_match_stated;
    j["l_spectrum"] = spectrum_json(point.l_computed);
    j["dl_spectrum"] = spectrum_json(point.dl_transferred);
    j["spanning_trees"] = point.trees_computed.get_str();
    j["spanning_trees_stated"] = point.predicted.tree_count_stated.get_str();
    if (!point.core_matches() || !point.dl_direct_match) {
        OrderedJson expected;
        expected["l_spectrum"] = spectrum_json(point.predicted.l_spectrum);
        expected["dl_spectrum"] = spectrum_json(point.predicted.dl_spectrum);
        expected["spanning_trees"] = point.predicted.tree_count.get_str();
        j["predicted"] = std::move(expected);
    }
    return j;
}

OrderedJson verify_report_json(Family family,
                               const std::vector<VerificationReport>& points) {
    OrderedJson j;
    j["command"] = "verify";
    j["family"] = family_name(family);
    auto arr = OrderedJson::array();
    int stated_discrepancies = 0;
    bool all_match = true;
    for (const auto& p : points) {
        arr.push_back(verify_point_json(p));
        if (!p.tree_match_stated) ++stated_discrepancies;
        if (!p.core_matches()) all_match = false;
    }
    j["points"] = std::move(arr);
    j["summary"] = OrderedJson{{"points", points.size()},
                               {"all_match", all_match},
                               {"stated_tree_discrepancies", stated_discrepancies}};
    return j;
}

}  // namespace cdg::io
