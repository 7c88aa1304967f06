#pragma once

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdgraph/closed_forms.hpp"
#include "cdgraph/graph.hpp"
#include "cdgraph/spectral.hpp"
#include "cdgraph/validity.hpp"

namespace cdg::io {

using OrderedJson = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A graph plus optional per-vertex labels (labels never affect any
/// computation; they are echoed through reports).
struct GraphDocument {
    Graph graph;
    std::vector<std::string> labels;  // empty, or exactly n entries
};

enum class GraphFormat { Json, EdgeList, Auto };

std::optional<GraphFormat> format_from_name(const std::string& name);

/// JSON form: {"n": int, "edges": [[u, v], ...], "labels": [...]?}
GraphDocument parse_graph_json(const std::string& text);

/// Text form: first line "n <count>", then one "u v" edge per line.
GraphDocument parse_graph_edgelist(const std::string& text);

/// Auto mode treats input starting with '{' as JSON, edge list otherwise.
GraphDocument parse_graph(const std::string& text, GraphFormat format);

std::string write_graph_json(const GraphDocument& doc);
std::string write_graph_edgelist(const GraphDocument& doc);
std::string write_graph(const GraphDocument& doc, GraphFormat format);

OrderedJson graph_json(const GraphDocument& doc);
OrderedJson spectrum_json(const Spectrum& s);

OrderedJson check_report_json(const GraphDocument& doc, const CheckReport& report);
OrderedJson spectrum_report_json(const GraphDocument& doc, const std::string& which,
                                 const IntPolynomial& poly, const Spectrum& spectrum,
                                 const BigInt* spanning_trees);
OrderedJson verify_point_json(const VerificationReport& point);
OrderedJson verify_report_json(Family family,
                               const std::vector<VerificationReport>& points);

}  // namespace cdg::io
