#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cdgraph/closed_forms.hpp"
#include "cdgraph/families.hpp"
#include "cdgraph/io.hpp"
#include "cdgraph/spectral.hpp"
#include "cdgraph/validity.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomainFailure = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw cdg::io::ParseError("cannot open input file '" + path + "'");
        buf << in.rdbuf();
    }
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << content;
}

std::vector<std::string> split_labels(const std::string& csv) {
    std::vector<std::string> labels;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) labels.push_back(item);
    return labels;
}

struct Range {
    int lo = 0;
    int hi = 0;
};

Range parse_range(const std::string& text) {
    const auto parse_int = [&](const std::string& tok) {
        size_t pos = 0;
        const int value = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(text);
        return value;
    };
    Range r;
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = parse_int(text);
        } else {
            r.lo = parse_int(text.substr(0, dots));
            r.hi = parse_int(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid range '" + text + "': expected N or A..B");
    }
    if (r.lo > r.hi) {
        throw std::invalid_argument("invalid range '" + text + "': lower bound exceeds upper");
    }
    return r;
}

cdg::io::GraphFormat parse_format(const std::string& name) {
    const auto f = cdg::io::format_from_name(name);
    if (!f) throw std::invalid_argument("unknown format '" + name + "'");
    return *f;
}

void attach_labels(cdg::io::GraphDocument& doc, const std::string& labels_csv) {
    if (labels_csv.empty()) return;
    auto labels = split_labels(labels_csv);
    if (static_cast<int>(labels.size()) != doc.graph.vertex_count()) {
        throw std::invalid_argument("expected " + std::to_string(doc.graph.vertex_count()) +
                                    " labels, got " + std::to_string(labels.size()));
    }
    doc.labels = std::move(labels);
}

int run_construct(const std::string& family_name, int n, int n1, bool n1_given,
                  const std::string& format_name, const std::string& output,
                  const std::string& labels_csv) {
    const auto family = cdg::family_from_name(family_name);
    if (!family) {
        std::cerr << "error: unknown family '" << family_name << "'\n";
        return kExitUsage;
    }
    if (*family == cdg::Family::CocktailParty && n1_given) {
        std::cerr << "error: cocktail family takes no --n1\n";
        return kExitUsage;
    }
    const cdg::FamilyParams params{*family, n, n1};
    params.validate();
    cdg::io::GraphDocument doc{cdg::build_family(params), {}};
    attach_labels(doc, labels_csv);
    const auto format = parse_format(format_name);
    write_output(output, cdg::io::write_graph(doc, format));
    return kExitOk;
}

int run_check(const std::string& input, const std::string& format_name,
              const std::string& output, const std::string& labels_csv) {
    auto doc = cdg::io::parse_graph(read_input(input), parse_format(format_name));
    attach_labels(doc, labels_csv);
    const cdg::CheckReport report = cdg::full_report(doc.graph);
    write_output(output, cdg::io::check_report_json(doc, report).dump(2) + "\n");
    return report.necessary_pass ? kExitOk : kExitDomainFailure;
}

int run_spectrum(const std::string& input, const std::string& which,
                 const std::string& format_name, const std::string& output,
                 const std::string& labels_csv) {
    auto doc = cdg::io::parse_graph(read_input(input), parse_format(format_name));
    attach_labels(doc, labels_csv);
    const int n = doc.graph.vertex_count();

    cdg::IntMatrix matrix;
    long root_bound = 0;
    if (which == "laplacian") {
        matrix = cdg::laplacian(doc.graph);
        root_bound = n;
    } else {
        try {
            matrix = cdg::distance_laplacian(doc.graph);
        } catch (const cdg::DisconnectedError& e) {
            cdg::io::OrderedJson j;
            j["command"] = "spectrum";
            j["which"] = which;
            j["input"] = cdg::io::graph_json(doc);
            j["error"] = cdg::io::OrderedJson{
                {"kind", "disconnected"},
                {"message", e.what()},
                {"witness", cdg::io::OrderedJson::array({e.u, e.v})}};
            write_output(output, j.dump(2) + "\n");
            return kExitDomainFailure;
        }
        root_bound = 2L * n;
    }

    const cdg::IntPolynomial poly = cdg::char_poly(matrix);
    const cdg::Spectrum spectrum = cdg::integer_spectrum(poly, root_bound);
    cdg::BigInt trees;
    const cdg::BigInt* trees_ptr = nullptr;
    if (which == "laplacian") {
        trees = cdg::spanning_tree_count(doc.graph);
        trees_ptr = &trees;
    }
    write_output(output,
                 cdg::io::spectrum_report_json(doc, which, poly, spectrum, trees_ptr)
                         .dump(2) +
                     "\n");
    return kExitOk;
}

int run_verify(const std::string& family_name, const std::string& n_range_text,
               const std::string& n1_range_text, const std::string& output) {
    const auto family = cdg::family_from_name(family_name);
    if (!family) {
        std::cerr << "error: unknown family '" << family_name << "'\n";
        return kExitUsage;
    }
    if (*family == cdg::Family::CocktailParty && !n1_range_text.empty()) {
        std::cerr << "error: cocktail family takes no --n1\n";
        return kExitUsage;
    }
    const Range n_range = parse_range(n_range_text);
    Range n1_range{1, 1 << 30};
    if (!n1_range_text.empty()) n1_range = parse_range(n1_range_text);

    std::vector<cdg::FamilyParams> points;
    for (int n = n_range.lo; n <= n_range.hi; ++n) {
        switch (*family) {
            case cdg::Family::CocktailParty:
                if (n >= 4 && n % 2 == 0) points.push_back({*family, n, 0});
                break;
            case cdg::Family::Supergraph: {
                if (n < 4 || n % 2 != 0) break;
                const int hi = std::min(n1_range.hi, n / 2);
                for (int n1 = std::max(1, n1_range.lo); n1 <= hi; ++n1) {
                    points.push_back({*family, n, n1});
                }
                break;
            }
            case cdg::Family::TwoClique: {
                if (n < 3) break;
                const int hi = std::min(n1_range.hi, (n - 1) / 2);
                for (int n1 = std::max(1, n1_range.lo); n1 <= hi; ++n1) {
                    points.push_back({*family, n, n1});
                }
                break;
            }
        }
    }
    if (points.empty()) {
        std::cerr << "error: no admissible parameter points in the requested range\n";
        return kExitUsage;
    }

    std::vector<cdg::VerificationReport> reports;
    reports.reserve(points.size());
    bool all_match = true;
    for (const auto& params : points) {
        reports.push_back(cdg::verify_family(params));
        if (!reports.back().core_matches()) all_match = false;
    }
    write_output(output, cdg::io::verify_report_json(*family, reports).dump(2) + "\n");
    return all_match ? kExitOk : kExitDomainFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Laplacian / distance-Laplacian spectra, spanning-tree counts and "
                 "structural checks for character-degree-graph families"};
    app.require_subcommand(1);

    std::string family, input, output, labels;
    std::string format = "auto";
    std::string which = "laplacian";
    std::string n_range, n1_range;
    int n = 0, n1 = 0;

    auto* construct = app.add_subcommand("construct", "generate a family graph file");
    construct->add_option("family", family, "cocktail | supergraph | two-clique")
        ->required();
    construct->add_option("--n", n, "vertex count")->required();
    auto* construct_n1 = construct->add_option("--n1", n1, "family parameter");
    construct->add_option("--format", format, "json | edgelist")->default_val("json");
    construct->add_option("--output", output, "output path (stdout when absent)");
    construct->add_option("--labels", labels, "comma-separated vertex labels");

    auto* check = app.add_subcommand("check", "run the structural checks on a graph");
    check->add_option("input", input, "graph file (stdin when absent)");
    check->add_option("--format", format, "json | edgelist | auto")->default_val("auto");
    check->add_option("--output", output, "output path (stdout when absent)");
    check->add_option("--labels", labels, "comma-separated vertex labels");

    auto* spectrum = app.add_subcommand("spectrum", "exact spectrum of a graph matrix");
    spectrum->add_option("input", input, "graph file (stdin when absent)");
    spectrum->add_option("--which", which, "laplacian | distance-laplacian")
        ->check(CLI::IsMember({"laplacian", "distance-laplacian"}))
        ->default_val("laplacian");
    spectrum->add_option("--format", format, "json | edgelist | auto")->default_val("auto");
    spectrum->add_option("--output", output, "output path (stdout when absent)");
    spectrum->add_option("--labels", labels, "comma-separated vertex labels");

    auto* verify = app.add_subcommand("verify", "verify closed-form spectra over a range");
    verify->add_option("family", family, "cocktail | supergraph | two-clique")->required();
    verify->add_option("--n", n_range, "vertex count or range A..B")->required();
    verify->add_option("--n1", n1_range, "family parameter or range A..B");
    verify->add_option("--output", output, "output path (stdout when absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (construct->parsed()) {
            return run_construct(family, n, n1, construct_n1->count() > 0, format,
                                 output, labels);
        }
        if (check->parsed()) {
            return run_check(input, format, output, labels);
        }
        if (spectrum->parsed()) {
            return run_spectrum(input, which, format, output, labels);
        }
        if (verify->parsed()) {
            return run_verify(family, n_range, n1_range, output);
        }
    } catch (const cdg::io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainFailure;
    }
    return kExitUsage;
}
