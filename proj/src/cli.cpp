#include "tricyclic/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <regex>

#include <CLI11.hpp>
#include <json.hpp>

#include "tricyclic/classify.hpp"
#include "tricyclic/enumerate.hpp"
#include "tricyclic/error.hpp"
#include "tricyclic/families.hpp"
#include "tricyclic/spectra.hpp"
#include "tricyclic/structure.hpp"
#include "tricyclic/subgraph.hpp"

namespace tricyclic {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

double round12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    const double y = std::strtod(buf, nullptr);
    return y == 0.0 ? 0.0 : y;
}

std::string fixed12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12f", std::abs(x) < 5e-13 ? 0.0 : x);
    return buf;
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double default_tolerance() {
    const char* env = std::getenv(kToleranceEnv);
    if (env == nullptr || *env == '\0') return kSpectralTolerance;
    char* end = nullptr;
    const double tol = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(tol > 0.0) || !std::isfinite(tol)) {
        throw UsageError(std::string(kToleranceEnv) + " must be a positive number, got '" + env + "'");
    }
    return tol;
}

struct Io {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    bool json = false;

    void error(const std::string& message, const std::string& kind) const {
        if (json) {
            out << Json{{"error", message}, {"kind", kind}}.dump() << '\n';
        } else {
            err << "error: " << message << '\n';
        }
    }
};

// Applies fn to each graph6 record from the positional list or, when that is
// empty, from the input stream. Per-record domain failures are reported and
// processing continues; the result is the exit status.
int for_each_graph(const std::vector<std::string>& positional, const Io& io,
                   const std::function<void(const std::string&, const Graph&)>& fn) {
    int status = kExitOk;
    auto handle = [&](const std::string& raw) {
        const std::string record = trim(raw);
        if (record.empty()) return;
        try {
            fn(record, parse_graph6(record));
        } catch (const Error& e) {
            io.error(e.what(), "domain");
            status = kExitDomainError;
        }
        io.out.flush();
    };
    if (!positional.empty()) {
        for (const auto& p : positional) handle(p);
    } else {
        for (std::string line; std::getline(io.in, line);) handle(line);
    }
    return status;
}

Json verdict_json(const std::string& record, const Verdict& v) {
    Json j;
    j["graph6"] = record;
    j["accepted"] = v.accepted;
    j["in_scope"] = v.in_scope;
    j["witness"] = v.witness ? Json(v.witness->to_string()) : Json(nullptr);
    j["reject_reason"] = v.reject_reason ? Json(v.reason_text()) : Json(nullptr);
    if (v.lambda2) {
        j["lambda2"] = round12(*v.lambda2);
        j["agreement"] = *v.agreement;
        j["boundary_suspect"] = v.boundary_suspect;
    }
    return j;
}

std::string verdict_text(const std::string& record, const Verdict& v) {
    std::string line = record + (v.accepted ? " accepted " + v.witness->to_string() : " rejected " + v.reason_text());
    if (!v.in_scope) line += " out_of_scope";
    if (v.lambda2) {
        line += " lambda2=" + fixed12(*v.lambda2) + " agreement=" + (*v.agreement ? "true" : "false");
        if (v.boundary_suspect) line += " boundary_suspect";
    }
    return line;
}

std::pair<int, int> parse_range(const std::string& text) {
    static const std::regex pattern(R"((\d+)\.\.(\d+))");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) throw UsageError("range must look like A..B, got '" + text + "'");
    const int a = std::stoi(m[1]);
    const int b = std::stoi(m[2]);
    if (a < 1 || a > b) throw UsageError("range needs 1 <= A <= B, got '" + text + "'");
    return {a, b};
}

bool polynomial_identity_holds(const std::string& family, int k) {
    if (family == "t3") {
        const auto q = quotient_matrix(distance_matrix(t3_graph(k)), t3_partition(k));
        const Polynomial expected({1, -(2 * k + 6), -(9 * k + 31), -(10 * k + 36), -(3 * k + 12)});
        return q.equitable && char_poly(q) == expected;
    }
    const auto q = quotient_matrix(distance_matrix(t4_graph(k)), t4_partition(k));
    const Polynomial expected({1, -(2 * k + 1), -(15 * k + 35), -(35 * k + 91), -(26 * k + 76), -(6 * k + 20)});
    return q.equitable && char_poly(q) == expected;
}

std::string report_line(const VerificationReport& r) {
    std::uint64_t oos_positive = 0;
    for (const auto& e : r.out_of_scope) oos_positive += e.spectral_positive ? 1 : 0;
    char time[32];
    std::snprintf(time, sizeof time, "%.2fs", r.runtime_seconds);
    std::string line = "n=" + std::to_string(r.n) + " classes=" + std::to_string(r.total_graphs) +
                       " accepted=" + std::to_string(r.accepted) +
                       " spectral_positive=" + std::to_string(r.spectral_positive) +
                       " disagreements=" + std::to_string(r.disagreements.size());
    if (r.kind == "tricyclic") {
        line += " out_of_scope=" + std::to_string(r.out_of_scope.size()) + " (" + std::to_string(oos_positive) +
                " spectral_positive)";
    }
    line += " boundary_suspects=" + std::to_string(r.boundary_suspects.size()) +
            " chordality_violations=" + std::to_string(r.chordality_violations.size()) + " time=" + time;
    return line;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Distance spectra and the lambda_2 < -1/2 characterization of tricyclic graphs", "tricyclic"};
    app.require_subcommand(1);

    bool json = false;
    bool verify = false;
    bool allow_large = false;
    bool block_graphs = false;
    std::vector<std::string> graphs;
    std::vector<std::string> spec_tokens;
    std::string format = "graph6";
    std::string range;
    std::string family;
    std::string corpus;
    std::optional<double> tol;
    int order = 0;
    std::optional<int> edges;
    int min_degree = 0;
    int threads = 1;
    int max_n = 0;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "Emit one JSON document per result"); };
    auto add_graphs = [&](CLI::App* sub) {
        sub->add_option("graphs", graphs, "graph6 records (default: read stdin, one per line)");
    };

    auto* spectrum = app.add_subcommand("spectrum", "Distance spectrum, descending");
    add_graphs(spectrum);
    add_json(spectrum);

    auto* classify = app.add_subcommand("classify", "Decide lambda_2 < -1/2 for tricyclic graphs by family membership");
    add_graphs(classify);
    add_json(classify);
    classify->add_flag("--verify", verify, "Also compute lambda_2 and report agreement");
    classify->add_option("--tol", tol, "Spectral tolerance (default 1e-9 or $TRICYCLIC_TOL)")->check(CLI::PositiveNumber);

    auto* generate_cmd = app.add_subcommand("generate", "Generate a named graph: t-general s t h1 h2 h3 h4 h5 | t1 s t | "
                                                        "t2 p q | t3 k | t4 t | t5 | t6 | t7 | f i | bg p q | bga");
    generate_cmd->add_option("spec", spec_tokens, "Family name followed by its parameters")->required();
    generate_cmd->add_option("--format", format, "graph6 or dot")->check(CLI::IsMember({"graph6", "dot"}));
    add_json(generate_cmd);

    auto* scan = app.add_subcommand("scan-forbidden", "Distance-preserving forbidden subgraphs F_1..F_13");
    add_graphs(scan);
    add_json(scan);

    auto* base = app.add_subcommand("base", "Base of a tricyclic graph and its template label");
    add_graphs(base);
    add_json(base);

    auto* block = app.add_subcommand("blockgraph", "Block-graph predicates and the lambda_2 < -1/2 decision");
    add_graphs(block);
    add_json(block);
    block->add_flag("--verify", verify, "Also compute lambda_2 and report agreement");
    block->add_option("--tol", tol, "Spectral tolerance")->check(CLI::PositiveNumber);

    auto* enumerate = app.add_subcommand("enumerate", "Connected graphs up to isomorphism (canonical graph6)");
    enumerate->add_option("-n,--order", order, "Vertex count")->required();
    enumerate->add_option("-m,--edges", edges, "Edge count filter");
    enumerate->add_option("--min-degree", min_degree, "Minimum degree filter");
    enumerate->add_flag("--allow-large", allow_large, "Lift the candidate-count guard");
    enumerate->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    add_json(enumerate);

    auto* check = app.add_subcommand("check-theorem", "Exhaustive comparison of the structural decision with lambda_2");
    check->add_option("--max-n", max_n, "Largest vertex count")->required();
    check->add_flag("--block-graphs", block_graphs, "Check connected block graphs instead of tricyclic graphs");
    check->add_flag("--allow-large", allow_large, "Lift the candidate-count guard");
    check->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    check->add_option("--tol", tol, "Spectral tolerance")->check(CLI::PositiveNumber);
    check->add_option("--corpus", corpus, "Write every enumerated canonical graph6 to this file");
    add_json(check);

    auto* poly = app.add_subcommand("polycheck", "Exact quotient characteristic polynomial identities");
    poly->add_option("family", family, "t3 or t4")->required()->check(CLI::IsMember({"t3", "t4"}));
    poly->add_option("--range", range, "Parameter range A..B")->required();
    add_json(poly);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        const std::string message = e.what();
        if (json) {
            out << Json{{"error", message}, {"kind", "usage"}}.dump() << '\n';
        } else {
            err << "error: " << message << "\nRun with --help for usage.\n";
        }
        return kExitUsage;
    }

    const Io io{in, out, err, json};
    try {
        const double tolerance = tol ? *tol : default_tolerance();

        if (spectrum->parsed()) {
            return for_each_graph(graphs, io, [&](const std::string& record, const Graph& g) {
                const auto s = distance_spectrum(g);
                if (json) {
                    Json values = Json::array();
                    for (double x : s.values) values.push_back(round12(x));
                    out << Json{{"graph6", record},
                                {"spectrum", values},
                                {"lambda2", g.n() >= 2 ? Json(round12(s[1])) : Json(nullptr)}}
                               .dump()
                        << '\n';
                } else {
                    out << format_spectrum_text(s) << '\n';
                }
            });
        }

        if (classify->parsed()) {
            return for_each_graph(graphs, io, [&](const std::string& record, const Graph& g) {
                const Verdict v = verify ? verify_against_spectrum(g, tolerance) : classify_tricyclic(g);
                out << (json ? verdict_json(record, v).dump() : verdict_text(record, v)) << '\n';
            });
        }

        if (generate_cmd->parsed()) {
            const FamilySpec spec = FamilySpec::parse(spec_tokens);
            const Graph g = generate(spec);
            if (json) {
                out << Json{{"spec", spec.to_string()}, {"graph6", write_graph6(g)}, {"n", g.n()}, {"m", g.m()}}.dump()
                    << '\n';
            } else if (format == "dot") {
                out << write_dot(g);
            } else {
                out << write_graph6(g) << '\n';
            }
            return kExitOk;
        }

        if (scan->parsed()) {
            return for_each_graph(graphs, io, [&](const std::string& record, const Graph& g) {
                const auto hits = scan_forbidden(g);
                if (json) {
                    Json list = Json::array();
                    for (const auto& h : hits) {
                        list.push_back({{"pattern", "F_" + std::to_string(h.index)}, {"subset", h.witness.subset}});
                    }
                    out << list.dump() << '\n';
                    return;
                }
                std::string line = record;
                if (hits.empty()) line += " none";
                for (const auto& h : hits) {
                    line += " F_" + std::to_string(h.index) + "[";
                    for (std::size_t i = 0; i < h.witness.subset.size(); ++i) {
                        line += (i ? "," : "") + std::to_string(h.witness.subset[i]);
                    }
                    line += "]";
                }
                out << line << '\n';
            });
        }

        if (base->parsed()) {
            return for_each_graph(graphs, io, [&](const std::string& record, const Graph& g) {
                const auto vertices = base_vertices(g);
                const Graph b = g.induced(vertices);
                const BaseType type = base_type(b);
                if (json) {
                    Json params = Json::object();
                    for (const auto& [name, value] : type.params) params[name] = value;
                    out << Json{{"graph6", record},
                                {"base", write_graph6(b)},
                                {"base_vertices", vertices},
                                {"label", type.label},
                                {"params", params}}
                               .dump()
                        << '\n';
                    return;
                }
                std::string line = record + " base=" + write_graph6(b) + " " + type.label;
                for (const auto& [name, value] : type.params) line += " " + name + "=" + std::to_string(value);
                out << line << '\n';
            });
        }

        if (block->parsed()) {
            return for_each_graph(graphs, io, [&](const std::string& record, const Graph& g) {
                const bool below = blockgraph_lambda2_below(g);
                const bool star = is_block_star(g);
                const bool loose = is_loose_block_graph(g);
                const bool bg = embeds_as_induced(g, BlockTarget::BG);
                const bool bga = embeds_as_induced(g, BlockTarget::BGA);
                std::optional<double> l2;
                if (verify) l2 = lambda2(g);
                if (json) {
                    Json j{{"graph6", record}, {"block_star", star},  {"loose", loose},
                           {"embeds_bg", bg},  {"embeds_bga", bga}, {"lambda2_below", below}};
                    if (l2) {
                        j["lambda2"] = round12(*l2);
                        j["agreement"] = below == (*l2 < -0.5 - tolerance);
                    }
                    out << j.dump() << '\n';
                    return;
                }
                auto flag = [](bool b) { return b ? "true" : "false"; };
                std::string line = record + " block_star=" + flag(star) + " loose=" + flag(loose) + " bg=" + flag(bg) +
                                   " bga=" + flag(bga) + " lambda2_below=" + flag(below);
                if (l2) line += " lambda2=" + fixed12(*l2) + " agreement=" + flag(below == (*l2 < -0.5 - tolerance));
                out << line << '\n';
            });
        }

        if (enumerate->parsed()) {
            EnumerationJob job{order, edges, min_degree, allow_large, threads};
            const auto forms = enumerate_canonical_forms(job);
            if (json) {
                out << Json{{"n", order},
                            {"m", edges ? Json(*edges) : Json(nullptr)},
                            {"count", forms.size()},
                            {"graphs", forms}}
                           .dump()
                    << '\n';
            } else {
                for (const auto& f : forms) out << f << '\n';
            }
            return kExitOk;
        }

        if (check->parsed()) {
            CheckOptions options;
            options.tol = tolerance;
            options.allow_large = allow_large;
            options.threads = threads;
            std::ofstream corpus_file;
            if (!corpus.empty()) {
                corpus_file.open(corpus);
                if (!corpus_file) throw UsageError("cannot open corpus file '" + corpus + "'");
                options.on_graph = [&](const std::string& form) { corpus_file << form << '\n'; };
            }
            std::vector<VerificationReport> reports;
            if (block_graphs) {
                reports.push_back(blockgraph_check(max_n, options));
            } else {
                if (max_n > kMaxEnumerationOrder) {
                    throw ParameterError("--max-n must be at most " + std::to_string(kMaxEnumerationOrder));
                }
                for (int n = 4; n <= max_n; ++n) {
                    reports.push_back(theorem_check_n(n, options));
                    if (!json) out << report_line(reports.back()) << std::endl;
                }
            }
            const bool confirmed =
                std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.confirmed(); });
            if (json) {
                Json list = Json::array();
                for (const auto& r : reports) list.push_back(Json::parse(r.to_json()));
                out << Json{{"kind", block_graphs ? "block" : "tricyclic"},
                            {"max_n", max_n},
                            {"tolerance", tolerance},
                            {"reports", list},
                            {"confirmed", confirmed}}
                           .dump()
                    << '\n';
            } else {
                if (block_graphs) out << report_line(reports.front()) << '\n';
                out << (confirmed ? "confirmed: " : "DISAGREEMENTS FOUND: ") << "max_n=" << max_n << '\n';
                for (const auto& r : reports) {
                    for (const auto& d : r.disagreements) out << "disagreement " << d << '\n';
                }
            }
            return confirmed ? kExitOk : kExitVerificationFailed;
        }

        if (poly->parsed()) {
            const auto [a, b] = parse_range(range);
            std::vector<int> failures;
            for (int k = a; k <= b; ++k) {
                if (!polynomial_identity_holds(family, k)) failures.push_back(k);
            }
            const int total = b - a + 1;
            const int holding = total - static_cast<int>(failures.size());
            if (json) {
                out << Json{{"family", family},
                            {"from", a},
                            {"to", b},
                            {"checked", total},
                            {"holding", holding},
                            {"failures", failures}}
                           .dump()
                    << '\n';
            } else {
                out << holding << "/" << total << " coefficient identities hold\n";
            }
            return failures.empty() ? kExitOk : kExitVerificationFailed;
        }
    } catch (const UsageError& e) {
        io.error(e.what(), "usage");
        return kExitUsage;
    } catch (const Error& e) {
        io.error(e.what(), "domain");
        return kExitDomainError;
    } catch (const ContractViolation& e) {
        io.error(e.what(), "internal");
        return kExitDomainError;
    }
    return kExitUsage;
}

} // namespace tricyclic
