#include "tricyclic/families.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>

#include "tricyclic/error.hpp"
#include "tricyclic/structure.hpp"
#include "tricyclic/subgraph.hpp"

namespace tricyclic {

namespace {

struct FamilyInfo {
    Family family;
    std::string_view name;
    int arity;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::TGeneral, "t-general", 7}, {Family::T3, "t3", 1}, {Family::T4, "t4", 1}, {Family::T5, "t5", 0},
    {Family::T6, "t6", 0},              {Family::T7, "t7", 0}, {Family::T1, "t1", 2}, {Family::T2, "t2", 2},
    {Family::F, "f", 1},                {Family::BG, "bg", 2}, {Family::BGA, "bga", 0},
};

const FamilyInfo& info(Family f) {
    for (const auto& fi : kFamilies) {
        if (fi.family == f) return fi;
    }
    throw ContractViolation("unknown family enumerator");
}

// Drawings use arbitrary vertex ids; compress them to 0..n-1 in sorted order.
Graph from_table(std::initializer_list<Edge> table) {
    std::vector<int> ids;
    for (const auto& [u, v] : table) {
        ids.push_back(u);
        ids.push_back(v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    auto index = [&](int x) { return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), x) - ids.begin()); };
    std::vector<Edge> edges;
    for (const auto& [u, v] : table) edges.emplace_back(index(u), index(v));
    return Graph(static_cast<int>(ids.size()), edges);
}

std::vector<Graph> build_forbidden() {
    return {
        from_table({{1, 2}, {2, 3}, {1, 4}, {1, 6}, {1, 5}}),
        from_table({{1, 2}, {2, 3}, {1, 4}, {1, 5}, {2, 6}}),
        from_table({{1, 6}, {1, 2}, {1, 3}, {2, 4}, {3, 5}}),
        from_table({{0, 1}, {1, 3}, {3, 5}, {0, 2}, {2, 6}, {2, 4}}),
        from_table({{0, 1}, {1, 3}, {1, 2}, {0, 4}, {0, 5}, {4, 5}}),
        from_table({{0, 1}, {0, 2}, {0, 3}, {0, 4}, {3, 5}, {4, 6}, {3, 4}}),
        from_table({{0, 1}, {0, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 5}, {4, 6}}),
        from_table({{0, 1}, {0, 2}, {0, 5}, {0, 6}, {1, 3}, {1, 4}, {1, 2}, {5, 6}}),
        from_table({{1, 5}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}),
        from_table({{1, 2}, {1, 5}, {1, 4}, {1, 6}, {2, 3}, {4, 6}, {5, 6}}),
        from_table({{1, 2}, {1, 3}, {1, 5}, {1, 4}, {2, 5}, {4, 5}, {4, 3}}),
        from_table({{1, 2}, {1, 3}, {1, 5}, {1, 4}, {2, 4}, {4, 5}, {4, 3}}),
        from_table({{1, 2}, {1, 3}, {1, 5}, {1, 4}, {2, 4}, {4, 5}, {4, 3}, {2, 6}, {3, 6}, {2, 3}}),
    };
}

constexpr double kForbiddenReference[kForbiddenCount] = {
    -0.4727, -0.4384, -0.4754, -0.4943, -0.4931, -0.4917, -0.4934,
    -0.4931, -0.4521, -0.4807, -0.3820, -0.3723, -0.2679,
};

int parse_int(const std::string& token) {
    int value = 0;
    const char* first = token.data();
    const char* last = first + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) throw ParameterError("expected an integer parameter, got '" + token + "'");
    return value;
}

void triangle(GraphBuilder& b, int x, int y, int z) {
    b.add_edge(x, y);
    b.add_edge(y, z);
    b.add_edge(x, z);
}

Graph pendants_at_zero(GraphBuilder b, int count) {
    for (int i = 0; i < count; ++i) b.add_edge(0, b.add_vertex());
    return b.build();
}

// Compositions of total into `parts` nonnegative parts, lexicographic order.
void compositions(int total, int parts, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> current(static_cast<std::size_t>(parts), 0);
    std::function<void(int, int)> rec = [&](int index, int left) {
        if (index == parts - 1) {
            current[index] = left;
            visit(current);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            current[index] = x;
            rec(index + 1, left - x);
        }
    };
    if (parts == 0) {
        if (total == 0) visit(current);
        return;
    }
    rec(0, total);
}

std::vector<int> sorted_degrees(const Graph& g) {
    auto d = g.degrees();
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<FamilySpec> theorem_specs(int n, bool with_general) {
    std::vector<FamilySpec> specs;
    if (n >= 7) {
        if (with_general) {
            compositions(n - 7, 7, [&](const std::vector<int>& p) { specs.push_back({Family::TGeneral, p}); });
        }
        specs.push_back({Family::T3, {n - 7}});
    }
    if (n >= 6) specs.push_back({Family::T4, {n - 6}});
    if (n == 9) specs.push_back({Family::T5, {}});
    if (n == 8) specs.push_back({Family::T6, {}});
    if (n == 7) specs.push_back({Family::T7, {}});
    return specs;
}

} // namespace

std::string FamilySpec::name() const { return std::string(info(family).name); }

std::string FamilySpec::to_string() const {
    std::string out = name();
    for (int p : params) out += " " + std::to_string(p);
    return out;
}

FamilySpec FamilySpec::parse(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::vector<std::string> tokens;
    for (std::string tok; is >> tok;) tokens.push_back(tok);
    return parse(tokens);
}

FamilySpec FamilySpec::parse(const std::vector<std::string>& tokens) {
    if (tokens.empty()) throw ParameterError("missing family name");
    for (const auto& fi : kFamilies) {
        if (tokens[0] != fi.name) continue;
        if (static_cast<int>(tokens.size()) - 1 != fi.arity) {
            throw ParameterError("family '" + tokens[0] + "' takes " + std::to_string(fi.arity) + " parameter(s), got " +
                                 std::to_string(tokens.size() - 1));
        }
        FamilySpec spec{fi.family, {}};
        for (std::size_t i = 1; i < tokens.size(); ++i) spec.params.push_back(parse_int(tokens[i]));
        spec.validate();
        return spec;
    }
    throw ParameterError("unknown family '" + tokens[0] +
                         "' (expected t-general, t1, t2, t3, t4, t5, t6, t7, f, bg or bga)");
}

void FamilySpec::validate() const {
    const auto& fi = info(family);
    if (static_cast<int>(params.size()) != fi.arity) {
        throw ParameterError(std::string(fi.name) + " takes " + std::to_string(fi.arity) + " parameter(s)");
    }
    switch (family) {
    case Family::F:
        if (params[0] < 1 || params[0] > kForbiddenCount) {
            throw ParameterError("forbidden graph index must be in 1..13, got " + std::to_string(params[0]));
        }
        return;
    case Family::BG:
        if (params[0] < 2 || params[1] < 2) throw ParameterError("bg needs p, q >= 2");
        break;
    default:
        for (int p : params) {
            if (p < 0) throw ParameterError(to_string() + ": parameters must be nonnegative");
        }
    }
    long long total = 0;
    for (int p : params) total += p;
    if (total > kMaxVertices || vertex_count() > kMaxVertices) {
        throw ParameterError(to_string() + ": graph would exceed " + std::to_string(kMaxVertices) + " vertices");
    }
}

int FamilySpec::vertex_count() const {
    int sum = 0;
    for (int p : params) sum += p;
    switch (family) {
    case Family::TGeneral:
    case Family::T1:
    case Family::T2:
    case Family::T3:
        return 7 + sum;
    case Family::T4:
        return 6 + sum;
    case Family::T5:
        return 9;
    case Family::T6:
        return 8;
    case Family::T7:
        return 7;
    case Family::F:
        return forbidden_graph(params.at(0)).n();
    case Family::BG:
        return sum + 3;
    case Family::BGA:
        return 9;
    }
    return 0;
}

bool FamilySpec::in_theorem() const {
    switch (family) {
    case Family::TGeneral:
    case Family::T3:
    case Family::T4:
    case Family::T5:
    case Family::T6:
    case Family::T7:
        return true;
    default:
        return false;
    }
}

Graph t_general_graph(int s, int t, const std::array<int, 5>& h) {
    GraphBuilder b;
    const int u1 = b.add_vertex();
    const int u2 = b.add_vertex();
    const int u3 = b.add_vertex();
    triangle(b, u1, u2, u3);
    const int v1 = b.add_pendant_path(u3, s);
    const int v2 = b.add_vertex();
    const int v3 = b.add_vertex();
    triangle(b, v1, v2, v3);
    const int w1 = b.add_pendant_path(v3, t);
    const int w2 = b.add_vertex();
    const int w3 = b.add_vertex();
    triangle(b, w1, w2, w3);
    const int anchors[5] = {u1, u2, v2, w2, w3};
    for (int i = 0; i < 5; ++i) b.add_pendant_path(anchors[i], h[i]);
    return b.build();
}

Graph t1_graph(int s, int t) { return t_general_graph(s, t, {0, 0, 0, 0, 0}); }

Graph t2_graph(int p, int q) {
    GraphBuilder b;
    const int y1 = b.add_vertex();
    const int y2 = b.add_vertex();
    const int y3 = b.add_vertex();
    triangle(b, y1, y2, y3);
    const int x3 = b.add_pendant_path(y1, p);
    const int x1 = b.add_vertex();
    const int x2 = b.add_vertex();
    triangle(b, x1, x2, x3);
    const int z1 = b.add_pendant_path(y1, q);
    const int z2 = b.add_vertex();
    const int z3 = b.add_vertex();
    triangle(b, z1, z2, z3);
    return b.build();
}

Graph t3_graph(int k) {
    GraphBuilder b(7);
    triangle(b, 0, 1, 2);
    triangle(b, 0, 3, 4);
    triangle(b, 0, 5, 6);
    return pendants_at_zero(std::move(b), k);
}

Graph t4_graph(int t) {
    GraphBuilder b(6);
    triangle(b, 0, 1, 2);
    triangle(b, 0, 3, 4);
    triangle(b, 0, 4, 5);
    return pendants_at_zero(std::move(b), t);
}

Graph t5_graph() {
    return from_table({{1, 2}, {1, 5}, {2, 4}, {2, 3}, {3, 4}, {1, 8}, {5, 8}, {5, 9}, {5, 6}, {5, 7}, {6, 7}});
}

Graph t6_graph() {
    return from_table({{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {2, 3}, {5, 6}, {5, 8}, {4, 5}});
}

Graph t7_graph() {
    return from_table({{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {5, 6}, {5, 8}, {4, 5}});
}

Graph bg_graph(int p, int q) {
    if (p < 2 || q < 2) throw ParameterError("bg needs p, q >= 2");
    GraphBuilder b(p + q);
    std::vector<int> left;
    std::vector<int> right;
    for (int i = 0; i < p; ++i) left.push_back(i);
    for (int i = 0; i < q; ++i) right.push_back(p + i);
    b.add_clique(left);
    b.add_clique(right);
    b.add_edge(p - 1, p);
    const int a = b.add_vertex();
    const int c = b.add_vertex();
    triangle(b, 0, a, c);
    b.add_edge(0, b.add_vertex());
    return b.build();
}

Graph bga_graph() {
    return from_table({{1, 2}, {1, 3}, {3, 7}, {3, 8}, {3, 4}, {2, 6}, {2, 9}, {2, 5}, {9, 6}, {7, 8}});
}

const Graph& forbidden_graph(int i) {
    static const std::vector<Graph> graphs = build_forbidden();
    if (i < 1 || i > kForbiddenCount) throw ParameterError("forbidden graph index must be in 1..13");
    return graphs[static_cast<std::size_t>(i - 1)];
}

double forbidden_reference_lambda2(int i) {
    if (i < 1 || i > kForbiddenCount) throw ParameterError("forbidden graph index must be in 1..13");
    return kForbiddenReference[i - 1];
}

Graph generate(const FamilySpec& spec) {
    spec.validate();
    const auto& p = spec.params;
    switch (spec.family) {
    case Family::TGeneral:
        return t_general_graph(p[0], p[1], {p[2], p[3], p[4], p[5], p[6]});
    case Family::T1:
        return t1_graph(p[0], p[1]);
    case Family::T2:
        return t2_graph(p[0], p[1]);
    case Family::T3:
        return t3_graph(p[0]);
    case Family::T4:
        return t4_graph(p[0]);
    case Family::T5:
        return t5_graph();
    case Family::T6:
        return t6_graph();
    case Family::T7:
        return t7_graph();
    case Family::F:
        return forbidden_graph(p[0]);
    case Family::BG:
        return bg_graph(p[0], p[1]);
    case Family::BGA:
        return bga_graph();
    }
    throw ContractViolation("unknown family enumerator");
}

Partition t3_partition(int k) {
    if (k < 0) throw ParameterError("t3 needs k >= 0");
    std::vector<std::vector<int>> cells = {{0}, {1, 3, 5}, {2, 4, 6}};
    if (k > 0) {
        std::vector<int> pendants;
        for (int i = 0; i < k; ++i) pendants.push_back(7 + i);
        cells.push_back(std::move(pendants));
    }
    return Partition(std::move(cells));
}

Partition t4_partition(int t) {
    if (t < 0) throw ParameterError("t4 needs t >= 0");
    std::vector<std::vector<int>> cells = {{0}, {1, 2}, {3, 5}, {4}};
    if (t > 0) {
        std::vector<int> pendants;
        for (int i = 0; i < t; ++i) pendants.push_back(6 + i);
        cells.push_back(std::move(pendants));
    }
    return Partition(std::move(cells));
}

namespace {

struct MemberScan {
    std::vector<std::pair<FamilySpec, Graph>> members;
    std::vector<std::pair<FamilySpec, FamilySpec>> overlaps;
};

MemberScan scan_members(int n) {
    MemberScan out;
    std::map<std::string, std::size_t> seen;
    for (auto& spec : theorem_specs(n, true)) {
        Graph g = generate(spec);
        auto form = canonical_form(g);
        auto [it, fresh] = seen.emplace(std::move(form), out.members.size());
        if (fresh) {
            out.members.emplace_back(std::move(spec), std::move(g));
        } else if (out.members[it->second].first.family != spec.family) {
            out.overlaps.emplace_back(out.members[it->second].first, spec);
        }
    }
    return out;
}

} // namespace

std::vector<std::pair<FamilySpec, Graph>> enumerate_family_members(int n) {
    if (n > kMaxVertices) throw ParameterError("n exceeds " + std::to_string(kMaxVertices));
    return scan_members(n).members;
}

std::vector<std::pair<FamilySpec, FamilySpec>> family_overlaps(int n) {
    if (n > kMaxVertices) throw ParameterError("n exceeds " + std::to_string(kMaxVertices));
    return scan_members(n).overlaps;
}

std::optional<FamilySpec> match_family(const Graph& g) {
    const int n = g.n();
    if (n < 6 || !g.connected() || g.m() != n + 2) return std::nullopt;
    const auto degrees = sorted_degrees(g);
    std::string form;
    auto matches = [&](const FamilySpec& spec) {
        const Graph candidate = generate(spec);
        if (sorted_degrees(candidate) != degrees) return false;
        if (form.empty()) form = canonical_form(g);
        return canonical_form(candidate) == form;
    };

    const auto core = base_vertices(g);
    const int nb = static_cast<int>(core.size());
    if (nb >= 7) {
        const Graph base = g.induced(core);
        for (int s = 0; s <= nb - 7; ++s) {
            const int t = nb - 7 - s;
            if (!is_isomorphic(base, t1_graph(s, t))) continue;
            std::optional<FamilySpec> found;
            compositions(n - nb, 5, [&](const std::vector<int>& h) {
                if (found) return;
                FamilySpec spec{Family::TGeneral, {s, t, h[0], h[1], h[2], h[3], h[4]}};
                if (matches(spec)) found = spec;
            });
            if (found) return found;
        }
    }
    for (auto& spec : theorem_specs(n, false)) {
        if (matches(spec)) return spec;
    }
    return std::nullopt;
}

} // namespace tricyclic
