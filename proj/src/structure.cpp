#include "tricyclic/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "tricyclic/error.hpp"
#include "tricyclic/families.hpp"
#include "tricyclic/subgraph.hpp"

namespace tricyclic {

std::vector<int> lex_bfs_order(const Graph& g) {
    const int n = g.n();
    std::vector<std::vector<int>> label(static_cast<std::size_t>(n));
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (!visited[v] && (pick < 0 || label[v] > label[pick])) pick = v;
        }
        visited[pick] = true;
        order.push_back(pick);
        for (int w = 0; w < n; ++w) {
            if (!visited[w] && g.adjacent(pick, w)) label[w].push_back(n - i);
        }
    }
    return order;
}

bool is_chordal(const Graph& g) {
    const auto order = lex_bfs_order(g);
    const int n = g.n();
    std::vector<int> position(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) position[order[i]] = i;
    // In the reversed order each vertex's neighbours visited before it must
    // form a clique.
    for (int v = 0; v < n; ++v) {
        std::vector<int> earlier;
        for (int u : g.neighbor_list(v)) {
            if (position[u] < position[v]) earlier.push_back(u);
        }
        for (std::size_t i = 0; i < earlier.size(); ++i) {
            for (std::size_t j = i + 1; j < earlier.size(); ++j) {
                if (!g.adjacent(earlier[i], earlier[j])) return false;
            }
        }
    }
    return true;
}

BlockDecomposition block_decomposition(const Graph& g) {
    const int n = g.n();
    BlockDecomposition out;
    out.membership.assign(static_cast<std::size_t>(n), {});
    if (n == 0) return out;

    std::vector<int> disc(static_cast<std::size_t>(n), 0);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<Edge> stack;
    int time = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = ++time;
        for (int v : g.neighbor_list(u)) {
            if (disc[v] == 0) {
                stack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    std::vector<int> block;
                    for (;;) {
                        const Edge e = stack.back();
                        stack.pop_back();
                        block.push_back(e.first);
                        block.push_back(e.second);
                        if (e == Edge{u, v}) break;
                    }
                    std::sort(block.begin(), block.end());
                    block.erase(std::unique(block.begin(), block.end()), block.end());
                    out.blocks.push_back(std::move(block));
                }
            } else if (v != parent && disc[v] < disc[u]) {
                stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        if (disc[s] != 0) continue;
        if (g.degree(s) == 0) {
            disc[s] = ++time;
            out.blocks.push_back({s});
            continue;
        }
        dfs(s, -1);
    }

    std::sort(out.blocks.begin(), out.blocks.end());
    for (std::size_t b = 0; b < out.blocks.size(); ++b) {
        for (int v : out.blocks[b]) out.membership[v].push_back(static_cast<int>(b));
    }
    for (int v = 0; v < n; ++v) {
        if (out.membership[v].size() >= 2) out.cut_vertices.push_back(v);
    }
    return out;
}

std::vector<int> core_vertices(const Graph& g) {
    const int n = g.n();
    std::vector<int> degree = g.degrees();
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v) {
        if (degree[v] == 1) queue.push_back(v);
    }
    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        if (removed[v] || degree[v] != 1) continue;
        removed[v] = true;
        for (int u : g.neighbor_list(v)) {
            if (!removed[u] && --degree[u] == 1) queue.push_back(u);
        }
        degree[v] = 0;
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
        if (!removed[v]) out.push_back(v);
    }
    return out;
}

std::vector<int> base_vertices(const Graph& g) {
    const int c = cyclomatic_number(g);
    if (c != 3) {
        throw DomainError("base is defined for tricyclic graphs; cyclomatic number is " + std::to_string(c));
    }
    return core_vertices(g);
}

Graph base_of(const Graph& g) { return g.induced(base_vertices(g)); }

namespace {

// Kernel multigraph whose edges become paths (u != v) or cycles through u
// (u == v). Parallel paths between the same pair may include at most one
// edge of length 1.
struct KernelEdge {
    int u;
    int v;
    const char* name;
};

struct Template {
    std::string label;
    int kernel;
    std::vector<KernelEdge> edges;
};

const std::vector<Template>& templates() {
    static const std::vector<Template> list = {
        {"G7_1", 4, {{0, 1, "l01"}, {0, 2, "l02"}, {0, 3, "l03"}, {1, 2, "l12"}, {1, 3, "l13"}, {2, 3, "l23"}}},
        {"G6_1", 2, {{0, 1, "l1"}, {0, 1, "l2"}, {0, 1, "l3"}, {0, 1, "l4"}}},
        {"G6_2", 3, {{0, 2, "l1"}, {0, 2, "l2"}, {1, 2, "l3"}, {1, 2, "l4"}, {0, 1, "l5"}}},
        {"G6_3", 4, {{0, 1, "l1"}, {0, 1, "l2"}, {2, 3, "l3"}, {2, 3, "l4"}, {0, 2, "l5"}, {1, 3, "l6"}}},
        {"G4_1", 3, {{0, 2, "l1a"}, {2, 1, "l1b"}, {0, 1, "l2"}, {0, 1, "l3"}, {2, 2, "c"}}},
        {"G4_2", 2, {{0, 1, "l1"}, {0, 1, "l2"}, {0, 1, "l3"}, {0, 0, "c"}}},
        {"G4_3", 4, {{0, 2, "l1a"}, {2, 1, "l1b"}, {0, 1, "l2"}, {0, 1, "l3"}, {2, 3, "p"}, {3, 3, "c"}}},
        {"G4_4", 3, {{0, 1, "l1"}, {0, 1, "l2"}, {0, 1, "l3"}, {0, 2, "p"}, {2, 2, "c"}}},
        {"G3_1", 2, {{0, 0, "a"}, {0, 1, "d1"}, {0, 1, "d2"}, {1, 1, "c"}}},
        {"G3_2", 3, {{0, 0, "a"}, {0, 1, "d1"}, {0, 1, "d2"}, {1, 2, "p"}, {2, 2, "c"}}},
        {"G3_3", 4, {{0, 0, "a"}, {0, 1, "p"}, {1, 2, "d1"}, {1, 2, "d2"}, {2, 3, "q"}, {3, 3, "c"}}},
        {"G3_4", 1, {{0, 0, "a"}, {0, 0, "b"}, {0, 0, "c"}}},
        {"G3_5", 2, {{0, 0, "a"}, {0, 0, "b"}, {0, 1, "p"}, {1, 1, "c"}}},
        {"G3_6", 4, {{0, 1, "p"}, {0, 2, "q"}, {0, 3, "r"}, {1, 1, "a"}, {2, 2, "b"}, {3, 3, "c"}}},
        {"G3_7", 3, {{0, 0, "a"}, {0, 1, "p"}, {0, 2, "q"}, {1, 1, "b"}, {2, 2, "c"}}},
    };
    return list;
}

const Template& find_template(const std::string& label) {
    for (const auto& t : templates()) {
        if (t.label == label) return t;
    }
    throw ParameterError("unknown base template '" + label + "'");
}

bool lengths_valid(const Template& t, const std::vector<int>& len) {
    std::map<std::pair<int, int>, int> unit_edges;
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        const auto& e = t.edges[i];
        if (e.u == e.v) {
            if (len[i] < 3) return false;
        } else {
            if (len[i] < 1) return false;
            if (len[i] == 1 && ++unit_edges[std::minmax(e.u, e.v)] > 1) return false;
        }
    }
    return true;
}

Graph build(const Template& t, const std::vector<int>& len) {
    GraphBuilder b(t.kernel);
    for (std::size_t i = 0; i < t.edges.size(); ++i) b.add_path_between(t.edges[i].u, t.edges[i].v, len[i]);
    return b.build();
}

std::vector<int> kernel_degrees(const Template& t) {
    std::vector<int> deg(static_cast<std::size_t>(t.kernel), 0);
    for (const auto& e : t.edges) {
        deg[e.u] += 1;
        deg[e.v] += 1;
    }
    std::sort(deg.begin(), deg.end());
    return deg;
}

// Calls visit on every valid length vector whose instantiation has n
// vertices; stops early when visit returns true.
bool for_each_instance(const Template& t, int n, const std::function<bool(const std::vector<int>&)>& visit) {
    const std::size_t count = t.edges.size();
    int extra = n - t.kernel;
    std::vector<int> minimum(count);
    for (std::size_t i = 0; i < count; ++i) {
        minimum[i] = t.edges[i].u == t.edges[i].v ? 2 : 0;
        extra -= minimum[i];
    }
    if (extra < 0) return false;
    std::vector<int> len(count);
    std::function<bool(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == count) {
            len[i] = minimum[i] + left + 1;
            return lengths_valid(t, len) && visit(len);
        }
        for (int x = 0; x <= left; ++x) {
            len[i] = minimum[i] + x + 1;
            if (rec(i + 1, left - x)) return true;
        }
        return false;
    };
    return rec(0, extra);
}

void require_base(const Graph& g) {
    const int c = cyclomatic_number(g);
    if (c != 3) throw DomainError("base typing needs a tricyclic graph; cyclomatic number is " + std::to_string(c));
    if (g.min_degree() < 2) throw DomainError("base typing needs minimum degree >= 2; strip pendant trees first");
}

std::optional<std::vector<int>> match_template(const Template& t, const Graph& g, const std::string& form,
                                               const std::vector<int>& branch_degrees) {
    if (kernel_degrees(t) != branch_degrees) return std::nullopt;
    std::optional<std::vector<int>> found;
    for_each_instance(t, g.n(), [&](const std::vector<int>& len) {
        if (canonical_form(build(t, len)) != form) return false;
        found = len;
        return true;
    });
    return found;
}

std::vector<int> branch_degrees(const Graph& g) {
    std::vector<int> out;
    for (int d : g.degrees()) {
        if (d >= 3) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

const std::vector<std::string>& base_labels() {
    static const std::vector<std::string> labels = [] {
        std::vector<std::string> out;
        for (const auto& t : templates()) out.push_back(t.label);
        return out;
    }();
    return labels;
}

Graph instantiate_base(const std::string& label, const std::vector<int>& params) {
    const auto& t = find_template(label);
    if (params.size() != t.edges.size()) {
        throw ParameterError(label + " takes " + std::to_string(t.edges.size()) + " parameters");
    }
    if (!lengths_valid(t, params)) throw ParameterError("invalid path or cycle lengths for " + label);
    long long total = t.kernel;
    for (std::size_t i = 0; i < params.size(); ++i) total += params[i] - 1;
    if (total > kMaxVertices) throw ParameterError(label + " instance would exceed " + std::to_string(kMaxVertices) + " vertices");
    return build(t, params);
}

BaseType base_type(const Graph& g) {
    require_base(g);
    const auto form = canonical_form(g);
    const auto degrees = branch_degrees(g);
    for (const auto& t : templates()) {
        if (auto len = match_template(t, g, form, degrees)) {
            BaseType out{t.label, {}};
            for (std::size_t i = 0; i < t.edges.size(); ++i) out.params.emplace_back(t.edges[i].name, (*len)[i]);
            return out;
        }
    }
    throw ClassificationError("no base template matches " + write_graph6(g));
}

std::vector<std::string> matching_base_labels(const Graph& g) {
    require_base(g);
    const auto form = canonical_form(g);
    const auto degrees = branch_degrees(g);
    std::vector<std::string> out;
    for (const auto& t : templates()) {
        if (match_template(t, g, form, degrees)) out.push_back(t.label);
    }
    return out;
}

bool is_block_graph(const Graph& g) {
    for (const auto& block : block_decomposition(g).blocks) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            for (std::size_t j = i + 1; j < block.size(); ++j) {
                if (!g.adjacent(block[i], block[j])) return false;
            }
        }
    }
    return true;
}

bool is_block_star(const Graph& g) {
    if (!is_block_graph(g)) return false;
    const auto bd = block_decomposition(g);
    for (int v = 0; v < g.n(); ++v) {
        if (bd.membership[v].size() == bd.blocks.size()) return true;
    }
    return false;
}

bool is_loose_block_graph(const Graph& g) {
    if (!is_block_graph(g)) return false;
    const auto bd = block_decomposition(g);
    return std::all_of(bd.membership.begin(), bd.membership.end(), [](const auto& m) { return m.size() <= 2; });
}

bool embeds_as_induced(const Graph& g, BlockTarget target) {
    if (g.n() < 2) throw DomainError("a nontrivial graph (n >= 2) is required");
    if (target == BlockTarget::BGA) return has_induced_subgraph(bga_graph(), g);
    const int size = std::max(2, g.n() + 1);
    return has_induced_subgraph(bg_graph(size, size), g);
}

bool blockgraph_lambda2_below(const Graph& g) {
    if (g.n() < 2) throw DomainError("a nontrivial graph (n >= 2) is required");
    require_connected(g);
    if (!is_block_graph(g)) throw DomainError("graph is not a block graph");
    return is_block_star(g) || is_loose_block_graph(g) || embeds_as_induced(g, BlockTarget::BG) ||
           embeds_as_induced(g, BlockTarget::BGA);
}

} // namespace tricyclic
