#include "tricyclic/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "tricyclic/error.hpp"

namespace tricyclic {

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n)) {
    if (n < 0 || n > kMaxVertices) {
        throw UnsupportedSizeError("graph order " + std::to_string(n) + " outside [0, " +
                                   std::to_string(kMaxVertices) + "]");
    }
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ParameterError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                 ") has an endpoint outside 0.." + std::to_string(n - 1));
        }
        if (u == v) throw ParameterError("loop at vertex " + std::to_string(u));
        if (!rows_[u].test(v)) {
            rows_[u].set(v);
            rows_[v].set(u);
            ++m_;
        }
    }
}

std::vector<int> Graph::neighbor_list(int v) const {
    std::vector<int> out;
    out.reserve(rows_[v].count());
    for (int u = 0; u < n_; ++u) {
        if (rows_[v].test(u)) out.push_back(u);
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if (rows_[u].test(v)) out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> out(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) out[v] = degree(v);
    return out;
}

int Graph::min_degree() const {
    int best = n_ == 0 ? 0 : n_;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

Graph Graph::induced(std::span<const int> vertices) const {
    const int k = static_cast<int>(vertices.size());
    std::vector<Edge> sub;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (adjacent(vertices[i], vertices[j])) sub.emplace_back(i, j);
        }
    }
    return Graph(k, sub);
}

Graph Graph::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) {
        throw ContractViolation("relabeling permutation has wrong length");
    }
    std::vector<Edge> moved;
    moved.reserve(static_cast<std::size_t>(m_));
    for (const auto& [u, v] : edges()) moved.emplace_back(perm[u], perm[v]);
    return Graph(n_, moved);
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    VertexSet seen;
    VertexSet frontier;
    seen.set(0);
    frontier.set(0);
    while (frontier.any()) {
        VertexSet next;
        for (int v = 0; v < n_; ++v) {
            if (frontier.test(v)) next |= rows_[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return static_cast<int>(seen.count()) == n_;
}

void GraphBuilder::add_clique(std::span<const int> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) add_edge(vertices[i], vertices[j]);
    }
}

int GraphBuilder::add_pendant_path(int anchor, int length) {
    int last = anchor;
    for (int i = 0; i < length; ++i) {
        const int next = add_vertex();
        add_edge(last, next);
        last = next;
    }
    return last;
}

void GraphBuilder::add_path_between(int u, int v, int length) {
    if (length < 1) throw ContractViolation("path between distinct vertices needs length >= 1");
    int last = u;
    for (int i = 1; i < length; ++i) {
        const int next = add_vertex();
        add_edge(last, next);
        last = next;
    }
    add_edge(last, v);
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    }
    return Graph(n, e);
}

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph(n, e);
}

Graph star_graph(int leaves) {
    std::vector<Edge> e;
    for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return Graph(leaves + 1, e);
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    std::queue<int> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop();
        for (int u = 0; u < g.n(); ++u) {
            if (g.adjacent(v, u) && dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push(u);
            }
        }
    }
    return dist;
}

DistanceMatrix distance_matrix(const Graph& g) {
    DistanceMatrix d(g.n());
    for (int s = 0; s < g.n(); ++s) {
        const auto row = bfs_distances(g, s);
        for (int t = 0; t < g.n(); ++t) {
            if (row[t] < 0) throw ConnectivityError(s, t);
            d(s, t) = row[t];
        }
    }
    return d;
}

void require_connected(const Graph& g) {
    if (g.connected()) return;
    const auto row = bfs_distances(g, 0);
    const auto it = std::find(row.begin(), row.end(), -1);
    throw ConnectivityError(0, static_cast<int>(it - row.begin()));
}

int cyclomatic_number(const Graph& g) {
    require_connected(g);
    return g.m() - g.n() + 1;
}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

bool printable(unsigned char c) { return c >= 63 && c <= 126; }

} // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    if (text.starts_with(kGraph6Header)) pos = kGraph6Header.size();
    if (pos >= text.size()) throw ParseError("empty graph6 record", pos);

    auto byte_at = [&](std::size_t i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (!printable(c)) throw ParseError("non-printable graph6 byte", i);
        return static_cast<int>(c) - 63;
    };

    int n = byte_at(pos);
    ++pos;
    if (n == 63) {
        if (text.size() < pos + 3) throw ParseError("truncated long-form size field", text.size());
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | byte_at(pos + i);
        if (n > kMaxVertices) {
            throw ParseError("graph order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices), pos);
        }
        if (n < 63) throw ParseError("long-form size field used for n < 63", pos);
        pos += 3;
    }

    const std::size_t bits = n <= 1 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    const std::size_t groups = (bits + 5) / 6;
    if (text.size() - pos < groups) throw ParseError("graph6 record too short for n = " + std::to_string(n), text.size());
    if (text.size() - pos > groups) throw ParseError("unexpected trailing byte after graph6 data", pos + groups);

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++k) {
            const int group = byte_at(pos + k / 6);
            if ((group >> (5 - static_cast<int>(k % 6))) & 1) edges.emplace_back(u, v);
        }
    }
    if (groups > 0) {
        const std::size_t last = pos + groups - 1;
        const int pad = static_cast<int>(groups * 6 - bits);
        if ((byte_at(last) & ((1 << pad) - 1)) != 0) throw ParseError("nonzero padding bits", last);
    }
    return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
    const int n = g.n();
    if (n > kMaxVertices) throw UnsupportedSizeError("graph6 supports n <= 126");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

std::string write_dot(const Graph& g, std::string_view name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.n(); ++v) os << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace tricyclic
