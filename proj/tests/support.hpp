#ifndef TRICYCLIC_TESTS_SUPPORT_HPP
#define TRICYCLIC_TESTS_SUPPORT_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "tricyclic/graph.hpp"
#include "tricyclic/matrix.hpp"

namespace testing_support {

using tricyclic::Graph;

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Random spanning tree plus extra random edges.
inline Graph random_connected_graph(int n, int extra_edges, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
    for (int v = 1; v < n; ++v) {
        const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
        edges.emplace_back(u, v);
        used[u][v] = used[v][u] = true;
    }
    const int max_extra = n * (n - 1) / 2 - (n - 1);
    extra_edges = std::min(extra_edges, max_extra);
    std::uniform_int_distribution<int> pick(0, n - 1);
    while (extra_edges > 0) {
        const int u = pick(rng);
        const int v = pick(rng);
        if (u == v || used[u][v]) continue;
        used[u][v] = used[v][u] = true;
        edges.emplace_back(u, v);
        --extra_edges;
    }
    const auto perm = random_permutation(n, rng);
    for (auto& [u, v] : edges) {
        u = perm[u];
        v = perm[v];
    }
    return Graph(n, edges);
}

// Floyd-Warshall hop distances; -1 for unreachable pairs.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
    const int n = g.n();
    const int inf = n + 1;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (int j = 0; j < n; ++j) {
            if (g.adjacent(i, j)) d[i][j] = 1;
        }
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
        }
    }
    for (auto& row : d) {
        for (int& x : row) x = x == inf ? -1 : x;
    }
    return d;
}

// graph6 decoder written directly from the format description, n <= 62.
inline std::vector<std::vector<bool>> decode_graph6(const std::string& s) {
    const int n = s[0] - 63;
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int byte = s[1 + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) adj[i][j] = adj[j][i] = true;
        }
    }
    return adj;
}

// Lexicographically largest upper-triangle string over all relabelings.
inline std::string brute_force_canonical(const Graph& g) {
    std::vector<int> p(g.n());
    std::iota(p.begin(), p.end(), 0);
    std::string best;
    do {
        std::string code;
        for (int j = 1; j < g.n(); ++j) {
            for (int i = 0; i < j; ++i) code += g.adjacent(p[i], p[j]) ? '1' : '0';
        }
        best = std::max(best, code);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

// Coarsest equitable refinement of the colouring for the matrix a.
inline std::vector<std::vector<int>> equitable_refinement(const tricyclic::IntMatrix& a, std::vector<int> color) {
    const int n = a.dim();
    while (true) {
        const int colors = *std::max_element(color.begin(), color.end()) + 1;
        std::map<std::pair<int, std::vector<long long>>, int> ids;
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v) {
            std::vector<long long> sums(colors, 0);
            for (int w = 0; w < n; ++w) sums[color[w]] += a(v, w);
            ids.try_emplace({color[v], sums}, 0);
        }
        int id = 0;
        for (auto& [key, value] : ids) value = id++;
        for (int v = 0; v < n; ++v) {
            std::vector<long long> sums(colors, 0);
            for (int w = 0; w < n; ++w) sums[color[w]] += a(v, w);
            next[v] = ids.at({color[v], sums});
        }
        const int next_colors = id;
        color = next;
        if (next_colors == colors) break;
    }
    std::vector<std::vector<int>> cells(*std::max_element(color.begin(), color.end()) + 1);
    for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
    return cells;
}

} // namespace testing_support

#endif // TRICYCLIC_TESTS_SUPPORT_HPP
