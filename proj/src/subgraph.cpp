#include "tricyclic/subgraph.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "tricyclic/families.hpp"

namespace tricyclic {

namespace {

using Cells = std::vector<std::vector<int>>;

// Split every cell by the vector of neighbour counts into all cells until
// stable. Sub-cells are ordered by signature, so the result depends only on
// the ordered partition and the graph.
void refine(const Graph& g, Cells& cells) {
    for (;;) {
        std::vector<VertexSet> masks(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
            for (int v : cells[c]) masks[c].set(v);
        }
        Cells next;
        next.reserve(cells.size());
        bool split = false;
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<std::vector<int>, int>> keyed;
            keyed.reserve(cell.size());
            for (int v : cell) {
                std::vector<int> sig(masks.size());
                for (std::size_t c = 0; c < masks.size(); ++c) {
                    sig[c] = static_cast<int>((g.neighbors(v) & masks[c]).count());
                }
                keyed.emplace_back(std::move(sig), v);
            }
            std::sort(keyed.begin(), keyed.end());
            std::size_t start = 0;
            for (std::size_t i = 1; i <= keyed.size(); ++i) {
                if (i == keyed.size() || keyed[i].first != keyed[start].first) {
                    std::vector<int> part;
                    for (std::size_t j = start; j < i; ++j) part.push_back(keyed[j].second);
                    next.push_back(std::move(part));
                    start = i;
                }
            }
            if (keyed.front().first != keyed.back().first) split = true;
        }
        cells = std::move(next);
        if (!split) return;
    }
}

bool twins(const Graph& g, int u, int v) {
    VertexSet diff = g.neighbors(u) ^ g.neighbors(v);
    diff.reset(u);
    diff.reset(v);
    return diff.none();
}

struct Leaf {
    std::vector<std::uint64_t> code;
    std::vector<int> order;
};

std::vector<std::uint64_t> leaf_code(const Graph& g, const std::vector<int>& order) {
    const int n = g.n();
    const std::size_t bits = n <= 1 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    std::vector<std::uint64_t> code((bits + 63) / 64, 0);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (g.adjacent(order[i], order[j])) code[k / 64] |= std::uint64_t{1} << (63 - k % 64);
        }
    }
    return code;
}

void search(const Graph& g, Cells cells, Leaf& best, bool& have_best) {
    refine(g, cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() > 1) {
            target = c;
            break;
        }
    }
    if (target == cells.size()) {
        std::vector<int> order;
        order.reserve(cells.size());
        for (const auto& cell : cells) order.push_back(cell.front());
        auto code = leaf_code(g, order);
        if (!have_best || code > best.code) {
            best.code = std::move(code);
            best.order = std::move(order);
            have_best = true;
        }
        return;
    }
    std::vector<int> tried;
    for (int v : cells[target]) {
        if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(g, u, v); })) continue;
        tried.push_back(v);
        Cells child;
        child.reserve(cells.size() + 1);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c != target) {
                child.push_back(cells[c]);
                continue;
            }
            child.push_back({v});
            std::vector<int> rest;
            for (int u : cells[c]) {
                if (u != v) rest.push_back(u);
            }
            child.push_back(std::move(rest));
        }
        search(g, std::move(child), best, have_best);
    }
}

} // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    const int n = g.n();
    std::vector<int> label(static_cast<std::size_t>(n));
    if (n == 0) return label;
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[v] = v;
    Leaf best;
    bool have_best = false;
    search(g, Cells{all}, best, have_best);
    for (int i = 0; i < n; ++i) label[best.order[i]] = i;
    return label;
}

Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_labeling(g)); }

std::string canonical_form(const Graph& g) { return write_graph6(canonical_graph(g)); }

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    auto da = a.degrees();
    auto db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix a(g.n());
    for (const auto& [u, v] : g.edges()) a(u, v) = a(v, u) = 1;
    return a;
}

namespace {

class Embedder {
public:
    Embedder(const IntMatrix& host, const IntMatrix& pattern, bool first_only)
        : host_(host), pattern_(pattern), first_only_(first_only) {}

    std::vector<Occurrence> run() {
        const int k = pattern_.dim();
        const int n = host_.dim();
        if (k == 0 || k > n) return {};

        std::int64_t max_value = 0;
        for (auto x : host_.data()) max_value = std::max(max_value, x);
        for (auto x : pattern_.data()) {
            if (x < 0 || x > max_value) return {};
        }
        const auto width = static_cast<std::size_t>(max_value + 1);
        auto row_counts = [&](const IntMatrix& m) {
            std::vector<std::vector<int>> out(static_cast<std::size_t>(m.dim()), std::vector<int>(width, 0));
            for (int i = 0; i < m.dim(); ++i) {
                for (int j = 0; j < m.dim(); ++j) ++out[i][static_cast<std::size_t>(m(i, j))];
            }
            return out;
        };
        const auto host_counts = row_counts(host_);
        const auto pattern_counts = row_counts(pattern_);
        candidates_.assign(static_cast<std::size_t>(k), {});
        for (int a = 0; a < k; ++a) {
            for (int x = 0; x < n; ++x) {
                bool fits = true;
                for (std::size_t val = 0; val < width && fits; ++val) {
                    fits = host_counts[x][val] >= pattern_counts[a][val];
                }
                if (fits) candidates_[a].push_back(x);
            }
            if (candidates_[a].empty()) return {};
        }

        order_ = search_order();
        mapping_.assign(static_cast<std::size_t>(k), -1);
        used_.assign(static_cast<std::size_t>(n), false);
        extend(0);

        std::vector<Occurrence> out(found_.begin(), found_.end());
        std::sort(out.begin(), out.end(), [](const Occurrence& x, const Occurrence& y) {
            return std::lexicographical_compare(x.subset.rbegin(), x.subset.rend(), y.subset.rbegin(),
                                                y.subset.rend());
        });
        return out;
    }

private:
    struct SubsetLess {
        bool operator()(const Occurrence& x, const Occurrence& y) const { return x.subset < y.subset; }
    };

    // Breadth-first over entries equal to 1, starting from the vertex with the
    // most such entries, so each new vertex is constrained by an earlier one.
    std::vector<int> search_order() const {
        const int k = pattern_.dim();
        std::vector<int> ones(static_cast<std::size_t>(k), 0);
        for (int a = 0; a < k; ++a) {
            for (int b = 0; b < k; ++b) ones[a] += pattern_(a, b) == 1 ? 1 : 0;
        }
        std::vector<int> order;
        std::vector<bool> placed(static_cast<std::size_t>(k), false);
        while (static_cast<int>(order.size()) < k) {
            int root = -1;
            for (int a = 0; a < k; ++a) {
                if (!placed[a] && (root < 0 || ones[a] > ones[root])) root = a;
            }
            placed[root] = true;
            std::size_t head = order.size();
            order.push_back(root);
            while (head < order.size()) {
                const int a = order[head++];
                for (int b = 0; b < k; ++b) {
                    if (!placed[b] && pattern_(a, b) == 1) {
                        placed[b] = true;
                        order.push_back(b);
                    }
                }
            }
        }
        return order;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size()) {
            Occurrence occ{mapping_, mapping_};
            std::sort(occ.subset.begin(), occ.subset.end());
            found_.insert(std::move(occ));
            return first_only_;
        }
        const int a = order_[depth];
        for (int x : candidates_[a]) {
            if (used_[x]) continue;
            bool ok = true;
            for (std::size_t i = 0; i < depth && ok; ++i) {
                const int b = order_[i];
                ok = host_(x, mapping_[b]) == pattern_(a, b);
            }
            if (!ok) continue;
            mapping_[a] = x;
            used_[x] = true;
            const bool stop = extend(depth + 1);
            used_[x] = false;
            mapping_[a] = -1;
            if (stop) return true;
        }
        return false;
    }

    const IntMatrix& host_;
    const IntMatrix& pattern_;
    bool first_only_;
    std::vector<std::vector<int>> candidates_;
    std::vector<int> order_;
    std::vector<int> mapping_;
    std::vector<bool> used_;
    std::set<Occurrence, SubsetLess> found_;
};

} // namespace

std::vector<Occurrence> matrix_embeddings(const IntMatrix& host, const IntMatrix& pattern, bool first_only) {
    return Embedder(host, pattern, first_only).run();
}

std::vector<Occurrence> find_distance_preserving_induced(const Graph& host, const Graph& pattern) {
    return matrix_embeddings(distance_matrix(host), distance_matrix(pattern));
}

bool has_distance_preserving_induced(const Graph& host, const Graph& pattern) {
    const auto dp = distance_matrix(pattern);
    const auto dh = distance_matrix(host);
    return !matrix_embeddings(dh, dp, true).empty();
}

bool has_induced_subgraph(const Graph& host, const Graph& pattern) {
    return !matrix_embeddings(adjacency_matrix(host), adjacency_matrix(pattern), true).empty();
}

namespace {

std::vector<int> forbidden_by_size() {
    std::vector<int> order;
    for (int i = 1; i <= kForbiddenCount; ++i) order.push_back(i);
    std::stable_sort(order.begin(), order.end(),
                     [](int a, int b) { return forbidden_graph(a).n() < forbidden_graph(b).n(); });
    return order;
}

} // namespace

std::vector<ForbiddenHit> scan_forbidden(const Graph& g) {
    const auto dh = distance_matrix(g);
    std::vector<ForbiddenHit> hits;
    for (int i : forbidden_by_size()) {
        auto occ = matrix_embeddings(dh, distance_matrix(forbidden_graph(i)));
        if (!occ.empty()) hits.push_back({i, std::move(occ.front())});
    }
    std::sort(hits.begin(), hits.end(), [](const ForbiddenHit& a, const ForbiddenHit& b) { return a.index < b.index; });
    return hits;
}

int first_forbidden(const Graph& g) {
    const auto dh = distance_matrix(g);
    for (int i = 1; i <= kForbiddenCount; ++i) {
        if (!matrix_embeddings(dh, distance_matrix(forbidden_graph(i)), true).empty()) return i;
    }
    return 0;
}

} // namespace tricyclic
