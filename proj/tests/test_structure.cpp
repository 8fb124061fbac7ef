#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "support.hpp"
#include "tricyclic/enumerate.hpp"
#include "tricyclic/error.hpp"
#include "tricyclic/families.hpp"
#include "tricyclic/spectra.hpp"
#include "tricyclic/structure.hpp"
#include "tricyclic/subgraph.hpp"

using namespace tricyclic;
using namespace testing_support;

namespace {

// True when some vertex subset of size >= 4 induces a cycle.
bool has_chordless_cycle(const Graph& g) {
    const int n = g.n();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) < 4) continue;
        std::vector<int> subset;
        for (int v = 0; v < n; ++v) {
            if (mask >> v & 1) subset.push_back(v);
        }
        const Graph h = g.induced(subset);
        if (!h.connected()) continue;
        const auto deg = h.degrees();
        if (std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; })) return true;
    }
    return false;
}

int components_without(const Graph& g, int removed) {
    std::vector<int> keep;
    for (int v = 0; v < g.n(); ++v) {
        if (v != removed) keep.push_back(v);
    }
    const Graph h = g.induced(keep);
    std::vector<bool> seen(h.n(), false);
    int count = 0;
    for (int s = 0; s < h.n(); ++s) {
        if (seen[s]) continue;
        ++count;
        const auto d = bfs_distances(h, s);
        for (int v = 0; v < h.n(); ++v) {
            if (d[v] >= 0) seen[v] = true;
        }
    }
    return count;
}

std::vector<int> param_values(const BaseType& t) {
    std::vector<int> values;
    for (const auto& p : t.params) values.push_back(p.second);
    return values;
}

const std::map<std::string, int> kTemplateArity = {
    {"G7_1", 6}, {"G6_1", 4}, {"G6_2", 5}, {"G6_3", 6}, {"G4_1", 5}, {"G4_2", 4}, {"G4_3", 6}, {"G4_4", 5},
    {"G3_1", 4}, {"G3_2", 5}, {"G3_3", 6}, {"G3_4", 3}, {"G3_5", 4}, {"G3_6", 6}, {"G3_7", 5}};

} // namespace

TEST(Chordal, Examples) {
    EXPECT_FALSE(is_chordal(cycle_graph(4)));
    EXPECT_TRUE(is_chordal(complete_graph(4)));
    EXPECT_TRUE(is_chordal(t7_graph()));
    EXPECT_TRUE(is_chordal(path_graph(6)));
    EXPECT_FALSE(is_chordal(cycle_graph(7)));
}

TEST(Chordal, AgreesWithChordlessCycleSearch) {
    std::mt19937_64 rng(21);
    int chordal = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 4 + trial % 6;
        const Graph g = random_connected_graph(n, static_cast<int>(rng() % 8), rng);
        const bool expected = !has_chordless_cycle(g);
        ASSERT_EQ(is_chordal(g), expected) << write_graph6(g);
        chordal += expected ? 1 : 0;
    }
    EXPECT_GT(chordal, 50);
}

TEST(LexBfs, IsAPermutation) {
    const Graph g = t4_graph(3);
    auto order = lex_bfs_order(g);
    std::sort(order.begin(), order.end());
    for (int i = 0; i < g.n(); ++i) EXPECT_EQ(order[i], i);
}

TEST(Blocks, Examples) {
    const auto p4 = block_decomposition(path_graph(4));
    EXPECT_EQ(p4.blocks.size(), 3u);
    for (const auto& b : p4.blocks) EXPECT_EQ(b.size(), 2u);
    EXPECT_EQ(p4.cut_vertices, (std::vector<int>{1, 2}));

    const auto k4 = block_decomposition(complete_graph(4));
    ASSERT_EQ(k4.blocks.size(), 1u);
    EXPECT_EQ(k4.blocks[0].size(), 4u);
    EXPECT_TRUE(k4.cut_vertices.empty());

    const auto t1 = block_decomposition(t1_graph(0, 0));
    EXPECT_EQ(t1.blocks.size(), 3u);
    for (const auto& b : t1.blocks) EXPECT_EQ(b.size(), 3u);
    EXPECT_EQ(t1.cut_vertices.size(), 2u);
}

TEST(Blocks, AgreesWithVertexDeletionOracle) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 12;
        const Graph g = random_connected_graph(n, static_cast<int>(rng() % 5), rng);
        const auto bd = block_decomposition(g);
        std::vector<int> cuts;
        int expected_blocks = 1;
        for (int v = 0; v < n; ++v) {
            const int c = n > 1 ? components_without(g, v) : 0;
            if (c >= 2) cuts.push_back(v);
            expected_blocks += std::max(0, c - 1);
        }
        ASSERT_EQ(bd.cut_vertices, cuts) << write_graph6(g);
        ASSERT_EQ(static_cast<int>(bd.blocks.size()), expected_blocks) << write_graph6(g);
        int edges = 0;
        for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
            const Graph h = g.induced(bd.blocks[b]);
            edges += h.m();
            EXPECT_TRUE(h.connected());
        }
        EXPECT_EQ(edges, g.m());
        for (int v = 0; v < n; ++v) {
            const bool is_cut = std::binary_search(cuts.begin(), cuts.end(), v);
            EXPECT_EQ(bd.membership[v].size() >= 2, is_cut);
        }
    }
}

TEST(Base, Examples) {
    for (int k = 0; k <= 6; ++k) EXPECT_TRUE(is_isomorphic(base_of(t3_graph(k)), t3_graph(0)));
    EXPECT_TRUE(is_isomorphic(t3_graph(0), t2_graph(0, 0)));
    const Graph t1 = t1_graph(2, 1);
    EXPECT_EQ(write_graph6(base_of(t1)), write_graph6(t1));
    EXPECT_TRUE(is_isomorphic(base_of(t_general_graph(1, 0, {1, 0, 0, 0, 0})), t1_graph(1, 0)));
    EXPECT_THROW(base_of(cycle_graph(5)), DomainError);
    EXPECT_THROW(base_of(path_graph(3)), DomainError);
}

TEST(Base, IdempotentWithMinimumDegreeTwo) {
    for (const auto& [spec, g] : enumerate_family_members(11)) {
        const Graph b = base_of(g);
        EXPECT_GE(b.min_degree(), 2) << spec.to_string();
        EXPECT_EQ(cyclomatic_number(b), 3);
        EXPECT_EQ(write_graph6(base_of(b)), write_graph6(b));
    }
}

TEST(BaseType, Examples) {
    EXPECT_EQ(base_type(complete_graph(4)).label, "G7_1");
    for (int s = 1; s <= 3; ++s) {
        for (int t = 1; t <= 3; ++t) EXPECT_EQ(base_type(t1_graph(s, t)).label, "G3_3");
    }
    EXPECT_EQ(base_type(t2_graph(0, 0)).label, "G3_4");
    EXPECT_THROW(base_type(t3_graph(2)), DomainError);
}

TEST(BaseType, InstantiationReproducesTheBase) {
    for (const auto& [spec, g] : enumerate_family_members(12)) {
        const Graph b = base_of(g);
        const BaseType t = base_type(b);
        EXPECT_TRUE(is_isomorphic(instantiate_base(t.label, param_values(t)), b)) << spec.to_string();
    }
}

TEST(BaseType, EveryBaseUpToEightVerticesHasExactlyOneLabel) {
    std::map<std::string, int> histogram;
    for (int n = 4; n <= 8; ++n) {
        EnumerationJob job{n, n + 2, 2, true, 4};
        for (const Graph& g : enumerate_connected(job)) {
            const auto labels = matching_base_labels(g);
            ASSERT_EQ(labels.size(), 1u) << write_graph6(g);
            const BaseType t = base_type(g);
            EXPECT_EQ(t.label, labels.front());
            EXPECT_TRUE(is_isomorphic(instantiate_base(t.label, param_values(t)), g));
            ++histogram[t.label];
        }
    }
    // A label occurs exactly when some instantiation has at most eight vertices.
    for (const auto& label : base_labels()) {
        const int arity = kTemplateArity.at(label);
        int smallest = kMaxVertices;
        std::vector<int> params(arity, 0);
        while (true) {
            try {
                smallest = std::min(smallest, instantiate_base(label, params).n());
            } catch (const ParameterError&) {
            }
            int i = 0;
            while (i < arity && params[i] == 3) params[i++] = 0;
            if (i == arity) break;
            ++params[i];
        }
        EXPECT_EQ(histogram.count(label) == 1, smallest <= 8) << label << " smallest order " << smallest;
    }
}

TEST(BaseType, TemplateInstancesAreLabelledUniquely) {
    // Small instances of every template, including orders beyond the exhaustive run.
    ASSERT_EQ(base_labels().size(), kTemplateArity.size());
    for (const auto& label : base_labels()) {
        const std::vector<int> params(kTemplateArity.at(label), 3);
        EXPECT_EQ(base_type(instantiate_base(label, params)).params.size(), params.size()) << label;
        for (std::size_t i = 0; i < params.size(); ++i) {
            auto varied = params;
            varied[i] = 4;
            const Graph g = instantiate_base(label, varied);
            const auto labels = matching_base_labels(g);
            ASSERT_EQ(labels.size(), 1u) << label;
            EXPECT_EQ(labels.front(), label);
        }
    }
}

TEST(BlockGraph, Predicates) {
    const Graph claw = star_graph(3);
    EXPECT_TRUE(is_block_graph(claw));
    EXPECT_TRUE(is_block_star(claw));
    EXPECT_FALSE(is_loose_block_graph(claw));
    for (int n = 2; n <= 8; ++n) {
        EXPECT_TRUE(is_block_graph(path_graph(n)));
        EXPECT_TRUE(is_loose_block_graph(path_graph(n)));
    }
    EXPECT_FALSE(is_block_graph(cycle_graph(4)));
    EXPECT_TRUE(is_block_graph(complete_graph(5)));
}

TEST(BlockGraph, Embeddings) {
    EXPECT_TRUE(embeds_as_induced(bga_graph(), BlockTarget::BGA));
    EXPECT_TRUE(embeds_as_induced(bg_graph(2, 2), BlockTarget::BG));
    EXPECT_FALSE(embeds_as_induced(star_graph(4), BlockTarget::BGA));
    EXPECT_THROW(embeds_as_induced(Graph(1, {}), BlockTarget::BG), DomainError);
}

TEST(BlockGraph, CharacterizationExamples) {
    EXPECT_TRUE(blockgraph_lambda2_below(star_graph(3)));
    EXPECT_TRUE(blockgraph_lambda2_below(path_graph(10)));
    GraphBuilder spider;
    const int centre = spider.add_vertex();
    for (int leg = 0; leg < 3; ++leg) spider.add_pendant_path(centre, 2);
    const Graph s = spider.build();
    EXPECT_EQ(blockgraph_lambda2_below(s), lambda2(s) < -0.5 - kSpectralTolerance);
    EXPECT_GT(std::abs(lambda2(s) + 0.5), 1e-7);
    EXPECT_THROW(blockgraph_lambda2_below(cycle_graph(4)), DomainError);
    EXPECT_THROW(blockgraph_lambda2_below(Graph(1, {})), DomainError);
    EXPECT_LT(lambda2(bga_graph()), -0.5);
    EXPECT_LT(lambda2(bg_graph(2, 2)), -0.5);
}

TEST(BlockGraph, BgShortcutMatchesAllCliqueSizes) {
    for (int n = 2; n <= 7; ++n) {
        EnumerationJob job{n};
        for (const Graph& g : enumerate_connected(job, is_block_graph)) {
            bool any = false;
            for (int p = 2; p <= n + 1 && !any; ++p) {
                for (int q = 2; q <= n + 1 && !any; ++q) any = has_induced_subgraph(bg_graph(p, q), g);
            }
            ASSERT_EQ(embeds_as_induced(g, BlockTarget::BG), any) << write_graph6(g);
        }
    }
}
