#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace cokl;
using fixtures::complete;
using fixtures::cycle;
using fixtures::path;

TEST(ParseEdgeList, PathWithDeclaredOrder) {
    Graph g = parse_edge_list("4\n0 1\n1 2\n2 3");
    EXPECT_EQ(g, path(4));
}

TEST(ParseEdgeList, SingleVertexNoEdges) {
    Graph g = parse_edge_list("1");
    EXPECT_EQ(g.order(), 1);
    EXPECT_EQ(g.edge_count(), 0u);
}

TEST(ParseEdgeList, OrderInferredFromLargestId) {
    Graph g = parse_edge_list("0 1\n1 5\n");
    EXPECT_EQ(g.order(), 6);
    EXPECT_TRUE(g.adjacent(5, 1));
}

TEST(ParseEdgeList, DuplicatesCollapse) {
    Graph g = parse_edge_list("3\n0 1\n1 0\n0 1\n");
    EXPECT_EQ(g.edge_count(), 1u);
}

TEST(ParseEdgeList, CommentsAndBlankLines) {
    Graph g = parse_edge_list("# triangle\n3\n\n0 1  # first\n1 2\n2 0\n");
    EXPECT_EQ(g, complete(3));
}

TEST(ParseEdgeList, Errors) {
    EXPECT_THROW(parse_edge_list("3\n0 0"), parse_error);
    EXPECT_THROW(parse_edge_list("3\n0 3"), parse_error);
    EXPECT_THROW(parse_edge_list("3\n0 x"), parse_error);
    EXPECT_THROW(parse_edge_list("3\n0 1 2"), parse_error);
    EXPECT_THROW(parse_edge_list("3\n-1 2"), parse_error);
}

TEST(ParseEdgeList, ErrorCarriesLineNumber) {
    try {
        parse_edge_list("3\n0 1\n1 1\n");
        FAIL() << "expected parse_error";
    } catch (const parse_error& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(Graph6, Examples) {
    EXPECT_EQ(parse_graph6("C~"), complete(4));
    Graph k1 = parse_graph6("@");
    EXPECT_EQ(k1.order(), 1);
    EXPECT_EQ(k1.edge_count(), 0u);
    EXPECT_EQ(parse_graph6("Bw"), complete(3));
}

// Strings produced by an external graph6 encoder.
TEST(Graph6, ExternalEncoderStrings) {
    EXPECT_EQ(encode_graph6(path(4)), "Ch");
    EXPECT_EQ(encode_graph6(cycle(5)), "Dhc");
    EXPECT_EQ(encode_graph6(fixtures::seven_vertex_example()), "FwCxo");
    EXPECT_EQ(parse_graph6("FwCxo"), fixtures::seven_vertex_example());
}

TEST(Graph6, HeaderAndWhitespaceTolerated) {
    EXPECT_EQ(parse_graph6(">>graph6<<C~\n"), complete(4));
}

TEST(Graph6, Errors) {
    EXPECT_THROW(parse_graph6("C"), parse_error);
    EXPECT_THROW(parse_graph6("C~~"), parse_error);
    EXPECT_THROW(parse_graph6("C\x7f"), parse_error);
    EXPECT_THROW(parse_graph6("C "), parse_error);
}

TEST(Graph6, RoundTripRandom) {
    std::mt19937_64 rng(7);
    for (int n = 0; n <= 20; ++n)
        for (int rep = 0; rep < 5; ++rep) {
            Graph g = random_graph(n, 0.4, rng);
            EXPECT_EQ(parse_graph6(encode_graph6(g)), g) << "n=" << n;
        }
}

TEST(Graph6, LargeHeader) {
    std::mt19937_64 rng(3);
    Graph g = random_graph(100, 0.1, rng);
    EXPECT_EQ(parse_graph6(encode_graph6(g)), g);
}

TEST(Complement, Examples) {
    EXPECT_EQ(complement(complete(3)), fixtures::empty(3));
    EXPECT_EQ(complement(complement(path(4))), path(4));
    EXPECT_TRUE(fixtures::isomorphic(complement(path(4)), path(4)));
    EXPECT_FALSE(fixtures::isomorphic(complement(path(4)), cycle(4)));
}

TEST(DisjointUnion, Examples) {
    Graph two = disjoint_union(complete(1), complete(1));
    EXPECT_EQ(two, fixtures::empty(2));
    Graph g = disjoint_union(complete(3), complete(3));
    EXPECT_EQ(g.order(), 6);
    EXPECT_EQ(g.edge_count(), 6u);
    EXPECT_TRUE(g.adjacent(3, 5));
    EXPECT_FALSE(g.adjacent(2, 3));
}

TEST(DisjointUnion, OrdersAdd) {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        Graph g = random_graph(static_cast<int>(rng() % 8), 0.5, rng);
        Graph h = random_graph(static_cast<int>(rng() % 8), 0.5, rng);
        EXPECT_EQ(disjoint_union(g, h).order(), g.order() + h.order());
    }
}

TEST(Join, Examples) {
    EXPECT_EQ(join(complete(1), complete(1)), complete(2));
    EXPECT_EQ(join(complete(2), complete(2)), complete(4));
    Graph c4 = join(fixtures::empty(2), fixtures::empty(2));
    EXPECT_EQ(c4.edge_count(), 4u);
    for (int a : {0, 1})
        for (int b : {2, 3}) EXPECT_TRUE(c4.adjacent(a, b));
    EXPECT_FALSE(c4.adjacent(0, 1));
    EXPECT_FALSE(c4.adjacent(2, 3));
}

TEST(Join, DualToUnion) {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 30; ++rep) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 7), 0.5, rng);
        Graph h = random_graph(1 + static_cast<int>(rng() % 7), 0.5, rng);
        EXPECT_EQ(join(g, h), complement(disjoint_union(complement(g), complement(h))));
    }
}

TEST(Complement, Involution) {
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 30; ++rep) {
        Graph g = random_graph(static_cast<int>(rng() % 15), 0.3, rng);
        EXPECT_EQ(complement(complement(g)), g);
    }
}

TEST(InducedSubgraph, Examples) {
    EXPECT_EQ(induced_subgraph(path(4), VertexSet({0, 1})), complete(2));
    EXPECT_EQ(induced_subgraph(cycle(5), VertexSet({0, 1, 2, 3})), path(4));
    Graph g = fixtures::seven_vertex_example();
    EXPECT_EQ(induced_subgraph(g, VertexSet({0, 1, 2, 3, 4, 5, 6})), g);
}

TEST(InducedSubgraph, KeepsOriginalLabels) {
    Graph sub = induced_subgraph(cycle(6), VertexSet({1, 3, 4}));
    EXPECT_EQ(sub.label(0), "1");
    EXPECT_EQ(sub.label(2), "4");
    EXPECT_TRUE(sub.adjacent(1, 2));
}

TEST(InducedSubgraph, OutOfRange) {
    EXPECT_THROW(induced_subgraph(path(3), VertexSet({0, 3})), precondition_error);
}

TEST(VertexSet, RejectsDuplicatesAndNegatives) {
    EXPECT_THROW(VertexSet({1, 1}), precondition_error);
    EXPECT_THROW(VertexSet({-1}), precondition_error);
}

TEST(IndependentAndClique, Examples) {
    EXPECT_TRUE(is_clique(complete(3), VertexSet({0, 1, 2})));
    EXPECT_FALSE(is_independent_set(complete(3), VertexSet({0, 1})));
    Graph g = path(5);
    EXPECT_TRUE(is_independent_set(g, VertexSet{}));
    EXPECT_TRUE(is_clique(g, VertexSet{}));
    EXPECT_TRUE(is_independent_set(g, VertexSet({3})));
    EXPECT_TRUE(is_clique(g, VertexSet({3})));
}

TEST(IndependentAndClique, SwapUnderComplement) {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 40; ++rep) {
        Graph g = random_graph(6, 0.5, rng);
        Graph c = complement(g);
        for (unsigned mask = 0; mask < 64; ++mask) {
            std::vector<vertex> s;
            for (int v = 0; v < 6; ++v)
                if (mask >> v & 1u) s.push_back(v);
            EXPECT_EQ(is_independent_set(g, VertexSet(s)), is_clique(c, VertexSet(s)));
        }
    }
}

TEST(Components, SplitAndCoSplit) {
    Graph g = disjoint_union(path(3), complete(2));
    EXPECT_EQ(components(g, all_vertices(g)).size(), 2u);
    EXPECT_EQ(co_components(g, all_vertices(g)).size(), 1u);
    Graph j = join(fixtures::empty(2), complete(1));
    EXPECT_EQ(components(j, all_vertices(j)).size(), 1u);
    EXPECT_EQ(co_components(j, all_vertices(j)).size(), 2u);
}
