#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

using namespace cokl;
using PS = PartitionSequence;

namespace {

Cotree tree_of(const Graph& g) { return std::get<Cotree>(build_cotree(g)); }

std::size_t count_of(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
    return n;
}

} // namespace

TEST(BuildFerrers, SingleVertex) {
    FerrersRepresentation f = build_ferrers(parse_cotree_text("0"));
    EXPECT_EQ(f.rows(), (std::vector<std::vector<vertex>>{{0}}));
    EXPECT_EQ(build_ferrers_naive(parse_cotree_text("0")), f);
}

TEST(BuildFerrers, DisjointCliquesFillARectangle) {
    for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) {
            Graph g = fixtures::cliques(k, l);
            FerrersRepresentation f = build_ferrers(tree_of(g));
            EXPECT_EQ(f.row_count(), static_cast<std::size_t>(k));
            EXPECT_EQ(f.column_count(), static_cast<std::size_t>(l));
            for (std::size_t j = 0; j < f.column_count(); ++j) {
                auto col = f.column(j);
                std::sort(col.begin(), col.end());
                EXPECT_EQ(col.back() - col.front(), k - 1);
                EXPECT_EQ(col.front() % k, 0);
            }
            EXPECT_TRUE(validate_ferrers(g, f));
        }
}

TEST(BuildFerrers, MergingTwoUnionsOfCliques) {
    // (K3 + K2 + K2) + (K4 + K2 + K1): columns merged and sorted by height.
    Cotree t = fixtures::merge_example();
    Graph g = evaluate_cotree(t);
    FerrersRepresentation f = build_ferrers(t);
    EXPECT_TRUE(validate_ferrers(g, f));
    EXPECT_EQ(f.column_heights(), PS({4, 3, 2, 2, 2, 1}));
    EXPECT_EQ(f.row_lengths(), PS({6, 5, 2, 1}));
    EXPECT_EQ(f, build_ferrers_naive(t));
}

TEST(BuildFerrers, EqualHeightColumnsKeepChildOrder) {
    Cotree t = parse_cotree_text("0(1(0,1),1(2,3),1(4,5))");
    FerrersRepresentation f = build_ferrers(t);
    EXPECT_EQ(f.rows(), (std::vector<std::vector<vertex>>{{0, 2, 4}, {1, 3, 5}}));
}

TEST(BuildFerrers, PseudocotreeInput) {
    Cotree t = fixtures::eleven_vertex_cotree();
    Pseudocotree p = binarize(t);
    EXPECT_EQ(build_ferrers(p), build_ferrers(t));
    EXPECT_EQ(build_ferrers_naive(p), build_ferrers_naive(t));
    EXPECT_EQ(build_ferrers(t).column_heights(), PS({6, 4, 1}));
}

TEST(ValidateFerrers, RejectsBrokenRepresentations) {
    Graph k3 = fixtures::complete(3);
    FerrersRepresentation good = build_ferrers(tree_of(k3));
    ASSERT_TRUE(validate_ferrers(k3, good));
    EXPECT_EQ(good.column_count(), 1u);

    // K3 laid out as a row: the row is not independent.
    EXPECT_FALSE(validate_ferrers(k3, FerrersRepresentation({{0, 1, 2}})));
    // 2K1 as one column: the column is not a clique.
    EXPECT_FALSE(validate_ferrers(fixtures::empty(2), FerrersRepresentation({{0}, {1}})));
    // Swapping vertices between rows breaks a clique column in K3 + K1.
    Graph g = disjoint_union(k3, fixtures::complete(1));
    FerrersRepresentation f = build_ferrers(tree_of(g));
    ASSERT_TRUE(validate_ferrers(g, f));
    auto rows = f.rows();
    std::swap(rows[0][1], rows[1][0]);
    EXPECT_FALSE(validate_ferrers(g, FerrersRepresentation(rows)));
    // Shape, coverage and duplicates.
    EXPECT_FALSE(validate_ferrers(g, FerrersRepresentation({{3}, {0, 1}, {2}})));
    EXPECT_FALSE(validate_ferrers(g, FerrersRepresentation({{0, 3}, {1}})));
    EXPECT_FALSE(validate_ferrers(g, FerrersRepresentation({{0, 3}, {1}, {1}})));
}

TEST(FerrersProperties, RandomCotreesUpTo2000) {
    for (const auto& t : fixtures::random_cotrees(80, 1, 2000, 201)) {
        Graph g = evaluate_cotree(t);
        FerrersRepresentation f = build_ferrers(t);
        ASSERT_TRUE(validate_ferrers(g, f));
        EXPECT_EQ(f.cell_count(), static_cast<std::size_t>(t.order()));
        PS kappa = kappa_hat(t);
        EXPECT_EQ(f.column_heights(), kappa);
        EXPECT_EQ(f.row_lengths(), lambda_hat(t));
        EXPECT_EQ(f.row_count(), static_cast<std::size_t>(kappa[0]));
        EXPECT_EQ(f.column_count(), kappa.size());
        EXPECT_EQ(f, build_ferrers_naive(t));
    }
}

TEST(FerrersProperties, FastAgreesWithNaiveOnAdversarialShapes) {
    for (int arms : {2, 3, 5}) {
        Cotree s = star_of_stars(400, arms);
        EXPECT_EQ(build_ferrers(s), build_ferrers_naive(s));
        EXPECT_TRUE(validate_ferrers(evaluate_cotree(s), build_ferrers(s)));
    }
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 200; ++rep) {
        Cotree t = random_cotree(1 + static_cast<int>(rng() % 40), rng, RandomCotreeOptions{2 + static_cast<int>(rng() % 6)});
        EXPECT_EQ(build_ferrers(t), build_ferrers_naive(t)) << to_text(t);
    }
}

TEST(ReadColouring, Examples) {
    Graph g = fixtures::cliques(3, 2);
    FerrersRepresentation f = build_ferrers(tree_of(g));
    KLColouring rows = read_colouring(f, 3, 0);
    EXPECT_EQ(rows.independent_sets.size(), 3u);
    EXPECT_TRUE(is_valid_colouring(g, rows));
    KLColouring cols = read_colouring(f, 0, 2);
    EXPECT_EQ(cols.cliques.size(), 2u);
    EXPECT_TRUE(is_valid_colouring(g, cols));
    EXPECT_THROW(read_colouring(f, 1, 1), precondition_error);
}

TEST(ReadColouring, NotOneThreeColourable) {
    // 4K2 joined with 2K1: kappa-hat (3,3,2,2).
    Cotree t = parse_cotree_text("1(0(1(a,b),1(c,d),1(e,f),1(g,h)),0(i,j))");
    Graph g = evaluate_cotree(t);
    ASSERT_EQ(kappa_hat(t), PS({3, 3, 2, 2}));
    FerrersRepresentation f = build_ferrers(t);
    EXPECT_THROW(read_colouring(f, 1, 3), precondition_error);
    BoxCertificate obstruction = read_obstruction(f, 1, 3);
    EXPECT_EQ(obstruction.vertices.size(), 8u);
    EXPECT_TRUE(verify_box_cograph(g, obstruction));
    EXPECT_FALSE(is_kl_colourable_oracle(g, 1, 3));
    KLColouring c = read_colouring(f, 2, 2);
    EXPECT_TRUE(is_valid_colouring(g, c));
    EXPECT_TRUE(is_kl_colourable_oracle(g, 2, 2));
}

TEST(ReadObstruction, Examples) {
    Graph g = fixtures::cliques(3, 4);
    FerrersRepresentation f = build_ferrers(tree_of(g));
    BoxCertificate whole = read_obstruction(f, 2, 3);
    EXPECT_EQ(whole.vertices.size(), 12u);
    EXPECT_TRUE(verify_box_cograph(g, whole));

    Graph two_triangles = fixtures::cliques(3, 2);
    BoxCertificate c = read_obstruction(build_ferrers(tree_of(two_triangles)), 1, 1);
    EXPECT_EQ(c.k, 2u);
    EXPECT_EQ(c.l, 2u);
    EXPECT_EQ(c.vertices.size(), 4u);
    EXPECT_TRUE(verify_box_cograph(two_triangles, c));
    EXPECT_TRUE(is_box_cograph_oracle(induced_subgraph(two_triangles, VertexSet(c.vertices)), 2, 2));

    BoxCertificate single = read_obstruction(build_ferrers(parse_cotree_text("0")), 0, 0);
    EXPECT_EQ(single.vertices, std::vector<vertex>{0});
    EXPECT_EQ(single.k, 1u);
}

TEST(ReadObstruction, PreconditionsAreComplementary) {
    for (const auto& t : fixtures::random_cotrees(40, 1, 120, 211)) {
        Graph g = evaluate_cotree(t);
        FerrersRepresentation f = build_ferrers(t);
        for (std::size_t k = 0; k <= 5; ++k)
            for (std::size_t l = 0; l <= 5; ++l) {
                bool colourable = is_kl_colourable(kappa_hat(t), k, l);
                if (colourable) {
                    EXPECT_TRUE(is_valid_colouring(g, read_colouring(f, k, l)));
                    EXPECT_THROW(read_obstruction(f, k, l), precondition_error);
                } else {
                    EXPECT_TRUE(verify_box_cograph(g, read_obstruction(f, k, l)));
                    EXPECT_THROW(read_colouring(f, k, l), precondition_error);
                }
            }
    }
}

TEST(Render, Ascii) {
    EXPECT_EQ(render_ascii(build_ferrers(parse_cotree_text("0"))), "0\n");
    FerrersRepresentation f({{0, 1, 2}, {3, 4}, {5, 6}});
    std::string text = render_ascii(f);
    EXPECT_EQ(text, "0 1 2\n3 4\n5 6\n");
    FerrersRepresentation wide({{10, 2}, {3}});
    EXPECT_EQ(render_ascii(wide), "10  2\n 3\n");
    EXPECT_EQ(render_ascii(FerrersRepresentation({{0, 1}}), {"a", "bb"}), " a bb\n");
}

TEST(Render, Svg) {
    FerrersRepresentation one = build_ferrers(parse_cotree_text("0"));
    std::string s = render_svg(one);
    EXPECT_EQ(count_of(s, "<circle"), 1u);

    Cotree t = fixtures::eleven_vertex_cotree();
    std::string svg = render_svg(build_ferrers(t), t.names());
    EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    EXPECT_EQ(count_of(svg, "<circle"), 11u);
    EXPECT_EQ(count_of(svg, "<text"), 11u);
    EXPECT_EQ(count_of(svg, "</text>"), 11u);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
    EXPECT_NE(svg.find(">a</text>"), std::string::npos);
    EXPECT_NE(render_svg(FerrersRepresentation(std::vector<std::vector<vertex>>{{0}}), {"<&>"}).find("&lt;&amp;&gt;"), std::string::npos);
}
