#include <gtest/gtest.h>

#include "support.hpp"

using namespace cokl;
using PS = PartitionSequence;

TEST(SequenceJson, RoundTrip) {
    PS s{4, 2, 2, 1};
    EXPECT_EQ(sequence_to_json(s).dump(), "[4,2,2,1]");
    EXPECT_EQ(sequence_from_json(json::parse("[4,2,2,1]")), s);
    EXPECT_EQ(sequence_from_json(json::array()), PS{});
    EXPECT_THROW(sequence_from_json(json::parse("[1,2]")), parse_error);
    EXPECT_THROW(sequence_from_json(json::parse("[0]")), parse_error);
    EXPECT_THROW(sequence_from_json(json::parse("{}")), parse_error);
}

TEST(CotreeJson, Shape) {
    json j = cotree_to_json(parse_cotree_text("1(0(0,1),2)"));
    EXPECT_EQ(j["label"], 1);
    ASSERT_EQ(j["children"].size(), 2u);
    EXPECT_EQ(j["children"][0], json({{"leaf", 2}}));
    EXPECT_EQ(j["children"][1]["label"], 0);
}

TEST(CotreeJson, RoundTrip) {
    for (const auto& t : fixtures::random_cotrees(40, 1, 300, 501)) EXPECT_EQ(cotree_from_json(cotree_to_json(t)), t);
    Cotree named = fixtures::eleven_vertex_cotree();
    Cotree back = cotree_from_json(cotree_to_json(named));
    EXPECT_EQ(back, named);
    EXPECT_EQ(back.names(), named.names());
}

TEST(CotreeJson, Errors) {
    EXPECT_THROW(cotree_from_json(json::parse(R"({"label":2,"children":[{"leaf":0},{"leaf":1}]})")), parse_error);
    EXPECT_THROW(cotree_from_json(json::parse(R"({"label":1,"children":[]})")), parse_error);
    EXPECT_THROW(cotree_from_json(json::parse(R"({"leaf":-1})")), parse_error);
    EXPECT_THROW(cotree_from_json(json::parse(R"([1,2])")), parse_error);
    EXPECT_THROW(cotree_from_json(json::parse(R"({"label":1,"children":[{"leaf":0},{"leaf":2}]})")), precondition_error);
}

TEST(WitnessJson, RoundTrip) {
    KLColouring c{2, 1, {{0, 2}, {4}}, {{1, 3}}};
    EXPECT_EQ(colouring_from_json(colouring_to_json(c)), c);
    BoxCertificate b{2, 2, {0, 1, 3, 4}};
    json jb = certificate_to_json(b);
    EXPECT_EQ(jb.dump(), R"({"k":2,"l":2,"vertices":[0,1,3,4]})");
    EXPECT_EQ(certificate_from_json(jb), b);
    FerrersRepresentation f({{0, 1, 2}, {3}});
    EXPECT_EQ(ferrers_to_json(f).dump(), "[[0,1,2],[3]]");
    EXPECT_EQ(ferrers_from_json(ferrers_to_json(f)), f);
    EXPECT_THROW(certificate_from_json(json::parse(R"({"k":2})")), parse_error);
}

TEST(WitnessJson, NamedVertices) {
    VertexLabels lab({"a", "b", "c"});
    BoxCertificate b{1, 2, {0, 2}};
    json j = certificate_to_json(b, lab);
    EXPECT_EQ(j["vertices"], json({"a", "c"}));
    EXPECT_EQ(certificate_from_json(j, lab), b);
    EXPECT_THROW(certificate_from_json(json::parse(R"({"k":1,"l":1,"vertices":["z"]})"), lab), parse_error);
    EXPECT_EQ(p4_to_json(P4Witness{{2, 0, 1, 2}}, lab)["p4"][0], "c");
}

TEST(ParametersJson, Fields) {
    json j = parameters_to_json(ColouringParameters{3, 3, 4, 3});
    EXPECT_EQ(j, json({{"chi", 3}, {"theta", 3}, {"bichromatic", 4}, {"cochromatic", 3}}));
}
