#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "sidedisk/cli.hpp"
#include "sidedisk/constructions.hpp"
#include "sidedisk/io.hpp"
#include "sidedisk/mis.hpp"

using namespace sidedisk;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
    args.insert(args.begin(), "sidedisk");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("sidedisk_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

std::size_t count(const std::string& s, const std::string& what) {
    std::size_t c = 0;
    for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++c;
    return c;
}

std::optional<ErrorKind> kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

}  // namespace

TEST(Json, PolygonRoundTripIsExact) {
    ConvexPolygon P = random_convex_polygon(37, 5);
    ConvexPolygon Q = polygon_from_json(Json::parse(to_json(P).dump()));
    ASSERT_EQ(Q.size(), P.size());
    for (std::size_t k = 0; k < P.size(); ++k) EXPECT_EQ(Q.vertex(k), P.vertex(k));
}

TEST(Json, GraphAndDecompositionRoundTrip) {
    ConvexPolygon P = random_convex_polygon(25, 8);
    for (IntersectionMode m : {IntersectionMode::Closed, IntersectionMode::Open}) {
        IntersectionGraph G = graph_bruteforce(P, m);
        IntersectionGraph H = graph_from_json(Json::parse(to_json(G).dump()));
        EXPECT_EQ(H.n, G.n);
        EXPECT_EQ(H.edges, G.edges);
        EXPECT_EQ(H.mode, m);
    }
    TreeDecomposition T = build_tree_decomposition(P, compute_medial_axis(P));
    TreeDecomposition U = decomposition_from_json(Json::parse(to_json(T).dump()), 25);
    EXPECT_EQ(U.root, T.root);
    ASSERT_EQ(U.bags.size(), T.bags.size());
    for (std::size_t i = 0; i < T.bags.size(); ++i) {
        EXPECT_EQ(U.bags[i].parent, T.bags[i].parent);
        EXPECT_EQ(std::vector<int>(U.bags[i].begin(), U.bags[i].end()),
                  std::vector<int>(T.bags[i].begin(), T.bags[i].end()));
    }
    EXPECT_TRUE(validate_decomposition(graph_bruteforce(P, IntersectionMode::Closed), U).ok());
}

TEST(Json, OuterplanarRoundTrip) {
    OuterplanarInput G = parse_outerplanar(8, {{0, 4}, {1, 3}, {4, 6}});
    OuterplanarInput H = outerplanar_from_json(Json::parse(to_json(G).dump()));
    EXPECT_EQ(H.n, 8);
    EXPECT_EQ(H.chords, G.chords);
}

TEST(Json, MedialAxisFields) {
    ConvexPolygon P = validate_convex_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    Json j = to_json(compute_medial_axis(P));
    ASSERT_EQ(j["vertices"].size(), 5u);
    EXPECT_EQ(j["edges"].size(), 4u);
    const Json& c = j["vertices"][0];
    EXPECT_DOUBLE_EQ(c["radius"].get<double>(), 0.5);
    EXPECT_EQ(c["tangent_sides"].size(), 4u);
    EXPECT_FALSE(c["leaf"].get<bool>());
}

TEST(Json, MalformedDocumentsAreInvalidArgument) {
    EXPECT_EQ(kind_of([] { polygon_from_json(Json::parse(R"({"points": []})")); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { polygon_from_json(Json::parse(R"({"vertices": [[0, 0], [1]]})")); }),
              ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { graph_from_json(Json::parse(R"({"n": 3, "edges": [[0, "x"]]})")); }),
              ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { outerplanar_from_json(Json::parse(R"({"n": 5})")); }), ErrorKind::InvalidArgument);
    // a well-formed document can still describe a bad polygon
    EXPECT_EQ(kind_of([] { polygon_from_json(Json::parse(R"({"vertices": [[0, 0], [1, 0]]})")); }),
              ErrorKind::TooFewVertices);
}

TEST(Io, MissingAndUnparsableFiles) {
    EXPECT_EQ(kind_of([] { read_text("/nonexistent/dir/file.json"); }), ErrorKind::Io);
    EXPECT_EQ(kind_of([] { write_text("/nonexistent/dir/file.json", "x"); }), ErrorKind::Io);
    std::string bad = temp_file("bad.json", "{ not json");
    EXPECT_EQ(kind_of([&] { read_json(bad); }), ErrorKind::Io);
}

TEST(Svg, HexagonDisksAndPolygon) {
    std::string s = render_svg(regular_polygon(6));
    EXPECT_EQ(count(s, "<circle class=\"disk\""), 6u);
    EXPECT_EQ(count(s, "<path class=\"polygon\""), 1u);
    EXPECT_EQ(count(s, " L "), 5u);
    EXPECT_EQ(count(s, "<line"), 0u);
}

TEST(Svg, SquareMedialAxisLayer) {
    ConvexPolygon P = validate_convex_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    MedialAxis M = compute_medial_axis(P);
    SvgLayers layers;
    layers.medial_axis = &M;
    EXPECT_EQ(count(render_svg(P, layers), "<line class=\"axis\""), 4u);
}

TEST(Svg, MisHighlightAndTree) {
    ConvexPolygon P = extremal_polygon(8);
    IntersectionGraph G = graph_bruteforce(P, IntersectionMode::Closed);
    TreeDecomposition T = build_tree_decomposition(P, compute_medial_axis(P));
    MisResult r = mis_dp(G, T);
    ASSERT_EQ(r.size, 2);
    SvgLayers layers;
    layers.mis_witness = &r.witness;
    layers.tree = &T;
    std::string s = render_svg(P, layers);
    EXPECT_EQ(count(s, "class=\"disk mis\""), 2u);
    EXPECT_EQ(count(s, "class=\"disk"), 8u);
    EXPECT_EQ(count(s, "<line class=\"tree\""), T.bags.size() - 1);
}

TEST(Cli, GenExtremalThenMis) {
    CliRun g = cli({"gen", "extremal", "--n", "12"});
    ASSERT_EQ(g.code, 0) << g.err;
    std::string in = temp_file("ext12.json", g.out);
    for (std::string method : {"dp", "bruteforce"}) {
        CliRun m = cli({"mis", "--in", in, "--method", method});
        ASSERT_EQ(m.code, 0) << m.err;
        EXPECT_EQ(Json::parse(m.out)["alpha"], 3) << method;
    }
}

TEST(Cli, FastAndOracleGraphsAgree) {
    std::string in = temp_file("rand40.json", to_json(random_convex_polygon(40, 12)).dump());
    for (std::string mode : {"closed", "open"}) {
        CliRun a = cli({"--mode", mode, "graph", "--in", in, "--method", "fast"});
        CliRun b = cli({"--mode", mode, "graph", "--in", in, "--method", "oracle"});
        ASSERT_EQ(a.code, 0) << a.err;
        ASSERT_EQ(b.code, 0) << b.err;
        EXPECT_EQ(a.out, b.out);
    }
    CliRun e = cli({"graph", "--in", in, "--format", "edges"});
    EXPECT_EQ(e.code, 0);
    EXPECT_EQ(count(e.out, "\n"), graph_bruteforce(random_convex_polygon(40, 12), IntersectionMode::Closed).edges.size());
}

TEST(Cli, RealizeWritesPolygon) {
    std::string in = temp_file("op.json", R"({"n": 7, "chords": [[0, 3], [3, 6]]})");
    std::string out = (std::filesystem::temp_directory_path() / "sidedisk_test_realized.json").string();
    CliRun r = cli({"--out", out, "realize", "--in", in});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    ConvexPolygon P = polygon_from_json(read_json(out));
    EXPECT_EQ(graph_bruteforce(P, IntersectionMode::Closed).edges, cycle_with_chords(7, {{0, 3}, {3, 6}}).edges);
}

TEST(Cli, ProbeFindsNoCounterexample) {
    CliRun r = cli({"probe-c4", "--trials", "100000", "--seed", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["intersecting"], 100000);
    EXPECT_TRUE(j["ok"].get<bool>());
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(cli({"--help"}).code, 0);
    EXPECT_EQ(cli({"no-such-command"}).code, 2);
    EXPECT_EQ(cli({"gen", "extremal", "--n", "seven"}).code, 2);
    EXPECT_EQ(cli({"--eps", "-1", "gen", "regular", "--n", "5"}).code, 2);
    EXPECT_EQ(cli({"medial-axis"}).code, 2);
    EXPECT_EQ(cli({"medial-axis", "--in", "/nonexistent/p.json"}).code, 3);
    EXPECT_EQ(cli({"medial-axis", "--in", temp_file("malformed.json", R"({"vertices": 3})")}).code, 2);
    std::string big = temp_file("big.json", to_json(regular_polygon(30)).dump());
    CliRun r = cli({"mis", "--in", big, "--method", "bruteforce"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("error"), std::string::npos);
}
