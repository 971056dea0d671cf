#include "sidedisk/cli.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sidedisk/constructions.hpp"
#include "sidedisk/error.hpp"
#include "sidedisk/io.hpp"
#include "sidedisk/medial_axis.hpp"
#include "sidedisk/mis.hpp"
#include "sidedisk/realizer.hpp"
#include "sidedisk/side_disks.hpp"
#include "sidedisk/tree_decomposition.hpp"
#include "sidedisk/verify.hpp"

namespace sidedisk {

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Options {
    std::string in, out;
    std::string mode = "closed";
    std::optional<double> eps;
    std::string kind;
    int n = 12;
    std::uint64_t seed = 1;
    std::string method;
    std::string format = "json";
    std::uint64_t trials = 100000;
    int threads = 0;
    int random_count = 1000;
    std::vector<int> sizes{1000, 10000, 100000, 1000000};
    bool check = false;
    std::vector<std::string> layers{"disks"};
};

class Runner {
public:
    Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {
        tol_ = o.eps ? Tolerance::make(*o.eps) : Tolerance::from_env();
        mode_ = o.mode == "open" ? IntersectionMode::Open : IntersectionMode::Closed;
    }

    int gen() {
        if (o_.n < 3) throw Error(ErrorKind::InvalidArgument, "--n must be at least 3");
        ConvexPolygon P = o_.kind == "extremal" ? extremal_polygon(o_.n, tol_)
                          : o_.kind == "regular" ? regular_polygon(o_.n)
                                                 : random_convex_polygon(o_.n, o_.seed, tol_);
        emit(to_json(P));
        return 0;
    }

    int medial_axis() {
        emit(to_json(compute_medial_axis(polygon(), tol_)));
        return 0;
    }

    int treedecomp() {
        ConvexPolygon P = polygon();
        emit(to_json(build_tree_decomposition(P, compute_medial_axis(P, tol_), tol_)));
        return 0;
    }

    int graph() {
        ConvexPolygon P = polygon();
        IntersectionGraph G;
        if (o_.method == "oracle") {
            G = graph_bruteforce(P, mode_, tol_);
        } else {
            TreeDecomposition T = build_tree_decomposition(P, compute_medial_axis(P, tol_), tol_);
            G = graph_from_decomposition(P, T, mode_, tol_);
        }
        if (o_.format == "edges") emit_text(to_edge_list(G));
        else if (o_.format == "dot") emit_text(to_dot(G));
        else emit(to_json(G));
        return 0;
    }

    int mis() {
        ConvexPolygon P = polygon();
        MisResult r;
        if (o_.method == "bruteforce") {
            r = mis_bruteforce(graph_bruteforce(P, mode_, tol_));
        } else {
            TreeDecomposition T = build_tree_decomposition(P, compute_medial_axis(P, tol_), tol_);
            r = mis_dp(graph_from_decomposition(P, T, mode_, tol_), T);
        }
        emit(to_json(r));
        return 0;
    }

    int realize_graph() {
        OuterplanarInput G = outerplanar_from_json(input());
        emit(to_json(realize(G, tol_)));
        return 0;
    }

    int probe() {
        ProbeReport r = c4_probe_experiment(o_.trials, o_.seed, tol_, o_.threads);
        emit(Json{{"trials", r.trials},
                  {"intersecting", r.intersecting},
                  {"midpoint_ok", r.midpoint_ok},
                  {"failures", r.failures},
                  {"ok", r.intersecting == r.trials && r.midpoint_ok == r.trials}});
        return r.intersecting == r.trials && r.midpoint_ok == r.trials ? 0 : kExitFailed;
    }

    int verify() {
        std::vector<CorpusEntry> corpus;
        if (o_.in.empty()) corpus = standard_corpus(o_.seed, o_.random_count, tol_);
        else corpus.push_back({o_.in, polygon(), false});
        VerifyReport r = verify_corpus(corpus, tol_);
        emit(r.to_json());
        return r.ok() ? 0 : kExitFailed;
    }

    int bench() {
        for (int n : o_.sizes)
            if (n < 3) throw Error(ErrorKind::InvalidArgument, "--sizes entries must be at least 3");
        BenchReport r = run_bench(o_.sizes, o_.seed, tol_);
        emit(r.to_json());
        return !o_.check || (r.linear_ok() && r.nlogn_ok()) ? 0 : kExitFailed;
    }

    int render() {
        ConvexPolygon P = polygon();
        SvgLayers layers;
        layers.disks = false;
        std::optional<MedialAxis> M;
        std::optional<TreeDecomposition> T;
        MisResult r;
        auto axis = [&]() -> const MedialAxis& {
            if (!M) M = compute_medial_axis(P, tol_);
            return *M;
        };
        auto tree = [&]() -> const TreeDecomposition& {
            if (!T) T = build_tree_decomposition(P, axis(), tol_);
            return *T;
        };
        for (const std::string& l : o_.layers) {
            if (l == "disks") {
                layers.disks = true;
            } else if (l == "medial-axis") {
                layers.medial_axis = &axis();
            } else if (l == "tree") {
                layers.tree = &tree();
            } else if (l == "mis") {
                layers.disks = true;
                r = mis_dp(graph_from_decomposition(P, tree(), mode_, tol_), tree());
                layers.mis_witness = &r.witness;
            }
        }
        emit_text(render_svg(P, layers));
        return 0;
    }

private:
    Json input() const {
        if (o_.in.empty()) throw Error(ErrorKind::InvalidArgument, "--in is required");
        return read_json(o_.in);
    }
    ConvexPolygon polygon() const { return polygon_from_json(input(), tol_); }

    void emit(const Json& j) { emit_text(j.dump(2) + "\n"); }
    void emit_text(const std::string& s) {
        if (o_.out.empty()) out_ << s;
        else write_text(o_.out, s);
    }

    const Options& o_;
    std::ostream& out_;
    Tolerance tol_;
    IntersectionMode mode_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Side disks of convex polygons: intersection graphs, tree decompositions, extremal families"};
    app.require_subcommand(1);
    app.add_option("--out", o.out, "Output file (default stdout)");
    app.add_option("--mode", o.mode, "Disk intersection mode")->check(CLI::IsMember({"closed", "open"}));
    app.add_option("--eps", o.eps, "Relative tolerance (default 1e-9 or SIDEDISK_EPS)");

    auto sub = [&](const char* name, const char* desc) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };
    auto with_in = [&](CLI::App* s, bool required = true) {
        CLI::Option* opt = s->add_option("--in", o.in, "Input JSON file");
        if (required) opt->required();
        return s;
    };

    CLI::App* gen = sub("gen", "Generate a polygon");
    gen->add_option("kind", o.kind, "extremal, regular or random")
        ->required()
        ->check(CLI::IsMember({"extremal", "regular", "random"}));
    gen->add_option("--n", o.n, "Number of sides");
    gen->add_option("--seed", o.seed, "Seed for random polygons");

    CLI::App* axis = with_in(sub("medial-axis", "Medial axis of a polygon"));
    CLI::App* td = with_in(sub("treedecomp", "Width-3 tree decomposition of the side disk graph"));

    CLI::App* graph = with_in(sub("graph", "Side disk intersection graph"));
    graph->add_option("--method", o.method, "fast or oracle")->check(CLI::IsMember({"fast", "oracle"}));
    graph->add_option("--format", o.format, "json, edges or dot")->check(CLI::IsMember({"json", "edges", "dot"}));

    CLI::App* mis = with_in(sub("mis", "Maximum independent set of the side disk graph"));
    mis->add_option("--method", o.method, "dp or bruteforce")->check(CLI::IsMember({"dp", "bruteforce"}));

    CLI::App* real = with_in(sub("realize", "Polygon realizing an outerplanar graph given as {n, chords}"));

    CLI::App* probe = sub("probe-c4", "Random quadrilateral experiment on opposite side disks");
    probe->add_option("--trials", o.trials, "Number of quadrilaterals");
    probe->add_option("--seed", o.seed, "Seed");
    probe->add_option("--threads", o.threads, "Worker threads (0 = hardware)")->check(CLI::NonNegativeNumber);

    CLI::App* verify = with_in(sub("verify", "Structural checks on one polygon or the standard corpus"), false);
    verify->add_option("--seed", o.seed, "Seed of the random part of the corpus");
    verify->add_option("--random-count", o.random_count, "Random polygons in the corpus")->check(CLI::NonNegativeNumber);

    CLI::App* bench = sub("bench", "Timing of the decomposition pipeline");
    bench->add_option("--sizes", o.sizes, "Polygon sizes")->delimiter(',');
    bench->add_option("--seed", o.seed, "Seed");
    bench->add_flag("--check", o.check, "Exit 1 unless the scaling is within a factor 2");

    CLI::App* render = with_in(sub("render", "SVG figure of a polygon"));
    render->add_option("--layers", o.layers, "disks, medial-axis, mis, tree")
        ->delimiter(',')
        ->check(CLI::IsMember({"disks", "medial-axis", "mis", "tree"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        Runner r(o, out);
        if (gen->parsed()) return r.gen();
        if (axis->parsed()) return r.medial_axis();
        if (td->parsed()) return r.treedecomp();
        if (graph->parsed()) return r.graph();
        if (mis->parsed()) return r.mis();
        if (real->parsed()) return r.realize_graph();
        if (probe->parsed()) return r.probe();
        if (verify->parsed()) return r.verify();
        if (bench->parsed()) return r.bench();
        if (render->parsed()) return r.render();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        if (e.kind() == ErrorKind::Io) return kExitIo;
        if (e.kind() == ErrorKind::InvalidArgument) return kExitUsage;
        return kExitFailed;
    }
    return kExitUsage;
}

}  // namespace sidedisk
