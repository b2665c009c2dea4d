// cokl: command-line front end.
//
// Exit codes: 0 success, 1 negative answer (with a witness on stdout when
// one exists), 2 usage or input error.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "cokl.hpp"

namespace {

using namespace cokl;

enum class Exit : int { ok = 0, negative = 1, usage = 2 };

struct Input {
    std::string path = "-";
    std::string format = "edges";
};

/// Parsed input: the graph, plus its cotree when the input was a tree or the
/// graph turned out to be a cograph.
struct Loaded {
    Graph graph;
    std::optional<Cotree> tree;
    std::optional<P4Witness> p4;
    VertexLabels labels;
};

std::string read_all(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Loaded load(const Input& in, bool need_tree = true) {
    const std::string text = read_all(in.path);
    Loaded out{Graph{}, std::nullopt, std::nullopt, {}};
    if (in.format == "cotree" || in.format == "cotree-json") {
        Cotree t = in.format == "cotree" ? parse_cotree_text(text) : cotree_from_json([&] {
            try {
                return json::parse(text);
            } catch (const json::parse_error& e) {
                throw parse_error(std::string("invalid JSON: ") + e.what());
            }
        }());
        out.graph = evaluate_cotree(t);
        if (t.has_names()) out.graph = out.graph.with_labels(t.names());
        out.labels = labels_of(t);
        out.tree = std::move(t);
        return out;
    }
    out.graph = in.format == "g6" ? parse_graph6(text) : parse_edge_list(text);
    out.labels = labels_of(out.graph);
    if (out.graph.order() == 0) throw parse_error("graph has no vertices");
    if (need_tree) {
        auto r = build_cotree(out.graph);
        if (auto* t = std::get_if<Cotree>(&r)) out.tree = std::move(*t);
        else out.p4 = std::get<P4Witness>(r);
    }
    return out;
}

Exit report_p4(const Loaded& in) {
    json j = p4_to_json(*in.p4, in.labels);
    j["cograph"] = false;
    std::cout << j.dump() << '\n';
    return Exit::negative;
}

json edges_of(const Graph& g, const std::vector<vertex>& vs, const VertexLabels& lab) {
    json out = json::array();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j])) out.push_back({lab(vs[i]), lab(vs[j])});
    return out;
}

enum class Method { fast, naive, oracle };

void add_method_flags(CLI::App* cmd, Method& m) {
    auto* g = cmd->add_option_group("method");
    g->add_flag_callback("--fast", [&m] { m = Method::fast; }, "O(n log n) algorithm on the cotree (default)");
    g->add_flag_callback("--naive", [&m] { m = Method::naive; }, "per-node rebuild algorithm");
    g->add_flag_callback("--oracle", [&m] { m = Method::oracle; }, "brute force; works on any graph within budget");
    g->require_option(0, 1);
}

void add_input(CLI::App* cmd, Input& in) {
    cmd->add_option("file", in.path, "input file, or - for standard input")->capture_default_str();
    cmd->add_option("--format", in.format, "input format")
        ->check(CLI::IsMember({"edges", "g6", "cotree", "cotree-json"}))
        ->capture_default_str();
}

// ---------------------------------------------------------------------------

Exit cmd_recognize(const Input& in, bool as_json) {
    Loaded l = load(in);
    if (!l.tree) return report_p4(l);
    if (as_json) std::cout << cotree_to_json(*l.tree).dump() << '\n';
    else std::cout << to_text(*l.tree) << '\n';
    return Exit::ok;
}

Exit cmd_sequence(const Input& in, Method m, bool lambda, bool runs, bool as_json) {
    Loaded l = load(in, m != Method::oracle);
    PartitionSequence s;
    if (m == Method::oracle) {
        s = lambda ? lambda_hat_oracle(l.graph) : kappa_hat_oracle(l.graph);
    } else {
        if (!l.tree) return report_p4(l);
        if (lambda) s = m == Method::naive ? lambda_hat(*l.tree) : conjugate(kappa_hat_fast(*l.tree));
        else s = m == Method::naive ? kappa_hat_naive(*l.tree) : kappa_hat_fast(*l.tree);
    }
    if (as_json) std::cout << sequence_to_json(s).dump() << '\n';
    else std::cout << (runs ? to_run_text(s) : to_text(s)) << '\n';
    return Exit::ok;
}

Exit cmd_check(const Input& in, std::size_t k, std::size_t l, bool oracle) {
    Loaded g = load(in, !oracle);
    json out = {{"k", k}, {"l", l}};
    if (oracle) {
        const bool yes = is_kl_colourable_oracle(g.graph, k, l);
        out["colourable"] = yes;
        std::cout << out.dump() << '\n';
        return yes ? Exit::ok : Exit::negative;
    }
    if (!g.tree) return report_p4(g);
    auto ann = kappa_annotations(*g.tree);
    const bool yes = is_kl_colourable(ann.back(), k, l);
    out["colourable"] = yes;
    out["kappa_l"] = kappa_at(ann.back(), l);
    if (!yes) out["certificate"] = certificate_to_json(find_box_cograph(*g.tree, ann, k + 1, l + 1), g.labels);
    std::cout << out.dump() << '\n';
    return yes ? Exit::ok : Exit::negative;
}

Exit cmd_certify(const Input& in, std::size_t k, std::size_t l) {
    Loaded g = load(in);
    if (!g.tree) return report_p4(g);
    auto answer = certify_non_colourable(*g.tree, k, l);
    if (auto* c = std::get_if<KLColouring>(&answer)) {
        std::cout << json{{"colourable", true}, {"colouring", colouring_to_json(*c, g.labels)}}.dump() << '\n';
        return Exit::ok;
    }
    const auto& cert = std::get<BoxCertificate>(answer);
    json j = {{"colourable", false}, {"certificate", certificate_to_json(cert, g.labels)}};
    j["certificate"]["edges"] = edges_of(g.graph, cert.vertices, g.labels);
    std::cout << j.dump() << '\n';
    return Exit::negative;
}

Exit cmd_ferrers(const Input& in, const std::string& render, bool naive) {
    Loaded g = load(in);
    if (!g.tree) return report_p4(g);
    FerrersRepresentation f = naive ? build_ferrers_naive(*g.tree) : build_ferrers(*g.tree);
    std::vector<std::string> names;
    if (g.graph.has_labels())
        for (vertex v = 0; v < g.graph.order(); ++v) names.push_back(g.graph.label(v));
    if (render == "svg") std::cout << render_svg(f, names);
    else if (render == "json") std::cout << ferrers_to_json(f, g.labels).dump() << '\n';
    else std::cout << render_ascii(f, names);
    return Exit::ok;
}

Exit cmd_params(const Input& in, bool oracle) {
    Loaded g = load(in, !oracle);
    PartitionSequence kappa;
    if (oracle) kappa = kappa_hat_oracle(g.graph);
    else if (!g.tree) return report_p4(g);
    else kappa = kappa_hat(*g.tree);
    std::cout << parameters_to_json(parameters_from_kappa(kappa)).dump() << '\n';
    return Exit::ok;
}

// ---------------------------------------------------------------------------

struct BenchOptions {
    std::vector<int> sizes{1000, 10000};
    int trials = 5;
    std::uint64_t seed = 1;
    std::string shape = "random";
    std::string algorithm = "kappa";
};

/// Milliseconds for one call, repeating short calls to get a stable reading.
double time_ms(const std::function<void()>& f) {
    using clock = std::chrono::steady_clock;
    int reps = 0;
    const auto start = clock::now();
    auto elapsed = clock::duration::zero();
    do {
        f();
        ++reps;
        elapsed = clock::now() - start;
    } while (elapsed < std::chrono::milliseconds(20));
    return std::chrono::duration<double, std::milli>(elapsed).count() / reps;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

Exit cmd_bench(const BenchOptions& o) {
    std::mt19937_64 rng(o.seed);
    std::cout << "n,naive_ms,fast_ms\n";
    bool agree = true;
    for (int n : o.sizes) {
        std::vector<double> naive, fast;
        for (int trial = 0; trial < o.trials; ++trial) {
            Cotree t = o.shape == "star-of-stars" ? star_of_stars_with_order(n) : random_cotree(n, rng);
            Pseudocotree p = binarize(t);
            if (o.algorithm == "ferrers") {
                FerrersRepresentation a, b;
                naive.push_back(time_ms([&] { a = build_ferrers_naive(t); }));
                fast.push_back(time_ms([&] { b = build_ferrers_fast(p); }));
                agree = agree && a == b;
            } else {
                PartitionSequence a, b;
                naive.push_back(time_ms([&] { a = kappa_hat_naive(t); }));
                fast.push_back(time_ms([&] { b = kappa_hat_fast(p); }));
                agree = agree && a == b;
            }
        }
        std::ostringstream line;
        line.precision(6);
        line << n << ',' << median(naive) << ',' << median(fast);
        std::cout << line.str() << '\n';
    }
    if (!agree) {
        std::cerr << "cokl: naive and fast results differ\n";
        return Exit::negative;
    }
    return Exit::ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"(k,l)-colourings, sequence invariants and Ferrers diagrams of cographs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "cokl 1.0");

    Input in;
    Method method = Method::fast;
    std::size_t k = 0, l = 0;
    bool as_json = false, runs = false;
    std::function<Exit()> action;

    auto* recognize = app.add_subcommand("recognize", "print the cotree, or an induced P4");
    add_input(recognize, in);
    recognize->add_flag("--json", as_json, "emit the cotree as JSON");
    recognize->callback([&] { action = [&] { return cmd_recognize(in, as_json); }; });

    for (bool lambda : {false, true}) {
        auto* seq = app.add_subcommand(lambda ? "lambda" : "kappa", lambda ? "print lambda-hat" : "print kappa-hat");
        add_input(seq, in);
        add_method_flags(seq, method);
        seq->add_flag("--runs", runs, "run-length form, e.g. 3^2,1^1");
        seq->add_flag("--json", as_json, "JSON array");
        seq->callback([&, lambda] { action = [&, lambda] { return cmd_sequence(in, method, lambda, runs, as_json); }; });
    }

    bool oracle = false;
    auto* check = app.add_subcommand("check", "decide (k,l)-colourability");
    add_input(check, in);
    check->add_option("-k", k, "number of independent sets")->required();
    check->add_option("-l", l, "number of cliques")->required();
    check->add_flag("--oracle", oracle, "brute force on any graph within budget");
    check->callback([&] { action = [&] { return cmd_check(in, k, l, oracle); }; });

    auto* certify = app.add_subcommand("certify", "a (k,l)-colouring, or a (k+1)x(l+1) box cograph");
    add_input(certify, in);
    certify->add_option("-k", k, "number of independent sets")->required();
    certify->add_option("-l", l, "number of cliques")->required();
    certify->callback([&] { action = [&] { return cmd_certify(in, k, l); }; });

    std::string render = "ascii";
    bool naive = false;
    auto* ferrers = app.add_subcommand("ferrers", "Ferrers diagram representation");
    add_input(ferrers, in);
    auto* render_group = ferrers->add_option_group("render");
    render_group->add_flag_callback("--ascii", [&] { render = "ascii"; }, "text grid (default)");
    render_group->add_flag_callback("--svg", [&] { render = "svg"; }, "SVG document");
    render_group->add_flag_callback("--json", [&] { render = "json"; }, "array of rows");
    render_group->require_option(0, 1);
    ferrers->add_flag("--naive", naive, "use the per-node rebuild builder");
    ferrers->callback([&] { action = [&] { return cmd_ferrers(in, render, naive); }; });

    auto* params = app.add_subcommand("params", "chi, theta, bichromatic and cochromatic numbers");
    add_input(params, in);
    params->add_flag("--oracle", oracle, "brute force on any graph within budget");
    params->callback([&] { action = [&] { return cmd_params(in, oracle); }; });

    BenchOptions bench_opt;
    auto* bench = app.add_subcommand("bench", "time naive and fast variants; CSV on stdout");
    bench->add_option("-n,--sizes", bench_opt.sizes, "vertex counts")->delimiter(',')->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--trials", bench_opt.trials, "trials per size (median reported)")->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--seed", bench_opt.seed, "generator seed")->capture_default_str();
    bench->add_option("--shape", bench_opt.shape, "input family")
        ->check(CLI::IsMember({"random", "star-of-stars"}))
        ->capture_default_str();
    bench->add_option("--algorithm", bench_opt.algorithm, "what to time")
        ->check(CLI::IsMember({"kappa", "ferrers"}))
        ->capture_default_str();
    bench->callback([&] { action = [&] { return cmd_bench(bench_opt); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(Exit::usage);
    }

    try {
        return static_cast<int>(action());
    } catch (const parse_error& e) {
        std::cerr << "cokl: " << e.what() << '\n';
    } catch (const precondition_error& e) {
        std::cerr << "cokl: " << e.what() << '\n';
    } catch (const budget_exceeded& e) {
        std::cerr << "cokl: " << e.what() << '\n';
    }
    return static_cast<int>(Exit::usage);
}
