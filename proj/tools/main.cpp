#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <anagraph/adversary.hpp>
#include <anagraph/colouring.hpp>
#include <anagraph/errors.hpp>
#include <anagraph/graphs.hpp>
#include <anagraph/json_io.hpp>
#include <anagraph/oracle.hpp>
#include <anagraph/words.hpp>

namespace {

using nlohmann::json;
using namespace anagraph;

std::string digest_of(std::string_view text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[24];
    std::snprintf(buf, sizeof buf, "fnv1a:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

// Empty path or "-" selects stdin/stdout so gen | verify pipelines work.
std::string read_text(const std::string& path) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw InvalidInput("cannot read file: " + path);
        buf << in.rdbuf();
    }
    return std::move(buf).str();
}

void write_text(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write file: " + path);
    out << text;
}

void emit_json(const json& j, const std::string& path = {}) {
    write_text(j.dump(2) + "\n", path);
}

struct Loaded {
    json doc;
    std::string digest;
};

Loaded load_json(const std::string& path) {
    std::string text = read_text(path);
    return {parse_json_text(text), digest_of(text)};
}

// elapsed_ms is the only field outside the determinism contract.
json make_report(const std::string& command, json inputs, std::string_view outcome, json payload,
                 double elapsed_ms) {
    return json{{"command", command},
                {"inputs", std::move(inputs)},
                {"outcome", outcome},
                {"payload", std::move(payload)},
                {"elapsed_ms", elapsed_ms}};
}

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i > 0) s += ' ';
        s += argv[i];
    }
    return s;
}

PathDecomposition path_graph_decomposition(std::uint32_t n) {
    PathDecomposition d;
    if (n == 1) {
        d.bags = {{0}};
        return d;
    }
    for (VertexId i = 0; i + 1 < n; ++i) d.bags.push_back({i, i + 1});
    return d;
}

PathDecomposition single_bag(std::uint32_t size) {
    std::vector<VertexId> bag(size);
    std::iota(bag.begin(), bag.end(), VertexId{0});
    return PathDecomposition{{std::move(bag)}};
}

struct GenOptions {
    std::uint32_t n = 0;
    std::uint32_t k = 3;
    std::string out;
    std::string decomp_out;
};

int run_gen(const std::string& family, const GenOptions& opt) {
    Graph g;
    GraphMeta meta;
    PathDecomposition decomp;
    if (family == "ladder") {
        g = build_ladder(opt.n).first;
        meta = {"ladder", opt.n, std::nullopt};
        if (!opt.decomp_out.empty())
            decomp = opt.n >= 2 ? ladder_decomposition(opt.n) : single_bag(2);
    } else if (family == "chain") {
        g = build_clique_chain(opt.n, opt.k).first;
        meta = {"clique_chain", opt.n, opt.k};
        if (!opt.decomp_out.empty())
            decomp = opt.n >= 2 ? clique_chain_decomposition(opt.n, opt.k) : single_bag(opt.k);
    } else {
        g = build_path_graph(opt.n);
        meta = {"path", opt.n, std::nullopt};
        if (!opt.decomp_out.empty()) decomp = path_graph_decomposition(opt.n);
    }
    emit_json(graph_to_json(g, meta), opt.out);
    if (!opt.decomp_out.empty()) emit_json(decomposition_to_json(decomp), opt.decomp_out);
    std::cerr << "generated " << family << ": " << g.vertex_count() << " vertices, "
              << g.edge_count() << " edges\n";
    return 0;
}

int run_colour_dnc(const std::string& graph_path, const std::string& decomp_path,
                   const std::string& out) {
    auto graph_in = load_json(graph_path);
    GraphFile gf = graph_from_json(graph_in.doc);
    auto decomp_in = load_json(decomp_path);
    PathDecomposition d = decomposition_from_json(decomp_in.doc);
    Colouring phi = dnc_colour(gf.graph, d);
    emit_json(colouring_to_json(phi), out);
    std::cerr << "coloured " << phi.size() << " vertices with " << phi.alphabet.size
              << " colours\n";
    return 0;
}

int run_colour_asf(std::uint32_t n, std::uint64_t budget, const std::string& out) {
    Colouring phi = colour_path_asf(n, budget);
    emit_json(colouring_to_json(phi), out);
    std::cerr << "coloured the " << n << "-vertex path with " << phi.alphabet.size
              << " colours\n";
    return 0;
}

int run_verify(const std::string& command, const std::string& graph_path,
               const std::string& colouring_path, std::uint64_t cap) {
    Timer timer;
    auto graph_in = load_json(graph_path);
    GraphFile gf = graph_from_json(graph_in.doc);
    auto col_in = load_json(colouring_path);
    Colouring phi = colouring_from_json(col_in.doc);

    Verdict v = verify_anagram_free(gf.graph, phi, cap);
    json payload{{"paths_checked", v.paths_checked}};
    std::string outcome;
    int code = 0;
    switch (v.kind) {
        case Verdict::Kind::Ok:
            outcome = "ok";
            break;
        case Verdict::Kind::Counterexample: {
            outcome = "counterexample";
            code = 1;
            payload["counterexample"] = v.counterexample;
            ColorString spelled = colour_string_of(phi, v.counterexample);
            payload["colours"] = std::vector<Symbol>(spelled.entries().begin(),
                                                     spelled.entries().end());
            break;
        }
        case Verdict::Kind::Unknown:
            outcome = "unknown";
            code = 3;
            payload["cap"] = cap;
            break;
    }
    json inputs{{"graph", graph_in.digest}, {"colouring", col_in.digest}};
    emit_json(make_report(command, std::move(inputs), outcome, std::move(payload),
                          timer.elapsed_ms()));
    std::cerr << "verify: " << outcome << " after " << v.paths_checked << " paths\n";
    return code;
}

int run_attack(const std::string& which, const std::string& graph_path,
               const std::string& colouring_path) {
    auto graph_in = load_json(graph_path);
    GraphFile gf = graph_from_json(graph_in.doc);
    auto col_in = load_json(colouring_path);
    Colouring phi = colouring_from_json(col_in.doc);

    std::optional<AnagramPath> hit;
    if (which == "ladder") {
        if (gf.meta.family != "ladder" || !gf.meta.n)
            throw InvalidInput("attack ladder expects a graph with meta.family \"ladder\"");
        auto [expected, meta] = build_ladder(*gf.meta.n);
        if (expected.vertex_count() != gf.graph.vertex_count() ||
            !std::ranges::equal(expected.edges(), gf.graph.edges()))
            throw InvalidInput("graph does not match the declared ladder layout");
        hit = find_anagram_ladder(*gf.meta.n, phi);
    } else {
        if (gf.meta.family != "clique_chain" || !gf.meta.n || !gf.meta.k)
            throw InvalidInput("attack chain expects a graph with meta.family \"clique_chain\"");
        auto [expected, meta] = build_clique_chain(*gf.meta.n, *gf.meta.k);
        if (expected.vertex_count() != gf.graph.vertex_count() ||
            !std::ranges::equal(expected.edges(), gf.graph.edges()))
            throw InvalidInput("graph does not match the declared clique chain layout");
        hit = find_anagram_clique_chain(*gf.meta.n, *gf.meta.k, phi);
    }
    if (!hit) {
        std::cerr << "no anagram path produced for this colouring\n";
        return 1;
    }
    emit_json(anagram_path_to_json(*hit));
    std::cerr << "found an anagram path of " << hit->vertices.size() << " vertices ("
              << hit->source << ")\n";
    return 0;
}

int run_oracle_min_colours(const std::string& command, const std::string& graph_path,
                           std::int32_t max_colours, std::uint64_t cap) {
    Timer timer;
    auto graph_in = load_json(graph_path);
    GraphFile gf = graph_from_json(graph_in.doc);
    json inputs{{"graph", graph_in.digest}};
    try {
        auto r = brute_min_afcn(gf.graph, max_colours, cap);
        if (r) {
            json payload{{"min_colours", r->colours}, {"witness", colouring_to_json(r->witness)}};
            emit_json(make_report(command, std::move(inputs), "ok", std::move(payload),
                                  timer.elapsed_ms()));
            std::cerr << "minimum is " << r->colours << " colours\n";
            return 0;
        }
        emit_json(make_report(command, std::move(inputs), "none",
                              json{{"max_colours", max_colours}}, timer.elapsed_ms()));
        std::cerr << "no anagram-free colouring with at most " << max_colours << " colours\n";
        return 1;
    } catch (const EnumerationOverflow& e) {
        emit_json(make_report(command, std::move(inputs), "unknown", json{{"cap", e.cap}},
                              timer.elapsed_ms()));
        std::cerr << "cap of " << e.cap << " path visits exhausted\n";
        return 3;
    }
}

int run_oracle_asf_max(const std::string& command, std::int32_t sigma, std::uint64_t budget) {
    Timer timer;
    try {
        AsfMaxResult r = brute_asf_max(sigma, budget);
        json payload{{"max_length", r.max_length}, {"witness", r.longest}};
        emit_json(make_report(command, json::object(), "ok", std::move(payload),
                              timer.elapsed_ms()));
        std::cerr << "longest abelian-square-free word over " << sigma << " symbols: "
                  << r.max_length << "\n";
        return 0;
    } catch (const BudgetExceeded& e) {
        emit_json(make_report(command, json::object(), "unknown", json{{"budget", e.budget}},
                              timer.elapsed_ms()));
        std::cerr << "work budget of " << e.budget << " exhausted\n";
        return 3;
    }
}

int run_oracle_anagram_path(const std::string& command, const std::string& graph_path,
                            const std::string& colouring_path, std::uint64_t cap) {
    Timer timer;
    auto graph_in = load_json(graph_path);
    GraphFile gf = graph_from_json(graph_in.doc);
    auto col_in = load_json(colouring_path);
    Colouring phi = colouring_from_json(col_in.doc);
    json inputs{{"graph", graph_in.digest}, {"colouring", col_in.digest}};
    try {
        auto r = brute_find_anagram_path(gf.graph, phi, cap);
        if (r) {
            ColorString spelled = colour_string_of(phi, *r);
            json payload{{"path", *r},
                         {"colours", std::vector<Symbol>(spelled.entries().begin(),
                                                         spelled.entries().end())}};
            emit_json(make_report(command, std::move(inputs), "found", std::move(payload),
                                  timer.elapsed_ms()));
            std::cerr << "found an anagram path of " << r->size() << " vertices\n";
            return 0;
        }
        emit_json(make_report(command, std::move(inputs), "none", nullptr, timer.elapsed_ms()));
        std::cerr << "colouring is anagram-free\n";
        return 1;
    } catch (const EnumerationOverflow& e) {
        emit_json(make_report(command, std::move(inputs), "unknown", json{{"cap", e.cap}},
                              timer.elapsed_ms()));
        std::cerr << "cap of " << e.cap << " path visits exhausted\n";
        return 3;
    }
}

struct SweepOptions {
    std::uint32_t n = 0;
    std::uint32_t k = 3;
    std::int32_t sigma = 0;
    std::uint32_t trials = 500;
    std::uint64_t seed = 0;
};

// Every trial draws a uniform colouring and must yield a path that
// survives the full structural check; anything else counts as a failure.
int run_sweep(const std::string& command, const std::string& which, const SweepOptions& opt) {
    Timer timer;
    Graph g;
    if (which == "ladder")
        g = build_ladder(opt.n).first;
    else
        g = build_clique_chain(opt.n, opt.k).first;
    if (opt.sigma <= 0) throw InvalidInput("sigma must be positive");

    std::mt19937_64 rng(opt.seed);
    std::uint64_t found = 0;
    std::uint64_t failures = 0;
    for (std::uint32_t t = 0; t < opt.trials; ++t) {
        std::vector<Symbol> assignment(g.vertex_count());
        for (auto& c : assignment) c = static_cast<Symbol>(rng() % opt.sigma);
        Colouring phi(Alphabet{opt.sigma}, std::move(assignment));
        std::optional<AnagramPath> hit = which == "ladder"
                                             ? find_anagram_ladder(opt.n, phi)
                                             : find_anagram_clique_chain(opt.n, opt.k, phi);
        if (hit && check_anagram_path(g, phi, *hit).ok())
            ++found;
        else
            ++failures;
    }
    json payload{{"trials", opt.trials}, {"found", found}, {"failures", failures}};
    std::string outcome = failures == 0 ? "ok" : "failed";
    emit_json(make_report(command, json::object(), outcome, std::move(payload),
                          timer.elapsed_ms()));
    std::cerr << "sweep: " << found << "/" << opt.trials << " trials produced verified paths\n";
    return failures == 0 ? 0 : 1;
}

int run_bounds(std::uint32_t n_max, std::uint32_t oracle_n_max, std::uint64_t cap) {
    std::cout << "n,two_n,log2_n_plus_1,min_colours\n";
    for (std::uint32_t n = 1; n <= n_max; ++n) {
        char lower[32];
        std::snprintf(lower, sizeof lower, "%.6g", std::log2(n + 1.0));
        std::string oracle_field;
        if (n <= oracle_n_max) {
            auto [g, meta] = build_ladder(n);
            try {
                auto r = brute_min_afcn(g, 16, cap);
                if (r) oracle_field = std::to_string(r->colours);
            } catch (const EnumerationOverflow&) {
                std::cerr << "n=" << n << ": oracle cap exhausted, leaving the column blank\n";
            }
        }
        std::cout << n << "," << 2 * n << "," << lower << "," << oracle_field << "\n";
        std::cerr << "bounds: n=" << n << " done\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"anagram-free graph colouring toolkit"};
    app.require_subcommand(1);
    const std::string command = join_args(argc, argv);

    int exit_code = 0;

    auto* gen = app.add_subcommand("gen", "generate a graph family instance as JSON");
    gen->require_subcommand(1);
    GenOptions gen_opt;
    const std::pair<const char*, const char*> families[] = {
        {"ladder", "two-rail ladder with both diagonals"},
        {"chain", "chain of completely joined k-cliques"},
        {"path", "simple path"},
    };
    for (auto [family, blurb] : families) {
        auto* sub = gen->add_subcommand(family, blurb);
        sub->add_option("--n", gen_opt.n, "instance size")->required();
        if (family == std::string_view("chain"))
            sub->add_option("--k", gen_opt.k, "clique size")->required();
        sub->add_option("--out", gen_opt.out, "write graph JSON here instead of stdout");
        sub->add_option("--decomp-out", gen_opt.decomp_out,
                        "also write the canonical path decomposition to this file");
        sub->callback([&gen_opt, family] { run_gen(family, gen_opt); });
    }

    auto* colour = app.add_subcommand("colour", "produce colourings");
    colour->require_subcommand(1);
    {
        auto* dnc = colour->add_subcommand("dnc",
                                           "divide-and-conquer colouring from a decomposition");
        static std::string graph_path, decomp_path, out_path;
        dnc->add_option("--graph", graph_path, "graph JSON file (default stdin)");
        dnc->add_option("--decomp", decomp_path, "path decomposition JSON file")->required();
        dnc->add_option("--out", out_path, "write colouring JSON here instead of stdout");
        dnc->callback([] { run_colour_dnc(graph_path, decomp_path, out_path); });

        auto* asf = colour->add_subcommand("asf-path",
                                           "colour a path with an abelian-square-free word");
        static std::uint32_t asf_n = 0;
        static std::uint64_t asf_budget = kDefaultAsfBudget;
        static std::string asf_out;
        asf->add_option("--n", asf_n, "path length in vertices")->required();
        asf->add_option("--budget", asf_budget, "word search work budget");
        asf->add_option("--out", asf_out, "write colouring JSON here instead of stdout");
        asf->callback([] { run_colour_asf(asf_n, asf_budget, asf_out); });
    }

    {
        auto* verify = app.add_subcommand("verify", "exhaustively check a colouring");
        static std::string graph_path, colouring_path;
        static std::uint64_t cap = 10'000'000;
        verify->add_option("--graph", graph_path, "graph JSON file (default stdin)");
        verify->add_option("--colouring", colouring_path, "colouring JSON file")->required();
        verify->add_option("--cap", cap, "maximum simple paths to enumerate");
        verify->callback(
            [&] { exit_code = run_verify(command, graph_path, colouring_path, cap); });
    }

    auto* attack = app.add_subcommand("attack", "construct an anagram path for a colouring");
    attack->require_subcommand(1);
    for (const char* which : {"ladder", "chain"}) {
        auto* sub = attack->add_subcommand(which, "family-specific adversary");
        static std::string graph_path, colouring_path;
        sub->add_option("--graph", graph_path, "graph JSON file (default stdin)");
        sub->add_option("--colouring", colouring_path, "colouring JSON file")->required();
        sub->callback(
            [&exit_code, which] { exit_code = run_attack(which, graph_path, colouring_path); });
    }

    auto* oracle = app.add_subcommand("oracle", "exhaustive reference computations");
    oracle->require_subcommand(1);
    {
        auto* mc = oracle->add_subcommand("min-colours", "minimum anagram-free colour count");
        static std::string graph_path;
        static std::int32_t max_colours = 8;
        static std::uint64_t cap = 1'000'000'000;
        mc->add_option("--graph", graph_path, "graph JSON file (default stdin)");
        mc->add_option("--max-colours", max_colours, "largest palette to try");
        mc->add_option("--cap", cap, "total path-visit budget");
        mc->callback([&] { exit_code = run_oracle_min_colours(command, graph_path, max_colours,
                                                              cap); });

        auto* am = oracle->add_subcommand("asf-max",
                                          "longest abelian-square-free word by exhaustion");
        static std::int32_t sigma = 0;
        static std::uint64_t budget = kDefaultAsfBudget;
        am->add_option("--sigma", sigma, "alphabet size")->required();
        am->add_option("--budget", budget, "search work budget");
        am->callback([&] { exit_code = run_oracle_asf_max(command, sigma, budget); });

        auto* ap = oracle->add_subcommand("anagram-path",
                                          "first anagram path in enumeration order");
        static std::string ap_graph, ap_colouring;
        static std::uint64_t ap_cap = 10'000'000;
        ap->add_option("--graph", ap_graph, "graph JSON file (default stdin)");
        ap->add_option("--colouring", ap_colouring, "colouring JSON file")->required();
        ap->add_option("--cap", ap_cap, "maximum simple paths to enumerate");
        ap->callback(
            [&] { exit_code = run_oracle_anagram_path(command, ap_graph, ap_colouring, ap_cap); });
    }
    {
        static SweepOptions sweep_opt;
        auto* ls = oracle->add_subcommand("ladder-sweep",
                                          "adversary success rate over random ladder colourings");
        ls->add_option("--n", sweep_opt.n, "ladder columns")->required();
        ls->add_option("--sigma", sweep_opt.sigma, "alphabet size")->required();
        ls->add_option("--trials", sweep_opt.trials, "number of random colourings");
        ls->add_option("--seed", sweep_opt.seed, "RNG seed");
        ls->callback([&] { exit_code = run_sweep(command, "ladder", sweep_opt); });

        auto* cs = oracle->add_subcommand("chain-sweep",
                                          "adversary success rate over random chain colourings");
        cs->add_option("--n", sweep_opt.n, "chain length")->required();
        cs->add_option("--k", sweep_opt.k, "clique size")->required();
        cs->add_option("--sigma", sweep_opt.sigma, "alphabet size")->required();
        cs->add_option("--trials", sweep_opt.trials, "number of random colourings");
        cs->add_option("--seed", sweep_opt.seed, "RNG seed");
        cs->callback([&] { exit_code = run_sweep(command, "chain", sweep_opt); });
    }

    {
        auto* bounds = app.add_subcommand("bounds", "CSV of colour bounds against n");
        static std::string family;
        static std::uint32_t n_max = 0;
        static std::uint32_t oracle_n_max = 4;
        static std::uint64_t cap = 1'000'000'000;
        bounds->add_option("--family", family, "graph family")
            ->required()
            ->check(CLI::IsMember({"ladder"}));
        bounds->add_option("--n-max", n_max, "largest n to report")->required();
        bounds->add_option("--oracle-n-max", oracle_n_max,
                           "run the exact oracle for n up to this value");
        bounds->add_option("--cap", cap, "oracle path-visit budget per n");
        bounds->callback([&] { exit_code = run_bounds(n_max, oracle_n_max, cap); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        json err{{"error", {{"kind", "usage"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const InvalidInput& e) {
        json err{{"error", {{"kind", "invalid-input"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const PreconditionViolation& e) {
        json err{{"error", {{"kind", "precondition-violation"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        json err{{"error", {{"kind", "budget-exceeded"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 3;
    } catch (const EnumerationOverflow& e) {
        json err{{"error", {{"kind", "enumeration-overflow"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 3;
    }
    return exit_code;
}
