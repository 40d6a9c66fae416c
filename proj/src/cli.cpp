#include "vulnkit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vulnkit/branching.hpp"
#include "vulnkit/errors.hpp"
#include "vulnkit/interval.hpp"
#include "vulnkit/kernels.hpp"
#include "vulnkit/oracle.hpp"
#include "vulnkit/random_instances.hpp"
#include "vulnkit/reductions.hpp"
#include "vulnkit/special_classes.hpp"

namespace vulnkit::cli {

using json = nlohmann::ordered_json;

const char* to_string(Problem problem) {
    switch (problem) {
    case Problem::vi: return "vi";
    case Problem::wvi: return "wvi";
    case Problem::coc: return "coc";
    case Problem::wcoc: return "wcoc";
    }
    return "?";
}

Problem parse_problem(const std::string& name) {
    for (Problem p : {Problem::vi, Problem::wvi, Problem::coc, Problem::wcoc})
        if (name == to_string(p))
            return p;
    throw UsageError("unknown problem '" + name + "'");
}

bool is_integrity(Problem problem) { return problem == Problem::vi || problem == Problem::wvi; }

const std::vector<std::string>& algorithm_names() {
    static const std::vector<std::string> names = {"oracle",   "branch", "kernel-branch", "interval",
                                                   "split",    "complete", "auto"};
    return names;
}

namespace {

struct ResolvedParams {
    Weight p = 0;
    Weight k = 0;
    Weight l = 0;
};

ResolvedParams resolve_params(const ParsedInstance& instance, Problem problem, const Parameters& given) {
    if (is_integrity(problem) && (given.k || given.l))
        throw UsageError(std::string("-k/-l do not apply to ") + to_string(problem) + "; use -p");
    if (!is_integrity(problem) && given.p)
        throw UsageError(std::string("-p does not apply to ") + to_string(problem) + "; use -k and -l");
    auto pick = [&](const std::optional<Weight>& flag, const char* name) {
        if (flag)
            return *flag;
        if (auto it = instance.params.find(name); it != instance.params.end())
            return it->second;
        throw UsageError(std::string("missing parameter ") + name +
                         " (give -" + name + " or a 'param " + name + "' line)");
    };
    ResolvedParams r;
    if (is_integrity(problem)) {
        r.p = pick(given.p, "p");
    } else {
        r.k = pick(given.k, "k");
        r.l = pick(given.l, "l");
    }
    return r;
}

std::string resolve_algorithm(const std::string& algorithm, Problem problem, const WeightedGraph& g,
                              bool has_model) {
    if (algorithm != "auto")
        return algorithm;
    if (is_complete(g))
        return "complete";
    if (problem == Problem::vi && g.has_unit_weights() && split_partition(g))
        return "split";
    if (has_model)
        return "interval";
    return "kernel-branch";
}

void add_search_stats(RunResult& r, const SearchStats& s) {
    r.stats.emplace_back("nodesExpanded", static_cast<std::int64_t>(s.nodes_expanded));
    r.stats.emplace_back("maxDepth", static_cast<std::int64_t>(s.max_depth));
    r.stats.emplace_back("edgeBoundRejected", s.edge_bound_rejected);
}

const char* to_string(KernelOutcome outcome) {
    switch (outcome) {
    case KernelOutcome::reduced: return "reduced";
    case KernelOutcome::immediate_yes: return "immediate-yes";
    case KernelOutcome::immediate_no: return "immediate-no";
    }
    return "?";
}

void run_algorithm(RunResult& r, const std::string& algorithm, const WeightedGraph& g,
                   const std::optional<IntervalModel>& model, const ResolvedParams& prm) {
    const bool integrity = is_integrity(r.problem);
    if (algorithm == "oracle") {
        if (integrity) {
            auto opt = oracle_wvi(g);
            r.stats.emplace_back("iota", opt.iota);
            r.yes = opt.iota <= prm.p;
            r.witness = std::move(opt.witness);
        } else {
            if (prm.l < 0)
                return;
            auto opt = oracle_wcoc(g, prm.l);
            r.stats.emplace_back("kmin", opt.kmin);
            r.yes = opt.kmin <= prm.k;
            r.witness = std::move(opt.witness);
        }
    } else if (algorithm == "branch") {
        BranchResult b = integrity ? solve_wvi_branch(g, prm.p) : solve_wcoc_branch(g, prm.k, prm.l);
        add_search_stats(r, b.stats);
        r.yes = b.yes;
        r.witness = std::move(b.witness);
    } else if (algorithm == "kernel-branch") {
        PipelineResult b = integrity ? solve_wvi_kernel_branch(g, prm.p)
                                     : solve_wcoc_kernel_branch(g, prm.k, prm.l);
        r.stats.emplace_back("kernelOutcome", std::string(to_string(b.kernel_outcome)));
        r.stats.emplace_back("kernelSize", static_cast<std::int64_t>(b.kernel_size));
        r.stats.emplace_back("reducedParameter", b.reduced_parameter);
        add_search_stats(r, b.stats);
        r.yes = b.yes;
        r.witness = std::move(b.witness);
    } else if (algorithm == "interval") {
        if (!model)
            throw PreconditionError("the interval algorithm needs intervals on the vertex lines");
        if (integrity) {
            auto res = solve_vi_interval(g, *model, prm.p);
            r.yes = res.yes;
            if (res.yes) {
                r.stats.emplace_back("k", res.k);
                r.stats.emplace_back("l", res.l);
            }
            r.witness = std::move(res.witness);
        } else if (r.problem == Problem::coc) {
            auto res = solve_coc_interval_fast(g, *model, prm.k, prm.l, true);
            r.yes = res.yes;
            if (res.yes) {
                r.stats.emplace_back("deletions", res.count);
                r.witness = std::move(*res.witness);
            }
        } else {
            auto res = solve_wcoc_interval(g, *model, prm.k, prm.l);
            r.stats.emplace_back("cliques", static_cast<std::int64_t>(res.dp.dpt.size()) - 1);
            if (!res.dp.dpt.empty())
                r.stats.emplace_back("dpt", res.dp.dpt.back());
            r.yes = res.yes;
            r.witness = std::move(res.witness);
        }
    } else if (algorithm == "split") {
        if (!integrity)
            throw PreconditionError("the split solver decides vertex integrity only");
        auto res = solve_vi_split(g);
        r.stats.emplace_back("iota", res.iota);
        r.yes = res.iota <= prm.p;
        r.witness = std::move(res.witness);
    } else if (algorithm == "complete") {
        if (integrity) {
            auto res = solve_wvi_complete(g);
            r.stats.emplace_back("iota", res.iota);
            r.yes = res.iota <= prm.p;
            r.witness = std::move(res.witness);
        } else {
            auto res = solve_wcoc_complete(g, prm.k, prm.l);
            r.yes = res.yes;
            r.witness = std::move(res.witness);
        }
    } else {
        throw UsageError("unknown algorithm '" + algorithm + "'");
    }
}

WeightedGraph problem_graph(const ParsedInstance& instance, Problem problem) {
    if (problem == Problem::vi || problem == Problem::coc)
        return with_unit_weights(instance.graph);
    return instance.graph;
}

} // namespace

RunResult solve(const ParsedInstance& instance, Problem problem, const std::string& algorithm,
                const Parameters& explicit_params) {
    if (std::find(algorithm_names().begin(), algorithm_names().end(), algorithm) == algorithm_names().end())
        throw UsageError("unknown algorithm '" + algorithm + "'");
    const ResolvedParams prm = resolve_params(instance, problem, explicit_params);
    const WeightedGraph g = problem_graph(instance, problem);

    const auto start = std::chrono::steady_clock::now();
    RunResult r;
    r.problem = problem;
    r.algorithm = resolve_algorithm(algorithm, problem, g, instance.model.has_value());
    run_algorithm(r, r.algorithm, g, instance.model, prm);
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (r.yes)
        r.objective = make_certificate(g, r.witness);
    else
        r.witness.clear();
    return r;
}

namespace {

ParsedInstance load(const std::string& path) {
    if (path == "-")
        return parse_instance(std::cin);
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    return parse_instance(in);
}

std::string join_ids(std::span<const Vertex> ids, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i)
            s += sep;
        s += std::to_string(ids[i] + 1);
    }
    return s;
}

json ids_json(std::span<const Vertex> ids) {
    json a = json::array();
    for (Vertex v : ids)
        a.push_back(v + 1);
    return a;
}

json objective_json(const std::optional<Certificate>& c) {
    if (!c)
        return nullptr;
    return json{{"wX", c->deleted_weight}, {"wcc", c->heaviest_component}};
}

json stats_json(const RunResult& r) {
    json s = json::object();
    for (const auto& [name, value] : r.stats)
        std::visit([&](const auto& v) { s[name] = v; }, value);
    return s;
}

std::string stat_text(const StatValue& value) {
    if (auto b = std::get_if<bool>(&value))
        return *b ? "true" : "false";
    if (auto i = std::get_if<std::int64_t>(&value))
        return std::to_string(*i);
    return std::get<std::string>(value);
}

void print_result(std::ostream& out, const RunResult& r, bool with_witness, bool as_json) {
    if (as_json) {
        json j = {{"schema", 1},
                  {"problem", to_string(r.problem)},
                  {"algorithm", r.algorithm},
                  {"verdict", r.yes ? "yes" : "no"}};
        if (with_witness && r.yes)
            j["witness"] = ids_json(r.witness);
        j["objective"] = objective_json(r.objective);
        j["stats"] = stats_json(r);
        j["wallTimeMs"] = r.wall_ms;
        out << j.dump() << '\n';
        return;
    }
    out << "problem: " << to_string(r.problem) << '\n'
        << "algorithm: " << r.algorithm << '\n'
        << "verdict: " << (r.yes ? "yes" : "no") << '\n';
    if (with_witness && r.yes)
        out << "witness: " << join_ids(r.witness) << '\n';
    if (r.objective)
        out << "objective: wX=" << r.objective->deleted_weight << " wcc=" << r.objective->heaviest_component
            << '\n';
    if (!r.stats.empty()) {
        out << "stats:";
        for (const auto& [name, value] : r.stats)
            out << ' ' << name << '=' << stat_text(value);
        out << '\n';
    }
    out << "time: " << r.wall_ms << " ms\n";
}

/// Options shared by solve, verify and kernelize.
struct InstanceOptions {
    std::string problem;
    std::string input;
    std::optional<Weight> p, k, l;

    void attach(CLI::App* cmd) {
        cmd->add_option("--problem", problem, "vi, wvi, coc or wcoc")
            ->required()
            ->check(CLI::IsMember({"vi", "wvi", "coc", "wcoc"}));
        cmd->add_option("--input", input, "VGRAPH file ('-' for standard input)")->required();
        cmd->add_option("-p", p, "integrity target");
        cmd->add_option("-k", k, "deletion budget");
        cmd->add_option("-l", l, "component weight bound");
    }

    Parameters parameters() const { return {p, k, l}; }
};

int cmd_solve(const InstanceOptions& opt, const std::string& algo, bool witness, bool as_json,
              std::ostream& out) {
    const ParsedInstance instance = load(opt.input);
    RunResult r = solve(instance, parse_problem(opt.problem), algo, opt.parameters());
    print_result(out, r, witness, as_json);
    return 0;
}

int cmd_verify(const InstanceOptions& opt, const std::vector<std::int64_t>& ids, bool as_json,
               std::ostream& out) {
    const ParsedInstance instance = load(opt.input);
    const Problem problem = parse_problem(opt.problem);
    const ResolvedParams prm = resolve_params(instance, problem, opt.parameters());
    const WeightedGraph g = problem_graph(instance, problem);
    VertexSet x;
    for (std::int64_t id : ids) {
        if (id < 1 || id > static_cast<std::int64_t>(g.size()))
            throw UsageError("witness id " + std::to_string(id) + " outside 1.." + std::to_string(g.size()));
        x.push_back(static_cast<Vertex>(id - 1));
    }
    x = normalize_vertex_set(g, x);
    Verification v = is_integrity(problem) ? verify_wvi(g, prm.p, x) : verify_wcoc(g, prm.k, prm.l, x);
    const Certificate c = make_certificate(g, x);
    if (as_json) {
        json j = {{"schema", 1},
                  {"problem", to_string(problem)},
                  {"verified", static_cast<bool>(v)},
                  {"witness", ids_json(x)},
                  {"objective", objective_json(c)}};
        if (!v)
            j["failure"] = v.failure;
        out << j.dump() << '\n';
        return 0;
    }
    out << "verified: " << (v ? "yes" : "no") << '\n'
        << "objective: wX=" << c.deleted_weight << " wcc=" << c.heaviest_component << '\n';
    if (!v)
        out << "reason: " << v.failure << '\n';
    return 0;
}

std::vector<std::string> trace_comments(const KernelTrace& trace) {
    std::vector<std::string> lines;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const KernelStep& s = trace.steps[i];
        std::string line = "step " + std::to_string(i + 1) + ": " + to_string(s.rule);
        if (!s.removed.empty())
            line += " removed=" + std::to_string(s.removed.size());
        if (s.charged != 0)
            line += " charged=" + std::to_string(s.charged);
        if (!s.detail.empty())
            line += " (" + s.detail + ")";
        lines.push_back(std::move(line));
    }
    return lines;
}

int cmd_kernelize(const InstanceOptions& opt, std::ostream& out) {
    const ParsedInstance instance = load(opt.input);
    const Problem problem = parse_problem(opt.problem);
    const ResolvedParams prm = resolve_params(instance, problem, opt.parameters());
    const WeightedGraph g = problem_graph(instance, problem);

    KernelOutcome outcome;
    KernelTrace trace;
    ParsedInstance kernel;
    if (is_integrity(problem)) {
        WviKernel k = kernelize_wvi(g, prm.p);
        outcome = k.outcome;
        trace = std::move(k.trace);
        kernel.graph = std::move(k.graph);
        kernel.params = {{"p", k.p}};
    } else {
        WcocKernel k = kernelize_wcoc(g, prm.k, prm.l);
        outcome = k.outcome;
        trace = std::move(k.trace);
        kernel.graph = std::move(k.graph);
        kernel.params = {{"k", k.k}, {"l", k.l}};
    }
    // decided instances are replaced by a canonical equivalent one
    if (outcome == KernelOutcome::immediate_yes) {
        kernel.graph = WeightedGraph();
    } else if (outcome == KernelOutcome::immediate_no) {
        kernel.graph = WeightedGraph::unit(1);
    }
    if (outcome != KernelOutcome::reduced) {
        if (is_integrity(problem))
            kernel.params = {{"p", 0}};
        else
            kernel.params = {{"k", 0}, {"l", 0}};
    }

    std::vector<std::string> comments = {
        std::string("kernel of a ") + to_string(problem) + " instance: " + to_string(outcome) + ", " +
        std::to_string(g.size()) + " -> " + std::to_string(kernel.graph.size()) + " vertices"};
    for (auto& line : trace_comments(trace))
        comments.push_back(std::move(line));
    emit_instance(out, kernel, comments);
    return 0;
}

std::vector<Weight> parse_int_list(const std::string& text) {
    std::vector<Weight> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoll(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("expected a comma-separated integer list, got '" + text + "'");
        }
    }
    return values;
}

std::optional<Bipartition> two_coloring(const WeightedGraph& g) {
    std::vector<int> color(g.size(), -1);
    for (Vertex s = 0; static_cast<std::size_t>(s) < g.size(); ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0)
            continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::vector<Vertex> queue = {s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex u = queue[head];
            for (Vertex v : g.neighbors(u)) {
                auto& cv = color[static_cast<std::size_t>(v)];
                if (cv < 0) {
                    cv = 1 - color[static_cast<std::size_t>(u)];
                    queue.push_back(v);
                } else if (cv == color[static_cast<std::size_t>(u)]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (Vertex v = 0; static_cast<std::size_t>(v) < g.size(); ++v)
        (color[static_cast<std::size_t>(v)] == 0 ? parts.part_a : parts.part_b).push_back(v);
    return parts;
}

struct GenOptions {
    std::string construction;
    std::string input;
    std::optional<Weight> k;
    std::optional<Weight> q;
    std::string values;
    std::string part_a;
    std::string output;
};

int cmd_gen(const GenOptions& opt, std::ostream& out) {
    const std::string& c = opt.construction;
    auto source = [&] {
        if (opt.input.empty())
            throw UsageError("--construction " + c + " needs a source graph (--input)");
        return load(opt.input).graph;
    };
    auto need = [&](const std::optional<Weight>& v, const char* flag) {
        if (!v)
            throw UsageError("--construction " + c + " needs " + flag);
        return *v;
    };

    ReducedInstance r;
    if (c == "incidence") {
        auto star = incidence_split_graph(source());
        r.graph = std::move(star.graph);
        r.split = std::move(star.partition);
        r.construction = c;
        r.source = "incidence split graph";
    } else if (c == "clique-coc-split") {
        r = reduce_clique_to_coc_split(source(), need(opt.k, "-k"));
    } else if (c == "clique-wvi-split") {
        r = reduce_clique_to_wvi_split(source(), need(opt.k, "-k"));
    } else if (c == "clique-vi-chordal") {
        r = reduce_clique_to_vi_chordal(source(), need(opt.k, "-k"));
    } else if (c == "bcbs-cobipartite") {
        WeightedGraph g = source();
        Bipartition parts;
        if (!opt.part_a.empty()) {
            std::vector<char> in_a(g.size(), 0);
            for (Weight id : parse_int_list(opt.part_a)) {
                if (id < 1 || id > static_cast<Weight>(g.size()))
                    throw UsageError("--part-a id " + std::to_string(id) + " out of range");
                in_a[static_cast<std::size_t>(id - 1)] = 1;
            }
            for (Vertex v = 0; static_cast<std::size_t>(v) < g.size(); ++v)
                (in_a[static_cast<std::size_t>(v)] ? parts.part_a : parts.part_b).push_back(v);
        } else if (auto coloring = two_coloring(g)) {
            parts = std::move(*coloring);
        } else {
            throw PreconditionError("the source graph is not bipartite");
        }
        r = reduce_bcbs_to_vi_cobipartite(g, parts, need(opt.k, "-k"));
    } else if (c == "partition-complete") {
        if (opt.values.empty())
            throw UsageError("--construction partition-complete needs --values");
        r = reduce_partition_to_wcoc_complete(parse_int_list(opt.values));
    } else if (c == "clique-coc-ell") {
        r = reduce_clique_to_coc_ell(source(), opt.q ? *opt.q : need(opt.k, "-q"));
    } else {
        throw UsageError("unknown construction '" + c + "'");
    }

    std::vector<std::string> comments = {"construction: " + r.construction, "source: " + r.source};
    if (!r.problem.empty())
        comments.push_back("problem: " + r.problem);
    if (!r.params.empty()) {
        std::string line = "params:";
        // p first, then k before l
        for (const char* name : {"p", "k", "l"})
            if (auto it = r.params.find(name); it != r.params.end())
                line += std::string(" ") + name + "=" + std::to_string(it->second);
        comments.push_back(line);
    }
    for (const auto& tag : r.tags)
        comments.push_back("tag: " + tag);
    if (r.split)
        comments.push_back("split: clique=" + join_ids(r.split->clique, ",") +
                           " independent=" + join_ids(r.split->independent, ","));
    if (r.bipartition)
        comments.push_back("complement bipartition: a=" + join_ids(r.bipartition->part_a, ",") +
                           " b=" + join_ids(r.bipartition->part_b, ","));

    ParsedInstance instance{r.graph, std::nullopt, r.params};
    if (opt.output.empty()) {
        emit_instance(out, instance, comments);
    } else {
        std::ofstream file(opt.output);
        if (!file)
            throw UsageError("cannot write '" + opt.output + "'");
        emit_instance(file, instance, comments);
    }
    return 0;
}

struct BenchOptions {
    std::uint64_t seed = 1;
    std::size_t count = 100;
    std::size_t max_n = 10;
    bool verbose = false;
    bool as_json = false;
};

/// Cross-checks every applicable algorithm on a seeded corpus.
int cmd_bench(const BenchOptions& opt, std::ostream& out) {
    std::size_t agreements = 0;
    std::size_t witness_failures = 0;
    std::size_t bound_violations = 0;
    json items = json::array();
    const auto start = std::chrono::steady_clock::now();

    for (std::size_t item = 0; item < opt.count; ++item) {
        Rng rng(opt.seed * 1000003 + item);
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(opt.max_n, 1))(rng);
        const bool integrity = item % 2 == 0;
        const bool interval = item % 4 >= 2;
        ParsedInstance instance;
        if (interval) {
            IntervalModel model = random_interval_model(rng, n, 2 * static_cast<std::int64_t>(n), 4);
            instance.graph = intersection_graph(model, random_graph(rng, n, 0.0, 4).weights());
            instance.model = std::move(model);
        } else {
            instance.graph = random_graph(rng, n, std::uniform_real_distribution<double>(0.1, 0.6)(rng), 4);
        }
        std::uniform_int_distribution<Weight> small(0, 6);
        Parameters prm;
        if (integrity) {
            prm.p = std::uniform_int_distribution<Weight>(0, 10)(rng);
        } else {
            prm.k = small(rng);
            prm.l = small(rng);
        }
        const Problem problem = integrity ? Problem::wvi : Problem::wcoc;

        std::vector<std::string> algos = {"oracle", "branch", "kernel-branch"};
        if (interval)
            algos.push_back("interval");
        std::vector<RunResult> results;
        for (const auto& a : algos)
            results.push_back(solve(instance, problem, a, prm));

        bool agree = true;
        for (const auto& r : results) {
            agree = agree && r.yes == results.front().yes;
            if (!r.yes)
                continue;
            Verification v = integrity ? verify_wvi(instance.graph, *prm.p, r.witness)
                                       : verify_wcoc(instance.graph, *prm.k, *prm.l, r.witness);
            witness_failures += v ? 0 : 1;
        }
        agreements += agree ? 1 : 0;

        // kernel size and search-tree bounds
        std::size_t violations = 0;
        if (integrity) {
            const Weight p = *prm.p;
            WviKernel k = kernelize_wvi(instance.graph, p);
            if (k.outcome == KernelOutcome::reduced) {
                violations += static_cast<Weight>(k.graph.size()) > p * p * p;
                for (Weight w : k.graph.weights())
                    violations += w > p;
            }
            const auto& branch = std::get<std::int64_t>(
                std::find_if(results[1].stats.begin(), results[1].stats.end(),
                             [](const auto& s) { return s.first == "maxDepth"; })->second);
            violations += branch > p;
        } else {
            const Weight k = *prm.k, l = *prm.l;
            WcocKernel ker = kernelize_wcoc(instance.graph, k, l);
            if (ker.outcome == KernelOutcome::reduced) {
                violations += static_cast<Weight>(ker.graph.size()) > k * l * (k + l) + k;
                for (Weight w : ker.graph.weights())
                    violations += w > k + l;
            }
            const auto& nodes = std::get<std::int64_t>(
                std::find_if(results[1].stats.begin(), results[1].stats.end(),
                             [](const auto& s) { return s.first == "nodesExpanded"; })->second);
            violations += static_cast<std::uint64_t>(nodes) > wcoc_search_tree_bound(k, l);
        }
        bound_violations += violations;

        if (opt.verbose || opt.as_json) {
            json entry = {{"item", item},
                          {"problem", to_string(problem)},
                          {"n", n},
                          {"interval", interval},
                          {"verdict", results.front().yes ? "yes" : "no"},
                          {"agree", agree},
                          {"boundViolations", violations}};
            if (opt.as_json)
                items.push_back(entry);
            else
                out << "item " << item << ": " << to_string(problem) << " n=" << n
                    << (interval ? " interval" : "") << " verdict=" << (results.front().yes ? "yes" : "no")
                    << (agree ? " agree" : " DISAGREE") << " bound-violations=" << violations << '\n';
        }
    }

    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (opt.as_json) {
        out << json{{"schema", 1},
                    {"items", opt.count},
                    {"agreements", agreements},
                    {"witnessFailures", witness_failures},
                    {"boundViolations", bound_violations},
                    {"results", items},
                    {"wallTimeMs", ms}}
                   .dump()
            << '\n';
    } else {
        out << "items: " << opt.count << '\n'
            << "agreement: " << agreements << '/' << opt.count << '\n'
            << "witness failures: " << witness_failures << '\n'
            << "bound violations: " << bound_violations << '\n'
            << "time: " << ms << " ms\n";
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact solvers for weighted vertex integrity and component order connectivity", "vulnkit"};
    app.require_subcommand(1);

    InstanceOptions solve_opt;
    std::string algo = "auto";
    bool witness = false;
    bool as_json = false;
    auto* solve_cmd = app.add_subcommand("solve", "decide an instance");
    solve_opt.attach(solve_cmd);
    solve_cmd->add_option("--algo", algo, "algorithm")->check(CLI::IsMember(algorithm_names()));
    solve_cmd->add_flag("--witness", witness, "print the deleted set");
    solve_cmd->add_flag("--json", as_json, "machine-readable output");

    InstanceOptions kernel_opt;
    auto* kernel_cmd = app.add_subcommand("kernelize", "print the kernel as a VGRAPH file");
    kernel_opt.attach(kernel_cmd);

    InstanceOptions verify_opt;
    std::vector<std::int64_t> verify_ids;
    bool verify_json = false;
    auto* verify_cmd = app.add_subcommand("verify", "check a deletion set");
    verify_opt.attach(verify_cmd);
    verify_cmd->add_option("--witness", verify_ids, "1-based vertex ids")->delimiter(',')->expected(0, -1);
    verify_cmd->add_flag("--json", verify_json, "machine-readable output");

    GenOptions gen_opt;
    auto* gen_cmd = app.add_subcommand("gen", "write a hardness-reduction instance");
    gen_cmd
        ->add_option("--construction", gen_opt.construction)
        ->required()
        ->check(CLI::IsMember({"incidence", "clique-coc-split", "clique-wvi-split", "clique-vi-chordal",
                               "bcbs-cobipartite", "partition-complete", "clique-coc-ell"}));
    gen_cmd->add_option("--input", gen_opt.input, "source graph (VGRAPH)");
    gen_cmd->add_option("-k", gen_opt.k, "clique or biclique size");
    gen_cmd->add_option("-q", gen_opt.q, "clique size for clique-coc-ell");
    gen_cmd->add_option("--values", gen_opt.values, "comma-separated Partition values");
    gen_cmd->add_option("--part-a", gen_opt.part_a, "comma-separated 1-based ids of one side");
    gen_cmd->add_option("--output", gen_opt.output, "output file (default: standard output)");

    BenchOptions bench_opt;
    auto* bench_cmd = app.add_subcommand("bench", "cross-check the algorithms on a seeded corpus");
    bench_cmd->add_option("--seed", bench_opt.seed, "corpus seed")->capture_default_str();
    bench_cmd->add_option("--count", bench_opt.count, "number of instances")->capture_default_str();
    bench_cmd->add_option("--max-n", bench_opt.max_n, "largest instance size")->capture_default_str()->check(CLI::Range(1, 16));
    bench_cmd->add_flag("--verbose", bench_opt.verbose, "one line per item");
    bench_cmd->add_flag("--json", bench_opt.as_json, "machine-readable output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (solve_cmd->parsed())
            return cmd_solve(solve_opt, algo, witness, as_json, out);
        if (kernel_cmd->parsed())
            return cmd_kernelize(kernel_opt, out);
        if (verify_cmd->parsed())
            return cmd_verify(verify_opt, verify_ids, verify_json, out);
        if (gen_cmd->parsed())
            return cmd_gen(gen_opt, out);
        return cmd_bench(bench_opt, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        err << "precondition: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace vulnkit::cli
