#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vulnkit/branching.hpp"
#include "vulnkit/errors.hpp"
#include "vulnkit/interval.hpp"
#include "vulnkit/kernels.hpp"
#include "vulnkit/oracle.hpp"
#include "vulnkit/reductions.hpp"
#include "vulnkit/special_classes.hpp"
#include "vulnkit/vgraph.hpp"

namespace py = pybind11;
using namespace vulnkit;

namespace {

OracleOptions oracle_options(std::optional<std::size_t> limit) {
    OracleOptions options;
    if (limit)
        options.limit = *limit;
    return options;
}

py::dict stats_dict(const SearchStats& s) {
    py::dict d;
    d["nodes_expanded"] = s.nodes_expanded;
    d["max_depth"] = s.max_depth;
    d["edge_bound_rejected"] = s.edge_bound_rejected;
    return d;
}

const char* outcome_name(KernelOutcome o) {
    switch (o) {
    case KernelOutcome::reduced:
        return "reduced";
    case KernelOutcome::immediate_yes:
        return "immediate_yes";
    case KernelOutcome::immediate_no:
        return "immediate_no";
    }
    return "reduced";
}

py::list trace_list(const KernelTrace& trace) {
    py::list steps;
    for (const auto& s : trace.steps) {
        py::dict d;
        d["rule"] = to_string(s.rule);
        d["removed"] = s.removed;
        d["charged"] = s.charged;
        d["detail"] = s.detail;
        steps.append(d);
    }
    return steps;
}

py::dict verification_dict(const Verification& v) {
    py::dict d;
    d["ok"] = static_cast<bool>(v);
    if (v) {
        d["deleted_weight"] = v.certificate->deleted_weight;
        d["heaviest_component"] = v.certificate->heaviest_component;
    } else {
        d["failure"] = v.failure;
    }
    return d;
}

} // namespace

PYBIND11_MODULE(_vulnkit, m) {
    m.doc() = "Exact solvers for weighted vertex integrity and component order connectivity";

    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<WeightedGraph>(m, "WeightedGraph")
        .def(py::init([](std::vector<Weight> weights, const std::vector<Edge>& edges) {
                 return WeightedGraph(std::move(weights), std::span<const Edge>(edges));
             }),
             py::arg("weights"), py::arg("edges") = std::vector<Edge>{})
        .def_static(
            "unit", [](std::size_t n, const std::vector<Edge>& edges) { return WeightedGraph::unit(n, edges); },
            py::arg("n"), py::arg("edges") = std::vector<Edge>{})
        .def("__len__", &WeightedGraph::size)
        .def_property_readonly("num_edges", &WeightedGraph::num_edges)
        .def_property_readonly("weights", &WeightedGraph::weights)
        .def_property_readonly("edges", &WeightedGraph::edges)
        .def("neighbors", &WeightedGraph::neighbors, py::arg("v"))
        .def("adjacent", &WeightedGraph::adjacent, py::arg("u"), py::arg("v"))
        .def("total_weight", &WeightedGraph::total_weight)
        .def(py::self == py::self)
        .def("__repr__", [](const WeightedGraph& g) {
            return "WeightedGraph(n=" + std::to_string(g.size()) + ", m=" + std::to_string(g.num_edges()) + ")";
        });

    m.def("components", &components, py::arg("g"));
    m.def("wcc", &wcc, py::arg("g"));
    m.def("split_partition", [](const WeightedGraph& g) -> std::optional<std::pair<VertexSet, VertexSet>> {
        auto p = split_partition(g);
        if (!p)
            return std::nullopt;
        return std::pair{p->clique, p->independent};
    }, py::arg("g"));
    m.def("verify_wvi", [](const WeightedGraph& g, Weight p, const VertexSet& x) {
        return verification_dict(verify_wvi(g, p, x));
    }, py::arg("g"), py::arg("p"), py::arg("x"));
    m.def("verify_wcoc", [](const WeightedGraph& g, Weight k, Weight l, const VertexSet& x) {
        return verification_dict(verify_wcoc(g, k, l, x));
    }, py::arg("g"), py::arg("k"), py::arg("l"), py::arg("x"));

    // exact enumeration
    m.def("oracle_wvi", [](const WeightedGraph& g, std::optional<std::size_t> limit) {
        auto r = oracle_wvi(g, oracle_options(limit));
        return std::pair{r.iota, r.witness};
    }, py::arg("g"), py::arg("limit") = py::none(), "Returns (iota, witness).");
    m.def("oracle_wcoc", [](const WeightedGraph& g, Weight l, std::optional<std::size_t> limit) {
        auto r = oracle_wcoc(g, l, oracle_options(limit));
        return std::pair{r.kmin, r.witness};
    }, py::arg("g"), py::arg("l"), py::arg("limit") = py::none(), "Returns (kmin, witness).");
    m.def("enumerate_iota_sets", [](const WeightedGraph& g, std::optional<std::size_t> limit) {
        return enumerate_iota_sets(g, oracle_options(limit));
    }, py::arg("g"), py::arg("limit") = py::none());

    // parameterized solvers
    auto branch_result = [](const auto& r) {
        py::dict d;
        d["yes"] = r.yes;
        d["witness"] = r.witness;
        d["stats"] = stats_dict(r.stats);
        return d;
    };
    m.def("solve_wvi_branch", [=](const WeightedGraph& g, Weight p) { return branch_result(solve_wvi_branch(g, p)); },
          py::arg("g"), py::arg("p"));
    m.def("solve_wcoc_branch",
          [=](const WeightedGraph& g, Weight k, Weight l) { return branch_result(solve_wcoc_branch(g, k, l)); },
          py::arg("g"), py::arg("k"), py::arg("l"));
    m.def("solve_wvi_kernel_branch",
          [=](const WeightedGraph& g, Weight p) { return branch_result(solve_wvi_kernel_branch(g, p)); },
          py::arg("g"), py::arg("p"));
    m.def("solve_wcoc_kernel_branch",
          [=](const WeightedGraph& g, Weight k, Weight l) { return branch_result(solve_wcoc_kernel_branch(g, k, l)); },
          py::arg("g"), py::arg("k"), py::arg("l"));
    m.def("wcoc_search_tree_bound", &wcoc_search_tree_bound, py::arg("k"), py::arg("l"));

    m.def("kernelize_wvi", [](const WeightedGraph& g, Weight p) {
        auto r = kernelize_wvi(g, p);
        py::dict d;
        d["outcome"] = outcome_name(r.outcome);
        d["graph"] = r.graph;
        d["p"] = r.p;
        d["trace"] = trace_list(r.trace);
        return d;
    }, py::arg("g"), py::arg("p"));
    m.def("kernelize_wcoc", [](const WeightedGraph& g, Weight k, Weight l) {
        auto r = kernelize_wcoc(g, k, l);
        py::dict d;
        d["outcome"] = outcome_name(r.outcome);
        d["graph"] = r.graph;
        d["k"] = r.k;
        d["l"] = r.l;
        d["trace"] = trace_list(r.trace);
        return d;
    }, py::arg("g"), py::arg("k"), py::arg("l"));

    // interval graphs
    py::class_<IntervalModel>(m, "IntervalModel")
        .def(py::init([](const std::vector<std::pair<std::int64_t, std::int64_t>>& spans) {
                 std::vector<Interval> intervals;
                 for (auto [lo, hi] : spans)
                     intervals.push_back({lo, hi});
                 return IntervalModel(std::move(intervals));
             }),
             py::arg("intervals"))
        .def("__len__", &IntervalModel::size)
        .def_property_readonly("intervals", [](const IntervalModel& model) {
            std::vector<std::pair<std::int64_t, std::int64_t>> out;
            for (const auto& iv : model.intervals())
                out.emplace_back(iv.lo, iv.hi);
            return out;
        });
    m.def("intersection_graph", &intersection_graph, py::arg("model"), py::arg("weights"));
    m.def("solve_wcoc_interval", [](const WeightedGraph& g, const IntervalModel& model, Weight k, Weight l) {
        auto r = solve_wcoc_interval(g, model, k, l);
        return std::pair{r.yes, r.witness};
    }, py::arg("g"), py::arg("model"), py::arg("k"), py::arg("l"), "Returns (yes, witness).");
    m.def("solve_coc_interval_fast", [](const WeightedGraph& g, const IntervalModel& model, Weight k, Weight l) {
        auto r = solve_coc_interval_fast(g, model, k, l, true);
        py::dict d;
        d["yes"] = r.yes;
        d["count"] = r.count;
        d["witness"] = r.witness ? py::cast(*r.witness) : py::none();
        return d;
    }, py::arg("g"), py::arg("model"), py::arg("k"), py::arg("l"));
    m.def("solve_vi_interval", [](const WeightedGraph& g, const IntervalModel& model, Weight p) {
        auto r = solve_vi_interval(g, model, p);
        py::dict d;
        d["yes"] = r.yes;
        d["witness"] = r.witness;
        d["k"] = r.k;
        d["l"] = r.l;
        return d;
    }, py::arg("g"), py::arg("model"), py::arg("p"));

    // special graph classes
    m.def("solve_vi_split", [](const WeightedGraph& g) {
        auto r = solve_vi_split(g);
        return std::pair{r.iota, r.witness};
    }, py::arg("g"));
    m.def("solve_wvi_complete", [](const WeightedGraph& g) {
        auto r = solve_wvi_complete(g);
        return std::pair{r.iota, r.witness};
    }, py::arg("g"));
    m.def("solve_wcoc_complete", [](const WeightedGraph& g, Weight k, Weight l) {
        auto r = solve_wcoc_complete(g, k, l);
        return std::pair{r.yes, r.witness};
    }, py::arg("g"), py::arg("k"), py::arg("l"));

    // hardness constructions
    py::class_<ReducedInstance>(m, "ReducedInstance")
        .def_readonly("graph", &ReducedInstance::graph)
        .def_readonly("params", &ReducedInstance::params)
        .def_readonly("construction", &ReducedInstance::construction)
        .def_readonly("problem", &ReducedInstance::problem)
        .def_readonly("tags", &ReducedInstance::tags);
    m.def("incidence_split_graph", [](const WeightedGraph& g) { return incidence_split_graph(g).graph; },
          py::arg("g"));
    m.def("reduce_clique_to_coc_split", &reduce_clique_to_coc_split, py::arg("g"), py::arg("k"));
    m.def("reduce_clique_to_wvi_split", &reduce_clique_to_wvi_split, py::arg("g"), py::arg("k"));
    m.def("reduce_clique_to_vi_chordal", &reduce_clique_to_vi_chordal, py::arg("g"), py::arg("k"));
    m.def("reduce_clique_to_coc_ell", &reduce_clique_to_coc_ell, py::arg("g"), py::arg("q"));
    m.def("reduce_bcbs_to_vi_cobipartite",
          [](const WeightedGraph& g, const VertexSet& a, const VertexSet& b, Weight k) {
              return reduce_bcbs_to_vi_cobipartite(g, Bipartition{a, b}, k);
          },
          py::arg("g"), py::arg("part_a"), py::arg("part_b"), py::arg("k"));
    m.def("reduce_partition_to_wcoc_complete", &reduce_partition_to_wcoc_complete, py::arg("values"));

    // VGRAPH text format
    m.def("parse_instance", [](const std::string& text) {
        auto inst = parse_instance(std::string_view(text));
        return py::make_tuple(inst.graph, inst.model ? py::cast(*inst.model) : py::none(), inst.params);
    }, py::arg("text"), "Returns (graph, model or None, params).");
    m.def("emit_instance",
          [](const WeightedGraph& g, std::optional<IntervalModel> model, std::map<std::string, Weight> params) {
              return emit_instance(ParsedInstance{g, std::move(model), std::move(params)});
          },
          py::arg("g"), py::arg("model") = py::none(), py::arg("params") = std::map<std::string, Weight>{});
}
