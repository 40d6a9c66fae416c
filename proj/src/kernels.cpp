#include "vulnkit/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

#include "vulnkit/oracle.hpp"

namespace vulnkit {

const char* to_string(KernelRule rule) {
    switch (rule) {
    case KernelRule::drop_zero_weight: return "drop-zero-weight";
    case KernelRule::keep_heaviest: return "keep-heaviest";
    case KernelRule::drop_light_components: return "drop-light-components";
    case KernelRule::forced_vertex: return "forced-vertex";
    case KernelRule::solved_directly: return "solved-directly";
    case KernelRule::trivial_no: return "trivial-no";
    case KernelRule::size_reject: return "size-reject";
    }
    return "unknown";
}

namespace {

Weight saturating_mul(Weight a, Weight b) {
    Weight r;
    if (__builtin_mul_overflow(a, b, &r))
        return std::numeric_limits<Weight>::max();
    return r;
}

Weight saturating_add(Weight a, Weight b) {
    Weight r;
    if (__builtin_add_overflow(a, b, &r))
        return std::numeric_limits<Weight>::max();
    return r;
}

/// Current reduced graph plus the trace that produced it.
class Reducer {
public:
    Reducer(const WeightedGraph& g) : graph_(g) { trace_.original_size = g.size(); }

    const WeightedGraph& graph() const { return graph_; }
    KernelTrace& trace() { return trace_; }

    void remove(KernelRule rule, VertexSet removed, Weight charged = 0, std::string detail = {},
                VertexSet witness = {}) {
        KernelStep step;
        step.rule = rule;
        step.charged = charged;
        step.detail = std::move(detail);
        step.witness = std::move(witness);
        Subgraph sub = delete_vertices(graph_, removed);
        step.id_map.assign(graph_.size(), -1);
        for (std::size_t i = 0; i < sub.parent_id.size(); ++i)
            step.id_map[static_cast<std::size_t>(sub.parent_id[i])] = static_cast<Vertex>(i);
        step.removed = std::move(removed);
        trace_.steps.push_back(std::move(step));
        graph_ = std::move(sub.graph);
    }

    void note(KernelRule rule, std::string detail) {
        KernelStep step;
        step.rule = rule;
        step.detail = std::move(detail);
        step.id_map.resize(graph_.size());
        for (std::size_t i = 0; i < graph_.size(); ++i)
            step.id_map[i] = static_cast<Vertex>(i);
        trace_.steps.push_back(std::move(step));
    }

    void drop_zero_weight() {
        VertexSet zero;
        for (Vertex v = 0; static_cast<std::size_t>(v) < graph_.size(); ++v)
            if (graph_.weight(v) == 0)
                zero.push_back(v);
        if (!zero.empty())
            remove(KernelRule::drop_zero_weight, std::move(zero));
    }

private:
    WeightedGraph graph_;
    KernelTrace trace_;
};

/// First vertex (by id) whose closed neighbourhood is heavier than the threshold.
std::optional<Vertex> heavy_neighborhood(const WeightedGraph& g, Weight threshold) {
    for (Vertex v = 0; static_cast<std::size_t>(v) < g.size(); ++v)
        if (g.closed_neighborhood_weight(v) > threshold)
            return v;
    return std::nullopt;
}

} // namespace

WviKernel kernelize_wvi(const WeightedGraph& g, Weight p) {
    WviKernel out;
    Reducer reducer(g);
    const Weight p0 = p;
    auto finish_no = [&](KernelRule rule, std::string detail) {
        reducer.note(rule, std::move(detail));
        out.outcome = KernelOutcome::immediate_no;
        out.p = p;
        out.trace = std::move(reducer.trace());
        return out;
    };
    if (p < 0)
        return finish_no(KernelRule::trivial_no, "negative parameter");

    reducer.drop_zero_weight();

    bool changed = true;
    while (changed) {
        changed = false;

        auto comps = components(reducer.graph());
        if (comps.size() > static_cast<std::size_t>(p) + 1) {
            std::vector<std::pair<Weight, std::size_t>> order;
            for (std::size_t i = 0; i < comps.size(); ++i)
                order.emplace_back(weight_of(reducer.graph(), comps[i]), i);
            // heavier first; equal weights keep the component with the smaller vertex
            std::stable_sort(order.begin(), order.end(),
                             [](const auto& a, const auto& b) { return a.first > b.first; });
            VertexSet dropped;
            for (std::size_t r = static_cast<std::size_t>(p) + 1; r < order.size(); ++r)
                for (Vertex v : comps[order[r].second])
                    dropped.push_back(v);
            std::sort(dropped.begin(), dropped.end());
            reducer.remove(KernelRule::keep_heaviest, std::move(dropped), 0,
                           std::to_string(comps.size() - static_cast<std::size_t>(p) - 1) +
                               " components dropped");
            changed = true;
        }

        if (auto v = heavy_neighborhood(reducer.graph(), p)) {
            const Weight wv = reducer.graph().weight(*v);
            if (p - wv < 0)
                return finish_no(KernelRule::trivial_no,
                                 "w(N[v]) > p and w(v) > p for vertex " + std::to_string(*v));
            reducer.remove(KernelRule::forced_vertex, {*v}, wv);
            p -= wv;
            changed = true;
        }
    }

    if (p <= 1) {
        // at most two isolated unit vertices survive exhaustive reduction here
        auto opt = oracle_wvi(reducer.graph());
        const bool yes = opt.iota <= p;
        VertexSet all(reducer.graph().size());
        for (std::size_t i = 0; i < all.size(); ++i)
            all[i] = static_cast<Vertex>(i);
        reducer.remove(KernelRule::solved_directly, std::move(all), 0,
                       "residual parameter " + std::to_string(p) + (yes ? ": yes" : ": no"),
                       yes ? opt.witness : VertexSet{});
        out.outcome = yes ? KernelOutcome::immediate_yes : KernelOutcome::immediate_no;
        out.p = p;
        out.trace = std::move(reducer.trace());
        return out;
    }

    assert(!heavy_neighborhood(reducer.graph(), p));
    assert(components(reducer.graph()).size() <= static_cast<std::size_t>(p) + 1);
    const Weight bound = saturating_mul(saturating_mul(p0, p0), p0);
    if (static_cast<Weight>(reducer.graph().size()) > bound)
        return finish_no(KernelRule::size_reject,
                         std::to_string(reducer.graph().size()) + " vertices > p^3 = " +
                             std::to_string(bound));

    out.outcome = KernelOutcome::reduced;
    out.graph = reducer.graph();
    out.p = p;
    out.trace = std::move(reducer.trace());
    return out;
}

WcocKernel kernelize_wcoc(const WeightedGraph& g, Weight k, Weight l) {
    WcocKernel out;
    Reducer reducer(g);
    const Weight k0 = k;
    out.l = l;
    auto finish_no = [&](KernelRule rule, std::string detail) {
        reducer.note(rule, std::move(detail));
        out.outcome = KernelOutcome::immediate_no;
        out.k = k;
        out.trace = std::move(reducer.trace());
        return out;
    };
    if (k < 0 || l < 0)
        return finish_no(KernelRule::trivial_no, "negative parameter");

    reducer.drop_zero_weight();

    bool changed = true;
    while (changed) {
        changed = false;

        if (auto v = heavy_neighborhood(reducer.graph(), checked_add(k, l))) {
            const Weight wv = reducer.graph().weight(*v);
            if (wv > k)
                return finish_no(KernelRule::trivial_no,
                                 "w(N[v]) > k + l and w(v) > k for vertex " + std::to_string(*v));
            reducer.remove(KernelRule::forced_vertex, {*v}, wv);
            k -= wv;
            changed = true;
        }

        VertexSet light;
        std::size_t count = 0;
        for (const auto& comp : components(reducer.graph()))
            if (weight_of(reducer.graph(), comp) <= l) {
                light.insert(light.end(), comp.begin(), comp.end());
                ++count;
            }
        if (!light.empty()) {
            std::sort(light.begin(), light.end());
            reducer.remove(KernelRule::drop_light_components, std::move(light), 0,
                           std::to_string(count) + " components dropped");
            changed = true;
        }
    }

    assert(!heavy_neighborhood(reducer.graph(), k + l));
    const Weight bound =
        saturating_add(saturating_mul(saturating_mul(k0, l), saturating_add(k0, l)), k0);
    if (static_cast<Weight>(reducer.graph().size()) > bound)
        return finish_no(KernelRule::size_reject,
                         std::to_string(reducer.graph().size()) + " vertices > kl(k+l)+k = " +
                             std::to_string(bound));

    out.outcome = KernelOutcome::reduced;
    out.graph = reducer.graph();
    out.k = k;
    out.trace = std::move(reducer.trace());
    return out;
}

VertexSet lift_witness(const KernelTrace& trace, std::span<const Vertex> x_kernel) {
    std::size_t size = trace.original_size;
    if (!trace.steps.empty())
        size = static_cast<std::size_t>(
            std::count_if(trace.steps.back().id_map.begin(), trace.steps.back().id_map.end(),
                          [](Vertex v) { return v >= 0; }));
    VertexSet x(x_kernel.begin(), x_kernel.end());
    for (Vertex v : x)
        if (v < 0 || static_cast<std::size_t>(v) >= size)
            throw std::out_of_range("witness vertex " + std::to_string(v) +
                                    " is not in the kernel");

    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        std::vector<Vertex> old_id(it->id_map.size());
        for (std::size_t old = 0; old < it->id_map.size(); ++old)
            if (it->id_map[old] >= 0)
                old_id[static_cast<std::size_t>(it->id_map[old])] = static_cast<Vertex>(old);
        for (Vertex& v : x)
            v = old_id[static_cast<std::size_t>(v)];
        switch (it->rule) {
        case KernelRule::drop_zero_weight:
        case KernelRule::forced_vertex:
            x.insert(x.end(), it->removed.begin(), it->removed.end());
            break;
        case KernelRule::solved_directly:
            x.insert(x.end(), it->witness.begin(), it->witness.end());
            break;
        default:
            break;
        }
    }
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());
    return x;
}

WeightedGraph replay(const KernelTrace& trace, const WeightedGraph& original) {
    if (original.size() != trace.original_size)
        throw std::invalid_argument("trace was recorded on a graph of different size");
    WeightedGraph g = original;
    for (const auto& step : trace.steps) {
        if (step.id_map.size() != g.size())
            throw std::invalid_argument("trace step does not match the replayed graph");
        g = delete_vertices(g, step.removed).graph;
    }
    return g;
}

} // namespace vulnkit
