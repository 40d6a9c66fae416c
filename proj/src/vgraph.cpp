#include "vulnkit/vgraph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "vulnkit/errors.hpp"

namespace vulnkit {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
            ++pos;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r')
            ++end;
        if (end > pos)
            fields.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return fields;
}

class Parser {
public:
    ParsedInstance parse(std::istream& in) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_;
            std::string_view text(raw);
            if (auto hash = text.find('#'); hash != std::string_view::npos)
                text = text.substr(0, hash);
            auto fields = split_fields(text);
            if (fields.empty())
                continue;
            dispatch(fields);
        }
        return finish();
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, message); }

    std::int64_t integer(std::string_view field, const char* what) const {
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || ptr != field.data() + field.size())
            fail(std::string("expected an integer ") + what + ", got '" + std::string(field) + "'");
        return value;
    }

    Vertex vertex(std::string_view field) const {
        const std::int64_t id = integer(field, "vertex id");
        if (id < 1 || id > static_cast<std::int64_t>(n_))
            fail("vertex id " + std::to_string(id) + " outside 1.." + std::to_string(n_));
        return static_cast<Vertex>(id - 1);
    }

    void expect_arity(const std::vector<std::string_view>& fields, std::size_t lo, std::size_t hi) const {
        if (fields.size() < lo || fields.size() > hi)
            fail("wrong number of fields for '" + std::string(fields[0]) + "' line");
    }

    void dispatch(const std::vector<std::string_view>& fields) {
        const std::string_view kind = fields[0];
        if (kind == "p") {
            if (header_seen_)
                fail("duplicate header");
            expect_arity(fields, 4, 4);
            if (fields[1] != "vgraph")
                fail("unknown format '" + std::string(fields[1]) + "'");
            const std::int64_t n = integer(fields[2], "vertex count");
            const std::int64_t m = integer(fields[3], "edge count");
            if (n < 0 || m < 0)
                fail("negative size in header");
            n_ = static_cast<std::size_t>(n);
            m_ = static_cast<std::size_t>(m);
            header_line_ = line_;
            header_seen_ = true;
            weights_.assign(n_, 1);
            intervals_.assign(n_, Interval{});
            has_interval_.assign(n_, 0);
            has_vertex_line_.assign(n_, 0);
            return;
        }
        if (!header_seen_)
            fail("'" + std::string(kind) + "' line before the 'p vgraph' header");
        if (kind == "v") {
            expect_arity(fields, 3, 5);
            if (fields.size() == 4)
                fail("an interval needs both endpoints");
            const Vertex v = vertex(fields[1]);
            const auto i = static_cast<std::size_t>(v);
            if (has_vertex_line_[i])
                fail("vertex " + std::string(fields[1]) + " declared twice");
            has_vertex_line_[i] = 1;
            const std::int64_t w = integer(fields[2], "weight");
            if (w < 0)
                fail("negative weight");
            weights_[i] = w;
            if (fields.size() == 5) {
                intervals_[i] = {integer(fields[3], "interval start"), integer(fields[4], "interval end")};
                if (intervals_[i].lo > intervals_[i].hi)
                    fail("interval start exceeds its end");
                has_interval_[i] = 1;
                ++interval_lines_;
            } else {
                ++plain_lines_;
            }
            if (interval_lines_ > 0 && plain_lines_ > 0)
                fail("intervals must be given on every vertex line or on none");
        } else if (kind == "e") {
            expect_arity(fields, 3, 3);
            Vertex u = vertex(fields[1]);
            Vertex v = vertex(fields[2]);
            if (u == v)
                fail("self-loop on vertex " + std::to_string(u + 1));
            if (!edge_set_.emplace(std::min(u, v), std::max(u, v)).second)
                fail("duplicate edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
            edges_.emplace_back(std::min(u, v), std::max(u, v));
        } else if (kind == "param") {
            expect_arity(fields, 3, 3);
            std::string name(fields[1]);
            if (!params_.emplace(name, integer(fields[2], "parameter value")).second)
                fail("parameter '" + name + "' given twice");
        } else {
            fail("unknown line type '" + std::string(kind) + "'");
        }
    }

    ParsedInstance finish() {
        if (!header_seen_)
            throw ParseError(line_, "missing 'p vgraph' header");
        if (edges_.size() != m_)
            throw ParseError(header_line_, "header announces " + std::to_string(m_) + " edges, found " +
                                               std::to_string(edges_.size()));
        ParsedInstance out;
        out.graph = WeightedGraph(std::move(weights_), edges_);
        out.params = std::move(params_);
        if (interval_lines_ > 0) {
            for (std::size_t v = 0; v < n_; ++v)
                if (!has_interval_[v])
                    throw ParseError(header_line_, "vertex " + std::to_string(v + 1) + " has no interval");
            IntervalModel model(std::move(intervals_));
            try {
                check_model(model, out.graph);
            } catch (const PreconditionError& e) {
                throw ParseError(line_, std::string("interval model does not match the edges: ") + e.what());
            }
            out.model = std::move(model);
        }
        return out;
    }

    std::size_t line_ = 0;
    std::size_t header_line_ = 0;
    bool header_seen_ = false;
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<Weight> weights_;
    std::vector<Interval> intervals_;
    std::vector<char> has_interval_;
    std::vector<char> has_vertex_line_;
    std::size_t interval_lines_ = 0;
    std::size_t plain_lines_ = 0;
    std::set<Edge> edge_set_;
    std::vector<Edge> edges_;
    std::map<std::string, Weight> params_;
};

} // namespace

ParsedInstance parse_instance(std::istream& in) { return Parser().parse(in); }

ParsedInstance parse_instance(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_instance(in);
}

void emit_instance(std::ostream& out, const ParsedInstance& instance, const std::vector<std::string>& comments) {
    const WeightedGraph& g = instance.graph;
    if (instance.model && instance.model->size() != g.size())
        throw std::invalid_argument("interval model size does not match the graph");
    for (const auto& c : comments)
        out << "# " << c << '\n';
    out << "p vgraph " << g.size() << ' ' << g.num_edges() << '\n';
    for (Vertex v = 0; static_cast<std::size_t>(v) < g.size(); ++v) {
        out << "v " << v + 1 << ' ' << g.weight(v);
        if (instance.model)
            out << ' ' << (*instance.model)[v].lo << ' ' << (*instance.model)[v].hi;
        out << '\n';
    }
    for (const auto& [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    for (const auto& [name, value] : instance.params)
        out << "param " << name << ' ' << value << '\n';
}

std::string emit_instance(const ParsedInstance& instance, const std::vector<std::string>& comments) {
    std::ostringstream out;
    emit_instance(out, instance, comments);
    return out.str();
}

} // namespace vulnkit
