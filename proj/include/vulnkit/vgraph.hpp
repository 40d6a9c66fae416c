#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vulnkit/graph.hpp"
#include "vulnkit/interval.hpp"

namespace vulnkit {

/// Contents of a VGRAPH file.
///
///     # comment
///     p vgraph <n> <m>
///     v <id> <weight> [<lo> <hi>]
///     e <u> <v>
///     param <name> <int>
///
/// Ids are 1-based in the file and 0-based in memory. Vertices without a
/// `v` line get weight 1. Intervals are given on every `v` line or on none.
struct ParsedInstance {
    WeightedGraph graph;
    std::optional<IntervalModel> model;
    std::map<std::string, Weight> params;
};

/// Throws ParseError (with the offending line number) on malformed input,
/// duplicate edges or vertices, dangling ids, negative weights and interval
/// models that do not match the edges.
ParsedInstance parse_instance(std::istream& in);
ParsedInstance parse_instance(std::string_view text);

/// Writes a VGRAPH file; every comment line is prefixed with "# ".
void emit_instance(std::ostream& out, const ParsedInstance& instance,
                   const std::vector<std::string>& comments = {});
std::string emit_instance(const ParsedInstance& instance, const std::vector<std::string>& comments = {});

} // namespace vulnkit
