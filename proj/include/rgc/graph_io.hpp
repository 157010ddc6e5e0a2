#ifndef RGC_GRAPH_IO_HPP
#define RGC_GRAPH_IO_HPP

#include <string>

#include "rgc/ribbon_graph.hpp"

namespace rgc {

/// Parse the `rg` text format, e.g.
///   rg E=2; sigma=(0 1 2 3); iota=(0 2)(1 3)
/// Cycles are parenthesized half-edge lists; sigma cycles of length one may
/// be omitted. Rejects non-involutive iota, fixed points in iota and
/// disconnected graphs with distinct error codes.
RibbonGraph parse_graph_text(const std::string& text);

/// Parse the equivalent JSON object {"E":..,"sigma":[..],"iota":[..]} with
/// sigma and iota as permutation tables of length 2E.
RibbonGraph parse_graph_json(const std::string& text);

/// Dispatch on leading "rg" vs JSON.
RibbonGraph parse_graph(const std::string& text);

std::string serialize_graph_text(const RibbonGraph& g);
std::string serialize_graph_json(const RibbonGraph& g);

} // namespace rgc

#endif
