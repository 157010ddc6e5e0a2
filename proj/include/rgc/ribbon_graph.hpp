#ifndef RGC_RIBBON_GRAPH_HPP
#define RGC_RIBBON_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "rgc/errors.hpp"

namespace rgc {

/// A connected ribbon graph (fatgraph) on half-edges 0..2E-1.
///
/// sigma's cycles are the vertices (counterclockwise order of half-edges),
/// iota is the fixed-point-free involution pairing half-edges into edges.
/// The boundary permutation is beta = sigma o iota (iota applied first).
class RibbonGraph {
public:
    RibbonGraph(std::vector<int> sigma, std::vector<int> iota);

    int num_edges() const { return E_; }
    int num_half_edges() const { return 2 * E_; }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_boundaries() const { return static_cast<int>(boundaries_.size()); }
    int genus() const { return genus_; }

    const std::vector<int>& sigma() const { return sigma_; }
    const std::vector<int>& iota() const { return iota_; }

    // cycles sorted by minimal half-edge, each starting at its minimum
    const std::vector<std::vector<int>>& vertices() const { return vertices_; }
    const std::vector<std::vector<int>>& boundary_cycles() const { return boundaries_; }

    // edges as ordered pairs (lo, hi), lo < hi, sorted by lo; the pair order
    // is the induced direction of the edge
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    int vertex_of(int h) const { return vertex_of_[h]; }
    int boundary_of(int h) const { return boundary_of_[h]; }
    int edge_of(int h) const { return edge_of_[h]; }
    int valence(int v) const { return static_cast<int>(vertices_[v].size()); }

    /// |G|_d = d(#V + #B - 2) + (1-d) #E
    int degree(int d) const;

    /// All half-edge permutations commuting with both sigma and iota.
    /// Always contains the identity; the group acts freely, so there are
    /// at most 2E of them.
    std::vector<std::vector<int>> automorphisms() const;

    /// Half-edge relabeling: (sigma, iota) -> (p sigma p^-1, p iota p^-1).
    RibbonGraph relabeled(const std::vector<int>& p) const;

    bool same_tables(const RibbonGraph& o) const {
        return sigma_ == o.sigma_ && iota_ == o.iota_;
    }

    /// Stable identity string: interleaved (sigma, iota) tables.
    std::string key() const;

private:
    int E_;
    std::vector<int> sigma_, iota_;
    std::vector<std::vector<int>> vertices_, boundaries_;
    std::vector<int> vertex_of_, boundary_of_, edge_of_;
    std::vector<std::pair<int, int>> edges_;
    int genus_;
};

} // namespace rgc

#endif
