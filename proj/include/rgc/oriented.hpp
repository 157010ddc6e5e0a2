#ifndef RGC_ORIENTED_HPP
#define RGC_ORIENTED_HPP

#include <memory>
#include <string>
#include <vector>

#include "rgc/ribbon_graph.hpp"

namespace rgc {

/// Orientation data of a labelled generator of RGC_d, relative to the
/// labelling induced by half-edge numbers (vertices, edges and boundaries
/// ordered by minimal half-edge; each edge directed low -> high).
///
/// A relabeling acts with Koszul signs: permutations of vertices and
/// boundaries contribute their sign raised to d, permutations of edges
/// contribute sign^(1-d), and reversing an edge direction contributes
/// (-1)^d.
struct LabelledData {
    // vertex representatives (any half-edge of the cycle), in intended order
    std::vector<int> vertex_order;
    // directed edges (tail, head) in intended order
    std::vector<std::pair<int, int>> edge_order;
    // boundary representatives in intended order
    std::vector<int> boundary_order;

    static LabelledData induced(const RibbonGraph& g);
};

/// Sign relating `data` to the induced labelling of `g`.
int labelling_sign(const RibbonGraph& g, const LabelledData& data, int d);

/// D1 sign of the relabeling p taking g to p.g (both read with induced labels).
int relabel_sign(const RibbonGraph& g, const std::vector<int>& p, int d);

/// Canonical representative with orientation bookkeeping; may be the zero class.
class OrientedClass {
public:
    OrientedClass(const RibbonGraph& g, int d);

    const RibbonGraph& graph() const { return *graph_; }
    int parity_d() const { return d_; }
    bool is_zero() const { return is_zero_; }
    int sign_to_canonical() const { return sign_; }
    const std::string& key() const { return key_; }

    // number of relabelings realizing the canonical word == |Aut|
    int automorphism_count() const { return aut_count_; }

private:
    std::shared_ptr<const RibbonGraph> graph_;
    int d_;
    bool is_zero_;
    int sign_;
    int aut_count_;
    std::string key_;
};

/// Minimal traversal encoding over all starting half-edges, together with the
/// relabelings (old -> new) achieving it. The encoding word interleaves the
/// sigma and iota tables of the relabeled graph.
struct CanonicalSearch {
    std::vector<int> word;
    std::vector<std::vector<int>> winners;
};
CanonicalSearch canonical_search(const RibbonGraph& g);

} // namespace rgc

#endif
