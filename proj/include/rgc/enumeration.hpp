#ifndef RGC_ENUMERATION_HPP
#define RGC_ENUMERATION_HPP

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rgc/oriented.hpp"

namespace rgc {

/// Basis selector: either fixed (#V, #E), or fixed (g, n, #E) which forces
/// #V = E - n + 2 - 2g.
struct Selector {
    int d = 1;
    std::optional<std::pair<int, int>> ve;           // (V, E)
    std::optional<std::tuple<int, int, int>> gne;    // (g, n, E)

    static Selector vertices_edges(int d, int V, int E);
    static Selector sector(int d, int g, int n, int E);

    // resolved (V, E); throws bad_selector on invalid input
    std::pair<int, int> resolve() const;
    std::string str() const;
};

/// Ordered basis of nonzero oriented classes matching the selector,
/// deterministic (canonical keys ascending).
struct SectorBasis {
    Selector selector;
    std::vector<OrientedClass> classes;

    int index_of(const std::string& key) const; // -1 if absent
};

SectorBasis enumerate_basis(const Selector& sel);

/// All isomorphism classes (V, E) before orientation filtering, as canonical
/// representatives; used by tests and the unfiltered counts.
std::vector<RibbonGraph> enumerate_all_graphs(int V, int E);

/// The bivalent k-cycle G_k (k vertices, k edges); G_1 is the tadpole.
RibbonGraph bivalent_cycle(int k);

} // namespace rgc

#endif
