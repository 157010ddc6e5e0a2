#ifndef RGC_EXPANSION_HPP
#define RGC_EXPANSION_HPP

#include <map>
#include <string>
#include <utility>

#include "rgc/oriented.hpp"
#include "rgc/rational.hpp"

namespace rgc {

/// Formal rational combination of oriented classes of one parity.
class ClassSum {
public:
    explicit ClassSum(int d) : d_(d) {}
    int parity_d() const { return d_; }

    void add(const OrientedClass& c, const Rat& coeff);
    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    const std::map<std::string, std::pair<OrientedClass, Rat>>& terms() const { return terms_; }

private:
    int d_;
    std::map<std::string, std::pair<OrientedClass, Rat>> terms_;
};

/// The differential applied to a single labelled generator: for every vertex
/// and every splitting of its rotation into two nonempty contiguous arcs,
/// replace the vertex by two vertices joined by a new edge and canonicalize
/// the result with its orientation sign. The splitting of the i-th vertex
/// (0-based) carries the Koszul factor (-1)^(d*i); the two arc assignments
/// give equal generators, so each unordered splitting is emitted once.
///
/// Splittings with an empty arc pair off against the boundary-attachment
/// terms of the deformation differential and cancel; they are not emitted.
/// The convention is certified by tests/test_convention.cpp (delta^2 = 0 on
/// all sectors with E <= 6 for both parities, delta(G_1) = 0, the G_k
/// cocycle facts, and the (1,1)-sector cohomology).
///
/// Every term has #V+1 vertices, #E+1 edges and the same (genus, #B) as the
/// input.
ClassSum vertex_expansion(const RibbonGraph& g, int d);

/// Same, on a nonzero oriented class (expands the canonical representative).
ClassSum vertex_expansion(const OrientedClass& cls);

} // namespace rgc

#endif
