#ifndef RGC_STATE_SUM_HPP
#define RGC_STATE_SUM_HPP

#include <vector>

#include "rgc/necklace.hpp"
#include "rgc/oriented.hpp"

namespace rgc {

/// The canonical representation rho_H evaluated on one ribbon graph: a
/// multilinear map |T(H)|^(x #V) -> |T(H)|^(x #B).
///
/// On a tuple of cyclic words the value is a state sum. A state assigns, for
/// each vertex, one letter of its input word to each half-edge so that the
/// letters respect the rotation's cyclic order; the remaining letters sit in
/// the corners between consecutive half-edges. A state is weighted by the
/// product over edges of the pairing of the two letters at the edge's ends
/// (taken tail first along the canonical direction). Each boundary walk then
/// reads off its corner letters in walk order (beta = sigma o iota) to
/// produce one output cyclic word.
///
/// Inputs are fed to the canonical representative's vertices in induced
/// order; outputs follow the induced boundary order. Throws arity_mismatch
/// if the number of inputs differs from #V, basis_mismatch on mixed genera.
NecklaceTensor rho_eval(const OrientedClass& cls, const SymplecticBasis& basis,
                        const std::vector<Necklace>& inputs);

} // namespace rgc

#endif
