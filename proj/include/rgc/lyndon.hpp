#ifndef RGC_LYNDON_HPP
#define RGC_LYNDON_HPP

#include <map>
#include <string>
#include <vector>

#include "rgc/necklace.hpp" // Word, SymplecticBasis
#include "rgc/rational.hpp"

namespace rgc {

/// Homogeneous-or-not element of the tensor algebra T(H), as a rational
/// combination of words over the 2g letters.
using Tensor = std::map<Word, Rat>;

void tensor_add(Tensor& t, const Word& w, const Rat& c);
void tensor_add(Tensor& t, const Tensor& o, const Rat& scale = Rat(1));
Tensor tensor_concat(const Tensor& a, const Tensor& b);
Tensor tensor_bracket(const Tensor& a, const Tensor& b); // ab - ba
bool tensor_is_zero(const Tensor& t);

/// Lyndon words of the given length over an alphabet of `letters` symbols
/// (Duval's algorithm), lexicographically ordered.
std::vector<Word> lyndon_words(int letters, int length);

/// Witt dimension of the degree-k part of the free Lie algebra on n letters.
long witt_dimension(int letters, int length);

/// Tensor expansion of the standard (right-normed, longest-proper-Lyndon-
/// suffix) bracketing of a Lyndon word. Memoized per alphabet size.
const Tensor& lyndon_bracket_expansion(int letters, const Word& w);

/// Element of the free Lie algebra L(H) in Lyndon coordinates. Keys are
/// Lyndon words; the normal form is unique (the expansions are triangular
/// with respect to the word order).
class LieElt {
public:
    explicit LieElt(int genus) : g_(genus) {}
    int genus() const { return g_; }

    void add(const Word& lyndon_word, const Rat& c);
    LieElt& operator+=(const LieElt& o);
    LieElt operator*(const Rat& c) const;
    bool is_zero() const { return coords_.empty(); }
    const std::map<Word, Rat>& coords() const { return coords_; }

    Tensor to_tensor() const;

private:
    int g_;
    std::map<Word, Rat> coords_;
};

/// Convert a Lie element of T(H) to Lyndon coordinates by triangular
/// elimination. Throws degree_error if the input is not a Lie element.
LieElt tensor_to_lie(int genus, const Tensor& t);

/// Lie bracket in Lyndon coordinates (through the tensor algebra).
LieElt lie_bracket(const LieElt& a, const LieElt& b);

/// omega = sum_i [a_i, b_i] as a tensor (the boundary class).
Tensor omega_tensor(int genus);

} // namespace rgc

#endif
