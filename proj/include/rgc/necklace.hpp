#ifndef RGC_NECKLACE_HPP
#define RGC_NECKLACE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rgc/rational.hpp"

namespace rgc {

/// Letters of the symplectic basis of H = H_1(Sigma_{g,1}): a_i = 2(i-1),
/// b_i = 2(i-1)+1 for i = 1..g, ordered a_1 < b_1 < a_2 < ... The pairing is
/// <a_i, b_i> = 1, <b_i, a_i> = -1, zero otherwise.
struct SymplecticBasis {
    int g;

    explicit SymplecticBasis(int genus) : g(genus) {
        if (genus < 1) throw error(errc::bad_selector, "genus must be >= 1");
    }
    int dim() const { return 2 * g; }

    int pairing(int x, int y) const {
        check(x);
        check(y);
        if ((x ^ 1) == y) return (x % 2 == 0) ? 1 : -1;
        return 0;
    }

    std::string name(int letter) const {
        check(letter);
        return (letter % 2 == 0 ? "a" : "b") + std::to_string(letter / 2 + 1);
    }
    int parse_name(const std::string& s) const;

private:
    void check(int letter) const {
        if (letter < 0 || letter >= 2 * g)
            throw error(errc::basis_mismatch, "letter out of basis range");
    }
};

using Word = std::vector<uint8_t>;

/// Lexicographically minimal rotation (canonical form of a cyclic word).
Word min_rotation(Word w);

/// Element of the trace space |T(H)|: exact-rational combination of
/// canonical cyclic words. The empty word is the unit and is retained.
class Necklace {
public:
    explicit Necklace(int genus) : g_(genus) {}
    int genus() const { return g_; }

    static Necklace unit(int genus) {
        Necklace n(genus);
        n.add(Word{}, Rat(1));
        return n;
    }
    static Necklace from_word(int genus, const Word& w, const Rat& c = Rat(1)) {
        Necklace n(genus);
        n.add(w, c);
        return n;
    }

    void add(const Word& w, const Rat& c); // cyclically reduces w
    Necklace& operator+=(const Necklace& o);
    Necklace& operator-=(const Necklace& o);
    Necklace operator*(const Rat& c) const;
    friend Necklace operator+(Necklace a, const Necklace& b) { a += b; return a; }
    friend Necklace operator-(Necklace a, const Necklace& b) { a -= b; return a; }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, Rat>& terms() const { return terms_; }
    bool operator==(const Necklace& o) const { return g_ == o.g_ && terms_ == o.terms_; }

    std::string str(const SymplecticBasis& basis) const;

private:
    int g_;
    std::map<Word, Rat> terms_;
};

/// Combination of ordered m-tuples of canonical cyclic words.
class NecklaceTensor {
public:
    NecklaceTensor(int genus, int arity) : g_(genus), m_(arity) {}
    int genus() const { return g_; }
    int arity() const { return m_; }

    void add(const std::vector<Word>& ws, const Rat& c);
    NecklaceTensor& operator+=(const NecklaceTensor& o);
    NecklaceTensor& operator-=(const NecklaceTensor& o);
    NecklaceTensor operator*(const Rat& c) const;
    friend NecklaceTensor operator+(NecklaceTensor a, const NecklaceTensor& b) { a += b; return a; }
    friend NecklaceTensor operator-(NecklaceTensor a, const NecklaceTensor& b) { a -= b; return a; }

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<Word>, Rat>& terms() const { return terms_; }
    bool operator==(const NecklaceTensor& o) const {
        return g_ == o.g_ && m_ == o.m_ && terms_ == o.terms_;
    }

    /// tensor factor permutation/flip: (x1 (x) x2) -> (x2 (x) x1) for m = 2
    NecklaceTensor flip() const;

private:
    int g_;
    int m_;
    std::map<std::vector<Word>, Rat> terms_;
};

NecklaceTensor tensor_of(const Necklace& a, const Necklace& b);

/// The graded Goldman bracket (necklace Lie bracket): on words,
///   [u, v] = sum_{i,j} <u_i, v_j> | u_{i+1..i-1} v_{j+1..j-1} |.
/// Bilinear, antisymmetric, satisfies Jacobi; signs are the state sum of the
/// two-vertex one-edge graph (design decision D9).
Necklace goldman_bracket(const SymplecticBasis& basis, const Necklace& u, const Necklace& v);

/// The graded Turaev cobracket: on a word,
///   delta(u) = sum_{i != j} <u_i, u_j> | u_{j+1..i-1} | (x) | u_{i+1..j-1} |.
/// Linear, co-antisymmetric, satisfies co-Jacobi; signs are the state sum of
/// the one-vertex one-edge graph G_1 (design decision D9).
NecklaceTensor turaev_cobracket(const SymplecticBasis& basis, const Necklace& u);

/// Adjoint action on tensor factors: u . (x1 (x) x2) = [u,x1] (x) x2 + x1 (x) [u,x2].
NecklaceTensor bracket_action(const SymplecticBasis& basis, const Necklace& u,
                              const NecklaceTensor& t);

/// JSON ({"g":..,"terms":[{"coeff":"3/2","word":["a1","b2"]}]}) round-trip.
std::string necklace_to_json(const SymplecticBasis& basis, const Necklace& n);
Necklace necklace_from_json(const std::string& text);
std::string tensor_to_json(const SymplecticBasis& basis, const NecklaceTensor& t);

} // namespace rgc

#endif
