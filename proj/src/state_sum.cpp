#include "rgc/state_sum.hpp"

#include <functional>

namespace rgc {

namespace {

// All cyclic-order-preserving injective assignments of word positions to the
// k half-edges of one vertex: pick the position of the first half-edge, then
// strictly increasing offsets for the rest.
void vertex_states(int word_len, int k, const std::function<void(const std::vector<int>&)>& emit) {
    if (word_len < k) return;
    std::vector<int> offsets(k, 0); // offsets[t] for t >= 1 are relative to p0
    std::vector<int> positions(k, 0);
    for (int p0 = 0; p0 < word_len; ++p0) {
        std::function<void(int, int)> rec = [&](int t, int min_off) {
            if (t == k) {
                positions[0] = p0;
                for (int tt = 1; tt < k; ++tt) positions[tt] = (p0 + offsets[tt]) % word_len;
                emit(positions);
                return;
            }
            for (int o = min_off; o <= word_len - (k - t); ++o) {
                offsets[t] = o;
                rec(t + 1, o + 1);
            }
        };
        rec(1, 1);
    }
}

} // namespace

NecklaceTensor rho_eval(const OrientedClass& cls, const SymplecticBasis& basis,
                        const std::vector<Necklace>& inputs) {
    const RibbonGraph& g = cls.graph();
    const int V = g.num_vertices();
    const int B = g.num_boundaries();
    if (static_cast<int>(inputs.size()) != V)
        throw error(errc::arity_mismatch, "rho_eval needs one input per vertex (" +
                                              std::to_string(V) + " vertices, " +
                                              std::to_string(inputs.size()) + " inputs)");
    for (const Necklace& n : inputs)
        if (n.genus() != basis.g)
            throw error(errc::basis_mismatch, "input necklace genus mismatch");

    NecklaceTensor out(basis.g, B);
    const int nh = g.num_half_edges();

    // multilinear expansion over the input terms
    std::vector<std::pair<Word, Rat>> chosen(V);
    std::function<void(int, const Rat&)> over_terms = [&](int vi, const Rat& coeff) {
        if (vi == V) {
            // state sum for this tuple of words
            std::vector<int> letter_at(nh, -1);
            std::vector<Word> corner_after(nh);
            std::function<void(int)> assign = [&](int v) {
                if (v == V) {
                    Rat weight = coeff;
                    for (auto [lo, hi] : g.edges()) {
                        int p = basis.pairing(letter_at[lo], letter_at[hi]);
                        if (!p) return;
                        if (p < 0) weight = -weight;
                    }
                    std::vector<Word> outs(B);
                    for (int b = 0; b < B; ++b) {
                        Word w;
                        for (int h : g.boundary_cycles()[b]) {
                            const Word& c = corner_after[g.iota()[h]];
                            w.insert(w.end(), c.begin(), c.end());
                        }
                        outs[b] = std::move(w);
                    }
                    out.add(outs, weight);
                    return;
                }
                const std::vector<int>& rot = g.vertices()[v];
                const int k = static_cast<int>(rot.size());
                const Word& w = chosen[v].first;
                const int L = static_cast<int>(w.size());
                vertex_states(L, k, [&](const std::vector<int>& pos) {
                    for (int t = 0; t < k; ++t) {
                        letter_at[rot[t]] = w[pos[t]];
                        Word corner;
                        const int from = pos[t], to = pos[(t + 1) % k];
                        for (int p = (from + 1) % L; p != to; p = (p + 1) % L)
                            corner.push_back(w[p]);
                        corner_after[rot[t]] = std::move(corner);
                    }
                    assign(v + 1);
                });
            };
            assign(0);
            return;
        }
        for (const auto& [w, c] : inputs[vi].terms()) {
            chosen[vi] = {w, c};
            over_terms(vi + 1, coeff * c);
        }
    };
    over_terms(0, Rat(1));
    return out;
}

} // namespace rgc
