#include "rgc/oriented.hpp"

#include <algorithm>
#include <map>

#include "rgc/permutation.hpp"

namespace rgc {

LabelledData LabelledData::induced(const RibbonGraph& g) {
    LabelledData d;
    for (const auto& v : g.vertices()) d.vertex_order.push_back(v.front());
    d.edge_order = g.edges();
    for (const auto& b : g.boundary_cycles()) d.boundary_order.push_back(b.front());
    return d;
}

int labelling_sign(const RibbonGraph& g, const LabelledData& data, int d) {
    const int V = g.num_vertices();
    const int B = g.num_boundaries();
    const int E = g.num_edges();
    if (static_cast<int>(data.vertex_order.size()) != V ||
        static_cast<int>(data.edge_order.size()) != E ||
        static_cast<int>(data.boundary_order.size()) != B)
        throw error(errc::invalid_graph, "labelled data does not match graph");

    std::vector<int> pv(V), pe(E), pb(B);
    std::vector<char> seen_v(V, 0), seen_e(E, 0), seen_b(B, 0);
    for (int i = 0; i < V; ++i) {
        int idx = g.vertex_of(data.vertex_order[i]);
        pv[i] = idx;
        if (seen_v[idx]++) throw error(errc::invalid_graph, "duplicate vertex label");
    }
    int flips = 0;
    for (int i = 0; i < E; ++i) {
        auto [t, h] = data.edge_order[i];
        int idx = g.edge_of(t);
        if (g.edge_of(h) != idx || t == h)
            throw error(errc::invalid_graph, "edge label is not an edge");
        pe[i] = idx;
        if (seen_e[idx]++) throw error(errc::invalid_graph, "duplicate edge label");
        if (t > h) ++flips; // induced direction is low -> high
    }
    for (int i = 0; i < B; ++i) {
        int idx = g.boundary_of(data.boundary_order[i]);
        pb[i] = idx;
        if (seen_b[idx]++) throw error(errc::invalid_graph, "duplicate boundary label");
    }

    int s = 1;
    if (d == 1) {
        s *= perm::sign(pv) * perm::sign(pb);
        if (flips % 2) s = -s;
    } else {
        s *= perm::sign(pe);
    }
    return s;
}

int relabel_sign(const RibbonGraph& g, const std::vector<int>& p, int d) {
    // Push g's induced labelling through p and measure it against the induced
    // labelling of the relabeled graph.
    RibbonGraph h = g.relabeled(p);
    LabelledData data;
    for (const auto& v : g.vertices()) data.vertex_order.push_back(p[v.front()]);
    for (auto [t, hd] : g.edges()) data.edge_order.emplace_back(p[t], p[hd]);
    for (const auto& b : g.boundary_cycles()) data.boundary_order.push_back(p[b.front()]);
    return labelling_sign(h, data, d);
}

namespace {

// Deterministic traversal labeling from a root. Emits the interleaved
// (sigma', iota') word; new labels are handed out in first-need order, which
// makes the word the lexicographic minimum over all relabelings with
// phi(root) = 0.
void traverse(const RibbonGraph& g, int root, std::vector<int>& word, std::vector<int>& phi) {
    const int n = g.num_half_edges();
    static thread_local std::vector<int> inv;
    inv.assign(n, -1);
    phi.assign(n, -1);
    phi[root] = 0;
    inv[0] = root;
    int m = 1;
    word.clear();
    word.reserve(2 * n);
    for (int h = 0; h < n; ++h) {
        const int x = inv[h]; // connected => assigned by the time we get here
        int s = g.sigma()[x];
        if (phi[s] < 0) {
            phi[s] = m;
            inv[m++] = s;
        }
        word.push_back(phi[s]);
        int t = g.iota()[x];
        if (phi[t] < 0) {
            phi[t] = m;
            inv[m++] = t;
        }
        word.push_back(phi[t]);
    }
}

} // namespace

CanonicalSearch canonical_search(const RibbonGraph& g) {
    const int n = g.num_half_edges();
    CanonicalSearch res;
    std::vector<int> word, phi;
    for (int root = 0; root < n; ++root) {
        traverse(g, root, word, phi);
        if (res.word.empty() || word < res.word) {
            res.word = word;
            res.winners.clear();
            res.winners.push_back(phi);
        } else if (word == res.word) {
            res.winners.push_back(phi);
        }
    }
    return res;
}

OrientedClass::OrientedClass(const RibbonGraph& g, int d) : d_(d) {
    if (d != 0 && d != 1)
        throw error(errc::bad_selector, "parity d must be 0 or 1");
    CanonicalSearch cs = canonical_search(g);
    const int n = g.num_half_edges();
    std::vector<int> s(n), i(n);
    for (int h = 0; h < n; ++h) {
        s[h] = cs.word[2 * h];
        i[h] = cs.word[2 * h + 1];
    }
    graph_ = std::make_shared<const RibbonGraph>(std::move(s), std::move(i));
    aut_count_ = static_cast<int>(cs.winners.size());

    int first = relabel_sign(g, cs.winners.front(), d);
    is_zero_ = false;
    for (size_t w = 1; w < cs.winners.size() && !is_zero_; ++w)
        if (relabel_sign(g, cs.winners[w], d) != first) is_zero_ = true;
    sign_ = is_zero_ ? 1 : first;
    key_ = graph_->key();
}

} // namespace rgc
