#include "rgc/expansion.hpp"

#include <algorithm>

namespace rgc {

void ClassSum::add(const OrientedClass& c, const Rat& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(c.key());
    if (it == terms_.end()) {
        terms_.emplace(c.key(), std::make_pair(c, coeff));
    } else {
        it->second.second += coeff;
        if (it->second.second.is_zero()) terms_.erase(it);
    }
}

namespace {

// Build the split graph: the chosen vertex of g is replaced by two vertices
// (n1, arc_a...) and (n2, arc_b...) joined by the new edge {n1, n2}.
RibbonGraph split_graph(const RibbonGraph& g, const std::vector<int>& arc_a,
                        const std::vector<int>& arc_b) {
    const int n = g.num_half_edges();
    const int n1 = n, n2 = n + 1;
    std::vector<int> s(g.sigma());
    std::vector<int> i(g.iota());
    s.resize(n + 2);
    i.resize(n + 2);
    auto write_cycle = [&s](int nh, const std::vector<int>& arc) {
        int prev = nh;
        for (int h : arc) {
            s[prev] = h;
            prev = h;
        }
        s[prev] = nh;
    };
    write_cycle(n1, arc_a);
    write_cycle(n2, arc_b);
    i[n1] = n2;
    i[n2] = n1;
    return RibbonGraph(std::move(s), std::move(i));
}

// Intended labelling of a split term: old edges keep their order and
// directions, the new edge (n1 -> n2) comes last; boundary labels are
// inherited through the natural bijection (each boundary walk of the split
// graph visits exactly the old half-edges of one boundary walk of g).
LabelledData inherited_labels(const RibbonGraph& g, const RibbonGraph& split,
                              const std::vector<int>& vertex_order) {
    const int n = g.num_half_edges();
    LabelledData data;
    data.vertex_order = vertex_order;
    data.edge_order = g.edges();
    data.edge_order.emplace_back(n, n + 1);

    if (split.num_boundaries() != g.num_boundaries() || split.genus() != g.genus())
        throw error(errc::invalid_graph, "vertex expansion changed (g, #B)");
    std::vector<int> image(g.num_boundaries(), -1);
    for (const auto& cyc : split.boundary_cycles()) {
        int old_b = -1;
        for (int h : cyc) {
            if (h >= n) continue;
            if (old_b == -1) old_b = g.boundary_of(h);
            else if (g.boundary_of(h) != old_b)
                throw error(errc::invalid_graph, "boundary walk split under expansion");
        }
        if (old_b == -1)
            throw error(errc::invalid_graph, "boundary walk without old half-edges");
        if (image[old_b] != -1)
            throw error(errc::invalid_graph, "boundary walk duplicated under expansion");
        image[old_b] = cyc.front();
    }
    data.boundary_order.assign(image.begin(), image.end());
    return data;
}

} // namespace

ClassSum vertex_expansion(const RibbonGraph& g, int d) {
    ClassSum out(d);
    const int n = g.num_half_edges();
    const int n1 = n, n2 = n + 1;
    const int V = g.num_vertices();

    for (int vi = 0; vi < V; ++vi) {
        const std::vector<int>& cyc = g.vertices()[vi];
        const int k = static_cast<int>(cyc.size());
        const int split_sign = (d == 1 && vi % 2 == 1) ? -1 : 1;

        // cut the rotation at gaps s < t; both arcs nonempty
        for (int sgap = 0; sgap < k; ++sgap) {
            for (int tgap = sgap + 1; tgap < k; ++tgap) {
                std::vector<int> arc_a, arc_b;
                for (int p = sgap; p < tgap; ++p) arc_a.push_back(cyc[p]);
                for (int p = tgap; p < sgap + k; ++p) arc_b.push_back(cyc[p % k]);
                RibbonGraph h = split_graph(g, arc_a, arc_b);

                // v' (with n1) takes the split vertex's position, v'' follows it
                std::vector<int> vorder;
                vorder.reserve(V + 1);
                for (int v = 0; v < V; ++v) {
                    if (v == vi) {
                        vorder.push_back(n1);
                        vorder.push_back(n2);
                    } else {
                        vorder.push_back(g.vertices()[v].front());
                    }
                }
                LabelledData data = inherited_labels(g, h, vorder);
                int sign = split_sign * labelling_sign(h, data, d);
                OrientedClass c(h, d);
                if (!c.is_zero()) out.add(c, Rat(sign * c.sign_to_canonical()));
            }
        }
    }
    return out;
}

ClassSum vertex_expansion(const OrientedClass& cls) {
    if (cls.is_zero())
        throw error(errc::invalid_graph, "cannot expand the zero class");
    return vertex_expansion(cls.graph(), cls.parity_d());
}

} // namespace rgc
