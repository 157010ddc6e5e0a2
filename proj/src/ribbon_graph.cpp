#include "rgc/ribbon_graph.hpp"

#include <algorithm>

#include "rgc/permutation.hpp"

namespace rgc {

RibbonGraph::RibbonGraph(std::vector<int> sigma, std::vector<int> iota)
    : sigma_(std::move(sigma)), iota_(std::move(iota)) {
    const int n = static_cast<int>(sigma_.size());
    if (n == 0 || n % 2 != 0 || iota_.size() != sigma_.size())
        throw error(errc::invalid_graph, "half-edge count must be positive and even");
    E_ = n / 2;
    if (!perm::is_permutation(sigma_))
        throw error(errc::not_permutation, "sigma is not a permutation of 0..2E-1");
    if (!perm::is_permutation(iota_))
        throw error(errc::not_permutation, "iota is not a permutation of 0..2E-1");
    for (int h = 0; h < n; ++h) {
        if (iota_[h] == h)
            throw error(errc::iota_fixed_point, "iota has a fixed point at " + std::to_string(h));
        if (iota_[iota_[h]] != h)
            throw error(errc::iota_not_involution, "iota is not an involution");
    }

    // connectivity under <sigma, iota>
    {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int h = stack.back();
            stack.pop_back();
            for (int t : {sigma_[h], iota_[h]}) {
                if (!seen[t]) {
                    seen[t] = 1;
                    ++count;
                    stack.push_back(t);
                }
            }
        }
        if (count != n)
            throw error(errc::disconnected, "graph is not connected");
    }

    vertices_ = perm::cycles(sigma_);
    std::vector<int> beta(n);
    for (int h = 0; h < n; ++h) beta[h] = sigma_[iota_[h]];
    boundaries_ = perm::cycles(beta);

    vertex_of_.assign(n, -1);
    for (int v = 0; v < static_cast<int>(vertices_.size()); ++v)
        for (int h : vertices_[v]) vertex_of_[h] = v;
    boundary_of_.assign(n, -1);
    for (int b = 0; b < static_cast<int>(boundaries_.size()); ++b)
        for (int h : boundaries_[b]) boundary_of_[h] = b;

    edge_of_.assign(n, -1);
    for (int h = 0; h < n; ++h) {
        if (h < iota_[h]) {
            edge_of_[h] = edge_of_[iota_[h]] = static_cast<int>(edges_.size());
            edges_.emplace_back(h, iota_[h]);
        }
    }

    // V - E + B = 2 - 2g
    const int chi = num_vertices() - E_ + num_boundaries();
    if ((2 - chi) % 2 != 0 || 2 - chi < 0)
        throw error(errc::invalid_graph, "Euler formula gives invalid genus");
    genus_ = (2 - chi) / 2;
}

int RibbonGraph::degree(int d) const {
    return d * (num_vertices() + num_boundaries() - 2) + (1 - d) * E_;
}

std::vector<std::vector<int>> RibbonGraph::automorphisms() const {
    // An automorphism of a connected map is determined by the image of one
    // half-edge; propagate along sigma and iota and keep consistent results.
    const int n = 2 * E_;
    std::vector<std::vector<int>> out;
    for (int target = 0; target < n; ++target) {
        std::vector<int> a(n, -1);
        a[0] = target;
        std::vector<int> stack{0};
        bool ok = true;
        while (ok && !stack.empty()) {
            int h = stack.back();
            stack.pop_back();
            const int pairs[2][2] = {{sigma_[h], sigma_[a[h]]}, {iota_[h], iota_[a[h]]}};
            for (auto& pr : pairs) {
                int src = pr[0], img = pr[1];
                if (a[src] == -1) {
                    a[src] = img;
                    stack.push_back(src);
                } else if (a[src] != img) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        if (!perm::is_permutation(a)) continue;
        // double-check commutation (propagation guarantees it, cheap anyway)
        bool comm = true;
        for (int h = 0; h < n && comm; ++h)
            comm = a[sigma_[h]] == sigma_[a[h]] && a[iota_[h]] == iota_[a[h]];
        if (comm) out.push_back(std::move(a));
    }
    return out;
}

RibbonGraph RibbonGraph::relabeled(const std::vector<int>& p) const {
    const int n = 2 * E_;
    std::vector<int> s(n), i(n);
    for (int h = 0; h < n; ++h) {
        s[p[h]] = p[sigma_[h]];
        i[p[h]] = p[iota_[h]];
    }
    return RibbonGraph(std::move(s), std::move(i));
}

std::string RibbonGraph::key() const {
    std::string k;
    k.reserve(sigma_.size() * 6);
    for (size_t h = 0; h < sigma_.size(); ++h) {
        k += std::to_string(sigma_[h]);
        k += ',';
        k += std::to_string(iota_[h]);
        k += ';';
    }
    return k;
}

} // namespace rgc
