#include "rgc/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace rgc {

Selector Selector::vertices_edges(int d, int V, int E) {
    Selector s;
    s.d = d;
    s.ve = {V, E};
    return s;
}

Selector Selector::sector(int d, int g, int n, int E) {
    Selector s;
    s.d = d;
    s.gne = {g, n, E};
    return s;
}

std::pair<int, int> Selector::resolve() const {
    if (d != 0 && d != 1) throw error(errc::bad_selector, "d must be 0 or 1");
    if (ve) {
        auto [V, E] = *ve;
        if (V <= 0) throw error(errc::bad_selector, "V must be positive");
        if (E <= 0) throw error(errc::bad_selector, "E must be positive");
        if (V > E + 1) throw error(errc::bad_selector, "V > E + 1 has no connected graphs");
        return {V, E};
    }
    if (gne) {
        auto [g, n, E] = *gne;
        if (g < 0 || n < 1) throw error(errc::bad_selector, "need g >= 0, n >= 1");
        if (E <= 0) throw error(errc::bad_selector, "E must be positive");
        int V = E - n + 2 - 2 * g;
        if (V <= 0) throw error(errc::bad_selector, "sector forces non-positive V");
        return {V, E};
    }
    throw error(errc::bad_selector, "empty selector");
}

std::string Selector::str() const {
    if (ve) return "d=" + std::to_string(d) + ";V=" + std::to_string(ve->first) +
                   ";E=" + std::to_string(ve->second);
    auto [g, n, E] = *gne;
    return "d=" + std::to_string(d) + ";g=" + std::to_string(g) + ";n=" + std::to_string(n) +
           ";E=" + std::to_string(E);
}

int SectorBasis::index_of(const std::string& key) const {
    auto it = std::lower_bound(classes.begin(), classes.end(), key,
                               [](const OrientedClass& c, const std::string& k) { return c.key() < k; });
    if (it == classes.end() || it->key() != key) return -1;
    return static_cast<int>(it - classes.begin());
}

namespace {

// all fixed-point-free involutions of {0..n-1}, n even
void matchings_rec(std::vector<int>& m, std::vector<char>& used, int n,
                   const std::function<void(const std::vector<int>&)>& emit) {
    int a = 0;
    while (a < n && used[a]) ++a;
    if (a == n) {
        emit(m);
        return;
    }
    used[a] = 1;
    for (int b = a + 1; b < n; ++b) {
        if (used[b]) continue;
        used[b] = 1;
        m[a] = b;
        m[b] = a;
        matchings_rec(m, used, n, emit);
        used[b] = 0;
    }
    used[a] = 0;
}

void for_each_matching(int n, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> m(n, -1);
    std::vector<char> used(n, 0);
    matchings_rec(m, used, n, emit);
}

// partitions of total into exactly parts parts, each >= 1, non-increasing
void partitions_rec(int total, int parts, int maxpart, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int p = std::min(maxpart, total - (parts - 1)); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(total - p, parts - 1, p, cur, out);
        cur.pop_back();
    }
}

std::vector<int> sigma_from_partition(const std::vector<int>& lambda) {
    std::vector<int> s;
    int base = 0;
    for (int len : lambda) {
        for (int t = 0; t < len; ++t) s.push_back(base + (t + 1) % len);
        base += len;
    }
    return s;
}

bool connected_tables(const std::vector<int>& sigma, const std::vector<int>& iota) {
    const int n = static_cast<int>(sigma.size());
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int h = stack.back();
        stack.pop_back();
        for (int t : {sigma[h], iota[h]}) {
            if (!seen[t]) {
                seen[t] = 1;
                ++cnt;
                stack.push_back(t);
            }
        }
    }
    return cnt == n;
}

} // namespace

std::vector<RibbonGraph> enumerate_all_graphs(int V, int E) {
    if (V <= 0 || E <= 0 || V > E + 1)
        throw error(errc::bad_selector, "invalid (V, E)");
    std::vector<std::vector<int>> lambdas;
    std::vector<int> cur;
    partitions_rec(2 * E, V, 2 * E, cur, lambdas);

    std::map<std::string, RibbonGraph> seen;
    for (const auto& lambda : lambdas) {
        std::vector<int> sigma = sigma_from_partition(lambda);
        for_each_matching(2 * E, [&](const std::vector<int>& iota) {
            if (!connected_tables(sigma, iota)) return;
            RibbonGraph g(sigma, iota);
            CanonicalSearch cs = canonical_search(g);
            const int n = 2 * E;
            std::vector<int> s(n), i(n);
            for (int h = 0; h < n; ++h) {
                s[h] = cs.word[2 * h];
                i[h] = cs.word[2 * h + 1];
            }
            RibbonGraph canon(std::move(s), std::move(i));
            seen.emplace(canon.key(), std::move(canon));
        });
    }
    std::vector<RibbonGraph> out;
    out.reserve(seen.size());
    for (auto& [k, g] : seen) out.push_back(std::move(g));
    return out;
}

SectorBasis enumerate_basis(const Selector& sel) {
    auto [V, E] = sel.resolve();
    SectorBasis basis;
    basis.selector = sel;
    for (const RibbonGraph& g : enumerate_all_graphs(V, E)) {
        if (sel.gne) {
            auto [gg, n, ee] = *sel.gne;
            if (g.genus() != gg || g.num_boundaries() != n) continue;
        }
        OrientedClass c(g, sel.d);
        if (!c.is_zero()) basis.classes.push_back(std::move(c));
    }
    // enumerate_all_graphs returns canonical keys ascending already; keep sorted
    std::sort(basis.classes.begin(), basis.classes.end(),
              [](const OrientedClass& a, const OrientedClass& b) { return a.key() < b.key(); });
    return basis;
}

RibbonGraph bivalent_cycle(int k) {
    if (k < 1) throw error(errc::bad_selector, "k must be positive");
    if (k == 1) return RibbonGraph({1, 0}, {1, 0}); // the tadpole
    const int n = 2 * k;
    std::vector<int> sigma(n), iota(n);
    for (int v = 0; v < k; ++v) {
        sigma[2 * v] = 2 * v + 1;
        sigma[2 * v + 1] = 2 * v;
        iota[2 * v + 1] = (2 * v + 2) % n;
        iota[(2 * v + 2) % n] = 2 * v + 1;
    }
    return RibbonGraph(std::move(sigma), std::move(iota));
}

} // namespace rgc
