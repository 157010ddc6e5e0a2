#include "rgc/permutation.hpp"

#include <algorithm>

namespace rgc {
namespace perm {

bool is_permutation(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> seen(n, 0);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

std::vector<std::vector<int>> cycles(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> done(n, 0);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < n; ++i) {
        if (done[i]) continue;
        std::vector<int> cyc;
        int j = i;
        do {
            cyc.push_back(j);
            done[j] = 1;
            j = p[j];
        } while (j != i);
        out.push_back(std::move(cyc));
    }
    return out; // iteration from 0 upward already yields min-first, min-sorted cycles
}

std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
}

std::vector<int> inverse(const std::vector<int>& p) {
    std::vector<int> r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

std::vector<int> identity(int n) {
    std::vector<int> r(n);
    for (int i = 0; i < n; ++i) r[i] = i;
    return r;
}

int sign(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    const int c = static_cast<int>(cycles(p).size());
    return ((n - c) % 2 == 0) ? 1 : -1;
}

} // namespace perm
} // namespace rgc
