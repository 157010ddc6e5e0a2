#ifndef RGC_PERMUTATION_HPP
#define RGC_PERMUTATION_HPP

#include <vector>

namespace rgc {

namespace perm {

// A permutation is a vector<int> p of size n with p[i] = image of i.

bool is_permutation(const std::vector<int>& p);

// cycles, each rotated to start at its minimum, sorted by minimum
std::vector<std::vector<int>> cycles(const std::vector<int>& p);

std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q); // p after q
std::vector<int> inverse(const std::vector<int>& p);
std::vector<int> identity(int n);

// sign of p as (-1)^(n - #cycles)
int sign(const std::vector<int>& p);

} // namespace perm

} // namespace rgc

#endif
