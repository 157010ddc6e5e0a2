#ifndef RGC_SPARSE_HPP
#define RGC_SPARSE_HPP

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "rgc/rational.hpp"

namespace rgc {

/// Exact-rational sparse matrix between graded bases. Entries are stored as
/// (row, column, coefficient) triples, sorted, with no explicit zeros.
struct SparseMatrix {
    std::string row_basis_id;
    std::string col_basis_id;
    int rows = 0;
    int cols = 0;
    std::vector<std::tuple<int, int, Rat>> entries;

    void add_entry(int r, int c, const Rat& v);
    void sort_entries();
    size_t nnz() const { return entries.size(); }
};

/// Exact rank over the rationals (design decision D6): modular rank at three
/// fixed primes above 2^31 with an agreement check, escalating to exact
/// elimination on disagreement or when the matrix has fewer than 5000
/// nonzeros. Deterministic; `threads` may parallelize the per-prime passes
/// without changing the result.
int rank(const SparseMatrix& m, int threads = 1);

/// Rank mod p (p an odd prime < 2^62); exposed for tests.
int rank_mod(const SparseMatrix& m, uint64_t p);

/// Exact rank by rational elimination (fraction-free Bareiss when the dense
/// profile is small, sparse rational Gaussian elimination otherwise);
/// exposed for tests.
int rank_exact(const SparseMatrix& m);

/// The three certification primes.
extern const uint64_t kRankPrimes[3];

} // namespace rgc

#endif
