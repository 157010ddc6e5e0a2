#ifndef RGC_COHOMOLOGY_HPP
#define RGC_COHOMOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "rgc/enumeration.hpp"
#include "rgc/expansion.hpp"
#include "rgc/sparse.hpp"

namespace rgc {

/// Differential matrix from an enumerated source basis to an enumerated
/// target basis; column j holds the coordinates of the vertex expansion of
/// the j-th source class. The target selector must raise V and E by one
/// (same d, same (g, n) when sector-restricted).
SparseMatrix differential_matrix(const SectorBasis& src, const SectorBasis& dst);

/// Differential with implicit rows: targets indexed by canonical key in key
/// order, no target enumeration. Enough for ranks and kernel dimensions.
SparseMatrix differential_implicit(const SectorBasis& src);

struct CohomologyReport {
    int d = 0;
    std::optional<std::pair<int, int>> sector; // (g, n); nullopt = "all" (fixed V)
    std::string grading;                       // "vertex" or "degree"
    int degree = 0;
    int dim = 0;
    std::pair<int, int> e_range{0, 0};
    bool exact = true;
    // bookkeeping for reports
    int e_used = 0;
    int basis_size = 0;
    int kernel_dim = 0;
    int incoming_rank = 0;

    std::string to_json() const;
};

/// Cohomology dimension in a (g, n) sector at one degree of the chosen
/// grading. Throws errc::truncated when the E-range does not cover degrees
/// degree-1..degree+1 unless allow_truncation is set (then the incoming
/// differential may be skipped and the report is marked inexact).
CohomologyReport sector_cohomology(int d, int g, int n, const std::string& grading, int degree,
                                   std::pair<int, int> e_range, bool allow_truncation,
                                   int threads = 1);

/// Vertex-grading reports at fixed #V, one per E in the range: kernel of the
/// outgoing differential minus rank of the incoming one (for V = 1 there is
/// no incoming differential).
std::vector<CohomologyReport> vertex_cohomology(int d, int V, std::pair<int, int> e_range,
                                                int threads = 1);

} // namespace rgc

#endif
