#include "rgc/cohomology.hpp"

#include <json.hpp>
#include <map>

#include "rgc/cache.hpp"

namespace rgc {

namespace {

Selector bump(const Selector& s) {
    auto [V, E] = s.resolve();
    if (s.gne) {
        auto [g, n, e] = *s.gne;
        return Selector::sector(s.d, g, n, e + 1);
    }
    (void)V;
    return Selector::vertices_edges(s.d, s.ve->first + 1, s.ve->second + 1);
}

} // namespace

SparseMatrix differential_matrix(const SectorBasis& src, const SectorBasis& dst) {
    Selector want = bump(src.selector);
    Selector got = dst.selector;
    if (want.d != got.d || want.resolve() != got.resolve() ||
        static_cast<bool>(want.gne) != static_cast<bool>(got.gne))
        throw error(errc::bad_selector,
                    "target basis must raise V and E by one on the same selector kind");

    SparseMatrix m;
    m.col_basis_id = src.selector.str();
    m.row_basis_id = dst.selector.str();
    m.cols = static_cast<int>(src.classes.size());
    m.rows = static_cast<int>(dst.classes.size());
    for (int j = 0; j < m.cols; ++j) {
        ClassSum e = vertex_expansion(src.classes[j]);
        for (const auto& [key, term] : e.terms()) {
            int r = dst.index_of(key);
            if (r < 0)
                throw error(errc::invalid_graph, "expansion term missing from target basis");
            m.add_entry(r, j, term.second);
        }
    }
    m.sort_entries();
    return m;
}

SparseMatrix differential_implicit(const SectorBasis& src) {
    SparseMatrix m;
    m.col_basis_id = src.selector.str();
    m.row_basis_id = "implicit:" + bump(src.selector).str();
    m.cols = static_cast<int>(src.classes.size());

    std::vector<std::map<std::string, Rat>> cols(src.classes.size());
    std::map<std::string, int> row_of;
    for (size_t j = 0; j < src.classes.size(); ++j) {
        ClassSum e = vertex_expansion(src.classes[j]);
        for (const auto& [key, term] : e.terms()) {
            cols[j][key] = term.second;
            row_of.emplace(key, 0);
        }
    }
    int idx = 0;
    for (auto& [key, r] : row_of) r = idx++;
    m.rows = idx;
    for (size_t j = 0; j < cols.size(); ++j)
        for (const auto& [key, v] : cols[j]) m.add_entry(row_of[key], static_cast<int>(j), v);
    m.sort_entries();
    return m;
}

std::string CohomologyReport::to_json() const {
    nlohmann::ordered_json j;
    j["d"] = d;
    if (sector) {
        j["sector"] = {{"g", sector->first}, {"n", sector->second}};
    } else {
        j["sector"] = "all";
    }
    j["grading"] = grading;
    j["degree"] = degree;
    j["dim"] = dim;
    j["E_range"] = {e_range.first, e_range.second};
    j["exact"] = exact;
    j["E"] = e_used;
    j["basis"] = basis_size;
    j["kernel"] = kernel_dim;
    j["incoming_rank"] = incoming_rank;
    return j.dump();
}

CohomologyReport sector_cohomology(int d, int g, int n, const std::string& grading, int degree,
                                   std::pair<int, int> e_range, bool allow_truncation,
                                   int threads) {
    if (grading != "vertex" && grading != "degree")
        throw error(errc::bad_selector, "grading must be 'vertex' or 'degree'");

    // in a fixed sector, every grading is an affine function of E
    auto e_of_degree = [&](int deg) -> int {
        if (grading == "vertex") return deg + n + 2 * g - 2; // deg = V
        if (d == 0) return deg;                              // |G|_0 = E
        return deg + 2 * g;                                  // |G|_1 = V + n - 2
    };
    auto v_of_e = [&](int e) { return e - n + 2 - 2 * g; };

    const int e0 = e_of_degree(degree);
    auto sector_has_graphs = [&](int e) { return e >= 1 && v_of_e(e) >= 1; };

    CohomologyReport rep;
    rep.d = d;
    rep.sector = {g, n};
    rep.grading = grading;
    rep.degree = degree;
    rep.e_range = e_range;
    rep.e_used = e0;

    bool covered = true;
    for (int e = e0 - 1; e <= e0 + 1; ++e)
        if (sector_has_graphs(e) && (e < e_range.first || e > e_range.second)) covered = false;
    rep.exact = covered;
    if (!covered && !allow_truncation)
        throw error(errc::truncated,
                    "E-range does not cover degrees " + std::to_string(degree - 1) + ".." +
                        std::to_string(degree + 1) + "; pass allow_truncation to proceed");

    if (!sector_has_graphs(e0) || e0 < e_range.first || e0 > e_range.second) {
        rep.dim = 0;
        return rep;
    }

    SectorBasis at = cached_basis(Selector::sector(d, g, n, e0));
    rep.basis_size = static_cast<int>(at.classes.size());
    SparseMatrix out = differential_implicit(at);
    rep.kernel_dim = rep.basis_size - rank(out, threads);

    int in_rank = 0;
    if (sector_has_graphs(e0 - 1) && e0 - 1 >= e_range.first) {
        SectorBasis below = cached_basis(Selector::sector(d, g, n, e0 - 1));
        SparseMatrix in = differential_implicit(below);
        in_rank = rank(in, threads);
    }
    rep.incoming_rank = in_rank;
    rep.dim = rep.kernel_dim - in_rank;
    return rep;
}

std::vector<CohomologyReport> vertex_cohomology(int d, int V, std::pair<int, int> e_range,
                                                int threads) {
    if (V < 1) throw error(errc::bad_selector, "V must be positive");
    std::vector<CohomologyReport> out;
    for (int e = e_range.first; e <= e_range.second; ++e) {
        CohomologyReport rep;
        rep.d = d;
        rep.sector = std::nullopt;
        rep.grading = "vertex";
        rep.degree = V;
        rep.e_range = e_range;
        rep.e_used = e;
        rep.exact = true;
        if (e < 1 || V > e + 1) {
            rep.dim = 0;
            out.push_back(rep);
            continue;
        }
        SectorBasis at = cached_basis(Selector::vertices_edges(d, V, e));
        rep.basis_size = static_cast<int>(at.classes.size());
        SparseMatrix outm = differential_implicit(at);
        rep.kernel_dim = rep.basis_size - rank(outm, threads);
        int in_rank = 0;
        if (V >= 2 && e >= 2 && V - 1 <= e) {
            SectorBasis below = cached_basis(Selector::vertices_edges(d, V - 1, e - 1));
            SparseMatrix in = differential_implicit(below);
            in_rank = rank(in, threads);
        }
        rep.incoming_rank = in_rank;
        rep.dim = rep.kernel_dim - in_rank;
        out.push_back(rep);
    }
    return out;
}

} // namespace rgc
