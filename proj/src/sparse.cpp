#include "rgc/sparse.hpp"

#include <algorithm>
#include <future>
#include <map>

namespace rgc {

const uint64_t kRankPrimes[3] = {2147483659ULL, 2147483693ULL, 2147483713ULL};

void SparseMatrix::add_entry(int r, int c, const Rat& v) {
    if (v.is_zero()) return;
    if (r < 0 || r >= rows || c < 0 || c >= cols)
        throw error(errc::invalid_graph, "matrix entry out of range");
    entries.emplace_back(r, c, v);
}

void SparseMatrix::sort_entries() {
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
}

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a % p, p - 2, p); }

uint64_t rat_mod(const Rat& q, uint64_t p) {
    mpz_class num = q.num(), den = q.den();
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class nm = num % pz;
    if (nm < 0) nm += pz;
    mpz_class dm = den % pz;
    if (dm == 0) throw error(errc::invalid_graph, "denominator divisible by rank prime");
    uint64_t n = nm.get_ui();
    uint64_t d = dm.get_ui();
    return mulmod(n, invmod(d, p), p);
}

// sparse row: sorted (col, value) pairs
template <typename T>
using Row = std::vector<std::pair<int, T>>;

// r -= f * pivot (over GF(p) with T=uint64_t, over Q with T=Rat)
template <typename T, typename MulSub>
Row<T> axpy(const Row<T>& r, const Row<T>& pivot, MulSub&& mulsub) {
    Row<T> out;
    out.reserve(r.size() + pivot.size());
    size_t i = 0, j = 0;
    while (i < r.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < r.size() && r[i].first < pivot[j].first)) {
            out.push_back(r[i++]);
        } else if (i == r.size() || pivot[j].first < r[i].first) {
            T v = mulsub(T{}, pivot[j].second);
            if (!(v == T{})) out.emplace_back(pivot[j].first, v);
            ++j;
        } else {
            T v = mulsub(r[i].second, pivot[j].second);
            if (!(v == T{})) out.emplace_back(r[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

// Gaussian elimination on sparse rows, pivoting column-by-column, choosing
// the sparsest candidate row. Works for any field via the two callbacks.
template <typename T, typename Inv, typename MulSubFactory>
int sparse_rank(std::vector<Row<T>> rowsv, int cols, Inv&& inv, MulSubFactory&& make_mulsub) {
    // bucket rows by leading column
    std::vector<std::vector<int>> bucket(cols);
    for (int i = 0; i < static_cast<int>(rowsv.size()); ++i)
        if (!rowsv[i].empty()) bucket[rowsv[i][0].first].push_back(i);

    int rank = 0;
    for (int c = 0; c < cols; ++c) {
        auto& cand = bucket[c];
        if (cand.empty()) continue;
        // deterministic pivot: sparsest row, ties by index
        int piv = cand[0];
        for (int idx : cand)
            if (rowsv[idx].size() < rowsv[piv].size() ||
                (rowsv[idx].size() == rowsv[piv].size() && idx < piv))
                piv = idx;
        ++rank;
        T pivlead = rowsv[piv][0].second;
        T pivinv = inv(pivlead);
        for (int idx : cand) {
            if (idx == piv) continue;
            auto mulsub = make_mulsub(rowsv[idx][0].second, pivinv);
            rowsv[idx] = axpy<T>(rowsv[idx], rowsv[piv], mulsub);
            if (!rowsv[idx].empty()) bucket[rowsv[idx][0].first].push_back(idx);
        }
        rowsv[piv].clear();
        cand.clear();
    }
    return rank;
}

} // namespace

int rank_mod(const SparseMatrix& m, uint64_t p) {
    std::map<int, Row<uint64_t>> rows;
    for (const auto& [r, c, v] : m.entries) {
        uint64_t mv = rat_mod(v, p);
        if (mv) rows[r].emplace_back(c, mv);
    }
    std::vector<Row<uint64_t>> rowsv;
    rowsv.reserve(rows.size());
    for (auto& [r, row] : rows) {
        std::sort(row.begin(), row.end());
        // collapse duplicate columns if any
        Row<uint64_t> packed;
        for (auto& [c, v] : row) {
            if (!packed.empty() && packed.back().first == c) {
                packed.back().second = (packed.back().second + v) % p;
                if (packed.back().second == 0) packed.pop_back();
            } else {
                packed.emplace_back(c, v);
            }
        }
        if (!packed.empty()) rowsv.push_back(std::move(packed));
    }
    auto inv = [p](uint64_t x) { return invmod(x, p); };
    auto make_mulsub = [p](uint64_t lead, uint64_t pivinv) {
        uint64_t f = mulmod(lead, pivinv, p);
        return [f, p](uint64_t a, uint64_t b) { return (a + p - mulmod(f, b, p)) % p; };
    };
    return sparse_rank<uint64_t>(std::move(rowsv), m.cols, inv, make_mulsub);
}

namespace {

// dense fraction-free (Bareiss) rank for small profiles
int bareiss_rank(const SparseMatrix& m) {
    const int R = m.rows, C = m.cols;
    std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C, 0));
    mpz_class lcm_den = 1;
    for (const auto& [r, c, v] : m.entries) lcm_den = lcm(lcm_den, v.den());
    for (const auto& [r, c, v] : m.entries) a[r][c] += v.num() * (lcm_den / v.den());

    int rank = 0;
    mpz_class prev = 1;
    for (int c = 0; c < C && rank < R; ++c) {
        int piv = -1;
        for (int r = rank; r < R; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        for (int r = rank + 1; r < R; ++r) {
            for (int cc = c + 1; cc < C; ++cc)
                a[r][cc] = (a[rank][c] * a[r][cc] - a[r][c] * a[rank][cc]) / prev;
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

} // namespace

int rank_exact(const SparseMatrix& m) {
    if (m.rows == 0 || m.cols == 0 || m.entries.empty()) return 0;
    if (static_cast<long long>(m.rows) * m.cols <= 60000) return bareiss_rank(m);

    std::map<int, Row<Rat>> rows;
    for (const auto& [r, c, v] : m.entries) rows[r].emplace_back(c, v);
    std::vector<Row<Rat>> rowsv;
    rowsv.reserve(rows.size());
    for (auto& [r, row] : rows) {
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        Row<Rat> packed;
        for (auto& [c, v] : row) {
            if (!packed.empty() && packed.back().first == c) {
                packed.back().second += v;
                if (packed.back().second.is_zero()) packed.pop_back();
            } else if (!v.is_zero()) {
                packed.emplace_back(c, v);
            }
        }
        if (!packed.empty()) rowsv.push_back(std::move(packed));
    }
    auto inv = [](const Rat& x) { return Rat(1) / x; };
    auto make_mulsub = [](const Rat& lead, const Rat& pivinv) {
        Rat f = lead * pivinv;
        return [f](const Rat& a, const Rat& b) { return a - f * b; };
    };
    return sparse_rank<Rat>(std::move(rowsv), m.cols, inv, make_mulsub);
}

int rank(const SparseMatrix& m, int threads) {
    if (m.rows == 0 || m.cols == 0 || m.entries.empty()) return 0;

    int r[3];
    if (threads > 1) {
        std::future<int> f1 = std::async(std::launch::async, [&] { return rank_mod(m, kRankPrimes[1]); });
        std::future<int> f2 = std::async(std::launch::async, [&] { return rank_mod(m, kRankPrimes[2]); });
        r[0] = rank_mod(m, kRankPrimes[0]);
        r[1] = f1.get();
        r[2] = f2.get();
    } else {
        for (int i = 0; i < 3; ++i) r[i] = rank_mod(m, kRankPrimes[i]);
    }

    const bool agree = r[0] == r[1] && r[1] == r[2];
    if (!agree || m.nnz() < 5000) {
        int re = rank_exact(m);
        // modular rank never exceeds the rational rank
        if (re < std::max({r[0], r[1], r[2]}))
            throw error(errc::invalid_graph, "exact rank below modular rank");
        return re;
    }
    return r[0];
}

} // namespace rgc
