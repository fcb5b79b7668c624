#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "supertensor/superalgebra.hpp"

namespace supertensor {

struct EmptyHeisenberg : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline LieSuperAlgebra abelian(long m, long n) {
    if (m < 0 || n < 0) throw InvalidParams("abelian: negative dimension");
    std::vector<BasisElement> basis;
    for (long i = 1; i <= m; ++i) basis.push_back({"a" + std::to_string(i), Parity::even});
    for (long i = 1; i <= n; ++i) basis.push_back({"b" + std::to_string(i), Parity::odd});
    return LieSuperAlgebra(std::move(basis), {});
}

/// H(m,n): even center z, [x_i, x_{m+i}] = z and [y_j, y_j] = z.
/// Dimension (2m+1 | n).
inline LieSuperAlgebra heisenberg_even(long m, long n) {
    if (m < 0 || n < 0) throw InvalidParams("heisenberg_even: negative parameter");
    if (m == 0 && n == 0) throw EmptyHeisenberg("heisenberg_even(0,0)");
    std::vector<BasisElement> basis;
    for (long i = 1; i <= 2 * m; ++i) basis.push_back({"x" + std::to_string(i), Parity::even});
    basis.push_back({"z", Parity::even});
    for (long j = 1; j <= n; ++j) basis.push_back({"y" + std::to_string(j), Parity::odd});
    std::size_t z = static_cast<std::size_t>(2 * m);
    LieSuperAlgebra::Table table;
    for (long i = 0; i < m; ++i)
        table[{static_cast<std::size_t>(i), static_cast<std::size_t>(m + i)}] = {{z, rat(1)}};
    for (long j = 0; j < n; ++j) {
        std::size_t y = static_cast<std::size_t>(2 * m + 1 + j);
        table[{y, y}] = {{z, rat(1)}};
    }
    return LieSuperAlgebra(std::move(basis), table);
}

/// H_m: odd center z, [x_j, y_j] = z. Dimension (m | m+1).
inline LieSuperAlgebra heisenberg_odd(long m) {
    if (m < 1) throw InvalidParams("heisenberg_odd: m must be >= 1");
    std::vector<BasisElement> basis;
    for (long i = 1; i <= m; ++i) basis.push_back({"x" + std::to_string(i), Parity::even});
    for (long i = 1; i <= m; ++i) basis.push_back({"y" + std::to_string(i), Parity::odd});
    basis.push_back({"z", Parity::odd});
    std::size_t z = static_cast<std::size_t>(2 * m);
    LieSuperAlgebra::Table table;
    for (long j = 0; j < m; ++j)
        table[{static_cast<std::size_t>(j), static_cast<std::size_t>(m + j)}] = {{z, rat(1)}};
    return LieSuperAlgebra(std::move(basis), table);
}

enum class GhRank2Kind { even, mixed, odd };

/// Rank-2 generalized Heisenberg specimens built as direct sums of rank-1
/// Heisenbergs: even = H(a,b) + H(c,d), mixed = H(a,b) + H_c, odd = H_a + H_b.
inline LieSuperAlgebra gh_rank2(GhRank2Kind kind, const std::vector<long>& params) {
    switch (kind) {
        case GhRank2Kind::even:
            if (params.size() != 4) throw InvalidParams("gh_rank2 even expects [a,b,c,d]");
            return direct_sum(heisenberg_even(params[0], params[1]),
                              heisenberg_even(params[2], params[3]));
        case GhRank2Kind::mixed:
            if (params.size() != 3) throw InvalidParams("gh_rank2 mixed expects [a,b,c]");
            return direct_sum(heisenberg_even(params[0], params[1]), heisenberg_odd(params[2]));
        case GhRank2Kind::odd:
            if (params.size() != 2) throw InvalidParams("gh_rank2 odd expects [a,b]");
            return direct_sum(heisenberg_odd(params[0]), heisenberg_odd(params[1]));
    }
    throw InvalidParams("gh_rank2: unknown kind");
}

namespace detail {

inline std::uint64_t f2_seed_mix(long p, long q, GradedDim kept, long seed) {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t v :
         {static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(q),
          static_cast<std::uint64_t>(kept.even), static_cast<std::uint64_t>(kept.odd),
          static_cast<std::uint64_t>(seed)}) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

/// Deterministic full-rank random matrix with entries in {-2..2}.
inline std::vector<Vec> random_full_rank_rows(std::mt19937_64& rng, std::size_t count,
                                              std::size_t width) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Vec> rows;
        for (std::size_t r = 0; r < count; ++r) {
            Vec v(width, Rational(0));
            for (std::size_t c = 0; c < width; ++c)
                v[c] = rat(static_cast<long>(rng() % 5) - 2);
            rows.push_back(std::move(v));
        }
        Echelon e(width);
        for (const auto& v : rows) e.insert(v);
        if (e.rank() == count) return rows;
    }
    throw std::logic_error("random_full_rank_rows: could not draw a full-rank matrix");
}

}  // namespace detail

/// Free 2-step nilpotent superalgebra on (p|q) generators, with its center
/// cut down by a seeded pseudo-random graded complement so exactly
/// kept_center_dims central directions survive.
inline LieSuperAlgebra free_nilpotent2_quotient(long p, long q, GradedDim kept, long seed) {
    if (p < 0 || q < 0 || !kept.nonnegative())
        throw InvalidParams("free_nilpotent2_quotient: negative parameter");
    long even_center = p * (p - 1) / 2 + q * (q + 1) / 2;
    long odd_center = p * q;
    if (kept.even > even_center || kept.odd > odd_center)
        throw InvalidParams("free_nilpotent2_quotient: kept_center_dims exceed the free center " +
                            to_string(GradedDim{even_center, odd_center}));

    std::vector<BasisElement> basis;
    for (long i = 1; i <= p; ++i) basis.push_back({"a" + std::to_string(i), Parity::even});
    std::vector<std::vector<std::size_t>> e_idx(p, std::vector<std::size_t>(p));
    std::vector<std::vector<std::size_t>> f_idx(q, std::vector<std::size_t>(q));
    std::vector<std::vector<std::size_t>> g_idx(p, std::vector<std::size_t>(q));
    std::vector<std::size_t> even_center_cols, odd_center_cols;
    for (long i = 0; i < p; ++i)
        for (long j = i + 1; j < p; ++j) {
            e_idx[i][j] = basis.size();
            even_center_cols.push_back(basis.size());
            basis.push_back({"e" + std::to_string(i + 1) + std::to_string(j + 1), Parity::even});
        }
    for (long i = 0; i < q; ++i)
        for (long j = i; j < q; ++j) {
            f_idx[i][j] = basis.size();
            even_center_cols.push_back(basis.size());
            basis.push_back({"f" + std::to_string(i + 1) + std::to_string(j + 1), Parity::even});
        }
    std::size_t odd_start = basis.size();
    for (long i = 1; i <= q; ++i) basis.push_back({"b" + std::to_string(i), Parity::odd});
    for (long i = 0; i < p; ++i)
        for (long j = 0; j < q; ++j) {
            g_idx[i][j] = basis.size();
            odd_center_cols.push_back(basis.size());
            basis.push_back({"g" + std::to_string(i + 1) + std::to_string(j + 1), Parity::odd});
        }

    LieSuperAlgebra::Table table;
    for (long i = 0; i < p; ++i)
        for (long j = i + 1; j < p; ++j)
            table[{static_cast<std::size_t>(i), static_cast<std::size_t>(j)}] = {
                {e_idx[i][j], rat(1)}};
    for (long i = 0; i < q; ++i)
        for (long j = i; j < q; ++j)
            table[{odd_start + static_cast<std::size_t>(i),
                   odd_start + static_cast<std::size_t>(j)}] = {{f_idx[i][j], rat(1)}};
    for (long i = 0; i < p; ++i)
        for (long j = 0; j < q; ++j)
            table[{static_cast<std::size_t>(i), odd_start + static_cast<std::size_t>(j)}] = {
                {g_idx[i][j], rat(1)}};
    LieSuperAlgebra free(std::move(basis), table);

    std::mt19937_64 rng(detail::f2_seed_mix(p, q, kept, seed));
    std::vector<Vec> cut_rows;
    auto embed = [&](const Vec& coords, const std::vector<std::size_t>& cols) {
        Vec v(free.dim_total(), Rational(0));
        for (std::size_t c = 0; c < cols.size(); ++c) v[cols[c]] = coords[c];
        return v;
    };
    std::size_t cut_even = static_cast<std::size_t>(even_center - kept.even);
    std::size_t cut_odd = static_cast<std::size_t>(odd_center - kept.odd);
    if (cut_even > 0)
        for (const auto& row :
             detail::random_full_rank_rows(rng, cut_even, even_center_cols.size()))
            cut_rows.push_back(embed(row, even_center_cols));
    if (cut_odd > 0)
        for (const auto& row : detail::random_full_rank_rows(rng, cut_odd, odd_center_cols.size()))
            cut_rows.push_back(embed(row, odd_center_cols));
    if (cut_rows.empty()) return free;
    return quotient(free, span(cut_rows, free.dim_total()));
}

}  // namespace supertensor
