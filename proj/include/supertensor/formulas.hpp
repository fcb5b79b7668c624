#pragma once

#include <optional>

#include "supertensor/graded.hpp"

namespace supertensor::formulas {

namespace detail {
inline long long half(long long v) {
    if (v % 2 != 0) throw std::logic_error("formula value not divisible by 2");
    return v / 2;
}
}  // namespace detail

/// dim M(A(m|n)) = (1/2 (m^2+n^2+n-m) | mn)
inline GradedDim multiplier_abelian(long long m, long long n) {
    if (m < 0 || n < 0) throw InvalidParams("multiplier_abelian: negative parameter");
    return {detail::half(m * m + n * n + n - m), m * n};
}

/// dim M(H(m,n)), three cases by (m,n).
inline GradedDim multiplier_heisenberg_even(long long m, long long n) {
    if (m < 0 || n < 0 || m + n < 1) throw InvalidParams("multiplier_heisenberg_even");
    if (m == 1 && n == 0) return {2, 0};
    if (m == 0 && n == 1) return {0, 0};
    return {2 * m * m - m + detail::half(n * (n + 1)) - 1, 2 * m * n};
}

/// dim M(H_m): (m^2 | m^2-1) for m >= 2, (1|1) for m = 1.
inline GradedDim multiplier_heisenberg_odd(long long m) {
    if (m < 1) throw InvalidParams("multiplier_heisenberg_odd");
    if (m == 1) return {1, 1};
    return {m * m, m * m - 1};
}

/// dim M(H + K) = dim M(H) + dim M(K) + dim(H/H^2 (x) K/K^2)
inline GradedDim multiplier_direct_sum(const GradedDim& m_h, const GradedDim& m_k,
                                       const GradedDim& hab, const GradedDim& kab) {
    return m_h + m_k + tensor_dims(hab, kab);
}

/// dim M(A(m|n), I) for a (k|h)-dimensional ideal I.
inline GradedDim multiplier_pair_abelian(long long m, long long n, long long k, long long h) {
    if (k < 0 || h < 0 || k > m || h > n) throw InvalidParams("multiplier_pair_abelian");
    return {detail::half(k * (2 * m - k - 1) + h * (2 * n - h + 1)),
            m * n - (m - k) * (n - h)};
}

/// Case split of the rank-2 formula families, keyed by the exterior center.
enum class Rank2Case {
    center_equals_derived,  // Z^(H) = H^2
    witness_even,           // Z^(H) = K, dim K = (1|0)
    witness_odd             // Z^(H) = K, dim K = (0|1)
};

enum class H2Kind { even2, mixed, odd2 };  // dim H^2 = (2|0), (1|1), (0|2)

inline std::optional<H2Kind> h2_kind(const GradedDim& h2) {
    if (h2 == GradedDim{2, 0}) return H2Kind::even2;
    if (h2 == GradedDim{1, 1}) return H2Kind::mixed;
    if (h2 == GradedDim{0, 2}) return H2Kind::odd2;
    return std::nullopt;
}

namespace detail {
inline std::optional<GradedDim> guarded(long long even, long long odd) {
    GradedDim d{even, odd};
    if (!d.nonnegative()) return std::nullopt;
    return d;
}
}  // namespace detail

/// Schur multiplier of a non-capable rank-2 generalized Heisenberg
/// superalgebra of dimension (m|n), by case and dim H^2. Combinations the
/// tables do not cover, and parameters driving a formula negative,
/// come back empty.
inline std::optional<GradedDim> multiplier_gh_rank2(Rank2Case c, const GradedDim& h2, long long m,
                                                    long long n) {
    auto kind = h2_kind(h2);
    if (!kind || m < 0 || n < 0) return std::nullopt;
    using detail::guarded;
    using detail::half;
    switch (c) {
        case Rank2Case::center_equals_derived:
            switch (*kind) {
                case H2Kind::odd2:
                    return guarded(half(m * (m - 1) + (n - 2) * (n - 1)), m * (n - 2) - 2);
                case H2Kind::even2:
                    return guarded(half((m - 3) * (m - 2) + n * (n + 1) - 4), (m - 2) * n);
                case H2Kind::mixed:
                    return guarded(half((m - 1) * (m - 2) + n * (n - 1) - 2),
                                   (m - 1) * (n - 1) - 1);
            }
            break;
        case Rank2Case::witness_even:
            switch (*kind) {
                case H2Kind::mixed:
                    return guarded(half((m - 2) * (m + 1) + (n - 2) * (n - 1)), m * (n - 2) + 1);
                case H2Kind::even2:
                    return guarded(half((m - 4) * (m - 1) + n * (n + 1) + 2), (m - 2) * n);
                case H2Kind::odd2:
                    return std::nullopt;
            }
            break;
        case Rank2Case::witness_odd:
            switch (*kind) {
                case H2Kind::mixed:
                    return guarded(half((m - 4) * (m - 1) + n * (n + 1) + 4), (m - 2) * n - 1);
                case H2Kind::odd2:
                    return guarded(half((m + 2) * (m - 1) + (n - 3) * (n - 2) + 2),
                                   (m + 1) * (n - 3));
                case H2Kind::even2:
                    return std::nullopt;
            }
            break;
    }
    return std::nullopt;
}

/// Exterior square of a non-capable rank-2 generalized Heisenberg.
inline std::optional<GradedDim> ext2_gh_rank2(Rank2Case c, const GradedDim& h2, long long m,
                                              long long n) {
    auto kind = h2_kind(h2);
    if (!kind || m < 0 || n < 0) return std::nullopt;
    using detail::guarded;
    using detail::half;
    switch (c) {
        case Rank2Case::center_equals_derived:
            switch (*kind) {
                case H2Kind::odd2:
                    return guarded(half(m * (m - 1) + (n - 2) * (n - 1)), m * (n - 2));
                case H2Kind::even2:
                    return guarded(half((m - 3) * (m - 2) + n * (n + 1)), (m - 2) * n);
                case H2Kind::mixed:
                    return guarded(half((m - 1) * (m - 2) + n * (n - 1)), (m - 1) * (n - 1));
            }
            break;
        case Rank2Case::witness_even:
            switch (*kind) {
                case H2Kind::mixed:
                    return guarded(half((m - 2) * (m + 1) + (n - 2) * (n - 1) + 2),
                                   m * (n - 2) + 2);
                case H2Kind::even2:
                    return guarded(half((m - 4) * (m - 1) + n * (n + 1) + 6), (m - 2) * n);
                case H2Kind::odd2:
                    return std::nullopt;
            }
            break;
        case Rank2Case::witness_odd:
            switch (*kind) {
                case H2Kind::mixed:
                    return guarded(half((m - 4) * (m - 1) + n * (n + 1) + 6), (m - 2) * n);
                case H2Kind::odd2:
                    return guarded(half((m + 2) * (m - 1) + (n - 3) * (n - 2) + 2),
                                   (m + 1) * (n - 3) + 2);
                case H2Kind::even2:
                    return std::nullopt;
            }
            break;
    }
    return std::nullopt;
}

/// Tensor square of a non-capable rank-2 generalized Heisenberg.
inline std::optional<GradedDim> tensor2_gh_rank2(Rank2Case c, const GradedDim& h2, long long m,
                                                 long long n) {
    auto kind = h2_kind(h2);
    if (!kind || m < 0 || n < 0) return std::nullopt;
    using detail::guarded;
    using detail::half;
    switch (c) {
        case Rank2Case::center_equals_derived:
            switch (*kind) {
                case H2Kind::odd2:
                    return guarded(m * m + (n - 2) * (n - 2), 2 * m * (n - 2));
                case H2Kind::even2:
                    return guarded((m - 2) * (m - 2) + n * n, 2 * (m - 2) * n);
                case H2Kind::mixed:
                    return guarded((m - 1) * (m - 1) + (n - 1) * (n - 1),
                                   2 * (m - 1) * (n - 1));
            }
            break;
        case Rank2Case::witness_even:
            switch (*kind) {
                case H2Kind::mixed: {
                    long long l = half((m - 2) * (m + 1) + 2 * (n - 2) * (n - 1) + 2);
                    long long k = m * (n - 2) + 2;
                    return guarded(l + half(m * (m - 1)), k + (m - 1) * (n - 1));
                }
                case H2Kind::even2:
                    return guarded((m - 3) * (m - 1) + n * n + 3, 2 * (m - 2) * n);
                case H2Kind::odd2:
                    return std::nullopt;
            }
            break;
        case Rank2Case::witness_odd:
            switch (*kind) {
                case H2Kind::mixed:
                    return guarded((m - 2) * (m - 1) + n * (n - 1) + 4,
                                   (m - 1) * (n - 1) + (m - 2) * n);
                case H2Kind::odd2: {
                    long long r = half((m + 2) * (m - 1) + 2 * (n - 3) * (n - 2) + 2);
                    long long s = (m + 1) * (n - 3) + 2;
                    return guarded(r + half(m * (m + 1)), s + m * (n - 2));
                }
                case H2Kind::even2:
                    return std::nullopt;
            }
            break;
    }
    return std::nullopt;
}

/// Triple tensor product of a non-capable rank-2 generalized Heisenberg.
inline std::optional<GradedDim> tensor3_gh_rank2(Rank2Case c, const GradedDim& h2, long long m,
                                                 long long n) {
    auto kind = h2_kind(h2);
    if (!kind || m < 0 || n < 0) return std::nullopt;
    using detail::guarded;
    switch (c) {
        case Rank2Case::center_equals_derived:
            switch (*kind) {
                case H2Kind::odd2:
                    return guarded(m * (m * m + 3 * (n - 2) * (n - 2)),
                                   (n - 2) * (3 * m * m + (n - 2) * (n - 2)));
                case H2Kind::even2:
                    return guarded((m - 2) * ((m - 2) * (m - 2) + 3 * n * n),
                                   3 * n * (m - 2) * (m - 2) + n * n * n);
                case H2Kind::mixed:
                    return guarded((m - 1) * ((m - 1) * (m - 1) + 3 * (n - 1) * (n - 1)),
                                   (n - 1) * ((n - 1) * (n - 1) + 3 * (m - 1) * (m - 1)));
            }
            break;
        case Rank2Case::witness_even:
            switch (*kind) {
                case H2Kind::mixed:
                    return guarded((m - 1) * ((m - 1) * (m - 1) + 3 * (n - 1) * (n - 1) + 1),
                                   (n - 1) * ((n - 1) * (n - 1) + 3 * (m - 1) * (m - 1) + 1));
                case H2Kind::even2:
                    return guarded((m - 2) * ((m - 2) * (m - 2) + 3 * n * n + 2),
                                   n * (n * n + 3 * (m - 2) * (m - 2) + 2));
                case H2Kind::odd2:
                    return std::nullopt;
            }
            break;
        case Rank2Case::witness_odd:
            switch (*kind) {
                case H2Kind::mixed:
                    return guarded((m - 1) * ((m - 1) * (m - 1) + 3 * (n - 1) * (n - 1) + 3),
                                   (n - 1) * ((n - 1) * (n - 1) + (m - 1) * (m - 1) + 3));
                case H2Kind::odd2:
                    return guarded(m * (m * m + 3 * (n - 2) * (n - 2) + 1),
                                   (n - 2) * (3 * m * m + (n - 2) * (n - 2) + 1));
                case H2Kind::even2:
                    return std::nullopt;
            }
            break;
    }
    return std::nullopt;
}

/// Triple exterior product of a non-capable rank-2 generalized Heisenberg,
/// with the table's auxiliary quantities l, k, s, d, x, y.
inline std::optional<GradedDim> ext3_gh_rank2(Rank2Case c, const GradedDim& h2, long long m,
                                              long long n) {
    auto kind = h2_kind(h2);
    if (!kind || m < 0 || n < 0) return std::nullopt;
    using detail::guarded;
    using detail::half;
    long long l = half(m * (m * m - 2 * m + 9) + m * n * (3 * n - 11) - (n - 3) * (n - 2));
    long long k = half(3 * m * (m - 1) * (n - 2) + n * n * (n - 5) - 4 * (n + 1));
    long long s = half(m * m * (m - 8) + m * n * (3 * n + 1) + 19 * m - 14 - n * (7 * n + 1));
    long long d = m * n * (m - 12) + 9 * n + half(n * n * (n + 1));
    long long x = half(m * m * (m - 5) - 4 * n * (n - 2) + n * m * (3 * n - 5) + 8 * m - 6);
    long long y =
        half((n - 1) * (5 * m * m - 15 * m + 10 - m * m * m + 3 * m * m - 2 * m + n * n - n));
    switch (c) {
        case Rank2Case::center_equals_derived:
            switch (*kind) {
                case H2Kind::odd2:
                    return guarded(l, k);
                case H2Kind::even2:
                    return guarded(s, d);
                case H2Kind::mixed:
                    return guarded(x, y);
            }
            break;
        case Rank2Case::witness_even:
            switch (*kind) {
                case H2Kind::mixed:
                    return guarded(x, y);
                case H2Kind::even2:
                    return guarded(s + 2 * m - 7, d + 2 * n);
                case H2Kind::odd2:
                    return std::nullopt;
            }
            break;
        case Rank2Case::witness_odd:
            switch (*kind) {
                case H2Kind::mixed:
                    return guarded(x + 3 * (m - 3), y + 3 * (n - 1));
                case H2Kind::odd2:
                    return guarded(l + 2 * m + n - 5, k + m + 2 * n - 6);
                case H2Kind::even2:
                    return std::nullopt;
            }
            break;
    }
    return std::nullopt;
}

/// Triple tensor product of H(m,n).
inline GradedDim triple_tensor_heisenberg_even(long long m, long long n) {
    if (m < 0 || n < 0 || m + n < 1) throw InvalidParams("triple_tensor_heisenberg_even");
    if (m == 1 && n == 0) return {12, 0};
    if (m == 0 && n == 1) return {0, 1};
    return {8 * m * m * m + 6 * m * n * n, 12 * m * m * n + n * n * n};
}

/// Triple exterior product of H(m,n).
inline GradedDim triple_ext_heisenberg_even(long long m, long long n) {
    if (m < 0 || n < 0 || m + n < 1) throw InvalidParams("triple_ext_heisenberg_even");
    if (m == 1 && n == 0) return {2, 0};
    if (m == 0 && n == 1) return {0, 1};
    return {4 * m * m * m - 4 * m * m + m * n * (n + 1) + 2 * m * n * n - m -
                detail::half(n * (n - 1)),
            6 * m * m * n - 3 * m * n + detail::half(n * n * (n + 1))};
}

/// Triple tensor product of H_m, with the m = 1 case tabulated separately.
inline GradedDim triple_tensor_heisenberg_odd(long long m) {
    if (m < 1) throw InvalidParams("triple_tensor_heisenberg_odd");
    if (m == 1) return {5, 5};
    return {4 * m * m, 4 * m * m};
}

/// Triple exterior product of H_m.
inline GradedDim triple_ext_heisenberg_odd(long long m) {
    if (m < 1) throw InvalidParams("triple_ext_heisenberg_odd");
    if (m == 1) return {2, 2};
    long long mm = m * m - m;
    return {2 * m * m * m - m * m, m * m * m * m - mm * mm};
}

/// Upper bound (m+n)(m+n-(r+s))^2 on the total dimension of the triple
/// tensor product.
inline long long tensor_bound(long long m, long long n, long long r, long long s) {
    if (r + s < 1 || r > m || s > n || r < 0 || s < 0) throw InvalidParams("tensor_bound");
    long long free_rank = m + n - (r + s);
    return (m + n) * free_rank * free_rank;
}

/// Closed dimension of the universal quadratic functor on a (p|q) module.
inline GradedDim gamma_closed(long long p, long long q) {
    if (p < 0 || q < 0) throw InvalidParams("gamma_closed");
    return {detail::half(p * (p + 1)) + detail::half(q * (q - 1)), p * q};
}

// Squares of the rank-1 Heisenberg families (used by the verification
// sweep next to the formulas above).

inline GradedDim tensor2_heisenberg_even(long long m, long long n) {
    if (m < 0 || n < 0 || m + n < 1) throw InvalidParams("tensor2_heisenberg_even");
    if (m == 1 && n == 0) return {6, 0};
    if (m == 0 && n == 1) return {1, 0};
    return tensor_dims({2 * m, n}, {2 * m, n});
}

inline GradedDim ext2_heisenberg_even(long long m, long long n) {
    if (m < 0 || n < 0 || m + n < 1) throw InvalidParams("ext2_heisenberg_even");
    if (m == 1 && n == 0) return {3, 0};
    if (m == 0 && n == 1) return {1, 0};
    return {2 * m * m - m + detail::half(n * (n + 1)), 2 * m * n};
}

inline GradedDim tensor2_heisenberg_odd(long long m) {
    if (m < 1) throw InvalidParams("tensor2_heisenberg_odd");
    if (m == 1) return {2, 3};
    return tensor_dims({m, m}, {m, m});
}

inline GradedDim ext2_heisenberg_odd(long long m) {
    if (m < 1) throw InvalidParams("ext2_heisenberg_odd");
    if (m == 1) return {1, 2};
    return {m * m, m * m};
}

inline GradedDim tensor2_abelian(long long p, long long q) {
    return tensor_dims({p, q}, {p, q});
}

}  // namespace supertensor::formulas
