#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supertensor/superalgebra.hpp"

namespace supertensor {

struct ClassTooHigh : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AbelianInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NegativeDim : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Generator of a presented space: either a tensor symbol e_left (x) e_right
/// or a named generator (gamma symbols).
struct GenSymbol {
    std::string name;
    Parity parity = Parity::even;
    int left = -1;
    int right = -1;
};

/// Free graded span on generator symbols modulo a span of parity-homogeneous
/// relation rows. Coset representatives are the non-pivot symbols.
class PresentedSpace {
public:
    PresentedSpace(std::vector<GenSymbol> symbols, Echelon relation_echelon)
        : symbols_(std::move(symbols)), echelon_(std::move(relation_echelon)) {
        relations_ = Subspace::from_echelon(echelon_);
        reps_ = relations_.free_columns();
        for (auto r : reps_)
            (symbols_[r].parity == Parity::even ? quotient_dim_.even : quotient_dim_.odd) += 1;
    }

    const std::vector<GenSymbol>& symbols() const { return symbols_; }
    const Subspace& relations() const { return relations_; }
    const std::vector<std::size_t>& rep_indices() const { return reps_; }
    GradedDim quotient_dim() const { return quotient_dim_; }

    /// Canonical form of a symbol-space vector in the quotient: the residual
    /// after eliminating relation pivots (supported on representatives).
    Vec reduce(Vec v) const { return echelon_.reduce(std::move(v)); }

private:
    std::vector<GenSymbol> symbols_;
    Echelon echelon_;
    Subspace relations_;
    std::vector<std::size_t> reps_;
    GradedDim quotient_dim_;
};

namespace detail {

inline void require_class_le2(const LieSuperAlgebra& L, const char* op) {
    auto cls = nilpotency_class(L);
    if (!cls)
        throw ClassTooHigh(std::string(op) + ": input is not nilpotent");
    if (*cls > 2)
        throw ClassTooHigh(std::string(op) + ": nilpotency class " + std::to_string(*cls) +
                           " exceeds 2");
}

inline std::vector<GenSymbol> tensor_symbols(const LieSuperAlgebra& L) {
    std::size_t d = L.dim_total();
    std::vector<GenSymbol> symbols;
    symbols.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            symbols.push_back({L.name(i) + "(x)" + L.name(j), L.parity(i) + L.parity(j),
                               static_cast<int>(i), static_cast<int>(j)});
    return symbols;
}

inline void assert_homogeneous(const Vec& row, const std::vector<GenSymbol>& symbols) {
    Parity seen = Parity::even;
    bool any = false;
    for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c] == 0) continue;
        if (!any) {
            seen = symbols[c].parity;
            any = true;
        } else if (symbols[c].parity != seen) {
            throw std::logic_error("tensor relation row is not parity-homogeneous");
        }
    }
}

}  // namespace detail

/// Defining relation instances of the tensor square on all ordered basis
/// triples (i,j,k), with the self-action given by the bracket:
///   [e_i,e_j](x)e_k - e_i(x)[e_j,e_k] + (-1)^{|i||j|} e_j(x)[e_i,e_k]
///   e_i(x)[e_j,e_k] - (-1)^{|k|(|i|+|j|)} [e_k,e_i](x)e_j
///                   + (-1)^{|i||j|} [e_j,e_i](x)e_k
inline std::vector<Vec> tensor_relation_rows(const LieSuperAlgebra& L) {
    std::size_t d = L.dim_total();
    auto symbols = detail::tensor_symbols(L);
    auto sym = [&](std::size_t a, std::size_t b) { return a * d + b; };
    auto odd = [&](std::size_t a) { return L.parity(a) == Parity::odd; };
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec bij = L.bracket(i, j), bji = L.bracket(j, i);
            for (std::size_t k = 0; k < d; ++k) {
                Vec bjk = L.bracket(j, k), bik = L.bracket(i, k), bki = L.bracket(k, i);
                Rational sij = (odd(i) && odd(j)) ? -1 : 1;
                Rational ski = (odd(k) && (odd(i) != odd(j))) ? -1 : 1;
                Vec r1(d * d, Rational(0));
                Vec r2(d * d, Rational(0));
                bool nonzero1 = false, nonzero2 = false;
                for (std::size_t l = 0; l < d; ++l) {
                    if (bij[l] != 0) {
                        r1[sym(l, k)] += bij[l];
                        nonzero1 = true;
                    }
                    if (bjk[l] != 0) {
                        r1[sym(i, l)] -= bjk[l];
                        r2[sym(i, l)] += bjk[l];
                        nonzero1 = nonzero2 = true;
                    }
                    if (bik[l] != 0) {
                        r1[sym(j, l)] += sij * bik[l];
                        nonzero1 = true;
                    }
                    if (bki[l] != 0) {
                        r2[sym(l, j)] -= ski * bki[l];
                        nonzero2 = true;
                    }
                    if (bji[l] != 0) {
                        r2[sym(l, k)] += sij * bji[l];
                        nonzero2 = true;
                    }
                }
                if (nonzero1) {
                    detail::assert_homogeneous(r1, symbols);
                    rows.push_back(std::move(r1));
                }
                if (nonzero2) {
                    detail::assert_homogeneous(r2, symbols);
                    rows.push_back(std::move(r2));
                }
            }
        }
    return rows;
}

/// Generators of the square submodule inside the tensor symbol space:
/// graded symmetrizations e_i(x)e_j + (-1)^{|i||j|} e_j(x)e_i plus the
/// polarized even diagonal.
inline std::vector<Vec> square_generator_rows(const LieSuperAlgebra& L) {
    std::size_t d = L.dim_total();
    auto sym = [&](std::size_t a, std::size_t b) { return a * d + b; };
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            Vec v(d * d, Rational(0));
            Rational sign = (L.parity(i) == Parity::odd && L.parity(j) == Parity::odd) ? -1 : 1;
            if (i == j) {
                if (sign == -1) continue;  // odd diagonal symmetrization vanishes
                v[sym(i, i)] = 1;          // even diagonal, polarized
            } else {
                v[sym(i, j)] = 1;
                v[sym(j, i)] = sign;
            }
            rows.push_back(std::move(v));
        }
    return rows;
}

/// Non-abelian tensor square of a class <= 2 superalgebra, presented on the
/// d^2 symbols e_i(x)e_j in lexicographic order.
inline PresentedSpace tensor_square(const LieSuperAlgebra& L) {
    detail::require_class_le2(L, "tensor_square");
    auto symbols = detail::tensor_symbols(L);
    Echelon e(symbols.size());
    for (auto& row : tensor_relation_rows(L)) e.insert(std::move(row));
    return PresentedSpace(std::move(symbols), std::move(e));
}

struct SquareSubmodule {
    GradedDim dim;       // graded dimension of the image inside the tensor square
    Subspace image;      // span of the reduced generators, in symbol coordinates
};

inline SquareSubmodule square_submodule(const LieSuperAlgebra& L, const PresentedSpace& tensor) {
    Echelon image(tensor.symbols().size());
    GradedDim dim;
    for (auto& g : square_generator_rows(L)) {
        Vec reduced = tensor.reduce(std::move(g));
        if (is_zero(reduced)) continue;
        Parity p = Parity::even;
        for (std::size_t c = 0; c < reduced.size(); ++c)
            if (reduced[c] != 0) {
                p = tensor.symbols()[c].parity;
                break;
            }
        if (image.insert(std::move(reduced))) (p == Parity::even ? dim.even : dim.odd) += 1;
    }
    return {dim, Subspace::from_echelon(image)};
}

inline SquareSubmodule square_submodule(const LieSuperAlgebra& L) {
    return square_submodule(L, tensor_square(L));
}

inline PresentedSpace exterior_square(const LieSuperAlgebra& L, const PresentedSpace& tensor) {
    Echelon e = tensor.relations().to_echelon();
    for (auto& g : square_generator_rows(L)) e.insert(std::move(g));
    return PresentedSpace(tensor.symbols(), std::move(e));
}

inline PresentedSpace exterior_square(const LieSuperAlgebra& L) {
    detail::require_class_le2(L, "exterior_square");
    return exterior_square(L, tensor_square(L));
}

/// Shared pipeline: tensor square, square submodule and exterior square of
/// one algebra, computed off a single relation echelon.
struct TensorAnalysis {
    PresentedSpace tensor;
    SquareSubmodule square;
    PresentedSpace exterior;
};

inline TensorAnalysis analyze_tensor(const LieSuperAlgebra& L) {
    detail::require_class_le2(L, "analyze_tensor");
    PresentedSpace tensor = tensor_square(L);
    SquareSubmodule square = square_submodule(L, tensor);
    PresentedSpace exterior = exterior_square(L, tensor);
    return {std::move(tensor), std::move(square), std::move(exterior)};
}

struct GammaSpace {
    long p = 0, q = 0;
    PresentedSpace presentation;
};

/// Universal quadratic functor of a free (p|q) module, presented on the
/// gamma generators of the even basis plus all tensor symbols. Relations:
///   u_a(x)u_b - (-1)^{|a||b|} u_b(x)u_a        (graded symmetry)
///   u_a(x)u_a                                  (odd diagonal)
///   u_a(x)u_a - 2 gamma(u_a)                   (even diagonal polarization)
inline GammaSpace gamma_space(long p, long q) {
    if (p < 0 || q < 0) throw InvalidParams("gamma_space: negative dimension");
    long d = p + q;
    std::vector<GenSymbol> symbols;
    auto basis_name = [&](long a) {
        return a < p ? "u" + std::to_string(a + 1) : "w" + std::to_string(a - p + 1);
    };
    auto parity = [&](long a) { return a < p ? Parity::even : Parity::odd; };
    for (long a = 0; a < p; ++a)
        symbols.push_back({"gamma(" + basis_name(a) + ")", Parity::even, -1, -1});
    for (long a = 0; a < d; ++a)
        for (long b = 0; b < d; ++b)
            symbols.push_back({basis_name(a) + "(x)" + basis_name(b), parity(a) + parity(b),
                               static_cast<int>(a), static_cast<int>(b)});
    auto sym = [&](long a, long b) { return static_cast<std::size_t>(p + a * d + b); };
    Echelon e(symbols.size());
    for (long a = 0; a < d; ++a)
        for (long b = a; b < d; ++b) {
            Vec v(symbols.size(), Rational(0));
            bool both_odd = parity(a) == Parity::odd && parity(b) == Parity::odd;
            if (a == b) {
                v[sym(a, a)] = 1;
                if (!both_odd) v[static_cast<std::size_t>(a)] = -2;  // u(x)u = 2 gamma(u)
            } else {
                v[sym(a, b)] = 1;
                v[sym(b, a)] = both_odd ? 1 : -1;
            }
            e.insert(std::move(v));
        }
    return {p, q, PresentedSpace(std::move(symbols), std::move(e))};
}

inline GradedDim gamma_dim(long p, long q) { return gamma_space(p, q).presentation.quotient_dim(); }

/// Checks the direct decomposition of the tensor square into the exterior
/// square and the square submodule by rank arithmetic.
inline bool decomposition_check(const LieSuperAlgebra& L) {
    auto an = analyze_tensor(L);
    GradedDim t = an.tensor.quotient_dim();
    if (!(t == an.exterior.quotient_dim() + an.square.dim)) return false;
    // representatives of the exterior square must complement the square
    // submodule inside the tensor square
    Echelon e = an.tensor.relations().to_echelon();
    for (auto& g : square_generator_rows(L)) e.insert(std::move(g));
    std::size_t with_square = e.rank();
    if (with_square != an.tensor.relations().rank() + static_cast<std::size_t>(an.square.dim.total()))
        return false;
    for (auto r : an.exterior.rep_indices()) {
        Vec unit(an.tensor.symbols().size(), Rational(0));
        unit[r] = 1;
        e.insert(std::move(unit));
    }
    return e.rank() == with_square + static_cast<std::size_t>(an.exterior.quotient_dim().total());
}

/// Exterior center: kernel of x -> (image of x wedge e_j in the exterior
/// square, over all j).
inline IdealSubspace exterior_center(const LieSuperAlgebra& L, const TensorAnalysis& an) {
    std::size_t d = L.dim_total();
    const auto& reps = an.exterior.rep_indices();
    std::vector<Vec> reduced(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec unit(d * d, Rational(0));
            unit[i * d + j] = 1;
            reduced[i * d + j] = an.exterior.reduce(std::move(unit));
        }
    Matrix m(d * reps.size(), d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t r = 0; r < reps.size(); ++r)
            for (std::size_t i = 0; i < d; ++i)
                m.at(j * reps.size() + r, i) = reduced[i * d + j][reps[r]];
    return IdealSubspace::of(L, kernel(m));
}

inline IdealSubspace exterior_center(const LieSuperAlgebra& L) {
    return exterior_center(L, analyze_tensor(L));
}

inline bool is_capable(const LieSuperAlgebra& L) {
    return exterior_center(L).space.rank() == 0;
}

/// dim M(L) = dim (L wedge L) - dim L^2, valid for class <= 2.
inline GradedDim schur_multiplier_class2(const LieSuperAlgebra& L) {
    detail::require_class_le2(L, "schur_multiplier_class2");
    GradedDim ext = exterior_square(L).quotient_dim();
    GradedDim der = derived_subalgebra(L).dim;
    GradedDim out = ext - der;
    if (!out.nonnegative())
        throw NegativeDim("schur_multiplier_class2: exterior square smaller than derived");
    return out;
}

/// dim of the triple tensor product for class <= 2: the tensor square is
/// abelian with trivial mutual actions against L, so the third factor
/// contributes through the abelianization only.
inline GradedDim triple_tensor_class2(const LieSuperAlgebra& L, const GradedDim& tensor2_dim) {
    GradedDim ab = L.dim() - derived_subalgebra(L).dim;
    return tensor_dims(tensor2_dim, ab);
}

inline GradedDim triple_tensor_class2(const LieSuperAlgebra& L) {
    detail::require_class_le2(L, "triple_tensor_class2");
    return triple_tensor_class2(L, tensor_square(L).quotient_dim());
}

struct BoundReport {
    GradedDim algebra_dim;
    GradedDim derived_dim;
    GradedDim triple;
    long long lhs = 0;   // total dimension of the triple tensor product
    long long rhs = 0;   // (m+n)(m+n-(r+s))^2
    bool holds = false;
    bool equality = false;
};

inline BoundReport bound_check(const LieSuperAlgebra& L) {
    GradedDim der = derived_subalgebra(L).dim;
    if (der.total() == 0) throw AbelianInput("bound_check: abelian input");
    detail::require_class_le2(L, "bound_check");
    BoundReport rep;
    rep.algebra_dim = L.dim();
    rep.derived_dim = der;
    rep.triple = triple_tensor_class2(L);
    rep.lhs = rep.triple.total();
    long long free_rank = rep.algebra_dim.total() - der.total();
    rep.rhs = rep.algebra_dim.total() * free_rank * free_rank;
    rep.holds = rep.lhs <= rep.rhs;
    rep.equality = rep.lhs == rep.rhs;
    return rep;
}

}  // namespace supertensor
