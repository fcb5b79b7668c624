#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "supertensor/graded.hpp"
#include "supertensor/linalg.hpp"

namespace supertensor {

struct NotAnIdeal : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotGraded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotNilpotent : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DerivedDimNotOne : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BasisElement {
    std::string name;
    Parity parity = Parity::even;
};

/// Sparse bracket value: list of (basis index, coefficient), sorted by index.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

/// Finite-dimensional Lie superalgebra given by an ordered homogeneous basis
/// (even elements first) and structure constants stored for i <= j only; the
/// (j, i) values follow from graded skew-symmetry. Construction does not
/// enforce the bracket axioms: check_axioms reports violations as data.
class LieSuperAlgebra {
public:
    using Table = std::map<std::pair<std::size_t, std::size_t>, SparseVec>;

    LieSuperAlgebra() = default;

    /// Basis in any order; it is stably reordered evens-first and the bracket
    /// keys are normalized to i <= j (applying the skew sign where needed).
    LieSuperAlgebra(std::vector<BasisElement> basis, const Table& brackets) {
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i].parity == Parity::even) order.push_back(i);
        even_count_ = order.size();
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i].parity == Parity::odd) order.push_back(i);
        std::vector<std::size_t> new_index(basis.size());
        for (std::size_t pos = 0; pos < order.size(); ++pos) {
            new_index[order[pos]] = pos;
            basis_.push_back(basis[order[pos]]);
        }
        for (const auto& [key, value] : brackets) {
            std::size_t i = new_index[key.first], j = new_index[key.second];
            Rational sign(1);
            if (i > j) {
                // [e_i, e_j] = -(-1)^{|i||j|} [e_j, e_i]
                std::swap(i, j);
                sign = (parity(i) == Parity::odd && parity(j) == Parity::odd) ? 1 : -1;
            }
            std::map<std::size_t, Rational> merged;
            for (const auto& [k, c] : value) merged[new_index[k]] += sign * c;
            SparseVec terms;
            for (const auto& [k, c] : merged)
                if (c != 0) terms.emplace_back(k, c);
            if (!terms.empty()) {
                auto& slot = table_[{i, j}];
                if (!slot.empty())
                    throw InvalidParams("duplicate bracket entry for (" + basis_[i].name + "," +
                                        basis_[j].name + ")");
                slot = std::move(terms);
            }
        }
    }

    std::size_t dim_total() const { return basis_.size(); }
    std::size_t even_count() const { return even_count_; }
    GradedDim dim() const {
        return {static_cast<long long>(even_count_),
                static_cast<long long>(basis_.size() - even_count_)};
    }

    Parity parity(std::size_t i) const { return basis_[i].parity; }
    const std::string& name(std::size_t i) const { return basis_[i].name; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    const Table& table() const { return table_; }

    /// [e_i, e_j] as a dense coordinate vector, any index order.
    Vec bracket(std::size_t i, std::size_t j) const {
        Vec out(dim_total(), Rational(0));
        Rational sign(1);
        if (i > j) {
            std::swap(i, j);
            sign = (parity(i) == Parity::odd && parity(j) == Parity::odd) ? 1 : -1;
        }
        auto it = table_.find({i, j});
        if (it == table_.end()) return out;
        for (const auto& [k, c] : it->second) out[k] = sign * c;
        return out;
    }

    /// Bilinear extension to coordinate vectors.
    Vec bracket(const Vec& u, const Vec& v) const {
        Vec out(dim_total(), Rational(0));
        for (std::size_t i = 0; i < dim_total(); ++i) {
            if (u[i] == 0) continue;
            for (std::size_t j = 0; j < dim_total(); ++j) {
                if (v[j] == 0) continue;
                add_scaled(out, bracket(i, j), u[i] * v[j]);
            }
        }
        return out;
    }

    Vec unit_vector(std::size_t i) const {
        Vec v(dim_total(), Rational(0));
        v[i] = 1;
        return v;
    }

    bool same_structure(const LieSuperAlgebra& o) const {
        if (basis_.size() != o.basis_.size() || even_count_ != o.even_count_) return false;
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i].parity != o.basis_[i].parity) return false;
        return table_ == o.table_;
    }

private:
    std::vector<BasisElement> basis_;
    std::size_t even_count_ = 0;
    Table table_;
};

struct AxiomViolation {
    enum class Kind { grading, skew, jacobi };
    Kind kind;
    std::size_t i = 0, j = 0, k = 0;
    std::string detail;
};

struct ValidationReport {
    std::vector<AxiomViolation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const {
        std::ostringstream os;
        for (const auto& v : violations) os << v.detail << "\n";
        return os.str();
    }
};

/// Graded dimensions of a subspace with canonical (RREF) basis; rows must be
/// parity-homogeneous in the evens-first coordinate layout.
inline GradedDim graded_dims(const Subspace& s, std::size_t even_count) {
    GradedDim d;
    for (std::size_t r = 0; r < s.basis.rows(); ++r) {
        bool has_even = false, has_odd = false;
        for (std::size_t c = 0; c < s.ambient; ++c) {
            if (s.basis.at(r, c) == 0) continue;
            (c < even_count ? has_even : has_odd) = true;
        }
        if (has_even && has_odd)
            throw NotGraded("subspace basis row mixes parities");
        if (has_odd)
            ++d.odd;
        else if (has_even)
            ++d.even;
    }
    return d;
}

struct IdealSubspace {
    Subspace space;
    GradedDim dim;

    static IdealSubspace of(const LieSuperAlgebra& L, Subspace s) {
        IdealSubspace ideal;
        ideal.dim = graded_dims(s, L.even_count());
        ideal.space = std::move(s);
        return ideal;
    }
};

inline ValidationReport check_axioms(const LieSuperAlgebra& L) {
    ValidationReport report;
    std::size_t d = L.dim_total();
    for (const auto& [key, value] : L.table()) {
        auto [i, j] = key;
        Parity expected = L.parity(i) + L.parity(j);
        for (const auto& [k, c] : value) {
            if (c == 0) continue;
            if (L.parity(k) != expected) {
                std::ostringstream os;
                os << "grading violation at (" << L.name(i) << "," << L.name(j) << "): term "
                   << L.name(k) << " has parity " << to_cstring(L.parity(k)) << ", expected "
                   << to_cstring(expected);
                report.violations.push_back({AxiomViolation::Kind::grading, i, j, 0, os.str()});
                break;
            }
        }
        if (i == j && L.parity(i) == Parity::even && !value.empty()) {
            report.violations.push_back(
                {AxiomViolation::Kind::skew, i, i, 0,
                 "skew-symmetry violation: [" + L.name(i) + "," + L.name(i) + "] != 0 for even " +
                     L.name(i)});
        }
    }
    // Graded Jacobi on sorted triples; skew symmetry is structural, so the
    // unsorted instances carry no extra information.
    auto sign = [&](std::size_t a, std::size_t b) {
        return (L.parity(a) == Parity::odd && L.parity(b) == Parity::odd) ? Rational(-1)
                                                                          : Rational(1);
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j)
            for (std::size_t k = j; k < d; ++k) {
                Vec acc(d, Rational(0));
                add_scaled(acc, L.bracket(L.unit_vector(i), L.bracket(j, k)), sign(i, k));
                add_scaled(acc, L.bracket(L.unit_vector(j), L.bracket(k, i)), sign(j, i));
                add_scaled(acc, L.bracket(L.unit_vector(k), L.bracket(i, j)), sign(k, j));
                if (!is_zero(acc)) {
                    std::ostringstream os;
                    os << "Jacobi violation at (" << L.name(i) << "," << L.name(j) << ","
                       << L.name(k) << ")";
                    report.violations.push_back({AxiomViolation::Kind::jacobi, i, j, k, os.str()});
                }
            }
    return report;
}

inline IdealSubspace derived_subalgebra(const LieSuperAlgebra& L) {
    std::vector<Vec> vectors;
    for (std::size_t i = 0; i < L.dim_total(); ++i)
        for (std::size_t j = i; j < L.dim_total(); ++j) vectors.push_back(L.bracket(i, j));
    return IdealSubspace::of(L, span(vectors, L.dim_total()));
}

inline IdealSubspace center(const LieSuperAlgebra& L) {
    std::size_t d = L.dim_total();
    // rows (j,k), columns i: coefficient of e_k in [e_i, e_j]
    Matrix m(d * d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec b = L.bracket(i, j);
            for (std::size_t k = 0; k < d; ++k) m.at(j * d + k, i) = b[k];
        }
    return IdealSubspace::of(L, kernel(m));
}

/// Span of [v, e_j] over basis vectors v of s and all j.
inline Subspace bracket_with_algebra(const LieSuperAlgebra& L, const Subspace& s) {
    std::vector<Vec> vectors;
    for (std::size_t r = 0; r < s.basis.rows(); ++r)
        for (std::size_t j = 0; j < L.dim_total(); ++j)
            vectors.push_back(L.bracket(s.basis.row(r), L.unit_vector(j)));
    return span(vectors, L.dim_total());
}

inline Subspace full_space(std::size_t d) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < d; ++i) {
        Vec v(d, Rational(0));
        v[i] = 1;
        rows.push_back(std::move(v));
    }
    return span(rows, d);
}

/// Terms of the descending central series until the first repeated term.
inline std::vector<IdealSubspace> lower_central_series(const LieSuperAlgebra& L) {
    std::vector<IdealSubspace> series;
    Subspace cur = full_space(L.dim_total());
    series.push_back(IdealSubspace::of(L, cur));
    while (true) {
        Subspace next = bracket_with_algebra(L, cur);
        if (next == cur) break;
        series.push_back(IdealSubspace::of(L, next));
        cur = std::move(next);
        if (cur.rank() == 0) break;
    }
    return series;
}

/// Nilpotency class, or nullopt when the series stabilizes at a nonzero term.
/// The zero algebra is class 1 by convention.
inline std::optional<long> nilpotency_class(const LieSuperAlgebra& L) {
    if (L.dim_total() == 0) return 1;
    auto series = lower_central_series(L);
    if (series.back().space.rank() != 0) return std::nullopt;
    return static_cast<long>(series.size()) - 1;
}

inline bool is_graded_ideal(const LieSuperAlgebra& L, const Subspace& s) {
    try {
        graded_dims(s, L.even_count());
    } catch (const NotGraded&) {
        return false;
    }
    auto e = s.to_echelon();
    for (std::size_t r = 0; r < s.basis.rows(); ++r)
        for (std::size_t j = 0; j < L.dim_total(); ++j)
            if (!e.contains(L.bracket(s.basis.row(r), L.unit_vector(j)))) return false;
    return true;
}

/// Quotient L/I on canonical coset representatives: the standard basis
/// vectors at the non-pivot columns of I, per parity block.
inline LieSuperAlgebra quotient(const LieSuperAlgebra& L, const Subspace& ideal) {
    if (!is_graded_ideal(L, ideal)) throw NotAnIdeal("quotient: subspace is not a graded ideal");
    auto reps = ideal.free_columns();
    std::vector<BasisElement> basis;
    std::map<std::size_t, std::size_t> rep_index;
    for (std::size_t r = 0; r < reps.size(); ++r) {
        rep_index[reps[r]] = r;
        basis.push_back({L.name(reps[r]), L.parity(reps[r])});
    }
    auto echelon = ideal.to_echelon();
    LieSuperAlgebra::Table table;
    for (std::size_t a = 0; a < reps.size(); ++a)
        for (std::size_t b = a; b < reps.size(); ++b) {
            Vec w = echelon.reduce(L.bracket(reps[a], reps[b]));
            SparseVec terms;
            for (std::size_t c = 0; c < w.size(); ++c)
                if (w[c] != 0) terms.emplace_back(rep_index.at(c), w[c]);
            if (!terms.empty()) table[{a, b}] = std::move(terms);
        }
    return LieSuperAlgebra(std::move(basis), table);
}

inline LieSuperAlgebra quotient(const LieSuperAlgebra& L, const IdealSubspace& ideal) {
    return quotient(L, ideal.space);
}

/// Direct sum with vanishing cross brackets. Names from the right summand
/// gain apostrophes as needed to stay unique.
inline LieSuperAlgebra direct_sum(const LieSuperAlgebra& A, const LieSuperAlgebra& B) {
    std::vector<BasisElement> basis;
    std::vector<std::size_t> a_index(A.dim_total()), b_index(B.dim_total());
    auto add = [&](const std::string& name, Parity p) {
        std::string candidate = name;
        auto taken = [&](const std::string& s) {
            for (const auto& e : basis)
                if (e.name == s) return true;
            return false;
        };
        while (taken(candidate)) candidate += "'";
        basis.push_back({candidate, p});
        return basis.size() - 1;
    };
    for (std::size_t i = 0; i < A.even_count(); ++i) a_index[i] = add(A.name(i), Parity::even);
    for (std::size_t i = 0; i < B.even_count(); ++i) b_index[i] = add(B.name(i), Parity::even);
    for (std::size_t i = A.even_count(); i < A.dim_total(); ++i)
        a_index[i] = add(A.name(i), Parity::odd);
    for (std::size_t i = B.even_count(); i < B.dim_total(); ++i)
        b_index[i] = add(B.name(i), Parity::odd);
    LieSuperAlgebra::Table table;
    for (const auto& [key, value] : A.table()) {
        SparseVec terms;
        for (const auto& [k, c] : value) terms.emplace_back(a_index[k], c);
        table[{a_index[key.first], a_index[key.second]}] = std::move(terms);
    }
    for (const auto& [key, value] : B.table()) {
        SparseVec terms;
        for (const auto& [k, c] : value) terms.emplace_back(b_index[k], c);
        table[{b_index[key.first], b_index[key.second]}] = std::move(terms);
    }
    return LieSuperAlgebra(std::move(basis), table);
}

/// Rewrites L in the basis given by the rows of p (parity-homogeneous,
/// evens first, invertible). New elements are named v1, v2, ...
inline LieSuperAlgebra change_of_basis(const LieSuperAlgebra& L, const Matrix& p) {
    std::size_t d = L.dim_total();
    if (p.rows() != d || p.cols() != d) throw InvalidParams("change_of_basis: wrong shape");
    std::vector<BasisElement> basis;
    for (std::size_t r = 0; r < d; ++r) {
        bool has_even = false, has_odd = false;
        for (std::size_t c = 0; c < d; ++c) {
            if (p.at(r, c) == 0) continue;
            (c < L.even_count() ? has_even : has_odd) = true;
        }
        if (has_even && has_odd) throw NotGraded("change_of_basis: row mixes parities");
        basis.push_back({"v" + std::to_string(r + 1), has_odd ? Parity::odd : Parity::even});
    }
    // coordinates of w in the new basis solve P^T x = w
    Matrix pt(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) pt.at(r, c) = p.at(c, r);
    Matrix pt_inv = pt.inverse();
    LieSuperAlgebra::Table table;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a; b < d; ++b) {
            Vec w = L.bracket(p.row(a), p.row(b));
            SparseVec terms;
            for (std::size_t k = 0; k < d; ++k) {
                Rational x(0);
                for (std::size_t c = 0; c < d; ++c)
                    if (w[c] != 0) x += pt_inv.at(k, c) * w[c];
                if (x != 0) terms.emplace_back(k, x);
            }
            if (!terms.empty()) table[{a, b}] = std::move(terms);
        }
    return LieSuperAlgebra(std::move(basis), table);
}

/// Graded dimension of the center when it coincides with the derived
/// subalgebra, nullopt otherwise.
inline std::optional<GradedDim> generalized_heisenberg_rank(const LieSuperAlgebra& L) {
    auto d = derived_subalgebra(L);
    auto z = center(L);
    if (!(d.space == z.space)) return std::nullopt;
    return z.dim;
}

struct DecompositionReport {
    Parity derived_parity = Parity::even;
    long m = 0;              // Heisenberg parameter (pair count)
    long n = 0;              // odd diagonal count (even-center case only)
    GradedDim abelian;       // abelian complement dimensions
    std::optional<Matrix> basis;  // rows: isomorphism basis in old coordinates
    std::string basis_omitted_reason;
};

namespace detail {

/// Complement of the line through z inside the span of `vectors`,
/// deterministic via echelon insertion order.
inline std::vector<Vec> complement_of_line(const Vec& z, const std::vector<Vec>& vectors,
                                           std::size_t d) {
    Echelon e(d);
    e.insert(z);
    std::vector<Vec> out;
    for (const auto& v : vectors) {
        Vec reduced = e.reduce(v);
        if (e.insert(v)) out.push_back(std::move(reduced));
    }
    return out;
}

}  // namespace detail

/// Structure of a nilpotent superalgebra with one-dimensional derived
/// subalgebra: Heisenberg parameters, abelian complement, and (when the
/// odd form normalizes over the rationals) an explicit isomorphism basis.
inline DecompositionReport recognize_derived_dim_one(const LieSuperAlgebra& L) {
    if (!nilpotency_class(L).has_value()) throw NotNilpotent("recognize_derived_dim_one");
    auto derived = derived_subalgebra(L);
    if (derived.dim.total() != 1)
        throw DerivedDimNotOne("derived subalgebra has dimension " + to_string(derived.dim));
    std::size_t d = L.dim_total(), m0 = L.even_count();
    Vec z = derived.space.basis.row(0);
    std::size_t zpivot = derived.space.pivots[0];
    // beta(u, v): coefficient of z in [u, v]; every bracket is a multiple of z
    auto beta = [&](const Vec& u, const Vec& v) { return L.bracket(u, v)[zpivot]; };

    DecompositionReport rep;
    rep.derived_parity = derived.dim.odd == 1 ? Parity::odd : Parity::even;

    if (rep.derived_parity == Parity::even) {
        // antisymmetric form on the even block: symplectic reduction
        std::vector<Vec> evens, odds;
        for (std::size_t i = 0; i < m0; ++i) evens.push_back(L.unit_vector(i));
        for (std::size_t i = m0; i < d; ++i) odds.push_back(L.unit_vector(i));
        std::vector<Vec> pair_u, pair_w, even_radical;
        while (!evens.empty()) {
            Vec v = evens.front();
            evens.erase(evens.begin());
            std::size_t partner = evens.size();
            for (std::size_t t = 0; t < evens.size(); ++t)
                if (beta(v, evens[t]) != 0) {
                    partner = t;
                    break;
                }
            if (partner == evens.size()) {
                even_radical.push_back(std::move(v));
                continue;
            }
            Vec w = evens[partner];
            evens.erase(evens.begin() + static_cast<long>(partner));
            Rational c = beta(v, w);
            for (auto& x : w) x /= c;
            for (auto& u : evens) {
                add_scaled(u, v, -beta(u, w));
                add_scaled(u, w, beta(u, v));
            }
            pair_u.push_back(std::move(v));
            pair_w.push_back(std::move(w));
        }
        // symmetric form on the odd block: diagonalization
        std::vector<Vec> diag;
        std::vector<Rational> diag_values;
        std::vector<Vec> odd_radical;
        std::vector<Vec> work = odds;
        while (!work.empty()) {
            std::size_t pick = work.size();
            for (std::size_t t = 0; t < work.size(); ++t)
                if (beta(work[t], work[t]) != 0) {
                    pick = t;
                    break;
                }
            if (pick == work.size()) {
                // no anisotropic vector; try a hyperbolic combination
                bool found = false;
                for (std::size_t a = 0; a < work.size() && !found; ++a)
                    for (std::size_t b = a + 1; b < work.size() && !found; ++b)
                        if (beta(work[a], work[b]) != 0) {
                            add_scaled(work[a], work[b], Rational(1));
                            pick = a;
                            found = true;
                        }
                if (!found) {
                    for (auto& v : work) odd_radical.push_back(std::move(v));
                    break;
                }
            }
            Vec u = work[pick];
            work.erase(work.begin() + static_cast<long>(pick));
            Rational delta = beta(u, u);
            for (auto& v : work) add_scaled(v, u, -beta(v, u) / delta);
            diag_values.push_back(delta);
            diag.push_back(std::move(u));
        }
        rep.m = static_cast<long>(pair_u.size());
        rep.n = static_cast<long>(diag.size());
        auto ab_even = detail::complement_of_line(z, even_radical, d);
        rep.abelian = {static_cast<long long>(ab_even.size()),
                       static_cast<long long>(odd_radical.size())};

        // explicit basis needs every odd diagonal entry to be a square,
        // up to one global sign flip of z
        for (int flip = 0; flip < 2; ++flip) {
            Rational eps = flip == 0 ? 1 : -1;
            std::vector<Rational> roots;
            bool ok = true;
            for (const auto& delta : diag_values) {
                auto root = exact_sqrt(eps * delta);
                if (!root) {
                    ok = false;
                    break;
                }
                roots.push_back(*root);
            }
            if (!ok) continue;
            std::vector<Vec> rows;
            for (const auto& u : pair_u) rows.push_back(u);
            for (std::size_t t = 0; t < pair_w.size(); ++t) rows.push_back(scaled(pair_w[t], eps));
            rows.push_back(scaled(z, eps));
            for (const auto& v : ab_even) rows.push_back(v);
            for (std::size_t t = 0; t < diag.size(); ++t)
                rows.push_back(scaled(diag[t], 1 / roots[t]));
            for (const auto& v : odd_radical) rows.push_back(v);
            rep.basis = Matrix::from_rows(rows, d);
            break;
        }
        if (!rep.basis) rep.basis_omitted_reason = "irrational_scaling";
        return rep;
    }

    // odd derived generator: even/odd pairing, row reduction to unit pairs
    std::vector<Vec> evens, odds;
    for (std::size_t i = 0; i < m0; ++i) evens.push_back(L.unit_vector(i));
    for (std::size_t i = m0; i < d; ++i) odds.push_back(L.unit_vector(i));
    std::vector<Vec> pair_x, pair_y;
    while (true) {
        std::size_t pi = evens.size(), pj = 0;
        for (std::size_t a = 0; a < evens.size() && pi == evens.size(); ++a)
            for (std::size_t b = 0; b < odds.size(); ++b)
                if (beta(evens[a], odds[b]) != 0) {
                    pi = a;
                    pj = b;
                    break;
                }
        if (pi == evens.size()) break;
        Vec x = evens[pi], y = odds[pj];
        evens.erase(evens.begin() + static_cast<long>(pi));
        odds.erase(odds.begin() + static_cast<long>(pj));
        Rational c = beta(x, y);
        for (auto& t : y) t /= c;
        for (auto& u : evens) add_scaled(u, x, -beta(u, y));
        for (auto& v : odds) add_scaled(v, y, -beta(x, v));
        pair_x.push_back(std::move(x));
        pair_y.push_back(std::move(y));
    }
    rep.m = static_cast<long>(pair_x.size());
    auto ab_odd = detail::complement_of_line(z, odds, d);
    rep.abelian = {static_cast<long long>(evens.size()), static_cast<long long>(ab_odd.size())};
    std::vector<Vec> rows;
    for (const auto& u : pair_x) rows.push_back(u);
    for (const auto& u : evens) rows.push_back(u);
    for (const auto& v : pair_y) rows.push_back(v);
    rows.push_back(z);
    for (const auto& v : ab_odd) rows.push_back(v);
    rep.basis = Matrix::from_rows(rows, d);
    return rep;
}

}  // namespace supertensor
