#pragma once

#include <algorithm>
#include <future>
#include <sstream>
#include <thread>

#include "supertensor/expr.hpp"
#include "supertensor/tensor.hpp"

namespace supertensor {

enum class RecordStatus { match, mismatch, formula_only, constructive_only, untested_case };

inline const char* to_cstring(RecordStatus s) {
    switch (s) {
        case RecordStatus::match: return "match";
        case RecordStatus::mismatch: return "mismatch";
        case RecordStatus::formula_only: return "formula_only";
        case RecordStatus::constructive_only: return "constructive_only";
        case RecordStatus::untested_case: return "untested_case";
    }
    return "?";
}

struct VerificationRecord {
    std::string algebra;
    std::string quantity;
    std::optional<GradedDim> constructive;
    std::optional<GradedDim> closed_form;
    RecordStatus status = RecordStatus::constructive_only;
    std::string note;
};

inline std::string to_line(const VerificationRecord& r) {
    std::ostringstream os;
    os << "record algebra=\"" << r.algebra << "\" quantity=" << r.quantity << " constructive="
       << (r.constructive ? to_string(*r.constructive) : "n/a") << " closed_form="
       << (r.closed_form ? to_string(*r.closed_form) : "untested")
       << " status=" << to_cstring(r.status);
    if (!r.note.empty()) os << " note=\"" << r.note << "\"";
    return os.str();
}

struct Specimen {
    CatalogExpr expr;
    std::string key;
};

/// The deterministic specimen sweep used by the verification driver:
/// abelians, rank-1 Heisenbergs, their rank-2 direct sums, Heisenbergs with
/// small abelian tails, and a fixed list of seeded free class-2 quotients,
/// every one of total dimension at most max_total_dim.
inline std::vector<Specimen> standard_specimens(long max_total_dim, long seed) {
    if (max_total_dim < 2) throw InvalidParams("standard_specimens: max_total_dim must be >= 2");
    std::vector<Specimen> out;
    auto push = [&](CatalogExpr e) {
        if (e.dim().total() <= max_total_dim) out.push_back({e, e.text()});
    };

    for (long p = 0; p <= max_total_dim; ++p)
        for (long q = 0; p + q <= max_total_dim; ++q) push(CatalogExpr::make_abelian(p, q));

    std::vector<CatalogExpr> heis;
    for (long m = 0; 2 * m + 1 <= max_total_dim; ++m)
        for (long n = 0; 2 * m + 1 + n <= max_total_dim; ++n) {
            if (m + n < 1) continue;
            heis.push_back(CatalogExpr::make_heis_even(m, n));
        }
    std::vector<CatalogExpr> heis_odds;
    for (long m = 1; 2 * m + 1 <= max_total_dim; ++m)
        heis_odds.push_back(CatalogExpr::make_heis_odd(m));
    for (const auto& h : heis) push(h);
    for (const auto& h : heis_odds) push(h);

    for (std::size_t i = 0; i < heis.size(); ++i)
        for (std::size_t j = i; j < heis.size(); ++j)
            push(CatalogExpr::make_sum({heis[i], heis[j]}));
    for (const auto& h : heis)
        for (const auto& o : heis_odds) push(CatalogExpr::make_sum({h, o}));
    for (std::size_t i = 0; i < heis_odds.size(); ++i)
        for (std::size_t j = i; j < heis_odds.size(); ++j)
            push(CatalogExpr::make_sum({heis_odds[i], heis_odds[j]}));

    std::vector<CatalogExpr> small = {CatalogExpr::make_heis_even(1, 0),
                                      CatalogExpr::make_heis_even(0, 1),
                                      CatalogExpr::make_heis_odd(1)};
    for (const auto& h : small)
        for (long p = 0; p <= 3; ++p)
            for (long q = 0; p + q <= 3; ++q) {
                if (p + q < 1) continue;
                push(CatalogExpr::make_sum({h, CatalogExpr::make_abelian(p, q)}));
            }

    for (auto [p, q, r, s] : std::initializer_list<std::array<long, 4>>{
             {3, 0, 2, 0}, {3, 0, 3, 0}, {2, 1, 1, 1}, {2, 1, 0, 2}, {2, 1, 2, 2},
             {0, 2, 1, 0}, {0, 2, 2, 0}, {1, 1, 1, 1}, {2, 2, 1, 1}, {0, 3, 2, 0}})
        push(CatalogExpr::make_f2(p, q, {r, s}, seed));

    return out;
}

namespace detail {

inline RecordStatus compare(const std::optional<GradedDim>& constructive,
                            const std::optional<GradedDim>& closed) {
    if (constructive && closed)
        return *constructive == *closed ? RecordStatus::match : RecordStatus::mismatch;
    if (closed) return RecordStatus::formula_only;
    if (constructive) return RecordStatus::constructive_only;
    return RecordStatus::untested_case;
}

inline void emit(std::vector<VerificationRecord>& records, const std::string& algebra,
                 const std::string& quantity, std::optional<GradedDim> constructive,
                 std::optional<GradedDim> closed, std::string note = {}) {
    records.push_back({algebra, quantity, constructive, closed, compare(constructive, closed),
                       std::move(note)});
}

}  // namespace detail

/// All verification records for one specimen: constructive quantities,
/// every applicable closed form, the internal consistency identities, the
/// bound, and the rank-2 dispatch driven by the constructive exterior center.
inline std::vector<VerificationRecord> records_for(const Specimen& spec) {
    std::vector<VerificationRecord> records;
    const std::string& key = spec.key;
    LieSuperAlgebra L = spec.expr.build();
    auto an = analyze_tensor(L);
    auto derived = derived_subalgebra(L);
    GradedDim t2 = an.tensor.quotient_dim();
    GradedDim e2 = an.exterior.quotient_dim();
    GradedDim sq = an.square.dim;
    GradedDim mult = e2 - derived.dim;
    if (!mult.nonnegative())
        throw NegativeDim("verification: exterior square smaller than derived subalgebra");
    GradedDim ab = L.dim() - derived.dim;
    GradedDim t3 = tensor_dims(t2, ab);
    auto zw = exterior_center(L, an);

    detail::emit(records, key, "tensor2", t2, spec.expr.closed_tensor2());
    detail::emit(records, key, "ext2", e2, spec.expr.closed_ext2());
    detail::emit(records, key, "multiplier", mult, spec.expr.closed_multiplier());
    detail::emit(records, key, "tensor3", t3, spec.expr.closed_tensor3());
    if (auto e3 = spec.expr.closed_ext3())
        detail::emit(records, key, "ext3", std::nullopt, e3);
    detail::emit(records, key, "square", sq, formulas::gamma_closed(ab.even, ab.odd));
    detail::emit(records, key, "gamma", gamma_dim(ab.even, ab.odd),
                 formulas::gamma_closed(ab.even, ab.odd));
    detail::emit(records, key, "consistency:tensor2=ext2+square", t2, e2 + sq);

    {
        std::string note = zw.space.rank() == 0 ? "capable"
                           : (zw.space == derived.space ? "equals derived subalgebra"
                                                        : "inside derived subalgebra");
        records.push_back({key, "extcenter", zw.dim, std::nullopt,
                           RecordStatus::constructive_only, std::move(note)});
    }

    if (derived.dim.total() > 0) {
        auto bound = bound_check(L);
        std::ostringstream note;
        note << "lhs=" << bound.lhs << " rhs=" << bound.rhs
             << (bound.equality ? " equality" : " strict");
        records.push_back({key, "bound", bound.triple, std::nullopt,
                           bound.holds ? RecordStatus::match : RecordStatus::mismatch,
                           note.str()});
    }

    if (auto rank = generalized_heisenberg_rank(L); rank && rank->total() == 2) {
        std::optional<formulas::Rank2Case> r2case;
        std::string case_name;
        if (zw.space == derived.space) {
            r2case = formulas::Rank2Case::center_equals_derived;
            case_name = "Z^=derived";
        } else if (zw.dim == GradedDim{1, 0}) {
            r2case = formulas::Rank2Case::witness_even;
            case_name = "Z^=(1|0)";
        } else if (zw.dim == GradedDim{0, 1}) {
            r2case = formulas::Rank2Case::witness_odd;
            case_name = "Z^=(0|1)";
        } else if (zw.dim == GradedDim{0, 0}) {
            case_name = "capable: no tabulated case";
        } else {
            case_name = "unclassified exterior center " + to_string(zw.dim);
        }
        long long m = L.dim().even, n = L.dim().odd;
        auto closed_m = r2case ? formulas::multiplier_gh_rank2(*r2case, *rank, m, n) : std::nullopt;
        auto closed_t2 = r2case ? formulas::tensor2_gh_rank2(*r2case, *rank, m, n) : std::nullopt;
        auto closed_e2 = r2case ? formulas::ext2_gh_rank2(*r2case, *rank, m, n) : std::nullopt;
        auto closed_t3 = r2case ? formulas::tensor3_gh_rank2(*r2case, *rank, m, n) : std::nullopt;
        auto closed_e3 = r2case ? formulas::ext3_gh_rank2(*r2case, *rank, m, n) : std::nullopt;
        auto emit_rank2 = [&](const std::string& q, std::optional<GradedDim> constructive,
                              std::optional<GradedDim> closed) {
            auto status = detail::compare(constructive, closed);
            if (!closed) status = RecordStatus::untested_case;
            records.push_back({key, q, constructive, closed, status, case_name});
        };
        emit_rank2("rank2:multiplier", mult, closed_m);
        emit_rank2("rank2:tensor2", t2, closed_t2);
        emit_rank2("rank2:ext2", e2, closed_e2);
        emit_rank2("rank2:tensor3", t3, closed_t3);
        emit_rank2("rank2:ext3", std::nullopt, closed_e3);
    }
    return records;
}

inline bool serial_forced() {
    const char* env = std::getenv("SUPERTENSOR_NO_PARALLEL");
    return env != nullptr && std::string(env) == "1";
}

/// Runs the whole sweep and returns the records sorted by (algebra, quantity).
inline std::vector<VerificationRecord> verify_catalog(long max_total_dim, long seed = 1,
                                                    bool parallel = true) {
    auto specimens = standard_specimens(max_total_dim, seed);
    std::vector<std::vector<VerificationRecord>> chunks(specimens.size());
    if (parallel && !serial_forced() && std::thread::hardware_concurrency() > 1) {
        std::vector<std::future<std::vector<VerificationRecord>>> futures;
        futures.reserve(specimens.size());
        for (const auto& s : specimens)
            futures.push_back(
                std::async(std::launch::async | std::launch::deferred,
                           [&s] { return records_for(s); }));
        for (std::size_t i = 0; i < futures.size(); ++i) chunks[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < specimens.size(); ++i) chunks[i] = records_for(specimens[i]);
    }
    std::vector<VerificationRecord> records;
    for (auto& c : chunks)
        for (auto& r : c) records.push_back(std::move(r));
    std::stable_sort(records.begin(), records.end(),
                     [](const VerificationRecord& a, const VerificationRecord& b) {
                         if (a.algebra != b.algebra) return a.algebra < b.algebra;
                         return a.quantity < b.quantity;
                     });
    return records;
}

inline std::size_t mismatch_count(const std::vector<VerificationRecord>& records) {
    std::size_t n = 0;
    for (const auto& r : records)
        if (r.status == RecordStatus::mismatch) ++n;
    return n;
}

}  // namespace supertensor
