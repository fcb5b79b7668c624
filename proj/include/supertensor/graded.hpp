#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace supertensor {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}

inline const char* to_cstring(Parity p) { return p == Parity::even ? "even" : "odd"; }

/// Dimension pair (even | odd) of a graded vector space.
struct GradedDim {
    long long even = 0;
    long long odd = 0;

    long long total() const { return even + odd; }
    long long part(Parity p) const { return p == Parity::even ? even : odd; }

    bool operator==(const GradedDim&) const = default;

    GradedDim operator+(const GradedDim& o) const { return {even + o.even, odd + o.odd}; }
    GradedDim operator-(const GradedDim& o) const { return {even - o.even, odd - o.odd}; }

    bool componentwise_leq(const GradedDim& o) const { return even <= o.even && odd <= o.odd; }
    bool nonnegative() const { return even >= 0 && odd >= 0; }
};

/// Dimensions of the graded tensor product of two graded spaces.
inline GradedDim tensor_dims(const GradedDim& a, const GradedDim& b) {
    return {a.even * b.even + a.odd * b.odd, a.even * b.odd + a.odd * b.even};
}

inline std::string to_string(const GradedDim& d) {
    return "(" + std::to_string(d.even) + "|" + std::to_string(d.odd) + ")";
}

struct InvalidParams : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace supertensor
