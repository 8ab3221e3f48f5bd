#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace conway {

/// Crossing label. Positive, unique within one diagram.
using ChordId = int;

/// Local writhe of a crossing / sign of a chord.
enum class Sign : int { plus = +1, minus = -1 };

inline int value(Sign s) { return static_cast<int>(s); }
inline Sign operator*(Sign a, Sign b) {
    return value(a) == value(b) ? Sign::plus : Sign::minus;
}
inline Sign negated(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// Traversal condition used by subset classification and the state sum.
enum class Direction { ascending, descending };

enum class errc {
    malformed_token,
    duplicate_role,
    sign_mismatch,
    dangling_chord,
    too_many_circles,
    unknown_chord,
    not_one_component,
    circle_count_mismatch,
    no_such_configuration,
    parse_error,
    invalid_code,
    overflow,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

// Exact 64-bit arithmetic. Counts and coefficients in the supported diagram
// sizes stay far below the limits; anything bigger is a bug, not a rounding
// question, so overflow throws.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(errc::overflow, "integer overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(errc::overflow, "integer overflow in multiplication");
    return r;
}

} // namespace conway
