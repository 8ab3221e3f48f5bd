#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "conway/core.hpp"

namespace conway {

/// Integer polynomial in z, stored densely by degree. Canonical form: no
/// trailing zero coefficients; the zero polynomial stores nothing.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
        canonicalize();
    }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return constant(1); }
    static Polynomial constant(std::int64_t c) { return Polynomial({c}); }
    static Polynomial monomial(std::int64_t c, int degree) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(degree) + 1, 0);
        v.back() = c;
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of the highest nonzero term; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    std::int64_t coefficient(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

    Polynomial operator+(const Polynomial& other) const {
        std::vector<std::int64_t> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = checked_add(coefficient(static_cast<int>(i)),
                                 other.coefficient(static_cast<int>(i)));
        return Polynomial(std::move(out));
    }

    Polynomial operator-(const Polynomial& other) const {
        return *this + other.scale_shift(-1, 0);
    }

    /// Returns s * z^k * this.
    Polynomial scale_shift(std::int64_t s, int k) const {
        if (is_zero() || s == 0) return Polynomial();
        std::vector<std::int64_t> out(coeffs_.size() + static_cast<std::size_t>(k), 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            out[i + static_cast<std::size_t>(k)] = checked_mul(coeffs_[i], s);
        return Polynomial(std::move(out));
    }

    bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    /// Human form, terms by increasing degree: `1 - z^2 - z^4`.
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (int k = 0; k <= degree(); ++k) {
            std::int64_t c = coefficient(k);
            if (c == 0) continue;
            if (first) {
                if (c < 0) out << "-";
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            std::int64_t a = c < 0 ? -c : c;
            if (k == 0) {
                out << a;
            } else {
                if (a != 1) out << a << " ";
                out << "z";
                if (k > 1) out << "^" << k;
            }
            first = false;
        }
        return out.str();
    }

    /// Machine form: space-separated coefficients through the top degree.
    std::string machine_str() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        for (int k = 0; k <= degree(); ++k) {
            if (k > 0) out << ' ';
            out << coefficient(k);
        }
        return out.str();
    }

    /// Parses the machine form (list of integers, low degree first).
    static Polynomial parse_machine(const std::string& text) {
        std::istringstream in(text);
        std::vector<std::int64_t> coeffs;
        std::int64_t c;
        while (in >> c) coeffs.push_back(c);
        if (!in.eof()) fail(errc::parse_error, "bad coefficient list: " + text);
        return Polynomial(std::move(coeffs));
    }

private:
    void canonicalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<std::int64_t> coeffs_;
};

inline Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
inline Polynomial poly_scale_shift(const Polynomial& a, std::int64_t s, int k) {
    return a.scale_shift(s, k);
}

} // namespace conway
