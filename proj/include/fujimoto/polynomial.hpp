#pragma once

#include <cstddef>
#include <vector>

#include "fujimoto/rational.hpp"

namespace fujimoto {

/// Dense univariate polynomial; coefficient s multiplies z^s. The highest
/// stored coefficient is nonzero unless the polynomial is zero (no
/// coefficients).
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }

    static Polynomial monomial(std::size_t degree, T c) {
        std::vector<T> v(degree + 1, zero_like(c));
        v[degree] = std::move(c);
        return Polynomial(std::move(v));
    }

    /// (z - root)^power with the given unit.
    static Polynomial linear_power(const T& root, unsigned power, const T& one) {
        Polynomial result = constant(one);
        const Polynomial factor(std::vector<T>{zero_like(one) - root, one});
        for (unsigned p = 0; p < power; ++p) {
            result = result * factor;
        }
        return result;
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<T>& coefficients() const { return coeffs_; }

    /// Coefficient of z^s, zero beyond the degree.
    T coefficient(std::size_t s, const T& zero = T()) const {
        return s < coeffs_.size() ? coeffs_[s] : zero;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) {
            return {};
        }
        std::vector<T> d(coeffs_.size() - 1);
        for (std::size_t s = 1; s < coeffs_.size(); ++s) {
            d[s - 1] = coeffs_[s] * T(static_cast<long>(s));
        }
        return Polynomial(std::move(d));
    }

    T evaluate(const T& z) const {
        if (coeffs_.empty()) {
            return zero_like(z);
        }
        T acc = coeffs_.back();
        for (std::size_t s = coeffs_.size() - 1; s-- > 0;) {
            acc = acc * z + coeffs_[s];
        }
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        const auto& big = a.coeffs_.size() >= b.coeffs_.size() ? a.coeffs_ : b.coeffs_;
        const auto& small = a.coeffs_.size() >= b.coeffs_.size() ? b.coeffs_ : a.coeffs_;
        std::vector<T> r = big;
        for (std::size_t s = 0; s < small.size(); ++s) {
            r[s] = r[s] + small[s];
        }
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& a) {
        std::vector<T> r = a.coeffs_;
        for (auto& c : r) {
            c = zero_like(c) - c;
        }
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<T> r(a.coeffs_.size() + b.coeffs_.size() - 1, zero_like(a.coeffs_[0]));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                r[i + j] = r[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const T& c, const Polynomial& p) {
        return Polynomial::constant(c) * p;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    static T zero_like(const T& x) { return x - x; }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == zero_like(coeffs_.back())) {
            coeffs_.pop_back();
        }
    }

    std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

inline RatPolynomial to_rational(const IntPolynomial& p) {
    std::vector<Rational> c;
    c.reserve(p.coefficients().size());
    for (const auto& v : p.coefficients()) {
        c.emplace_back(v);
    }
    return RatPolynomial(std::move(c));
}

} // namespace fujimoto
