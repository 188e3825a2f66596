#include "fujimoto/ext_scalar.hpp"

#include <stdexcept>

#include "fujimoto/errors.hpp"

namespace fujimoto {

namespace {

std::optional<long> integer_sqrt(long d) {
    const BigInt v = d;
    if (!mpz_perfect_square_p(v.get_mpz_t())) {
        return std::nullopt;
    }
    const BigInt root = sqrt(v);
    return root.get_si();
}

} // namespace

ExtScalar::ExtScalar(Rational p, Rational q, Rational r, Rational s, long radicand)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)), d_(radicand) {
    if (!has_sigma()) {
        d_ = 0;
        return;
    }
    if (radicand <= 0) {
        throw PreconditionError("radicand must be positive");
    }
    if (const auto root = integer_sqrt(radicand)) {
        p_ += r_ * Rational(*root);
        q_ += s_ * Rational(*root);
        r_ = Rational();
        s_ = Rational();
        d_ = 0;
    }
}

ExtScalar ExtScalar::sqrt_of(long radicand) {
    return ExtScalar(Rational(0), Rational(0), Rational(1), Rational(0), radicand);
}

long ExtScalar::shared_radicand(const ExtScalar& a, const ExtScalar& b) {
    if (a.has_sigma() && b.has_sigma() && a.d_ != b.d_) {
        throw std::logic_error("mixing extension elements with different radicands");
    }
    return a.has_sigma() ? a.d_ : b.d_;
}

ExtScalar operator+(const ExtScalar& a, const ExtScalar& b) {
    const long d = ExtScalar::shared_radicand(a, b);
    return ExtScalar(a.p_ + b.p_, a.q_ + b.q_, a.r_ + b.r_, a.s_ + b.s_, d);
}

ExtScalar operator-(const ExtScalar& a) {
    return ExtScalar(-a.p_, -a.q_, -a.r_, -a.s_, a.d_);
}

ExtScalar operator-(const ExtScalar& a, const ExtScalar& b) { return a + (-b); }

ExtScalar operator*(const ExtScalar& a, const ExtScalar& b) {
    const long d = ExtScalar::shared_radicand(a, b);
    // (A1 + B1 s)(A2 + B2 s) = (A1 A2 + d B1 B2) + (A1 B2 + B1 A2) s over Q(i).
    auto mul_re = [](const Rational& x, const Rational& y, const Rational& u, const Rational& v) {
        return x * u - y * v;
    };
    auto mul_im = [](const Rational& x, const Rational& y, const Rational& u, const Rational& v) {
        return x * v + y * u;
    };
    Rational p = mul_re(a.p_, a.q_, b.p_, b.q_);
    Rational q = mul_im(a.p_, a.q_, b.p_, b.q_);
    if (d != 0) {
        p += Rational(d) * mul_re(a.r_, a.s_, b.r_, b.s_);
        q += Rational(d) * mul_im(a.r_, a.s_, b.r_, b.s_);
    }
    Rational r = mul_re(a.p_, a.q_, b.r_, b.s_) + mul_re(a.r_, a.s_, b.p_, b.q_);
    Rational s = mul_im(a.p_, a.q_, b.r_, b.s_) + mul_im(a.r_, a.s_, b.p_, b.q_);
    return ExtScalar(std::move(p), std::move(q), std::move(r), std::move(s), d);
}

ExtScalar ExtScalar::inverse() const {
    if (is_zero()) {
        throw std::domain_error("inverse of zero");
    }
    const ExtScalar conj(p_, q_, -r_, -s_, d_);
    const ExtScalar norm = *this * conj; // lies in Q(i)
    const Rational n2 = norm.p_ * norm.p_ + norm.q_ * norm.q_;
    const ExtScalar norm_inv(norm.p_ / n2, -norm.q_ / n2);
    return conj * norm_inv;
}

std::array<std::string, 4> ExtScalar::components() const {
    return {p_.to_string(), q_.to_string(), r_.to_string(), s_.to_string()};
}

std::string ExtScalar::to_string() const {
    std::string out;
    auto term = [&](const Rational& c, const std::string& unit) {
        if (c.is_zero()) return;
        std::string v = c.to_string();
        if (!out.empty()) {
            if (v.front() == '-') {
                out += " - ";
                v.erase(0, 1);
            } else {
                out += " + ";
            }
        }
        out += unit.empty() ? v : (v == "1" ? unit : v == "-1" ? "-" + unit : v + "*" + unit);
    };
    const std::string root = "sqrt(" + std::to_string(d_) + ")";
    term(p_, "");
    term(q_, "i");
    term(r_, root);
    term(s_, "i*" + root);
    return out.empty() ? "0" : out;
}

ExtPolynomial to_ext(const RatPolynomial& p) {
    std::vector<ExtScalar> c;
    for (const auto& v : p.coefficients()) c.emplace_back(v);
    return ExtPolynomial(std::move(c));
}

ExtScalar ext_determinant(ExtMatrix a) {
    const std::size_t n = a.size();
    ExtScalar det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return ExtScalar();
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det = det * a[col][col];
        const ExtScalar inv = a[col][col].inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            const ExtScalar f = a[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) a[r][c] = a[r][c] - f * a[col][c];
        }
    }
    return det;
}

std::optional<ExtMatrix> ext_inverse(ExtMatrix a) {
    const std::size_t n = a.size();
    ExtMatrix inv(n, std::vector<ExtScalar>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = ExtScalar(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const ExtScalar scale = a[col][col].inverse();
        for (std::size_t c = 0; c < n; ++c) {
            a[col][c] = a[col][c] * scale;
            inv[col][c] = inv[col][c] * scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const ExtScalar f = a[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                a[r][c] = a[r][c] - f * a[col][c];
                inv[r][c] = inv[r][c] - f * inv[col][c];
            }
        }
    }
    return inv;
}

nlohmann::json to_json(const ExtScalar& x) {
    const auto c = x.components();
    return nlohmann::json::array({c[0], c[1], c[2], c[3]});
}

} // namespace fujimoto
