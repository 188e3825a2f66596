#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fujimoto/polynomial.hpp"
#include "fujimoto/rational.hpp"

namespace fujimoto {

/// Element p + q i + r s + s' i s of Q(i, s) with i^2 = -1 and s^2 = d for a
/// fixed positive radicand d. When d is a perfect square the s components
/// are folded into p and q at construction. Elements without an s part
/// combine freely with any radicand; two s parts must share d.
class ExtScalar {
public:
    ExtScalar() = default;
    ExtScalar(long v) : p_(v) {}
    ExtScalar(int v) : p_(static_cast<long>(v)) {}
    ExtScalar(Rational v) : p_(std::move(v)) {}
    ExtScalar(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {}
    ExtScalar(Rational p, Rational q, Rational r, Rational s, long radicand);

    static ExtScalar imaginary_unit() { return {Rational(0), Rational(1)}; }
    /// The square root of `radicand` (> 0).
    static ExtScalar sqrt_of(long radicand);

    const Rational& re() const { return p_; }
    const Rational& im() const { return q_; }
    const Rational& sigma_re() const { return r_; }
    const Rational& sigma_im() const { return s_; }
    /// 0 when the element has no s part.
    long radicand() const { return has_sigma() ? d_ : 0; }
    bool has_sigma() const { return !r_.is_zero() || !s_.is_zero(); }
    bool is_zero() const { return p_.is_zero() && q_.is_zero() && !has_sigma(); }

    /// Components (p, q, r, s) as canonical rational strings.
    std::array<std::string, 4> components() const;
    std::string to_string() const;

    ExtScalar inverse() const;

    friend ExtScalar operator+(const ExtScalar& a, const ExtScalar& b);
    friend ExtScalar operator-(const ExtScalar& a, const ExtScalar& b);
    friend ExtScalar operator-(const ExtScalar& a);
    friend ExtScalar operator*(const ExtScalar& a, const ExtScalar& b);
    friend ExtScalar operator/(const ExtScalar& a, const ExtScalar& b) { return a * b.inverse(); }

    friend bool operator==(const ExtScalar& a, const ExtScalar& b) {
        return a.p_ == b.p_ && a.q_ == b.q_ && a.r_ == b.r_ && a.s_ == b.s_ &&
               (!a.has_sigma() || a.d_ == b.d_);
    }

private:
    static long shared_radicand(const ExtScalar& a, const ExtScalar& b);

    Rational p_, q_, r_, s_;
    long d_ = 0;
};

using ExtPolynomial = Polynomial<ExtScalar>;

ExtPolynomial to_ext(const RatPolynomial& p);

/// Row-major square matrix over the extension field.
using ExtMatrix = std::vector<std::vector<ExtScalar>>;

ExtScalar ext_determinant(ExtMatrix a);

/// Inverse by Gauss-Jordan elimination, or nullopt when singular.
std::optional<ExtMatrix> ext_inverse(ExtMatrix a);

nlohmann::json to_json(const ExtScalar& x);

} // namespace fujimoto
