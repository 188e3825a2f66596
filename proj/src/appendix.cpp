#include "fujimoto/appendix.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "fujimoto/combinatorics.hpp"

namespace fujimoto {

void ExtendedFamilyConstants::validate(const FamilyParams& p) const {
    if (pairs.size() != static_cast<std::size_t>(p.t)) {
        throw PreconditionError("expected " + std::to_string(p.t) + " constant pairs, got " +
                                std::to_string(pairs.size()));
    }
    if (pairs[0].first != Rational(0) || pairs[0].second != Rational(1)) {
        throw PreconditionError("the first pair must be (0, 1)");
    }
    std::set<Rational> seen;
    for (const auto& v : values()) {
        if (!seen.insert(v).second) {
            throw PreconditionError("constant " + v.to_string() + " appears twice");
        }
    }
}

std::vector<Rational> ExtendedFamilyConstants::values() const {
    std::vector<Rational> out;
    for (const auto& [a, b] : pairs) {
        out.push_back(a);
        out.push_back(b);
    }
    return out;
}

namespace {

RatPolynomial shifted_power(const Rational& root, unsigned power) {
    return RatPolynomial::linear_power(root, power, Rational(1));
}

/// Base family plus the pairs 2..upto.
std::vector<RatPolynomial> truncated_family(const FamilyParams& p, const ExtendedFamilyConstants& c,
                                            std::size_t upto) {
    std::vector<RatPolynomial> out;
    for (const auto& f : family_polys(p)) out.push_back(to_rational(f));
    for (std::size_t j = 1; j < upto; ++j) {
        const auto& [a, b] = c.pairs[j];
        for (int i = 1; i <= p.m; ++i) {
            out.push_back(shifted_power(a, static_cast<unsigned>(p.m - i)) *
                          shifted_power(b, static_cast<unsigned>(i - 1)));
        }
    }
    return out;
}

ScanMode stage_mode(std::size_t rows, int m, const SearchOptions& o, int pair) {
    const BigInt total = binomial(static_cast<long>(rows), m);
    if (total <= BigInt(static_cast<unsigned long>(o.exhaustive_budget))) {
        return ScanMode::exhaustive();
    }
    return ScanMode::sampled(o.seed + static_cast<std::uint64_t>(pair), o.sample_count);
}

/// Integer pairs in [-bound, bound] ordered by size, then random rationals.
class CandidateStream {
public:
    CandidateStream(long bound, std::uint64_t seed) : bound_(bound), rng_(seed) {
        for (long a = -bound; a <= bound; ++a) {
            for (long b = -bound; b <= bound; ++b) {
                if (a != b) ints_.emplace_back(a, b);
            }
        }
        std::stable_sort(ints_.begin(), ints_.end(), [](const auto& x, const auto& y) {
            const auto key = [](const std::pair<long, long>& v) {
                return std::make_tuple(std::max(std::labs(v.first), std::labs(v.second)),
                                       std::labs(v.first) + std::labs(v.second), v.first < 0, v.second < 0);
            };
            return key(x) < key(y);
        });
    }

    std::pair<Rational, Rational> next() {
        if (pos_ < ints_.size()) {
            const auto [a, b] = ints_[pos_++];
            return {Rational(a), Rational(b)};
        }
        return {random_rational(), random_rational()};
    }

private:
    Rational random_rational() {
        const auto span = static_cast<std::uint64_t>(2 * bound_ + 1);
        const long num = static_cast<long>(rng_() % span) - bound_;
        const long den = static_cast<long>(rng_() % static_cast<std::uint64_t>(bound_)) + 1;
        return Rational(num, den);
    }

    long bound_;
    std::mt19937_64 rng_;
    std::vector<std::pair<long, long>> ints_;
    std::size_t pos_ = 0;
};

} // namespace

std::vector<RatPolynomial> extended_family(const FamilyParams& p, const ExtendedFamilyConstants& c) {
    c.validate(p);
    return truncated_family(p, c, c.pairs.size());
}

GeneralPositionReport verify_extended_general_position(const FamilyParams& p, const ExtendedFamilyConstants& c,
                                                       const ScanMode& mode, const ScanOptions& options,
                                                       std::uint64_t budget) {
    const auto polys = extended_family(p, c);
    if (!mode.is_sampled()) {
        const BigInt total = binomial(static_cast<long>(polys.size()), p.m);
        if (total > BigInt(static_cast<unsigned long>(budget))) {
            throw BudgetError("exhaustive extended scan over " + total.get_str() +
                              " subsets exceeds the budget; use sampled mode with a seed");
        }
    }
    return maximal_minor_scan(coefficient_matrix(polys, static_cast<std::size_t>(p.m)), mode, options);
}

SearchResult search_constants(const FamilyParams& p, const SearchOptions& o) {
    if (p.m < 4) {
        throw PreconditionError("constant search needs m >= 4");
    }
    if (o.bound < 1) {
        throw PreconditionError("search bound must be positive");
    }
    SearchResult result;
    result.constants.pairs.assign(1, {Rational(0), Rational(1)});
    for (int j = 2; j <= p.t; ++j) {
        CandidateStream stream(o.bound, o.seed * 1000003u + static_cast<std::uint64_t>(j));
        bool accepted = false;
        for (std::uint64_t tries = 0; tries < o.retry_limit && !accepted; ++tries) {
            auto [a, b] = stream.next();
            const auto used = result.constants.values();
            if (a == b || std::find(used.begin(), used.end(), a) != used.end() ||
                std::find(used.begin(), used.end(), b) != used.end()) {
                continue;
            }
            ++result.candidates_tried;
            ExtendedFamilyConstants trial = result.constants;
            trial.pairs.emplace_back(a, b);
            const auto polys = truncated_family(p, trial, trial.pairs.size());
            const auto report = maximal_minor_scan(coefficient_matrix(polys, static_cast<std::size_t>(p.m)),
                                                   stage_mode(polys.size(), p.m, o, j), o.scan);
            if (report.passed()) {
                result.constants = std::move(trial);
                accepted = true;
            } else {
                result.rejected.push_back({j, a, b, report.failures.size()});
            }
        }
        if (!accepted) {
            throw SearchExhausted("no admissible constants for pair " + std::to_string(j) + " within " +
                                      std::to_string(o.retry_limit) + " candidates",
                                  std::move(result));
        }
    }
    const auto polys = extended_family(p, result.constants);
    result.final_report = maximal_minor_scan(coefficient_matrix(polys, static_cast<std::size_t>(p.m)),
                                             stage_mode(polys.size(), p.m, o, p.t + 1), o.scan);
    return result;
}

Rational wronskian(const std::vector<RatPolynomial>& polys, const Rational& point) {
    const std::size_t n = polys.size();
    if (n == 0) return Rational(1);
    ExactMatrix w(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        RatPolynomial d = polys[r];
        for (std::size_t v = 0; v < n; ++v) {
            w(v, r) = d.evaluate(point);
            d = d.derivative();
        }
    }
    return determinant(w);
}

std::vector<ExtPolynomial> weierstrass_h(const FamilyParams& p) {
    if (p.m < 4 || p.m % 2 != 0 || 2 * p.t != p.m) {
        throw PreconditionError("the Weierstrass functions need an even m >= 4; for m = 2 the factor "
                                "sqrt(t - 1) vanishes and the construction degenerates");
    }
    const int t = p.t;
    const ExtScalar one(1);
    const ExtScalar i = ExtScalar::imaginary_unit();
    const ExtScalar sigma = ExtScalar::sqrt_of(t - 1);
    auto z = [&](int e) { return ExtPolynomial::monomial(static_cast<std::size_t>(e), one); };
    std::vector<ExtPolynomial> h;
    for (int l = 0; l <= t - 2; ++l) {
        h.push_back(z(l) + z(2 * t - l - 1));
        h.push_back(i * (z(l) - z(2 * t - l - 1)));
    }
    h.push_back((i * sigma) * (z(t - 1) + z(t)));
    h.push_back(sigma * (z(t - 1) - z(t)));
    return h;
}

WeierstrassData hyperplane_coefficients(const FamilyParams& p, const ExtendedFamilyConstants& c) {
    WeierstrassData w;
    w.m = p.m;
    w.constants = c;
    w.h = weierstrass_h(p);
    w.psi_roots = c.values();
    const auto polys = extended_family(p, c);

    const auto m = static_cast<std::size_t>(p.m);
    ExtMatrix basis(m, std::vector<ExtScalar>(m));
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t j = 0; j < m; ++j) basis[s][j] = w.h[j].coefficient(s);
    const auto inv = ext_inverse(basis);
    if (!inv) {
        throw std::logic_error("the Weierstrass functions failed to form a basis");
    }
    for (const auto& f : polys) {
        std::vector<ExtScalar> row(m);
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t s = 0; s < m; ++s) {
                row[j] = row[j] + (*inv)[j][s] * ExtScalar(f.coefficient(s));
            }
        }
        w.c.push_back(std::move(row));
    }
    return w;
}

nlohmann::json to_json(const WeierstrassData& w) {
    using nlohmann::json;
    json out;
    out["m"] = w.m;
    out["sigma_squared"] = w.m / 2 - 1;
    json constants = json::array();
    for (const auto& [a, b] : w.constants.pairs) constants.push_back({a.to_string(), b.to_string()});
    out["constants"] = constants;
    json h = json::array();
    for (const auto& poly : w.h) {
        json coeffs = json::array();
        for (const auto& x : poly.coefficients()) coeffs.push_back(to_json(x));
        h.push_back(coeffs);
    }
    out["h"] = h;
    json c = json::array();
    for (const auto& row : w.c) {
        json r = json::array();
        for (const auto& x : row) r.push_back(to_json(x));
        c.push_back(r);
    }
    out["c"] = c;
    json roots = json::array();
    for (const auto& v : w.psi_roots) roots.push_back(v.to_string());
    out["psi_roots"] = roots;
    return out;
}

} // namespace fujimoto
