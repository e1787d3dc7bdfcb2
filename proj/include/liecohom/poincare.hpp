#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "basic_data.hpp"
#include "graded_algebra.hpp"
#include "integral.hpp"
#include "rings.hpp"

namespace liecohom {

struct PoincareSeries {
    std::vector<std::uint64_t> coefficients;  // index = degree, 0..dim G
    // over Z: free ranks above, torsion multiplicities per prime here
    std::map<std::uint32_t, std::vector<std::uint64_t>> torsion;

    std::uint64_t at(int d) const {
        return d >= 0 && d < static_cast<int>(coefficients.size()) ? coefficients[d] : 0;
    }
    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (auto c : coefficients) t += c;
        return t;
    }
    long long euler_characteristic() const {
        long long e = 0;
        for (std::size_t d = 0; d < coefficients.size(); ++d)
            e += (d % 2 ? -1LL : 1LL) * static_cast<long long>(coefficients[d]);
        return e;
    }
    bool palindromic() const {
        const std::size_t n = coefficients.size();
        for (std::size_t d = 0; d < n; ++d)
            if (coefficients[d] != coefficients[n - 1 - d]) return false;
        return true;
    }
    std::string to_string() const {
        std::string s;
        for (std::size_t d = 0; d < coefficients.size(); ++d) {
            if (!coefficients[d]) continue;
            if (!s.empty()) s += " + ";
            if (coefficients[d] != 1 || d == 0) s += std::to_string(coefficients[d]);
            if (d > 0) s += (coefficients[d] != 1 ? "*" : "") + std::string("t^") + std::to_string(d);
        }
        return s;
    }
};

inline PoincareSeries poincare_series(const GroupId& g, const Coefficients& c) {
    const int top = basic_data(g).dim_g;
    PoincareSeries s;
    s.coefficients.assign(top + 1, 0);
    if (c.is_field()) {
        for (const auto& [d, e] : cohomology(g, c).algebra->graded_dimension())
            if (d <= top) s.coefficients[d] = e.rank;
        return s;
    }
    IntegralCohomology H(g);
    for (const auto& [d, e] : H.free_ring().algebra->graded_dimension()) s.coefficients[d] = e.rank;
    for (std::uint32_t p : H.torsion_primes()) {
        auto& v = s.torsion[p];
        v.assign(top + 1, 0);
        for (auto [d, n] : H.torsion_dimensions(p))
            if (d <= top) v[d] = n;
    }
    return s;
}

// Rational series from the product formula over the primary degrees.
inline PoincareSeries rational_product_formula(const GroupId& g) {
    const int top = basic_data(g).dim_g;
    std::vector<std::uint64_t> v(top + 1, 0);
    v[0] = 1;
    for (const auto& l : primary_form_labels(g, Coefficients::Q()))
        for (int d = top; d >= l.degree; --d) v[d] += v[d - l.degree];
    return PoincareSeries{v, {}};
}

struct DualityWitness {
    bool ok = true;
    std::string reason;
    std::optional<Monomial> x;
    std::optional<Monomial> y;
    std::uint64_t products = 0;
};

// Exhaustive pairing check into the top degree. Each monomial is first paired with its
// complement (odd exponents flipped, even exponents reflected), then with every other
// monomial of complementary degree.
inline DualityWitness duality_check(const CohomologyRing& ring) {
    if (!ring.coeff.is_field()) throw UnsupportedCoefficient("duality is checked over fields");
    const auto& A = *ring.algebra;
    DualityWitness w;
    const int top = A.top_degree();
    const Monomial u = A.top_monomial();
    const auto& basis = A.basis();
    if (A.basis(top).size() != 1) {
        w.ok = false;
        w.reason = "top degree is not one-dimensional";
        return w;
    }
    auto complement = [&](const Monomial& m) {
        Monomial c(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) c[i] = static_cast<std::uint8_t>(A.bound(i) - 1 - m[i]);
        return c;
    };
    auto fail = [&](const Monomial& x, const Monomial& y, std::string why) {
        w.ok = false;
        w.x = x;
        w.y = y;
        w.reason = std::move(why);
    };
    for (const auto& [d, xs] : basis) {
        if (2 * d > top) break;
        const auto& ys = A.basis(top - d);
        for (const auto& x : xs) {
            const Monomial tx = complement(x);
            auto paired = A.multiply_monomials(x, tx);
            ++w.products;
            Rational c = 0;
            for (const auto& [m, v] : paired) {
                if (!(m == u)) {
                    fail(x, tx, "product with the complement is not a multiple of the top class");
                    return w;
                }
                c += v;
            }
            if (A.normalize(u, c) == 0) {
                fail(x, tx, "product with the complement vanishes");
                return w;
            }
            for (const auto& y : ys) {
                if (y == tx) continue;
                Rational s = 0;
                for (const auto& [m, v] : A.multiply_monomials(x, y)) s += v;
                ++w.products;
                if (A.normalize(u, s) != 0) {
                    fail(x, y, "non-complementary pair has nonzero product");
                    return w;
                }
            }
        }
    }
    return w;
}

}  // namespace liecohom
