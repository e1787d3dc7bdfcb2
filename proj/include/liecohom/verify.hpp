#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "differentials.hpp"
#include "integral.hpp"
#include "poincare.hpp"
#include "rings.hpp"
#include "torsion.hpp"

namespace liecohom {

enum class CheckStatus { Pass, Fail, NotDetermined, Skipped };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "ok";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::NotDetermined: return "not determined";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

struct VerifyReport {
    GroupId group;
    Coefficients coeff;
    std::vector<CheckResult> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }
};

struct VerifyOptions {
    std::uint64_t duality_limit = 4096;     // classical rings above this size skip the pairing check
    std::uint64_t enumeration_limit = 1u << 16;
    int random_triples = 200;
    std::uint32_t seed = 12345;
};

// Total of Im(delta_p): 2^(n-1) (prod k_t - 1), or 0 when no index has prime p.
inline std::uint64_t expected_image_total(const GroupId& g, std::uint32_t p) {
    const BasicData b = basic_data(g);
    const auto gp = torsion_index_set(g, p);
    if (gp.empty()) return 0;
    std::uint64_t prod = 1;
    for (int t : gp) prod *= static_cast<std::uint64_t>(b.k_list[t - 1]);
    return (std::uint64_t{1} << (b.n - 1)) * (prod - 1);
}

inline std::uint64_t expected_total_dimension(const GroupId& g, const Coefficients& c) {
    const BasicData b = basic_data(g);
    std::uint64_t d = std::uint64_t{1} << b.n;
    if (c.is_prime_field())
        for (int t : torsion_index_set(g, c.p)) d *= static_cast<std::uint64_t>(b.k_list[t - 1]);
    return d;
}

namespace detail {

inline bool has_unknown_square(const Algebra& A) {
    for (const auto& s : A.generators())
        if (s.odd() && s.square.kind == SquareRule::Kind::Unknown) return true;
    return false;
}

class Checker {
public:
    explicit Checker(VerifyReport& r) : r_(r) {}

    // Runs `body`; exceptions count as failures with their message.
    void run(const std::string& name, const std::function<CheckResult()>& body) {
        CheckResult c;
        try {
            c = body();
        } catch (const UnknownSquare& e) {
            c = {name, CheckStatus::NotDetermined, e.what()};
        } catch (const std::exception& e) {
            c = {name, CheckStatus::Fail, e.what()};
        }
        c.name = name;
        r_.checks.push_back(c);
    }

private:
    VerifyReport& r_;
};

inline CheckResult expect(bool ok, std::string detail) {
    return {"", ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

inline void verify_field(const GroupId& g, const Coefficients& c, const VerifyOptions& opt, VerifyReport& rep) {
    Checker chk(rep);
    const BasicData b = basic_data(g);
    const CohomologyRing ring = cohomology(g, c);
    const Algebra& A = *ring.algebra;
    const bool unknown = has_unknown_square(A);

    chk.run("dimension identity", [&] {
        auto d = check_dimension_identity(g, c);
        return expect(d.ok, d.text);
    });
    chk.run("total dimension", [&] {
        const std::uint64_t want = expected_total_dimension(g, c);
        return expect(A.total_dimension() == want,
                      std::to_string(A.total_dimension()) + " vs " + std::to_string(want));
    });
    chk.run("E3 page dimension", [&] {
        const auto e3 = e3_page(g, c).algebra->graded_dimension();
        const auto h = A.graded_dimension();
        bool same = e3.size() == h.size();
        for (const auto& [d, e] : h) same = same && e3.count(d) && e3.at(d).rank == e.rank;
        return expect(same, "per-degree dimensions of H* and E3");
    });
    const PoincareSeries ps = poincare_series(g, c);
    chk.run("Euler characteristic", [&] {
        return expect(ps.euler_characteristic() == 0, std::to_string(ps.euler_characteristic()));
    });
    chk.run("palindromic Poincare series", [&] { return expect(ps.palindromic(), ""); });
    if (c.kind == Coefficients::Kind::Rationals)
        chk.run("rational product formula", [&] {
            return expect(rational_product_formula(g).coefficients == ps.coefficients, ps.to_string());
        });

    const bool enumerable = A.total_dimension() <= opt.enumeration_limit || g.exceptional();
    if (c.is_prime_field() && c.p != 2) {
        chk.run("odd classes square to zero", [&]() -> CheckResult {
            if (!enumerable) return {"", CheckStatus::Skipped, "ring too large to enumerate"};
            std::uint64_t n = 0;
            for (const auto& [d, mons] : A.basis()) {
                if (d % 2 == 0) continue;
                for (const auto& m : mons) {
                    Element e = A.monomial(m);
                    if (!(e * e).is_zero()) return expect(false, "square of " + A.monomial_string(m) + " is nonzero");
                    ++n;
                }
            }
            return expect(true, std::to_string(n) + " classes");
        });
    }

    chk.run("Poincare duality", [&]() -> CheckResult {
        if (unknown) return {"", CheckStatus::NotDetermined, "mod-2 squares of this group are not tabulated"};
        if (!g.exceptional() && A.total_dimension() > opt.duality_limit)
            return {"", CheckStatus::Skipped, "ring too large for the exhaustive pairing"};
        auto w = duality_check(ring);
        return expect(w.ok, w.ok ? std::to_string(w.products) + " pairings" : w.reason);
    });

    if (g.exceptional() && !unknown && opt.random_triples > 0) {
        chk.run("random associativity/commutativity", [&] {
            std::mt19937 rng(opt.seed);
            std::vector<Monomial> flat;
            for (const auto& [d, mons] : A.basis()) flat.insert(flat.end(), mons.begin(), mons.end());
            std::uniform_int_distribution<std::size_t> pick(0, flat.size() - 1);
            for (int i = 0; i < opt.random_triples; ++i) {
                Element x = A.monomial(flat[pick(rng)]), y = A.monomial(flat[pick(rng)]),
                        z = A.monomial(flat[pick(rng)]);
                if (!((x * y) * z == x * (y * z))) return expect(false, "associativity");
                const int s = (x.degree() * y.degree()) % 2 ? -1 : 1;
                if (!(x * y == Rational(s) * (y * x))) return expect(false, "graded commutativity");
            }
            return expect(true, std::to_string(opt.random_triples) + " triples");
        });
    }

    if (!c.is_prime_field() || torsion_index_set(g, c.p).empty()) return;

    if (g.exceptional()) {
        const GradedLinearMap d = delta_p(ring);
        chk.run("delta squares to zero", [&] { return expect(squares_to_zero(d), "matrix check"); });
        chk.run("delta homology", [&] {
            auto h = homology_dimension(d).total;
            return expect(h == (std::uint64_t{1} << b.n), std::to_string(h));
        });
        chk.run("E3 differential homology", [&] {
            auto h = homology_dimension(partial_p(e3_page(g, c))).total;
            return expect(h == (std::uint64_t{1} << b.n), std::to_string(h));
        });
        chk.run("torsion dimension", [&] {
            const ImageSubspace im = image_subalgebra(ring, d);
            return expect(im.total() == expected_image_total(g, c.p), std::to_string(im.total()));
        });
        chk.run("torsion presentation vs oracle", [&] {
            auto t = torsion_ring(g, c.p);
            return expect(true, t.presentation + " (" + std::to_string(t.products_checked) + " products)");
        });
    } else {
        chk.run("delta homology (factored)", [&] {
            auto h = homology_total_factored(ring);
            return expect(h == (std::uint64_t{1} << b.n), std::to_string(h));
        });
        chk.run("torsion dimension (factored)", [&] {
            std::uint64_t t = 0;
            for (auto [d, n] : image_dimensions_factored(ring)) t += n;
            return expect(t == expected_image_total(g, c.p), std::to_string(t));
        });
    }
}

inline void verify_integral(const GroupId& g, VerifyReport& rep) {
    Checker chk(rep);
    chk.run("dimension identity", [&] {
        auto d = check_dimension_identity(g, Coefficients::Z());
        return expect(d.ok, d.text);
    });
    const IntegralCohomology H(g);
    chk.run("universal coefficients", [&] {
        auto hs = homology_descriptors(H, basic_data(g).dim_g);
        return expect(true, std::to_string(hs.size()) + " nonzero degrees");
    });
    if (!g.exceptional()) return;
    chk.run("mixed relations", [&]() -> CheckResult {
        std::size_t n = 0;
        for (std::uint32_t p : H.torsion_primes()) {
            const auto gp = torsion_index_set(g, p);
            for (int t : gp) {
                const IntegralElement lhs_rho = H.rho_for_eta(t);
                for (const auto& I : subsets_of(gp, 1)) {
                    IntegralElement lhs = H.multiply(lhs_rho, H.e_class(I));
                    IntegralElement rhs = h_relation(t, I, H);
                    // at odd p the rule holds up to a unit
                    bool ok = lhs == rhs;
                    for (std::uint32_t u = 2; !ok && u < p; ++u) ok = lhs == H.scale(Rational(u), rhs);
                    if (!ok)
                        return expect(false, "t=" + std::to_string(t) + " I=" + subset_string(I) + ": " +
                                                 H.to_string(lhs) + " vs " + H.to_string(rhs));
                    ++n;
                }
            }
        }
        return expect(true, std::to_string(n) + " relations");
    });
}

}  // namespace detail

inline VerifyReport verify(const GroupId& g, const Coefficients& c, const VerifyOptions& opt = {}) {
    VerifyReport rep{g, c, {}};
    try {
        if (c.is_field()) detail::verify_field(g, c, opt, rep);
        else detail::verify_integral(g, rep);
    } catch (const std::exception& e) {
        rep.checks.push_back({"construction", CheckStatus::Fail, e.what()});
    }
    return rep;
}

inline std::vector<Coefficients> verification_coefficients() {
    return {Coefficients::Z(), Coefficients::Q(), Coefficients::F(2), Coefficients::F(3), Coefficients::F(5),
            Coefficients::F(7)};
}

}  // namespace liecohom
