// Acceptance run: one PASS/FAIL line per criterion. Usage: liecohom_acceptance [path/to/liecohom]
#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "liecohom/liecohom.hpp"

using namespace liecohom;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
    void fail(const std::string& why) {
        if (ok) note = why;
        ok = false;
    }
};

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

std::string run_command(const std::string& cmd) {
    std::string out;
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) return out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), f)) out.append(buf.data(), n);
    pclose(f);
    return out;
}

std::vector<GroupId> all_groups() {
    auto gs = exceptional_groups();
    for (const auto& g : classical_groups(classical_rank_bound())) gs.push_back(g);
    return gs;
}

const std::vector<Coefficients>& fields() {
    static const std::vector<Coefficients> f = {Coefficients::Q(), Coefficients::F(2), Coefficients::F(3),
                                                Coefficients::F(5)};
    return f;
}

std::uint64_t expected_dimension(const GroupId& g, const Coefficients& c) {
    const BasicData b = basic_data(g);
    std::uint64_t d = std::uint64_t{1} << b.n;
    if (c.is_prime_field())
        for (int t : torsion_index_set(g, c.p)) d *= static_cast<std::uint64_t>(b.k_list[t - 1]);
    return d;
}

std::uint64_t expected_torsion(const GroupId& g, std::uint32_t p) {
    const BasicData b = basic_data(g);
    std::uint64_t prod = 1;
    for (int t : torsion_index_set(g, p)) prod *= static_cast<std::uint64_t>(b.k_list[t - 1]);
    return (std::uint64_t{1} << (b.n - 1)) * (prod - 1);
}

Outcome basic_data_fidelity(const std::string& cli) {
    Outcome o;
    for (const auto& row : fixtures::exceptional_rows()) {
        const BasicData b = basic_data(parse_group(row.name));
        if (b.k != row.k || b.m != row.m || b.deg_e != row.deg_e || b.deg_y != row.deg_y || b.p_list != row.p ||
            b.k_list != row.k_j || b.dim_g != row.dim)
            o.fail(row.name + " basic data differs from the reference row");
        if (cli.empty()) continue;
        const std::string out = run_command(cli + " info " + row.name);
        for (const std::string& line :
             {"k: " + std::to_string(row.k), "m: " + std::to_string(row.m), "deg e: " + join(row.deg_e),
              "deg y: " + join(row.deg_y), "p: " + join(row.p), "k_j: " + join(row.k_j),
              "dim: " + std::to_string(row.dim)})
            if (out.find("\n" + line + "\n") == std::string::npos) o.fail(row.name + " info lacks '" + line + "'");
    }
    try {
        for (int n = 2; n <= 16; ++n) basic_data(SU(n));
        for (int n = 1; n <= 16; ++n) basic_data(Sp(n));
        for (int m = 7; m <= 33; ++m) basic_data(Spin(m));
    } catch (const std::exception& e) {
        o.fail(std::string("classical row failed: ") + e.what());
    }
    if (o.ok) o.note = cli.empty() ? "library rows only" : "library rows and info output";
    return o;
}

Outcome dimension_identities() {
    Outcome o;
    int n = 0;
    for (const auto& g : all_groups())
        for (const auto& c : {Coefficients::Z(), Coefficients::Q(), Coefficients::F(2), Coefficients::F(3),
                              Coefficients::F(5), Coefficients::F(7)}) {
            const auto r = check_dimension_identity(g, c);
            if (!r.ok) o.fail(r.text);
            ++n;
        }
    if (o.ok) o.note = std::to_string(n) + " (group, coefficient) pairs";
    return o;
}

Outcome degree_tables() {
    Outcome o;
    for (const auto& [group, rows] : fixtures::generator_tables())
        for (const auto& [coeff, expected] : rows) {
            std::vector<std::string> got;
            for (const auto& l : primary_form_labels(parse_group(group), parse_coefficients(coeff)))
                got.push_back(paper_name(l) + ":" + std::to_string(l.degree));
            if (got != expected) o.fail(group + " over " + coeff);
        }
    return o;
}

Outcome dimension_formulas() {
    Outcome o;
    for (const auto& g : all_groups())
        for (const auto& c : {Coefficients::Q(), Coefficients::F(2), Coefficients::F(3), Coefficients::F(5),
                              Coefficients::F(7)}) {
            if (cohomology(g, c).algebra->total_dimension() != expected_dimension(g, c))
                o.fail(to_string(g) + " over " + to_string(c));
        }
    const auto dim = [](const GroupId& g, std::uint32_t p) {
        return cohomology(g, Coefficients::F(p)).algebra->total_dimension();
    };
    if (dim(E8(), 2) != 32768 || dim(E8(), 5) != 1280 || dim(F4(), 3) != 48) o.fail("named examples");
    return o;
}

Outcome differential_homology() {
    Outcome o;
    for (const auto& g : exceptional_groups())
        for (std::uint32_t p : {2u, 3u, 5u}) {
            const std::uint64_t want = std::uint64_t{1} << basic_data(g).n;
            const auto h = homology_dimension(delta_p(cohomology(g, Coefficients::F(p)))).total;
            const auto e = homology_dimension(partial_p(e3_page(g, Coefficients::F(p)))).total;
            if (h != want || e != want)
                o.fail(to_string(g) + " p=" + std::to_string(p) + ": " + std::to_string(h) + ", " +
                       std::to_string(e));
        }
    return o;
}

Outcome torsion_dimensions() {
    Outcome o;
    for (const auto& g : exceptional_groups())
        for (std::uint32_t p : {2u, 3u, 5u}) {
            const CohomologyRing r = cohomology(g, Coefficients::F(p));
            const auto im = image_subalgebra(r, delta_p(r)).total();
            if (im != expected_torsion(g, p)) o.fail(to_string(g) + " p=" + std::to_string(p));
        }
    const auto t = [](const GroupId& g, std::uint32_t p) {
        const CohomologyRing r = cohomology(g, Coefficients::F(p));
        return image_subalgebra(r, delta_p(r)).total();
    };
    if (t(E7(), 2) != 448 || t(F4(), 3) != 16 || t(E8(), 5) != 512) o.fail("named examples");
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::size_t products = 0;
    for (const auto& g : exceptional_groups())
        for (std::uint32_t p : {2u, 3u, 5u}) {
            if (torsion_index_set(g, p).empty()) continue;
            try {
                const TorsionRing t = torsion_ring(g, p);
                if (t.presented_dims != t.oracle_dims) o.fail(to_string(g) + " p=" + std::to_string(p) + " dims");
                products += t.products_checked;
            } catch (const std::exception& e) {
                o.fail(to_string(g) + " p=" + std::to_string(p) + ": " + e.what());
            }
        }
    if (o.ok) o.note = std::to_string(products) + " generator pairs";
    return o;
}

Outcome worked_products() {
    Outcome o;
    const CohomologyRing h = cohomology(E8(), Coefficients::F(2));
    const Element sq = c_class({1, 3}, h) * c_class({1, 3}, h);
    const Element mixed = c_class({1, 3}, h) * c_class({1, 5}, h);
    if (h.to_string(sq) != "x6^2*x18 + x10^3") o.fail("C{1,3}^2 oracle: " + h.to_string(sq));
    if (to_string(product_rule_c({1, 3}, {1, 3}, h), h) != "x6^2*x18 + x10^3") o.fail("C{1,3}^2 rule");
    if (evaluate(product_rule_c({1, 3}, {1, 3}, h), h) != sq) o.fail("C{1,3}^2 rule vs oracle");
    if (to_string(product_rule_c({1, 3}, {1, 5}, h), h) != "x10^2*x18 + x6*C{1,3,5}") o.fail("C{1,3}C{1,5} rule");
    if (evaluate(product_rule_c({1, 3}, {1, 5}, h), h) != mixed) o.fail("C{1,3}C{1,5} rule vs oracle");
    for (const auto& [group, squares] : fixtures::mod2_squares()) {
        const CohomologyRing r = cohomology(parse_group(group), Coefficients::F(2));
        const Algebra& A = *r.algebra;
        for (std::size_t i = 0; i < A.size(); ++i) {
            if (!A.odd(i)) continue;
            const std::string name = A.generators()[i].name;
            const auto it = squares.find(name);
            const std::string want = it == squares.end() ? "0" : it->second;
            const std::string got = r.to_string(A.generator(i) * A.generator(i));
            if (got != want) o.fail(group + " " + name + "^2 = " + got);
        }
    }
    return o;
}

Outcome duality() {
    Outcome o;
    std::uint64_t products = 0;
    for (const auto& g : exceptional_groups())
        for (const auto& c : fields()) {
            const DualityWitness w = duality_check(cohomology(g, c));
            if (!w.ok) o.fail(to_string(g) + " over " + to_string(c) + ": " + w.reason);
            products += w.products;
        }
    for (const auto& g : all_groups())
        for (const auto& c : {Coefficients::Q(), Coefficients::F(2), Coefficients::F(3), Coefficients::F(5),
                              Coefficients::F(7)}) {
            const PoincareSeries s = poincare_series(g, c);
            if (s.euler_characteristic() != 0) o.fail(to_string(g) + " Euler characteristic");
            if (!s.palindromic()) o.fail(to_string(g) + " over " + to_string(c) + " not palindromic");
        }
    if (o.ok) o.note = std::to_string(products) + " pairings";
    return o;
}

Outcome universal_coefficients() {
    Outcome o;
    for (const auto& g : exceptional_groups()) {
        try {
            homology_descriptors(g, basic_data(g).dim_g);
        } catch (const std::exception& e) {
            o.fail(e.what());
        }
    }
    std::ostringstream os;
    for (const auto& h : homology_descriptors(G2(), 14)) os << h.degree << ":" << to_string(h) << " ";
    if (os.str() != "0:Z 3:Z 6:Z/2 9:Z/2 11:Z 14:Z ") o.fail("G2 descriptors " + os.str());
    return o;
}

// Graded-commutativity sign for a product of homogeneous classes.
Rational koszul(int a, int b) { return (a % 2 && b % 2) ? Rational(-1) : Rational(1); }

Outcome property_suite() {
    Outcome o;
    std::uint64_t exhaustive = 0, random = 0, leibniz = 0;
    // exhaustive triples over every field for G2 and F4
    for (const auto& g : {G2(), F4()})
        for (const auto& c : {Coefficients::Q(), Coefficients::F(2), Coefficients::F(3), Coefficients::F(5),
                              Coefficients::F(7)}) {
            const CohomologyRing r = cohomology(g, c);
            const Algebra& A = *r.algebra;
            std::vector<Element> basis;
            for (const auto& [d, mons] : A.basis())
                for (const auto& m : mons) basis.push_back(A.monomial(m));
            for (const auto& a : basis)
                for (const auto& b : basis) {
                    const Element ab = a * b;
                    if (ab != koszul(a.degree(), b.degree()) * (b * a)) o.fail(to_string(g) + " commutativity");
                    for (const auto& x : basis) {
                        if (ab * x != a * (b * x)) o.fail(to_string(g) + " associativity");
                        ++exhaustive;
                    }
                }
        }
    // and over Z
    for (const auto& g : {G2(), F4()}) {
        const IntegralCohomology H(g);
        const auto basis = H.basis();
        for (const auto& a : basis)
            for (const auto& b : basis) {
                const IntegralElement ab = H.multiply(a, b);
                if (ab != H.scale(koszul(H.degree(a), H.degree(b)), H.multiply(b, a)))
                    o.fail(to_string(g) + " integral commutativity");
                for (const auto& x : basis) {
                    if (H.multiply(ab, x) != H.multiply(a, H.multiply(b, x))) o.fail(to_string(g) + " integral associativity");
                    ++exhaustive;
                }
            }
    }
    std::mt19937_64 rng(20240601);
    for (const auto& g : {E6(), E7(), E8()})
        for (const auto& c : fields()) {
            const CohomologyRing r = cohomology(g, c);
            const Algebra& A = *r.algebra;
            std::vector<Monomial> flat;
            for (const auto& [d, mons] : A.basis())
                for (const auto& m : mons) flat.push_back(m);
            std::uniform_int_distribution<std::size_t> pick(0, flat.size() - 1);
            for (int n = 0; n < 2500; ++n) {
                const Element a = A.monomial(flat[pick(rng)]) + A.monomial(flat[pick(rng)]);
                const Element b = A.monomial(flat[pick(rng)]);
                const Element x = A.monomial(flat[pick(rng)]);
                if ((a * b) * x != a * (b * x)) o.fail(to_string(g) + " random associativity");
                const Element m1 = A.monomial(flat[pick(rng)]);
                if (b * m1 != koszul(b.degree(), m1.degree()) * (m1 * b)) o.fail(to_string(g) + " random commutativity");
                ++random;
            }
        }
    // delta_p: Leibniz on random pairs and the matrix square
    for (const auto& g : exceptional_groups())
        for (std::uint32_t p : {2u, 3u, 5u}) {
            const CohomologyRing r = cohomology(g, Coefficients::F(p));
            if (!squares_to_zero(delta_p(r))) o.fail(to_string(g) + " delta^2 != 0");
            const Algebra& A = *r.algebra;
            std::vector<Monomial> flat;
            for (const auto& [d, mons] : A.basis())
                for (const auto& m : mons) flat.push_back(m);
            std::uniform_int_distribution<std::size_t> pick(0, flat.size() - 1);
            for (int n = 0; n < 100; ++n) {
                const Element a = A.monomial(flat[pick(rng)]);
                const Element b = A.monomial(flat[pick(rng)]);
                const Rational s = a.degree() % 2 ? Rational(-1) : Rational(1);
                if (delta(r, a * b) != delta(r, a) * b + s * (a * delta(r, b))) o.fail(to_string(g) + " Leibniz");
                ++leibniz;
            }
        }
    if (random < 10000) o.fail("fewer than 10^4 random triples per family");
    if (leibniz < 1000) o.fail("fewer than 10^3 Leibniz pairs");
    if (o.ok)
        o.note = std::to_string(exhaustive) + " exhaustive triples, " + std::to_string(random) +
                 " random triples, " + std::to_string(leibniz) + " Leibniz pairs";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"basic-data fidelity", [&] { return basic_data_fidelity(cli); }},
        {"dimension identities", dimension_identities},
        {"degree tables", degree_tables},
        {"dimension formulas", dimension_formulas},
        {"differential homology", differential_homology},
        {"torsion dimensions", torsion_dimensions},
        {"oracle equivalence", oracle_equivalence},
        {"worked products and mod-2 squares", worked_products},
        {"duality, Euler characteristic, palindromy", duality},
        {"universal-coefficient consistency", universal_coefficients},
        {"property suite", property_suite},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failures += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first
                  << (o.note.empty() ? "" : " (" + o.note + ")") << std::endl;
    }
    return failures ? 1 : 0;
}
