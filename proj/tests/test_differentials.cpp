#include <gtest/gtest.h>

#include <random>

#include "liecohom/differentials.hpp"

using namespace liecohom;

namespace {

// 2^(n-1) (prod_{t in G(p)} k_t - 1), or 0 when G(p) is empty.
std::uint64_t image_total_formula(const GroupId& g, std::uint32_t p) {
    const BasicData b = basic_data(g);
    std::uint64_t prod = 1;
    bool any = false;
    for (int j = 0; j < b.m; ++j)
        if (static_cast<std::uint32_t>(b.p_list[j]) == p) {
            prod *= b.k_list[j];
            any = true;
        }
    return any ? (std::uint64_t{1} << (b.n - 1)) * (prod - 1) : 0;
}

std::vector<Element> basis_elements(const Algebra& A) {
    std::vector<Element> out;
    for (const auto& [d, mons] : A.basis())
        for (const auto& m : mons) out.push_back(A.monomial(m));
    return out;
}

}  // namespace

TEST(Differentials, GeneratorValues) {
    const CohomologyRing e7 = cohomology(E7(), Coefficients::F(2));
    EXPECT_EQ(e7.to_string(delta(e7, e7.algebra->generator("z5"))), "x6");
    EXPECT_TRUE(delta(e7, e7.algebra->generator("z3")).is_zero());
    EXPECT_TRUE(delta(e7, e7.algebra->generator("x6")).is_zero());

    const CohomologyRing e8 = cohomology(E8(), Coefficients::F(2));
    const Element prod = e8.algebra->generator("z5") * e8.algebra->generator("z9");
    EXPECT_EQ(e8.to_string(delta(e8, prod)), "x6*z9 + x10*z5");

    const CohomologyRing f4 = cohomology(F4(), Coefficients::F(3));
    EXPECT_EQ(f4.to_string(delta(f4, f4.algebra->generator("z7"))), "2*x8");
}

TEST(Differentials, SquaresToZeroAndHomologyIsTwoToTheRank) {
    for (const auto& g : exceptional_groups())
        for (std::uint32_t p : {2u, 3u, 5u}) {
            SCOPED_TRACE(to_string(g) + " p=" + std::to_string(p));
            const std::uint64_t expect = std::uint64_t{1} << basic_data(g).n;
            const CohomologyRing h = cohomology(g, Coefficients::F(p));
            const GradedLinearMap d = delta_p(h);
            EXPECT_TRUE(squares_to_zero(d));
            EXPECT_EQ(homology_dimension(d).total, expect);
            const GradedLinearMap dd = partial_p(e3_page(g, Coefficients::F(p)));
            EXPECT_TRUE(squares_to_zero(dd));
            EXPECT_EQ(homology_dimension(dd).total, expect);
        }
}

TEST(Differentials, NamedHomologyExamples) {
    EXPECT_EQ(homology_dimension(delta_p(cohomology(E7(), Coefficients::F(2)))).total, 128u);
    EXPECT_EQ(homology_dimension(partial_p(e3_page(E8(), Coefficients::F(3)))).total, 256u);
    const CohomologyRing q = cohomology(G2(), Coefficients::Q());
    EXPECT_EQ(homology_dimension(zero_map(q)).total, q.algebra->total_dimension());
}

TEST(Differentials, NotADifferentialIsRejected) {
    GeneratorSpec a;
    a.name = "a";
    a.degree = 1;
    GeneratorSpec x;
    x.name = "x";
    x.degree = 2;
    x.nilpotency = 2;
    auto A = Algebra::build({a, x}, Coefficients::F(2));
    GradedLinearMap d;
    d.source = d.target = A;
    d.p = 2;
    d.columns[0] = {{{0, 1}}};  // 1 -> a
    d.columns[1] = {{{0, 1}}};  // a -> x
    d.columns[2] = {{}};
    d.columns[3] = {{}};
    EXPECT_FALSE(squares_to_zero(d));
    EXPECT_THROW(homology_dimension(d), NotADifferential);
}

TEST(Differentials, FlavorPreconditions) {
    EXPECT_THROW(delta_p(chow_ring(E8(), Coefficients::F(2))), PreconditionViolation);
    EXPECT_THROW(partial_p(cohomology(E8(), Coefficients::F(2))), PreconditionViolation);
    EXPECT_THROW(delta_p(cohomology(E8(), Coefficients::Q())), UnsupportedCoefficient);
}

TEST(Differentials, LeibnizOnRandomPairs) {
    std::mt19937 rng(99);
    for (const auto& g : exceptional_groups())
        for (std::uint32_t p : {2u, 3u, 5u}) {
            const CohomologyRing h = cohomology(g, Coefficients::F(p));
            if (torsion_index_set(g, p).empty()) continue;
            const auto B = basis_elements(*h.algebra);
            std::uniform_int_distribution<std::size_t> pick(0, B.size() - 1);
            for (int i = 0; i < 1000; ++i) {
                const Element &a = B[pick(rng)], &b = B[pick(rng)];
                const Rational s = a.degree() % 2 ? Rational(-1) : Rational(1);
                ASSERT_EQ(delta(h, a * b), delta(h, a) * b + s * (a * delta(h, b)))
                    << to_string(g) << " " << h.to_string(a) << " , " << h.to_string(b);
                ASSERT_TRUE(delta(h, delta(h, a)).is_zero());
            }
        }
}

TEST(Differentials, ImageDimensionsMatchClosedForm) {
    for (const auto& g : exceptional_groups())
        for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
            const CohomologyRing h = cohomology(g, Coefficients::F(p));
            const ImageSubspace im = image_subalgebra(h, delta_p(h));
            EXPECT_EQ(im.total(), image_total_formula(g, p)) << to_string(g) << " p=" << p;
            EXPECT_EQ(image_dimensions_factored(h), im.dimensions()) << to_string(g) << " p=" << p;
        }
    const CohomologyRing e7 = cohomology(E7(), Coefficients::F(2));
    EXPECT_EQ(image_subalgebra(e7, delta_p(e7)).total(), 448u);
    const CohomologyRing f4 = cohomology(F4(), Coefficients::F(3));
    EXPECT_EQ(image_subalgebra(f4, delta_p(f4)).total(), 16u);
    const CohomologyRing g2 = cohomology(G2(), Coefficients::F(3));
    EXPECT_EQ(image_subalgebra(g2, delta_p(g2)).total(), 0u);
}

TEST(Differentials, ImageIsClosedUnderProducts) {
    std::mt19937 rng(5);
    for (const auto& g : {F4(), E6(), E7()}) {
        const CohomologyRing h = cohomology(g, Coefficients::F(2));
        const ImageSubspace im = image_subalgebra(h, delta_p(h));
        const auto B = im.basis();
        std::uniform_int_distribution<std::size_t> pick(0, B.size() - 1);
        for (int i = 0; i < 300; ++i) {
            const Element r = im.multiply(B[pick(rng)], B[pick(rng)]);
            EXPECT_TRUE(im.contains(r));
        }
        EXPECT_FALSE(im.contains(h.algebra->one()));
    }
}

TEST(Differentials, SpinHomologyAtTwoUpToRankBound) {
    const int bound = classical_rank_bound();
    for (const auto& g : classical_groups(bound)) {
        if (g.family != Family::SpinEven && g.family != Family::SpinOdd) continue;
        const CohomologyRing h = cohomology(g, Coefficients::F(2));
        const std::uint64_t expect = std::uint64_t{1} << basic_data(g).n;
        EXPECT_EQ(homology_total_factored(h), expect) << to_string(g);
        std::uint64_t im = 0;
        for (auto [d, c] : image_dimensions_factored(h)) im += c;
        EXPECT_EQ(im, image_total_formula(g, 2)) << to_string(g);
        if (h.algebra->total_dimension() <= 4096) {
            EXPECT_EQ(homology_dimension(delta_p(h)).total, expect);
        }
    }
}

TEST(Differentials, Reductions) {
    const BasicData e8 = basic_data(E8());
    const CohomologyRing f2 = cohomology(E8(), Coefficients::F(2));
    EXPECT_EQ(f2.to_string(reduction_rp(f2, eta_label(e8, 6))), "x30*z29");
    EXPECT_EQ(f2.to_string(reduction_rp(f2, xi_label(e8, 2))), "z15");
    EXPECT_EQ(f2.to_string(reduction_rp(f2, eta_label(e8, 2))), "z23");  // p_2 = 3
    EXPECT_EQ(f2.to_string(reduction_rp(f2, eta_label(e8, 1))), "x6^7*z5");
    const CohomologyRing f3 = cohomology(E8(), Coefficients::F(3));
    EXPECT_EQ(f3.to_string(reduction_rp(f3, eta_label(e8, 6))), "2*x20^2*z19");
    EXPECT_EQ(f3.to_string(reduction_rp(f3, eta_label(e8, 1))), "2*z47");
    const CohomologyRing f5 = cohomology(E8(), Coefficients::F(5));
    EXPECT_EQ(f5.to_string(reduction_rp(f5, eta_label(e8, 6))), "2*x12^4*z11");
    const CohomologyRing f7 = cohomology(E8(), Coefficients::F(7));
    EXPECT_EQ(f7.to_string(reduction_rp(f7, eta_label(e8, 6))), "3*z59");

    const CohomologyRing f4 = cohomology(F4(), Coefficients::F(3));
    EXPECT_EQ(f4.to_string(reduction_rp(f4, eta_label(basic_data(F4()), 2))), "2*x8^2*z7");
    EXPECT_EQ(f4.to_string(reduction_rp(f4, xi_label(basic_data(F4()), 1))), "z3");
    EXPECT_THROW(reduction_rp(f4, theta_label(basic_data(F4()), 2)), UnknownLabel);
}

TEST(Differentials, Bocksteins) {
    const BasicData e8 = basic_data(E8());
    const CohomologyRing z = chow_ring(E8(), Coefficients::Z());
    const CohomologyRing f2 = cohomology(E8(), Coefficients::F(2));
    EXPECT_EQ(bockstein_on_generators(f2, z, theta_label(e8, 1)), -z.x(1));
    const CohomologyRing f5 = cohomology(E8(), Coefficients::F(5));
    EXPECT_EQ(bockstein_on_generators(f5, z, theta_label(e8, 4)), -z.x(4));
    EXPECT_EQ(z.to_string(bockstein_on_generators(f5, z, theta_label(e8, 4))), "4*x12");
    const CohomologyRing f4 = cohomology(F4(), Coefficients::F(3));
    EXPECT_TRUE(bockstein_on_generators(f4, xi_label(basic_data(F4()), 1)).is_zero());
    EXPECT_THROW(bockstein_on_generators(f4, theta_label(basic_data(F4()), 1)), UnknownLabel);
}

TEST(Differentials, BocksteinThenReductionIsTheDifferential) {
    // r_p(beta_p(u)) = delta_p(u) on generators
    for (const auto& g : exceptional_groups())
        for (std::uint32_t p : {2u, 3u, 5u}) {
            const CohomologyRing h = cohomology(g, Coefficients::F(p));
            const CohomologyRing z = chow_ring(g, Coefficients::Z());
            for (std::size_t i = 0; i < h.algebra->size(); ++i) {
                const auto& l = *h.algebra->generators()[i].label;
                if (l.kind == GeneratorLabel::Kind::ChowX) continue;
                const Element b = bockstein_on_generators(h, z, l);
                Element reduced = h.algebra->zero();
                for (const auto& [m, c] : b.terms())
                    for (std::size_t j = 0; j < m.size(); ++j)
                        if (m[j]) reduced += c * reduction_rp(h, *z.algebra->generators()[j].label);
                EXPECT_EQ(reduced, delta(h, h.algebra->generator(i))) << to_string(g) << " " << paper_name(l);
            }
        }
}
