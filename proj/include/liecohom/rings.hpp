#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "basic_data.hpp"
#include "graded_algebra.hpp"

namespace liecohom {

enum class Flavor { Chow, E3Page, Cohomology };

struct CohomologyRing {
    GroupId group;
    Coefficients coeff;
    AlgebraPtr algebra;
    std::map<std::string, GeneratorLabel> provenance;
    Flavor flavor = Flavor::Cohomology;

    std::optional<std::size_t> find(GeneratorLabel::Kind kind, int index) const {
        for (std::size_t i = 0; i < algebra->size(); ++i) {
            const auto& l = algebra->generators()[i].label;
            if (l && l->kind == kind && l->index == index) return i;
        }
        return std::nullopt;
    }
    std::size_t index(GeneratorLabel::Kind kind, int index) const {
        if (auto i = find(kind, index)) return *i;
        throw UnknownLabel(paper_name({kind, index, 0}) + " is not a generator of this ring");
    }
    Element gen(GeneratorLabel::Kind kind, int idx) const { return algebra->generator(index(kind, idx)); }
    Element x(int j) const { return gen(GeneratorLabel::Kind::ChowX, j); }
    Element theta(int t) const { return gen(GeneratorLabel::Kind::Theta, t); }
    Element xi(int i) const { return gen(GeneratorLabel::Kind::Xi, i); }
    Element eta(int j) const { return gen(GeneratorLabel::Kind::Eta, j); }

    // Resolves degree names ("z23", "x6") and paper names ("eta_2", "theta_1", "y_3").
    std::optional<std::size_t> resolve(const std::string& name) const {
        if (auto i = algebra->find(name)) return i;
        for (std::size_t i = 0; i < algebra->size(); ++i) {
            const auto& l = algebra->generators()[i].label;
            if (l && paper_name(*l) == name) return i;
        }
        return std::nullopt;
    }

    std::string to_string(const Element& e) const { return algebra->to_string(e); }
};

// Nonzero mod-2 squares of odd generators for the exceptional groups, keyed by the
// odd degree; each value is one monomial given as (degree of x, exponent) pairs.
inline std::map<int, std::vector<std::pair<int, int>>> mod2_odd_squares(const GroupId& g) {
    std::map<int, std::vector<std::pair<int, int>>> s;
    if (!g.exceptional()) return s;
    s[3] = {{6, 1}};
    if (g.family == Family::E7 || g.family == Family::E8) {
        s[5] = {{10, 1}};
        s[9] = {{18, 1}};
    }
    if (g.family == Family::E8) {
        s[15] = {{30, 1}};
        s[23] = {{6, 6}, {10, 1}};
    }
    return s;
}

namespace detail {

inline std::string odd_prefix(const Coefficients& c) { return c.kind == Coefficients::Kind::Integers ? "rho" : "z"; }

// Gives each generator a degree name; colliding degrees get a _k suffix in order.
inline void assign_names(std::vector<GeneratorSpec>& specs, const std::string& odd_prefix) {
    std::map<std::string, int> count;
    auto base = [&](const GeneratorSpec& s) {
        return (s.odd() ? odd_prefix : std::string("x")) + std::to_string(s.degree);
    };
    for (const auto& s : specs) ++count[base(s)];
    std::map<std::string, int> seen;
    for (auto& s : specs) {
        std::string b = base(s);
        s.name = count[b] > 1 ? b + "_" + std::to_string(++seen[b]) : b;
    }
}

inline std::vector<GeneratorSpec> chow_specs(const GroupId& g, const Coefficients& c) {
    const BasicData b = basic_data(g);
    std::vector<int> idx;
    if (c.kind == Coefficients::Kind::Integers)
        for (int j = 1; j <= b.m; ++j) idx.push_back(j);
    else if (c.is_prime_field())
        idx = torsion_index_set(g, c.p);
    std::vector<GeneratorSpec> out;
    for (int j : idx) {
        GeneratorSpec s;
        s.degree = b.deg_y[j - 1];
        s.nilpotency = b.k_list[j - 1];
        s.additive_order = c.kind == Coefficients::Kind::Integers ? static_cast<std::uint32_t>(b.p_list[j - 1]) : 0;
        s.label = chow_label(b, j);
        out.push_back(s);
    }
    return out;
}

inline CohomologyRing assemble(const GroupId& g, const Coefficients& c, std::vector<GeneratorSpec> specs,
                               Flavor flavor) {
    assign_names(specs, odd_prefix(c));
    CohomologyRing r;
    r.group = g;
    r.coeff = c;
    r.flavor = flavor;
    for (const auto& s : specs)
        if (s.label) r.provenance[s.name] = *s.label;
    r.algebra = Algebra::build(std::move(specs), c);
    return r;
}

inline std::vector<GeneratorSpec> odd_specs(const GroupId& g, const Coefficients& c) {
    std::vector<GeneratorSpec> out;
    for (const auto& l : primary_form_labels(g, c)) {
        GeneratorSpec s;
        s.degree = l.degree;
        s.label = l;
        out.push_back(s);
    }
    return out;
}

}  // namespace detail

inline CohomologyRing chow_ring(const GroupId& g, const Coefficients& c) {
    return detail::assemble(g, c, detail::chow_specs(g, c), Flavor::Chow);
}

// A ⊗ Λ(O): every odd square zero. Over Z only the free exterior part Λ_Z(O) is modelled.
inline CohomologyRing e3_page(const GroupId& g, const Coefficients& c) {
    std::vector<GeneratorSpec> specs;
    if (c.is_field()) specs = detail::chow_specs(g, c);
    for (auto& s : detail::odd_specs(g, c)) specs.push_back(s);
    return detail::assemble(g, c, std::move(specs), Flavor::E3Page);
}

inline CohomologyRing cohomology(const GroupId& g, const Coefficients& c) {
    if (!c.is_field())
        throw UnsupportedCoefficient("integral cohomology is provided by integral_cohomology()");
    std::vector<GeneratorSpec> specs = detail::chow_specs(g, c);
    auto odd = detail::odd_specs(g, c);
    if (c.p == 2) {
        const auto table = mod2_odd_squares(g);
        std::map<int, std::uint64_t> chow_dims;
        if (!g.exceptional()) {
            for (const auto& [d, e] : chow_ring(g, c).algebra->graded_dimension()) chow_dims[d] = e.rank;
        }
        for (auto& s : odd) {
            if (g.exceptional()) {
                auto it = table.find(s.degree);
                if (it == table.end()) continue;
                NamedTerm t;
                for (auto [xd, e] : it->second) t.factors.emplace_back("x" + std::to_string(xd), e);
                s.square = SquareRule::known({t});
            } else if (chow_dims.count(2 * s.degree)) {
                // The square lies in the Chow part, which is nonzero here; no data available.
                s.square = SquareRule::unknown();
            }
        }
    }
    for (auto& s : odd) specs.push_back(s);
    return detail::assemble(g, c, std::move(specs), Flavor::Cohomology);
}

}  // namespace liecohom
