#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "basic_data.hpp"
#include "graded_algebra.hpp"
#include "linalg.hpp"
#include "rings.hpp"

namespace liecohom {

// Value of the differential on a generator: theta_t -> -y_t, everything else -> 0.
inline std::optional<Element> delta_on_generator(const CohomologyRing& ring, std::size_t i) {
    const auto& l = ring.algebra->generators()[i].label;
    if (!l || l->kind != GeneratorLabel::Kind::Theta) return std::nullopt;
    return -ring.x(l->index);
}

// The derivation on one normal-form monomial (graded Leibniz rule).
inline Element delta_monomial(const CohomologyRing& ring, const Monomial& m) {
    const auto& A = *ring.algebra;
    Element out = A.zero();
    int odd_before = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (A.odd(i)) {
            if (auto v = delta_on_generator(ring, i)) {
                Monomial rest = m;
                rest[i] = 0;
                Element term = A.multiply(A.monomial(rest), *v);
                out += (odd_before % 2 ? Rational(-1) : Rational(1)) * term;
            }
            ++odd_before;
        }
    }
    return out;
}

inline Element delta(const CohomologyRing& ring, const Element& e) {
    Element out = ring.algebra->zero();
    for (const auto& [m, c] : e.terms()) out += c * delta_monomial(ring, m);
    return out;
}

struct GradedLinearMap {
    AlgebraPtr source;
    AlgebraPtr target;
    int shift = 1;
    std::uint32_t p = 0;  // 0: rational zero map
    // source degree -> images of the basis monomials of that degree, in target-basis coordinates
    std::map<int, std::vector<SparseVector<FpField>>> columns;

    std::size_t rank(int source_degree) const {
        auto it = columns.find(source_degree);
        if (it == columns.end() || p == 0) return 0;
        return rank_of_columns(FpField{p}, target->basis(source_degree + shift).size(), it->second);
    }
};

namespace detail {

inline GradedLinearMap assemble_derivation(const CohomologyRing& ring) {
    if (!ring.coeff.is_prime_field()) throw UnsupportedCoefficient("the differential is defined over F_p only");
    GradedLinearMap d;
    d.source = d.target = ring.algebra;
    d.shift = 1;
    d.p = ring.coeff.p;
    const FpField f{d.p};
    for (const auto& [deg, mons] : ring.algebra->basis()) {
        auto& cols = d.columns[deg];
        cols.reserve(mons.size());
        for (const auto& m : mons) {
            SparseVector<FpField> col;
            const Element image = delta_monomial(ring, m);
            for (const auto& [tm, c] : image.terms())
                col.emplace_back(*ring.algebra->basis_position(tm), f.from(c));
            std::sort(col.begin(), col.end());
            cols.push_back(std::move(col));
        }
    }
    return d;
}

}  // namespace detail

inline GradedLinearMap delta_p(const CohomologyRing& ring) {
    if (ring.flavor == Flavor::Chow) throw PreconditionViolation("delta_p needs a Cohomology or E3 ring");
    return detail::assemble_derivation(ring);
}

inline GradedLinearMap partial_p(const CohomologyRing& e3) {
    if (e3.flavor != Flavor::E3Page) throw PreconditionViolation("partial_p acts on the E3 model");
    return detail::assemble_derivation(e3);
}

inline GradedLinearMap zero_map(const CohomologyRing& ring) {
    GradedLinearMap d;
    d.source = d.target = ring.algebra;
    d.p = ring.coeff.is_prime_field() ? ring.coeff.p : 0;
    for (const auto& [deg, mons] : ring.algebra->basis()) d.columns[deg].assign(mons.size(), {});
    return d;
}

// Checks that the map squares to zero, column by column.
inline bool squares_to_zero(const GradedLinearMap& d) {
    if (d.p == 0) return true;
    const FpField f{d.p};
    for (const auto& [deg, cols] : d.columns) {
        auto next = d.columns.find(deg + d.shift);
        for (const auto& col : cols) {
            if (col.empty()) continue;
            if (next == d.columns.end()) continue;
            std::map<std::size_t, std::uint32_t> acc;
            for (const auto& [r, v] : col)
                for (const auto& [r2, v2] : next->second[r]) acc[r2] = f.add(acc[r2], f.mul(v, v2));
            for (const auto& [r, v] : acc)
                if (v) return false;
        }
    }
    return true;
}

struct HomologyDimensions {
    std::uint64_t total = 0;
    std::map<int, std::uint64_t> per_degree;
};

inline HomologyDimensions homology_dimension(const GradedLinearMap& d) {
    if (!squares_to_zero(d)) throw NotADifferential("the map does not square to zero");
    HomologyDimensions h;
    std::map<int, std::size_t> ranks;
    for (const auto& [deg, cols] : d.columns) ranks[deg] = d.rank(deg);
    for (const auto& [deg, mons] : d.source->basis()) {
        std::size_t incoming = ranks.count(deg - d.shift) ? ranks[deg - d.shift] : 0;
        std::uint64_t v = mons.size() - ranks[deg] - incoming;
        if (v) h.per_degree[deg] = v;
        h.total += v;
    }
    return h;
}

// Sub-ring on the Chow and theta generators, where the differential lives.
inline CohomologyRing differential_support(const CohomologyRing& ring) {
    std::vector<GeneratorSpec> specs;
    for (const auto& s : ring.algebra->generators())
        if (s.label && (s.label->kind == GeneratorLabel::Kind::ChowX || s.label->kind == GeneratorLabel::Kind::Theta))
            specs.push_back(s);
    CohomologyRing r;
    r.group = ring.group;
    r.coeff = ring.coeff;
    r.flavor = ring.flavor;
    for (const auto& s : specs) r.provenance[s.name] = *s.label;
    r.algebra = Algebra::build(std::move(specs), ring.coeff);
    return r;
}

// Homology of the differential via the Kunneth splitting into its support and the
// generators it kills; avoids enumerating the full ring.
inline std::uint64_t homology_total_factored(const CohomologyRing& ring) {
    CohomologyRing support = differential_support(ring);
    std::uint64_t h = homology_dimension(detail::assemble_derivation(support)).total;
    std::size_t passive = ring.algebra->size() - support.algebra->size();
    return h << passive;
}

std::map<int, std::uint64_t> image_dimensions_factored(const CohomologyRing& ring);

// Im(delta) per degree with an echelon basis and the induced product.
class ImageSubspace {
public:
    ImageSubspace(CohomologyRing ring, const GradedLinearMap& d) : ring_(std::move(ring)), f_{d.p} {
        for (const auto& [deg, cols] : d.columns) {
            const int t = deg + d.shift;
            std::size_t dim = ring_.algebra->basis(t).size();
            auto it = spaces_.try_emplace(t, f_, dim).first;
            for (const auto& c : cols)
                if (!c.empty()) it->second.insert_sparse(c);
        }
    }

    const CohomologyRing& ring() const { return ring_; }
    std::uint32_t p() const { return f_.p; }

    std::uint64_t dimension(int degree) const {
        auto it = spaces_.find(degree);
        return it == spaces_.end() ? 0 : it->second.rank();
    }
    std::map<int, std::uint64_t> dimensions() const {
        std::map<int, std::uint64_t> out;
        for (const auto& [d, s] : spaces_)
            if (s.rank()) out[d] = s.rank();
        return out;
    }
    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto& [d, s] : spaces_) t += s.rank();
        return t;
    }

    std::vector<Element> basis(int degree) const {
        std::vector<Element> out;
        auto it = spaces_.find(degree);
        if (it == spaces_.end()) return out;
        const auto& mons = ring_.algebra->basis(degree);
        for (const auto& row : it->second.rows()) {
            Element e = ring_.algebra->zero();
            for (const auto& [c, v] : row) e.add_term(mons[c], Rational(v));
            out.push_back(std::move(e));
        }
        return out;
    }
    std::vector<Element> basis() const {
        std::vector<Element> out;
        for (const auto& [d, s] : spaces_)
            for (auto& e : basis(d)) out.push_back(std::move(e));
        return out;
    }

    // Coordinates of a homogeneous element in basis(degree), if it lies in the image.
    std::optional<std::vector<std::uint32_t>> coordinates(const Element& e) const {
        if (e.is_zero()) return std::vector<std::uint32_t>{};
        const int deg = e.degree();
        auto it = spaces_.find(deg);
        if (it == spaces_.end()) return std::nullopt;
        std::vector<std::uint32_t> v(it->second.dim(), 0);
        for (const auto& [m, c] : e.terms()) v[*ring_.algebra->basis_position(m)] = f_.from(c);
        return it->second.coordinates(std::move(v));
    }
    bool contains(const Element& e) const {
        if (e.is_zero()) return true;
        std::map<int, Element> parts;
        for (const auto& [m, c] : e.terms()) {
            auto [it, _] = parts.try_emplace(ring_.algebra->degree(m), ring_.algebra->zero());
            it->second.add_term(m, c);
        }
        for (const auto& [d, part] : parts)
            if (!coordinates(part)) return false;
        return true;
    }

    // Product of two image elements, checked to land back in the image.
    Element multiply(const Element& a, const Element& b) const {
        Element r = a * b;
        if (!contains(r)) throw OracleMismatch("product left the image of the differential");
        return r;
    }

private:
    CohomologyRing ring_;
    FpField f_;
    std::map<int, EchelonSpace<FpField>> spaces_;
};

inline ImageSubspace image_subalgebra(const CohomologyRing& ring, const GradedLinearMap& d) {
    if (ring.flavor != Flavor::Cohomology) throw PreconditionViolation("image_subalgebra expects the cohomology ring");
    return ImageSubspace(ring, d);
}

inline bool contains_index(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// Mod-p reduction of an integral generator, as an element of H*(G;F_p).
inline Element reduction_rp(const CohomologyRing& target, const GeneratorLabel& label) {
    if (!target.coeff.is_prime_field()) throw UnsupportedCoefficient("reduction target must be H*(G;F_p)");
    const GroupId& g = target.group;
    const std::uint32_t p = target.coeff.p;
    const BasicData b = basic_data(g);
    const auto Gp = torsion_index_set(g, p);
    const auto& A = *target.algebra;
    using K = GeneratorLabel::Kind;
    switch (label.kind) {
        case K::Xi:
            if (label.index < 1 || label.index > b.k) break;
            return target.xi(label.index);
        case K::ChowX:
            if (label.index < 1 || label.index > b.m) break;
            return contains_index(Gp, label.index) ? target.x(label.index) : A.zero();
        case K::Eta: {
            const int j = label.index;
            if (!contains_index(complement_set(g, Coefficients::Z()), j)) break;
            if (g.family == Family::E8 && j == 6 && p == 2) return target.x(7) * target.theta(7);
            if (g.family == Family::E8 && j == 6 && p == 5)
                return Rational(2) * (A.power(target.x(4), 4) * target.theta(4));
            if (contains_index(Gp, j))
                return -(A.power(target.x(j), b.k_list[j - 1] - 1) * target.theta(j));
            if (contains_index(complement_set(g, target.coeff), j))
                return Rational(b.p_list[j - 1]) * target.eta(j);
            break;
        }
        case K::Theta: break;
    }
    throw UnknownLabel(paper_name(label) + " is not an integral generator of " + to_string(g));
}

// Bockstein of an F_p generator, as an element of the integral Chow ring.
inline Element bockstein_on_generators(const CohomologyRing& source, const CohomologyRing& integral_chow,
                                       const GeneratorLabel& label) {
    if (!source.find(label.kind, label.index))
        throw UnknownLabel(paper_name(label) + " is not a generator of the mod-p ring");
    if (label.kind == GeneratorLabel::Kind::Theta) return -integral_chow.x(label.index);
    return integral_chow.algebra->zero();
}

inline Element bockstein_on_generators(const CohomologyRing& source, const GeneratorLabel& label) {
    return bockstein_on_generators(source, chow_ring(source.group, Coefficients::Z()), label);
}

// Per-degree dimensions of Im(delta) from the support ring tensored with the passive
// generators; exact and cheap for rings too large to enumerate.
inline std::map<int, std::uint64_t> image_dimensions_factored(const CohomologyRing& ring) {
    CohomologyRing support = differential_support(ring);
    ImageSubspace im(support, detail::assemble_derivation(support));
    std::map<int, std::uint64_t> series = im.dimensions();
    const auto& A = *ring.algebra;
    for (std::size_t i = 0; i < A.size(); ++i) {
        const auto& l = A.generators()[i].label;
        if (!l || l->kind == GeneratorLabel::Kind::ChowX || l->kind == GeneratorLabel::Kind::Theta) continue;
        std::map<int, std::uint64_t> next;
        for (auto [d, c] : series) {
            next[d] += c;
            next[d + A.generators()[i].degree] += c;
        }
        series = std::move(next);
    }
    return series;
}

}  // namespace liecohom
