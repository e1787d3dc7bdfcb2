#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "basic_data.hpp"
#include "differentials.hpp"
#include "linalg.hpp"
#include "rings.hpp"

namespace liecohom {

using Subset = std::vector<int>;  // increasing 1-based indices into G(p)

inline std::string subset_string(const Subset& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

struct TorsionClass {
    enum class Kind { ThetaProduct, C, D, R };
    Kind kind = Kind::C;
    Subset subset;
    std::uint32_t p = 2;
    int degree = 0;
};

// Degrees follow from the basic data alone.
inline int theta_product_degree(const GroupId& g, const Subset& I) {
    const BasicData b = basic_data(g);
    int d = 0;
    for (int t : I) d += b.deg_y[t - 1] - 1;
    return d;
}
inline int c_class_degree(const GroupId& g, const Subset& I) { return theta_product_degree(g, I) + 1; }
inline int d_class_degree(const GroupId& g, const Subset& I) {
    const BasicData b = basic_data(g);
    int d = c_class_degree(g, I);
    for (int t : I) d += (b.k_list[t - 1] - 1) * b.deg_y[t - 1];
    return d;
}
inline int r_class_degree(const GroupId& g, const Subset& K) {
    // each summand y_t * C_{K minus t} sits one above C_K
    return c_class_degree(g, K) + 1;
}

inline TorsionClass torsion_class(const GroupId& g, TorsionClass::Kind kind, const Subset& s, std::uint32_t p) {
    TorsionClass c{kind, s, p, 0};
    switch (kind) {
        case TorsionClass::Kind::ThetaProduct: c.degree = theta_product_degree(g, s); break;
        case TorsionClass::Kind::C: c.degree = c_class_degree(g, s); break;
        case TorsionClass::Kind::D: c.degree = d_class_degree(g, s); break;
        case TorsionClass::Kind::R: c.degree = r_class_degree(g, s); break;
    }
    return c;
}

namespace detail {

inline void require_in_gp(const CohomologyRing& ring, const Subset& I) {
    if (!ring.coeff.is_prime_field()) throw UnsupportedCoefficient("torsion classes live in H*(G;F_p)");
    const auto Gp = torsion_index_set(ring.group, ring.coeff.p);
    for (int t : I)
        if (!contains_index(Gp, t))
            throw IndexNotInGp(std::to_string(t) + " is not in G(" + std::to_string(ring.coeff.p) + ") for " +
                               to_string(ring.group));
    if (!std::is_sorted(I.begin(), I.end()) || std::adjacent_find(I.begin(), I.end()) != I.end())
        throw PreconditionViolation("index sets must be strictly increasing");
}

inline Subset without(const Subset& I, int t) {
    Subset r;
    for (int s : I)
        if (s != t) r.push_back(s);
    return r;
}

inline Subset symmetric_difference(const Subset& a, const Subset& b) {
    Subset r;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline Subset intersection(const Subset& a, const Subset& b) {
    Subset r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline std::vector<Subset> subsets_of(const Subset& base, std::size_t min_size) {
    std::vector<Subset> out;
    const std::size_t n = base.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Subset s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(base[i]);
        if (s.size() >= min_size) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

}  // namespace detail

inline Element theta_product(const CohomologyRing& ring, const Subset& I) {
    detail::require_in_gp(ring, I);
    Element e = ring.algebra->one();
    for (int t : I) e = e * ring.theta(t);
    return e;
}

// C_I = delta(theta_I), computed in the ambient ring.
inline Element c_class(const Subset& I, const CohomologyRing& ring) {
    if (I.empty()) throw PreconditionViolation("C_I needs a nonempty index set");
    return delta(ring, theta_product(ring, I));
}

inline Element d_class(const Subset& J, const CohomologyRing& ring) {
    if (J.size() < 2) throw PreconditionViolation("D_J is a relation only for |J| >= 2");
    detail::require_in_gp(ring, J);
    const BasicData b = basic_data(ring.group);
    Element e = c_class(J, ring);
    for (int t : J) e = ring.algebra->power(ring.x(t), b.k_list[t - 1] - 1) * e;
    return e;
}

inline Element r_class(const Subset& K, const CohomologyRing& ring) {
    if (K.size() < 3) throw PreconditionViolation("R_K is a relation only for |K| >= 3");
    detail::require_in_gp(ring, K);
    Element e = ring.algebra->zero();
    for (int t : K) e += ring.x(t) * c_class(detail::without(K, t), ring);
    return e;
}

// A combination sum_K (chow coefficient) * C_K. The empty key holds the pure Chow part;
// singleton classes are folded in through C_{t} = -y_t.
struct CExpansion {
    AlgebraPtr algebra;
    std::map<Subset, Element> terms;

    bool is_zero() const {
        for (const auto& [k, e] : terms)
            if (!e.is_zero()) return false;
        return true;
    }
};

namespace detail {

inline void add_c_term(CExpansion& x, const CohomologyRing& ring, Element coeff, const Subset& K) {
    if (K.empty() || coeff.is_zero()) return;
    Subset key = K;
    if (K.size() == 1) {
        coeff = coeff * (-ring.x(K[0]));
        key.clear();
    }
    auto [it, _] = x.terms.try_emplace(key, ring.algebra->zero());
    it->second += coeff;
    if (it->second.is_zero()) x.terms.erase(it);
}

// Mod-2 square of theta_s from the exceptional table, as an element of the ring.
inline Element theta_square(const CohomologyRing& ring, int s) {
    const BasicData b = basic_data(ring.group);
    const auto table = mod2_odd_squares(ring.group);
    auto it = table.find(b.deg_y[s - 1] - 1);
    if (it == table.end()) return ring.algebra->zero();
    Element e = ring.algebra->one();
    for (auto [xd, ex] : it->second) e = e * ring.algebra->power(ring.algebra->generator("x" + std::to_string(xd)), ex);
    return e;
}

}  // namespace detail

inline Element evaluate(const CExpansion& x, const CohomologyRing& ring) {
    Element e = ring.algebra->zero();
    for (const auto& [K, c] : x.terms) e += K.empty() ? c : c * c_class(K, ring);
    return e;
}

inline std::string to_string(const CExpansion& x, const CohomologyRing& ring) {
    std::string out;
    for (const auto& [K, c] : x.terms) {
        if (c.is_zero()) continue;
        std::string piece;
        if (K.empty()) piece = ring.to_string(c);
        else {
            std::string cs = ring.to_string(c);
            bool simple = c.size() == 1 && cs.find(' ') == std::string::npos && cs[0] != '-';
            piece = cs == "1" ? "" : (simple ? cs + "*" : "(" + cs + ")*");
            piece += "C" + subset_string(K);
        }
        out += (out.empty() ? "" : " + ") + piece;
    }
    return out.empty() ? "0" : out;
}

// Right-hand side of the product rule for C_I * C_J, expressed in C-classes.
inline CExpansion product_rule_c(const Subset& I, const Subset& J, const CohomologyRing& ring) {
    detail::require_in_gp(ring, I);
    detail::require_in_gp(ring, J);
    if (I.empty() || J.empty()) throw PreconditionViolation("C-classes need nonempty index sets");
    CExpansion x{ring.algebra, {}};
    if (ring.coeff.p != 2) {
        if (I.size() == 1) {
            detail::add_c_term(x, ring, -ring.x(I[0]), J);
            return x;
        }
        if (J.size() == 1) {
            detail::add_c_term(x, ring, -ring.x(J[0]), I);
            return x;
        }
        if (ring.group.family == Family::E8 && ring.coeff.p == 3 && I == Subset{2, 6} && J == I) return x;
        throw UnsupportedPrime("the C-class product rule is established for p = 2 only");
    }
    for (int t : I) {
        const Subset It = detail::without(I, t);
        Element coeff = ring.x(t);
        for (int s : detail::intersection(It, J)) coeff = coeff * detail::theta_square(ring, s);
        detail::add_c_term(x, ring, coeff, detail::symmetric_difference(It, J));
    }
    return x;
}

struct TorsionRing {
    GroupId group;
    std::uint32_t p = 2;
    bool additive_only = false;
    std::vector<std::string> generators;  // "name (degree)"
    std::vector<std::string> relations;
    std::string presentation;
    std::map<int, std::uint64_t> presented_dims;
    std::map<int, std::uint64_t> oracle_dims;
    std::uint64_t total = 0;
    std::size_t products_checked = 0;
    std::size_t relations_checked = 0;
};

namespace detail {

using Series = std::map<int, std::uint64_t>;

inline Series series_product(const Series& a, const Series& b) {
    Series r;
    for (auto [da, ca] : a)
        for (auto [db, cb] : b) r[da + db] += ca * cb;
    for (auto it = r.begin(); it != r.end();) it = it->second ? std::next(it) : r.erase(it);
    return r;
}

// Dimensions of the module A^+ + sum_{|I|>=2} A*C_I modulo the A-span of D_J and R_K,
// computed by linear algebra over F_p.
inline Series presented_module_dims(const GroupId& g, std::uint32_t p) {
    const BasicData b = basic_data(g);
    const auto Gp = torsion_index_set(g, p);
    const CohomologyRing chow = chow_ring(g, Coefficients::F(p));
    const auto& A = *chow.algebra;
    const auto components = subsets_of(Gp, 2);
    const FpField f{p};

    // coordinates: (component index, A-monomial); component -1 is the A^+ summand
    std::map<int, std::vector<std::pair<int, Monomial>>> cells;
    std::map<int, std::map<std::pair<int, std::uint64_t>, std::size_t>> where;
    auto add_cell = [&](int deg, int comp, const Monomial& m) {
        auto& v = cells[deg];
        where[deg][{comp, A.code(m)}] = v.size();
        v.emplace_back(comp, m);
    };
    for (const auto& [deg, mons] : A.basis())
        for (const auto& m : mons)
            if (deg > 0) add_cell(deg, -1, m);
    for (std::size_t c = 0; c < components.size(); ++c) {
        const int shift = c_class_degree(g, components[c]);
        for (const auto& [deg, mons] : A.basis())
            for (const auto& m : mons) add_cell(deg + shift, static_cast<int>(c), m);
    }
    auto comp_index = [&](const Subset& s) {
        return static_cast<int>(std::find(components.begin(), components.end(), s) - components.begin());
    };
    auto y = [&](int t) { return chow.x(t); };

    std::map<int, EchelonSpace<FpField>> rel;
    auto add_relation = [&](int deg, const std::vector<std::pair<int, Element>>& parts) {
        auto cit = cells.find(deg);
        if (cit == cells.end()) return;
        auto it = rel.try_emplace(deg, f, cit->second.size()).first;
        std::vector<std::uint32_t> v(cit->second.size(), 0);
        for (const auto& [comp, e] : parts)
            for (const auto& [m, c] : e.terms()) {
                auto pos = where[deg].at({comp, A.code(m)});
                v[pos] = f.add(v[pos], f.from(c));
            }
        it->second.insert(std::move(v));
    };
    for (const auto& J : components) {
        Element lead = A.one();
        for (int t : J) lead = lead * A.power(y(t), b.k_list[t - 1] - 1);
        for (const auto& [adeg, mons] : A.basis())
            for (const auto& a : mons) {
                Element v = A.monomial(a) * lead;
                if (v.is_zero()) continue;
                add_relation(adeg + d_class_degree(g, J), {{comp_index(J), v}});
            }
    }
    for (const auto& K : subsets_of(Gp, 3)) {
        for (const auto& [adeg, mons] : A.basis())
            for (const auto& a : mons) {
                std::vector<std::pair<int, Element>> parts;
                for (int t : K) parts.emplace_back(comp_index(without(K, t)), A.monomial(a) * y(t));
                add_relation(adeg + r_class_degree(g, K), parts);
            }
    }
    Series out;
    for (const auto& [deg, v] : cells) {
        std::uint64_t r = rel.count(deg) ? rel.at(deg).rank() : 0;
        if (v.size() > r) out[deg] = v.size() - r;
    }
    return out;
}

}  // namespace detail

inline TorsionRing torsion_ring(const GroupId& g, std::uint32_t p) {
    if (!is_prime(p)) throw UnsupportedPrime(std::to_string(p) + " is not prime");
    TorsionRing tr;
    tr.group = g;
    tr.p = p;
    tr.additive_only = !g.exceptional();
    const auto Gp = torsion_index_set(g, p);
    const CohomologyRing ring = cohomology(g, Coefficients::F(p));
    const auto& A = *ring.algebra;

    // Generators outside the differential's support tensor on unchanged.
    std::vector<std::size_t> passive;
    detail::Series passive_series{{0, 1}};
    for (std::size_t i = 0; i < A.size(); ++i) {
        const auto& l = A.generators()[i].label;
        if (l && (l->kind == GeneratorLabel::Kind::Xi || l->kind == GeneratorLabel::Kind::Eta)) {
            passive.push_back(i);
            passive_series = detail::series_product(passive_series, {{0, 1}, {A.generators()[i].degree, 1}});
        }
    }

    if (Gp.empty()) {
        tr.presentation = "0";
        CohomologyRing support = differential_support(ring);
        ImageSubspace im(support, detail::assemble_derivation(support));
        if (im.total() != 0) throw OracleMismatch("nonzero image although G(p) is empty");
        return tr;
    }

    tr.presented_dims = detail::series_product(detail::presented_module_dims(g, p), passive_series);
    std::optional<ImageSubspace> image;
    if (tr.additive_only) {
        CohomologyRing support = differential_support(ring);
        ImageSubspace im(support, detail::assemble_derivation(support));
        tr.oracle_dims = detail::series_product(im.dimensions(), passive_series);
    } else {
        image.emplace(image_subalgebra(ring, delta_p(ring)));
        tr.oracle_dims = image->dimensions();
    }
    if (tr.presented_dims != tr.oracle_dims)
        throw OracleMismatch("presented torsion dimensions differ from Im delta for " + to_string(g) + ", p = " +
                             std::to_string(p));
    for (auto [d, c] : tr.oracle_dims) tr.total += c;

    // Text view and generator/relation lists.
    const BasicData b = basic_data(g);
    const std::string field = "F" + std::to_string(p);
    std::vector<std::string> xs;
    for (int t : Gp) {
        std::string xn = A.generators()[ring.index(GeneratorLabel::Kind::ChowX, t)].name;
        xs.push_back(xn);
        tr.generators.push_back(xn + " (" + std::to_string(b.deg_y[t - 1]) + ")");
        tr.relations.push_back(xn + "^" + std::to_string(b.k_list[t - 1]) + " = 0");
    }
    const auto cs = detail::subsets_of(Gp, 2);
    for (const auto& I : cs) tr.generators.push_back("C" + subset_string(I) + " (" + std::to_string(c_class_degree(g, I)) + ")");
    std::vector<std::string> delta_part, lambda_part, unknown_part;
    for (std::size_t i : passive) {
        const auto& s = A.generators()[i];
        tr.generators.push_back(s.name + " (" + std::to_string(s.degree) + ")");
        if (s.square.kind == SquareRule::Kind::Unknown) {
            unknown_part.push_back(s.name);
            tr.relations.push_back(s.name + "^2 = unknown");
            continue;
        }
        Element sq = A.generator(i) * A.generator(i);
        if (sq.is_zero()) lambda_part.push_back(s.name);
        else {
            delta_part.push_back(s.name);
            tr.relations.push_back(s.name + "^2 = " + ring.to_string(sq));
        }
    }
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
        return s;
    };
    std::ostringstream pres;
    if (cs.empty()) {
        pres << field << "[" << join(xs) << "]+/<";
        for (std::size_t i = 0; i < Gp.size(); ++i)
            pres << (i ? "," : "") << xs[i] << "^" << b.k_list[Gp[i] - 1];
        pres << ">";
    } else {
        pres << field << "[" << join(xs) << "]{1,C_I}+ / <y^k, D_J, R_K, S_IJ>";
    }
    if (!delta_part.empty()) pres << " ⊗ Δ(" << join(delta_part) << ")";
    if (!lambda_part.empty()) pres << " ⊗ Λ(" << join(lambda_part) << ")";
    if (!unknown_part.empty()) pres << " ⊗ [squares undetermined](" << join(unknown_part) << ")";
    tr.presentation = pres.str();

    if (tr.additive_only) {
        for (const auto& J : cs) tr.relations.push_back("D" + subset_string(J) + " = 0");
        for (const auto& K : detail::subsets_of(Gp, 3)) tr.relations.push_back("R" + subset_string(K) + " = 0");
        return tr;
    }

    for (const auto& J : cs) {
        Element dj = d_class(J, ring);
        if (!dj.is_zero()) throw OracleMismatch("D" + subset_string(J) + " does not vanish");
        Element lead = A.one();
        for (int t : J) lead = lead * A.power(ring.x(t), b.k_list[t - 1] - 1);
        tr.relations.push_back(ring.to_string(lead) + "*C" + subset_string(J) + " = 0");
        ++tr.relations_checked;
    }
    for (const auto& K : detail::subsets_of(Gp, 3)) {
        if (!r_class(K, ring).is_zero()) throw OracleMismatch("R" + subset_string(K) + " does not vanish");
        std::string s;
        for (int t : K)
            s += (s.empty() ? "" : " + ") + A.generators()[ring.index(GeneratorLabel::Kind::ChowX, t)].name + "*C" +
                 subset_string(detail::without(K, t));
        tr.relations.push_back(s + " = 0");
        ++tr.relations_checked;
    }

    // Generator-pair products: presented rule evaluated in the ambient ring versus the
    // ambient product of the images.
    struct Gen {
        enum Kind { X, C, Z } kind;
        Subset subset;
        std::size_t index = 0;
        Element image;
    };
    std::vector<Gen> gens;
    for (int t : Gp) gens.push_back({Gen::X, {t}, 0, ring.x(t)});
    for (const auto& I : cs) {
        Element c = c_class(I, ring);
        if (!image->contains(c)) throw OracleMismatch("C" + subset_string(I) + " is not in Im delta");
        gens.push_back({Gen::C, I, 0, c});
    }
    for (std::size_t i : passive) gens.push_back({Gen::Z, {}, i, A.generator(i)});
    const auto table = mod2_odd_squares(g);
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t c = a; c < gens.size(); ++c) {
            const Gen& u = gens[a];
            const Gen& v = gens[c];
            Element ambient = u.image * v.image;
            Element rule = A.zero();
            if (u.kind == Gen::C && v.kind == Gen::C) {
                CExpansion x = product_rule_c(u.subset, v.subset, ring);
                rule = evaluate(x, ring);
                if (u.subset.size() >= 2 && v.subset.size() >= 2)
                    tr.relations.push_back("C" + subset_string(u.subset) + "*C" + subset_string(v.subset) + " = " +
                                           to_string(x, ring));
            } else if (u.kind == Gen::Z && v.kind == Gen::Z && u.index == v.index) {
                auto it = p == 2 ? table.find(A.generators()[u.index].degree) : table.end();
                if (it != table.end()) {
                    rule = A.one();
                    for (auto [xd, ex] : it->second) rule = rule * A.power(A.generator("x" + std::to_string(xd)), ex);
                }
            } else {
                // module and tensor structure: the presented product is the formal product
                rule = u.image * v.image;
            }
            if (rule != ambient)
                throw OracleMismatch("presented product differs from the ambient product for " + to_string(g) +
                                     ", p = " + std::to_string(p));
            if (u.kind != Gen::Z && v.kind != Gen::Z && !image->contains(ambient))
                throw OracleMismatch("product of torsion generators left Im delta");
            ++tr.products_checked;
        }
    return tr;
}

}  // namespace liecohom
