#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "basic_data.hpp"
#include "differentials.hpp"
#include "graded_algebra.hpp"
#include "rings.hpp"
#include "torsion.hpp"

namespace liecohom {

// An integral class: free part in the exterior algebra on the rho generators plus one
// component per torsion prime, each stored through its (injective) mod-p reduction.
struct IntegralElement {
    Element free;
    std::map<std::uint32_t, Element> torsion;

    bool is_zero() const {
        if (!free.is_zero()) return false;
        for (const auto& [p, e] : torsion)
            if (!e.is_zero()) return false;
        return true;
    }
    friend bool operator==(const IntegralElement& a, const IntegralElement& b) {
        if (!(a.free == b.free)) return false;
        for (const auto& [p, e] : a.torsion) {
            auto it = b.torsion.find(p);
            if (it == b.torsion.end() ? !e.is_zero() : !(e == it->second)) return false;
        }
        for (const auto& [p, e] : b.torsion)
            if (!a.torsion.count(p) && !e.is_zero()) return false;
        return true;
    }
};

struct HomologyGroupDescriptor {
    int degree = 0;
    std::uint64_t free_rank = 0;
    std::vector<std::pair<std::uint32_t, std::uint64_t>> torsion;  // (prime, multiplicity)
};

class IntegralCohomology {
public:
    explicit IntegralCohomology(const GroupId& g) : group_(g) {
        std::vector<GeneratorSpec> specs;
        for (const auto& l : primary_form_labels(g, Coefficients::Z())) {
            GeneratorSpec s;
            s.degree = l.degree;
            s.label = l;
            specs.push_back(s);
        }
        // Squares of rho classes are torsion; the free algebra never multiplies overlapping
        // monomials itself (see multiply).
        free_ = detail::assemble(g, Coefficients::Z(), std::move(specs), Flavor::Cohomology);
        const BasicData b = basic_data(g);
        for (int p : b.p_list)
            if (!std::count(primes_.begin(), primes_.end(), static_cast<std::uint32_t>(p)))
                primes_.push_back(static_cast<std::uint32_t>(p));
        std::sort(primes_.begin(), primes_.end());
        for (std::uint32_t p : primes_) mod_p(p);
        mod_p(2);
    }

    const GroupId& group() const { return group_; }
    const CohomologyRing& free_ring() const { return free_; }
    const std::vector<std::uint32_t>& torsion_primes() const { return primes_; }

    const CohomologyRing& mod_p(std::uint32_t p) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = rings_.find(p);
        if (it == rings_.end()) {
            it = rings_.emplace(p, std::make_shared<CohomologyRing>(cohomology(group_, Coefficients::F(p)))).first;
            std::vector<Element> images;
            for (const auto& s : free_.algebra->generators()) images.push_back(reduction_rp(*it->second, *s.label));
            reductions_[p] = std::move(images);
        }
        return *it->second;
    }

    // Torsion component tau_p as the image of the differential in H*(G;F_p).
    const ImageSubspace& torsion_space(std::uint32_t p) const {
        const CohomologyRing& r = mod_p(p);
        std::lock_guard<std::mutex> lock(mu_);
        auto it = images_.find(p);
        if (it == images_.end())
            it = images_.emplace(p, std::make_shared<ImageSubspace>(image_subalgebra(r, delta_p(r)))).first;
        return *it->second;
    }

    std::map<int, std::uint64_t> torsion_dimensions(std::uint32_t p) const {
        if (!std::count(primes_.begin(), primes_.end(), p)) return {};
        const CohomologyRing& r = mod_p(p);
        if (group_.exceptional()) return torsion_space(p).dimensions();
        return image_dimensions_factored(r);
    }

    IntegralElement zero() const { return {free_.algebra->zero(), {}}; }
    IntegralElement one() const { return {free_.algebra->one(), {}}; }
    IntegralElement rho(const std::string& name) const {
        auto i = free_.resolve(name);
        if (!i) throw UnknownLabel("no integral generator named '" + name + "'");
        return {free_.algebra->generator(*i), {}};
    }
    IntegralElement from_free(const Element& e) const { return {e, {}}; }
    IntegralElement from_torsion(std::uint32_t p, const Element& e) const {
        IntegralElement r = zero();
        if (!e.is_zero()) r.torsion.emplace(p, e);
        return r;
    }
    // The Chow class y_j, an element of tau_{p_j}.
    IntegralElement x(int j) const {
        const BasicData b = basic_data(group_);
        const std::uint32_t p = static_cast<std::uint32_t>(b.p_list.at(j - 1));
        return from_torsion(p, mod_p(p).x(j));
    }
    // E_I = beta_p(theta_I), whose reduction is C_I.
    IntegralElement e_class(const Subset& I) const {
        if (I.empty()) throw PreconditionViolation("E_I needs a nonempty index set");
        const BasicData b = basic_data(group_);
        const std::uint32_t p = static_cast<std::uint32_t>(b.p_list.at(I[0] - 1));
        return from_torsion(p, c_class(I, mod_p(p)));
    }
    // The free generator in degree deg(eta_t), the one multiplying E-classes in the H-relations.
    IntegralElement rho_for_eta(int t) const {
        const BasicData b = basic_data(group_);
        const int d = b.k_list.at(t - 1) * b.deg_y.at(t - 1) - 1;
        std::optional<std::size_t> hit;
        for (std::size_t i = 0; i < free_.algebra->size(); ++i)
            if (free_.algebra->generators()[i].degree == d) {
                if (hit) throw UnknownLabel("several integral generators in degree " + std::to_string(d));
                hit = i;
            }
        if (!hit) throw UnknownLabel("no integral generator in degree " + std::to_string(d));
        return {free_.algebra->generator(*hit), {}};
    }

    // Mod-p reduction of the free part.
    Element reduce_free(const Element& f, std::uint32_t p) const {
        const CohomologyRing& r = mod_p(p);
        std::vector<Element> images;
        {
            std::lock_guard<std::mutex> lock(mu_);
            images = reductions_.at(p);
        }
        Element out = r.algebra->zero();
        for (const auto& [m, c] : f.terms()) {
            Element term = r.algebra->one();
            for (std::size_t i = 0; i < m.size() && !term.is_zero(); ++i)
                if (m[i]) term = term * images[i];
            out += c * term;
        }
        return out;
    }
    Element reduce(const IntegralElement& a, std::uint32_t p) const {
        Element out = reduce_free(a.free, p);
        auto it = a.torsion.find(p);
        if (it != a.torsion.end()) out += it->second;
        return out;
    }

    IntegralElement add(const IntegralElement& a, const IntegralElement& b) const {
        IntegralElement r = a;
        r.free += b.free;
        for (const auto& [p, e] : b.torsion) {
            auto [it, _] = r.torsion.try_emplace(p, mod_p(p).algebra->zero());
            it->second += e;
        }
        prune(r);
        return r;
    }
    IntegralElement scale(const Rational& c, const IntegralElement& a) const {
        IntegralElement r{c * a.free, {}};
        for (const auto& [p, e] : a.torsion) r.torsion.emplace(p, c * e);
        prune(r);
        return r;
    }

    IntegralElement multiply(const IntegralElement& a, const IntegralElement& b) const {
        IntegralElement r = zero();
        const auto& F = *free_.algebra;
        // free x free: disjoint monomials stay free, overlapping ones are 2-torsion
        Element overlap = mod_p(2).algebra->zero();
        for (const auto& [ma, ca] : a.free.terms())
            for (const auto& [mb, cb] : b.free.terms()) {
                bool shared = false;
                for (std::size_t i = 0; i < ma.size(); ++i) shared = shared || (ma[i] && mb[i]);
                if (!shared) {
                    for (const auto& [m, c] : F.multiply_monomials(ma, mb)) r.free.add_term(m, ca * cb * c);
                } else {
                    overlap += reduce_free(F.monomial(ma, ca), 2) * reduce_free(F.monomial(mb, cb), 2);
                }
            }
        if (!overlap.is_zero()) {
            if (!std::count(primes_.begin(), primes_.end(), 2u))
                throw ConsistencyFailure("square of a free class is nonzero although there is no 2-torsion");
            r.torsion.emplace(2, overlap);
        }
        for (std::uint32_t p : primes_) {
            const auto ta = a.torsion.find(p);
            const auto tb = b.torsion.find(p);
            Element acc = mod_p(p).algebra->zero();
            if (ta != a.torsion.end()) acc += ta->second * reduce_free(b.free, p);
            if (tb != b.torsion.end()) acc += reduce_free(a.free, p) * tb->second;
            if (ta != a.torsion.end() && tb != b.torsion.end()) acc += ta->second * tb->second;
            if (acc.is_zero()) continue;
            auto [it, _] = r.torsion.try_emplace(p, mod_p(p).algebra->zero());
            it->second += acc;
        }
        prune(r);
        return r;
    }

    int degree(const IntegralElement& a) const {
        int d = a.free.is_zero() ? -1 : a.free.degree();
        for (const auto& [p, e] : a.torsion) {
            int e_deg = e.degree();
            if (e_deg < 0) continue;
            if (d >= 0 && e_deg != d) throw Error("integral element is not homogeneous");
            d = e_deg;
        }
        return d;
    }

    // Additive basis: free monomials followed by the echelon bases of each tau_p.
    std::vector<IntegralElement> basis() const {
        std::vector<IntegralElement> out;
        for (const auto& [d, mons] : free_.algebra->basis())
            for (const auto& m : mons) out.push_back(from_free(free_.algebra->monomial(m)));
        for (std::uint32_t p : primes_)
            for (const auto& e : torsion_space(p).basis()) out.push_back(from_torsion(p, e));
        return out;
    }

    std::string to_string(const IntegralElement& a) const {
        std::string out;
        if (!a.free.is_zero()) out = free_.to_string(a.free);
        for (const auto& [p, e] : a.torsion) {
            if (e.is_zero()) continue;
            out += (out.empty() ? "" : " + ") + std::string("tau") + std::to_string(p) + "(" +
                   mod_p(p).to_string(e) + ")";
        }
        return out.empty() ? "0" : out;
    }

private:
    void prune(IntegralElement& r) const {
        for (auto it = r.torsion.begin(); it != r.torsion.end();) it = it->second.is_zero() ? r.torsion.erase(it) : std::next(it);
    }

    GroupId group_;
    CohomologyRing free_;
    std::vector<std::uint32_t> primes_;
    mutable std::mutex mu_;
    mutable std::map<std::uint32_t, std::shared_ptr<CohomologyRing>> rings_;
    mutable std::map<std::uint32_t, std::vector<Element>> reductions_;
    mutable std::map<std::uint32_t, std::shared_ptr<ImageSubspace>> images_;
};

inline IntegralCohomology integral_cohomology(const GroupId& g) { return IntegralCohomology(g); }

// The mixed relation rho_{deg eta_t} * E_I, rewritten by the three-case rule.
inline IntegralElement h_relation(int t, const Subset& I, const IntegralCohomology& H) {
    const GroupId& g = H.group();
    const BasicData b = basic_data(g);
    if (t < 1 || t > b.m) throw IndexNotInGp(std::to_string(t) + " is not a special-class index");
    const std::uint32_t p = static_cast<std::uint32_t>(b.p_list[t - 1]);
    const CohomologyRing& ring = H.mod_p(p);
    detail::require_in_gp(ring, {t});
    detail::require_in_gp(ring, I);
    if (I.empty()) throw PreconditionViolation("E_I needs a nonempty index set");
    const auto& A = *ring.algebra;
    const Element lead = A.power(ring.x(t), b.k_list[t - 1] - 1);
    const bool inside = contains_index(I, t);
    if (!inside) {
        Subset J = I;
        J.push_back(t);
        std::sort(J.begin(), J.end());
        return H.from_torsion(p, lead * c_class(J, ring));
    }
    if (p != 2 || I.size() == 1) return H.zero();
    return H.from_torsion(p, lead * detail::theta_square(ring, t) * c_class(detail::without(I, t), ring));
}

inline IntegralElement h_relation(int t, const Subset& I, const GroupId& g) {
    return h_relation(t, I, IntegralCohomology(g));
}

inline std::vector<HomologyGroupDescriptor> homology_descriptors(const IntegralCohomology& H, int up_to_degree) {
    const GroupId& g = H.group();
    const auto free_dims = H.free_ring().algebra->graded_dimension();
    std::map<std::uint32_t, std::map<int, std::uint64_t>> tors;
    for (std::uint32_t p : H.torsion_primes()) tors[p] = H.torsion_dimensions(p);
    auto rank = [&](int d) -> std::uint64_t {
        auto it = free_dims.find(d);
        return it == free_dims.end() ? 0 : it->second.rank;
    };
    auto t_of = [&](std::uint32_t p, int d) -> std::uint64_t {
        auto it = tors.find(p);
        if (it == tors.end()) return 0;
        auto jt = it->second.find(d);
        return jt == it->second.end() ? 0 : jt->second;
    };
    const auto q_dims = cohomology(g, Coefficients::Q()).algebra->graded_dimension();
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const auto fp = cohomology(g, Coefficients::F(p)).algebra->graded_dimension();
        const int top = basic_data(g).dim_g;
        for (int d = 0; d <= top + 1; ++d) {
            auto it = fp.find(d);
            std::uint64_t dim = it == fp.end() ? 0 : it->second.rank;
            if (rank(d) + t_of(p, d) + t_of(p, d + 1) != dim)
                throw ConsistencyFailure("universal coefficients fail for " + to_string(g) + " at degree " +
                                         std::to_string(d) + " over F" + std::to_string(p));
        }
    }
    for (int d = 0; d <= basic_data(g).dim_g + 1; ++d) {
        auto it = q_dims.find(d);
        if ((it == q_dims.end() ? 0 : it->second.rank) != rank(d))
            throw ConsistencyFailure("rational Betti number disagrees with the free rank in degree " +
                                     std::to_string(d));
    }
    std::vector<HomologyGroupDescriptor> out;
    for (int d = 0; d <= up_to_degree; ++d) {
        HomologyGroupDescriptor h{d, rank(d), {}};
        for (std::uint32_t p : H.torsion_primes())
            if (std::uint64_t t = t_of(p, d)) h.torsion.emplace_back(p, t);
        if (h.free_rank || !h.torsion.empty()) out.push_back(h);
    }
    return out;
}

inline std::vector<HomologyGroupDescriptor> homology_descriptors(const GroupId& g, int up_to_degree) {
    return homology_descriptors(IntegralCohomology(g), up_to_degree);
}

inline std::string to_string(const HomologyGroupDescriptor& h) {
    std::vector<std::string> parts;
    if (h.free_rank == 1) parts.push_back("Z");
    else if (h.free_rank > 1) parts.push_back("Z^" + std::to_string(h.free_rank));
    for (auto [p, c] : h.torsion)
        parts.push_back(c == 1 ? "Z/" + std::to_string(p) : "(Z/" + std::to_string(p) + ")^" + std::to_string(c));
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "+" : "") + parts[i];
    return s.empty() ? "0" : s;
}

}  // namespace liecohom
