#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "basic_data.hpp"
#include "errors.hpp"
#include "scalar.hpp"

namespace liecohom {

// Exponent vector over the generator list of an algebra.
struct Monomial {
    boost::container::small_vector<std::uint8_t, 24> exps;

    Monomial() = default;
    explicit Monomial(std::size_t n) : exps(n, 0) {}

    std::size_t size() const { return exps.size(); }
    std::uint8_t operator[](std::size_t i) const { return exps[i]; }
    std::uint8_t& operator[](std::size_t i) { return exps[i]; }
    bool is_one() const {
        return std::all_of(exps.begin(), exps.end(), [](std::uint8_t e) { return e == 0; });
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return std::lexicographical_compare(a.exps.begin(), a.exps.end(), b.exps.begin(), b.exps.end());
    }
};

// A term of a square value written against generator names, resolved at build time.
struct NamedTerm {
    Rational coeff{1};
    std::vector<std::pair<std::string, int>> factors;
};

struct SquareRule {
    enum class Kind { Zero, Known, Unknown };
    Kind kind = Kind::Zero;
    std::vector<NamedTerm> value;  // used when kind == Known

    static SquareRule zero() { return {}; }
    static SquareRule unknown() { return {Kind::Unknown, {}}; }
    static SquareRule known(std::vector<NamedTerm> v) { return {Kind::Known, std::move(v)}; }
};

struct GeneratorSpec {
    std::string name;
    int degree = 0;
    std::uint32_t additive_order = 0;  // 0 means infinite order
    int nilpotency = 0;                // even generators: x^nilpotency = 0
    SquareRule square;                 // odd generators only
    std::optional<GeneratorLabel> label;

    bool odd() const { return degree % 2 != 0; }
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

struct DimensionEntry {
    std::uint64_t rank = 0;                          // dimension over a field, free rank over Z
    std::map<std::uint32_t, std::uint64_t> torsion;  // prime -> number of Z/p summands
};

class Element {
public:
    using Terms = std::map<Monomial, Rational>;

    Element() = default;
    explicit Element(AlgebraPtr a) : alg_(std::move(a)) {}

    const AlgebraPtr& algebra() const { return alg_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Adds c*m, normalising the coefficient by the algebra's rules.
    void add_term(const Monomial& m, const Rational& c);

    Element& operator+=(const Element& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(const Element& a) {
        Element r(a.alg_);
        for (const auto& [m, c] : a.terms_) r.add_term(m, -c);
        return r;
    }
    friend Element operator*(const Rational& s, const Element& a) {
        Element r(a.alg_);
        for (const auto& [m, c] : a.terms_) r.add_term(m, s * c);
        return r;
    }
    friend Element operator*(const Element& a, const Element& b);
    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

    // Degree of a homogeneous element; -1 for zero, throws when inhomogeneous.
    int degree() const;

private:
    AlgebraPtr alg_;
    Terms terms_;
};

class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    static AlgebraPtr build(std::vector<GeneratorSpec> specs, Coefficients coeff) {
        auto a = std::shared_ptr<Algebra>(new Algebra(std::move(specs), coeff));
        a->resolve();
        return a;
    }

    const Coefficients& coefficients() const { return coeff_; }
    const std::vector<GeneratorSpec>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool odd(std::size_t i) const { return odd_[i]; }
    int bound(std::size_t i) const { return bound_[i]; }
    int generator_degree(std::size_t i) const { return gens_[i].degree; }

    std::optional<std::size_t> find(const std::string& name) const {
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name == name) return i;
        return std::nullopt;
    }
    std::size_t index_of(const std::string& name) const {
        if (auto i = find(name)) return *i;
        throw UnknownLabel("no generator named '" + name + "'");
    }

    int degree(const Monomial& m) const {
        int d = 0;
        for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * gens_[i].degree;
        return d;
    }
    int top_degree() const {
        int d = 0;
        for (std::size_t i = 0; i < gens_.size(); ++i) d += (bound_[i] - 1) * gens_[i].degree;
        return d;
    }
    Monomial top_monomial() const {
        Monomial m(gens_.size());
        for (std::size_t i = 0; i < gens_.size(); ++i) m[i] = static_cast<std::uint8_t>(bound_[i] - 1);
        return m;
    }
    bool is_normal(const Monomial& m) const {
        if (m.size() != gens_.size()) return false;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] >= bound_[i]) return false;
        return true;
    }

    // Additive order of a monomial over Z: 0 free, p torsion, 1 when mixed primes kill it.
    std::uint32_t monomial_order(const Monomial& m) const {
        std::uint32_t ord = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i] || !gens_[i].additive_order) continue;
            if (ord == 0) ord = gens_[i].additive_order;
            else if (ord != gens_[i].additive_order) return 1;
        }
        return ord;
    }

    // Canonical coefficient of c*m; zero means the term vanishes.
    Rational normalize(const Monomial& m, const Rational& c) const {
        switch (coeff_.kind) {
            case Coefficients::Kind::Rationals: return c;
            case Coefficients::Kind::PrimeField: return Rational(rational_mod(c, coeff_.p));
            case Coefficients::Kind::Integers: {
                if (boost::multiprecision::denominator(c) != 1)
                    throw Error("non-integral coefficient in an integral algebra");
                std::uint32_t ord = monomial_order(m);
                if (ord == 1) return Rational(0);
                if (ord == 0) return c;
                return Rational(mod_reduce(boost::multiprecision::numerator(c), ord));
            }
        }
        return c;
    }

    Element zero() const { return Element(shared_from_this()); }
    Element one() const { return monomial(Monomial(gens_.size())); }
    Element monomial(const Monomial& m, const Rational& c = Rational(1)) const {
        Element e(shared_from_this());
        if (!is_normal(m)) throw Error("monomial is not in normal form");
        e.add_term(m, c);
        return e;
    }
    Element generator(std::size_t i) const {
        Monomial m(gens_.size());
        m[i] = 1;
        return monomial(m);
    }
    Element generator(const std::string& name) const { return generator(index_of(name)); }

    // Product of two normal-form monomials as a list of (monomial, coefficient) terms,
    // coefficients not yet normalised.
    std::vector<std::pair<Monomial, Rational>> multiply_monomials(const Monomial& a, const Monomial& b) const {
        std::vector<std::pair<Monomial, Rational>> out;
        const std::size_t n = gens_.size();
        // Koszul sign: every odd factor of b passes the odd factors of a with larger index.
        int swaps = 0;
        int odd_in_a_above = 0;
        for (std::size_t i = n; i-- > 0;) {
            if (!odd_[i]) continue;
            if (b[i]) swaps += odd_in_a_above;
            if (a[i]) ++odd_in_a_above;
        }
        Monomial base(n);
        boost::container::small_vector<std::size_t, 8> squared;
        for (std::size_t i = 0; i < n; ++i) {
            int e = a[i] + b[i];
            if (odd_[i]) {
                if (e == 2) {
                    const auto& rule = gens_[i].square;
                    if (rule.kind == SquareRule::Kind::Zero) return out;
                    if (rule.kind == SquareRule::Kind::Unknown) throw UnknownSquare(gens_[i].name);
                    squared.push_back(i);
                    e = 0;
                }
            } else if (e >= bound_[i]) {
                return out;
            }
            base[i] = static_cast<std::uint8_t>(e);
        }
        out.emplace_back(std::move(base), Rational(swaps % 2 ? -1 : 1));
        for (std::size_t i : squared) {
            std::vector<std::pair<Monomial, Rational>> next;
            for (const auto& [m, c] : out)
                for (const auto& [sm, sc] : square_terms_[i]) {
                    Monomial r = m;
                    if (multiply_even_into(r, sm)) next.emplace_back(std::move(r), c * sc);
                }
            out = std::move(next);
            if (out.empty()) break;
        }
        return out;
    }

    Element multiply(const Element& x, const Element& y) const {
        Element r(shared_from_this());
        for (const auto& [ma, ca] : x.terms())
            for (const auto& [mb, cb] : y.terms())
                for (const auto& [m, c] : multiply_monomials(ma, mb)) r.add_term(m, ca * cb * c);
        return r;
    }

    Element power(const Element& x, int e) const {
        Element r = one();
        for (int i = 0; i < e; ++i) r = multiply(r, x);
        return r;
    }

    // Graded dimension from the generating function; no enumeration needed.
    std::map<int, DimensionEntry> graded_dimension() const {
        std::call_once(dims_once_, [this] { compute_dimensions(); });
        return dims_;
    }
    // Total over all degrees (free ranks plus torsion summands over Z).
    std::uint64_t total_dimension() const {
        std::uint64_t t = 0;
        for (const auto& [d, e] : graded_dimension()) {
            t += e.rank;
            for (const auto& [p, c] : e.torsion) t += c;
        }
        return t;
    }
    std::uint64_t dimension(int degree) const {
        auto dims = graded_dimension();
        auto it = dims.find(degree);
        return it == dims.end() ? 0 : it->second.rank;
    }

    // Enumerated monomial basis; throws TooLarge above the limit.
    static constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 22;

    const std::map<int, std::vector<Monomial>>& basis() const {
        std::call_once(basis_once_, [this] { enumerate_basis(); });
        return basis_;
    }
    const std::vector<Monomial>& basis(int degree) const {
        static const std::vector<Monomial> empty;
        const auto& b = basis();
        auto it = b.find(degree);
        return it == b.end() ? empty : it->second;
    }
    // Position of a normal-form monomial inside basis(degree(m)).
    std::optional<std::size_t> basis_position(const Monomial& m) const {
        basis();
        auto it = position_.find(code(m));
        if (it == position_.end()) return std::nullopt;
        return it->second;
    }

    // Literal monotonicity test for u = t_1^{b_1} ... t_h^{b_h} (generator index, exponent).
    bool is_monotone(const std::vector<std::pair<std::size_t, int>>& u) const {
        int r = 0;
        for (auto [i, b] : u) r += b * gens_[i].degree;
        if (r != top_degree() || dimension(r) != 1) return false;
        auto power_product = [&](const std::vector<int>& c) {
            Element e = one();
            for (std::size_t k = 0; k < u.size() && !e.is_zero(); ++k)
                e = multiply(e, power(generator(u[k].first), c[k]));
            return e;
        };
        std::vector<int> target;
        for (auto [i, b] : u) target.push_back(b);
        if (power_product(target).is_zero()) return false;
        bool ok = true;
        std::vector<int> c(u.size(), 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
            if (!ok) return;
            if (k == u.size()) {
                if (left == 0 && c != target && !power_product(c).is_zero()) ok = false;
                return;
            }
            const int d = gens_[u[k].first].degree;
            for (int e = 0; e * d <= left; ++e) {
                c[k] = e;
                rec(k + 1, left - e * d);
            }
            c[k] = 0;
        };
        rec(0, r);
        return ok;
    }
    bool is_monotone(const Monomial& u) const {
        std::vector<std::pair<std::size_t, int>> dec;
        for (std::size_t i = 0; i < u.size(); ++i)
            if (u[i]) dec.emplace_back(i, u[i]);
        return is_monotone(dec);
    }

    std::string monomial_string(const Monomial& m) const {
        std::string s;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (!s.empty()) s += '*';
            s += gens_[i].name;
            if (m[i] > 1) s += '^' + std::to_string(m[i]);
        }
        return s.empty() ? "1" : s;
    }

    std::string to_string(const Element& e) const {
        if (e.is_zero()) return "0";
        std::vector<std::pair<Monomial, Rational>> terms(e.terms().begin(), e.terms().end());
        std::sort(terms.begin(), terms.end(), [this](const auto& x, const auto& y) {
            int dx = degree(x.first), dy = degree(y.first);
            if (dx != dy) return dx < dy;
            return y.first < x.first;
        });
        std::string out;
        for (const auto& [m, c] : terms) {
            Rational mag = c < 0 ? Rational(-c) : c;
            if (out.empty()) out += c < 0 ? "-" : "";
            else out += c < 0 ? " - " : " + ";
            bool unit = mag == 1;
            if (!unit) out += mag.str();
            if (!m.is_one()) out += (unit ? "" : "*") + monomial_string(m);
            else if (unit) out += "1";
        }
        return out;
    }

    std::uint64_t code(const Monomial& m) const {
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < m.size(); ++i) c += m[i] * stride_[i];
        return c;
    }

private:
    Algebra(std::vector<GeneratorSpec> specs, Coefficients coeff) : coeff_(coeff), gens_(std::move(specs)) {}

    // Multiplies m by an even monomial in place; false when truncation kills it.
    bool multiply_even_into(Monomial& m, const Monomial& e) const {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!e[i]) continue;
            int v = m[i] + e[i];
            if (v >= bound_[i]) return false;
            m[i] = static_cast<std::uint8_t>(v);
        }
        return true;
    }

    void resolve() {
        const std::size_t n = gens_.size();
        odd_.resize(n);
        bound_.resize(n);
        stride_.resize(n);
        square_terms_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& g = gens_[i];
            if (g.degree <= 0) throw InconsistentPresentation(g.name + ": degree must be positive");
            for (std::size_t j = 0; j < i; ++j)
                if (gens_[j].name == g.name) throw InconsistentPresentation("duplicate generator " + g.name);
            if (g.additive_order != 0) {
                if (coeff_.is_field())
                    throw InconsistentPresentation(g.name + ": additive orders only make sense over Z");
                if (!is_prime(g.additive_order))
                    throw InconsistentPresentation(g.name + ": additive order must be 0 or prime");
            }
            odd_[i] = g.odd();
            if (odd_[i]) {
                bound_[i] = 2;
            } else {
                if (g.nilpotency < 1 || g.nilpotency > 255)
                    throw InconsistentPresentation(g.name + ": even generators need a nilpotency exponent");
                bound_[i] = g.nilpotency;
            }
        }
        std::uint64_t s = 1;
        for (std::size_t i = 0; i < n; ++i) {
            stride_[i] = s;
            if (s > (std::uint64_t{1} << 56)) stride_[i] = 0;  // codes unusable, enumeration refused anyway
            s *= static_cast<std::uint64_t>(bound_[i]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            const auto& g = gens_[i];
            if (!odd_[i] || g.square.kind != SquareRule::Kind::Known) continue;
            for (const auto& t : g.square.value) {
                Monomial m(n);
                for (const auto& [name, e] : t.factors) {
                    auto j = find(name);
                    if (!j) throw InconsistentPresentation(g.name + ": square mentions unknown generator " + name);
                    if (odd_[*j])
                        throw InconsistentPresentation(g.name + ": square values must lie in the even part");
                    m[*j] = static_cast<std::uint8_t>(m[*j] + e);
                }
                if (degree(m) != 2 * g.degree)
                    throw InconsistentPresentation(g.name + ": square value has degree " +
                                                   std::to_string(degree(m)) + ", expected " +
                                                   std::to_string(2 * g.degree));
                std::uint32_t ord = monomial_order(m);
                if (g.additive_order && ord != 1 && ord != g.additive_order)
                    throw InconsistentPresentation(g.name + ": square has incompatible additive order");
                if (!is_normal(m)) continue;  // truncated away
                Rational c = normalize(m, t.coeff);
                if (c != 0) square_terms_[i].emplace_back(m, c);
            }
        }
    }

    void compute_dimensions() const {
        using Series = std::map<int, std::uint64_t>;
        auto mul = [](const Series& a, const Series& b) {
            Series r;
            for (auto [da, ca] : a)
                for (auto [db, cb] : b) r[da + db] += ca * cb;
            return r;
        };
        auto gen_series = [&](std::size_t i) {
            Series s;
            for (int e = 0; e < bound_[i]; ++e) s[e * gens_[i].degree] += 1;
            return s;
        };
        Series free{{0, 1}};
        std::map<std::uint32_t, Series> tors;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            std::uint32_t o = gens_[i].additive_order;
            if (!o) free = mul(free, gen_series(i));
            else {
                auto it = tors.try_emplace(o, Series{{0, 1}}).first;
                it->second = mul(it->second, gen_series(i));
            }
        }
        for (auto [d, c] : free) dims_[d].rank += c;
        for (auto& [p, s] : tors) {
            s[0] -= 1;  // drop the monomials free of order-p generators
            for (auto [d, c] : mul(free, s))
                if (c) dims_[d].torsion[p] += c;
        }
        for (auto it = dims_.begin(); it != dims_.end();) {
            if (it->second.rank == 0 && it->second.torsion.empty()) it = dims_.erase(it);
            else ++it;
        }
    }

    void enumerate_basis() const {
        std::uint64_t count = 1;
        for (int b : bound_) {
            count *= static_cast<std::uint64_t>(b);
            if (count > kEnumerationLimit)
                throw TooLarge("algebra too large to enumerate a monomial basis");
        }
        const std::size_t n = gens_.size();
        Monomial m(n);
        for (std::uint64_t k = 0; k < count; ++k) {
            if (monomial_order(m) != 1) basis_[degree(m)].push_back(m);
            for (std::size_t i = 0; i < n; ++i) {
                if (++m[i] < bound_[i]) break;
                m[i] = 0;
            }
        }
        for (auto& [d, v] : basis_) {
            std::sort(v.begin(), v.end());
            for (std::size_t i = 0; i < v.size(); ++i) position_.emplace(code(v[i]), i);
        }
    }

    Coefficients coeff_;
    std::vector<GeneratorSpec> gens_;
    std::vector<bool> odd_;
    std::vector<int> bound_;
    std::vector<std::uint64_t> stride_;
    std::vector<std::vector<std::pair<Monomial, Rational>>> square_terms_;

    mutable std::once_flag dims_once_;
    mutable std::map<int, DimensionEntry> dims_;
    mutable std::once_flag basis_once_;
    mutable std::map<int, std::vector<Monomial>> basis_;
    mutable std::unordered_map<std::uint64_t, std::size_t> position_;
};

inline void Element::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    Rational v = it == terms_.end() ? c : it->second + c;
    v = alg_->normalize(m, v);
    if (v == 0) {
        if (it != terms_.end()) terms_.erase(it);
    } else if (it == terms_.end()) {
        terms_.emplace(m, std::move(v));
    } else {
        it->second = std::move(v);
    }
}

inline Element operator*(const Element& a, const Element& b) {
    if (a.alg_.get() != b.alg_.get()) throw Error("elements belong to different algebras");
    return a.alg_->multiply(a, b);
}

inline int Element::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int e = alg_->degree(m);
        if (d >= 0 && e != d) throw Error("element is not homogeneous");
        d = e;
    }
    return d;
}

inline std::string to_string(const Element& e) {
    return e.algebra() ? e.algebra()->to_string(e) : std::string("0");
}

}  // namespace liecohom
