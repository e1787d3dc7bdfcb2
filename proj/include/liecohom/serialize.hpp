#pragma once

#include <regex>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "integral.hpp"
#include "rings.hpp"

namespace liecohom {

using Json = nlohmann::ordered_json;

enum class ProductScope { None, Generators, All, Auto };

struct ExportOptions {
    ProductScope products = ProductScope::Auto;
    std::uint64_t all_pairs_limit = 512;  // Auto switches to generator-by-basis above this dimension
};

namespace detail {

inline std::string square_string(const Algebra& A, std::size_t i) {
    const auto& s = A.generators()[i];
    if (s.odd() && s.square.kind == SquareRule::Kind::Unknown) return "unknown";
    const Element g = A.generator(i);
    return A.to_string(g * g);
}

inline std::optional<GeneratorLabel> label_from_name(const std::string& name, int degree) {
    static const std::regex re(R"(^(xi|theta|eta|y)_(\d+)$)");
    std::smatch m;
    if (!std::regex_match(name, m, re)) return std::nullopt;
    GeneratorLabel l;
    const std::string k = m[1];
    l.kind = k == "xi" ? GeneratorLabel::Kind::Xi
           : k == "theta" ? GeneratorLabel::Kind::Theta
           : k == "eta" ? GeneratorLabel::Kind::Eta
                        : GeneratorLabel::Kind::ChowX;
    l.index = std::stoi(m[2]);
    l.degree = degree;
    return l;
}

// "x6^6*x10 + 2*x30" -> named terms. Only what to_string emits is accepted.
inline std::vector<NamedTerm> parse_named_terms(const std::string& text) {
    std::vector<NamedTerm> out;
    if (text == "0") return out;
    static const std::regex factor(R"(^([A-Za-z_][A-Za-z0-9_]*)(\^(\d+))?$)");
    int sign = 1;
    auto trim = [](std::string s) {
        while (!s.empty() && s.front() == ' ') s.erase(s.begin());
        while (!s.empty() && s.back() == ' ') s.pop_back();
        return s;
    };
    std::string rest = text;
    if (!rest.empty() && rest[0] == '-') {
        sign = -1;
        rest = rest.substr(1);
    }
    while (true) {
        std::size_t plus = rest.find(" + "), minus = rest.find(" - ");
        std::size_t cut = std::min(plus, minus);
        std::string chunk = trim(rest.substr(0, cut));
        NamedTerm t;
        t.coeff = sign;
        std::size_t start = 0;
        while (start <= chunk.size()) {
            std::size_t star = chunk.find('*', start);
            std::string f = chunk.substr(start, star == std::string::npos ? std::string::npos : star - start);
            std::smatch m;
            if (!f.empty() && std::all_of(f.begin(), f.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '/'; })) {
                t.coeff *= Rational(f);
            } else if (std::regex_match(f, m, factor)) {
                if (f != "1") t.factors.emplace_back(m[1], m[3].matched ? std::stoi(m[3]) : 1);
            } else {
                throw ParseError("cannot read term '" + chunk + "' in '" + text + "'");
            }
            if (star == std::string::npos) break;
            start = star + 1;
        }
        out.push_back(t);
        if (cut == std::string::npos) break;
        sign = cut == plus ? 1 : -1;
        rest = rest.substr(cut + 3);
    }
    return out;
}

inline Json betti_json(const Algebra& A) {
    Json b = Json::object();
    for (const auto& [d, e] : A.graded_dimension())
        if (e.rank) b[std::to_string(d)] = e.rank;
    return b;
}

}  // namespace detail

// Export of a field algebra. `group` and `coeff` are copied verbatim into the document.
inline Json export_json(const Algebra& A, const std::string& group, const std::string& coeff,
                        const ExportOptions& opt = {}) {
    Json j;
    j["group"] = group;
    j["coefficients"] = coeff;
    Json gens = Json::array();
    Json rels = Json::array();
    for (std::size_t i = 0; i < A.size(); ++i) {
        const auto& s = A.generators()[i];
        Json g;
        g["name"] = s.name;
        g["degree"] = s.degree;
        g["parity"] = s.odd() ? "odd" : "even";
        g["order"] = s.additive_order;
        g["square"] = detail::square_string(A, i);
        if (!s.odd()) g["nilpotency"] = s.nilpotency;
        if (s.label) g["label"] = paper_name(*s.label);
        gens.push_back(g);
        if (!s.odd()) rels.push_back(s.name + "^" + std::to_string(s.nilpotency) + " = 0");
        else if (g["square"] != "0") rels.push_back(s.name + "^2 = " + g["square"].get<std::string>());
    }
    j["generators"] = gens;
    j["relations"] = rels;
    j["betti"] = detail::betti_json(A);
    j["torsion"] = Json::object();

    ProductScope scope = opt.products;
    if (scope == ProductScope::Auto)
        scope = A.total_dimension() <= opt.all_pairs_limit ? ProductScope::All : ProductScope::Generators;
    if (scope == ProductScope::None) return j;

    Json basis = Json::object();
    std::vector<Monomial> flat;
    for (const auto& [d, mons] : A.basis()) {
        Json list = Json::array();
        for (const auto& m : mons) {
            list.push_back(A.monomial_string(m));
            flat.push_back(m);
        }
        basis[std::to_string(d)] = list;
    }
    j["basis"] = basis;

    Json table = Json::array();
    auto emit = [&](const Monomial& a, const Monomial& b) {
        std::string result;
        try {
            Element r = A.monomial(a) * A.monomial(b);
            if (r.is_zero()) return;
            result = A.to_string(r);
        } catch (const UnknownSquare&) {
            result = "unknown";  // depends on a square the presentation leaves open
        }
        table.push_back(Json::array({A.monomial_string(a), A.monomial_string(b), result}));
    };
    if (scope == ProductScope::All) {
        for (std::size_t x = 0; x < flat.size(); ++x)
            for (std::size_t y = x; y < flat.size(); ++y) emit(flat[x], flat[y]);
    } else {
        for (std::size_t i = 0; i < A.size(); ++i) {
            Monomial g(A.size());
            g[i] = 1;
            for (const auto& m : flat) emit(g, m);
        }
    }
    j["products"] = {{"scope", scope == ProductScope::All ? "all" : "generator_by_basis"},
                     {"nonzero", table}};
    return j;
}

inline Json export_json(const CohomologyRing& r, const ExportOptions& opt = {}) {
    return export_json(*r.algebra, to_string(r.group), to_string(r.coeff), opt);
}

// Integral export: rho generators plus the Chow classes of each torsion prime.
inline Json export_json(const IntegralCohomology& H, const ExportOptions& opt = {}) {
    const GroupId& g = H.group();
    const BasicData b = basic_data(g);
    Json j;
    j["group"] = to_string(g);
    j["coefficients"] = "Z";
    Json gens = Json::array();
    Json rels = Json::array();
    std::vector<std::pair<std::string, IntegralElement>> named;
    const Algebra& F = *H.free_ring().algebra;
    for (std::size_t i = 0; i < F.size(); ++i) {
        const auto& s = F.generators()[i];
        IntegralElement e = H.from_free(F.generator(i));
        std::string sq = H.to_string(H.multiply(e, e));
        gens.push_back({{"name", s.name}, {"degree", s.degree}, {"parity", "odd"}, {"order", 0}, {"square", sq},
                        {"label", paper_name(*s.label)}});
        if (sq != "0") rels.push_back(s.name + "^2 = " + sq);
        named.emplace_back(s.name, e);
    }
    for (int jdx = 1; jdx <= b.m; ++jdx) {
        IntegralElement e = H.x(jdx);
        const std::uint32_t p = static_cast<std::uint32_t>(b.p_list[jdx - 1]);
        const std::string name = H.mod_p(p).algebra->generators()[H.mod_p(p).index(GeneratorLabel::Kind::ChowX, jdx)].name;
        gens.push_back({{"name", name}, {"degree", b.deg_y[jdx - 1]}, {"parity", "even"}, {"order", p},
                        {"square", H.to_string(H.multiply(e, e))}, {"nilpotency", b.k_list[jdx - 1]},
                        {"label", "y_" + std::to_string(jdx)}});
        rels.push_back(std::to_string(p) + "*" + name + " = 0");
        rels.push_back(name + "^" + std::to_string(b.k_list[jdx - 1]) + " = 0");
        named.emplace_back(name, e);
    }
    j["generators"] = gens;
    j["relations"] = rels;
    j["betti"] = detail::betti_json(F);
    Json tors = Json::object();
    for (std::uint32_t p : H.torsion_primes()) {
        Json t = Json::object();
        for (const auto& [d, n] : H.torsion_dimensions(p))
            if (n) t[std::to_string(d)] = n;
        tors[std::to_string(p)] = t;
    }
    j["torsion"] = tors;
    if (opt.products == ProductScope::None) return j;

    Json basis = Json::object();
    const auto all = H.basis();
    for (const auto& e : all) basis[std::to_string(H.degree(e))].push_back(H.to_string(e));
    j["basis"] = basis;
    Json table = Json::array();
    for (const auto& [name, e] : named)
        for (const auto& x : all) {
            IntegralElement r = H.multiply(e, x);
            if (!r.is_zero()) table.push_back(Json::array({name, H.to_string(x), H.to_string(r)}));
        }
    j["products"] = {{"scope", "generator_by_basis"}, {"nonzero", table}};
    return j;
}

// Rebuilds a field algebra from an exported document.
inline AlgebraPtr algebra_from_json(const Json& j) {
    try {
        const Coefficients c = parse_coefficients(j.at("coefficients").get<std::string>());
        if (!c.is_field()) throw ParseError("only field presentations can be rebuilt");
        std::vector<GeneratorSpec> specs;
        for (const auto& g : j.at("generators")) {
            GeneratorSpec s;
            s.name = g.at("name").get<std::string>();
            s.degree = g.at("degree").get<int>();
            s.additive_order = g.at("order").get<std::uint32_t>();
            if ((g.at("parity") == "odd") != s.odd()) throw ParseError(s.name + ": parity disagrees with degree");
            if (g.contains("label")) s.label = detail::label_from_name(g["label"].get<std::string>(), s.degree);
            if (s.odd()) {
                const std::string sq = g.at("square").get<std::string>();
                if (sq == "unknown") s.square = SquareRule::unknown();
                else if (sq != "0") s.square = SquareRule::known(detail::parse_named_terms(sq));
            } else {
                s.nilpotency = g.at("nilpotency").get<int>();
            }
            specs.push_back(s);
        }
        return Algebra::build(std::move(specs), c);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed presentation document: ") + e.what());
    }
}

}  // namespace liecohom
