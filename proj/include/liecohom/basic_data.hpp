#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace liecohom {

enum class Family { SU, Sp, SpinEven, SpinOdd, G2, F4, E6, E7, E8 };

struct GroupId {
    Family family = Family::G2;
    int rank_param = 0;  // meaningful for the classical families only

    bool exceptional() const { return family >= Family::G2; }
    bool operator==(const GroupId&) const = default;
    auto operator<=>(const GroupId&) const = default;
};

inline GroupId G2() { return {Family::G2, 0}; }
inline GroupId F4() { return {Family::F4, 0}; }
inline GroupId E6() { return {Family::E6, 0}; }
inline GroupId E7() { return {Family::E7, 0}; }
inline GroupId E8() { return {Family::E8, 0}; }
inline GroupId SU(int n) { return {Family::SU, n}; }
inline GroupId Sp(int n) { return {Family::Sp, n}; }
// Spin(m) by matrix size m.
inline GroupId Spin(int m) {
    return m % 2 == 0 ? GroupId{Family::SpinEven, m / 2} : GroupId{Family::SpinOdd, (m - 1) / 2};
}

inline std::vector<GroupId> exceptional_groups() { return {G2(), F4(), E6(), E7(), E8()}; }

inline std::string to_string(const GroupId& g) {
    switch (g.family) {
        case Family::SU: return "SU(" + std::to_string(g.rank_param) + ")";
        case Family::Sp: return "Sp(" + std::to_string(g.rank_param) + ")";
        case Family::SpinEven: return "Spin(" + std::to_string(2 * g.rank_param) + ")";
        case Family::SpinOdd: return "Spin(" + std::to_string(2 * g.rank_param + 1) + ")";
        case Family::G2: return "G2";
        case Family::F4: return "F4";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
    }
    return "?";
}

// Upper bound on the classical rank parameter; LIECOHOM_MAX_RANK overrides the default of 16.
inline int classical_rank_bound() {
    if (const char* env = std::getenv("LIECOHOM_MAX_RANK")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 1000) return static_cast<int>(v);
    }
    return 16;
}

inline std::vector<GroupId> classical_groups(int bound) {
    std::vector<GroupId> out;
    for (int n = 2; n <= bound; ++n) out.push_back(SU(n));
    for (int n = 1; n <= bound; ++n) out.push_back(Sp(n));
    for (int n = 3; n <= bound; ++n) out.push_back({Family::SpinEven, n});
    for (int n = 2; n <= bound; ++n) out.push_back({Family::SpinOdd, n});
    return out;
}

inline GroupId parse_group(const std::string& s) {
    static const std::regex re(R"(^\s*(SU|Sp|Spin)\((\d+)\)\s*$)");
    std::smatch m;
    if (s == "G2") return G2();
    if (s == "F4") return F4();
    if (s == "E6") return E6();
    if (s == "E7") return E7();
    if (s == "E8") return E8();
    if (std::regex_match(s, m, re)) {
        int v = std::stoi(m[2].str());
        if (m[1] == "SU") return SU(v);
        if (m[1] == "Sp") return Sp(v);
        return Spin(v);
    }
    throw ParseError("unrecognised group '" + s + "' (expected SU(n), Sp(n), Spin(n), G2, F4, E6, E7 or E8)");
}

struct Coefficients {
    enum class Kind { Integers, Rationals, PrimeField };
    Kind kind = Kind::Rationals;
    std::uint32_t p = 0;

    static Coefficients Z() { return {Kind::Integers, 0}; }
    static Coefficients Q() { return {Kind::Rationals, 0}; }
    static Coefficients F(std::uint32_t p) {
        if (!is_prime(p)) throw UnsupportedCoefficient("F" + std::to_string(p) + ": modulus is not prime");
        return {Kind::PrimeField, p};
    }
    bool is_field() const { return kind != Kind::Integers; }
    bool is_prime_field() const { return kind == Kind::PrimeField; }
    bool operator==(const Coefficients&) const = default;
};

inline std::string to_string(const Coefficients& c) {
    switch (c.kind) {
        case Coefficients::Kind::Integers: return "Z";
        case Coefficients::Kind::Rationals: return "Q";
        case Coefficients::Kind::PrimeField: return "F" + std::to_string(c.p);
    }
    return "?";
}

inline Coefficients parse_coefficients(const std::string& s) {
    if (s == "Z") return Coefficients::Z();
    if (s == "Q") return Coefficients::Q();
    static const std::regex re(R"(^F(\d+)$)");
    std::smatch m;
    if (std::regex_match(s, m, re)) {
        unsigned long p = std::stoul(m[1].str());
        if (!is_prime(p)) throw ParseError("F" + m[1].str() + ": modulus is not prime");
        return Coefficients::F(static_cast<std::uint32_t>(p));
    }
    throw ParseError("unrecognised coefficients '" + s + "' (expected Z, Q or F<p>)");
}

struct BasicData {
    int n = 0;  // rank
    int k = 0;
    int m = 0;
    std::vector<int> deg_e;
    std::vector<int> deg_y;
    std::vector<int> p_list;
    std::vector<int> k_list;
    int dim_g = 0;
    bool e8_coupled = false;
};

namespace detail {

// floor(log2(num/den)) for num >= den > 0
inline int floor_log2_ratio(long num, long den) {
    int e = 0;
    while ((den << (e + 1)) <= num) ++e;
    return e;
}

}  // namespace detail

inline BasicData basic_data(const GroupId& g) {
    BasicData b;
    const int n = g.rank_param;
    auto check_bounds = [&](int lo) {
        if (n < lo) throw UnsupportedGroup(to_string(g) + ": rank parameter below the supported range");
        if (n > classical_rank_bound())
            throw UnsupportedGroup(to_string(g) + ": rank parameter above the configured bound " +
                                   std::to_string(classical_rank_bound()));
    };
    switch (g.family) {
        case Family::SU:
            check_bounds(2);
            b.n = n - 1;
            b.k = n - 1;
            for (int i = 1; i <= n - 1; ++i) b.deg_e.push_back(2 * i + 2);
            b.dim_g = n * n - 1;
            break;
        case Family::Sp:
            check_bounds(1);
            b.n = n;
            b.k = n;
            for (int i = 1; i <= n; ++i) b.deg_e.push_back(4 * i);
            b.dim_g = n * (2 * n + 1);
            break;
        case Family::SpinEven:
            check_bounds(3);
            b.n = n;
            b.k = (n + 3) / 2;
            b.m = (n - 2) / 2;
            for (int t = 1; t <= (n - 1) / 2; ++t) b.deg_e.push_back(4 * t);
            b.deg_e.push_back(2 * n);
            b.deg_e.push_back(1 << (detail::floor_log2_ratio(n - 1, 1) + 2));
            for (int j = 1; j <= b.m; ++j) {
                b.deg_y.push_back(4 * j + 2);
                b.p_list.push_back(2);
                b.k_list.push_back(1 << (detail::floor_log2_ratio(n - 1, 2 * j + 1) + 1));
            }
            b.dim_g = n * (2 * n - 1);
            break;
        case Family::SpinOdd:
            check_bounds(2);
            b.n = n;
            b.k = (n + 2) / 2;
            b.m = (n - 1) / 2;
            for (int t = 1; t <= n / 2; ++t) b.deg_e.push_back(4 * t);
            b.deg_e.push_back(1 << (detail::floor_log2_ratio(n, 1) + 2));
            for (int j = 1; j <= b.m; ++j) {
                b.deg_y.push_back(4 * j + 2);
                b.p_list.push_back(2);
                b.k_list.push_back(1 << (detail::floor_log2_ratio(n, 2 * j + 1) + 1));
            }
            b.dim_g = n * (2 * n + 1);
            break;
        case Family::G2:
            b = {2, 1, 1, {4}, {6}, {2}, {2}, 14, false};
            break;
        case Family::F4:
            b = {4, 2, 2, {4, 16}, {6, 8}, {2, 3}, {2, 3}, 52, false};
            break;
        case Family::E6:
            b = {6, 4, 2, {4, 10, 16, 18}, {6, 8}, {2, 3}, {2, 3}, 78, false};
            break;
        case Family::E7:
            b = {7, 3, 4, {4, 16, 28}, {6, 8, 10, 18}, {2, 3, 2, 2}, {2, 3, 2, 2}, 133, false};
            break;
        case Family::E8:
            b = {8, 3, 7, {4, 16, 28}, {6, 8, 10, 12, 18, 20, 30}, {2, 3, 2, 5, 2, 3, 2},
                 {8, 3, 4, 5, 2, 3, 2}, 248, true};
            break;
    }
    if (static_cast<int>(b.deg_e.size()) != b.k)
        throw UnsupportedGroup(to_string(g) + ": inconsistent e-degree count");
    return b;
}

// G(p): the 1-based indices j with p_j = p.
inline std::vector<int> torsion_index_set(const GroupId& g, std::uint32_t p) {
    const BasicData b = basic_data(g);
    std::vector<int> out;
    for (int j = 0; j < b.m; ++j)
        if (static_cast<std::uint32_t>(b.p_list[j]) == p) out.push_back(j + 1);
    return out;
}

inline std::vector<int> complement_set(const GroupId& g, const Coefficients& f) {
    const BasicData b = basic_data(g);
    if (g.family == Family::E8) {
        if (!f.is_prime_field() || (f.p != 2 && f.p != 3 && f.p != 5)) return {1, 2, 3, 5, 6};
        if (f.p == 2) return {2};
        if (f.p == 3) return {1, 3, 5};
        return {1, 2, 3, 5};
    }
    std::vector<int> out;
    for (int j = 1; j <= b.m; ++j)
        if (!f.is_prime_field() || static_cast<std::uint32_t>(b.p_list[j - 1]) != f.p) out.push_back(j);
    return out;
}

// Weyl words of the special Schubert classes y_j of G/T, exceptional groups only,
// in the order of deg_y. Documentation data; each word has length deg y_j / 2.
inline std::vector<std::string> special_schubert_words(const GroupId& g) {
    static const std::vector<std::string> e = {"[5,4,2]",
                                               "[6,5,4,2]",
                                               "[7,6,5,4,2]",
                                               "[1,3,6,5,4,2]",
                                               "[1,5,4,3,7,6,5,4,2]",
                                               "[1,6,5,4,3,7,6,5,4,2]",
                                               "[5,4,2,3,1,6,5,4,3,8,7,6,5,4,2]"};
    switch (g.family) {
        case Family::G2: return {"[1,2,1]"};
        case Family::F4: return {"[3,2,1]", "[4,3,2,1]"};
        case Family::E6: return {e[0], e[1]};
        case Family::E7: return {e[0], e[1], e[2], e[4]};
        case Family::E8: return e;
        default: return {};
    }
}

struct GeneratorLabel {
    enum class Kind { Xi, Theta, Eta, ChowX };  // declaration order is the tie-break order
    Kind kind = Kind::Xi;
    int index = 0;  // 1-based origin index
    int degree = 0;

    bool odd() const { return kind != Kind::ChowX; }
    bool operator==(const GeneratorLabel&) const = default;
};

inline std::string paper_name(const GeneratorLabel& l) {
    switch (l.kind) {
        case GeneratorLabel::Kind::Xi: return "xi_" + std::to_string(l.index);
        case GeneratorLabel::Kind::Theta: return "theta_" + std::to_string(l.index);
        case GeneratorLabel::Kind::Eta: return "eta_" + std::to_string(l.index);
        case GeneratorLabel::Kind::ChowX: return "y_" + std::to_string(l.index);
    }
    return "?";
}

inline GeneratorLabel xi_label(const BasicData& b, int i) {
    return {GeneratorLabel::Kind::Xi, i, b.deg_e[i - 1] - 1};
}
inline GeneratorLabel eta_label(const BasicData& b, int j) {
    return {GeneratorLabel::Kind::Eta, j, b.k_list[j - 1] * b.deg_y[j - 1] - 1};
}
inline GeneratorLabel theta_label(const BasicData& b, int t) {
    return {GeneratorLabel::Kind::Theta, t, b.deg_y[t - 1] - 1};
}
inline GeneratorLabel chow_label(const BasicData& b, int j) {
    return {GeneratorLabel::Kind::ChowX, j, b.deg_y[j - 1]};
}

inline std::vector<GeneratorLabel> primary_form_labels(const GroupId& g, const Coefficients& f) {
    const BasicData b = basic_data(g);
    std::vector<GeneratorLabel> out;
    for (int i = 1; i <= b.k; ++i) out.push_back(xi_label(b, i));
    if (f.is_prime_field())
        for (int t : torsion_index_set(g, f.p)) out.push_back(theta_label(b, t));
    for (int j : complement_set(g, f)) out.push_back(eta_label(b, j));
    std::stable_sort(out.begin(), out.end(), [](const GeneratorLabel& a, const GeneratorLabel& c) {
        if (a.degree != c.degree) return a.degree < c.degree;
        if (a.kind != c.kind) return a.kind < c.kind;
        return a.index < c.index;
    });
    return out;
}

struct DimensionReport {
    bool ok = false;
    int generator_count = 0;
    int rank = 0;
    int degree_sum = 0;
    int torsion_correction = 0;
    int dim_g = 0;
    std::string text;
};

inline DimensionReport check_dimension_identity(const GroupId& g, const Coefficients& f) {
    const BasicData b = basic_data(g);
    const auto labels = primary_form_labels(g, f);
    DimensionReport r;
    r.generator_count = static_cast<int>(labels.size());
    r.rank = b.n;
    r.dim_g = b.dim_g;
    for (const auto& l : labels) r.degree_sum += l.degree;
    if (f.is_prime_field())
        for (int t : torsion_index_set(g, f.p)) r.torsion_correction += (b.k_list[t - 1] - 1) * b.deg_y[t - 1];
    r.ok = r.generator_count == r.rank && r.degree_sum + r.torsion_correction == r.dim_g;
    std::ostringstream os;
    os << to_string(g) << " over " << to_string(f) << ": |O| = " << r.generator_count << " (rank " << r.rank
       << "), degree sum " << r.degree_sum << " + correction " << r.torsion_correction << " = "
       << r.degree_sum + r.torsion_correction << " vs dim " << r.dim_g << (r.ok ? " ok" : " MISMATCH");
    r.text = os.str();
    return r;
}

}  // namespace liecohom
