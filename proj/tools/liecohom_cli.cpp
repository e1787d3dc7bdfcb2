// liecohom: command-line front end for the cohomology library.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "liecohom/liecohom.hpp"

using namespace liecohom;

namespace {

enum Exit { Ok = 0, VerifyFailed = 1, BadInput = 2, MissingSquare = 3 };

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

std::string join_names(const std::vector<std::string>& v, const std::string& sep = ", ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

void cmd_info(const GroupId& g, std::ostream& out) {
    const BasicData b = basic_data(g);
    out << "group: " << to_string(g) << "\n"
        << "rank: " << b.n << "\n"
        << "dim: " << b.dim_g << "\n"
        << "k: " << b.k << "\n"
        << "m: " << b.m << "\n"
        << "deg e: " << join(b.deg_e) << "\n"
        << "deg y: " << join(b.deg_y) << "\n"
        << "p: " << join(b.p_list) << "\n"
        << "k_j: " << join(b.k_list) << "\n";
    const auto words = special_schubert_words(g);
    for (std::size_t j = 0; j < words.size(); ++j) out << "y_" << j + 1 << ": sigma" << words[j] << "\n";
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto gp = torsion_index_set(g, p);
        if (!gp.empty()) out << "G(" << p << "): " << join(gp) << "\n";
    }
}

void cmd_betti(const GroupId& g, const Coefficients& c, int max_degree, std::ostream& out) {
    const int top = max_degree >= 0 ? max_degree : basic_data(g).dim_g;
    std::vector<std::string> parts;
    if (c.is_field()) {
        for (const auto& [d, e] : cohomology(g, c).algebra->graded_dimension())
            if (d <= top && e.rank) parts.push_back(std::to_string(d) + ":" + std::to_string(e.rank));
    } else {
        for (const auto& h : homology_descriptors(g, top)) parts.push_back(std::to_string(h.degree) + ":" + to_string(h));
    }
    out << join_names(parts, " ") << "\n";
}

std::string field_name(const Coefficients& c) { return to_string(c); }

void present_field(const CohomologyRing& ring, std::ostream& out) {
    const Algebra& A = *ring.algebra;
    std::vector<std::string> even, exterior, twisted, undetermined, truncations, squares;
    for (std::size_t i = 0; i < A.size(); ++i) {
        const auto& s = A.generators()[i];
        if (!s.odd()) {
            even.push_back(s.name);
            truncations.push_back(s.name + "^" + std::to_string(s.nilpotency));
            continue;
        }
        const std::string sq = detail::square_string(A, i);
        if (sq == "0") {
            exterior.push_back(s.name);
        } else if (sq == "unknown") {
            undetermined.push_back(s.name);
            squares.push_back(s.name + "^2 = unknown");
        } else {
            twisted.push_back(s.name);
            squares.push_back(s.name + "^2 = " + sq);
        }
    }
    const std::string F = field_name(ring.coeff);
    out << "H*(" << to_string(ring.group) << ";" << F << ") = ";
    std::vector<std::string> factors;
    if (!even.empty()) factors.push_back(F + "[" + join_names(even, ",") + "]/<" + join_names(truncations, ",") + ">");
    if (!twisted.empty()) factors.push_back("Δ(" + join_names(twisted, ",") + ")");
    if (!exterior.empty()) factors.push_back("Λ(" + join_names(exterior, ",") + ")");
    if (!undetermined.empty()) factors.push_back("[squares undetermined](" + join_names(undetermined, ",") + ")");
    out << (factors.empty() ? F : join_names(factors, " ⊗ ")) << "\n";
    out << "generators:\n";
    for (const auto& s : A.generators())
        out << "  " << s.name << "  degree " << s.degree << (s.label ? "  (" + paper_name(*s.label) + ")" : "") << "\n";
    if (!squares.empty()) {
        out << "squares:\n";
        for (const auto& s : squares) out << "  " << s << "\n";
    }
    out << "dimension: " << A.total_dimension() << "\n";
    if (ring.coeff.is_prime_field() && !torsion_index_set(ring.group, ring.coeff.p).empty()) {
        const TorsionRing t = torsion_ring(ring.group, ring.coeff.p);
        out << "torsion tau_" << ring.coeff.p << " = " << t.presentation << "\n";
        if (!t.relations.empty()) {
            out << "torsion relations:\n";
            for (const auto& r : t.relations) out << "  " << r << "\n";
        }
        out << "torsion dimension: " << t.total << "\n";
    }
}

void present_integral(const GroupId& g, std::ostream& out) {
    const IntegralCohomology H(g);
    const Algebra& F = *H.free_ring().algebra;
    std::vector<std::string> names;
    for (const auto& s : F.generators()) names.push_back(s.name);
    out << "H*(" << to_string(g) << ";Z) = Λ_Z(" << join_names(names, ",") << ")";
    for (std::uint32_t p : H.torsion_primes()) out << " + tau_" << p;
    out << "\n";
    out << "generators:\n";
    for (const auto& s : F.generators()) out << "  " << s.name << "  degree " << s.degree << "  (" << paper_name(*s.label) << ")\n";
    std::vector<std::string> squares;
    for (std::size_t i = 0; i < F.size(); ++i) {
        IntegralElement e = H.from_free(F.generator(i));
        IntegralElement sq = H.multiply(e, e);
        if (!sq.is_zero()) squares.push_back(F.generators()[i].name + "^2 = " + H.to_string(sq));
    }
    if (!squares.empty()) {
        out << "squares:\n";
        for (const auto& s : squares) out << "  " << s << "\n";
    }
    for (std::uint32_t p : H.torsion_primes()) {
        std::uint64_t total = 0;
        for (auto [d, n] : H.torsion_dimensions(p)) total += n;
        if (g.exceptional()) out << "tau_" << p << " = " << torsion_ring(g, p).presentation << "\n";
        out << "tau_" << p << " dimension: " << total << "\n";
    }
    if (g.exceptional()) {
        out << "mixed relations:\n";
        for (std::uint32_t p : H.torsion_primes())
            for (int t : torsion_index_set(g, p))
                for (const auto& I : detail::subsets_of(torsion_index_set(g, p), 1)) {
                    IntegralElement r = h_relation(t, I, H);
                    out << "  " << H.to_string(H.rho_for_eta(t)) << "*E" << subset_string(I) << " = " << H.to_string(r)
                        << "\n";
                }
    }
}

int cmd_verify(const std::vector<GroupId>& groups, const std::vector<Coefficients>& coeffs, unsigned jobs,
               bool verbose, std::ostream& out) {
    struct Job {
        GroupId g;
        Coefficients c;
    };
    std::vector<Job> queue;
    for (const auto& g : groups)
        for (const auto& c : coeffs) queue.push_back({g, c});
    std::vector<VerifyReport> reports(queue.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < queue.size();) reports[i] = verify(queue[i].g, queue[i].c);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::size_t failed = 0, undetermined = 0, checks = 0;
    for (const auto& r : reports) {
        std::size_t bad = 0;
        for (const auto& c : r.checks) {
            ++checks;
            if (c.status == CheckStatus::Fail) ++bad;
            if (c.status == CheckStatus::NotDetermined) ++undetermined;
        }
        out << to_string(r.group) << " over " << to_string(r.coeff) << ": " << (bad ? "FAIL" : "ok") << " ("
            << r.checks.size() << " checks)\n";
        for (const auto& c : r.checks)
            if (verbose || c.status != CheckStatus::Pass)
                out << "  [" << to_string(c.status) << "] " << c.name << (c.detail.empty() ? "" : ": " + c.detail)
                    << "\n";
        failed += bad ? 1 : 0;
    }
    out << reports.size() << " jobs, " << checks << " checks, " << failed << " failing jobs, " << undetermined
        << " checks not determined\n";
    return failed ? VerifyFailed : Ok;
}

ProductScope parse_scope(const std::string& s) {
    if (s == "none") return ProductScope::None;
    if (s == "generators") return ProductScope::Generators;
    if (s == "all") return ProductScope::All;
    return ProductScope::Auto;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohomology rings of compact simply connected simple Lie groups"};
    app.require_subcommand(1);
    std::string group_spec, coeff_spec = "Q", format = "text", expr, products = "auto", output;
    int max_degree = -1, max_rank = -1;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    bool all = false, verbose = false, json = false, pretty = false;
    std::vector<std::string> verify_coeffs;

    auto* info = app.add_subcommand("info", "basic data of a group");
    info->add_option("group", group_spec, "SU(n), Sp(n), Spin(n), G2, F4, E6, E7 or E8")->required();

    auto* betti = app.add_subcommand("betti", "Betti numbers, or integral groups over Z");
    betti->add_option("group", group_spec)->required();
    betti->add_option("--coeff", coeff_spec, "Z, Q or F<p>");
    betti->add_option("--max-degree", max_degree);

    auto* present = app.add_subcommand("present", "ring presentation");
    present->add_option("group", group_spec)->required();
    present->add_option("--coeff", coeff_spec);
    present->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* mul = app.add_subcommand("mul", "evaluate an expression in the ring");
    mul->add_option("group", group_spec)->required();
    mul->add_option("--coeff", coeff_spec);
    mul->add_option("expr", expr)->required();

    auto* ver = app.add_subcommand("verify", "run the invariant suite");
    ver->add_option("group", group_spec);
    ver->add_flag("--all", all, "every exceptional group and classical groups up to the rank bound");
    ver->add_option("--max-rank", max_rank, "classical rank bound (default LIECOHOM_MAX_RANK or 16)");
    ver->add_option("--coeff", verify_coeffs, "restrict to these coefficient systems");
    ver->add_option("-j,--jobs", jobs);
    ver->add_flag("-v,--verbose", verbose);

    auto* exp = app.add_subcommand("export", "JSON presentation with basis and products");
    exp->add_option("group", group_spec)->required();
    exp->add_option("--coeff", coeff_spec);
    exp->add_flag("--json", json, "JSON output (the only format)");
    exp->add_option("--products", products)->check(CLI::IsMember({"auto", "none", "generators", "all"}));
    exp->add_option("-o,--output", output);
    exp->add_flag("--pretty", pretty);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Ok : BadInput;
    }

    try {
        if (*ver) {
            if (max_rank > 0) setenv("LIECOHOM_MAX_RANK", std::to_string(max_rank).c_str(), 1);
            std::vector<GroupId> groups;
            if (all) {
                groups = exceptional_groups();
                for (const auto& g : classical_groups(max_rank > 0 ? max_rank : classical_rank_bound())) groups.push_back(g);
            } else if (!group_spec.empty()) {
                groups.push_back(parse_group(group_spec));
            } else {
                std::cerr << "verify: give a group or --all\n";
                return BadInput;
            }
            std::vector<Coefficients> coeffs;
            for (const auto& s : verify_coeffs) coeffs.push_back(parse_coefficients(s));
            if (coeffs.empty()) coeffs = verification_coefficients();
            return cmd_verify(groups, coeffs, std::max(1u, jobs), verbose, std::cout);
        }

        const GroupId g = parse_group(group_spec);
        const Coefficients c = parse_coefficients(coeff_spec);
        if (*info) {
            cmd_info(g, std::cout);
        } else if (*betti) {
            cmd_betti(g, c, max_degree, std::cout);
        } else if (*present) {
            if (format == "json") {
                Json j = c.is_field() ? export_json(cohomology(g, c), {ProductScope::None})
                                      : export_json(IntegralCohomology(g), {ProductScope::None});
                std::cout << j.dump(2) << "\n";
            } else if (c.is_field()) {
                present_field(cohomology(g, c), std::cout);
            } else {
                present_integral(g, std::cout);
            }
        } else if (*mul) {
            if (c.is_field()) {
                const CohomologyRing ring = cohomology(g, c);
                std::cout << ring.to_string(evaluate_expression(ring, expr)) << "\n";
            } else {
                const IntegralCohomology H(g);
                std::cout << H.to_string(evaluate_expression(H, expr)) << "\n";
            }
        } else if (*exp) {
            (void)json;
            ExportOptions opt;
            opt.products = parse_scope(products);
            Json j = c.is_field() ? export_json(cohomology(g, c), opt) : export_json(IntegralCohomology(g), opt);
            const std::string text = pretty ? j.dump(2) : j.dump();
            if (output.empty()) {
                std::cout << text << "\n";
            } else {
                std::ofstream f(output);
                if (!f) {
                    std::cerr << "cannot write " << output << "\n";
                    return VerifyFailed;
                }
                f << text << "\n";
            }
        }
        return Ok;
    } catch (const UnknownSquare& e) {
        std::cerr << "error: " << e.what() << "\n";
        return MissingSquare;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadInput;
    } catch (const UnsupportedGroup& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadInput;
    } catch (const UnsupportedCoefficient& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadInput;
    } catch (const UnknownLabel& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return VerifyFailed;
    }
}
