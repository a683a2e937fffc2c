/*
 * gkcli
 * -----
 * Command-line front end.  Subcommands:
 *
 *   groth    construct a polynomial from a (skew) shape
 *   coeff    expansion coefficients g^nu_mu along one or all routes
 *   insert   simultaneous row insertion of a set into a tableau
 *   hecke    double Grothendieck polynomials and the final theorem
 *   verify   named verification suites
 *
 * Exit status: 0 on success, 1 on a verification failure (a minimal
 * witness goes to standard output), 2 on a usage error.
 */
#include <CLI11.hpp>

#include <gk/serialize.hpp>
#include <gk/verify.hpp>

#include <iostream>

using namespace gk;

namespace {

GrothKind parse_kind(const std::string& s) {
    if (s == "ordinary") return GrothKind::Ordinary;
    if (s == "factorial-a") return GrothKind::FactorialA;
    if (s == "factorial-b") return GrothKind::FactorialB;
    throw CLI::ValidationError("--kind", "expected ordinary|factorial-a|factorial-b");
}

void print_poly(const SparsePoly& p, bool json) {
    if (json)
        std::cout << poly_to_json(p).dump() << "\n";
    else
        std::cout << p.str() << "\n";
}

std::optional<Assignment> maybe_spec(const std::string& mode, std::uint64_t seed,
                                     int alo, int ahi, int blo, int bhi) {
    if (mode == "symbolic") return std::nullopt;
    if (mode == "specialized")
        return detail::admissible_for_range(seed, alo, ahi, blo, bhi);
    throw CLI::ValidationError("--mode", "expected symbolic|specialized");
}

int run_coeff(const std::string& theta_s, const std::string& mu_s,
              const std::string& nu_s, int n, const std::string& route,
              const std::string& mode, std::uint64_t seed, bool json, bool witness) {
    SkewShape theta = SkewShape::parse(theta_s);
    Partition mu = Partition::parse(mu_s);
    Partition nu = Partition::parse(nu_s);
    auto spec_opt = maybe_spec(mode, seed, 1, n + nu.part(1),
                               2 - theta.outer().length(),
                               n + theta.outer().part(1));
    const Assignment* spec = spec_opt ? &*spec_opt : nullptr;

    auto analytic = [&](const std::string& r) -> RatFunc {
        PEval P = make_groth_b_evaluator(theta, n, spec);
        if (r == "recur") return recurrence_coefficient(P, mu, nu, n, spec);
        if (r == "chain") return chain_sum_coefficient(P, mu, nu, n, spec);
        // interpolation over a box large enough to contain nu
        SparsePoly prod = groth_poly(theta, n, GrothKind::FactorialB, spec) *
                          groth_poly(mu, n, GrothKind::FactorialA, spec);
        auto d = expand_in_factorial_basis(prod, n, nu.part(1), spec);
        auto it = d.find(nu);
        return it == d.end() ? RatFunc() : it->second;
    };

    auto emit = [&](const std::string& label, const std::string& text) {
        if (json)
            std::cout << nlohmann::ordered_json{{"route", label}, {"value", text}}.dump()
                      << "\n";
        else
            std::cout << label << ": " << text << "\n";
    };

    if (route == "comb") {
        SparsePoly c = lr_combinatorial(theta, mu, nu, n);
        print_poly(c, json);
        if (witness) {
            int t = nu.size() - mu.size();
            for_each_svt(theta, n, t, [&](const SetValuedTableau& T) {
                if (T.total_entries() != t) return;
                auto word = T.column_word();
                if (!fits_sequence(word, mu, nu)) return;
                Partition cur = mu;
                std::string chain = cur.str();
                for (int r : word) {
                    cur = cur.with_box(r);
                    chain += " -> " + cur.str();
                }
                std::cout << "T = " << T.str() << "  chain: " << chain << "\n";
            });
        }
        return 0;
    }
    if (route == "recur" || route == "chain" || route == "expand") {
        RatFunc v = analytic(route);
        if (json)
            std::cout << nlohmann::ordered_json{{"route", route}, {"value", v.str()}}.dump()
                      << "\n";
        else
            std::cout << v.str() << "\n";
        return 0;
    }
    if (route != "all")
        throw CLI::ValidationError("--route", "expected comb|expand|recur|chain|all");

    SparsePoly comb = lr_combinatorial(theta, mu, nu, n);
    emit("comb", comb.str());
    RatFunc first;
    bool mismatch = false;
    std::string first_route;
    for (const std::string& r : {"expand", "recur", "chain"}) {
        RatFunc v = analytic(r);
        RatFunc shown = spec ? v : at_ab_zero(v);
        emit(r, shown.str());
        if (first_route.empty()) {
            first = v;
            first_route = r;
        } else if (!(v == first)) {
            mismatch = true;
            std::cout << "MISMATCH: " << r << " disagrees with " << first_route
                      << " for theta=" << theta.str() << " mu=" << mu.str()
                      << " nu=" << nu.str() << " n=" << n
                      << (spec ? " with " + detail::assignment_str(*spec) : " symbolic")
                      << "\n";
        }
    }
    if (!spec && !(at_ab_zero(first) == RatFunc(comb))) {
        mismatch = true;
        std::cout << "MISMATCH: comb disagrees with " << first_route
                  << " at a=b=0 for theta=" << theta.str() << " mu=" << mu.str()
                  << " nu=" << nu.str() << " n=" << n << "\n";
    }
    return mismatch ? 1 : 0;
}

int run_verify(const std::string& suite, int n, int max_part, std::uint64_t seed) {
    VerifyResult res;
    if (suite == "pieri")
        res = verify_pieri(max_part, n);
    else if (suite == "vanishing")
        res = verify_vanishing(3, max_part, n);
    else if (suite == "symmetry")
        res = verify_symmetry(3, 3, n, seed);
    else if (suite == "insertion")
        res = verify_insertion(n, max_part);
    else if (suite == "lr")
        res = verify_lr(n);
    else if (suite == "hecke-relations")
        res = verify_hecke_relations();
    else if (suite == "theorem-final")
        res = verify_theorem_final();
    else if (suite == "routes")
        res = verify_routes(seed);
    else if (suite == "rowshape")
        res = verify_rowshape(seed);
    else if (suite == "expansion")
        res = verify_expansion();
    else if (suite == "buch")
        res = verify_buch();
    else
        throw CLI::ValidationError("suite",
                                   "expected pieri|vanishing|symmetry|insertion|lr|"
                                   "hecke-relations|theorem-final|routes|rowshape|"
                                   "expansion|buch");
    if (!res.report.empty()) std::cout << "note: " << res.report << "\n";
    if (res.ok) {
        std::cout << "ok: " << suite << "\n";
        return 0;
    }
    std::cout << "FAIL: " << res.witness << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grothendieck polynomial calculator"};
    app.require_subcommand(1);

    std::string shape_s, skew_s, kind_s = "ordinary";
    std::string theta_s, mu_s = "", nu_s, route = "all", mode = "symbolic";
    std::string set_s, tableau_s, perm_s, lambda_s, suite, hroute = "both";
    int n = 0, max_part = 2, p = 0, k = 0;
    std::uint64_t seed = 1;
    bool json = false, witness = false;

    auto* groth = app.add_subcommand("groth", "construct a polynomial");
    groth->add_option("--shape", shape_s, "outer shape, e.g. 2,1")->required();
    groth->add_option("--skew", skew_s, "inner shape");
    groth->add_option("--n", n, "number of x variables")->required();
    groth->add_option("--kind", kind_s, "ordinary|factorial-a|factorial-b");
    groth->add_flag("--json", json, "JSON output");

    auto* coeff = app.add_subcommand("coeff", "expansion coefficients");
    coeff->add_option("--theta", theta_s, "shape of the multiplier, e.g. 2,1/1")
        ->required();
    coeff->add_option("--mu", mu_s, "inner partition");
    coeff->add_option("--nu", nu_s, "target partition")->required();
    coeff->add_option("--n", n, "number of x variables")->required();
    coeff->add_option("--route", route, "comb|expand|recur|chain|all");
    coeff->add_option("--mode", mode, "symbolic|specialized");
    coeff->add_option("--seed", seed, "seed for specialized mode");
    coeff->add_flag("--json", json, "JSON output");
    coeff->add_flag("--witness", witness, "list fitting tableaux with their chains");

    auto* insert = app.add_subcommand("insert", "row insertion of a set");
    insert->add_option("--set", set_s, "comma-separated entries")->required();
    insert->add_option("--tableau", tableau_s, "tableau JSON")->required();

    auto* hecke = app.add_subcommand("hecke", "Hecke algebra computations");
    auto* gw = hecke->add_subcommand("gw", "double Grothendieck polynomial of w");
    gw->add_option("--perm", perm_s, "one-line notation, e.g. 2,4,1,3")->required();
    gw->add_option("--n", n, "algebra parameter")->required();
    gw->add_option("--route", hroute, "dd|gen|both");
    gw->add_flag("--json", json, "JSON output");
    auto* fin = hecke->add_subcommand("final", "three-way final theorem check");
    fin->add_option("--lambda", lambda_s, "partition")->required();
    fin->add_option("--p", p, "diagonal offset")->required();
    fin->add_option("--k", k, "number of x variables")->required();
    fin->add_option("--n", n, "algebra parameter")->required();
    fin->add_flag("--json", json, "JSON output");
    hecke->require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", suite, "suite name")->required();
    verify->add_option("--n", n, "number of x variables")->capture_default_str();
    verify->add_option("--max-part", max_part, "largest part in the grid");
    verify->add_option("--seed", seed, "seed for specialized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (groth->parsed()) {
            SkewShape theta(Partition::parse(shape_s),
                            skew_s.empty() ? Partition{} : Partition::parse(skew_s));
            print_poly(groth_poly(theta, n, parse_kind(kind_s)), json);
            return 0;
        }
        if (coeff->parsed())
            return run_coeff(theta_s, mu_s, nu_s, n, route, mode, seed, json, witness);
        if (insert->parsed()) {
            SetValuedTableau T = tableau_from_json(nlohmann::ordered_json::parse(tableau_s));
            std::set<int> S;
            for (size_t pos = 0; pos < set_s.size();) {
                size_t next = set_s.find(',', pos);
                if (next == std::string::npos) next = set_s.size();
                S.insert(std::stoi(set_s.substr(pos, next - pos)));
                pos = next + 1;
            }
            auto r = tableau_insert(S, T);
            nlohmann::ordered_json trace = nlohmann::ordered_json::array();
            for (auto& ej : r.ejected_trace) trace.push_back(ej);
            std::cout << nlohmann::ordered_json{{"tableau", tableau_to_json(r.tableau)},
                                                {"trace", std::move(trace)}}
                             .dump()
                      << "\n";
            return 0;
        }
        if (gw->parsed()) {
            std::vector<int> img;
            for (size_t pos = 0; pos < perm_s.size();) {
                size_t next = perm_s.find(',', pos);
                if (next == std::string::npos) next = perm_s.size();
                img.push_back(std::stoi(perm_s.substr(pos, next - pos)));
                pos = next + 1;
            }
            Permutation w(img);
            if (hroute == "dd" || hroute == "both") {
                SparsePoly g = double_groth_dd(w, n);
                print_poly(g, json);
            }
            if (hroute == "gen" || hroute == "both") {
                SparsePoly g = double_groth_gen(w, n);
                print_poly(g, json);
            }
            if (hroute == "both" &&
                !(double_groth_dd(w, n) == double_groth_gen(w, n))) {
                std::cout << "MISMATCH: dd and gen differ for w=" << w.str()
                          << " n=" << n << "\n";
                return 1;
            }
            if (hroute != "dd" && hroute != "gen" && hroute != "both")
                throw CLI::ValidationError("--route", "expected dd|gen|both");
            return 0;
        }
        if (fin->parsed()) {
            auto r = theorem_final_check(Partition::parse(lambda_s), p, k, n);
            if (json) {
                std::cout << nlohmann::ordered_json{
                                 {"module", poly_to_json(r.module_route)},
                                 {"factorial", poly_to_json(r.factorial)},
                                 {"basis", poly_to_json(r.basis_route)},
                                 {"agree", r.agree}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << "module:    " << r.module_route.str() << "\n";
                std::cout << "factorial: " << r.factorial.str() << "\n";
                std::cout << "basis:     " << r.basis_route.str() << "\n";
            }
            if (!r.agree) {
                std::cout << "MISMATCH: lambda=" << lambda_s << " p=" << p
                          << " k=" << k << " n=" << n << "\n";
                return 1;
            }
            return 0;
        }
        if (verify->parsed()) {
            if (!verify->count("--n")) n = 3;
            return run_verify(suite, n, max_part, seed);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const BadSerialization& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
