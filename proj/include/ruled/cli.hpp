#pragma once

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <tuple>
#include <vector>

#include "ruled/json_io.hpp"

/*
 * Command-line front end.  run_cli is the whole program: it parses one verb,
 * computes, and writes either text or JSON.  Exit codes: 0 success, 1
 * verification failure, 2 usage or domain error.  RULED_MAX_DEGREE overrides
 * the default degree bound of 30.
 */

namespace ruled {

namespace cli_detail {

inline std::string render_poly1(const Poly1& p) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        Rational mag = p[i] < 0 ? Rational(-p[i]) : p[i];
        if (first)
            os << (p[i] < 0 ? "-" : "");
        else
            os << (p[i] < 0 ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << to_string(mag);
        } else {
            if (mag != 1) os << to_string(mag) << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

inline std::string render_point(const Point2& p) {
    return "(" + to_string(p[0]) + ", " + to_string(p[1]) + ")";
}

/*
 * Character display order: the constant and the y-symmetric terms lead,
 * then x-monomials grouped by |power| with the positive power first.  This
 * reproduces the symmetric closed forms (2 + y + 1/y + x + 1/x); the
 * canonical descending-lexicographic render stays in charge everywhere else.
 */
inline std::string render_character(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Exponents, Rational>> terms(p.terms.begin(), p.terms.end());
    auto key = [](const Exponents& e) {
        return std::make_tuple(std::abs(e[0]), e[0] < 0 ? 1 : 0, std::abs(e[1]), e[1] < 0 ? 1 : 0);
    };
    std::stable_sort(terms.begin(), terms.end(),
                     [&](const auto& a, const auto& b) { return key(a.first) < key(b.first); });
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        Rational a = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string num = render_exponent_part(p.vars, e, false);
        std::string den = render_exponent_part(p.vars, e, true);
        if (num.empty() && den.empty()) {
            out += to_string(a);
        } else {
            if (a != 1) out += to_string(a) + "*";
            out += num.empty() ? "1" : num;
            if (!den.empty()) out += "/" + den;
        }
    }
    return out;
}

inline std::string render_dims(const std::vector<long long>& dims) {
    std::ostringstream os;
    for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? " " : "") << dims[i];
    return os.str();
}

inline std::string render_presentation(const GradedRingPresentation& P) {
    std::ostringstream os;
    os << coeff_name(P.field) << "[";
    for (std::size_t i = 0; i < P.vars.size(); ++i) {
        os << (i ? ", " : "") << P.vars.names[i] << ":" << P.degrees[i];
    }
    os << "]";
    if (!P.relations.empty()) {
        os << " / (";
        for (std::size_t i = 0; i < P.relations.size(); ++i)
            os << (i ? ", " : "") << render(P.relations[i]);
        os << ")";
    }
    return os.str();
}

inline SurfaceFamily family_of(const std::string& s) {
    return s == "twisted" ? SurfaceFamily::twisted : SurfaceFamily::untwisted;
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    int default_degree = 30;
    if (const char* env = std::getenv("RULED_MAX_DEGREE")) {
        try {
            default_degree = std::stoi(env);
        } catch (const std::exception&) {
            default_degree = 0;
        }
        if (default_degree <= 0) {
            err << "usage error: RULED_MAX_DEGREE must be a positive integer\n";
            return 2;
        }
    }

    CLI::App app{"exact invariants of symplectic rational ruled surfaces"};
    app.name("ruled");
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    int stage = 0;
    std::string lambda_str = "1";
    std::string family_str = "untwisted";
    std::string coeff_str = "Q";
    std::string suite = "all";
    int level_l = 0;
    int max_degree = default_degree;

    auto* c_index = app.add_subcommand("index", "equivariant index character and its split");
    c_index->add_option("n", stage, "stage label")->required()->check(CLI::NonNegativeNumber);

    auto* c_euler = app.add_subcommand("euler", "euler class of the stage-n isotropy representation");
    c_euler->add_option("n", stage, "stage label")->required()->check(CLI::NonNegativeNumber);

    auto* c_polygon = app.add_subcommand("polygon", "moment polygon and fixed-point weights");
    c_polygon->add_option("n", stage, "stage label")->required()->check(CLI::NonNegativeNumber);
    c_polygon->add_option("--lambda", lambda_str, "symplectic level (rational, e.g. 3/2)")
        ->required();

    auto* c_psi = app.add_subcommand("psi", "stage restriction map and its kernel");
    c_psi->add_option("n", stage, "stage label")->required()->check(CLI::NonNegativeNumber);

    auto* c_relation = app.add_subcommand("relation", "structure-space relation at a stratum count");
    c_relation->add_option("--l", level_l, "top stratum index")
        ->required()
        ->check(CLI::NonNegativeNumber);
    c_relation->add_option("--family", family_str, "untwisted or twisted")
        ->required()
        ->check(CLI::IsMember({"untwisted", "twisted"}));

    auto* c_bg = app.add_subcommand("bg", "structure-space presentation, series, and dimensions");
    c_bg->add_option("--lambda", lambda_str, "symplectic level (rational)")->required();
    c_bg->add_option("--family", family_str, "untwisted or twisted")
        ->required()
        ->check(CLI::IsMember({"untwisted", "twisted"}));
    c_bg->add_option("--coeff", coeff_str, "coefficients (default Q)")
        ->check(CLI::IsMember({"Q", "F2", "Z1/2"}));
    c_bg->add_option("--max-degree", max_degree, "degree bound")->check(CLI::PositiveNumber);

    auto* c_verify = app.add_subcommand("verify", "run the verification suites");
    c_verify->add_option("--suite", suite, "suite slug (default all)");
    c_verify->add_option("--max-degree", max_degree, "degree bound")->check(CLI::PositiveNumber);

    auto* c_dump = app.add_subcommand("catalog-dump", "emit the full JSON catalog");
    c_dump->add_option("--max-degree", max_degree, "degree bound for dimension tables")
        ->check(CLI::PositiveNumber);

    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->add_flag("--json", as_json, "machine-readable JSON output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c_index->parsed()) {
            LaurentPoly idx = atiyah_bott_index(stage);
            IndexSplit split = split_index(idx);
            if (as_json) {
                cli_detail::emit(out, Json{{"n", stage},
                                           {"index", json_of(idx)},
                                           {"positive", json_of(split.positive)},
                                           {"negative", json_of(split.negative)},
                                           {"dim_positive", split.dim_positive},
                                           {"dim_negative", split.dim_negative}});
            } else {
                out << "I(" << stage << ") = " << cli_detail::render_character(idx) << "\n";
                out << "positive part (dim " << split.dim_positive
                    << "): " << cli_detail::render_character(split.positive) << "\n";
                out << "negative part (dim " << split.dim_negative
                    << "): " << cli_detail::render_character(split.negative) << "\n";
            }
            return 0;
        }
        if (c_euler->parsed()) {
            EulerClass e = euler_class(stage);
            if (as_json) {
                cli_detail::emit(out, Json{{"n", stage},
                                           {"euler_class", json_of(e.poly)},
                                           {"degree", e.poly.weighted_degree({2, 4})},
                                           {"coefficients", e.ring_name()}});
            } else {
                out << render(e.poly) << "\n";
            }
            return 0;
        }
        if (c_polygon->parsed()) {
            HirzebruchParams params{stage, parse_rational(lambda_str)};
            MomentPolygon poly = moment_polygon(params);
            auto weights = fixed_point_weights(poly);
            if (as_json) {
                Json w = Json::array();
                for (const auto& vw : weights) w.push_back(json_of(vw));
                cli_detail::emit(out, Json{{"n", stage},
                                           {"family", family_name(params.family())},
                                           {"lambda", to_string(params.lambda)},
                                           {"mu", to_string(params.mu())},
                                           {"polygon", json_of(poly)},
                                           {"weights", std::move(w)}});
            } else {
                out << family_name(params.family()) << " surface, stage " << stage
                    << ", lambda = " << to_string(params.lambda)
                    << ", mu = " << to_string(params.mu()) << "\n";
                out << "vertices:";
                for (const auto& v : poly.vertices) out << " " << cli_detail::render_point(v);
                out << "\n" << "fixed-point weights:\n";
                for (const auto& vw : weights)
                    out << "  " << cli_detail::render_point(vw.vertex) << ": (" << vw.weights[0][0]
                        << ", " << vw.weights[0][1] << "), (" << vw.weights[1][0] << ", "
                        << vw.weights[1][1] << ")\n";
            }
            return 0;
        }
        if (c_psi->parsed()) {
            RingMap psi = psi_star(stage);
            LaurentPoly ker = kernel_generator(stage);
            if (as_json) {
                cli_detail::emit(out, Json{{"n", stage},
                                           {"map", json_of(psi)},
                                           {"target", json_of(psi.target)},
                                           {"kernel_generator", json_of(ker)}});
            } else {
                out << "restriction to " << psi.target.name << " ("
                    << cli_detail::render_presentation(psi.target) << ")\n";
                for (std::size_t i = 0; i < psi.images.size(); ++i)
                    out << "  " << psi.source.vars.names[i] << " -> " << render(psi.images[i])
                        << "\n";
                out << "kernel generator: " << render(ker) << "\n";
            }
            return 0;
        }
        if (c_relation->parsed()) {
            RelationData rel =
                relation_polynomial(level_l, cli_detail::family_of(family_str));
            if (as_json) {
                Json factors = Json::array();
                for (const auto& f : rel.factors)
                    factors.push_back(Json{{"stage", f.stage_n},
                                           {"factor", json_of(f.factor)},
                                           {"scalar_vs_kernel", to_string(f.scalar_vs_kernel)}});
                cli_detail::emit(out, Json{{"family", family_name(rel.family)},
                                           {"l", rel.l},
                                           {"degree",
                                            rel.polynomial.weighted_degree({2, 4, 4})},
                                           {"relation", json_of(rel.polynomial)},
                                           {"factors", std::move(factors)}});
            } else {
                out << render(rel.polynomial) << "\n";
                out << "degree " << rel.polynomial.weighted_degree({2, 4, 4}) << ", "
                    << rel.factors.size() << " factors:\n";
                for (const auto& f : rel.factors)
                    out << "  stage " << f.stage_n << ": " << render(f.factor) << "\n";
            }
            return 0;
        }
        if (c_bg->parsed()) {
            SurfaceFamily family = cli_detail::family_of(family_str);
            Rational lambda = parse_rational(lambda_str);
            if (coeff_str == "Q") {
                BgData bg = bg_rational_presentation(family, lambda, max_degree);
                if (as_json) {
                    cli_detail::emit(out, Json{{"family", family_name(family)},
                                               {"lambda", to_string(lambda)},
                                               {"l", bg.l},
                                               {"presentation", json_of(bg.ring)},
                                               {"hilbert", json_of(bg.hilbert)},
                                               {"groups", bg.groups},
                                               {"fiber", bg.fiber}});
                } else {
                    out << family_name(family) << " family, level " << to_string(lambda)
                        << " (l = " << bg.l << ")\n";
                    out << "presentation: " << cli_detail::render_presentation(bg.ring) << "\n";
                    out << "hilbert numerator:   "
                        << cli_detail::render_poly1(bg.hilbert.numerator) << "\n";
                    out << "hilbert denominator: "
                        << cli_detail::render_poly1(bg.hilbert.denominator) << "\n";
                    out << "dims[0.." << max_degree
                        << "]: " << cli_detail::render_dims(bg.hilbert.dims) << "\n";
                    out << "stage tables and gluing square agree\n";
                }
            } else if (coeff_str == "F2") {
                auto dims = bg_groups_dims(family, lambda, CoeffTag::F2, max_degree);
                if (bg_mod2_dims(family, lambda, max_degree) != dims)
                    throw IdentityFailed("bg: mod-2 routes disagree");
                if (as_json) {
                    cli_detail::emit(out, Json{{"family", family_name(family)},
                                               {"lambda", to_string(lambda)},
                                               {"coefficients", "F2"},
                                               {"dims", dims}});
                } else {
                    out << family_name(family) << " family, level " << to_string(lambda)
                        << ", mod-2 dimensions\n";
                    out << "dims[0.." << max_degree << "]: " << cli_detail::render_dims(dims)
                        << "\n";
                    out << "independent routes agree\n";
                }
            } else {
                if (family != SurfaceFamily::untwisted)
                    throw BadInput("bg: the half-integral module basis exists for the untwisted family");
                int l = top_stratum_index(family, lambda);
                ModuleBasisData data = half_integral_module_basis(l, max_degree);
                if (as_json) {
                    Json basis = Json::array();
                    for (const auto& b : data.basis) basis.push_back(json_of(b));
                    cli_detail::emit(out, Json{{"family", family_name(family)},
                                               {"lambda", to_string(lambda)},
                                               {"l", data.l},
                                               {"ambient", json_of(data.ambient)},
                                               {"names", data.names},
                                               {"basis", std::move(basis)},
                                               {"dims", data.dims}});
                } else {
                    out << "free module basis over the half-integral ground ring, l = "
                        << data.l << "\n";
                    out << "ambient: " << cli_detail::render_presentation(data.ambient) << "\n";
                    for (std::size_t i = 0; i < data.basis.size(); ++i)
                        out << "  " << data.names[i] << " = " << render(data.basis[i]) << "\n";
                    out << "dims[0.." << max_degree
                        << "]: " << cli_detail::render_dims(data.dims) << "\n";
                    out << "products close with coefficients integral away from 2\n";
                }
            }
            return 0;
        }
        if (c_verify->parsed()) {
            VerifyReport report = run_verification(suite, max_degree);
            if (as_json)
                cli_detail::emit(out, json_of(report));
            else
                out << render_report(report) << "\n";
            return report.all_passed ? 0 : 1;
        }
        if (c_dump->parsed()) {
            cli_detail::emit(out, catalog_json(8, 5, max_degree));
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "usage error: no verb\n";
    return 2;
}

}  // namespace ruled
