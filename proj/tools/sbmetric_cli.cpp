// Command-line front end: metric catalog, sampling-based axiom checks,
// ball/distance/diameter queries, certified fixed-point iteration, and the
// iterative linear solver.
//
// Exit codes: 0 success; 1 machine-detectable negative outcome (axiom FAIL,
// invalid certificate, non-converged iteration); 2 usage or input errors.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "sbmetric/axiom.hpp"
#include "sbmetric/catalog.hpp"
#include "sbmetric/fixpoint.hpp"
#include "sbmetric/linsys.hpp"
#include "sbmetric/numeric.hpp"
#include "sbmetric/topology.hpp"

using namespace sbm;

namespace {

struct CommonSampler {
    std::uint64_t seed = 0;
    std::size_t samples = 10000;
    std::vector<std::string> grid;
    std::string slack;
    std::size_t top = 10;

    void attach(CLI::App* cmd) {
        cmd->add_option("--seed", seed, "RNG seed (default 0)");
        cmd->add_option("--samples", samples, "random tuples after the grid pass (default 10000)");
        cmd->add_option("--grid", grid,
                        "grid range lo:hi:step (repeat per dimension; default -10:10:1)");
        cmd->add_option("--slack", slack, "inequality tolerance (default 1e-9)");
        cmd->add_option("--top", top, "counterexamples kept per clause (default 10)");
    }

    [[nodiscard]] SamplerConfig build() const {
        SamplerConfig cfg;
        cfg.seed = seed;
        cfg.random_count = samples;
        cfg.max_counterexamples = top;
        if (!slack.empty()) cfg.slack = parse_rational(slack);
        if (!grid.empty()) {
            cfg.grid.clear();
            for (const auto& g : grid) {
                auto c1 = g.find(':');
                auto c2 = g.find(':', c1 == std::string::npos ? c1 : c1 + 1);
                if (c1 == std::string::npos || c2 == std::string::npos)
                    throw std::invalid_argument("grid must be lo:hi:step, got '" + g + "'");
                cfg.grid.push_back(GridRange{parse_rational(g.substr(0, c1)),
                                             parse_rational(g.substr(c1 + 1, c2 - c1 - 1)),
                                             parse_rational(g.substr(c2 + 1))});
            }
        }
        return cfg;
    }
};

Point parse_point(const std::string& text) {
    std::vector<double> coords;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        std::string piece =
            comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        coords.push_back(parse_rational(piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Point::real(std::move(coords));
}

FinitePointSet parse_point_set(const std::string& text) {
    std::vector<Point> pts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto semi = text.find(';', pos);
        std::string piece =
            semi == std::string::npos ? text.substr(pos) : text.substr(pos, semi - pos);
        pts.push_back(parse_point(piece));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return FinitePointSet(std::move(pts));
}

SelfMap parse_map(const std::string& text) {
    if (text == "ex3_2") return make_ex3_2_map();
    auto colon = text.find(':');
    std::string kind = text.substr(0, colon == std::string::npos ? text.size() : colon);
    if (kind == "scale") {
        if (colon == std::string::npos) throw std::invalid_argument("scale map needs scale:<c>");
        return make_scale_map(parse_rational(text.substr(colon + 1)));
    }
    if (kind == "affine") {
        auto c2 = text.find(':', colon + 1);
        if (colon == std::string::npos || c2 == std::string::npos)
            throw std::invalid_argument("affine map needs affine:<c>:<d>");
        return make_affine_map(parse_rational(text.substr(colon + 1, c2 - colon - 1)),
                               parse_rational(text.substr(c2 + 1)));
    }
    throw std::invalid_argument("unknown map '" + text + "' (scale:<c>, affine:<c>:<d>, ex3_2)");
}

CertKind parse_kind(const std::string& text) {
    if (text == "banach") return CertKind::banach;
    if (text == "banach-sym") return CertKind::banach_symmetric;
    if (text == "generalized") return CertKind::generalized;
    if (text == "generalized-sym") return CertKind::generalized_symmetric;
    throw std::invalid_argument(
        "unknown kind '" + text + "' (banach, banach-sym, generalized, generalized-sym)");
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty())
        std::cout << payload;
    else
        write_text_file(out_path, payload);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sbmetric: ternary b-relaxed metric spaces, axiom falsification by sampling,\n"
                 "certified fixed-point iteration, and an iterative linear solver"};
    app.require_subcommand(1);
    // --h is a regular option (contraction constant), so help is --help only
    app.set_help_flag("--help", "Print help and exit");
    int exit_code = 0;

    // list-metrics
    auto* list_cmd = app.add_subcommand("list-metrics", "List the built-in metrics");
    list_cmd->callback([&] {
        std::string out;
        for (const auto& n : catalog_sb_names()) out += n + "  " + catalog_describe(n) + '\n';
        for (const auto& n : catalog_b_names())
            out += n + "  (binary)  " + catalog_describe(n) + '\n';
        std::cout << out;
    });

    // check
    auto* check_cmd = app.add_subcommand("check", "Check an axiom family against a metric");
    {
        static std::string metric, schema, b_text, out_path;
        static CommonSampler sampler;
        check_cmd->add_option("--metric", metric, "catalog metric name")->required();
        check_cmd->add_option("--schema", schema, "axiom family: b|g|gb|s|sb|sym|quasi")
            ->required();
        check_cmd->add_option("--b", b_text, "override the claimed coefficient");
        check_cmd->add_option("--out", out_path, "write the report to a file");
        sampler.attach(check_cmd);
        check_cmd->callback([&] {
            Family fam = family_from_token(schema);
            SamplerConfig cfg = sampler.build();
            std::optional<double> b_override;
            if (!b_text.empty()) b_override = parse_rational(b_text);
            AxiomReport rep = fam == Family::b_metric
                                  ? check_axioms(fam, builtin_b(metric), cfg, b_override)
                                  : check_axioms(fam, builtin_sb(metric), cfg, b_override);
            emit(rep.to_text(), out_path);
            exit_code = rep.verdict() == Verdict::fail ? 1 : 0;
        });
    }

    // symmetry
    auto* sym_cmd = app.add_subcommand("symmetry", "Check S(x,x,y) = S(y,y,x) by sampling");
    {
        static std::string metric, out_path;
        static CommonSampler sampler;
        sym_cmd->add_option("--metric", metric, "catalog metric name")->required();
        sym_cmd->add_option("--out", out_path, "write the report to a file");
        sampler.attach(sym_cmd);
        sym_cmd->callback([&] {
            auto rep = check_symmetry(builtin_sb(metric), sampler.build());
            emit(rep.to_text(), out_path);
            exit_code = rep.verdict() == Verdict::fail ? 1 : 0;
        });
    }

    // min-b
    auto* minb_cmd =
        app.add_subcommand("min-b", "Empirical lower bound on the admissible coefficient");
    {
        static std::string metric;
        static CommonSampler sampler;
        minb_cmd->add_option("--metric", metric, "catalog metric name")->required();
        sampler.attach(minb_cmd);
        minb_cmd->callback([&] {
            auto m = builtin_sb(metric);
            double est = estimate_min_b(m, sampler.build());
            std::cout << "metric=" << m.name() << " claimed_b=" << fmt_double(m.b())
                      << " empirical_b_lower=" << fmt_double(est) << '\n';
        });
    }

    // ball
    auto* ball_cmd = app.add_subcommand("ball", "Open/closed ball membership");
    {
        static std::string metric, center, y, r_text, tol_text;
        static bool closed = false;
        ball_cmd->add_option("--metric", metric, "catalog metric name")->required();
        ball_cmd->add_option("--center", center, "ball center point")->required();
        ball_cmd->add_option("--r", r_text, "radius (> 0)")->required();
        ball_cmd->add_option("--y", y, "query point")->required();
        ball_cmd->add_flag("--closed", closed, "closed ball (default open)");
        ball_cmd->add_option("--tol", tol_text, "closed-ball boundary tolerance (default 1e-12)");
        ball_cmd->callback([&] {
            auto m = builtin_sb(metric);
            Point c = parse_point(center), q = parse_point(y);
            double r = parse_rational(r_text);
            double value = m(q, q, c);
            bool inside = closed
                              ? in_closed_ball(m, c, r, q,
                                               tol_text.empty() ? 1e-12 : parse_rational(tol_text))
                              : in_open_ball(m, c, r, q);
            std::cout << "inside=" << (inside ? 1 : 0) << " value=" << fmt_double(value)
                      << " r=" << fmt_double(r) << '\n';
        });
    }

    // distance
    auto* dist_cmd = app.add_subcommand("distance", "Point-set or set-set distance");
    {
        static std::string metric, x, set_a, set_b;
        dist_cmd->add_option("--metric", metric, "catalog metric name")->required();
        dist_cmd->add_option("--x", x, "query point (point-to-set mode)");
        dist_cmd->add_option("--set-a", set_a, "first set (set-to-set mode)");
        dist_cmd->add_option("--set-b", set_b, "target set, elements ; separated")->required();
        dist_cmd->callback([&] {
            auto m = builtin_sb(metric);
            auto b = parse_point_set(set_b);
            double d = 0.0;
            if (!x.empty() && set_a.empty())
                d = point_set_distance(m, parse_point(x), b);
            else if (x.empty() && !set_a.empty())
                d = set_set_distance(m, parse_point_set(set_a), b);
            else
                throw std::invalid_argument("give exactly one of --x or --set-a");
            std::cout << "distance=" << fmt_double(d) << '\n';
        });
    }

    // diameter
    auto* diam_cmd = app.add_subcommand("diameter", "Diameter of a finite set");
    {
        static std::string metric, set_text, r_text;
        diam_cmd->add_option("--metric", metric, "catalog metric name")->required();
        diam_cmd->add_option("--set", set_text, "set elements, ; separated")->required();
        diam_cmd->add_option("--r", r_text, "also report whether the set is r-bounded");
        diam_cmd->callback([&] {
            auto m = builtin_sb(metric);
            auto a = parse_point_set(set_text);
            double d = diameter(m, a);
            std::cout << "diameter=" << fmt_double(d);
            if (!r_text.empty())
                std::cout << " bounded=" << (is_bounded(m, a, parse_rational(r_text)) ? 1 : 0);
            std::cout << '\n';
        });
    }

    // iterate
    auto* iter_cmd = app.add_subcommand("iterate", "Fixed-point iteration of a self-map");
    {
        static std::string metric, map_text, x0, eps_text, h_text, a1_text, a2_text, kind_text,
            trace_path, out_path;
        static std::size_t max_iters = 10000;
        iter_cmd->add_option("--metric", metric, "catalog metric name")->required();
        iter_cmd->add_option("--map", map_text, "scale:<c> | affine:<c>:<d> | ex3_2")->required();
        iter_cmd->add_option("--x0", x0, "start point")->required();
        iter_cmd->add_option("--eps", eps_text, "stopping accuracy (default 1e-10)");
        iter_cmd->add_option("--max-iters", max_iters, "iteration cap (default 10000)");
        iter_cmd->add_option("--h", h_text, "contraction constant for a banach certificate");
        iter_cmd->add_option("--alpha1", a1_text, "generalized certificate alpha1");
        iter_cmd->add_option("--alpha2", a2_text, "generalized certificate alpha2");
        iter_cmd->add_option("--kind", kind_text,
                             "certificate kind override (banach, banach-sym, generalized, "
                             "generalized-sym)");
        iter_cmd->add_option("--trace", trace_path, "write the full trace to a file");
        iter_cmd->add_option("--out", out_path, "write the summary to a file");
        iter_cmd->callback([&] {
            auto m = builtin_sb(metric);
            auto map = parse_map(map_text);
            double eps = eps_text.empty() ? 1e-10 : parse_rational(eps_text);

            ContractionCertificate cert;
            const bool banach_params = !h_text.empty();
            const bool generalized_params = !a1_text.empty() || !a2_text.empty();
            if (banach_params && generalized_params)
                throw std::invalid_argument("give --h or --alpha1/--alpha2, not both");
            if (banach_params) {
                CertKind kind = kind_text.empty() ? CertKind::banach : parse_kind(kind_text);
                cert = certify(kind, m, parse_rational(h_text));
            } else if (generalized_params) {
                CertKind kind = kind_text.empty() ? CertKind::generalized : parse_kind(kind_text);
                cert = certify(kind, m, a1_text.empty() ? 0.0 : parse_rational(a1_text),
                               a2_text.empty() ? 0.0 : parse_rational(a2_text));
            }
            if (cert.kind != CertKind::none && !cert.valid) {
                std::cout << cert.to_text() << '\n';
                exit_code = 1;
                return;
            }

            auto tr = picard(m, map, parse_point(x0), cert, eps, max_iters);
            std::string out = "termination=" + termination_name(tr.termination) +
                              " iterations=" + std::to_string(tr.iterations) +
                              " heuristic=" + (tr.heuristic_stop ? "1" : "0") + '\n';
            if (tr.fixed_point) out += "fixed_point=" + tr.fixed_point->to_text() + '\n';
            if (!tr.warning.empty()) out += "warning=" + tr.warning + '\n';
            emit(out, out_path);
            if (!trace_path.empty()) write_text_file(trace_path, tr.to_text());
            exit_code = tr.termination == Termination::converged ? 0 : 1;
        });
    }

    // certify
    auto* cert_cmd = app.add_subcommand("certify", "Evaluate a contraction certificate threshold");
    {
        static std::string kind_text, metric, b_text, h_text, a1_text, a2_text;
        cert_cmd->add_option("--kind", kind_text,
                             "banach | banach-sym | generalized | generalized-sym")
            ->required();
        cert_cmd->add_option("--metric", metric, "take b (and symmetry) from this metric");
        cert_cmd->add_option("--b", b_text, "coefficient b >= 1 (alternative to --metric)");
        cert_cmd->add_option("--h", h_text, "banach contraction constant");
        cert_cmd->add_option("--alpha1", a1_text, "generalized alpha1");
        cert_cmd->add_option("--alpha2", a2_text, "generalized alpha2");
        cert_cmd->callback([&] {
            CertKind kind = parse_kind(kind_text);
            const bool banach_kind =
                kind == CertKind::banach || kind == CertKind::banach_symmetric;
            double p1 = 0.0, p2 = 0.0;
            if (banach_kind) {
                if (h_text.empty()) throw std::invalid_argument("banach kinds need --h");
                p1 = parse_rational(h_text);
            } else {
                p1 = a1_text.empty() ? 0.0 : parse_rational(a1_text);
                p2 = a2_text.empty() ? 0.0 : parse_rational(a2_text);
            }
            ContractionCertificate cert;
            if (!metric.empty())
                cert = certify(kind, builtin_sb(metric), p1, p2);
            else if (!b_text.empty())
                cert = make_certificate(kind, parse_rational(b_text), p1, p2);
            else
                throw std::invalid_argument("give --metric or --b");
            std::cout << cert.to_text() << '\n';
            exit_code = cert.valid ? 0 : 1;
        });
    }

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Solve x = Ax + b by certified iteration");
    {
        static std::string matrix_path, rhs_path, eps_text, out_path, trace_path;
        static std::size_t max_iters = 10000;
        static bool standard = false;
        solve_cmd->add_option("--matrix", matrix_path, "matrix file")->required();
        solve_cmd->add_option("--rhs", rhs_path, "right-hand-side file")->required();
        solve_cmd->add_flag("--standard", standard,
                            "input is Cx = d; convert to fixed-point form first");
        solve_cmd->add_option("--eps", eps_text, "stopping accuracy (default 1e-10)");
        solve_cmd->add_option("--max-iters", max_iters, "iteration cap (default 10000)");
        solve_cmd->add_option("--out", out_path, "write the solution to a file");
        solve_cmd->add_option("--trace", trace_path, "write the iteration trace to a file");
        solve_cmd->callback([&] {
            auto sys = make_system(read_matrix_file(matrix_path), read_vector_file(rhs_path),
                                   standard ? SystemForm::standard : SystemForm::fixed_point);
            if (standard) sys = to_fixed_point_form(sys);
            double eps = eps_text.empty() ? 1e-10 : parse_rational(eps_text);
            auto res = solve_iterative(sys, eps, max_iters);
            if (!res.trace.warning.empty()) std::cerr << "warning: " << res.trace.warning << '\n';
            if (!trace_path.empty()) write_text_file(trace_path, res.trace.to_text());
            if (res.trace.termination == Termination::converged) {
                emit(format_solution(res.solution), out_path);
                exit_code = 0;
            } else {
                std::cerr << "iteration did not converge: "
                          << termination_name(res.trace.termination) << '\n';
                exit_code = 1;
            }
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
