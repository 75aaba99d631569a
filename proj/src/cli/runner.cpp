#include "hyperhs/cli/runner.hpp"

#include "hyperhs/error.hpp"
#include "hyperhs/goe/goe.hpp"
#include "hyperhs/goe/sigma_rep.hpp"
#include "hyperhs/goe/spectral.hpp"
#include "hyperhs/hs/boundary.hpp"
#include "hyperhs/hs/closed_form.hpp"
#include "hyperhs/hs/convention.hpp"
#include "hyperhs/hs/mc.hpp"
#include "hyperhs/hs/quad11.hpp"
#include "hyperhs/opq/collision.hpp"
#include "hyperhs/opq/lightcone.hpp"
#include "hyperhs/opq/matrix_io.hpp"
#include "hyperhs/opq/random.hpp"
#include "hyperhs/opq/spectrum.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace hyperhs::cli {

namespace {

using cd = std::complex<double>;

std::string join(const std::vector<double>& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ";" : "") + format_double(v[k]);
    return out;
}

opq::SignatureMetric metric_of(const RunConfig& cfg) { return opq::make_metric(cfg.p, cfg.q); }

std::vector<double> schedule_or(const RunConfig& cfg, std::vector<double> fallback) {
    return cfg.eps_schedule.empty() ? fallback : cfg.eps_schedule;
}

std::size_t samples_or(const RunConfig& cfg, std::size_t fallback) {
    return cfg.n_samples ? cfg.n_samples : fallback;
}

opq::SourceMatrix source_or_default(const RunConfig& cfg, const std::string& key) {
    const opq::SignatureMetric m = metric_of(cfg);
    return opq::make_source(m, cfg.has(key) ? cfg.matrix(key) : m.matrix());
}

std::vector<opq::SourceMatrix> source_list(const RunConfig& cfg) {
    const opq::SignatureMetric m = metric_of(cfg);
    std::vector<opq::SourceMatrix> out;
    if (cfg.has("A_list")) {
        for (const auto& a : cfg.matrices("A_list")) out.push_back(opq::make_source(m, a));
    } else if (cfg.has("A")) {
        out.push_back(opq::make_source(m, cfg.matrix("A")));
    } else {
        out.push_back(opq::make_source(m, m.matrix()));
    }
    return out;
}

hs::MCOptions mc_options(const RunConfig& cfg, double eps, std::string stream) {
    hs::MCOptions opt;
    opt.eps = eps;
    opt.n_samples = samples_or(cfg, 1'000'000);
    opt.seed = *cfg.seed;
    opt.ablate_sign = cfg.ablate_sign;
    opt.threads = cfg.threads;
    opt.classify_tol = cfg.tol;
    opt.proposal_scale = cfg.number("proposal_scale", 0.0);
    opt.stream = std::move(stream);
    return opt;
}

RunOutcome run_classify(const RunConfig& cfg) {
    const opq::BSymMatrix r = opq::BSymMatrix::from_matrix(metric_of(cfg), cfg.matrix("R"));
    const opq::ClassificationSummary s = opq::summarize(opq::spectral_classify(r, cfg.tol));
    RunOutcome out;
    out.doc.command = "classify";
    out.doc.columns = {"status", "motif", "sign", "eigenvalues", "min_bnorm", "complex_pairs", "detail"};
    const std::string motif = s.motif ? s.motif->to_string() : "";
    double min_bn = s.bnorms.empty() ? 0.0 : *std::min_element(s.bnorms.begin(), s.bnorms.end());
    out.doc.add_row({to_string(s.status), motif, std::int64_t{s.sign}, join(s.eigenvalues), min_bn,
                     std::int64_t{s.complex_pair_count}, s.detail});
    out.doc.extra["status"] = to_string(s.status);
    if (s.motif) {
        out.doc.extra["motif"] = motif;
        out.doc.extra["sign"] = s.sign;
    }
    out.doc.extra["eigenvalues"] = s.eigenvalues;
    if (!s.detail.empty()) out.doc.extra["detail"] = s.detail;
    return out;
}

RunOutcome run_lightcone(const RunConfig& cfg) {
    const opq::BSymMatrix r = opq::BSymMatrix::from_matrix(metric_of(cfg), cfg.matrix("R"));
    const opq::LightconeCoords c = opq::lightcone(r);
    const double residual = (opq::from_lightcone(c).matrix() - r.matrix()).cwiseAbs().maxCoeff();
    const double prod = c.xi * c.eta;
    const std::string domain = prod > 0.0 ? (c.xi > 0.0 ? "space_time" : "time_space")
                               : prod == 0.0 ? "boundary"
                                             : "outside";
    RunOutcome out;
    out.doc.command = "lightcone";
    out.doc.columns = {"lambda", "xi", "eta", "xi_eta", "domain", "roundtrip_residual"};
    out.doc.add_row({c.lambda, c.xi, c.eta, prod, domain, residual});
    if (residual != 0.0) out.failures.push_back("light-cone round trip is not exact");
    return out;
}

RunOutcome run_verify_closed(const RunConfig& cfg) {
    RunOutcome out;
    out.doc.command = "verify-closed";
    out.doc.columns = {"engine", "a11", "a22", "a12", "b0", "b1", "lambda_factor_re", "lambda_factor_im",
                       "xi_eta_factor_re", "xi_eta_factor_im", "total_re", "total_im", "normalized_re",
                       "normalized_im", "target", "residual"};
    const double max_residual = cfg.number("max_residual", 1e-12);
    for (const auto& a : source_list(cfg)) {
        const hs::ClosedFormTrace t = hs::closed_form_I11(a);
        const double target = hs::convention_target(hs::Convention::HALF, a.trace_sq());
        const double residual = std::abs(t.normalized - target) / target;
        out.doc.add_row({std::string("closed"), a.matrix()(0, 0), a.matrix()(1, 1), a.matrix()(0, 1), t.b0, t.b1,
                         t.lambda_factor.real(), t.lambda_factor.imag(), t.xi_eta_factor.real(),
                         t.xi_eta_factor.imag(), t.total.real(), t.total.imag(), t.normalized.real(),
                         t.normalized.imag(), target, residual});
        if (!(residual < max_residual)) out.failures.push_back("closed-form residual " + format_double(residual));
    }
    return out;
}

RunOutcome run_verify_quad(const RunConfig& cfg) {
    const opq::SourceMatrix a = source_or_default(cfg, "A");
    hs::Quad11Grid grid;
    grid.t_panels = static_cast<std::size_t>(cfg.integer("t_panels", static_cast<int>(grid.t_panels)));
    grid.tau_panel_width = cfg.number("tau_panel_width", grid.tau_panel_width);
    const double target = hs::convention_target(hs::Convention::THM, a.trace_sq());
    const double max_rel = cfg.number("max_rel_error", 0.02);

    RunOutcome out;
    out.doc.command = "verify-quad";
    out.doc.columns = {"eps", "engine", "value_re", "value_im", "normalized_re", "normalized_im", "target",
                       "rel_error", "ablated", "nodes"};
    double prev = std::numeric_limits<double>::infinity();
    for (double eps : schedule_or(cfg, {0.2, 0.1, 0.05, 0.02})) {
        const hs::Quad11Result r = hs::quad_verify_11(a, eps, grid, cfg.ablate_sign);
        const double rel = std::abs(r.normalized - target) / target;
        out.doc.add_row({eps, std::string("quad"), r.value.real(), r.value.imag(), r.normalized.real(),
                         r.normalized.imag(), target, rel, std::int64_t{cfg.ablate_sign},
                         static_cast<std::uint64_t>(r.nodes)});
        if (rel > prev) out.failures.push_back("relative error increased at eps=" + format_double(eps));
        prev = rel;
    }
    if (!(prev < max_rel))
        out.failures.push_back("relative error " + format_double(prev) + " at smallest eps exceeds " +
                               format_double(max_rel));
    return out;
}

RunOutcome run_verify_mc(const RunConfig& cfg) {
    const opq::SignatureMetric m = metric_of(cfg);
    const opq::SourceMatrix a = source_or_default(cfg, "A");
    const bool is11 = m.p() == 1 && m.q() == 1;
    RunOutcome out;
    out.doc.command = "verify-mc";
    out.doc.seed = cfg.seed;
    out.doc.columns = {"eps", "engine", "value_re", "value_im", "stderr", "n_accepted", "n_samples", "seed",
                       "stderr_re", "stderr_im", "acceptance_rate", "ess", "weight_bound_violations",
                       "compensated_re", "compensated_im", "quad_re", "quad_im", "z_vs_quad"};
    for (double eps : schedule_or(cfg, {0.1})) {
        const hs::MCEstimate e = hs::mc_estimate(m, a, mc_options(cfg, eps, "cli.verify-mc"));
        const cd comp = e.value * std::exp(a.trace_sq());
        double quad_re = std::nan(""), quad_im = std::nan(""), z = std::nan("");
        if (is11) {
            const cd q = hs::quad_verify_11(a, eps, {}, cfg.ablate_sign).value;
            quad_re = q.real();
            quad_im = q.imag();
            z = hs::z_score(e.value - q, {e.stderr_re, e.stderr_im});
            if (!(z < 3.0)) out.failures.push_back("MC vs quadrature z-score " + format_double(z));
        }
        if (e.weight_bound_violations) out.failures.push_back("importance weights exceeded their bound");
        out.doc.add_row({eps, std::string("mc"), e.value.real(), e.value.imag(), e.stderr_modulus(),
                         static_cast<std::uint64_t>(e.n_accepted), static_cast<std::uint64_t>(e.n_samples),
                         e.seed, e.stderr_re, e.stderr_im, e.acceptance_rate(), e.ess,
                         static_cast<std::uint64_t>(e.weight_bound_violations), comp.real(), comp.imag(), quad_re,
                         quad_im, z});
    }
    return out;
}

RunOutcome run_boundary_scan(const RunConfig& cfg) {
    std::vector<double> bs;
    if (cfg.has("b_values")) {
        bs = cfg.params["b_values"].get<std::vector<double>>();
    } else {
        bs.push_back(cfg.number("b", 1.0));
    }
    RunOutcome out;
    out.doc.command = "boundary-scan";
    out.doc.columns = {"eps", "b", "analytic", "numeric_re", "numeric_im", "rel_discrepancy", "method"};
    const double max_rel = cfg.number("max_rel_discrepancy", 1e-8);
    const auto eps_list = schedule_or(cfg, {1.0, 0.5, 0.1, 0.05});
    for (double b : bs) {
        double prev = std::numeric_limits<double>::infinity();
        for (double eps : eps_list) {
            const hs::BoundaryEtaResult r = hs::boundary_eta_integral(eps, b);
            out.doc.add_row({eps, b, r.analytic, r.numeric.real(), r.numeric.imag(), r.relative_discrepancy(),
                             to_string(r.method)});
            if (!(r.relative_discrepancy() <= max_rel))
                out.failures.push_back("numeric and analytic differ at eps=" + format_double(eps));
            if (!(r.analytic < prev)) out.failures.push_back("analytic value not decreasing at eps=" + format_double(eps));
            prev = r.analytic;
        }
    }
    return out;
}

RunOutcome run_sign_ablation(const RunConfig& cfg) {
    const opq::SignatureMetric m = metric_of(cfg);
    std::vector<opq::SourceMatrix> as;
    if (cfg.has("A_list")) {
        as = source_list(cfg);
    } else {
        Eigen::MatrixXd a2 = m.matrix();
        a2(0, 0) = 1.5;
        as = {opq::make_source(m, m.matrix()), opq::make_source(m, a2)};
    }
    if (as.size() < 2) throw InvalidArgument("sign-ablation needs at least two source matrices");
    const double eps = schedule_or(cfg, {0.1}).back();
    std::vector<hs::MCObservable> obs;
    for (bool ablate : {false, true})
        for (const auto& a : as) obs.push_back({a, ablate});
    const hs::MCBatch batch = hs::mc_estimate_batch(m, obs, mc_options(cfg, eps, "cli.sign-ablation"));

    RunOutcome out;
    out.doc.command = "sign-ablation";
    out.doc.seed = cfg.seed;
    out.doc.columns = {"mode", "a_index", "eps", "value_re", "value_im", "stderr_re", "stderr_im",
                       "compensated_re", "compensated_im", "z_vs_first", "n_samples", "seed"};
    const std::size_t k = as.size();
    double max_z_signed = 0.0, max_z_ablated = 0.0;
    for (std::size_t mode = 0; mode < 2; ++mode)
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t idx = mode * k + i;
            const hs::MCEstimate& e = batch.estimates[idx];
            const double z = i == 0 ? 0.0 : hs::compare_compensated(batch, idx, mode * k).z_score;
            double& zmax = mode ? max_z_ablated : max_z_signed;
            zmax = std::max(zmax, z);
            const cd comp = batch.compensated(idx);
            out.doc.add_row({std::string(mode ? "ablated" : "signed"), static_cast<std::uint64_t>(i), eps,
                             e.value.real(), e.value.imag(), e.stderr_re, e.stderr_im, comp.real(), comp.imag(), z,
                             static_cast<std::uint64_t>(e.n_samples), e.seed});
        }
    out.doc.extra["max_z_signed"] = max_z_signed;
    out.doc.extra["max_z_ablated"] = max_z_ablated;
    if (!(max_z_signed < 3.0)) out.failures.push_back("signed compensated values differ, z=" + format_double(max_z_signed));
    if (!(max_z_ablated > 5.0))
        out.failures.push_back("ablated compensated values agree, z=" + format_double(max_z_ablated));
    return out;
}

RunOutcome run_deriv_test(const RunConfig& cfg) {
    const opq::SignatureMetric m = metric_of(cfg);
    const opq::SourceMatrix a = source_or_default(cfg, "A");
    std::vector<Eigen::MatrixXd> dirs;
    if (cfg.has("directions")) {
        dirs = cfg.matrices("directions");
    } else {
        util::Rng rng(util::derive_seed(*cfg.seed, "cli.directions", 0));
        for (int k = 0; k < cfg.integer("n_directions", 5); ++k) {
            Eigen::MatrixXd d = opq::random_bsym(m, rng).matrix();
            dirs.push_back(d / d.norm());
        }
    }
    const double h = cfg.number("h", 0.05);
    const double eps = schedule_or(cfg, {0.1}).back();
    const auto results = hs::directional_derivative_tests(m, a, dirs, h, mc_options(cfg, eps, "cli.deriv-test"));

    RunOutcome out;
    out.doc.command = "deriv-test";
    out.doc.seed = cfg.seed;
    out.doc.columns = {"direction", "eps", "h", "ablated", "derivative_re", "derivative_im", "stderr_re",
                       "stderr_im", "z_score", "direction_rows"};
    double max_z = 0.0;
    for (std::size_t k = 0; k < results.size(); ++k) {
        const auto& r = results[k];
        max_z = std::max(max_z, r.z_score);
        out.doc.add_row({static_cast<std::uint64_t>(k), eps, h, std::int64_t{cfg.ablate_sign}, r.derivative.real(),
                         r.derivative.imag(), r.error.re, r.error.im, r.z_score,
                         opq::matrix_to_rows(dirs[k]).dump()});
    }
    if (cfg.ablate_sign) {
        if (!(max_z > 5.0)) out.failures.push_back("ablated derivative is not significant, z=" + format_double(max_z));
    } else if (!(max_z < 3.0)) {
        out.failures.push_back("directional derivative is significant, z=" + format_double(max_z));
    }
    return out;
}

goe::GOEConfig goe_config(const RunConfig& cfg) {
    goe::GOEConfig g;
    g.N = cfg.integer("N", 8);
    g.b = cfg.number("b", 1.0);
    goe::validate(g);
    return g;
}

goe::StochasticOptions goe_options(const RunConfig& cfg) {
    goe::StochasticOptions o;
    o.n_samples = samples_or(cfg, 100'000);
    o.seed = *cfg.seed;
    o.threads = cfg.threads;
    return o;
}

RunOutcome run_goe_check(const RunConfig& cfg) {
    const goe::GOEConfig g = goe_config(cfg);
    std::vector<Eigen::MatrixXd> ks;
    if (cfg.has("K_list")) {
        for (const auto& item : cfg.params["K_list"]) {
            Eigen::MatrixXd k = opq::matrix_from_rows(item);
            if (k.rows() != g.N || k.cols() != g.N) throw DimensionMismatch("K must be N x N");
            ks.push_back(k);
        }
    } else {
        util::Rng rng(util::derive_seed(*cfg.seed, "cli.goe-K", 0));
        std::uniform_real_distribution<double> u(-1.0, 1.0), norm(0.5, 3.0);
        for (int n = 0; n < cfg.integer("n_random_K", 20); ++n) {
            Eigen::MatrixXd k(g.N, g.N);
            for (int i = 0; i < g.N; ++i)
                for (int j = i; j < g.N; ++j) k(i, j) = k(j, i) = u(rng);
            ks.push_back(k * (norm(rng) / k.norm()));
        }
    }
    RunOutcome out;
    out.doc.command = "goe-check";
    out.doc.seed = cfg.seed;
    out.doc.columns = {"k_index", "N", "b", "target", "empirical_re", "empirical_im", "stderr_re", "stderr_im",
                       "z_score", "n_samples", "seed"};
    goe::StochasticOptions o = goe_options(cfg);
    for (std::size_t i = 0; i < ks.size(); ++i) {
        o.seed = util::derive_seed(*cfg.seed, "cli.goe-check", i);
        const goe::FourierCheck f = goe::check_goe_fourier(g, ks[i], o);
        out.doc.add_row({static_cast<std::uint64_t>(i), std::int64_t{g.N}, g.b, f.target, f.empirical.real(),
                         f.empirical.imag(), f.stderr_re, f.stderr_im, f.z_score,
                         static_cast<std::uint64_t>(f.n_samples), *cfg.seed});
        if (!(f.z_score < 3.0)) out.failures.push_back("Fourier check z-score " + format_double(f.z_score));
    }
    return out;
}

std::vector<cd> z_list(const RunConfig& cfg, const std::string& key, std::vector<cd> fallback) {
    if (!cfg.has(key)) return fallback;
    std::vector<cd> out;
    for (const auto& pair : cfg.params[key]) {
        if (!pair.is_array() || pair.size() != 2) throw InvalidArgument("z values must be [re, im] pairs");
        out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return out;
}

RunOutcome run_goe_compare(const RunConfig& cfg) {
    const goe::GOEConfig g = goe_config(cfg);
    const goe::SpectralArgs z1(z_list(cfg, "z1", {{0.5, 1.0}, {0.5, -1.0}}), 1);
    const goe::SpectralArgs z2(z_list(cfg, "z2", {{-0.5, 1.0}, {-0.5, -1.0}}), 1);
    goe::SigmaRepOptions rep_opt;
    rep_opt.radius = cfg.number("rep_radius", rep_opt.radius);
    const goe::FBatch batch = goe::F_mc_batch({z1, z2}, g, goe_options(cfg));
    const goe::SigmaRepResult r1 = goe::sigma_rep_F11(z1, g, rep_opt);
    const goe::SigmaRepResult r2 = goe::sigma_rep_F11(z2, g, rep_opt);
    const cd mc_ratio = batch.ratio(0, 1);
    const util::ComplexError mc_err = batch.ratio_error(0, 1);
    const cd rep_ratio = r1.value / r2.value;
    const double z = hs::z_score(mc_ratio - rep_ratio, mc_err);

    RunOutcome out;
    out.doc.command = "goe-compare";
    out.doc.seed = cfg.seed;
    out.doc.columns = {"label", "z1_re", "z1_im", "z2_re", "z2_im", "N", "b", "engine", "value_re", "value_im",
                       "stderr", "n_samples", "seed"};
    auto row = [&](const std::string& label, const goe::SpectralArgs& args, const std::string& engine, cd v,
                   double se) {
        out.doc.add_row({label, args.z()[0].real(), args.z()[0].imag(), args.z()[1].real(), args.z()[1].imag(),
                         std::int64_t{g.N}, g.b, engine, v.real(), v.imag(), se,
                         static_cast<std::uint64_t>(batch.estimates[0].n_samples), *cfg.seed});
    };
    row("z(1)", z1, "mc", batch.estimates[0].value,
        std::hypot(batch.estimates[0].stderr_re, batch.estimates[0].stderr_im));
    row("z(2)", z2, "mc", batch.estimates[1].value,
        std::hypot(batch.estimates[1].stderr_re, batch.estimates[1].stderr_im));
    row("z(1)", z1, "sigma_rep", r1.value, r1.error_estimate);
    row("z(2)", z2, "sigma_rep", r2.value, r2.error_estimate);
    row("ratio", z1, "mc", mc_ratio, mc_err.modulus());
    row("ratio", z1, "sigma_rep", rep_ratio, 0.0);
    out.doc.extra["ratio_z_score"] = z;
    if (!(z < 3.0)) out.failures.push_back("sigma-model and GOE ratios differ, z=" + format_double(z));
    return out;
}

RunOutcome run_collision(const RunConfig& cfg) {
    const opq::SignatureMetric m = metric_of(cfg);
    const opq::BSymMatrix r0 = opq::BSymMatrix::from_matrix(m, cfg.matrix("R0"));
    const opq::BSymMatrix r1 = opq::BSymMatrix::from_matrix(m, cfg.matrix("R1"));
    const opq::CollisionReport rep = opq::trace_collision_path(r0, r1, cfg.integer("steps", 100), cfg.tol);

    RunOutcome out;
    out.doc.command = "collision-trace";
    out.doc.columns = {"t", "status", "motif", "sign", "bnorm_min", "bnorm_second", "phase"};
    const double t_exit = rep.crossing ? (*rep.crossing)[1] : 2.0;
    for (const auto& pt : rep.points) {
        std::vector<double> bn = pt.summary.bnorms;
        std::sort(bn.begin(), bn.end());
        const double b0 = bn.empty() ? std::nan("") : bn[0];
        const double b1 = bn.size() > 1 ? bn[1] : b0;
        const std::string phase = pt.t < t_exit ? "inside" : pt.t == t_exit ? "crossing" : "after";
        out.doc.add_row({pt.t, to_string(pt.summary.status), pt.summary.motif ? pt.summary.motif->to_string() : "",
                         std::int64_t{pt.summary.sign}, b0, b1, phase});
    }
    if (rep.refined_t) {
        const auto& last = rep.approach.back();
        out.doc.add_row({*rep.refined_t, std::string("boundary"), std::string(""), std::int64_t{0},
                         last.smallest_bnorms[0], last.smallest_bnorms[1], std::string("refined")});
        out.doc.extra["crossing"] = {(*rep.crossing)[0], (*rep.crossing)[1]};
        out.doc.extra["refined_t"] = *rep.refined_t;
    } else {
        out.doc.extra["crossing"] = nullptr;
    }
    return out;
}

}  // namespace

RunOutcome execute(const RunConfig& cfg) {
    validate(cfg);
    switch (cfg.command) {
        case Command::Classify: return run_classify(cfg);
        case Command::Lightcone: return run_lightcone(cfg);
        case Command::VerifyClosed: return run_verify_closed(cfg);
        case Command::VerifyQuad: return run_verify_quad(cfg);
        case Command::VerifyMc: return run_verify_mc(cfg);
        case Command::BoundaryScan: return run_boundary_scan(cfg);
        case Command::SignAblation: return run_sign_ablation(cfg);
        case Command::DerivTest: return run_deriv_test(cfg);
        case Command::GoeCheck: return run_goe_check(cfg);
        case Command::GoeCompare: return run_goe_compare(cfg);
        case Command::CollisionTrace: return run_collision(cfg);
    }
    throw Error("unhandled command");
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    RunOutcome outcome;
    try {
        outcome = execute(cfg);
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed configuration: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    const std::string text = render(outcome.doc, cfg.format);
    if (cfg.out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << cfg.out_path << " for writing\n";
            return kExitInputError;
        }
        file << text;
    }
    for (const auto& f : outcome.failures) err << (cfg.check ? "check failed: " : "note: ") << f << "\n";
    return cfg.check && !outcome.failures.empty() ? kExitVerificationFailed : kExitOk;
}

}  // namespace hyperhs::cli
