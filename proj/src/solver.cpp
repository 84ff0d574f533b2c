#include "lrh/solver.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <iostream>

#include "lrh/norms.hpp"

namespace lrh {

void SolverConfig::validate() const {
    params.validate();
    grid.validate();
    if (params.dim != grid.dim)
        throw ConfigError("SolverConfig: params.dim and grid.dim disagree");
    if (!(t_min > 0.0)) throw ConfigError("SolverConfig: t_min must be positive");
    if (!(T > t_min)) throw ConfigError("SolverConfig: T must exceed t_min");
    if (steps_per_decade < 4)
        throw ConfigError("SolverConfig: steps_per_decade must be at least 4");
    if (!(picard_tol > 0.0)) throw ConfigError("SolverConfig: picard_tol must be positive");
    if (picard_max < 1) throw ConfigError("SolverConfig: picard_max must be at least 1");
    if (eta < 0.0) throw ConfigError("SolverConfig: eta must be nonnegative");
}

std::vector<double> SolverConfig::time_grid() const {
    const double decades = std::log10(T / t_min);
    const int count = std::max(2, static_cast<int>(std::ceil(decades * steps_per_decade)) + 1);
    std::vector<double> ts(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        ts[static_cast<std::size_t>(i)] = t_min * std::pow(T / t_min, i / (count - 1.0));
    ts.front() = t_min;
    ts.back() = T;
    return ts;
}

std::size_t Trajectory::index_of(double t) const {
    for (std::size_t i = 0; i < times.size(); ++i)
        if (std::abs(times[i] - t) <= 1e-12 * std::max(1.0, std::abs(t))) return i;
    throw ConfigError("Trajectory: time is not a grid node");
}

Field Trajectory::interp(double t) const {
    if (t <= times.front()) return snaps.front();
    if (t >= times.back()) return snaps.back();
    auto it = std::upper_bound(times.begin(), times.end(), t);
    std::size_t hi = static_cast<std::size_t>(it - times.begin());
    std::size_t lo = hi - 1;
    double w = (t - times[lo]) / (times[hi] - times[lo]);
    Field out = snaps[lo];
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = (1.0 - w) * out[i] + w * snaps[hi][i];
    return out;
}

namespace {

struct Coeffs {
    bool zero = false;
    std::vector<Field> s;   // physical
    Field half_div_s;       // physical
    Field potential;        // physical, real up to roundoff
};

enum class Mode { full, seed };

// Coefficient assembly for L~ = i s.grad + (i/2)(div s) + f at stage times,
// with g(v0) cached in Fourier form and the trajectory iterate interpolated
// linearly in time. A short cache keyed on the stage time avoids rebuilding
// between the shared stages of consecutive steps.
class LinearizedOperator {
public:
    LinearizedOperator(const Trajectory* v_traj, const Field& v0,
                       const SolverConfig& cfg, Mode mode)
        : cfg_(cfg),
          mode_(mode),
          v_traj_(v_traj),
          kappa_zero_(cfg.params.kappa == 0.0),
          phase_(from_fourier(v0), cfg.params) {}

    const Coeffs& at(double t) {
        for (auto& e : cache_)
            if (e.first == t) return e.second;
        cache_.emplace_back(t, build(t));
        if (cache_.size() > 4) cache_.pop_front();
        return cache_.back().second;
    }

    // N(w) = s.grad w + (1/2)(div s) w - i W w  (the -i L~ of the
    // integrating-factor form), spectral in, dealiased spectral out
    Field apply_n(double t, const Field& w_hat) {
        const Coeffs& c = at(t);
        if (c.zero) return Field(w_hat.grid(), Space::spectral);
        const GridSpec& g = w_hat.grid();
        Field w = from_fourier(w_hat);
        std::vector<Field> dw = gradient(w_hat);
        for (auto& comp : dw) comp = from_fourier(comp);
        Field out(g, Space::physical);
        const cplx mi{0.0, -1.0};
        for (std::size_t i = 0; i < out.size(); ++i) {
            cplx acc = c.half_div_s[i] * w[i] + mi * c.potential[i] * w[i];
            for (int a = 0; a < g.dim; ++a)
                acc += c.s[static_cast<std::size_t>(a)][i] *
                       dw[static_cast<std::size_t>(a)][i];
            out[i] = acc;
        }
        Field out_hat = to_fourier(out);
        return cfg_.dealias ? dealias(out_hat) : out_hat;
    }

private:
    Coeffs build(double t) const {
        Coeffs c;
        if (kappa_zero_) {
            c.zero = true;
            return c;
        }
        const GridSpec& g = cfg_.grid;
        const double gamma = cfg_.params.gamma;
        ChiCutoffs chi = chi_cutoffs(t);
        const Field& g0_hat = phase_.g0_hat();

        Field gl0_hat = apply_multiplier(g0_hat, chi.low);
        Field phi_hat = gl0_hat;
        phi_hat *= -std::pow(t, gamma - 1.0) / (1.0 - gamma);

        c.s = gradient(phi_hat);
        for (auto& comp : c.s) comp = from_fourier(comp);
        c.half_div_s = from_fourier(laplacian(phi_hat));
        c.half_div_s *= 0.5;

        c.potential = Field(g, Space::physical);
        for (std::size_t i = 0; i < c.potential.size(); ++i) {
            cplx acc{0.0, 0.0};
            for (int a = 0; a < g.dim; ++a) {
                cplx sa = c.s[static_cast<std::size_t>(a)][i];
                acc += sa * sa;
            }
            c.potential[i] = 0.5 * acc;
        }

        if (mode_ == Mode::full) {
            const double tg2 = std::pow(t, gamma - 2.0);
            Field tilde_term = apply_multiplier(g0_hat, chi.tilde);
            tilde_term *= tg2 / (1.0 - gamma);

            Field gv_hat = to_fourier(hartree_g(v_traj_->interp(t), cfg_.params));
            Field gl_v = apply_multiplier(gv_hat, chi.low);
            Field gs_v = gv_hat;
            gs_v -= gl_v;                  // g_S(v)
            gs_v *= tg2;
            Field gl_diff = gl_v;
            gl_diff -= gl0_hat;            // g_L(v) - g_L(v0)
            gl_diff *= tg2;

            c.potential += from_fourier(tilde_term + gs_v + gl_diff);
        }
        return c;
    }

    const SolverConfig& cfg_;
    Mode mode_;
    const Trajectory* v_traj_;
    bool kappa_zero_;
    PhaseBuilder phase_;
    std::deque<std::pair<double, Coeffs>> cache_;
};

Field scaled_sum(const Field& a, double ca, const Field& b, double cb) {
    Field out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ca * a[i] + cb * b[i];
    return out;
}

// One integrating-factor RK4 step t -> t+h; the kinetic factor (with the
// eta-viscosity) is applied exactly via the propagator cache.
Field if_rk4_step(LinearizedOperator& op, const Field& v, double t, double h,
                  double eta, const GridSpec& g) {
    PropagatorCache e_half = make_propagator(g, 0.5 * h, eta);
    PropagatorCache e_full = make_propagator(g, h, eta);

    Field k1 = op.apply_n(t, v);
    Field k2 = op.apply_n(t + 0.5 * h,
                          apply_propagator(scaled_sum(v, 1.0, k1, 0.5 * h), e_half));
    Field k3 = op.apply_n(t + 0.5 * h,
                          scaled_sum(apply_propagator(v, e_half), 1.0, k2, 0.5 * h));
    Field k4 = op.apply_n(t + h, scaled_sum(apply_propagator(v, e_full), 1.0,
                                            apply_propagator(k3, e_half), h));

    Field acc = apply_propagator(scaled_sum(v, 1.0, k1, h / 6.0), e_full);
    Field mid = apply_propagator(scaled_sum(k2, 1.0, k3, 1.0), e_half);
    acc += cplx{h / 3.0, 0.0} * mid;
    acc += cplx{h / 6.0, 0.0} * k4;
    return acc;
}

Trajectory integrate(const Trajectory* v_traj, const Field& v0, const Field& v0_prime,
                     double t0, const SolverConfig& config, Mode mode) {
    config.validate();
    std::vector<double> times = config.time_grid();

    if (v_traj) {
        if (v_traj->times.size() != times.size())
            throw ConfigError("linearized_solve: trajectory not on the config time grid");
        for (std::size_t i = 0; i < times.size(); ++i)
            if (std::abs(v_traj->times[i] - times[i]) > 1e-12 * times[i])
                throw ConfigError("linearized_solve: trajectory not on the config time grid");
    }

    std::size_t i0 = times.size();
    for (std::size_t i = 0; i < times.size(); ++i)
        if (std::abs(times[i] - t0) <= 1e-12 * std::max(1.0, t0)) {
            i0 = i;
            break;
        }
    if (i0 == times.size())
        throw ConfigError("linearized_solve: t0 is not a grid node");
    if (config.eta > 0.0 && i0 != 0)
        throw DomainError("linearized_solve: backward leg impossible with eta > 0");

    Trajectory out;
    out.times = times;
    out.snaps.resize(times.size());
    out.datum = dealias(to_fourier(v0));

    LinearizedOperator op(v_traj, from_fourier(out.datum), config, mode);
    Field start = dealias(to_fourier(v0_prime));
    out.snaps[i0] = start;

    Field state = start;
    for (std::size_t k = i0; k + 1 < times.size(); ++k) {
        state = if_rk4_step(op, state, times[k], times[k + 1] - times[k], config.eta,
                            config.grid);
        out.snaps[k + 1] = state;
    }
    if (i0 > 0) {
        state = start;
        for (std::size_t k = i0; k-- > 0;) {
            state = if_rk4_step(op, state, times[k + 1], times[k] - times[k + 1],
                                config.eta, config.grid);
            out.snaps[k] = state;
        }
    }
    return out;
}

} // namespace

OperatorData assemble_L(const Field& v_snapshot, const Field& v0, double t,
                        const HartreeParams& params) {
    if (!(t > 0.0)) throw DomainError("assemble_L: t must be positive");
    SolverConfig cfg;
    cfg.params = params;
    cfg.grid = v0.grid();

    Trajectory frozen;
    frozen.times = {t};
    frozen.snaps = {to_fourier(v_snapshot)};
    frozen.datum = to_fourier(v0);

    LinearizedOperator op(&frozen, from_fourier(frozen.datum), cfg, Mode::full);
    const Coeffs& c = op.at(t);

    OperatorData data;
    if (c.zero) {
        data.s.assign(static_cast<std::size_t>(params.dim),
                      Field(v0.grid(), Space::physical));
        data.div_s = Field(v0.grid(), Space::physical);
        data.potential = Field(v0.grid(), Space::physical);
        return data;
    }
    data.s = c.s;
    data.div_s = c.half_div_s;
    data.div_s *= 2.0;
    data.potential = c.potential;
    return data;
}

Trajectory linearized_solve(const Trajectory& v_traj, const Field& v0_prime,
                            double t0, const SolverConfig& config) {
    return integrate(&v_traj, from_fourier(v_traj.datum), v0_prime, t0, config,
                     Mode::full);
}

Trajectory seed_solve(const Field& v0, const SolverConfig& config) {
    return integrate(nullptr, v0, v0, config.t_min, config, Mode::seed);
}

double sup_hrho_diff(const Trajectory& a, const Trajectory& b, double sigma) {
    if (a.snaps.size() != b.snaps.size())
        throw ConfigError("sup_hrho_diff: trajectory length mismatch");
    double sup = 0.0;
    for (std::size_t k = 0; k < a.snaps.size(); ++k) {
        Field d = a.snaps[k];
        d -= b.snaps[k];
        sup = std::max(sup, sobolev_norm(d, sigma));
    }
    return sup;
}

std::pair<Trajectory, IterationLog> picard_solve(const Field& v0,
                                                 const SolverConfig& config) {
    config.validate();
    IterationLog log;
    Trajectory current = seed_solve(v0, config);

    int bad_streak = 0;
    for (int iter = 1; iter <= config.picard_max; ++iter) {
        Trajectory next = linearized_solve(current, from_fourier(current.datum),
                                           config.t_min, config);
        double d = sup_hrho_diff(next, current, config.params.rho);
        log.diffs.push_back(d);
        log.iterations = iter;
        if (log.diffs.size() >= 2) {
            double prev = log.diffs[log.diffs.size() - 2];
            double ratio = prev > 0.0 ? d / prev : 0.0;
            log.ratios.push_back(ratio);
            if (ratio > 0.9) log.contraction_warning = true;
            bad_streak = ratio >= 1.0 ? bad_streak + 1 : 0;
        }
        current = std::move(next);
        if (d < config.picard_tol) {
            log.converged = true;
            break;
        }
        if (bad_streak >= 3)
            throw NonContractionError(
                "picard_solve: successive-difference ratio >= 1 three times in a row; "
                "shrink T");
    }
    if (log.contraction_warning)
        std::cerr << "picard_solve: warning: contraction ratio exceeded 0.9\n";
    return {std::move(current), std::move(log)};
}

double nonlinear_residual(const Trajectory& traj, const SolverConfig& config) {
    if (traj.times.size() < 3)
        throw ConfigError("nonlinear_residual: need at least 3 grid times");
    LinearizedOperator op(&traj, from_fourier(traj.datum), config, Mode::full);
    const GridSpec& g = traj.grid();

    double worst = 0.0;
    int idx[8];
    for (std::size_t k = 1; k + 1 < traj.times.size(); ++k) {
        const double hm = traj.times[k] - traj.times[k - 1];
        const double hp = traj.times[k + 1] - traj.times[k];
        const double denom = hp * hm * (hp + hm);

        Field nv = op.apply_n(traj.times[k], traj.snaps[k]);
        Field res(g, Space::spectral);
        for (std::size_t i = 0; i < res.size(); ++i) {
            decode_index(g, i, idx);
            double k2 = xi_norm2(g, idx);
            // centered non-uniform difference for d_t v
            cplx dtv = (hm * hm * traj.snaps[k + 1][i] - hp * hp * traj.snaps[k - 1][i] +
                        (hp * hp - hm * hm) * traj.snaps[k][i]) /
                       denom;
            cplx lv = 0.5 * k2 * traj.snaps[k][i] + cplx{0.0, 1.0} * nv[i];
            res[i] = cplx{0.0, 1.0} * dtv - lv;
        }
        double nrm = l2_norm(traj.snaps[k]);
        if (nrm > 0.0) worst = std::max(worst, l2_norm(res) / nrm);
    }
    return worst;
}

PipelineResult construct_mwo_pipeline(const Field& u0, const SolverConfig& config,
                                      int output_count) {
    config.validate();
    if (!(u0.grid() == config.grid.dual()))
        throw ConfigError("construct_mwo_pipeline: u0 must live on the dual grid");

    PipelineResult out;
    Field v0 = conj_fourier(u0);   // v0 = conj(F u0) = F^{-1} conj(u0)
    out.a0 = sobolev_norm(v0, config.params.rho);

    auto [traj, log] = picard_solve(v0, config);
    out.log = log;

    const double rho = config.params.rho;
    const double gamma = config.params.gamma;
    const int rho_int = static_cast<int>(std::floor(rho));
    const Field& v0_hat = traj.datum;
    PhaseBuilder phase(from_fourier(v0_hat), config.params);

    auto emit = [&](std::size_t kk) {
        const double tau = traj.times[kk];
        const Field& v_hat = traj.snaps[kk];
        out.tau.push_back(tau);
        out.t_phys.push_back(1.0 / tau);
        out.v_l2.push_back(l2_norm(v_hat));

        Field vt = free_propagate(v_hat, -tau);
        vt -= v0_hat;
        out.vc_minus_u0.push_back(sobolev_norm(vt, rho));

        PhaseState st = phase.at(tau);
        Field v_phys = from_fourier(v_hat);
        Field uc(config.grid, Space::physical);
        for (std::size_t i = 0; i < uc.size(); ++i)
            uc[i] = std::exp(cplx{0.0, -st.phi[i].real()}) * v_phys[i];

        double nuc = sobolev_norm(uc, rho);
        out.uc_hrho.push_back(nuc);
        double envelope = out.a0 *
                          std::pow(1.0 + out.a0 * out.a0 * std::pow(tau, gamma - 1.0),
                                   1.0 + rho_int);
        out.growth_ratio.push_back(envelope > 0.0 ? nuc / envelope : 0.0);

        Field u_tilde = conj_fourier(tilde_profile(uc, tau));
        out.utilde_fh.push_back(fh_norm(u_tilde, rho));

        try {
            out.u.push_back(reconstruct_u(v_phys, st, 1.0 / tau));
        } catch (const ResolutionError&) {
            out.u.push_back(std::nullopt);
        }
    };

    const std::size_t count = traj.times.size();
    const std::size_t stride = std::max<std::size_t>(
        1, count / static_cast<std::size_t>(std::max(1, output_count)));
    for (std::size_t k = 0; k < count; k += stride) emit(k);
    if (out.tau.back() != traj.times.back()) emit(count - 1);

    for (const auto& snap : traj.snaps)
        out.boundary_mass =
            std::max(out.boundary_mass, boundary_mass_fraction(from_fourier(snap),
                                                               config.grid.box / 8.0));
    out.v = std::move(traj);
    return out;
}

} // namespace lrh
