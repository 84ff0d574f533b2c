#pragma once
#include <optional>
#include <string>
#include <vector>

#include "lrh/hartree_ops.hpp"
#include "lrh/pc_transforms.hpp"
#include "lrh/propagator.hpp"

namespace lrh {

// Evolution setup for the transformed equation on (0, T]: geometric time grid
// from t_min (the numerical stand-in for initial time zero) resolving the
// t^{gamma-2} coefficient singularity.
struct SolverConfig {
    HartreeParams params{};
    GridSpec grid{};
    double t_min = 1e-3;
    double T = 0.5;
    int steps_per_decade = 160;
    double eta = 0.0;          // parabolic regularization strength
    double picard_tol = 1e-8;  // sup-in-time H^rho difference threshold
    int picard_max = 30;
    bool dealias = true;

    void validate() const;
    std::vector<double> time_grid() const;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<Field> snaps;   // spectral snapshots, one per grid time
    Field datum;                // v0 (spectral)

    const GridSpec& grid() const { return datum.grid(); }
    std::size_t index_of(double t) const;        // exact grid node lookup
    Field interp(double t) const;                // linear in time, spectral
};

// Operator data of L(v) = -(1/2) Delta_s + ... at one time: the transport
// fields s and div s are kept separate from the real scalar potential
// W = |s|^2/2 + t^{g-2} g_S(v) + (1-g)^{-1} t^{g-2} chi~_L g(v0)
//   + t^{g-2} (g_L(v) - g_L(v0)).
struct OperatorData {
    std::vector<Field> s;   // physical, real
    Field div_s;            // physical, real
    Field potential;        // physical; real part is W, imag part ~ roundoff
};

OperatorData assemble_L(const Field& v_snapshot, const Field& v0, double t,
                        const HartreeParams& params);

// Forward/backward integration of i d_t v' = L(v) v' across the full time
// grid, starting from v'(t0) = v0_prime, with the kinetic part (including the
// eta-viscosity) applied exactly and the transport+potential part advanced by
// a 4-stage explicit scheme on the integrating-factor form.
Trajectory linearized_solve(const Trajectory& v_traj, const Field& v0_prime,
                            double t0, const SolverConfig& config);

// The V = 0 member of the iteration set: i d_t v = -(1/2) Delta_s v with
// v(t_min) = v0. Seeds the Picard loop.
Trajectory seed_solve(const Field& v0, const SolverConfig& config);

struct IterationLog {
    std::vector<double> diffs;    // sup-in-time H^rho successive differences
    std::vector<double> ratios;   // diffs[k] / diffs[k-1]
    int iterations = 0;
    bool converged = false;
    bool contraction_warning = false;   // some ratio exceeded 0.9
};

std::pair<Trajectory, IterationLog> picard_solve(const Field& v0,
                                                 const SolverConfig& config);

// max over interior grid times of ||i d_t v - L(v) v|| / ||v||, centered
// non-uniform differences in time. Direct PDE-residual certificate.
double nonlinear_residual(const Trajectory& traj, const SolverConfig& config);

// sup over grid times of ||a(t) - b(t); H^sigma|| (inhomogeneous)
double sup_hrho_diff(const Trajectory& a, const Trajectory& b, double sigma);

// Full modified-wave-operator pipeline: datum u0 in FH^rho lives on the dual
// of the evolution grid; v0 = conj(F u0); after the Picard fixed point the
// solution is carried back through u_c = e^{-i phi} v, the pseudoconformal
// inversion and the dilated-phase reconstruction.
struct PipelineResult {
    Trajectory v;
    IterationLog log;
    double a0 = 0.0;                     // ||u0; FH^rho|| = ||v0; H^rho||
    std::vector<double> tau;             // transformed output times
    std::vector<double> t_phys;          // 1/tau
    std::vector<double> v_l2;            // ||v(tau)||
    std::vector<double> vc_minus_u0;     // ||v~_c(1/tau) - u0; FH^rho||
    std::vector<double> uc_hrho;         // ||u_c(tau); H^rho||
    std::vector<double> utilde_fh;       // ||u~(1/tau); FH^rho|| via inversion
    std::vector<double> growth_ratio;    // uc_hrho / (a0 (1 + a0^2 tau^{g-1})^{1+[rho]})
    std::vector<std::optional<Field>> u; // u(1/tau) where representable
    double boundary_mass = 0.0;          // max over snapshots at run end
};

PipelineResult construct_mwo_pipeline(const Field& u0, const SolverConfig& config,
                                      int output_count = 40);

} // namespace lrh
