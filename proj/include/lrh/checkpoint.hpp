#pragma once
#include <string>

#include "lrh/solver.hpp"

namespace lrh {

// Flat binary trajectory checkpoint (little-endian 64-bit floats):
//   magic "LRHT", u32 version, u32 dim, u32 points, f64 box,
//   f64 gamma, f64 kappa, f64 rho, f64 eta,
//   u64 snapshot count, f64 times[count],
//   datum then snapshots as interleaved (re, im) f64 per sample,
// plus a JSON sidecar <path>.json carrying the same header as metadata.
void write_trajectory(const std::string& path, const Trajectory& traj,
                      const SolverConfig& config,
                      const std::string& manifest_hash = "");

Trajectory read_trajectory(const std::string& path);

} // namespace lrh
