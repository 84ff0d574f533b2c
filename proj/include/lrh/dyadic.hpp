#pragma once
#include <vector>

#include "lrh/multipliers.hpp"
#include "lrh/norms.hpp"

namespace lrh {

// Dyadic Paley-Littlewood decomposition built from the smooth radial cutoff
// psi0^(xi) = chi(|xi|) (1 on |xi| <= 1, 0 on |xi| >= 2):
//   psi_j^(xi) = psi0^(2^{-j} xi),  phi_j^ = psi_j^ - psi_{j-1}^,
//   u_j = phi_j * u,  S_j(u) = psi_j * u.
// Only shells intersecting the frequency lattice are materialized; their index
// range is recorded so Besov-type sums are comparable across resolutions.
struct DyadicBlock {
    int j;
    Field block;
};

struct DyadicDecomposition {
    int j_min = 0;                     // shells j_min..j_max are retained
    int j_max = 0;
    int nu = 1;
    std::vector<DyadicBlock> blocks;      // u_j
    std::vector<DyadicBlock> smoothing;   // S_j(u)
    Field low_rest;                       // S_{j_min-1}(u), carries the mean

    Field reconstruct() const;            // low_rest + sum of blocks
    // phi~_j^(nu) * u = sum_{|j-k| <= nu} u_k restricted to retained shells
    Field tilde_block(int j) const;
};

// Shell index range whose annuli (2^{j-1}, 2^{j+1}) meet the lattice.
std::pair<int, int> dyadic_shell_range(const GridSpec& g);

DyadicDecomposition dyadic_decompose(const Field& u, int nu = 1);

double psi_hat(int j, double k);   // psi_j^ at |xi| = k
double phi_hat(int j, double k);   // phi_j^ at |xi| = k

// Homogeneous Besov norm on the retained shells:
// || 2^{j sigma} ||u_j||_r ||_{l^q over j}. r or q may be infinity.
double besov_norm(const Field& u, double sigma, double r, double q);

// Same, restricted to a pinned shell window [j_lo, j_hi] (clipped to the grid
// range). Checks pin the window of their base grid so constants stay
// comparable across one resolution doubling.
double besov_norm(const Field& u, double sigma, double r, double q, int j_lo, int j_hi);

} // namespace lrh
