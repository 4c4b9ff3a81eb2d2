#pragma once
#include <vector>

#include "dofc/system.hpp"

namespace dofc {

// Independent jet-space oracle: exact linear algebra over the coefficients of
// truncated Taylor expansions, no Groebner machinery involved.
//
// For each jet order N, the prolongations of the equations up to order N span
// a subspace of the order-N jet space of the fields; its codimension is the
// per-jet solution count h_sigma. Gauge directions are the prolongations of
// the gauge generators; subtracting them gives h_u for the gauge-fixed count.
struct JetCounts {
    int d = 0, m = 0;
    int N = 0;
    // cumulative (all jets of order <= D), index D = 0..N
    std::vector<long> h_sigma_cum;
    std::vector<long> h_gauge_cum;
    std::vector<long> h_u_cum;
    // per-degree slices (difference of consecutive cumulative values)
    std::vector<long> h_sigma;
    std::vector<long> h_gauge;
    std::vector<long> h_u;
};

// gauge_gens may be empty (no gauge symmetry). Orders used for the equation
// prolongations are the plain entry degrees (zero-order filtration).
JetCounts jet_counts(const DiffSystem& sys, int N, const std::vector<Vec>& gauge_gens);

long jet_solution_dim(const DiffSystem& sys, int N);                       // cumulative h_sigma
long jet_gauge_dim(const std::vector<Vec>& gauge_gens, int d, int m, int N); // cumulative rank

// N * h_u(N) / ((d-1) * C(N+d-1, d-1)), the classical strength-style DoF
// estimate from the per-degree gauge-fixed count; pre: d >= 2.
Rat einstein_estimate(const JetCounts& jc);

// Exact DoF from the oracle: (d-2)-th finite difference of the per-degree
// h_u at N; exact once N is past the Hilbert-polynomial threshold.
Rat oracle_dof(const JetCounts& jc);

} // namespace dofc
