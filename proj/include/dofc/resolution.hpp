#pragma once
#include <vector>

#include "dofc/freemod.hpp"
#include "dofc/laurent.hpp"

namespace dofc {

// Free resolution ... -> F_2 -> F_1 -> F_0 (-> M -> 0).
// diffs[k] is the matrix of F_{k+1} -> F_k (rank F_k rows, rank F_{k+1} cols).
struct FreeResolution {
    std::vector<FreeModule> terms;
    std::vector<PolyMatrix> diffs;
    bool minimal = false;

    int length() const { return (int)terms.size() - 1; }
};

// Build a resolution from the presentation F_1 -> F_0 by iterated syzygies.
// Stops when the syzygy module vanishes or after max_length differentials.
FreeResolution resolve(const FreeModule& f0, const FreeModule& f1, const PolyMatrix& d1,
                       int max_length, Budget& budget);

// Prune unit entries of the differentials (Gaussian cancellation of split
// summands); pre: graded input (all differentials homogeneous of degree 0).
// Generators of the first keep_terms modules F_0..F_{keep_terms-1} are kept
// intact: cancellation is applied only to differentials F_{k+1} -> F_k with
// k >= keep_terms.
FreeResolution minimize(FreeResolution res, int keep_terms = 0);

// Per homological index, the sorted generator degrees.
std::vector<std::vector<int>> betti_degrees(const FreeResolution& res);

// Sanity: d_{k-1} ∘ d_k = 0 for all k.
bool compositions_vanish(const FreeResolution& res);

bool is_graded(const FreeResolution& res);

struct DiffSystem;

// Two-sided complex F: resolution of V = coker T* at homological indices k >= 0
// glued with the dual of a resolution of W = coker T at indices <= -1.
struct TwoSidedComplex {
    FreeResolution v_part; // F_0^V degrees theta_i, F_1^V degrees k_a
    FreeResolution w_part; // F_0^W degrees -k_a, F_1^W degrees -theta_i
    LaurentPoly qf;        // sum_k (-1)^k Q_{F_k^V} - sum_{k>=2} (-1)^k Q_{(F_k^W)*}
};

// pre: homogeneous system (pass the symbol system otherwise). On each side
// F_0 and F_1 are fixed by the presentation itself (so the seam degrees are
// exactly theta and k even when T has constant entries); the syzygy tail
// F_2, F_3, ... is minimized.
TwoSidedComplex two_sided_complex(const DiffSystem& sys, Budget& budget);

struct BettiOrders {
    std::vector<std::vector<int>> identity_orders; // stage k: degrees of F_{k+2}^V
    std::vector<std::vector<int>> symmetry_orders; // stage k: degrees of F_{k+2}^W
};

BettiOrders betti_orders(const TwoSidedComplex& c);

} // namespace dofc
