#pragma once
#include <map>
#include <string>
#include <vector>

#include "dofc/resolution.hpp"

namespace dofc {

// One stratum of BRST generators: `count` generators of the given ghost number
// and differential order. Parity = |ghost| mod 2 (odd = fermionic).
struct BrstGenerator {
    int ghost = 0;
    int order = 0;
    long count = 0;
};

// chi_C(z) = prod_j (1 - z^j)^{factors[j]}.
struct EulerCharacteristic {
    std::map<int, long> factors;
};

// Smallest shift c for which every generator order is positive.
int min_valid_shift(const TwoSidedComplex& c);

// Generators from the two-sided Betti data: F_k^V gives ghost -k generators of
// order (degree + shift); (F_k^W)* (k >= 2) gives ghost k-1 generators of
// order (-degree + shift).
std::vector<BrstGenerator> brst_generators(const TwoSidedComplex& c, int shift);

EulerCharacteristic euler_characteristic(const std::vector<BrstGenerator>& gens);

// Minus the residue at infinity of the logarithmic derivative: sum_j j*e_j.
long dof_from_euler(const EulerCharacteristic& chi);

// chi_B(z) = (1-z)^{-d} chi_C(1/z) = sign * z^{lead_power} * prod(1-z^j)^{e_j} * (1-z)^{-d}.
struct DualEuler {
    int d = 0;
    long lead_power = 0; // z-order at 0; the residue-at-0 DoF is -lead_power
    int sign = 1;
    EulerCharacteristic pos_factors;
};

DualEuler dual_euler(const EulerCharacteristic& chi, int d);

std::string euler_str(const EulerCharacteristic& chi);
std::string poincare_str(const std::vector<BrstGenerator>& gens);
std::string dual_euler_str(const DualEuler& e);

// Whole BRST route packaged: generators, chi_C, DoF (with the residue-at-0
// cross-check asserted). shift < 0 means "use the minimal valid shift".
struct BrstData {
    int shift = 0;
    std::vector<BrstGenerator> gens;
    EulerCharacteristic chi;
    long dof = 0;
    std::string chi_str, pc_str, chib_str;
};

BrstData brst_route(const TwoSidedComplex& c, int shift = -1);

} // namespace dofc
