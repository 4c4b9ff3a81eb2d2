#pragma once
#include <vector>

#include "dofc/freemod.hpp"
#include "dofc/laurent.hpp"

namespace dofc {

// Hilbert series / dimension / multiplicity of a graded or filtered
// subquotient of a free module.
struct HilbertData {
    bool zero = false;  // the zero module (dimension is -inf, reported as "zero")
    int dimension = 0;  // pole order D, valid when !zero
    Rat multiplicity;   // p(1); 0 for the zero module
    RationalSeries series; // p(z)/(1-z)^D, fully reduced
    LaurentPoly q_poly;    // Q_M(z) = (1-z)^{d-D} p(z)
    int nvars = 0;
    int stab_threshold = 0; // Hilbert function == Hilbert polynomial for N >= this
};

// Numerator over (1-z)^d of the Hilbert series of ambient/<monomial module>.
LaurentPoly monomial_quotient_numerator(const std::vector<ModMono>& lt_gens,
                                        const FreeModule& ambient);
RationalSeries monomial_quotient_series(const std::vector<ModMono>& lt_gens,
                                        const FreeModule& ambient);

// Hilbert data of span(num_gens)/span(den_gens) inside the ambient free module
// (den ⊆ num is membership-checked). Works for the graded case (shifted-degree
// leading terms) and the filtered case alike, through the degree-compatible order.
HilbertData hilbert_data(const std::vector<Vec>& num_gens, const std::vector<Vec>& den_gens,
                         const FreeModule& ambient, Budget& budget);

// Assemble HilbertData from a numerator over (1-z)^d.
HilbertData hilbert_from_numerator(const LaurentPoly& num, int d);

// e(M, q): multiplicity if dimension == q, 0 if dimension < q; error if >.
Rat e_at(const HilbertData& data, int q);

// -Q_M'(1); equals e_at(data, d-1) whenever dimension <= d-1.
Rat q_derivative_multiplicity(const HilbertData& data);

// Value of the Hilbert polynomial at N (per-degree count for N >= threshold).
Rat hilbert_poly_value(const HilbertData& data, long n);

} // namespace dofc
