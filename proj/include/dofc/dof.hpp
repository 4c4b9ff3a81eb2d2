#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dofc/brst.hpp"
#include "dofc/hilbert.hpp"
#include "dofc/resolution.hpp"
#include "dofc/system.hpp"

namespace dofc {

// Homological route: the DoF count is the multiplicity of the subquotient
// U = Ker R* / Row(T) at dimension d-1, where R = gauge generators (syzygies
// of the columns of T). Zero-order filtration: field weights are ignored here.
struct ExtResult {
    HilbertData u;
    Rat dof;
    std::vector<Vec> gauge_gens; // R, elements of the rank-m field module
};

ExtResult dof_ext(const DiffSystem& sys, Budget& budget);

// Graded route: -Q_F'(1) of the two-sided complex, plus the Betti order data.
// pre: homogeneous system.
struct GradedResult {
    TwoSidedComplex complex;
    Rat dof;
    std::vector<int> equation_orders;
    BettiOrders orders;
};

GradedResult dof_graded(const DiffSystem& sys, Budget& budget);

// Random span/solution-set-preserving rewrite of the system (row operations,
// column operations on fields, added/removed trivial rows/columns, scalings,
// permutations), deterministic in the seed.
DiffSystem equivalence_variant(const DiffSystem& sys, std::uint64_t seed);

struct PipelineOptions {
    bool conjugate = false;
    bool want_brst = true;
    int brst_shift = -1; // -1 = minimal valid shift
};

struct PipelineResult {
    Rat dof;
    ExtResult ext;
    std::optional<GradedResult> graded;
    std::optional<BrstData> brst;

    bool homogeneous = false;
    bool lagrangian = false;
    bool gauge_invariant = false;
    bool weakly_involutive = false;
    bool doubly_weakly_involutive = false;
    bool used_symbol = false;       // graded/BRST routes ran on the symbol system
    bool completed = false;         // a Groebner completion step was taken
    bool completed_dwi = false;     // ...and the completed system passed the check
    bool dwi_unverified = false;    // graded/BRST routes skipped

    std::optional<Rat> conjugate_dof;
    bool conjugate_equal = false;
    bool conjugate_proved = false; // equality is guaranteed, not just observed

    // present when completed = true: the equivalent involutive-form system
    // (jet counts should be taken on this system, not on the input)
    std::optional<DiffSystem> completed_system;

    std::vector<std::string> notes;
};

// Full analysis: Ext route always; graded + BRST on the system itself when
// homogeneous, on the symbol when (after completion if needed) the system is
// doubly weakly involutive; routes must agree or an InternalError is thrown.
PipelineResult dof_pipeline(const DiffSystem& sys, const PipelineOptions& opts, Budget& budget);

struct ConjugationCheck {
    Rat dof;
    Rat conjugate_dof;
    bool equal = false;
};

ConjugationCheck conjugation_check(const DiffSystem& sys, Budget& budget);

} // namespace dofc
