#pragma once
#include <map>
#include <string>
#include <vector>

#include "dofc/freemod.hpp"

namespace dofc {

struct FieldDecl {
    std::string name;
    int order = 0; // theta_i
};

// Linear constant-coefficient PDE system T_a = T_{ai}(∂) φ^i = 0.
struct DiffSystem {
    int d = 0;                             // number of differentiation symbols
    std::vector<FieldDecl> fields;         // m fields
    std::vector<std::string> equations;    // n equation names
    PolyMatrix T;                          // n x m
    std::vector<std::string> varnames;     // size d (default d0..d{d-1})
    std::map<std::string, Rat> parameters; // instantiated nonzero rationals
    bool keep_zero_rows = false;

    int m() const { return (int)fields.size(); }
    int n() const { return (int)equations.size(); }
    std::vector<int> theta() const;
    ModOrder row_order() const { return ModOrder(theta()); }
    std::vector<std::string> default_varnames() const;
};

// Structural checks: shapes, unique names, zero rows (unless flagged).
void validate(const DiffSystem& sys);

// k_a = max_i(deg T_{ai} + theta_i); kept zero rows report order 0.
std::vector<int> equation_orders(const DiffSystem& sys);

// Every nonzero entry homogeneous of degree k_a - theta_i.
bool is_homogeneous(const DiffSystem& sys);

// Entrywise part of degree exactly k_a - theta_i (0 when absent).
DiffSystem symbol(const DiffSystem& sys);

// Hermitian conjugate: transpose, ∂ -> -∂, conjugated coefficients; the
// conjugate carries the dual grading (fields -k_a, equations -theta_i).
DiffSystem conjugate(const DiffSystem& sys);

bool is_lagrangian(const DiffSystem& sys);

// lt(Row(T)) = Row(lt T) as submodules of the field module.
bool is_weakly_involutive(const DiffSystem& sys, Budget& budget);

// Both the system and its conjugate weakly involutive, with compatible symbols.
bool is_doubly_weakly_involutive(const DiffSystem& sys, Budget& budget);

// Equivalent system whose rows are the reduced GB of Row(T).
DiffSystem groebner_completion(const DiffSystem& sys, Budget& budget);

// Nonzero rows of T as elements of the field module.
std::vector<Vec> nonzero_rows(const DiffSystem& sys);

} // namespace dofc
