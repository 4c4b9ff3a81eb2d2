#pragma once
#include <optional>
#include <string>

#include "dofc/dof.hpp"
#include "dofc/jets.hpp"

namespace dofc {

inline constexpr const char* kToolVersion = "0.1.0";

struct OracleReport {
    JetCounts counts;
    Rat estimate;
    std::optional<Rat> exact; // finite-difference DoF, when computable
};

struct Report {
    std::optional<PipelineResult> pipe; // absent for method=oracle-only runs
    std::optional<Rat> ext_only_dof;    // set when only the homological route ran
    std::optional<OracleReport> oracle;
    long long budget_used = 0;
    double seconds = 0;
};

// JSON emitter; schema:
// {"dof", "methods", "flags", "equation_orders", "identity_orders",
//  "symmetry_orders", "qf", "euler_characteristic", "conjugate_dof",
//  "oracle", "meta"}
std::string emit_json(const Report& r, const DiffSystem& sys);

// Human summary; the last line is always "DoF = <n>".
std::string emit_text(const Report& r, const DiffSystem& sys);

} // namespace dofc
