#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "daha/iso.hpp"
#include "daha/pbw.hpp"

namespace daha {

// Specialization of some of the parameters t, u, v.
struct ParamOverride {
    std::optional<Scalar> t, u, v;
    bool empty() const { return !t && !u && !v; }
    // "t=1/2,u=3" with values parsed by parse_scalar.
    static ParamOverride parse(const std::string& text);
};

// Formal parameters with the override applied; v only for type B.
AlgebraSpec make_spec(FamilyKind f, const WeylType& ty, const ParamOverride& p = {});

struct CheckOptions {
    std::optional<FamilyKind> family;
    std::optional<Family> type;
    std::optional<int> rank;
    std::optional<int> degree;
    std::uint64_t seed = 1;
    bool unsafe_rank = false;
    // Run the suite on its corrupted fixture instead of the faithful one.
    bool inject_fault = false;
    std::optional<MapKind> map;
    ParamOverride params;
};

// Rank outside the default budget without unsafe_rank.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CaseResult {
    CaseResult() = default;
    explicit CaseResult(std::string n) : name(std::move(n)) {}
    std::string name;
    bool pass = true;
    std::string detail;
    nlohmann::json counterexample;
};

struct CheckReport {
    std::string suite;
    std::uint64_t seed = 0;
    bool fault = false;
    std::vector<CaseResult> cases;
    double seconds = 0;

    bool pass() const;
    std::size_t failures() const;
    // Timing is left out unless asked for, so that reports with the same
    // seed are byte-identical.
    std::string text(bool timing = false) const;
    nlohmann::json to_json(bool timing = false) const;
};

// pbw, jacobi, conj, dunkl, anticommute, iso, center, hecke, cocycle, closedform
const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite and BudgetError for a
// rank over budget.
CheckReport run_check(const std::string& suite, const CheckOptions& opt);

}  // namespace daha
