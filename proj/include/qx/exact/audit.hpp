#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qx/exact/category.hpp"

namespace qx::exact {

struct AxiomResult {
    std::string axiom;
    bool passed = true;
    std::size_t checked = 0;
    // Samples whose construction left the bounded universe; reported, not failures.
    std::size_t out_of_universe = 0;
    std::string counterexample;
};

struct AuditReport {
    std::string category;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::vector<AxiomResult> axioms;

    bool passed() const;
    nlohmann::json to_json() const;
};

/// Samples isos, monos, epis and squares and checks the exact-structure
/// axioms E1 (isos are cofibrations and fibrations), E2 (pushouts of monos and
/// pullbacks of epis exist, stay mono/epi and are bicartesian) and E3 (a mono
/// is the kernel of its cokernel, an epi the cokernel of its kernel).
AuditReport audit_exactness_axioms(const Category& cat, std::size_t samples, std::uint64_t seed);

}  // namespace qx::exact
