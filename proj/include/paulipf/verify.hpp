#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "paulipf/pseudofermion.hpp"
#include "paulipf/report.hpp"

namespace paulipf {

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Symbolic group checks: orders of the Pauli groups, generator sets,
/// central-product structure, exhaustive algebra laws.
std::vector<CheckResult> verify_group_suite(std::uint64_t seed);

/// Randomized sweep (1000 triples by default) over the ladder-operator
/// machinery; an explicit parameter list replaces the random draw.
std::vector<CheckResult> verify_pseudofermion_suite(
    std::uint64_t seed,
    const std::optional<std::vector<PseudofermionParams>>& sweep = {});

/// Twelve-matrix basis: exact rank and commutant, decomposition of both
/// circuit Hamiltonians, lifted pairs, generator triples, realization
/// identities.
std::vector<CheckResult> verify_xbasis_suite(std::uint64_t seed);

/// Dynamics: conservation, linearity, finite-difference consistency,
/// exponential-map properties.
std::vector<CheckResult> verify_circuits_suite(std::uint64_t seed);

std::vector<CheckResult> verify_all(std::uint64_t seed);

}  // namespace paulipf
