#pragma once

#include <array>
#include <optional>
#include <vector>

#include "sgp/semigroup.hpp"

namespace sgp {

// Hot loops with serial reference implementations and OpenMP variants.
// Contract: serial and parallel variants return identical results (the
// lexicographically first witness) regardless of thread count.

// First (i,j,k) in row-major order with (i*j)*k != i*(j*k), if any.
std::optional<std::array<int, 3>> associativity_violation_serial(
    const std::vector<int>& table, int n);
std::optional<std::array<int, 3>> associativity_violation_parallel(
    const std::vector<int>& table, int n);
std::optional<std::array<int, 3>> associativity_violation(
    const std::vector<int>& table, int n);

// A failing assignment for an identity whose sides are sequences over dense
// variable ids 0..n_vars-1. assignment[v] is the element bound to variable v;
// the first failure in odometer (lexicographic) order is returned.
struct AssignmentViolation {
    std::vector<int> assignment;
    int lhs_value = 0;
    int rhs_value = 0;
};

std::optional<AssignmentViolation> identity_violation_serial(
    const Semigroup& s, const std::vector<int>& lhs, const std::vector<int>& rhs,
    int n_vars);
std::optional<AssignmentViolation> identity_violation_parallel(
    const Semigroup& s, const std::vector<int>& lhs, const std::vector<int>& rhs,
    int n_vars);
std::optional<AssignmentViolation> identity_violation(
    const Semigroup& s, const std::vector<int>& lhs, const std::vector<int>& rhs,
    int n_vars);

}  // namespace sgp
