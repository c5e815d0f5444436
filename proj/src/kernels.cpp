#include "sgp/kernels.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sgp {

namespace {

// Parallel kick-in threshold: below this the serial scan wins on overhead.
constexpr int kParallelOrder = 64;

int eval_side(const Semigroup& s, const std::vector<int>& side,
              const std::vector<int>& assignment) {
    int acc = assignment[side[0]];
    for (std::size_t i = 1; i < side.size(); ++i)
        acc = s.at(acc, assignment[side[i]]);
    return acc;
}

// Scans assignments with assignment[0] fixed to v0, odometer order on the
// remaining coordinates; first violation or absent.
std::optional<AssignmentViolation> scan_fixed_first(
    const Semigroup& s, const std::vector<int>& lhs, const std::vector<int>& rhs,
    int n_vars, int v0) {
    std::vector<int> a(n_vars, 0);
    a[0] = v0;
    while (true) {
        int lv = eval_side(s, lhs, a);
        int rv = eval_side(s, rhs, a);
        if (lv != rv) return AssignmentViolation{a, lv, rv};
        int pos = n_vars - 1;
        while (pos >= 1 && a[pos] == s.n - 1) {
            a[pos] = 0;
            --pos;
        }
        if (pos < 1) return std::nullopt;
        ++a[pos];
    }
}

}  // namespace

std::optional<std::array<int, 3>> associativity_violation_serial(
    const std::vector<int>& table, int n) {
    auto at = [&](int i, int j) { return table[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int ij = at(i, j);
            for (int k = 0; k < n; ++k)
                if (at(ij, k) != at(i, at(j, k))) return std::array<int, 3>{i, j, k};
        }
    return std::nullopt;
}

std::optional<std::array<int, 3>> associativity_violation_parallel(
    const std::vector<int>& table, int n) {
    auto at = [&](int i, int j) { return table[static_cast<std::size_t>(i) * n + j]; };
    std::vector<std::array<int, 3>> per_row(n, {-1, -1, -1});
    std::atomic<int> best_row{n};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < n; ++i) {
        if (i > best_row.load(std::memory_order_relaxed)) continue;
        for (int j = 0; j < n; ++j) {
            int ij = at(i, j);
            for (int k = 0; k < n; ++k) {
                if (at(ij, k) != at(i, at(j, k))) {
                    per_row[i] = {i, j, k};
                    int cur = best_row.load(std::memory_order_relaxed);
                    while (i < cur &&
                           !best_row.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
                    }
                    goto next_row;
                }
            }
        }
    next_row:;
    }
    for (int i = 0; i < n; ++i)
        if (per_row[i][0] >= 0) return per_row[i];
    return std::nullopt;
}

std::optional<std::array<int, 3>> associativity_violation(const std::vector<int>& table,
                                                          int n) {
    if (n >= kParallelOrder) return associativity_violation_parallel(table, n);
    return associativity_violation_serial(table, n);
}

std::optional<AssignmentViolation> identity_violation_serial(
    const Semigroup& s, const std::vector<int>& lhs, const std::vector<int>& rhs,
    int n_vars) {
    for (int v0 = 0; v0 < s.n; ++v0)
        if (auto hit = scan_fixed_first(s, lhs, rhs, n_vars, v0)) return hit;
    return std::nullopt;
}

std::optional<AssignmentViolation> identity_violation_parallel(
    const Semigroup& s, const std::vector<int>& lhs, const std::vector<int>& rhs,
    int n_vars) {
    // Sharded on the first variable: assignment order is first-coordinate
    // major, so the smallest shard with a hit holds the global first.
    std::vector<std::optional<AssignmentViolation>> per_v0(s.n);
    std::atomic<int> best{s.n};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int v0 = 0; v0 < s.n; ++v0) {
        if (v0 > best.load(std::memory_order_relaxed)) continue;
        auto hit = scan_fixed_first(s, lhs, rhs, n_vars, v0);
        if (hit) {
            per_v0[v0] = std::move(hit);
            int cur = best.load(std::memory_order_relaxed);
            while (v0 < cur &&
                   !best.compare_exchange_weak(cur, v0, std::memory_order_relaxed)) {
            }
        }
    }
    for (int v0 = 0; v0 < s.n; ++v0)
        if (per_v0[v0]) return per_v0[v0];
    return std::nullopt;
}

std::optional<AssignmentViolation> identity_violation(const Semigroup& s,
                                                      const std::vector<int>& lhs,
                                                      const std::vector<int>& rhs,
                                                      int n_vars) {
    if (s.n >= kParallelOrder && n_vars >= 2)
        return identity_violation_parallel(s, lhs, rhs, n_vars);
    return identity_violation_serial(s, lhs, rhs, n_vars);
}

}  // namespace sgp
