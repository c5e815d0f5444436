#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgp/semigroup.hpp"
#include "sgp/words.hpp"

namespace sgp {

// T_1 = idempotents, T_{i+1} = T_i * T_1, stopped at the fixpoint T_k.
// Factorizations into idempotents are stored as predecessor links; stage-1
// members link to themselves with pred = (-1, -1).
struct IdempotentClosure {
    int n = 0;
    ElementSet members;
    int stage_count = 0;
    std::vector<int> stage_of;                  // 0 for non-members
    std::vector<std::pair<int, int>> pred;      // (previous element, idempotent)

    // e_1 ... e_m with all e_i idempotent and product t, materialized from links.
    std::vector<int> factorization(int t) const;
};

IdempotentClosure idempotent_closure(const Semigroup& s);

// Absent iff S satisfies (1), (2), (3); otherwise the first failure in that
// order with the lexicographically first assignment.
std::optional<std::pair<Identity, CounterExample>> check_basis_123(const Semigroup& s);

// Absent iff t^2 = t^3 for every member of the closure; otherwise the
// smallest-index violator.
std::optional<int> combinatorial_via_eq5(const Semigroup& s, const IdempotentClosure& t);

// The eq(4) instance at n = m with x_i -> e_i, where t = e_1...e_m is the
// stored factorization; its sides evaluate to t^2 != t^3. Throws NotAWitness
// when t^2 = t^3, InternalInvariantViolation when m = 1.
std::pair<Identity, CounterExample> derive_eq4_witness(const Semigroup& s,
                                                       const IdempotentClosure& t,
                                                       int elem);

struct StageTiming {
    std::string name;  // basis123 | closure | eq5
    long long micros = 0;
};

struct MembershipReport {
    enum class Verdict { member, non_member };
    enum class CertKind { passed_all_checks, failed_identity, non_combinatorial_closure };

    Verdict verdict = Verdict::member;
    CertKind kind = CertKind::passed_all_checks;
    std::optional<Identity> identity;        // failed_identity, non_combinatorial_closure
    std::optional<CounterExample> cex;       // same
    std::optional<int> element;              // non_combinatorial_closure: the violator t
    std::vector<int> factorization;          // same: t = e_1...e_m
    std::vector<StageTiming> stages;         // stages that actually ran
};

// Member iff (1)-(3) hold and the idempotent closure satisfies x^2 = x^3.
MembershipReport membership_ac2(const Semigroup& s);

std::string report_to_text(const MembershipReport& r, const Semigroup& s);
std::string report_to_json(const MembershipReport& r, const Semigroup& s);

}  // namespace sgp
