#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sgp/semigroup.hpp"

namespace sgp {

// Green's relations computed over S^1 (identity adjoined for reachability
// only): xS^1 = {x} + row_x, S^1x = {x} + col_x; classes are equal-ideal sets,
// numbered by smallest member. D is the join of R and L (= J for finite).
struct GreensData {
    int n = 0;
    std::vector<int> r_of, l_of, h_of, d_of;
    int n_r = 0, n_l = 0, n_h = 0, n_d = 0;

    std::vector<int> h_class_of(int elem) const;
};

GreensData greens_relations(const Semigroup& s);

// Combinatorial: every H-class a singleton; cross-checked against
// x^n = x^{n+1} at n = |S|. Disagreement throws InternalInvariantViolation.
bool is_aperiodic(const Semigroup& s);

struct SeparabilityReport {
    bool separable = false;
    struct Witness {
        int p, q, e, f;  // pe != qe and fp != fq
    };
    std::vector<Witness> witnesses;          // all ordered pairs when separable
    std::pair<int, int> failing{-1, -1};     // first failing pair otherwise
};

// For every ordered pair of distinct elements, the first idempotents e, f
// (ascending) with pe != qe and fp != fq.
SeparabilityReport is_E_separable(const Semigroup& s);

// M^0(G; I, Lambda; P): triples (i, g, lambda) plus zero, with
// (i,g,l)(j,h,m) = 0 when p_{l,j} = 0 and (i, g p_{l,j} h, m) otherwise.
// sandwich[l][i] is a group element index or -1 for zero.
struct ReesSpec {
    Semigroup group;
    int identity = 0;
    int rows = 0;  // |Lambda|
    int cols = 0;  // |I|
    std::vector<std::vector<int>> sandwich;
};

// Validates the spec (group axioms, dims, row/column regularity) and builds
// the semigroup; element (i,g,l) has index (i*|G| + g)*rows + l, zero is last,
// labels "(i,g,l)" and "0". Throws InvalidSpec.
Semigroup rees_semigroup(const ReesSpec& spec);

// Zero present, S^2 != {0}, and no two-sided ideal other than {0} and S.
bool is_completely_0_simple(const Semigroup& s);

// A ReesSpec whose rees_semigroup is isomorphic to S: I = nonzero R-classes,
// Lambda = nonzero L-classes (ordered by smallest member), G = the H-class of
// the smallest-index nonzero idempotent e, p_{l,i} = q_l * r_i with r_i, q_l
// the smallest-index representatives of R_i cap L_{l0} and R_{i0} cap L_l.
// Throws NotCompletelyZeroSimple.
ReesSpec rees_representation(const Semigroup& s);

// Entrywise rescaling u_l * p_{l,i} * v_i making every nonzero entry the group
// identity, when possible: a BFS spanning forest of the bipartite nonzero-
// incidence graph fixes the scalers, non-forest edges impose consistency
// equations. On failure returns absent and, when cycle_out is non-null, the
// violating cycle as alternating (lambda, i) sandwich positions.
std::optional<ReesSpec> graham_houghton_normalize(
    const ReesSpec& spec, std::vector<std::pair<int, int>>* cycle_out = nullptr);

}  // namespace sgp
