#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgp/errors.hpp"

namespace sgp {

// A finite semigroup as a validated n-by-n Cayley table, flat row-major.
// Elements are 0-based indices; labels are presentation sugar only.
struct Semigroup {
    int n = 0;
    std::vector<int> table;           // n*n entries, each in [0, n)
    std::vector<std::string> labels;  // empty, or n pairwise-distinct strings

    int at(int i, int j) const { return table[static_cast<std::size_t>(i) * n + j]; }

    bool has_labels() const { return !labels.empty(); }

    // Display form of an element: its label when present, its index otherwise.
    std::string display(int i) const {
        return has_labels() ? labels[i] : std::to_string(i);
    }

    bool is_idempotent(int i) const { return at(i, i) == i; }

    // x^k for k >= 1 by iterated multiplication.
    int power(int x, long long k) const {
        int acc = x;
        for (long long step = 1; step < k; ++step) acc = at(acc, x);
        return acc;
    }
};

// Membership mask over the elements of a parent semigroup of order n.
struct ElementSet {
    int n = 0;
    std::vector<char> mask;  // size n, 0/1

    ElementSet() = default;
    explicit ElementSet(int order) : n(order), mask(order, 0) {}

    bool contains(int i) const { return mask[i] != 0; }
    void add(int i) { mask[i] = 1; }

    int count() const {
        int c = 0;
        for (char m : mask) c += (m != 0);
        return c;
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (int i = 0; i < n; ++i)
            if (mask[i]) out.push_back(i);
        return out;
    }

    bool operator==(const ElementSet& other) const {
        return n == other.n && mask == other.mask;
    }
};

// A multiplicative map between two semigroups.
struct Morphism {
    int dom_n = 0;
    int cod_n = 0;
    std::vector<int> map;  // size dom_n

    bool is_injective() const;
    bool is_multiplicative(const Semigroup& dom, const Semigroup& cod) const;
};

// Validates entries (IndexOutOfRange, row-major first) then associativity
// (NonAssociative, lex-first witness triple). Labels optional; must be distinct.
Semigroup from_table(const std::vector<std::vector<int>>& rows,
                     std::vector<std::string> labels = {});

// Named constructions with canonical element orders:
//   A2  = {a, b, ab, ba, 0}
//   AC2 = {a, b, ab, ba, 0, c}
//   A0  = {b, ab, ba, 0}
//   C2  = {1, c}
//   B21 = {0, 1, e11, e12, e21, e22}
//   E   = {1}
//   cyclic:k, null:k, leftzero:k for k >= 1
Semigroup build_named(const std::string& name);

// Componentwise product; element (s, t) has index s*|T| + t; labels are pairs.
Semigroup direct_product(const Semigroup& s, const Semigroup& t);

// Smallest product-closed superset of seed. Throws EmptySeed.
ElementSet subsemigroup_closure(const Semigroup& s, const ElementSet& seed);

ElementSet idempotents(const Semigroup& s);

// Some s' with s*s'*s = s (smallest index), or absent when s is not regular.
std::optional<int> is_regular_element(const Semigroup& s, int elem);

// Exhaustive backtracking search for an injective multiplicative map S -> T,
// lexicographically smallest. Throws SizeBoundExceeded when |S| > bound.
std::optional<Morphism> find_embedding(const Semigroup& s, const Semigroup& t,
                                       int bound = 12);

// The semigroup induced on a product-closed subset, with index maps both ways.
// Throws InternalInvariantViolation if the subset is not closed or is empty.
struct SubSemigroup {
    Semigroup sub;
    std::vector<int> to_parent;    // sub index -> parent index (ascending)
    std::vector<int> from_parent;  // parent index -> sub index or -1
};
SubSemigroup restrict_to(const Semigroup& s, const ElementSet& members);

// The (unique, if any) element z with z*x = x*z = z for all x.
std::optional<int> zero_element(const Semigroup& s);

}  // namespace sgp
