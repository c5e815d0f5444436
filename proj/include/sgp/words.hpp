#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sgp/semigroup.hpp"

namespace sgp {

// Variables are small integer ids in canonical order x,y,z,t,u,v,w,a,...,s;
// lexicographic comparisons on variables use id order throughout.
inline constexpr const char* kCanonicalVars = "xyztuvwabcdefghijklmnopqrs";

// -1 when the character is not a known variable letter.
int var_id_from_char(char c);

// Ids 0..25 render as their canonical letter; larger ids (possible only in
// generated eq4 instances) render as "v{id}", display-only.
std::string var_name(int id);

// A nonempty sequence of variable ids.
struct Word {
    std::vector<int> letters;

    bool operator==(const Word& other) const { return letters == other.letters; }
    bool operator!=(const Word& other) const { return !(*this == other); }
    std::size_t size() const { return letters.size(); }

    std::set<int> alphabet() const;
    std::map<int, int> counts() const;
};

// Grammar: word := factor+ ; factor := letter ('^' int)? ; letter := [a-z].
// Whitespace is ignored; exponents must be >= 1. Throws SyntaxError.
Word parse_word(const std::string& text);

// Raw letter string (no ^ compression); inverse of parse_word for ids < 26.
std::string word_text(const Word& w);

struct Identity {
    enum class Tag { eq1, eq2, eq3, eq4, eq5, rsn, custom };

    Word lhs, rhs;
    Tag tag = Tag::custom;
    int param = 0;  // n for eq4/rsn tags

    std::string tag_text() const;
};

// "u = v" with optional whitespace. Throws SyntaxError.
Identity parse_identity(const std::string& text);

std::string identity_text(const Identity& id);

// G(w): vertices = alf(w); edge (x, y) iff xy is a factor of w; initial and
// final vertices are the first and last letters. Equality is literal over
// variable names, no isomorphism.
struct WordGraph {
    std::set<int> vertices;
    std::set<std::pair<int, int>> edges;
    int initial = -1;
    int final_vertex = -1;

    bool operator==(const WordGraph& other) const {
        return vertices == other.vertices && edges == other.edges &&
               initial == other.initial && final_vertex == other.final_vertex;
    }
};

WordGraph word_graph(const Word& w);

// Sorted edge list, one "x -> y" line per edge (source then target by variable
// name), then "initial: x" and "final: y" lines.
std::string render_graph(const WordGraph& g);

// u = v holds in AC2 iff G(u) = G(v) literally and every per-variable
// occurrence count agrees mod 2.
bool holds_in_ac2(const Word& u, const Word& v);

// Left-to-right fold of the table. Throws UnboundVariable.
int eval_word(const Semigroup& s, const Word& w, const std::map<int, int>& assignment);

struct CounterExample {
    std::map<int, int> assignment;  // variable id -> element index
    int lhs_value = 0;
    int rhs_value = 0;
};

// Absent iff the identity holds in S; otherwise the lexicographically first
// failing assignment (variables in id order, elements ascending).
std::optional<CounterExample> check_identity(const Semigroup& s, const Identity& id);

// (1) x^2=x^4, (2) xyx=(xy)^3 x, (3) xyxzx=xzxyx, then (4) at n = 2..n_max.
std::vector<Identity> basis_identities(int n_max);

// x^2=x^{n+2}, xyx=(xy)^{n+1}x, xyx(zx)^n=x(zx)^n yx at the given n >= 1.
std::vector<Identity> rsn_identities(int n);

// Length-1 words are not connected by convention; otherwise strong
// connectivity of G(w).
bool is_connected(const Word& w);

// Maximal factorization into factors with pairwise alphabet-disjoint splits;
// a word is connected iff this has exactly one factor (for length >= 2).
std::vector<Word> prime_decompose(const Word& w);

// All canonical words (first occurrences renamed to x, y, z, ...) over at most
// k_vars variables, length <= max_len, in length-then-lexicographic order.
std::vector<Word> enumerate_words(int k_vars, int max_len);

}  // namespace sgp
