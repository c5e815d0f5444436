#pragma once

#include <string>

#include "sgp/semigroup.hpp"
#include "sgp/structure.hpp"

namespace sgp {

// ".sgp" text format: line 1 = n; n lines of n space-separated entries in
// [0, n); optional final line "labels: s0 s1 ... s(n-1)". Trailing garbage is
// rejected. Throws IoError on structural problems; from_table errors pass
// through for bad entries.
Semigroup load_sgp(const std::string& path);
void save_sgp(const std::string& path, const Semigroup& s);

// ".rees" text format: line 1 "group <named-or-sgp-path>" (paths resolve
// relative to the .rees file), line 2 "dims |Lambda| |I|", then |Lambda| rows
// of |I| tokens, each a group element label or the zero mark "0". The group
// must carry labels and none of them may be "0".
ReesSpec load_rees_file(const std::string& path);

// A .sgp path, a .rees path, a named builder (A2, AC2, ..., cyclic:k), or
// product(a, b) with operands resolved recursively.
Semigroup resolve_input(const std::string& text);

}  // namespace sgp
