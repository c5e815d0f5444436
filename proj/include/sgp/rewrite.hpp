#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sgp/words.hpp"

namespace sgp {

// Identities (1)-(3) as bidirectional rewrite rules. Rule variables are the
// ids of x, y, z; substitution images are arbitrary nonempty words.
enum class RuleId { eq1, eq2, eq3 };
enum class Direction { ltr, rtl };

std::string rule_name(RuleId r);
std::string direction_name(Direction d);

struct RewriteStep {
    RuleId rule = RuleId::eq1;
    Direction dir = Direction::ltr;
    std::size_t pos = 0;
    std::map<int, Word> sub;  // must bind exactly the rule's variables
};

// Replaces the factor at pos matching the substituted pattern side with the
// substituted other side. Throws PositionOutOfRange, PatternMismatch.
Word apply_step(const Word& w, const RewriteStep& step);

struct DerivationTrace {
    Word start;
    std::vector<RewriteStep> steps;
    Word end;
};

struct TraceCheck {
    bool ok = false;
    // When !ok: index of the first illegal step, or steps.size() when every
    // step replays but the final word differs from end.
    std::size_t first_bad_step = 0;
    bool end_mismatch = false;
};

TraceCheck validate_trace(const DerivationTrace& trace);

// Transforms a connected word with x, y in its alphabet into one where some
// occurrence of x appears after some occurrence of y, preserving the prefix
// up to the last x and the suffix from the first y literally. Follows the
// bordering-variable base case, the displayed Case-1 chain, and the Case-2
// recursion on a strictly smaller gap. Throws NotConnected, SameVariable,
// VariableAbsent.
DerivationTrace ensure_x_after_y(const Word& w, int x, int y);

// A word w' and a validated trace from w to the literal concatenation w w' w
// using rules (1)-(3) only. budget 0 means the default 10*|w|^2; exceeding the
// budget is a defect (InternalInvariantViolation), not an input error.
// Throws NotConnected.
std::pair<Word, DerivationTrace> regularity_certificate(const Word& w,
                                                        std::size_t budget = 0);

// Line-oriented: "start=<word>", one "rule=<id> dir=<ltr|rtl> pos=<int>
// sub x=<word> [y=<word>] [z=<word>]" per step, then "end=<word>".
std::string serialize_trace(const DerivationTrace& trace);
DerivationTrace parse_trace(const std::string& text);

}  // namespace sgp
