#include "sgp/rewrite.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sgp/errors.hpp"

namespace sgp {

std::string rule_name(RuleId r) {
    switch (r) {
        case RuleId::eq1: return "eq1";
        case RuleId::eq2: return "eq2";
        case RuleId::eq3: return "eq3";
    }
    return "";
}

std::string direction_name(Direction d) { return d == Direction::ltr ? "ltr" : "rtl"; }

namespace {

// Rule sides over rule-variable ids 0 (x), 1 (y), 2 (z).
struct RuleSides {
    std::vector<int> lhs, rhs;
    int n_vars;
};

const RuleSides& rule_sides(RuleId r) {
    static const RuleSides eq1{{0, 0}, {0, 0, 0, 0}, 1};
    static const RuleSides eq2{{0, 1, 0}, {0, 1, 0, 1, 0, 1, 0}, 2};
    static const RuleSides eq3{{0, 1, 0, 2, 0}, {0, 2, 0, 1, 0}, 3};
    switch (r) {
        case RuleId::eq1: return eq1;
        case RuleId::eq2: return eq2;
        case RuleId::eq3: return eq3;
    }
    return eq1;
}

Word substitute(const std::vector<int>& side, const std::map<int, Word>& sub) {
    Word out;
    for (int v : side) {
        const Word& img = sub.at(v);
        out.letters.insert(out.letters.end(), img.letters.begin(), img.letters.end());
    }
    return out;
}

Word concat(std::initializer_list<const Word*> parts) {
    Word out;
    for (const Word* p : parts)
        out.letters.insert(out.letters.end(), p->letters.begin(), p->letters.end());
    return out;
}

Word letter(int v) {
    Word out;
    out.letters.push_back(v);
    return out;
}

// Letters [from, to) as a word; may be empty (only ever used inside images).
Word factor(const Word& w, std::size_t from, std::size_t to) {
    Word out;
    out.letters.assign(w.letters.begin() + from, w.letters.begin() + to);
    return out;
}

int last_occ(const Word& w, int v) {
    for (int i = static_cast<int>(w.size()); i-- > 0;)
        if (w.letters[i] == v) return i;
    return -1;
}

int first_occ(const Word& w, int v) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w.letters[i] == v) return static_cast<int>(i);
    return -1;
}

bool x_after_y(const Word& w, int x, int y) { return last_occ(w, x) > first_occ(w, y); }

struct TraceBuilder {
    Word cur;
    std::vector<RewriteStep> steps;
    std::size_t budget;

    void apply(RewriteStep step) {
        if (steps.size() >= budget)
            throw InternalInvariantViolation("derivation exceeded its step budget");
        cur = apply_step(cur, step);
        steps.push_back(std::move(step));
    }
};

}  // namespace

Word apply_step(const Word& w, const RewriteStep& step) {
    const RuleSides& rs = rule_sides(step.rule);
    for (int v = 0; v < rs.n_vars; ++v) {
        auto it = step.sub.find(v);
        if (it == step.sub.end() || it->second.letters.empty()) throw UnboundVariable(v);
    }
    const std::vector<int>& from = step.dir == Direction::ltr ? rs.lhs : rs.rhs;
    const std::vector<int>& to = step.dir == Direction::ltr ? rs.rhs : rs.lhs;
    Word pattern = substitute(from, step.sub);
    if (step.pos >= w.size()) throw PositionOutOfRange(step.pos);
    if (step.pos + pattern.size() > w.size()) throw PatternMismatch(step.pos);
    for (std::size_t i = 0; i < pattern.size(); ++i)
        if (w.letters[step.pos + i] != pattern.letters[i]) throw PatternMismatch(step.pos);
    Word replacement = substitute(to, step.sub);
    Word out;
    out.letters.reserve(w.size() - pattern.size() + replacement.size());
    out.letters.insert(out.letters.end(), w.letters.begin(),
                       w.letters.begin() + static_cast<long>(step.pos));
    out.letters.insert(out.letters.end(), replacement.letters.begin(),
                       replacement.letters.end());
    out.letters.insert(out.letters.end(),
                       w.letters.begin() + static_cast<long>(step.pos + pattern.size()),
                       w.letters.end());
    return out;
}

TraceCheck validate_trace(const DerivationTrace& trace) {
    Word cur = trace.start;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        try {
            cur = apply_step(cur, trace.steps[i]);
        } catch (const Error&) {
            return {false, i, false};
        }
    }
    if (cur != trace.end) return {false, trace.steps.size(), true};
    return {true, 0, false};
}

namespace {

RewriteStep make_step(RuleId rule, std::size_t pos, std::map<int, Word> sub) {
    RewriteStep s;
    s.rule = rule;
    s.dir = Direction::ltr;
    s.pos = pos;
    s.sub = std::move(sub);
    return s;
}

// Core of ensure_x_after_y, shared with regularity_certificate. Preconditions
// (distinct variables, both present, connected word) are the caller's.
void ensure_loop(TraceBuilder& tb, int x, int y) {
    for (;;) {
        const Word& w = tb.cur;
        int px = last_occ(w, x);
        int py = first_occ(w, y);
        if (px > py) return;

        // Not satisfied: every x occurrence is before every y occurrence.
        // Per-variable extremes relative to the cut positions px, py.
        std::map<int, int> right_before_px;  // rightmost occurrence < px
        std::map<int, int> left_after_py;    // leftmost occurrence > py
        std::map<int, int> first_of, last_of;
        for (int i = 0; i < static_cast<int>(w.size()); ++i) {
            int v = w.letters[i];
            if (i < px) right_before_px[v] = i;
            if (i > py && !left_after_py.count(v)) left_after_py[v] = i;
            if (!first_of.count(v)) first_of[v] = i;
            last_of[v] = i;
        }

        // Bordering variable: one occurrence left of the last x, one right of
        // the first y; the factor between them contains that x and that y, so
        // one eq2 application plants an x after a y. Closest pair wins, then
        // the smaller variable id.
        int best_v = -1, best_l = 0, best_r = 0;
        for (auto [v, l] : right_before_px) {
            auto it = left_after_py.find(v);
            if (it == left_after_py.end()) continue;
            int r = it->second;
            if (best_v < 0 || r - l < best_r - best_l) {
                best_v = v;
                best_l = l;
                best_r = r;
            }
        }
        if (best_v >= 0) {
            tb.apply(make_step(RuleId::eq2, best_l,
                               {{0, letter(best_v)}, {1, factor(w, best_l + 1, best_r)}}));
            if (!x_after_y(tb.cur, x, y))
                throw InternalInvariantViolation("bordering step left the pair unordered");
            return;
        }

        // No bordering variable. Scan the middle segment for occurrences of
        // left-side variables (also occurring before px) and right-side
        // variables (also occurring after py); connectivity guarantees both.
        int qL = -1, pR = -1;
        for (int p = px + 1; p < py; ++p) {
            int v = w.letters[p];
            if (right_before_px.count(v)) qL = p;
            if (pR < 0 && left_after_py.count(v)) pR = p;
        }
        if (qL < 0 || pR < 0)
            throw InternalInvariantViolation("connected word with an inert middle segment");

        if (pR < qL) {
            // Case 1: some right-side variable t occurs before some left-side
            // variable z inside the middle. Three applications plant an x
            // after a y while keeping the prefix up to the last x and the
            // suffix from the first y intact.
            int z = w.letters[qL], t = w.letters[pR];
            int pz1 = right_before_px.at(z);
            int pt3 = left_after_py.at(t);
            int pt2 = pR, pz2 = qL;
            Word w12 = factor(w, pz1 + 1, px);
            Word w21 = factor(w, px + 1, pt2);
            Word w22 = factor(w, pt2 + 1, pz2);
            Word w23 = factor(w, pz2 + 1, py);
            Word w31 = factor(w, py + 1, pt3);
            Word lx = letter(x), ly = letter(y), lz = letter(z), lt = letter(t);
            Word m = concat({&w12, &lx, &w21, &lt, &w22});
            std::size_t len1 = 1 + m.size();
            std::size_t shift = 2 + w12.size() + w21.size();
            Word after_t = concat({&w22, &lz, &w23, &ly, &w31});
            tb.apply(make_step(RuleId::eq2, pz1, {{0, lz}, {1, m}}));
            tb.apply(make_step(RuleId::eq2, pz1 + 2 * len1 + shift,
                               {{0, lt}, {1, after_t}}));
            Word swap_y = concat({&w22, &lz, &w12, &lx, &w21});
            tb.apply(make_step(RuleId::eq3, pz1 + len1 + shift,
                               {{0, lt}, {1, swap_y}, {2, after_t}}));
            if (!x_after_y(tb.cur, x, y))
                throw InternalInvariantViolation("interchange chain left the pair unordered");
            return;
        }

        // Case 2: all left-side occurrences precede all right-side ones in the
        // middle. Recurse on that pair; its gap is strictly smaller, and once
        // it is ordered the pair (x, y) falls to one of the cases above.
        int zs = w.letters[qL], ts = w.letters[pR];
        if (zs == ts)
            throw InternalInvariantViolation("interchange recursion on a single variable");
        if (!(pR - qL < py - px))
            throw InternalInvariantViolation("interchange recursion did not shrink the gap");
        ensure_loop(tb, zs, ts);
    }
}

std::size_t default_budget(const Word& w) { return 10 * w.size() * w.size(); }

Direction flipped(Direction d) { return d == Direction::ltr ? Direction::rtl : Direction::ltr; }

}  // namespace

DerivationTrace ensure_x_after_y(const Word& w, int x, int y) {
    if (!is_connected(w)) throw NotConnected();
    if (x == y) throw SameVariable();
    if (first_occ(w, x) < 0) throw VariableAbsent(x);
    if (first_occ(w, y) < 0) throw VariableAbsent(y);
    TraceBuilder tb{w, {}, default_budget(w)};
    ensure_loop(tb, x, y);
    return {w, std::move(tb.steps), std::move(tb.cur)};
}

std::pair<Word, DerivationTrace> regularity_certificate(const Word& w, std::size_t budget) {
    if (!is_connected(w)) throw NotConnected();
    TraceBuilder tb{w, {}, budget == 0 ? default_budget(w) : budget};
    int first = w.letters.front();
    int last = w.letters.back();
    Word wprime;

    if (first == last) {
        if (w.size() == 2) {
            // Square of a variable: two eq1 applications give v^2 -> v^6.
            tb.apply(make_step(RuleId::eq1, 0, {{0, letter(first)}}));
            tb.apply(make_step(RuleId::eq1, 0, {{0, letter(first)}}));
            wprime = w;
        } else {
            // Same-letter border: w = v u v with u nonempty, one eq2 step.
            Word u = factor(w, 1, w.size() - 1);
            tb.apply(make_step(RuleId::eq2, 0, {{0, letter(first)}, {1, u}}));
            wprime = u;
        }
    } else {
        // Distinct borders x ... y: order the pair, then the block derivation.
        int x = first, y = last;
        ensure_loop(tb, x, y);
        Word wt = tb.cur;
        std::size_t ensure_count = tb.steps.size();

        int p = first_occ(wt, y);
        int q = -1;
        for (int i = p + 1; i < static_cast<int>(wt.size()); ++i)
            if (wt.letters[i] == x) {
                q = i;
                break;
            }
        if (q < 0)
            throw InternalInvariantViolation("ordered word lost its interleaved pair");
        Word w1 = factor(wt, 1, p);
        Word w2 = factor(wt, p + 1, q);
        Word w3 = factor(wt, q + 1, wt.size() - 1);
        Word lx = letter(x), ly = letter(y);

        tb.apply(make_step(RuleId::eq2, 0, {{0, lx}, {1, concat({&w1, &ly, &w2})}}));
        std::size_t c = 2 + w1.size() + w2.size();
        tb.apply(make_step(RuleId::eq2, 2 * c + 1 + w1.size(),
                           {{0, ly}, {1, concat({&w2, &lx, &w3})}}));

        // The word is now x w1 y (A y)(A y)(B y)(B y)(B y) with A = w2 x w1
        // and B = w2 x w3; three adjacent swaps reorder the blocks to
        // B A B A B, which reads w~ w' w~.
        Word blk_a = concat({&w2, &lx, &w1});
        Word blk_b = concat({&w2, &lx, &w3});
        std::vector<const Word*> blocks{&blk_a, &blk_a, &blk_b, &blk_b, &blk_b};
        auto swap_blocks = [&](std::size_t k) {
            std::size_t pos = 1 + w1.size();
            for (std::size_t j = 0; j < k; ++j) pos += blocks[j]->size() + 1;
            tb.apply(make_step(RuleId::eq3, pos,
                               {{0, ly}, {1, *blocks[k]}, {2, *blocks[k + 1]}}));
            std::swap(blocks[k], blocks[k + 1]);
        };
        swap_blocks(1);
        swap_blocks(0);
        swap_blocks(2);

        wprime = concat({&w2, &lx, &w1, &ly, &w2, &lx, &w3, &ly, &w2});
        if (tb.cur != concat({&wt, &wprime, &wt}))
            throw InternalInvariantViolation("block derivation missed w~ w' w~");

        // Undo the ordering steps inside each copy of w~, suffix copy first so
        // the prefix copy's positions stay valid.
        std::size_t suffix_off = wt.size() + wprime.size();
        for (std::size_t i = ensure_count; i-- > 0;) {
            RewriteStep r = tb.steps[i];
            r.dir = flipped(r.dir);
            r.pos += suffix_off;
            tb.apply(std::move(r));
        }
        for (std::size_t i = ensure_count; i-- > 0;) {
            RewriteStep r = tb.steps[i];
            r.dir = flipped(r.dir);
            tb.apply(std::move(r));
        }
    }

    Word expected = concat({&w, &wprime, &w});
    if (tb.cur != expected)
        throw InternalInvariantViolation("regularity derivation missed w w' w");
    return {std::move(wprime), {w, std::move(tb.steps), std::move(tb.cur)}};
}

std::string serialize_trace(const DerivationTrace& trace) {
    std::string out = "start=" + word_text(trace.start) + "\n";
    for (const RewriteStep& s : trace.steps) {
        out += "rule=" + rule_name(s.rule) + " dir=" + direction_name(s.dir) +
               " pos=" + std::to_string(s.pos) + " sub";
        for (const auto& [v, img] : s.sub) out += " " + var_name(v) + "=" + word_text(img);
        out += "\n";
    }
    out += "end=" + word_text(trace.end) + "\n";
    return out;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

Word parse_word_at(const std::string& text, std::size_t offset) {
    try {
        return parse_word(text);
    } catch (const SyntaxError& e) {
        throw SyntaxError(offset + e.position, "bad word");
    }
}

}  // namespace

DerivationTrace parse_trace(const std::string& text) {
    DerivationTrace trace;
    bool have_start = false, have_end = false;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string::npos) line_end = text.size();
        std::string line = text.substr(line_start, line_end - line_start);
        std::size_t off = line_start;
        line_start = line_end + 1;
        if (line.find_first_not_of(' ') == std::string::npos) {
            if (line_end == text.size()) break;
            continue;
        }
        if (have_end) throw SyntaxError(off, "content after end line");
        if (!have_start) {
            if (line.rfind("start=", 0) != 0)
                throw SyntaxError(off, "expected start=<word>");
            trace.start = parse_word_at(line.substr(6), off + 6);
            have_start = true;
        } else if (line.rfind("end=", 0) == 0) {
            trace.end = parse_word_at(line.substr(4), off + 4);
            have_end = true;
        } else if (line.rfind("rule=", 0) == 0) {
            std::vector<std::string> tok = split_ws(line);
            if (tok.size() < 5 || tok[1].rfind("dir=", 0) != 0 ||
                tok[2].rfind("pos=", 0) != 0 || tok[3] != "sub")
                throw SyntaxError(off, "expected rule=... dir=... pos=... sub ...");
            RewriteStep step;
            std::string rn = tok[0].substr(5);
            if (rn == "eq1")
                step.rule = RuleId::eq1;
            else if (rn == "eq2")
                step.rule = RuleId::eq2;
            else if (rn == "eq3")
                step.rule = RuleId::eq3;
            else
                throw SyntaxError(off, "unknown rule " + rn);
            std::string dn = tok[1].substr(4);
            if (dn == "ltr")
                step.dir = Direction::ltr;
            else if (dn == "rtl")
                step.dir = Direction::rtl;
            else
                throw SyntaxError(off, "unknown direction " + dn);
            std::string pn = tok[2].substr(4);
            if (pn.empty() || pn.find_first_not_of("0123456789") != std::string::npos)
                throw SyntaxError(off, "bad position " + pn);
            step.pos = std::stoull(pn);
            int n_vars = rule_sides(step.rule).n_vars;
            for (std::size_t i = 4; i < tok.size(); ++i) {
                std::size_t eq = tok[i].find('=');
                if (eq != 1) throw SyntaxError(off, "expected <var>=<word>");
                int v = var_id_from_char(tok[i][0]);
                if (v < 0 || v >= n_vars)
                    throw SyntaxError(off, "binding outside the rule's variables");
                if (step.sub.count(v)) throw SyntaxError(off, "duplicate binding");
                step.sub[v] = parse_word_at(tok[i].substr(2), off + 2);
            }
            if (static_cast<int>(step.sub.size()) != n_vars)
                throw SyntaxError(off, "rule variable left unbound");
            trace.steps.push_back(std::move(step));
        } else {
            throw SyntaxError(off, "unrecognized line");
        }
        if (line_end == text.size()) break;
    }
    if (!have_start) throw SyntaxError(0, "missing start line");
    if (!have_end) throw SyntaxError(text.size(), "missing end line");
    return trace;
}

}  // namespace sgp
