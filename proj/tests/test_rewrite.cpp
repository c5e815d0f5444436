#include <utility>

#include "doctest.h"
#include "sgp/errors.hpp"
#include "sgp/rewrite.hpp"
#include "sgp/words.hpp"

using namespace sgp;

namespace {

RewriteStep step(RuleId rule, Direction dir, std::size_t pos,
                 std::initializer_list<std::pair<int, const char*>> bindings) {
    RewriteStep s;
    s.rule = rule;
    s.dir = dir;
    s.pos = pos;
    for (auto [var, image] : bindings) s.sub[var] = parse_word(image);
    return s;
}

bool some_x_after_some_y(const Word& w, int x, int y) {
    std::size_t first_y = w.letters.size();
    for (std::size_t i = 0; i < w.letters.size(); ++i)
        if (w.letters[i] == y) {
            first_y = i;
            break;
        }
    for (std::size_t i = first_y + 1; i < w.letters.size(); ++i)
        if (w.letters[i] == x) return true;
    return false;
}

}  // namespace

TEST_CASE("single step application") {
    CHECK(word_text(apply_step(parse_word("xx"),
                               step(RuleId::eq1, Direction::ltr, 0, {{0, "x"}}))) == "xxxx");
    CHECK(word_text(apply_step(parse_word("xxxx"),
                               step(RuleId::eq1, Direction::rtl, 0, {{0, "x"}}))) == "xx");
    CHECK(word_text(apply_step(parse_word("xyx"),
                               step(RuleId::eq2, Direction::ltr, 0, {{0, "x"}, {1, "y"}}))) ==
          "xyxyxyx");
    CHECK(word_text(apply_step(
              parse_word("xyxzx"),
              step(RuleId::eq3, Direction::ltr, 0, {{0, "x"}, {1, "y"}, {2, "z"}}))) ==
          "xzxyx");
    // composite images and interior positions
    CHECK(word_text(apply_step(parse_word("tzxyzxyt"),
                               step(RuleId::eq1, Direction::ltr, 1, {{0, "zxy"}}))) ==
          "tzxyzxyzxyzxyt");
}

TEST_CASE("step application errors") {
    CHECK_THROWS_AS(apply_step(parse_word("xyx"),
                               step(RuleId::eq2, Direction::ltr, 0, {{0, "x"}})),
                    UnboundVariable);
    RewriteStep empty_image = step(RuleId::eq1, Direction::ltr, 0, {});
    empty_image.sub[0] = Word{};
    CHECK_THROWS_AS(apply_step(parse_word("xx"), empty_image), UnboundVariable);
    CHECK_THROWS_AS(apply_step(parse_word("xx"),
                               step(RuleId::eq1, Direction::ltr, 2, {{0, "x"}})),
                    PositionOutOfRange);
    CHECK_THROWS_AS(apply_step(parse_word("xy"),
                               step(RuleId::eq1, Direction::ltr, 0, {{0, "x"}})),
                    PatternMismatch);
    CHECK_THROWS_AS(apply_step(parse_word("xx"),
                               step(RuleId::eq1, Direction::ltr, 1, {{0, "x"}})),
                    PatternMismatch);
}

TEST_CASE("trace validation") {
    DerivationTrace good;
    good.start = parse_word("xyx");
    good.steps = {step(RuleId::eq2, Direction::ltr, 0, {{0, "x"}, {1, "y"}})};
    good.end = parse_word("xyxyxyx");
    TraceCheck ok = validate_trace(good);
    CHECK(ok.ok);

    DerivationTrace bad_step = good;
    bad_step.steps[0].pos = 1;
    TraceCheck b1 = validate_trace(bad_step);
    CHECK(!b1.ok);
    CHECK(b1.first_bad_step == 0);
    CHECK(!b1.end_mismatch);

    DerivationTrace bad_end = good;
    bad_end.end = parse_word("xyx");
    TraceCheck b2 = validate_trace(bad_end);
    CHECK(!b2.ok);
    CHECK(b2.first_bad_step == 1);
    CHECK(b2.end_mismatch);
}

TEST_CASE("trace text form") {
    DerivationTrace t;
    t.start = parse_word("xyx");
    t.steps = {step(RuleId::eq2, Direction::ltr, 0, {{0, "x"}, {1, "y"}})};
    t.end = parse_word("xyxyxyx");
    std::string text = serialize_trace(t);
    CHECK(text == "start=xyx\nrule=eq2 dir=ltr pos=0 sub x=x y=y\nend=xyxyxyx\n");

    DerivationTrace back = parse_trace(text);
    CHECK(back.start == t.start);
    CHECK(back.end == t.end);
    REQUIRE(back.steps.size() == 1);
    CHECK(back.steps[0].rule == RuleId::eq2);
    CHECK(back.steps[0].dir == Direction::ltr);
    CHECK(back.steps[0].pos == 0);
    CHECK(back.steps[0].sub == t.steps[0].sub);
    CHECK(validate_trace(back).ok);

    DerivationTrace none = parse_trace("start=xyxy\nend=xyxy\n");
    CHECK(none.steps.empty());
    CHECK(validate_trace(none).ok);

    CHECK_THROWS_AS(parse_trace("rule=eq1 dir=ltr pos=0 sub x=x\nend=xx\n"), SyntaxError);
    CHECK_THROWS_AS(parse_trace("start=xx\n"), SyntaxError);
    CHECK_THROWS_AS(parse_trace("start=xx\nend=xx\nstart=xx\n"), SyntaxError);
    CHECK_THROWS_AS(parse_trace("start=xx\nrule=eq9 dir=ltr pos=0 sub x=x\nend=xx\n"),
                    SyntaxError);
    CHECK_THROWS_AS(parse_trace("start=xx\nrule=eq1 dir=up pos=0 sub x=x\nend=xx\n"),
                    SyntaxError);
    CHECK_THROWS_AS(parse_trace("start=xx\nrule=eq1 dir=ltr pos=q sub x=x\nend=xx\n"),
                    SyntaxError);
    // eq1 binds x only; eq2 needs y as well; duplicates are rejected
    CHECK_THROWS_AS(parse_trace("start=xx\nrule=eq1 dir=ltr pos=0 sub x=x y=y\nend=xx\n"),
                    SyntaxError);
    CHECK_THROWS_AS(parse_trace("start=xyx\nrule=eq2 dir=ltr pos=0 sub x=x\nend=xyx\n"),
                    SyntaxError);
    CHECK_THROWS_AS(
        parse_trace("start=xx\nrule=eq1 dir=ltr pos=0 sub x=x x=x\nend=xx\n"),
        SyntaxError);
}

TEST_CASE("interchange with a bordering variable") {
    DerivationTrace t = ensure_x_after_y(parse_word("zxyz"), 0, 1);
    REQUIRE(t.steps.size() == 1);
    CHECK(t.steps[0].rule == RuleId::eq2);
    CHECK(t.steps[0].pos == 0);
    CHECK(word_text(t.steps[0].sub.at(0)) == "z");
    CHECK(word_text(t.steps[0].sub.at(1)) == "xy");
    CHECK(word_text(t.end) == "zxyzxyzxyz");
    CHECK(validate_trace(t).ok);
    CHECK(some_x_after_some_y(t.end, 0, 1));
}

TEST_CASE("interchange via the displayed chain") {
    Word w = parse_word("zxtzyt");
    DerivationTrace t = ensure_x_after_y(w, 0, 1);
    REQUIRE(t.steps.size() == 3);
    CHECK(t.steps[0].rule == RuleId::eq2);
    CHECK(t.steps[0].pos == 0);
    CHECK(t.steps[1].rule == RuleId::eq2);
    CHECK(t.steps[1].pos == 8);
    CHECK(t.steps[2].rule == RuleId::eq3);
    CHECK(t.steps[2].pos == 5);

    Word cur = apply_step(w, t.steps[0]);
    CHECK(word_text(cur) == "zxtzxtzxtzyt");
    cur = apply_step(cur, t.steps[1]);
    CHECK(word_text(cur) == "zxtzxtzxtzytzytzyt");
    cur = apply_step(cur, t.steps[2]);
    CHECK(word_text(cur) == "zxtzxtzytzxtzytzyt");
    CHECK(cur == t.end);
    CHECK(validate_trace(t).ok);
    CHECK(some_x_after_some_y(t.end, 0, 1));
    CHECK(holds_in_ac2(w, t.end));
}

TEST_CASE("interchange recursion case") {
    Word w = parse_word("zxvzuvyu");
    DerivationTrace t = ensure_x_after_y(w, 0, 1);
    REQUIRE(t.steps.size() == 4);
    CHECK(t.steps[0].rule == RuleId::eq2);
    CHECK(t.steps[0].pos == 2);
    CHECK(word_text(t.steps[0].sub.at(0)) == "v");
    CHECK(word_text(t.steps[0].sub.at(1)) == "zu");
    CHECK(t.steps[1].rule == RuleId::eq2);
    CHECK(t.steps[2].rule == RuleId::eq2);
    CHECK(t.steps[3].rule == RuleId::eq3);
    CHECK(validate_trace(t).ok);
    CHECK(some_x_after_some_y(t.end, 0, 1));
    CHECK(t.end.letters.front() == w.letters.front());
    CHECK(t.end.letters.back() == w.letters.back());
    CHECK(word_graph(t.end) == word_graph(w));
    CHECK(holds_in_ac2(w, t.end));
}

TEST_CASE("interchange input errors") {
    CHECK_THROWS_AS(ensure_x_after_y(parse_word("xy"), 0, 1), NotConnected);
    CHECK_THROWS_AS(ensure_x_after_y(parse_word("xyx"), 0, 0), SameVariable);
    CHECK_THROWS_AS(ensure_x_after_y(parse_word("xyx"), 0, 2), VariableAbsent);
    // already ordered: nothing to do
    DerivationTrace t = ensure_x_after_y(parse_word("xyxy"), 0, 1);
    CHECK(t.steps.empty());
    CHECK(t.end == t.start);
}

TEST_CASE("regularity of the basic loop") {
    auto [wprime, t] = regularity_certificate(parse_word("xyx"));
    CHECK(word_text(wprime) == "y");
    REQUIRE(t.steps.size() == 1);
    CHECK(word_text(t.end) == "xyxyxyx");
    CHECK(validate_trace(t).ok);
}

TEST_CASE("regularity of a squared variable") {
    auto [wprime, t] = regularity_certificate(parse_word("xx"));
    CHECK(word_text(wprime) == "xx");
    REQUIRE(t.steps.size() == 2);
    CHECK(t.steps[0].rule == RuleId::eq1);
    CHECK(t.steps[1].rule == RuleId::eq1);
    CHECK(word_text(t.end) == "xxxxxx");
    CHECK(validate_trace(t).ok);
}

TEST_CASE("regularity with distinct borders") {
    auto [wprime, t] = regularity_certificate(parse_word("xyxy"));
    CHECK(word_text(wprime) == "xyxy");
    CHECK(t.steps.size() == 5);
    CHECK(word_text(t.end) == "xyxyxyxyxyxy");
    CHECK(validate_trace(t).ok);

    auto [w2, t2] = regularity_certificate(parse_word("zxtzyt"));
    CHECK(word_text(w2) == "zxtzyt");
    CHECK(t2.steps.size() == 5);
    CHECK(word_text(t2.end) == "zxtzytzxtzytzxtzyt");
    CHECK(validate_trace(t2).ok);
}

TEST_CASE("regularity input handling") {
    CHECK_THROWS_AS(regularity_certificate(parse_word("xy")), NotConnected);
    CHECK_THROWS_AS(regularity_certificate(parse_word("x")), NotConnected);
    CHECK_THROWS_AS(regularity_certificate(parse_word("xxyy")), NotConnected);
    CHECK_THROWS_AS(regularity_certificate(parse_word("xyxy"), 2),
                    InternalInvariantViolation);
}
