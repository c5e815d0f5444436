#include "sgp/words.hpp"

#include <algorithm>
#include <cctype>

#include "sgp/kernels.hpp"

namespace sgp {

int var_id_from_char(char c) {
    for (int i = 0; kCanonicalVars[i] != '\0'; ++i)
        if (kCanonicalVars[i] == c) return i;
    return -1;
}

std::string var_name(int id) {
    if (id >= 0 && id < 26) return std::string(1, kCanonicalVars[id]);
    return "v" + std::to_string(id);
}

std::set<int> Word::alphabet() const {
    return std::set<int>(letters.begin(), letters.end());
}

std::map<int, int> Word::counts() const {
    std::map<int, int> c;
    for (int v : letters) ++c[v];
    return c;
}

Word parse_word(const std::string& text) {
    Word w;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        int id = var_id_from_char(c);
        if (id < 0) throw SyntaxError(i, std::string("expected a letter, got '") + c + "'");
        ++i;
        long long count = 1;
        if (i < n && text[i] == '^') {
            ++i;
            if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw SyntaxError(i, "expected an exponent after '^'");
            count = 0;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                count = count * 10 + (text[i] - '0');
                if (count > 1000000) throw SyntaxError(i, "exponent too large");
                ++i;
            }
            if (count < 1) throw SyntaxError(i, "exponent must be >= 1");
        }
        for (long long k = 0; k < count; ++k) w.letters.push_back(id);
    }
    if (w.letters.empty()) throw SyntaxError(0, "empty word");
    return w;
}

std::string word_text(const Word& w) {
    std::string out;
    for (int v : w.letters) out += var_name(v);
    return out;
}

std::string Identity::tag_text() const {
    switch (tag) {
        case Tag::eq1: return "eq1";
        case Tag::eq2: return "eq2";
        case Tag::eq3: return "eq3";
        case Tag::eq4: return "eq4(" + std::to_string(param) + ")";
        case Tag::eq5: return "eq5";
        case Tag::rsn: return "rsn(" + std::to_string(param) + ")";
        case Tag::custom: return "custom";
    }
    return "custom";
}

Identity parse_identity(const std::string& text) {
    std::size_t eq = text.find('=');
    if (eq == std::string::npos) throw SyntaxError(text.size(), "expected '='");
    if (text.find('=', eq + 1) != std::string::npos)
        throw SyntaxError(text.find('=', eq + 1), "more than one '='");
    Identity id;
    id.lhs = parse_word(text.substr(0, eq));
    id.rhs = parse_word(text.substr(eq + 1));
    id.tag = Identity::Tag::custom;
    return id;
}

std::string identity_text(const Identity& id) {
    return word_text(id.lhs) + " = " + word_text(id.rhs);
}

WordGraph word_graph(const Word& w) {
    WordGraph g;
    g.vertices = w.alphabet();
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i)
        g.edges.insert({w.letters[i], w.letters[i + 1]});
    g.initial = w.letters.front();
    g.final_vertex = w.letters.back();
    return g;
}

std::string render_graph(const WordGraph& g) {
    std::vector<std::pair<std::string, std::string>> named;
    named.reserve(g.edges.size());
    for (auto [a, b] : g.edges) named.push_back({var_name(a), var_name(b)});
    std::sort(named.begin(), named.end());
    std::string out;
    for (auto& [a, b] : named) out += a + " -> " + b + "\n";
    out += "initial: " + var_name(g.initial) + "\n";
    out += "final: " + var_name(g.final_vertex) + "\n";
    return out;
}

bool holds_in_ac2(const Word& u, const Word& v) {
    if (!(word_graph(u) == word_graph(v))) return false;
    auto cu = u.counts();
    auto cv = v.counts();
    for (auto [var, c] : cu) {
        auto it = cv.find(var);
        int other = it == cv.end() ? 0 : it->second;
        if ((c & 1) != (other & 1)) return false;
    }
    for (auto [var, c] : cv)
        if (cu.find(var) == cu.end() && (c & 1) != 0) return false;
    return true;
}

int eval_word(const Semigroup& s, const Word& w, const std::map<int, int>& assignment) {
    auto lookup = [&](int var) {
        auto it = assignment.find(var);
        if (it == assignment.end()) throw UnboundVariable(var);
        return it->second;
    };
    int acc = lookup(w.letters[0]);
    for (std::size_t i = 1; i < w.letters.size(); ++i)
        acc = s.at(acc, lookup(w.letters[i]));
    return acc;
}

std::optional<CounterExample> check_identity(const Semigroup& s, const Identity& id) {
    // Variables are renumbered densely in id order, so the kernel's odometer
    // order is exactly the lexicographic order on (v_1, ..., v_m).
    std::set<int> alf;
    for (int v : id.lhs.letters) alf.insert(v);
    for (int v : id.rhs.letters) alf.insert(v);
    std::vector<int> vars(alf.begin(), alf.end());
    std::map<int, int> dense;
    for (std::size_t i = 0; i < vars.size(); ++i) dense[vars[i]] = static_cast<int>(i);
    auto densify = [&](const Word& w) {
        std::vector<int> out;
        out.reserve(w.letters.size());
        for (int v : w.letters) out.push_back(dense[v]);
        return out;
    };
    auto hit = identity_violation(s, densify(id.lhs), densify(id.rhs),
                                  static_cast<int>(vars.size()));
    if (!hit) return std::nullopt;
    CounterExample cex;
    for (std::size_t i = 0; i < vars.size(); ++i) cex.assignment[vars[i]] = hit->assignment[i];
    cex.lhs_value = hit->lhs_value;
    cex.rhs_value = hit->rhs_value;
    return cex;
}

namespace {

Word word_of(std::initializer_list<int> ids) {
    Word w;
    w.letters.assign(ids);
    return w;
}

Word repeat(const Word& w, int k) {
    Word out;
    out.letters.reserve(w.letters.size() * k);
    for (int i = 0; i < k; ++i)
        out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

}  // namespace

std::vector<Identity> basis_identities(int n_max) {
    const int x = 0, y = 1, z = 2;
    std::vector<Identity> out;
    out.push_back({word_of({x, x}), word_of({x, x, x, x}), Identity::Tag::eq1, 0});
    out.push_back({word_of({x, y, x}), word_of({x, y, x, y, x, y, x}), Identity::Tag::eq2, 0});
    out.push_back({word_of({x, y, x, z, x}), word_of({x, z, x, y, x}), Identity::Tag::eq3, 0});
    for (int n = 2; n <= n_max; ++n) {
        Word inner;
        for (int i = 0; i < n; ++i) {
            inner.letters.push_back(i);
            inner.letters.push_back(i);
        }
        out.push_back({repeat(inner, 2), repeat(inner, 3), Identity::Tag::eq4, n});
    }
    return out;
}

std::vector<Identity> rsn_identities(int n) {
    const int x = 0, y = 1, z = 2;
    std::vector<Identity> out;
    // x^2 = x^{n+2}
    out.push_back({repeat(word_of({x}), 2), repeat(word_of({x}), n + 2),
                   Identity::Tag::rsn, n});
    // xyx = (xy)^{n+1} x
    out.push_back({word_of({x, y, x}), concat(repeat(word_of({x, y}), n + 1), word_of({x})),
                   Identity::Tag::rsn, n});
    // xyx(zx)^n = x(zx)^n yx
    Word zx_n = repeat(word_of({z, x}), n);
    out.push_back({concat(word_of({x, y, x}), zx_n),
                   concat(concat(word_of({x}), zx_n), word_of({y, x})),
                   Identity::Tag::rsn, n});
    return out;
}

bool is_connected(const Word& w) {
    if (w.letters.size() < 2) return false;
    WordGraph g = word_graph(w);
    // Strongly connected iff every vertex is reachable from the initial vertex
    // along edges and along reversed edges.
    auto reachable = [&](bool reversed) {
        std::set<int> seen{g.initial};
        std::vector<int> work{g.initial};
        while (!work.empty()) {
            int v = work.back();
            work.pop_back();
            for (auto [a, b] : g.edges) {
                if (reversed) std::swap(a, b);
                if (a == v && !seen.count(b)) {
                    seen.insert(b);
                    work.push_back(b);
                }
            }
        }
        return seen;
    };
    return reachable(false) == g.vertices && reachable(true) == g.vertices;
}

std::vector<Word> prime_decompose(const Word& w) {
    const std::size_t n = w.letters.size();
    std::map<int, std::size_t> last;
    for (std::size_t i = 0; i < n; ++i) last[w.letters[i]] = i;
    std::vector<Word> factors;
    Word cur;
    std::size_t frontier = 0;  // rightmost last-occurrence among letters seen
    for (std::size_t i = 0; i < n; ++i) {
        cur.letters.push_back(w.letters[i]);
        frontier = std::max(frontier, last[w.letters[i]]);
        if (frontier == i) {
            factors.push_back(cur);
            cur.letters.clear();
        }
    }
    return factors;
}

std::vector<Word> enumerate_words(int k_vars, int max_len) {
    std::vector<Word> out;
    // Restricted-growth strings: first letter x, each next letter at most one
    // past the running maximum, never beyond k_vars distinct variables.
    std::vector<int> cur;
    auto rec = [&](auto&& self, int max_used) -> void {
        if (!cur.empty()) {
            Word w;
            w.letters = cur;
            out.push_back(w);
        }
        if (static_cast<int>(cur.size()) == max_len) return;
        int limit = std::min(max_used + 1, k_vars - 1);
        for (int v = 0; v <= limit; ++v) {
            cur.push_back(v);
            self(self, std::max(max_used, v));
            cur.pop_back();
        }
    };
    rec(rec, -1);
    std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        if (a.letters.size() != b.letters.size())
            return a.letters.size() < b.letters.size();
        return a.letters < b.letters;
    });
    return out;
}

}  // namespace sgp
