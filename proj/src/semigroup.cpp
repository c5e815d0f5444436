#include "sgp/semigroup.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "sgp/kernels.hpp"

namespace sgp {

bool Morphism::is_injective() const {
    std::set<int> seen(map.begin(), map.end());
    return static_cast<int>(seen.size()) == dom_n;
}

bool Morphism::is_multiplicative(const Semigroup& dom, const Semigroup& cod) const {
    for (int i = 0; i < dom_n; ++i)
        for (int j = 0; j < dom_n; ++j)
            if (map[dom.at(i, j)] != cod.at(map[i], map[j])) return false;
    return true;
}

Semigroup from_table(const std::vector<std::vector<int>>& rows,
                     std::vector<std::string> labels) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw IoError("empty table");
    Semigroup s;
    s.n = n;
    s.table.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) throw IoError("table is not square");
        for (int j = 0; j < n; ++j) {
            int v = rows[i][j];
            if (v < 0 || v >= n) throw IndexOutOfRange(i, j);
            s.table.push_back(v);
        }
    }
    if (auto bad = associativity_violation(s.table, n))
        throw NonAssociative((*bad)[0], (*bad)[1], (*bad)[2]);
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != n)
            throw IoError("label count does not match order");
        std::set<std::string> distinct(labels.begin(), labels.end());
        if (static_cast<int>(distinct.size()) != n)
            throw IoError("labels are not pairwise distinct");
        s.labels = std::move(labels);
    }
    return s;
}

namespace {

// Canonical order (a, b, ab, ba, 0); a^2 = aba = a, bab = b, b^2 = 0.
const std::vector<std::vector<int>> kA2 = {
    {0, 2, 2, 0, 4},
    {3, 4, 1, 4, 4},
    {0, 4, 2, 4, 4},
    {3, 1, 1, 3, 4},
    {4, 4, 4, 4, 4},
};

// AC2 extends A2 with c: xc = cx = c for x in A2, c^2 = 0; 0 is no longer a
// zero since 0c = c0 = c.
const std::vector<std::vector<int>> kAC2 = {
    {0, 2, 2, 0, 4, 5},
    {3, 4, 1, 4, 4, 5},
    {0, 4, 2, 4, 4, 5},
    {3, 1, 1, 3, 4, 5},
    {4, 4, 4, 4, 4, 5},
    {5, 5, 5, 5, 5, 4},
};

// Canonical order (0, 1, e11, e12, e21, e22): the 2x2 matrix units with zero
// and identity.
const std::vector<std::vector<int>> kB21 = {
    {0, 0, 0, 0, 0, 0},
    {0, 1, 2, 3, 4, 5},
    {0, 2, 2, 3, 0, 0},
    {0, 3, 0, 0, 2, 3},
    {0, 4, 4, 5, 0, 0},
    {0, 5, 0, 0, 4, 5},
};

// A2 minus a, canonical order (b, ab, ba, 0).
const std::vector<std::vector<int>> kA0 = {
    {3, 0, 3, 3},
    {3, 1, 3, 3},
    {0, 0, 2, 3},
    {3, 3, 3, 3},
};

Semigroup build_cyclic(int k) {
    std::vector<std::vector<int>> rows(k, std::vector<int>(k));
    std::vector<std::string> labels(k);
    for (int i = 0; i < k; ++i) {
        labels[i] = i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i));
        for (int j = 0; j < k; ++j) rows[i][j] = (i + j) % k;
    }
    return from_table(rows, labels);
}

Semigroup build_null(int k) {
    std::vector<std::vector<int>> rows(k, std::vector<int>(k, 0));
    std::vector<std::string> labels(k);
    labels[0] = "0";
    for (int i = 1; i < k; ++i) labels[i] = "n" + std::to_string(i);
    return from_table(rows, labels);
}

Semigroup build_leftzero(int k) {
    std::vector<std::vector<int>> rows(k, std::vector<int>(k));
    std::vector<std::string> labels(k);
    for (int i = 0; i < k; ++i) {
        labels[i] = "l" + std::to_string(i + 1);
        for (int j = 0; j < k; ++j) rows[i][j] = i;
    }
    return from_table(rows, labels);
}

}  // namespace

Semigroup build_named(const std::string& name) {
    if (name == "A2") return from_table(kA2, {"a", "b", "ab", "ba", "0"});
    if (name == "AC2") return from_table(kAC2, {"a", "b", "ab", "ba", "0", "c"});
    if (name == "A0") return from_table(kA0, {"b", "ab", "ba", "0"});
    if (name == "C2") return from_table({{0, 1}, {1, 0}}, {"1", "c"});
    if (name == "B21") return from_table(kB21, {"0", "1", "e11", "e12", "e21", "e22"});
    if (name == "E") return from_table({{0}}, {"1"});
    auto parse_param = [&](const std::string& prefix) -> int {
        std::string num = name.substr(prefix.size());
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw UnknownName(name);
        int k = std::stoi(num);
        if (k < 1) throw UnknownName(name);
        return k;
    };
    if (name.rfind("cyclic:", 0) == 0) return build_cyclic(parse_param("cyclic:"));
    if (name.rfind("null:", 0) == 0) return build_null(parse_param("null:"));
    if (name.rfind("leftzero:", 0) == 0) return build_leftzero(parse_param("leftzero:"));
    throw UnknownName(name);
}

Semigroup direct_product(const Semigroup& s, const Semigroup& t) {
    Semigroup p;
    p.n = s.n * t.n;
    p.table.resize(static_cast<std::size_t>(p.n) * p.n);
    for (int a = 0; a < s.n; ++a)
        for (int b = 0; b < t.n; ++b)
            for (int c = 0; c < s.n; ++c)
                for (int d = 0; d < t.n; ++d) {
                    int lhs = a * t.n + b;
                    int rhs = c * t.n + d;
                    p.table[static_cast<std::size_t>(lhs) * p.n + rhs] =
                        s.at(a, c) * t.n + t.at(b, d);
                }
    p.labels.reserve(p.n);
    for (int a = 0; a < s.n; ++a)
        for (int b = 0; b < t.n; ++b)
            p.labels.push_back("(" + s.display(a) + "," + t.display(b) + ")");
    return p;
}

ElementSet subsemigroup_closure(const Semigroup& s, const ElementSet& seed) {
    if (seed.count() == 0) throw EmptySeed();
    ElementSet closed(s.n);
    std::deque<int> work;
    for (int i : seed.indices()) {
        closed.add(i);
        work.push_back(i);
    }
    while (!work.empty()) {
        int x = work.front();
        work.pop_front();
        for (int m : closed.indices()) {
            for (int p : {s.at(x, m), s.at(m, x)}) {
                if (!closed.contains(p)) {
                    closed.add(p);
                    work.push_back(p);
                }
            }
        }
    }
    return closed;
}

ElementSet idempotents(const Semigroup& s) {
    ElementSet e(s.n);
    for (int i = 0; i < s.n; ++i)
        if (s.is_idempotent(i)) e.add(i);
    return e;
}

std::optional<int> is_regular_element(const Semigroup& s, int elem) {
    for (int t = 0; t < s.n; ++t)
        if (s.at(s.at(elem, t), elem) == elem) return t;
    return std::nullopt;
}

namespace {

struct EmbeddingSearch {
    const Semigroup& s;
    const Semigroup& t;
    std::vector<int> map;
    std::vector<char> used;
    // products_hitting[v] holds the pairs (i, j) with i, j < v and i*j = v,
    // whose constraint becomes checkable exactly when v is assigned.
    std::vector<std::vector<std::pair<int, int>>> products_hitting;

    bool consistent(int v, int image) {
        for (int i = 0; i <= v; ++i) {
            int p = s.at(i, v);
            int q = s.at(v, i);
            int ti = t.at(map[i], image);
            int tq = t.at(image, map[i]);
            if (p < v && map[p] != ti) return false;
            if (p == v && image != ti) return false;
            if (q < v && map[q] != tq) return false;
            if (q == v && image != tq) return false;
        }
        for (auto [i, j] : products_hitting[v])
            if (t.at(map[i], map[j]) != image) return false;
        return true;
    }

    bool extend(int v) {
        if (v == s.n) return true;
        for (int image = 0; image < t.n; ++image) {
            if (used[image]) continue;
            map[v] = image;
            if (consistent(v, image)) {
                used[image] = 1;
                if (extend(v + 1)) return true;
                used[image] = 0;
            }
        }
        return false;
    }
};

}  // namespace

std::optional<Morphism> find_embedding(const Semigroup& s, const Semigroup& t,
                                       int bound) {
    if (s.n > bound) throw SizeBoundExceeded(s.n, bound);
    if (s.n > t.n) return std::nullopt;
    EmbeddingSearch search{s, t, std::vector<int>(s.n, -1),
                           std::vector<char>(t.n, 0),
                           std::vector<std::vector<std::pair<int, int>>>(s.n)};
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j) {
            int p = s.at(i, j);
            if (p > i && p > j) search.products_hitting[p].push_back({i, j});
        }
    if (!search.extend(0)) return std::nullopt;
    return Morphism{s.n, t.n, search.map};
}

SubSemigroup restrict_to(const Semigroup& s, const ElementSet& members) {
    std::vector<int> to_parent = members.indices();
    const int m = static_cast<int>(to_parent.size());
    if (m == 0) throw InternalInvariantViolation("restriction to an empty set");
    std::vector<int> from_parent(s.n, -1);
    for (int i = 0; i < m; ++i) from_parent[to_parent[i]] = i;
    Semigroup sub;
    sub.n = m;
    sub.table.resize(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int p = s.at(to_parent[i], to_parent[j]);
            if (from_parent[p] < 0)
                throw InternalInvariantViolation("restriction set is not closed");
            sub.table[static_cast<std::size_t>(i) * m + j] = from_parent[p];
        }
    if (s.has_labels()) {
        sub.labels.reserve(m);
        for (int i = 0; i < m; ++i) sub.labels.push_back(s.labels[to_parent[i]]);
    }
    return SubSemigroup{std::move(sub), std::move(to_parent), std::move(from_parent)};
}

std::optional<int> zero_element(const Semigroup& s) {
    for (int z = 0; z < s.n; ++z) {
        bool ok = true;
        for (int x = 0; x < s.n && ok; ++x)
            ok = s.at(z, x) == z && s.at(x, z) == z;
        if (ok) return z;
    }
    return std::nullopt;
}

}  // namespace sgp
