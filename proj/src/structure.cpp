#include "sgp/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "sgp/errors.hpp"

namespace sgp {

std::vector<int> GreensData::h_class_of(int elem) const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (h_of[i] == h_of[elem]) out.push_back(i);
    return out;
}

namespace {

// Classes keyed by equal ideals, numbered by first (= smallest) member.
int number_classes(const std::vector<std::vector<char>>& keys, std::vector<int>& out) {
    std::map<std::vector<char>, int> ids;
    out.resize(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
        auto [it, fresh] = ids.emplace(keys[i], static_cast<int>(ids.size()));
        out[i] = it->second;
        (void)fresh;
    }
    return static_cast<int>(ids.size());
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

GreensData greens_relations(const Semigroup& s) {
    GreensData g;
    g.n = s.n;
    std::vector<std::vector<char>> right(s.n, std::vector<char>(s.n, 0));
    std::vector<std::vector<char>> left(s.n, std::vector<char>(s.n, 0));
    for (int x = 0; x < s.n; ++x) {
        right[x][x] = 1;
        left[x][x] = 1;
        for (int j = 0; j < s.n; ++j) {
            right[x][s.at(x, j)] = 1;
            left[x][s.at(j, x)] = 1;
        }
    }
    g.n_r = number_classes(right, g.r_of);
    g.n_l = number_classes(left, g.l_of);

    std::map<std::pair<int, int>, int> h_ids;
    g.h_of.resize(s.n);
    for (int x = 0; x < s.n; ++x) {
        auto [it, fresh] =
            h_ids.emplace(std::make_pair(g.r_of[x], g.l_of[x]), static_cast<int>(h_ids.size()));
        g.h_of[x] = it->second;
        (void)fresh;
    }
    g.n_h = static_cast<int>(h_ids.size());

    UnionFind uf(s.n);
    for (int x = 0; x < s.n; ++x)
        for (int y = x + 1; y < s.n; ++y)
            if (g.r_of[x] == g.r_of[y] || g.l_of[x] == g.l_of[y]) uf.join(x, y);
    g.d_of.resize(s.n);
    std::map<int, int> d_ids;
    for (int x = 0; x < s.n; ++x) {
        auto [it, fresh] = d_ids.emplace(uf.find(x), static_cast<int>(d_ids.size()));
        g.d_of[x] = it->second;
        (void)fresh;
    }
    g.n_d = static_cast<int>(d_ids.size());
    return g;
}

bool is_aperiodic(const Semigroup& s) {
    GreensData g = greens_relations(s);
    bool by_h = g.n_h == s.n;
    bool by_power = true;
    for (int x = 0; x < s.n && by_power; ++x)
        if (s.power(x, s.n) != s.power(x, s.n + 1)) by_power = false;
    if (by_h != by_power)
        throw InternalInvariantViolation("H-class and power aperiodicity tests disagree");
    return by_h;
}

SeparabilityReport is_E_separable(const Semigroup& s) {
    SeparabilityReport report;
    std::vector<int> es = idempotents(s).indices();
    for (int p = 0; p < s.n; ++p)
        for (int q = 0; q < s.n; ++q) {
            if (p == q) continue;
            int e = -1, f = -1;
            for (int cand : es)
                if (s.at(p, cand) != s.at(q, cand)) {
                    e = cand;
                    break;
                }
            for (int cand : es)
                if (s.at(cand, p) != s.at(cand, q)) {
                    f = cand;
                    break;
                }
            if (e < 0 || f < 0) {
                report.separable = false;
                report.failing = {p, q};
                report.witnesses.clear();
                return report;
            }
            report.witnesses.push_back({p, q, e, f});
        }
    report.separable = true;
    return report;
}

namespace {

void validate_rees_spec(const ReesSpec& spec) {
    const Semigroup& g = spec.group;
    if (g.n < 1) throw InvalidSpec("group is empty");
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (g.at(i, j) < 0 || g.at(i, j) >= g.n)
                throw InvalidSpec("group table entry out of range");
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            for (int k = 0; k < g.n; ++k)
                if (g.at(g.at(i, j), k) != g.at(i, g.at(j, k)))
                    throw InvalidSpec("group table is not associative");
    if (spec.identity < 0 || spec.identity >= g.n) throw InvalidSpec("identity out of range");
    for (int x = 0; x < g.n; ++x)
        if (g.at(spec.identity, x) != x || g.at(x, spec.identity) != x)
            throw InvalidSpec("designated identity is not an identity");
    for (int x = 0; x < g.n; ++x) {
        bool inverse = false;
        for (int y = 0; y < g.n && !inverse; ++y)
            inverse = g.at(x, y) == spec.identity && g.at(y, x) == spec.identity;
        if (!inverse) throw InvalidSpec("element without inverse");
    }
    if (spec.rows < 1 || spec.cols < 1) throw InvalidSpec("empty row or column set");
    if (static_cast<int>(spec.sandwich.size()) != spec.rows)
        throw InvalidSpec("sandwich row count mismatch");
    for (const auto& row : spec.sandwich)
        if (static_cast<int>(row.size()) != spec.cols)
            throw InvalidSpec("sandwich column count mismatch");
    for (const auto& row : spec.sandwich)
        for (int entry : row)
            if (entry < -1 || entry >= g.n) throw InvalidSpec("sandwich entry out of range");
    for (int l = 0; l < spec.rows; ++l) {
        bool nonzero = false;
        for (int i = 0; i < spec.cols && !nonzero; ++i) nonzero = spec.sandwich[l][i] >= 0;
        if (!nonzero) throw InvalidSpec("sandwich row of zeros");
    }
    for (int i = 0; i < spec.cols; ++i) {
        bool nonzero = false;
        for (int l = 0; l < spec.rows && !nonzero; ++l) nonzero = spec.sandwich[l][i] >= 0;
        if (!nonzero) throw InvalidSpec("sandwich column of zeros");
    }
}

int group_inverse(const Semigroup& g, int identity, int x) {
    for (int y = 0; y < g.n; ++y)
        if (g.at(x, y) == identity && g.at(y, x) == identity) return y;
    throw InternalInvariantViolation("validated group lost an inverse");
}

}  // namespace

Semigroup rees_semigroup(const ReesSpec& spec) {
    validate_rees_spec(spec);
    const Semigroup& g = spec.group;
    int order = spec.cols * g.n * spec.rows + 1;
    int zero = order - 1;
    auto index_of = [&](int i, int gg, int l) { return (i * g.n + gg) * spec.rows + l; };

    std::vector<std::vector<int>> rows(order, std::vector<int>(order, zero));
    for (int i = 0; i < spec.cols; ++i)
        for (int gg = 0; gg < g.n; ++gg)
            for (int l = 0; l < spec.rows; ++l) {
                int lhs = index_of(i, gg, l);
                for (int j = 0; j < spec.cols; ++j)
                    for (int hh = 0; hh < g.n; ++hh)
                        for (int m = 0; m < spec.rows; ++m) {
                            int p = spec.sandwich[l][j];
                            if (p < 0) continue;
                            rows[lhs][index_of(j, hh, m)] =
                                index_of(i, g.at(g.at(gg, p), hh), m);
                        }
            }

    std::vector<std::string> labels(order);
    for (int i = 0; i < spec.cols; ++i)
        for (int gg = 0; gg < g.n; ++gg)
            for (int l = 0; l < spec.rows; ++l)
                labels[index_of(i, gg, l)] = "(" + std::to_string(i) + "," + g.display(gg) +
                                             "," + std::to_string(l) + ")";
    labels[zero] = "0";
    return from_table(rows, std::move(labels));
}

bool is_completely_0_simple(const Semigroup& s) {
    auto zero = zero_element(s);
    if (!zero) return false;
    int z = *zero;
    bool square_nonzero = false;
    for (int x = 0; x < s.n && !square_nonzero; ++x)
        for (int y = 0; y < s.n && !square_nonzero; ++y)
            square_nonzero = s.at(x, y) != z;
    if (!square_nonzero) return false;
    // Finite and 0-simple implies completely 0-simple; 0-simple means the
    // principal two-sided ideal of every nonzero element is everything.
    for (int a = 0; a < s.n; ++a) {
        if (a == z) continue;
        std::vector<char> ideal(s.n, 0);
        ideal[a] = 1;
        for (int x = 0; x < s.n; ++x) {
            ideal[s.at(a, x)] = 1;
            ideal[s.at(x, a)] = 1;
            for (int y = 0; y < s.n; ++y) ideal[s.at(s.at(x, a), y)] = 1;
        }
        for (int t = 0; t < s.n; ++t)
            if (!ideal[t]) return false;
    }
    return true;
}

ReesSpec rees_representation(const Semigroup& s) {
    if (!is_completely_0_simple(s)) throw NotCompletelyZeroSimple();
    int z = *zero_element(s);
    GreensData g = greens_relations(s);

    // Column and row coordinates: nonzero R- and L-classes by smallest member.
    std::vector<int> r_classes, l_classes;  // class id -> coordinate, -1 elsewhere
    std::vector<int> r_coord(g.n_r, -1), l_coord(g.n_l, -1);
    for (int x = 0; x < s.n; ++x) {
        if (x == z) continue;
        if (r_coord[g.r_of[x]] < 0) {
            r_coord[g.r_of[x]] = static_cast<int>(r_classes.size());
            r_classes.push_back(g.r_of[x]);
        }
        if (l_coord[g.l_of[x]] < 0) {
            l_coord[g.l_of[x]] = static_cast<int>(l_classes.size());
            l_classes.push_back(g.l_of[x]);
        }
    }
    int cols = static_cast<int>(r_classes.size());
    int rows = static_cast<int>(l_classes.size());

    int e = -1;
    for (int x = 0; x < s.n && e < 0; ++x)
        if (x != z && s.is_idempotent(x)) e = x;
    if (e < 0) throw InternalInvariantViolation("0-simple semigroup with no nonzero idempotent");

    std::vector<int> h_members = g.h_class_of(e);  // ascending
    std::vector<int> group_index(s.n, -1);
    for (std::size_t i = 0; i < h_members.size(); ++i) group_index[h_members[i]] = static_cast<int>(i);
    int gn = static_cast<int>(h_members.size());
    std::vector<std::vector<int>> group_rows(gn, std::vector<int>(gn));
    for (int i = 0; i < gn; ++i)
        for (int j = 0; j < gn; ++j) {
            int prod = s.at(h_members[i], h_members[j]);
            if (group_index[prod] < 0)
                throw InternalInvariantViolation("maximal subgroup is not closed");
            group_rows[i][j] = group_index[prod];
        }
    std::vector<std::string> group_labels;
    if (s.has_labels())
        for (int m : h_members) group_labels.push_back(s.labels[m]);

    ReesSpec spec;
    spec.group = from_table(group_rows, std::move(group_labels));
    spec.identity = group_index[e];
    spec.rows = rows;
    spec.cols = cols;

    // Smallest-index representatives r_i in R_i cap L(e), q_l in R(e) cap L_l.
    std::vector<int> rep_r(cols, -1), rep_q(rows, -1);
    for (int x = 0; x < s.n; ++x) {
        if (x == z) continue;
        if (g.l_of[x] == g.l_of[e]) {
            int i = r_coord[g.r_of[x]];
            if (rep_r[i] < 0) rep_r[i] = x;
        }
        if (g.r_of[x] == g.r_of[e]) {
            int l = l_coord[g.l_of[x]];
            if (rep_q[l] < 0) rep_q[l] = x;
        }
    }
    for (int i = 0; i < cols; ++i)
        if (rep_r[i] < 0)
            throw InternalInvariantViolation("empty egg-box cell in a regular D-class");
    for (int l = 0; l < rows; ++l)
        if (rep_q[l] < 0)
            throw InternalInvariantViolation("empty egg-box cell in a regular D-class");

    spec.sandwich.assign(rows, std::vector<int>(cols, -1));
    for (int l = 0; l < rows; ++l)
        for (int i = 0; i < cols; ++i) {
            int prod = s.at(rep_q[l], rep_r[i]);
            if (prod == z) continue;
            if (group_index[prod] < 0)
                throw InternalInvariantViolation("sandwich product outside the group H-class");
            spec.sandwich[l][i] = group_index[prod];
        }
    validate_rees_spec(spec);
    return spec;
}

std::optional<ReesSpec> graham_houghton_normalize(
    const ReesSpec& spec, std::vector<std::pair<int, int>>* cycle_out) {
    validate_rees_spec(spec);
    const Semigroup& g = spec.group;
    int rows = spec.rows, cols = spec.cols;

    // Bipartite nodes: 0..rows-1 are lambdas, rows..rows+cols-1 are columns.
    int total = rows + cols;
    std::vector<int> scale(total, -1);  // u_l on lambda nodes, v_i on column nodes
    std::vector<int> parent(total, -1);
    std::vector<std::pair<int, int>> parent_edge(total, {-1, -1});

    for (int root = 0; root < rows; ++root) {
        if (scale[root] >= 0) continue;
        scale[root] = spec.identity;
        std::queue<int> bfs;
        bfs.push(root);
        while (!bfs.empty()) {
            int node = bfs.front();
            bfs.pop();
            if (node < rows) {
                int l = node;
                for (int i = 0; i < cols; ++i) {
                    int p = spec.sandwich[l][i];
                    if (p < 0 || scale[rows + i] >= 0) continue;
                    // u_l p v_i = identity fixes v_i.
                    scale[rows + i] = group_inverse(g, spec.identity, g.at(scale[l], p));
                    parent[rows + i] = node;
                    parent_edge[rows + i] = {l, i};
                    bfs.push(rows + i);
                }
            } else {
                int i = node - rows;
                for (int l = 0; l < rows; ++l) {
                    int p = spec.sandwich[l][i];
                    if (p < 0 || scale[l] >= 0) continue;
                    scale[l] = group_inverse(g, spec.identity, g.at(p, scale[rows + i]));
                    parent[l] = node;
                    parent_edge[l] = {l, i};
                    bfs.push(l);
                }
            }
        }
    }

    for (int l = 0; l < rows; ++l)
        for (int i = 0; i < cols; ++i) {
            int p = spec.sandwich[l][i];
            if (p < 0) continue;
            if (g.at(g.at(scale[l], p), scale[rows + i]) == spec.identity) continue;
            if (cycle_out) {
                // Forest path lambda -> ... -> column, then the bad edge.
                std::vector<std::pair<int, int>> up_l, up_i;
                std::vector<int> anc_l, anc_i;
                for (int node = l; node >= 0; node = parent[node]) anc_l.push_back(node);
                for (int node = rows + i; node >= 0; node = parent[node]) anc_i.push_back(node);
                std::vector<char> on_l_path(total, 0);
                for (int node : anc_l) on_l_path[node] = 1;
                int lca = -1;
                for (int node : anc_i)
                    if (on_l_path[node]) {
                        lca = node;
                        break;
                    }
                if (lca < 0) throw InternalInvariantViolation("cycle endpoints in different trees");
                for (int node = l; node != lca; node = parent[node])
                    up_l.push_back(parent_edge[node]);
                for (int node = rows + i; node != lca; node = parent[node])
                    up_i.push_back(parent_edge[node]);
                cycle_out->clear();
                cycle_out->insert(cycle_out->end(), up_l.begin(), up_l.end());
                cycle_out->insert(cycle_out->end(), up_i.rbegin(), up_i.rend());
                cycle_out->push_back({l, i});
            }
            return std::nullopt;
        }

    ReesSpec out = spec;
    for (int l = 0; l < rows; ++l)
        for (int i = 0; i < cols; ++i)
            if (out.sandwich[l][i] >= 0) out.sandwich[l][i] = spec.identity;
    return out;
}

}  // namespace sgp
