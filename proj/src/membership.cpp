#include "sgp/membership.hpp"

#include <algorithm>
#include <chrono>

#include "json.hpp"

namespace sgp {

std::vector<int> IdempotentClosure::factorization(int t) const {
    if (!members.contains(t))
        throw InternalInvariantViolation("factorization of a non-member");
    std::vector<int> out;
    int cur = t;
    while (pred[cur].first >= 0) {
        out.push_back(pred[cur].second);
        cur = pred[cur].first;
    }
    out.push_back(cur);
    std::reverse(out.begin(), out.end());
    return out;
}

IdempotentClosure idempotent_closure(const Semigroup& s) {
    IdempotentClosure c;
    c.n = s.n;
    c.members = ElementSet(s.n);
    c.stage_of.assign(s.n, 0);
    c.pred.assign(s.n, {-1, -1});

    std::vector<int> t1;
    for (int i = 0; i < s.n; ++i)
        if (s.is_idempotent(i)) t1.push_back(i);
    if (t1.empty())
        throw InternalInvariantViolation("finite semigroup with no idempotent");

    for (int e : t1) {
        c.members.add(e);
        c.stage_of[e] = 1;
    }
    c.stage_count = 1;

    // Worklist rounds: only products (new from last stage) x T_1, keeping the
    // total at most n * |T_1|.
    std::vector<int> frontier = t1;
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int t : frontier)
            for (int e : t1) {
                int p = s.at(t, e);
                if (!c.members.contains(p)) {
                    c.members.add(p);
                    c.stage_of[p] = c.stage_count + 1;
                    c.pred[p] = {t, e};
                    next.push_back(p);
                }
            }
        if (next.empty()) break;
        ++c.stage_count;
        frontier = std::move(next);
    }
    return c;
}

std::optional<std::pair<Identity, CounterExample>> check_basis_123(const Semigroup& s) {
    auto basis = basis_identities(2);  // eq1, eq2, eq3, then eq4(2) which we skip
    for (int i = 0; i < 3; ++i)
        if (auto cex = check_identity(s, basis[i]))
            return std::make_pair(basis[i], *cex);
    return std::nullopt;
}

std::optional<int> combinatorial_via_eq5(const Semigroup& s, const IdempotentClosure& t) {
    for (int i = 0; i < s.n; ++i) {
        if (!t.members.contains(i)) continue;
        int sq = s.at(i, i);
        if (s.at(sq, i) != sq) return i;
    }
    return std::nullopt;
}

std::pair<Identity, CounterExample> derive_eq4_witness(const Semigroup& s,
                                                       const IdempotentClosure& t,
                                                       int elem) {
    int sq = s.at(elem, elem);
    if (s.at(sq, elem) == sq) throw NotAWitness();
    std::vector<int> factors = t.factorization(elem);
    const int m = static_cast<int>(factors.size());
    if (m == 1)
        throw InternalInvariantViolation("an idempotent cannot violate x^2 = x^3");
    for (int e : factors)
        if (!s.is_idempotent(e))
            throw InternalInvariantViolation("factorization contains a non-idempotent");

    Identity id;
    Word inner;
    CounterExample cex;
    for (int i = 0; i < m; ++i) {
        inner.letters.push_back(i);
        inner.letters.push_back(i);
        cex.assignment[i] = factors[i];
    }
    for (int rep = 0; rep < 2; ++rep)
        id.lhs.letters.insert(id.lhs.letters.end(), inner.letters.begin(),
                              inner.letters.end());
    for (int rep = 0; rep < 3; ++rep)
        id.rhs.letters.insert(id.rhs.letters.end(), inner.letters.begin(),
                              inner.letters.end());
    id.tag = Identity::Tag::eq4;
    id.param = m;
    cex.lhs_value = eval_word(s, id.lhs, cex.assignment);
    cex.rhs_value = eval_word(s, id.rhs, cex.assignment);
    if (cex.lhs_value == cex.rhs_value)
        throw InternalInvariantViolation("derived eq4 instance does not separate");
    return {id, cex};
}

MembershipReport membership_ac2(const Semigroup& s) {
    using clock = std::chrono::steady_clock;
    MembershipReport r;
    auto timed = [&](const char* name, auto&& f) {
        auto t0 = clock::now();
        auto result = f();
        auto micros =
            std::chrono::duration_cast<std::chrono::microseconds>(clock::now() - t0)
                .count();
        r.stages.push_back({name, micros});
        return result;
    };

    if (auto fail = timed("basis123", [&] { return check_basis_123(s); })) {
        r.verdict = MembershipReport::Verdict::non_member;
        r.kind = MembershipReport::CertKind::failed_identity;
        r.identity = fail->first;
        r.cex = fail->second;
        return r;
    }
    auto closure = timed("closure", [&] { return idempotent_closure(s); });
    if (auto bad = timed("eq5", [&] { return combinatorial_via_eq5(s, closure); })) {
        auto [id, cex] = derive_eq4_witness(s, closure, *bad);
        r.verdict = MembershipReport::Verdict::non_member;
        r.kind = MembershipReport::CertKind::non_combinatorial_closure;
        r.identity = id;
        r.cex = cex;
        r.element = *bad;
        r.factorization = closure.factorization(*bad);
        return r;
    }
    r.verdict = MembershipReport::Verdict::member;
    r.kind = MembershipReport::CertKind::passed_all_checks;
    return r;
}

namespace {

const char* kind_name(MembershipReport::CertKind k) {
    switch (k) {
        case MembershipReport::CertKind::passed_all_checks: return "PassedAllChecks";
        case MembershipReport::CertKind::failed_identity: return "FailedIdentity";
        case MembershipReport::CertKind::non_combinatorial_closure:
            return "NonCombinatorialClosure";
    }
    return "";
}

}  // namespace

std::string report_to_text(const MembershipReport& r, const Semigroup& s) {
    std::string out;
    out += "verdict: ";
    out += r.verdict == MembershipReport::Verdict::member ? "member" : "non-member";
    out += "\ncertificate: ";
    out += kind_name(r.kind);
    out += "\n";
    if (r.identity) {
        out += "identity [" + r.identity->tag_text() + "]: " + identity_text(*r.identity) +
               "\n";
    }
    if (r.cex) {
        out += "assignment:";
        for (auto [var, elem] : r.cex->assignment)
            out += " " + var_name(var) + " -> " + s.display(elem);
        out += "\nvalues: lhs = " + s.display(r.cex->lhs_value) +
               ", rhs = " + s.display(r.cex->rhs_value) + "\n";
    }
    if (r.element) {
        out += "violator: " + s.display(*r.element) + " (t^2 != t^3)\nfactorization:";
        for (int e : r.factorization) out += " " + s.display(e);
        out += "\n";
    }
    for (const auto& st : r.stages)
        out += "stage " + st.name + ": " + std::to_string(st.micros) + " us\n";
    return out;
}

std::string report_to_json(const MembershipReport& r, const Semigroup& s) {
    (void)s;
    nlohmann::json j;
    j["verdict"] = r.verdict == MembershipReport::Verdict::member ? "member" : "non-member";
    nlohmann::json cert;
    cert["kind"] = kind_name(r.kind);
    cert["identity"] = r.identity ? nlohmann::json(identity_text(*r.identity))
                                  : nlohmann::json(nullptr);
    cert["tag"] = r.identity ? nlohmann::json(r.identity->tag_text())
                             : nlohmann::json(nullptr);
    if (r.cex) {
        nlohmann::json a = nlohmann::json::object();
        for (auto [var, elem] : r.cex->assignment) a[var_name(var)] = elem;
        cert["assignment"] = a;
    } else {
        cert["assignment"] = nullptr;
    }
    cert["element"] = r.element ? nlohmann::json(*r.element) : nlohmann::json(nullptr);
    cert["factorization"] =
        r.factorization.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.factorization);
    j["certificate"] = cert;
    nlohmann::json stages = nlohmann::json::array();
    for (const auto& st : r.stages)
        stages.push_back({{"name", st.name}, {"micros", st.micros}});
    j["stages"] = stages;
    return j.dump(2) + "\n";
}

}  // namespace sgp
