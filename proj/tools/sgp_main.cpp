#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sgp/errors.hpp"
#include "sgp/io.hpp"
#include "sgp/membership.hpp"
#include "sgp/rewrite.hpp"
#include "sgp/semigroup.hpp"
#include "sgp/structure.hpp"
#include "sgp/words.hpp"

namespace {

using nlohmann::json;

struct Options {
    std::string format = "text";
    std::size_t step_budget = 0;
};

bool want_json(const Options& opt) { return opt.format == "json"; }

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

json assignment_json(const sgp::Semigroup& s, const std::map<int, int>& assignment) {
    json out = json::object();
    for (const auto& [var, value] : assignment) out[sgp::var_name(var)] = s.display(value);
    return out;
}

std::string assignment_text(const sgp::Semigroup& s, const std::map<int, int>& assignment) {
    std::string out;
    for (const auto& [var, value] : assignment) {
        if (!out.empty()) out += ", ";
        out += sgp::var_name(var) + " -> " + s.display(value);
    }
    return out;
}

int cmd_validate(const Options& opt, const std::string& input) {
    sgp::Semigroup s = sgp::resolve_input(input);
    int idem = sgp::idempotents(s).count();
    if (want_json(opt)) {
        emit({{"order", s.n}, {"associative", true}, {"idempotents", idem}});
    } else {
        std::cout << "order " << s.n << ", associative, " << idem << " idempotents\n";
    }
    return 0;
}

int cmd_member(const Options& opt, const std::string& input) {
    sgp::Semigroup s = sgp::resolve_input(input);
    sgp::MembershipReport report = sgp::membership_ac2(s);
    std::cout << (want_json(opt) ? sgp::report_to_json(report, s)
                                 : sgp::report_to_text(report, s));
    return report.verdict == sgp::MembershipReport::Verdict::member ? 0 : 1;
}

int cmd_identity(const Options& opt, const std::string& input, const std::string& text) {
    sgp::Semigroup s = sgp::resolve_input(input);
    sgp::Identity id = sgp::parse_identity(text);
    auto cex = sgp::check_identity(s, id);
    if (want_json(opt)) {
        json doc = {{"identity", sgp::identity_text(id)}, {"holds", !cex.has_value()}};
        if (cex) {
            doc["assignment"] = assignment_json(s, cex->assignment);
            doc["lhs"] = s.display(cex->lhs_value);
            doc["rhs"] = s.display(cex->rhs_value);
        }
        emit(doc);
    } else if (!cex) {
        std::cout << "holds\n";
    } else {
        std::cout << "fails\n";
        std::cout << "assignment: " << assignment_text(s, cex->assignment) << "\n";
        std::cout << "values: lhs = " << s.display(cex->lhs_value) << ", rhs = "
                  << s.display(cex->rhs_value) << "\n";
    }
    return cex ? 1 : 0;
}

int cmd_ac2_identity(const Options& opt, const std::string& text) {
    sgp::Identity id = sgp::parse_identity(text);
    bool holds = sgp::holds_in_ac2(id.lhs, id.rhs);
    std::string lhs_graph = sgp::render_graph(sgp::word_graph(id.lhs));
    std::string rhs_graph = sgp::render_graph(sgp::word_graph(id.rhs));
    if (want_json(opt)) {
        emit({{"identity", sgp::identity_text(id)},
              {"holds", holds},
              {"lhs_graph", lhs_graph},
              {"rhs_graph", rhs_graph}});
    } else {
        std::cout << "lhs graph:\n" << lhs_graph;
        std::cout << "rhs graph:\n" << rhs_graph;
        std::cout << (holds ? "holds\n" : "fails\n");
    }
    return holds ? 0 : 1;
}

std::string sandwich_entry(const sgp::ReesSpec& spec, int l, int i) {
    int p = spec.sandwich[l][i];
    return p < 0 ? "0" : spec.group.display(p);
}

int cmd_analyze(const Options& opt, const std::string& input) {
    sgp::Semigroup s = sgp::resolve_input(input);
    sgp::GreensData g = sgp::greens_relations(s);
    sgp::SeparabilityReport sep = sgp::is_E_separable(s);
    bool aperiodic = sgp::is_aperiodic(s);
    bool c0s = sgp::is_completely_0_simple(s);
    int idem = sgp::idempotents(s).count();

    if (want_json(opt)) {
        json doc = {{"order", s.n},
                    {"idempotents", idem},
                    {"greens", {{"r", g.n_r}, {"l", g.n_l}, {"h", g.n_h}, {"d", g.n_d}}},
                    {"e_separable", sep.separable},
                    {"aperiodic", aperiodic},
                    {"completely_0_simple", c0s},
                    {"rees", nullptr}};
        if (!sep.separable)
            doc["inseparable_pair"] = {s.display(sep.failing.first),
                                       s.display(sep.failing.second)};
        if (c0s) {
            sgp::ReesSpec spec = sgp::rees_representation(s);
            json rows = json::array();
            for (int l = 0; l < spec.rows; ++l) {
                json row = json::array();
                for (int i = 0; i < spec.cols; ++i) row.push_back(sandwich_entry(spec, l, i));
                rows.push_back(row);
            }
            doc["rees"] = {{"group_order", spec.group.n},
                           {"rows", spec.rows},
                           {"cols", spec.cols},
                           {"sandwich", rows}};
        }
        emit(doc);
        return 0;
    }

    std::cout << "order: " << s.n << "\n";
    std::cout << "idempotents: " << idem << "\n";
    std::cout << "greens: R=" << g.n_r << " L=" << g.n_l << " H=" << g.n_h << " D=" << g.n_d
              << "\n";
    std::cout << "E-separable: " << (sep.separable ? "yes" : "no") << "; aperiodic: "
              << (aperiodic ? "yes" : "no") << "; completely 0-simple: "
              << (c0s ? "yes" : "no") << "\n";
    if (!sep.separable)
        std::cout << "inseparable pair: " << s.display(sep.failing.first) << ", "
                  << s.display(sep.failing.second) << "\n";
    if (c0s) {
        sgp::ReesSpec spec = sgp::rees_representation(s);
        std::cout << "rees: group order " << spec.group.n << ", " << spec.rows << " rows, "
                  << spec.cols << " cols\n";
        std::cout << "sandwich:\n";
        for (int l = 0; l < spec.rows; ++l) {
            for (int i = 0; i < spec.cols; ++i)
                std::cout << (i ? " " : "") << sandwich_entry(spec, l, i);
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_certificate(const Options& opt, const std::string& text) {
    sgp::Word w = sgp::parse_word(text);
    std::pair<sgp::Word, sgp::DerivationTrace> cert;
    try {
        cert = sgp::regularity_certificate(w, opt.step_budget);
    } catch (const sgp::NotConnected&) {
        if (want_json(opt)) {
            emit({{"word", sgp::word_text(w)}, {"connected", false}});
        } else {
            std::cout << "not connected\n";
        }
        return 1;
    }
    if (want_json(opt)) {
        json steps = json::array();
        for (const sgp::RewriteStep& step : cert.second.steps) {
            json sub = json::object();
            for (const auto& [var, image] : step.sub)
                sub[sgp::var_name(var)] = sgp::word_text(image);
            steps.push_back({{"rule", sgp::rule_name(step.rule)},
                             {"dir", sgp::direction_name(step.dir)},
                             {"pos", step.pos},
                             {"sub", sub}});
        }
        emit({{"word", sgp::word_text(w)},
              {"connected", true},
              {"wprime", sgp::word_text(cert.first)},
              {"start", sgp::word_text(cert.second.start)},
              {"steps", steps},
              {"end", sgp::word_text(cert.second.end)}});
    } else {
        std::cout << sgp::serialize_trace(cert.second);
    }
    return 0;
}

int cmd_graph(const Options& opt, const std::string& text) {
    sgp::Word w = sgp::parse_word(text);
    sgp::WordGraph g = sgp::word_graph(w);
    if (want_json(opt)) {
        json edges = json::array();
        for (const auto& [from, to] : g.edges)
            edges.push_back({sgp::var_name(from), sgp::var_name(to)});
        emit({{"edges", edges},
              {"initial", sgp::var_name(g.initial)},
              {"final", sgp::var_name(g.final_vertex)}});
    } else {
        std::cout << sgp::render_graph(g);
    }
    return 0;
}

int cmd_build(const Options& opt, const std::string& expr, const std::string& out_path) {
    sgp::Semigroup s = sgp::resolve_input(expr);
    sgp::save_sgp(out_path, s);
    if (want_json(opt)) {
        emit({{"path", out_path}, {"order", s.n}});
    } else {
        std::cout << "wrote " << out_path << ": order " << s.n << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite semigroup toolkit: membership, identities, rewriting, structure"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_str("text");
    app.add_option("--step-budget", opt.step_budget, "rewriting step budget (0 = default)");

    std::string input, identity, word, expr, out_path;

    CLI::App* validate = app.add_subcommand("validate", "load a table and report basic facts");
    validate->add_option("input", input, ".sgp/.rees path or builder expression")->required();

    CLI::App* member = app.add_subcommand("member", "variety membership test with certificate");
    member->add_option("input", input, ".sgp/.rees path or builder expression")->required();

    CLI::App* identity_cmd = app.add_subcommand("identity", "check an identity by substitution");
    identity_cmd->add_option("input", input, ".sgp/.rees path or builder expression")->required();
    identity_cmd->add_option("identity", identity, "identity, e.g. \"xyx = xyxyx\"")->required();

    CLI::App* ac2 = app.add_subcommand("ac2-identity", "decide an identity of the base semigroup");
    ac2->add_option("identity", identity, "identity, e.g. \"xyxzx = xzxyx\"")->required();

    CLI::App* analyze = app.add_subcommand("analyze", "structure report");
    analyze->add_option("input", input, ".sgp/.rees path or builder expression")->required();

    CLI::App* certificate = app.add_subcommand("certificate", "regularity derivation for a word");
    certificate->add_option("word", word, "word over variables")->required();

    CLI::App* graph = app.add_subcommand("graph", "word graph as a sorted edge list");
    graph->add_option("word", word, "word over variables")->required();

    CLI::App* build = app.add_subcommand("build", "evaluate an expression and write a .sgp file");
    build->add_option("expression", expr, "builder expression")->required();
    build->add_option("output", out_path, "output .sgp path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(opt, input);
        if (app.got_subcommand(member)) return cmd_member(opt, input);
        if (app.got_subcommand(identity_cmd)) return cmd_identity(opt, input, identity);
        if (app.got_subcommand(ac2)) return cmd_ac2_identity(opt, identity);
        if (app.got_subcommand(analyze)) return cmd_analyze(opt, input);
        if (app.got_subcommand(certificate)) return cmd_certificate(opt, word);
        if (app.got_subcommand(graph)) return cmd_graph(opt, word);
        if (app.got_subcommand(build)) return cmd_build(opt, expr, out_path);
    } catch (const sgp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no command\n";
    return 2;
}
