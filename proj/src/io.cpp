#include "sgp/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sgp/errors.hpp"

namespace sgp {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(std::move(tok));
    return out;
}

// Reads all nonblank lines; a file that does not open is an IoError.
std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError(path + ": cannot open");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (tokens_of(line).empty()) continue;
        lines.push_back(line);
    }
    return lines;
}

int parse_int(const std::string& tok, const std::string& path, const std::string& what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw IoError(path + ": " + what + " is not a number: \"" + tok + "\"");
    }
    if (used != tok.size())
        throw IoError(path + ": " + what + " is not a number: \"" + tok + "\"");
    return value;
}

std::string dir_of(const std::string& path) {
    std::size_t cut = path.find_last_of('/');
    return cut == std::string::npos ? std::string() : path.substr(0, cut + 1);
}

bool ends_with(const std::string& text, const std::string& suffix) {
    return text.size() >= suffix.size() &&
           text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string trim(const std::string& text) {
    std::size_t a = 0, b = text.size();
    while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
    return text.substr(a, b - a);
}

}  // namespace

Semigroup load_sgp(const std::string& path) {
    std::vector<std::string> lines = read_lines(path);
    if (lines.empty()) throw IoError(path + ": empty file");
    std::vector<std::string> head = tokens_of(lines[0]);
    if (head.size() != 1) throw IoError(path + ": first line must be the order alone");
    int n = parse_int(head[0], path, "order");
    if (n < 1) throw IoError(path + ": order must be positive");
    if (static_cast<int>(lines.size()) < 1 + n)
        throw IoError(path + ": expected " + std::to_string(n) + " table rows");

    std::vector<std::vector<int>> rows(n);
    for (int i = 0; i < n; ++i) {
        std::vector<std::string> toks = tokens_of(lines[1 + i]);
        if (static_cast<int>(toks.size()) != n)
            throw IoError(path + ": row " + std::to_string(i) + " has " +
                          std::to_string(toks.size()) + " entries, expected " +
                          std::to_string(n));
        for (const std::string& tok : toks)
            rows[i].push_back(parse_int(tok, path, "table entry"));
    }

    std::vector<std::string> labels;
    std::size_t next = 1 + static_cast<std::size_t>(n);
    if (next < lines.size()) {
        std::vector<std::string> toks = tokens_of(lines[next]);
        if (toks[0] != "labels:")
            throw IoError(path + ": unexpected content after the table");
        if (static_cast<int>(toks.size()) != n + 1)
            throw IoError(path + ": labels line must carry " + std::to_string(n) + " names");
        labels.assign(toks.begin() + 1, toks.end());
        ++next;
    }
    if (next < lines.size()) throw IoError(path + ": unexpected content after the table");
    return from_table(std::move(rows), std::move(labels));
}

void save_sgp(const std::string& path, const Semigroup& s) {
    std::ostringstream out;
    out << s.n << "\n";
    for (int i = 0; i < s.n; ++i) {
        for (int j = 0; j < s.n; ++j) out << (j ? " " : "") << s.at(i, j);
        out << "\n";
    }
    if (s.has_labels()) {
        out << "labels:";
        for (const std::string& label : s.labels) {
            if (label.empty() || tokens_of(label).size() != 1)
                throw IoError(path + ": label \"" + label + "\" cannot be serialized");
            out << " " << label;
        }
        out << "\n";
    }
    std::ofstream file(path);
    if (!file) throw IoError(path + ": cannot open for writing");
    file << out.str();
    if (!file.flush()) throw IoError(path + ": write failed");
}

ReesSpec load_rees_file(const std::string& path) {
    std::vector<std::string> lines = read_lines(path);
    if (lines.size() < 2) throw IoError(path + ": expected group and dims lines");
    std::vector<std::string> head = tokens_of(lines[0]);
    if (head.size() != 2 || head[0] != "group")
        throw IoError(path + ": first line must be \"group <name-or-sgp-path>\"");

    ReesSpec spec;
    if (ends_with(head[1], ".sgp")) {
        std::string group_path = head[1];
        if (group_path[0] != '/') group_path = dir_of(path) + group_path;
        spec.group = load_sgp(group_path);
    } else {
        spec.group = build_named(head[1]);
    }
    if (!spec.group.has_labels())
        throw IoError(path + ": the group must carry element labels");
    for (const std::string& label : spec.group.labels)
        if (label == "0")
            throw IoError(path + ": group label \"0\" is ambiguous with the zero mark");

    spec.identity = -1;
    for (int e = 0; e < spec.group.n && spec.identity < 0; ++e) {
        bool ident = true;
        for (int x = 0; x < spec.group.n && ident; ++x)
            ident = spec.group.at(e, x) == x && spec.group.at(x, e) == x;
        if (ident) spec.identity = e;
    }
    if (spec.identity < 0) throw InvalidSpec("group has no identity element");

    std::vector<std::string> dims = tokens_of(lines[1]);
    if (dims.size() != 3 || dims[0] != "dims")
        throw IoError(path + ": second line must be \"dims <rows> <cols>\"");
    spec.rows = parse_int(dims[1], path, "row count");
    spec.cols = parse_int(dims[2], path, "column count");
    if (spec.rows < 1 || spec.cols < 1) throw IoError(path + ": dims must be positive");
    if (static_cast<int>(lines.size()) != 2 + spec.rows)
        throw IoError(path + ": expected " + std::to_string(spec.rows) + " sandwich rows");

    spec.sandwich.assign(spec.rows, {});
    for (int l = 0; l < spec.rows; ++l) {
        std::vector<std::string> toks = tokens_of(lines[2 + l]);
        if (static_cast<int>(toks.size()) != spec.cols)
            throw IoError(path + ": sandwich row " + std::to_string(l) + " has " +
                          std::to_string(toks.size()) + " entries, expected " +
                          std::to_string(spec.cols));
        for (const std::string& tok : toks) {
            if (tok == "0") {
                spec.sandwich[l].push_back(-1);
                continue;
            }
            int found = -1;
            for (int g = 0; g < spec.group.n && found < 0; ++g)
                if (spec.group.labels[g] == tok) found = g;
            if (found < 0)
                throw IoError(path + ": unknown group element label \"" + tok + "\"");
            spec.sandwich[l].push_back(found);
        }
    }
    return spec;
}

Semigroup resolve_input(const std::string& text) {
    std::string expr = trim(text);
    if (expr.empty()) throw IoError("empty input expression");
    if (ends_with(expr, ")")) {
        std::size_t open = expr.find('(');
        if (open == std::string::npos) throw IoError("unbalanced parentheses: " + expr);
        std::string fn = trim(expr.substr(0, open));
        std::string args = expr.substr(open + 1, expr.size() - open - 2);
        if (fn == "rees") return rees_semigroup(load_rees_file(trim(args)));
        if (fn == "product") {
            int depth = 0;
            std::size_t comma = std::string::npos;
            for (std::size_t i = 0; i < args.size(); ++i) {
                if (args[i] == '(') ++depth;
                if (args[i] == ')') --depth;
                if (args[i] == ',' && depth == 0) {
                    comma = i;
                    break;
                }
            }
            if (comma == std::string::npos)
                throw IoError("product needs two operands: " + expr);
            return direct_product(resolve_input(args.substr(0, comma)),
                                  resolve_input(args.substr(comma + 1)));
        }
        throw IoError("unknown expression form: " + expr);
    }
    if (ends_with(expr, ".sgp")) return load_sgp(expr);
    if (ends_with(expr, ".rees")) return rees_semigroup(load_rees_file(expr));
    return build_named(expr);
}

}  // namespace sgp
