#include "lincnf/dimacs.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "lincnf/error.hpp"

namespace lincnf {

namespace {

bool parse_int(const std::string& token, long long& out) {
    if (token.empty()) return false;
    std::size_t i = token[0] == '-' ? 1 : 0;
    if (i == token.size()) return false;
    for (; i < token.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
    }
    errno = 0;
    out = std::strtoll(token.c_str(), nullptr, 10);
    return errno == 0;
}

std::string at_line(int line) { return " (line " + std::to_string(line) + ")"; }

}  // namespace

DimacsDocument parse_dimacs(const std::string& text) {
    DimacsDocument doc;
    bool header_seen = false;
    std::vector<std::vector<int>> raw_clauses;
    std::vector<int> current;
    int current_clause_line = 0;

    std::istringstream stream(text);
    std::string line;
    int line_number = 0;
    while (std::getline(stream, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == 'c') {
            doc.comments.push_back(line.size() > 1 && line[1] == ' ' ? line.substr(2)
                                                                     : line.substr(1));
            continue;
        }
        if (line[0] == 'p') {
            if (header_seen) {
                raise(Errc::malformed_header, "second header" + at_line(line_number));
            }
            std::istringstream header(line);
            std::string p, fmt;
            long long n = -1, m = -1;
            header >> p >> fmt >> n >> m;
            std::string rest;
            if (p != "p" || fmt != "cnf" || header.fail() || n < 0 || m < 0 ||
                (header >> rest)) {
                raise(Errc::malformed_header, "expected 'p cnf <n> <m>'" + at_line(line_number));
            }
            doc.declared_variable_count = static_cast<int>(n);
            doc.declared_clause_count = static_cast<int>(m);
            header_seen = true;
            continue;
        }
        if (!header_seen) {
            raise(Errc::malformed_header, "clause data before header" + at_line(line_number));
        }
        std::istringstream tokens(line);
        std::string token;
        while (tokens >> token) {
            long long value = 0;
            if (!parse_int(token, value)) {
                raise(Errc::malformed_header,
                      "unexpected token '" + token + "'" + at_line(line_number));
            }
            if (value == 0) {
                raw_clauses.push_back(current);
                current.clear();
                current_clause_line = 0;
                continue;
            }
            long long magnitude = value < 0 ? -value : value;
            if (magnitude > doc.declared_variable_count) {
                raise(Errc::variable_out_of_declared_range,
                      "variable " + std::to_string(magnitude) + " exceeds declared " +
                          std::to_string(doc.declared_variable_count) + at_line(line_number));
            }
            if (current.empty()) current_clause_line = line_number;
            current.push_back(static_cast<int>(value));
        }
    }
    if (!header_seen) raise(Errc::malformed_header, "no 'p cnf' header found");
    if (!current.empty()) {
        // Tolerate a missing terminator on the final clause.
        raw_clauses.push_back(current);
        doc.warnings.push_back("final clause (line " + std::to_string(current_clause_line) +
                               ") not 0-terminated");
    }
    if (static_cast<int>(raw_clauses.size()) != doc.declared_clause_count) {
        raise(Errc::clause_count_mismatch,
              "header declares " + std::to_string(doc.declared_clause_count) + " clauses, found " +
                  std::to_string(raw_clauses.size()));
    }
    doc.formula = build_formula(raw_clauses);
    if (doc.formula.variable_count() < doc.declared_variable_count) {
        doc.warnings.push_back(
            std::to_string(doc.declared_variable_count - doc.formula.variable_count()) +
            " declared variable(s) never occur");
    }
    return doc;
}

DimacsDocument parse_dimacs_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::malformed_header, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_dimacs(buffer.str());
}

std::string write_dimacs(const Formula& f, std::optional<int> declared_n,
                         const std::vector<std::string>& comments) {
    int n = 0;
    if (declared_n) {
        n = *declared_n;
    } else {
        for (Var x : f.variables()) n = std::max(n, static_cast<int>(x));
    }
    std::ostringstream out;
    for (const std::string& comment : comments) out << "c " << comment << "\n";
    out << "p cnf " << n << " " << f.clause_count() << "\n";
    for (const Clause& c : f.clauses()) {
        for (const Literal& lit : c.literals()) out << lit.signed_value() << " ";
        out << "0\n";
    }
    return out.str();
}

}  // namespace lincnf
