/**
 * @file script.hpp
 * @brief The input language: ring and module declarations plus commands.
 *
 * Grammar (see the README for the full EBNF):
 *   ring R = poly(Q; x, y) / (x^2);
 *   module M = ideal(x^3, y^3);
 *   rho M;
 */
#ifndef RRLAB_SCRIPT_HPP
#define RRLAB_SCRIPT_HPP

#include <map>
#include <variant>

#include "rrlab/graded_ring.hpp"

namespace rrlab {

class parse_error : public std::runtime_error {
public:
    parse_error(int line, int col, const std::string& msg)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line(line), col(col), message(msg) {}
    int line, col;
    std::string message;
};

struct RingDecl {
    std::string name;
    Field field;
    std::vector<std::string> vars;
    std::vector<Polynomial> defining;
    int line = 0, col = 0;
    bool operator==(const RingDecl& o) const {
        return name == o.name && field == o.field && vars == o.vars && defining == o.defining;
    }
};

enum class ModuleKind { ideal, cyclic, coker };

struct ModuleDecl {
    std::string name;
    ModuleKind kind = ModuleKind::ideal;
    std::string over; // ring name (resolved at parse time)
    std::vector<Polynomial> gens;
    std::vector<std::vector<Polynomial>> matrix; // coker rows
    int line = 0, col = 0;
    bool operator==(const ModuleDecl& o) const {
        return name == o.name && kind == o.kind && over == o.over && gens == o.gens && matrix == o.matrix;
    }
};

struct Command {
    std::string verb;
    std::vector<std::string> names;
    std::optional<int> index; // positional integer argument
    std::map<std::string, int> int_opts;
    std::map<std::string, std::string> str_opts;
    std::optional<Polynomial> with;
    int line = 0, col = 0;
    bool operator==(const Command& o) const {
        return verb == o.verb && names == o.names && index == o.index && int_opts == o.int_opts &&
               str_opts == o.str_opts && with == o.with;
    }
};

using Statement = std::variant<RingDecl, ModuleDecl, Command>;

struct SessionScript {
    std::vector<Statement> statements;
    bool operator==(const SessionScript& o) const { return statements == o.statements; }
};

/// Parses a script; throws parse_error with a 1-based line:column position.
SessionScript parse_script(const std::string& text);

/// Canonical text form; parse(pretty_print(s)) equals s.
std::string pretty_print(const SessionScript& script);

} // namespace rrlab

#endif
