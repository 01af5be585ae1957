#ifndef GOBS_PARSE_HPP
#define GOBS_PARSE_HPP

#include <string>

#include "gobs/freemod.hpp"

namespace gobs {

struct ParseError : std::runtime_error {
    int line;
    int col;
    ParseError(int line, int col, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                             ": " + msg),
          line(line),
          col(col) {}
};

// Input file: `key: value` header (field, vars, order), then a `polys:` block
// with one polynomial per line. `#` starts a comment, blank lines ignored.
struct SystemFile {
    RingPtr ring;
    std::vector<Polynomial> polys;
};

SystemFile parse_system_file(const std::string& text);
SystemFile load_system_file(const std::string& path);

// Infix polynomial expressions: + - * / ^ and parentheses, integer and
// rational literals, variable names from the ring. `/` requires a constant
// right-hand side.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring, int line = 1);

// `x^2*y*e_3` with a 1-based basis index; a bare `e_3` for the unit monomial.
ModuleMonomial parse_module_monomial(const std::string& text, const RingPtr& ring);

std::string to_string(const Monomial& m, const RingPtr& ring);
std::string to_string(const Polynomial& f);
std::string to_string(const ModuleMonomial& m, const RingPtr& ring);
std::string to_string(const ModuleElement& u);

}  // namespace gobs

#endif
