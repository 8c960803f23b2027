#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hhgabber/ideal.hpp"
#include "hhgabber/poisson.hpp"
#include "hhgabber/weyl.hpp"

namespace hhgabber {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column)
        : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

/// Shared text grammar: terms joined by +/-, a term is `coef`, `coef*mono`
/// or `mono`, coef is `int` or `int/posint`, mono is `name^exp` factors
/// joined by `*`. No parentheses.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

/// Same grammar over x1..xn, d1..dn; factors multiply left to right through
/// the normal-ordering product, so "d1*x1" parses to x1*d1 + 1.
WeylOperator parse_weyl_operator(const std::string& text, std::size_t n);

/// A parsed stanza file: ring/ideal/dmodule/bracket/radical/check
/// declarations. `ideal` and `dmodule` are mutually exclusive.
struct Problem {
    RingPtr ring;
    std::optional<Ideal> ideal;
    std::string ideal_name;
    std::optional<DModulePresentation> dmodule;
    std::string dmodule_name;
    bool bracket_canonical = false;
    std::optional<DeformationTable> bracket_table;
    std::optional<std::vector<Polynomial>> user_radical;
    bool check_requested = false;

    /// Canonical echo: stanzas re-rendered deterministically; parsing the
    /// echo reproduces the problem.
    std::string echo() const;
};

Problem parse_input(const std::string& text);

}  // namespace hhgabber
