#pragma once

// Recursive-descent parser for the ASCII formula syntax.
//
//   atom    := [a-z][a-z0-9_]*
//   group   := "{" "A" "}" | "{" id ("," id)* "}"
//   unary   := "~"u | "Box"g u | "Dia"g u | "Forall"g u | "Exists"g u
//            | "K"g u | "B"g u | "<K"g">"u | "<B"g">"u | "[share"g"]"u
//            | "(" formula ")" | atom
//   formula := binary over & | -> <->  ("->" right-associative)
//
// "{A}" denotes the whole agent universe. K and B only take a singleton
// group or {A}.

#include <stdexcept>
#include <string>

#include "topoevid/formula.hpp"

namespace topoevid {

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"), pos(pos) {}
};

// Parses `text`, interning new atom/agent names into `v`.
FormulaPtr parse_formula(const std::string& text, Vocab& v);

// Parses a bare group such as "{a,b}", "a,b" or "A".
Group parse_group(const std::string& text, Vocab& v);

}  // namespace topoevid
