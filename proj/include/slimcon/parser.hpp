#pragma once

#include <string>

#include "slimcon/formula.hpp"

namespace slimcon {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                           std::to_string(col)),
        line(line),
        col(col) {}
  int line, col;
};

// Parses the ASCII formula syntax:
//
//   formula := quant | impl
//   quant   := ("ALL" | "EX") ident "." formula
//   impl    := disj ["->" formula]
//   disj    := conj {"|" conj}
//   conj    := neg {"&" neg}
//   neg     := "~" neg | atom
//   atom    := "(" formula ")" | ident "(" termlist ")" | term ("="|"<="|"<") term
//   term    := ident | ident "(" termlist ")"
//
// "<=" is the order relation of the signature; "<" is sugar for the strict
// order (a <= b & ~(a = b)). Symbols are validated against sig, including
// arities; an identifier in term position that names no function is a
// variable. "+" and "*" are accepted as identifiers.
Formula parse(const std::string& src, const Signature& sig);

}  // namespace slimcon
