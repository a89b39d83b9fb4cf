/**
 * @file parse.hpp
 * @brief Recursive-descent parsers for the expression DSL: groups, hull
 *        elements, coefficient fields, series, and cut points. Every parser
 *        consumes the whole input (whitespace-insensitive) and reports
 *        failures as ParseError with a character position. Semantic
 *        problems found while parsing (non-prime localizer, exponent
 *        outside the group, ...) are reported the same way.
 *
 * Grammar (EBNF):
 *   group   := "0" | comp | "lex" "(" group {"," group} ")"
 *            | "omega" "(" rule ")" | "omegaplus1" "(" rule "," comp ")" ;
 *   comp    := "Z" | "Q" | "loc" "{" primes "}" ;
 *   primes  := prime {"," prime} | ">=" prime ;
 *   rule    := "const" "(" comp ")" | "prefixprimes" [ "(" integer ")" ] ;
 *   element := "{" [ entry {"," entry} ] "}" ;  entry := (integer | "top") ":" rational ;
 *   coeff   := "Q" | "quad" "(" integer ")" | "rc" "(" coeff ")" ;
 *   series  := "0" | term { "+" term } ;
 *   term    := coeffval "*" "t^(" element ")" ;
 *   coeffval:= rational | "(" quadext ")" ;
 *   cut     := "t^(" element ")" | quadext ;
 *
 * Nested lex arguments flatten into one finite sum; omega-shaped arguments
 * inside lex are rejected.
 */
#pragma once

#include "ordval/series.hpp"
#include "ordval/defval.hpp"

namespace ordval {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at offset " + std::to_string(pos)), position(pos) {}
};

GroupDescriptor parseGroup(const std::string& text);
HullElement parseElement(const std::string& text);
CoeffField parseCoeffField(const std::string& text);
Series parseSeries(const std::string& text, const CoeffField& k, const GroupDescriptor& G);
CutPoint parseCut(const std::string& text, const GroupDescriptor& G);

std::string cutStr(const CutPoint& cut);

}  // namespace ordval
