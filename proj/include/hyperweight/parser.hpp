#pragma once

#include <string_view>

#include "hyperweight/polynomial.hpp"

namespace hyperweight {

// Element grammar: 0 | 1 | <int> | g^<int>. Integers map through the prime
// subfield (n mod p); g is the field's canonical generator.
FieldElement parse_element(std::string_view text, const Field& f);

// Polynomial grammar (whitespace insensitive):
//   poly   := factor (('+'|'-') factor)*
//   factor := atom ('*' atom)*
//   atom   := coeff | var | '(' poly ')'
//   var    := 't'INT('^'INT)?
//   coeff  := INT | 'g^'INT
// A single leading sign before the first factor is also accepted. The result
// is in expanded canonical form. Errors report the byte position.
Polynomial parse_polynomial(std::string_view text, const Field& f,
                            uint32_t arity);

}  // namespace hyperweight
