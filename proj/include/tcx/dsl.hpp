#ifndef TCX_DSL_HPP_
#define TCX_DSL_HPP_

#include <string>
#include <string_view>

#include "tcx/presentation.hpp"

namespace tcx {

  // Parses the presentation language:
  //
  //   # comment
  //   gens a b c d e f;            involutive generators, in index order
  //   coxeter [3,3,4,3,3];         string-diagram relators on the generators
  //   let s = d^(c b);             named word (conjugation)
  //   let t = c^(d e);
  //   rel (a s t)^4;               relator; integer exponent is a power
  //   sub VERTEX = b c d e f;      subgroup generators, one per factor;
  //                                parenthesize products: (d1 d2) a
  //
  // Throws ParseError carrying the line and column of the offending token.
  Presentation parse_presentation(std::string_view text);

  Presentation load_presentation(std::string const& path);

  // Writes p back in the presentation language. Every generator must be
  // involutive; Coxeter relators are written out explicitly.
  std::string to_dsl(Presentation const& p);

}  // namespace tcx

#endif  // TCX_DSL_HPP_
