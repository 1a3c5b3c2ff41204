// io.hpp — document parsing and canonical printing for the CLI: graded module
// presentations over F_p, Lambda = Z_p[[T]] presentations with joint
// precision, and congruence-group generator files with optional valuation
// tables.  parse-then-print round-trips to a canonical form.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iwa/lambda.hpp"
#include "iwa/module.hpp"
#include "iwa/pgroup.hpp"

namespace iwa {

enum class DocKind { graded, lambda, group };

// One parsed input file.  Exactly the member matching `kind` is populated.
//   graded: `ring Fp p=5 vars=X,Y weights=1,1`, a `gens g` line, an optional
//           `shifts s0,s1,...` line, then relation rows of comma-separated
//           polynomials.
//   lambda: `ring Zp[[T]] p=3 prec=3^12,T^20`, then the same module body with
//           series-literal entries (`3 + 2*T^2 + O(3^12, T^20)`, explicit
//           precision tail required, at most the header precision).
//   group:  header line `p N n c`, one matrix per line (n*n integers), and
//           optional valuation-table lines `element-index numerator
//           denominator` (3 integers, 0-based indices).
struct InputDocument {
  DocKind kind = DocKind::graded;
  std::optional<ModulePresentation> graded;
  std::optional<LambdaModule> lambda;
  std::uint32_t lambda_aprec = 0, lambda_bwindow = 0; // header precision
  std::vector<GroupElement> group;
  std::vector<std::pair<std::size_t, Omega>> table; // empty = built-in omega

  ValuationSpec valuation() const; // congruence() or the table
  std::string str() const;         // canonical form; parse(str()) == *this
};

// Throws std::invalid_argument with a line-numbered diagnostic on syntax or
// invariant errors (e.g. "p must be prime").
InputDocument parse_document(const std::string& text);

// Series literal, prime read from the precision tail: `3 + 2*T^2 + O(3^12, T^20)`.
PadicSeries parse_series(const std::string& text);

} // namespace iwa
