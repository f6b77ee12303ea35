#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gvc/endomorphism.hpp"
#include "gvc/group_expr.hpp"
#include "gvc/polynomial.hpp"

namespace gvc {

class SyntaxError : public Error {
 public:
  SyntaxError(int line, int col, const std::string& expected)
      : Error("SyntaxError",
              "line " + std::to_string(line) + ", col " + std::to_string(col) + ": expected " +
                  expected),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

// Grammar (whitespace-insensitive):
//   expr := "trivial" | "Ga(" nat ")" | "torus(" nat ")"
//         | "abelian(" nat [";" intpoly] ")" | "simple(" type ")"
//         | "ext(" expr "," expr ")" | "prod(" expr {"," expr} ")"
//         | "isog(" expr ")" | "GL(" nat ")" | "SL(" nat ")" | "PGL(" nat ")"
//   type := ("A"|"B"|"C"|"D") nat | "E6" | "E7" | "E8" | "F4" | "G2"
// Inputs above 64 KiB are rejected. Semantic checks live in validate().
GroupExpr parse_expr(const std::string& text);

// Signed integer polynomial in t, e.g. "t^2+3t+5".
IntPoly parse_intpoly(const std::string& text);

// One clause of an endomorphism spec before label resolution.
struct EndoBlockSpec {
  std::string glob;  // matches generator labels, '*' and '?' wildcards
  std::variant<RatMatrix, IntPoly, Rat> action;
};

struct EndoSpec {
  std::optional<Int> frobenius_q;   // "frobenius(q)"
  std::optional<Rat> global_scalar; // bare "scalar m"
  std::vector<EndoBlockSpec> blocks;
};

// endo := "frobenius(" nat ")" | "scalar" rat | block {[";"] block}
// block := "block(" glob ":" ("matrix" [[..],..] | "charpoly" intpoly
//          | "scalar" rat) ")"
EndoSpec parse_endo(const std::string& text);

// Expands the spec against a presentation: globs resolve to label blocks,
// "frobenius(q)" to the standard Frobenius blocks, a bare scalar to one
// scalar block per degree.
EndomorphismAction resolve_endo(const EndoSpec& spec, const CohomologyPresentation& pres);

bool glob_match(const std::string& pattern, const std::string& text);

}  // namespace gvc
