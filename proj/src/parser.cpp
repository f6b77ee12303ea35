#include "gvc/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace gvc {

namespace {

constexpr std::size_t kMaxInput = 64 * 1024;

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  char take_raw() {
    const char c = peek_raw();
    if (pos_ < text_.size()) advance();
    return c;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("'") + c + "'");
  }

  [[noreturn]] void fail(const std::string& expected) { throw SyntaxError(line_, col_, expected); }

  std::string identifier() {
    skip_ws();
    std::string word;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])))) {
      word += text_[pos_];
      advance();
    }
    return word;
  }

  Int natural() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("a number");
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits += text_[pos_];
      advance();
    }
    return Int(digits);
  }

  long bounded_natural(const char* what) {
    const Int n = natural();
    if (!n.fits_slong_p()) fail(std::string(what) + " of reasonable size");
    return n.get_si();
  }

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

IntPoly parse_poly(Cursor& in) {
  // term := [sign] (nat ["t" ["^" nat]] | "t" ["^" nat])
  std::map<unsigned, Int> coeffs;
  bool first = true;
  while (true) {
    int sign = 1;
    if (in.eat('+')) {
      sign = 1;
    } else if (in.eat('-')) {
      sign = -1;
    } else if (!first) {
      break;
    }
    first = false;
    Int coefficient(1);
    bool saw_number = false;
    if (std::isdigit(static_cast<unsigned char>(in.peek()))) {
      coefficient = in.natural();
      saw_number = true;
    }
    unsigned exponent = 0;
    if (in.eat('t')) {
      exponent = 1;
      if (in.eat('^')) {
        const long e = in.bounded_natural("an exponent");
        if (e > 4096) in.fail("an exponent within the polynomial cap");
        exponent = static_cast<unsigned>(e);
      }
    } else if (!saw_number) {
      in.fail("a coefficient or 't'");
    }
    coeffs[exponent] += sign * coefficient;
  }
  std::vector<Int> dense;
  for (const auto& [e, c] : coeffs) {
    if (dense.size() <= e) dense.resize(e + 1, Int(0));
    dense[e] = c;
  }
  return IntPoly(std::move(dense));
}

GroupExpr parse_group(Cursor& in);

DynkinType parse_type(Cursor& in) {
  const std::string word = in.identifier();
  const auto type = dynkin_from_string(word);
  if (!type) in.fail("a Dynkin type (A<n>, B<n>, C<n>, D<n>, E6, E7, E8, F4, G2)");
  return *type;
}

GroupExpr parse_group(Cursor& in) {
  const std::string head = in.identifier();
  if (head == "trivial") return trivial_group();
  if (head == "Ga") {
    in.expect('(');
    const long d = in.bounded_natural("a dimension");
    in.expect(')');
    return unipotent(d);
  }
  if (head == "torus") {
    in.expect('(');
    const long r = in.bounded_natural("a rank");
    in.expect(')');
    return torus(r);
  }
  if (head == "abelian") {
    in.expect('(');
    const long g = in.bounded_natural("a dimension");
    std::optional<IntPoly> charpoly;
    if (in.eat(';')) charpoly = parse_poly(in);
    in.expect(')');
    return abelian(g, std::move(charpoly));
  }
  if (head == "simple") {
    in.expect('(');
    const DynkinType type = parse_type(in);
    in.expect(')');
    return simple_group(type);
  }
  if (head == "ext") {
    in.expect('(');
    GroupExpr normal = parse_group(in);
    in.expect(',');
    GroupExpr quotient = parse_group(in);
    in.expect(')');
    return extension(std::move(normal), std::move(quotient));
  }
  if (head == "prod") {
    in.expect('(');
    std::vector<GroupExpr> factors;
    factors.push_back(parse_group(in));
    while (in.eat(',')) factors.push_back(parse_group(in));
    in.expect(')');
    return product(std::move(factors));
  }
  if (head == "isog") {
    in.expect('(');
    GroupExpr inner = parse_group(in);
    in.expect(')');
    return isogenous(std::move(inner));
  }
  if (head == "GL" || head == "SL" || head == "PGL") {
    in.expect('(');
    const long n = in.bounded_natural("a matrix size");
    in.expect(')');
    if (n < 1) in.fail("a matrix size of at least 1");
    if (n > 2000) in.fail("a matrix size within bounds");
    if (head == "GL") return gl_group(static_cast<int>(n));
    if (head == "SL") return sl_group(static_cast<int>(n));
    return pgl_group(static_cast<int>(n));
  }
  in.fail("one of trivial, Ga, torus, abelian, simple, ext, prod, isog, GL, SL, PGL");
}

Rat parse_rational(Cursor& in) {
  int sign = in.eat('-') ? -1 : 1;
  const Int num = in.natural();
  Int den(1);
  if (in.eat('/')) {
    den = in.natural();
    if (den == 0) in.fail("a nonzero denominator");
  }
  Rat r(sign * num, den);
  r.canonicalize();
  return r;
}

RatMatrix parse_matrix(Cursor& in) {
  in.expect('[');
  std::vector<std::vector<Rat>> rows;
  do {
    in.expect('[');
    std::vector<Rat> row;
    row.push_back(parse_rational(in));
    while (in.eat(',')) row.push_back(parse_rational(in));
    in.expect(']');
    if (!rows.empty() && rows.front().size() != row.size()) in.fail("rows of equal length");
    rows.push_back(std::move(row));
  } while (in.eat(','));
  in.expect(']');
  if (rows.size() != rows.front().size()) in.fail("a square matrix");
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace

GroupExpr parse_expr(const std::string& text) {
  if (text.size() > kMaxInput) throw Error("SyntaxError", "input exceeds 64 KiB");
  Cursor in(text);
  GroupExpr e = parse_group(in);
  if (!in.at_end()) in.fail("end of input");
  return e;
}

IntPoly parse_intpoly(const std::string& text) {
  if (text.size() > kMaxInput) throw Error("SyntaxError", "input exceeds 64 KiB");
  Cursor in(text);
  IntPoly p = parse_poly(in);
  if (!in.at_end()) in.fail("end of input");
  return p;
}

EndoSpec parse_endo(const std::string& text) {
  if (text.size() > kMaxInput) throw Error("SyntaxError", "input exceeds 64 KiB");
  Cursor in(text);
  EndoSpec spec;
  const std::string head = in.identifier();
  if (head == "frobenius") {
    in.expect('(');
    spec.frobenius_q = in.natural();
    in.expect(')');
    if (!in.at_end()) in.fail("end of input");
    return spec;
  }
  if (head == "scalar") {
    spec.global_scalar = parse_rational(in);
    if (!in.at_end()) in.fail("end of input");
    return spec;
  }
  if (head != "block") in.fail("one of frobenius, scalar, block");
  // block list; the first "block" keyword is already consumed
  while (true) {
    in.expect('(');
    in.skip_ws();
    std::string glob;
    while (in.peek_raw() != ':' && in.peek_raw() != '\0' && in.peek_raw() != ')' &&
           !std::isspace(static_cast<unsigned char>(in.peek_raw())))
      glob += in.take_raw();
    if (glob.empty()) in.fail("a label glob");
    in.expect(':');
    const std::string kind = in.identifier();
    EndoBlockSpec block;
    block.glob = glob;
    if (kind == "matrix") {
      block.action = parse_matrix(in);
    } else if (kind == "charpoly") {
      block.action = parse_poly(in);
    } else if (kind == "scalar") {
      block.action = parse_rational(in);
    } else {
      in.fail("one of matrix, charpoly, scalar");
    }
    in.expect(')');
    spec.blocks.push_back(std::move(block));
    in.eat(';');
    if (in.at_end()) break;
    const std::string next = in.identifier();
    if (next != "block") in.fail("another block or end of input");
  }
  return spec;
}

bool glob_match(const std::string& pattern, const std::string& text) {
  // iterative '*'/'?' matcher with backtracking over the last star
  std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

EndomorphismAction resolve_endo(const EndoSpec& spec, const CohomologyPresentation& pres) {
  if (spec.frobenius_q) return frobenius_action(pres, *spec.frobenius_q);

  EndomorphismAction act;
  if (spec.global_scalar) {
    // one scalar block per structural component and degree
    std::map<std::pair<std::string, int>, std::vector<std::string>> grouped;
    for (const auto& g : pres.generators)
      grouped[{label_component(g.label), g.degree}].push_back(g.label);
    for (auto& [key, labels] : grouped) {
      (void)key;
      RatMatrix m(labels.size(), labels.size());
      for (std::size_t i = 0; i < labels.size(); ++i) m.at(i, i) = *spec.global_scalar;
      act.blocks.push_back({std::move(labels), std::move(m)});
    }
    return act;
  }

  for (const auto& block : spec.blocks) {
    std::vector<std::string> matched;
    for (const auto& g : pres.generators)
      if (glob_match(block.glob, g.label)) matched.push_back(g.label);
    if (matched.empty())
      throw Error("UnknownLabel", "glob '" + block.glob + "' matches no generator");
    if (const auto* scalar = std::get_if<Rat>(&block.action)) {
      // scalar blocks split by component and degree to stay homogeneous
      std::map<std::pair<std::string, int>, std::vector<std::string>> grouped;
      for (const auto& g : pres.generators)
        if (glob_match(block.glob, g.label))
          grouped[{label_component(g.label), g.degree}].push_back(g.label);
      for (auto& [key, labels] : grouped) {
        (void)key;
        RatMatrix m(labels.size(), labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i) m.at(i, i) = *scalar;
        act.blocks.push_back({std::move(labels), std::move(m)});
      }
    } else if (const auto* matrix = std::get_if<RatMatrix>(&block.action)) {
      if (matrix->rows() != matched.size())
        throw Error("ShapeMismatch", "glob '" + block.glob + "' matches " +
                                         std::to_string(matched.size()) +
                                         " generators but the matrix has " +
                                         std::to_string(matrix->rows()) + " rows");
      act.blocks.push_back({std::move(matched), *matrix});
    } else {
      const auto& p = std::get<IntPoly>(block.action);
      if (static_cast<std::size_t>(p.degree()) != matched.size())
        throw Error("ShapeMismatch", "glob '" + block.glob + "' matches " +
                                         std::to_string(matched.size()) +
                                         " generators but the charpoly has degree " +
                                         std::to_string(p.degree()));
      act.blocks.push_back({std::move(matched), p});
    }
  }
  return act;
}

}  // namespace gvc
