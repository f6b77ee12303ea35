#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gvc/dynkin.hpp"
#include "gvc/polynomial.hpp"

namespace gvc {

class GroupExpr;
using GroupExprPtr = std::shared_ptr<const GroupExpr>;

struct Trivial {};

struct Unipotent {
  std::int64_t dim = 0;
};

struct Torus {
  std::int64_t rank = 0;
};

struct SimplyConnectedSimple {
  DynkinType type;
};

struct AbelianVariety {
  std::int64_t g = 0;
  // Monic of degree 2g; constant term q^g is checked at point-count time.
  std::optional<IntPoly> frobenius_charpoly;
};

struct Extension {
  GroupExprPtr normal;    // the normal subvariety
  GroupExprPtr quotient;  // the quotient
};

struct Product {
  std::vector<GroupExprPtr> factors;
};

struct Isogenous {
  GroupExprPtr inner;
};

// Structural description of a group variety. Immutable; copies are cheap.
class GroupExpr {
 public:
  using Node = std::variant<Trivial, Unipotent, Torus, SimplyConnectedSimple, AbelianVariety,
                            Extension, Product, Isogenous>;

  GroupExpr() : node_(Trivial{}) {}
  explicit GroupExpr(Node node) : node_(std::move(node)) {}

  const Node& node() const { return node_; }

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node_);
  }

 private:
  Node node_;
};

GroupExpr trivial_group();
GroupExpr unipotent(std::int64_t dim);
GroupExpr torus(std::int64_t rank);
GroupExpr simple_group(DynkinType type);
GroupExpr abelian(std::int64_t g, std::optional<IntPoly> charpoly = std::nullopt);
GroupExpr extension(GroupExpr normal, GroupExpr quotient);
GroupExpr product(std::vector<GroupExpr> factors);
GroupExpr isogenous(GroupExpr inner);

// Builtins. GL(n) is the extension of G_m by SL(n); GL(1) is the torus.
GroupExpr gl_group(int n);
GroupExpr sl_group(int n);
GroupExpr pgl_group(int n);

struct ValidationIssue {
  std::string path;  // dot-joined node path, "" for the root
  std::string code;
  std::string message;
};

// Empty result means the expression is well formed.
std::vector<ValidationIssue> validate(const GroupExpr& expr);
void validate_or_throw(const GroupExpr& expr);

// Erases Isogenous nodes and rewrites Product nodes as left-associated
// Extensions. Idempotent; preserves the cohomology presentation.
GroupExpr normalize(const GroupExpr& expr);

std::int64_t dim(const GroupExpr& expr);

bool structurally_equal(const GroupExpr& a, const GroupExpr& b);

// Canonical text in the input grammar; parse(pretty_print(e)) == e for
// normalized e.
std::string pretty_print(const GroupExpr& expr);

}  // namespace gvc
