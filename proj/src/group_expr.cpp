#include "gvc/group_expr.hpp"

#include <sstream>

namespace gvc {

namespace {

GroupExprPtr wrap(GroupExpr e) { return std::make_shared<const GroupExpr>(std::move(e)); }

}  // namespace

GroupExpr trivial_group() { return GroupExpr(Trivial{}); }
GroupExpr unipotent(std::int64_t dim) { return GroupExpr(Unipotent{dim}); }
GroupExpr torus(std::int64_t rank) { return GroupExpr(Torus{rank}); }
GroupExpr simple_group(DynkinType type) { return GroupExpr(SimplyConnectedSimple{type}); }

GroupExpr abelian(std::int64_t g, std::optional<IntPoly> charpoly) {
  return GroupExpr(AbelianVariety{g, std::move(charpoly)});
}

GroupExpr extension(GroupExpr normal, GroupExpr quotient) {
  return GroupExpr(Extension{wrap(std::move(normal)), wrap(std::move(quotient))});
}

GroupExpr product(std::vector<GroupExpr> factors) {
  std::vector<GroupExprPtr> ptrs;
  ptrs.reserve(factors.size());
  for (auto& f : factors) ptrs.push_back(wrap(std::move(f)));
  return GroupExpr(Product{std::move(ptrs)});
}

GroupExpr isogenous(GroupExpr inner) { return GroupExpr(Isogenous{wrap(std::move(inner))}); }

GroupExpr gl_group(int n) {
  if (n < 1) throw Error("RankOutOfRange", "GL(n) needs n >= 1");
  if (n == 1) return torus(1);
  return extension(sl_group(n), torus(1));
}

GroupExpr sl_group(int n) {
  if (n < 1) throw Error("RankOutOfRange", "SL(n) needs n >= 1");
  if (n == 1) return trivial_group();
  return simple_group(make_dynkin(DynkinFamily::A, n - 1));
}

GroupExpr pgl_group(int n) {
  if (n < 1) throw Error("RankOutOfRange", "PGL(n) needs n >= 1");
  if (n == 1) return trivial_group();
  return isogenous(sl_group(n));
}

namespace {

void validate_walk(const GroupExpr& e, const std::string& path, std::vector<ValidationIssue>& out) {
  auto issue = [&](std::string code, std::string message) {
    out.push_back({path, std::move(code), std::move(message)});
  };
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Unipotent>) {
          if (node.dim < 0) issue("NegativeDimension", "unipotent dimension must be nonnegative");
        } else if constexpr (std::is_same_v<T, Torus>) {
          if (node.rank < 0) issue("NegativeDimension", "torus rank must be nonnegative");
        } else if constexpr (std::is_same_v<T, SimplyConnectedSimple>) {
          if (auto err = dynkin_rank_error(node.type)) issue("RankOutOfRange", *err);
        } else if constexpr (std::is_same_v<T, AbelianVariety>) {
          if (node.g < 0) issue("NegativeDimension", "abelian dimension must be nonnegative");
          if (node.frobenius_charpoly) {
            const IntPoly& p = *node.frobenius_charpoly;
            if (p.degree() != 2 * node.g)
              issue("BadCharPolyDegree", "frobenius charpoly must have degree 2g = " +
                                             std::to_string(2 * node.g) + ", got degree " +
                                             std::to_string(p.degree()));
            else if (!p.is_monic())
              issue("BadCharPolyDegree", "frobenius charpoly must be monic");
          }
        } else if constexpr (std::is_same_v<T, Extension>) {
          validate_walk(*node.normal, path.empty() ? "ext.n" : path + ".ext.n", out);
          validate_walk(*node.quotient, path.empty() ? "ext.q" : path + ".ext.q", out);
        } else if constexpr (std::is_same_v<T, Product>) {
          if (node.factors.empty()) issue("EmptyProduct", "product needs at least one factor");
          for (std::size_t i = 0; i < node.factors.size(); ++i) {
            std::string leg = "prod.f" + std::to_string(i + 1);
            validate_walk(*node.factors[i], path.empty() ? leg : path + "." + leg, out);
          }
        } else if constexpr (std::is_same_v<T, Isogenous>) {
          validate_walk(*node.inner, path.empty() ? "isog" : path + ".isog", out);
        }
      },
      e.node());
}

}  // namespace

std::vector<ValidationIssue> validate(const GroupExpr& expr) {
  std::vector<ValidationIssue> out;
  validate_walk(expr, "", out);
  return out;
}

void validate_or_throw(const GroupExpr& expr) {
  auto issues = validate(expr);
  if (issues.empty()) return;
  std::ostringstream msg;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i) msg << "; ";
    if (!issues[i].path.empty()) msg << issues[i].path << ": ";
    msg << issues[i].message;
  }
  throw Error(issues.front().code, msg.str());
}

GroupExpr normalize(const GroupExpr& expr) {
  return std::visit(
      [&](const auto& node) -> GroupExpr {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Extension>) {
          return extension(normalize(*node.normal), normalize(*node.quotient));
        } else if constexpr (std::is_same_v<T, Product>) {
          GroupExpr acc = normalize(*node.factors.front());
          for (std::size_t i = 1; i < node.factors.size(); ++i)
            acc = extension(std::move(acc), normalize(*node.factors[i]));
          return acc;
        } else if constexpr (std::is_same_v<T, Isogenous>) {
          return normalize(*node.inner);
        } else {
          return GroupExpr(node);
        }
      },
      expr.node());
}

std::int64_t dim(const GroupExpr& expr) {
  return std::visit(
      [&](const auto& node) -> std::int64_t {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Trivial>) {
          return 0;
        } else if constexpr (std::is_same_v<T, Unipotent>) {
          return node.dim;
        } else if constexpr (std::is_same_v<T, Torus>) {
          return node.rank;
        } else if constexpr (std::is_same_v<T, SimplyConnectedSimple>) {
          return dynkin_dimension(node.type);
        } else if constexpr (std::is_same_v<T, AbelianVariety>) {
          return node.g;
        } else if constexpr (std::is_same_v<T, Extension>) {
          return dim(*node.normal) + dim(*node.quotient);
        } else if constexpr (std::is_same_v<T, Product>) {
          std::int64_t acc = 0;
          for (const auto& f : node.factors) acc += dim(*f);
          return acc;
        } else {
          return dim(*node.inner);
        }
      },
      expr.node());
}

bool structurally_equal(const GroupExpr& a, const GroupExpr& b) {
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      [&](const auto& na) -> bool {
        using T = std::decay_t<decltype(na)>;
        const T& nb = *b.as<T>();
        if constexpr (std::is_same_v<T, Trivial>) {
          return true;
        } else if constexpr (std::is_same_v<T, Unipotent>) {
          return na.dim == nb.dim;
        } else if constexpr (std::is_same_v<T, Torus>) {
          return na.rank == nb.rank;
        } else if constexpr (std::is_same_v<T, SimplyConnectedSimple>) {
          return na.type == nb.type;
        } else if constexpr (std::is_same_v<T, AbelianVariety>) {
          return na.g == nb.g && na.frobenius_charpoly == nb.frobenius_charpoly;
        } else if constexpr (std::is_same_v<T, Extension>) {
          return structurally_equal(*na.normal, *nb.normal) &&
                 structurally_equal(*na.quotient, *nb.quotient);
        } else if constexpr (std::is_same_v<T, Product>) {
          if (na.factors.size() != nb.factors.size()) return false;
          for (std::size_t i = 0; i < na.factors.size(); ++i)
            if (!structurally_equal(*na.factors[i], *nb.factors[i])) return false;
          return true;
        } else {
          return structurally_equal(*na.inner, *nb.inner);
        }
      },
      a.node());
}

std::string pretty_print(const GroupExpr& expr) {
  return std::visit(
      [&](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Trivial>) {
          return "trivial";
        } else if constexpr (std::is_same_v<T, Unipotent>) {
          return "Ga(" + std::to_string(node.dim) + ")";
        } else if constexpr (std::is_same_v<T, Torus>) {
          return "torus(" + std::to_string(node.rank) + ")";
        } else if constexpr (std::is_same_v<T, SimplyConnectedSimple>) {
          return "simple(" + to_string(node.type) + ")";
        } else if constexpr (std::is_same_v<T, AbelianVariety>) {
          std::string s = "abelian(" + std::to_string(node.g);
          if (node.frobenius_charpoly) s += "; " + node.frobenius_charpoly->str();
          return s + ")";
        } else if constexpr (std::is_same_v<T, Extension>) {
          return "ext(" + pretty_print(*node.normal) + ", " + pretty_print(*node.quotient) + ")";
        } else if constexpr (std::is_same_v<T, Product>) {
          std::string s = "prod(";
          for (std::size_t i = 0; i < node.factors.size(); ++i) {
            if (i) s += ", ";
            s += pretty_print(*node.factors[i]);
          }
          return s + ")";
        } else {
          return "isog(" + pretty_print(*node.inner) + ")";
        }
      },
      expr.node());
}

}  // namespace gvc
