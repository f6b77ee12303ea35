#include "gvc/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace gvc {

std::vector<int> CohomologyPresentation::degrees() const {
  std::vector<int> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.degree);
  return out;
}

std::string PoincarePolynomial::str() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out << ", ";
    out << coeffs[i].get_str();
  }
  out << "]";
  return out.str();
}

namespace {

std::string join(const std::string& prefix, const std::string& tag) {
  return prefix.empty() ? tag : prefix + "." + tag;
}

void collect(const GroupExpr& e, const std::string& path, std::vector<Generator>& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Trivial> || std::is_same_v<T, Unipotent>) {
          // no higher cohomology
        } else if constexpr (std::is_same_v<T, Torus>) {
          const std::string base = join(path, "torus");
          for (std::int64_t i = 1; i <= node.rank; ++i)
            out.push_back({base + ".g" + std::to_string(i), 1, LinearWeight{1}});
        } else if constexpr (std::is_same_v<T, SimplyConnectedSimple>) {
          const std::string base = join(path, "ss." + to_string(node.type));
          const auto degrees = invariant_degrees(node.type);
          for (std::size_t i = 0; i < degrees.size(); ++i)
            out.push_back({base + ".g" + std::to_string(i + 1), 2 * degrees[i] - 1,
                           LinearWeight{degrees[i]}});
        } else if constexpr (std::is_same_v<T, AbelianVariety>) {
          const std::string base = join(path, "ab");
          std::shared_ptr<const IntPoly> cp;
          if (node.frobenius_charpoly) cp = std::make_shared<const IntPoly>(*node.frobenius_charpoly);
          for (std::int64_t i = 1; i <= 2 * node.g; ++i)
            out.push_back({base + ".g" + std::to_string(i), 1,
                           AbelianSlot{cp, static_cast<int>(i - 1), base}});
        } else if constexpr (std::is_same_v<T, Extension>) {
          collect(*node.normal, join(path, "ext.n"), out);
          collect(*node.quotient, join(path, "ext.q"), out);
        } else if constexpr (std::is_same_v<T, Product>) {
          // unreachable on normalized input
          for (std::size_t i = 0; i < node.factors.size(); ++i)
            collect(*node.factors[i], join(path, "prod.f" + std::to_string(i + 1)), out);
        } else {
          collect(*node.inner, path, out);
        }
      },
      e.node());
}

}  // namespace

CohomologyPresentation presentation(const GroupExpr& expr) {
  validate_or_throw(expr);
  CohomologyPresentation pres;
  collect(normalize(expr), "", pres.generators);
  std::sort(pres.generators.begin(), pres.generators.end(), [](const Generator& a, const Generator& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.label < b.label;
  });
  return pres;
}

PoincarePolynomial poincare(const CohomologyPresentation& pres) {
  PoincarePolynomial p;
  p.coeffs = {Int(1)};
  for (const auto& g : pres.generators) {
    std::vector<Int> next(p.coeffs.size() + static_cast<std::size_t>(g.degree), Int(0));
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
      next[i] += p.coeffs[i];
      next[i + static_cast<std::size_t>(g.degree)] += p.coeffs[i];
    }
    p.coeffs = std::move(next);
  }
  return p;
}

Int betti(const CohomologyPresentation& pres, std::size_t r) {
  const auto p = poincare(pres);
  return r < p.coeffs.size() ? p.coeffs[r] : Int(0);
}

Int euler_characteristic(const CohomologyPresentation& pres) {
  // Every factor (1 + (-1)^odd) vanishes once a generator exists.
  return pres.generators.empty() ? Int(1) : Int(0);
}

std::int64_t cohomological_dimension(const CohomologyPresentation& pres) {
  std::int64_t total = 0;
  for (const auto& g : pres.generators) total += g.degree;
  return total;
}

std::string frobenius_to_string(const FrobeniusAnnotation& f) {
  if (const auto* w = std::get_if<LinearWeight>(&f)) return "q^" + std::to_string(w->d);
  if (const auto* s = std::get_if<AbelianSlot>(&f)) {
    std::string out = "weil(" + s->node_path;
    if (s->charpoly) out += "; " + s->charpoly->str();
    return out + ")";
  }
  return "unspecified";
}

}  // namespace gvc
