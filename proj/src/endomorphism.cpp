#include "gvc/endomorphism.hpp"

#include <algorithm>
#include <map>

namespace gvc {

std::string label_component(const std::string& label) {
  const auto pos = label.rfind(".g");
  return pos == std::string::npos ? label : label.substr(0, pos);
}

namespace {

std::string component_of(const std::string& label) { return label_component(label); }

}  // namespace

ResolvedAction resolve_action(const CohomologyPresentation& pres, const EndomorphismAction& act) {
  std::map<std::string, int> degree_of;
  for (const auto& g : pres.generators) degree_of[g.label] = g.degree;

  std::map<std::string, std::size_t> seen;  // label -> block index
  ResolvedAction out;
  for (std::size_t b = 0; b < act.blocks.size(); ++b) {
    const auto& block = act.blocks[b];
    if (block.labels.empty()) throw Error("BlockMismatch", "empty block");
    int degree = -1;
    for (const auto& label : block.labels) {
      auto it = degree_of.find(label);
      if (it == degree_of.end())
        throw Error("BlockMismatch", "block label " + label + " is not a generator");
      if (!seen.emplace(label, b).second)
        throw Error("BlockMismatch", "generator " + label + " appears in two blocks");
      if (degree == -1) degree = it->second;
      if (it->second != degree)
        throw Error("BlockMismatch", "block mixes degrees " + std::to_string(degree) + " and " +
                                         std::to_string(it->second) + " at " + label);
      // non-split actions (twists across components) are rejected
      if (component_of(label) != component_of(block.labels.front()))
        throw Error("BlockMismatch", "block spans structural components " +
                                         component_of(block.labels.front()) + " and " +
                                         component_of(label));
    }
    RatMatrix m;
    if (const auto* mat = std::get_if<RatMatrix>(&block.action)) {
      if (mat->rows() != block.labels.size() || mat->cols() != block.labels.size())
        throw Error("ShapeMismatch", "block matrix is " + std::to_string(mat->rows()) + "x" +
                                         std::to_string(mat->cols()) + " for " +
                                         std::to_string(block.labels.size()) + " generators");
      m = *mat;
    } else {
      const auto& p = std::get<IntPoly>(block.action);
      if (!p.is_monic()) throw Error("ShapeMismatch", "block charpoly must be monic");
      if (static_cast<std::size_t>(p.degree()) != block.labels.size())
        throw Error("ShapeMismatch", "charpoly degree " + std::to_string(p.degree()) +
                                         " does not match block size " +
                                         std::to_string(block.labels.size()));
      m = RatMatrix::companion(p);
    }
    out.block_labels.push_back(block.labels);
    out.block_matrices.push_back(std::move(m));
  }
  if (seen.size() != pres.generators.size()) {
    for (const auto& g : pres.generators)
      if (!seen.count(g.label))
        throw Error("BlockMismatch", "generator " + g.label + " is not covered by any block");
  }
  return out;
}

Rat graded_trace(const CohomologyPresentation& pres, const EndomorphismAction& act) {
  const auto resolved = resolve_action(pres, act);
  Rat result(1);
  for (const auto& m : resolved.block_matrices) {
    const RatMatrix id = RatMatrix::identity(m.rows());
    result *= (id - m).det();
  }
  return result;
}

std::vector<Rat> d_sequence(const CohomologyPresentation& pres, const EndomorphismAction& act,
                            unsigned n_max) {
  const auto resolved = resolve_action(pres, act);
  std::vector<Rat> out;
  out.reserve(n_max);
  // running powers, one per block
  std::vector<RatMatrix> powers;
  for (const auto& m : resolved.block_matrices) powers.push_back(RatMatrix::identity(m.rows()));
  for (unsigned n = 1; n <= n_max; ++n) {
    Rat d(1);
    for (std::size_t b = 0; b < powers.size(); ++b) {
      powers[b] = powers[b] * resolved.block_matrices[b];
      const RatMatrix id = RatMatrix::identity(powers[b].rows());
      d *= (id - powers[b]).det();
    }
    out.push_back(d);
  }
  return out;
}

RatSeries zeta_series(const std::vector<Rat>& d_values, std::size_t order) {
  if (order < 1 || order > d_values.size())
    throw Error("ShapeMismatch", "zeta truncation order must be within the d sequence");
  RatSeries s(order);
  for (std::size_t n = 1; n <= order; ++n)
    s.coeff(n) = d_values[n - 1] / Rat(static_cast<unsigned long>(n));
  return s.exp();
}

namespace {

Int point_count_walk(const GroupExpr& e, const Int& q, std::vector<std::string>& warnings) {
  return std::visit(
      [&](const auto& node) -> Int {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Trivial>) {
          return Int(1);
        } else if constexpr (std::is_same_v<T, Unipotent>) {
          return int_pow(q, static_cast<unsigned long>(node.dim));
        } else if constexpr (std::is_same_v<T, Torus>) {
          return int_pow(q - 1, static_cast<unsigned long>(node.rank));
        } else if constexpr (std::is_same_v<T, SimplyConnectedSimple>) {
          // q^dim prod (1 - q^{-d}) = q^{#positive roots} prod (q^d - 1)
          const auto degrees = invariant_degrees(node.type);
          unsigned long positive_roots = 0;
          Int count(1);
          for (int d : degrees) {
            positive_roots += static_cast<unsigned long>(d - 1);
            count *= int_pow(q, static_cast<unsigned long>(d)) - 1;
          }
          return count * int_pow(q, positive_roots);
        } else if constexpr (std::is_same_v<T, AbelianVariety>) {
          if (node.g == 0) return Int(1);
          if (!node.frobenius_charpoly)
            throw Error("MissingCharPoly",
                        "abelian node of dimension " + std::to_string(node.g) +
                            " carries no Frobenius charpoly; point counting needs one");
          const IntPoly& f = *node.frobenius_charpoly;
          const Int qg = int_pow(q, static_cast<unsigned long>(node.g));
          if (f.constant_term() != qg)
            throw Error("BadCharPolyConstantTerm",
                        "charpoly constant term " + f.constant_term().get_str() +
                            " differs from q^g = " + qg.get_str());
          // Weil functional equation t^{2g} f(q/t) = q^g f(t); defects warn only
          for (std::int64_t k = 1; k < node.g; ++k) {
            const Int lhs = f.coeff(static_cast<std::size_t>(k));
            const Int rhs = int_pow(q, static_cast<unsigned long>(node.g - k)) *
                            f.coeff(static_cast<std::size_t>(2 * node.g - k));
            if (lhs != rhs)
              warnings.push_back("charpoly " + f.str() +
                                 " violates the Weil functional equation at degree " +
                                 std::to_string(k));
          }
          return f.eval_at_one();
        } else if constexpr (std::is_same_v<T, Extension>) {
          return point_count_walk(*node.normal, q, warnings) *
                 point_count_walk(*node.quotient, q, warnings);
        } else if constexpr (std::is_same_v<T, Product>) {
          Int acc(1);
          for (const auto& f : node.factors) acc *= point_count_walk(*f, q, warnings);
          return acc;
        } else {
          // isogenies preserve point counts over finite fields
          return point_count_walk(*node.inner, q, warnings);
        }
      },
      e.node());
}

}  // namespace

PointCount lefschetz_point_count(const GroupExpr& expr, const Int& q) {
  validate_or_throw(expr);
  if (!is_prime(q)) throw Error("NotPrime", "field size " + q.get_str() + " is not prime");
  PointCount out;
  out.value = point_count_walk(expr, q, out.warnings);
  return out;
}

EndomorphismAction frobenius_action(const CohomologyPresentation& pres, const Int& q) {
  // scalar blocks per structural component and weight, one charpoly block
  // per abelian node
  std::map<std::pair<std::string, int>, std::vector<std::string>> linear;
  std::map<std::string, std::pair<std::vector<std::string>, std::shared_ptr<const IntPoly>>> abelian;
  for (const auto& g : pres.generators) {
    if (const auto* w = std::get_if<LinearWeight>(&g.frobenius)) {
      linear[{component_of(g.label), w->d}].push_back(g.label);
    } else if (const auto* s = std::get_if<AbelianSlot>(&g.frobenius)) {
      auto& entry = abelian[s->node_path];
      entry.first.push_back(g.label);
      entry.second = s->charpoly;
    } else {
      throw Error("UnspecifiedFrobenius",
                  "generator " + g.label + " has no Frobenius annotation");
    }
  }
  EndomorphismAction act;
  for (auto& [key, labels] : linear) {
    RatMatrix m(labels.size(), labels.size());
    const Int qd = int_pow(q, static_cast<unsigned long>(key.second));
    for (std::size_t i = 0; i < labels.size(); ++i) m.at(i, i) = Rat(qd);
    act.blocks.push_back({std::move(labels), std::move(m)});
  }
  for (auto& [path, entry] : abelian) {
    if (!entry.second)
      throw Error("MissingCharPoly", "abelian node " + path + " carries no Frobenius charpoly");
    act.blocks.push_back({std::move(entry.first), *entry.second});
  }
  return act;
}

RatMatrix full_action_matrix(const CohomologyPresentation& pres, const EndomorphismAction& act) {
  const auto resolved = resolve_action(pres, act);
  std::map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < pres.generators.size(); ++i)
    position[pres.generators[i].label] = i;
  RatMatrix full(pres.generators.size(), pres.generators.size());
  for (std::size_t b = 0; b < resolved.block_labels.size(); ++b) {
    const auto& labels = resolved.block_labels[b];
    const auto& m = resolved.block_matrices[b];
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = 0; j < labels.size(); ++j)
        full.at(position.at(labels[i]), position.at(labels[j])) = m.at(i, j);
  }
  return full;
}

}  // namespace gvc
