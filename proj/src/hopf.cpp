#include "gvc/hopf.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

namespace gvc {

namespace {

// Deterministic sparse accumulator.
template <typename Key>
class Accum {
 public:
  void add(Key k, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::vector<std::pair<Key, Rat>> take() {
    std::vector<std::pair<Key, Rat>> out(terms_.begin(), terms_.end());
    return out;
  }

 private:
  std::map<Key, Rat> terms_;
};

int mask_degree(std::uint32_t mask, const std::vector<int>& degrees) {
  int d = 0;
  for (std::size_t k = 0; k < degrees.size(); ++k)
    if (mask & (1u << k)) d += degrees[k];
  return d;
}

// Transpositions needed to merge ascending a-part before ascending b-part.
int merge_inversions(std::uint32_t a, std::uint32_t b) {
  int count = 0;
  while (b) {
    const int j = std::countr_zero(b);
    b &= b - 1;
    count += std::popcount(a >> (j + 1));
  }
  return count;
}

std::string mask_label(std::uint32_t mask) {
  if (mask == 0) return "1";
  std::string s;
  while (mask) {
    const int j = std::countr_zero(mask);
    mask &= mask - 1;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(j + 1);
  }
  return s;
}

}  // namespace

int ExplicitHopfAlgebra::max_degree() const {
  int m = 0;
  for (const auto& e : basis) m = std::max(m, e.degree);
  return m;
}

SparseVec ExplicitHopfAlgebra::mul(BasisIndex i, BasisIndex j) const {
  auto it = product.find(pair_key(i, j));
  return it == product.end() ? SparseVec{} : it->second;
}

SparseVec ExplicitHopfAlgebra::mul(const SparseVec& a, const SparseVec& b) const {
  Accum<BasisIndex> acc;
  for (const auto& [i, ci] : a.terms)
    for (const auto& [j, cj] : b.terms) {
      auto it = product.find(pair_key(i, j));
      if (it == product.end()) continue;
      const Rat c = ci * cj;
      for (const auto& [k, ck] : it->second.terms) acc.add(k, c * ck);
    }
  return SparseVec{acc.take()};
}

SparsePairVec ExplicitHopfAlgebra::coproduct_of(const SparseVec& v) const {
  Accum<std::uint64_t> acc;
  for (const auto& [i, c] : v.terms)
    for (const auto& [k, ck] : coproduct[i].terms) acc.add(k, c * ck);
  return SparsePairVec{acc.take()};
}

SparsePairVec ExplicitHopfAlgebra::pair_mul(const SparsePairVec& a, const SparsePairVec& b) const {
  Accum<std::uint64_t> acc;
  for (const auto& [ka, ca] : a.terms) {
    const BasisIndex a1 = static_cast<BasisIndex>(ka >> 32), a2 = static_cast<BasisIndex>(ka);
    for (const auto& [kb, cb] : b.terms) {
      const BasisIndex b1 = static_cast<BasisIndex>(kb >> 32), b2 = static_cast<BasisIndex>(kb);
      // (a1 (x) a2)(b1 (x) b2) = (-1)^{|a2||b1|} a1 b1 (x) a2 b2
      const bool negate = (degree(a2) % 2) && (degree(b1) % 2);
      auto left = product.find(pair_key(a1, b1));
      if (left == product.end()) continue;
      auto right = product.find(pair_key(a2, b2));
      if (right == product.end()) continue;
      Rat c = ca * cb;
      if (negate) c = -c;
      for (const auto& [l, cl] : left->second.terms)
        for (const auto& [r, cr] : right->second.terms) acc.add(pair_key(l, r), c * cl * cr);
    }
  }
  return SparsePairVec{acc.take()};
}

std::vector<std::vector<BasisIndex>> ExplicitHopfAlgebra::by_degree() const {
  std::vector<std::vector<BasisIndex>> out(static_cast<std::size_t>(max_degree()) + 1);
  for (BasisIndex i = 0; i < basis.size(); ++i)
    out[static_cast<std::size_t>(basis[i].degree)].push_back(i);
  return out;
}

ExplicitHopfAlgebra exterior_hopf(const std::vector<int>& degrees, const HopfLimits& limits) {
  for (int d : degrees) {
    if (d <= 0 || d % 2 == 0)
      throw Error("BadDegree", "exterior generators must have odd positive degree");
  }
  const std::size_t n = degrees.size();
  if (n >= 31 || (std::size_t{1} << n) > limits.max_dim)
    throw Error("CapExceeded", "exterior algebra on " + std::to_string(n) +
                                   " generators exceeds the basis cap of " +
                                   std::to_string(limits.max_dim));
  const std::uint32_t dim = 1u << n;

  ExplicitHopfAlgebra h;
  h.basis.resize(dim);
  h.unit = 0;
  for (std::uint32_t mask = 0; mask < dim; ++mask)
    h.basis[mask] = {mask_label(mask), mask_degree(mask, degrees)};

  // wedge with transposition-counted sign; disjoint supports only
  for (std::uint32_t a = 0; a < dim; ++a)
    for (std::uint32_t b = 0; b < dim; ++b) {
      if (a & b) continue;
      const Rat sign = (merge_inversions(a, b) % 2) ? Rat(-1) : Rat(1);
      h.product[pair_key(a, b)] = SparseVec{{{a | b, sign}}};
    }

  // Delta(e_S) = sum over splits S = T u U of sign(T, U) e_T (x) e_U,
  // sign counting pairs (i in T, j in U) with j < i.
  h.coproduct.resize(dim);
  for (std::uint32_t mask = 0; mask < dim; ++mask) {
    Accum<std::uint64_t> acc;
    std::uint32_t t = mask;
    while (true) {
      const std::uint32_t u = mask & ~t;
      int inv = 0;
      std::uint32_t tt = t;
      while (tt) {
        const int i = std::countr_zero(tt);
        tt &= tt - 1;
        inv += std::popcount(u & ((1u << i) - 1));
      }
      acc.add(pair_key(t, u), (inv % 2) ? Rat(-1) : Rat(1));
      if (t == 0) break;
      t = (t - 1) & mask;
    }
    h.coproduct[mask] = SparsePairVec{acc.take()};
  }

  h.counit.assign(dim, Rat(0));
  h.counit[0] = 1;
  return h;
}

ExplicitHopfAlgebra hopf_tensor(const ExplicitHopfAlgebra& a, const ExplicitHopfAlgebra& b,
                                const HopfLimits& limits) {
  const std::size_t dim = a.dim() * b.dim();
  if (dim > limits.max_dim)
    throw Error("CapExceeded", "tensor dimension " + std::to_string(dim) +
                                   " exceeds the basis cap of " + std::to_string(limits.max_dim));
  ExplicitHopfAlgebra h;
  h.basis.resize(dim);
  auto idx = [&](BasisIndex i, BasisIndex j) {
    return static_cast<BasisIndex>(i * b.dim() + j);
  };
  for (BasisIndex i = 0; i < a.dim(); ++i)
    for (BasisIndex j = 0; j < b.dim(); ++j)
      h.basis[idx(i, j)] = {a.basis[i].label + "(x)" + b.basis[j].label,
                            a.degree(i) + b.degree(j)};
  h.unit = idx(a.unit, b.unit);

  for (BasisIndex i1 = 0; i1 < a.dim(); ++i1)
    for (BasisIndex j1 = 0; j1 < b.dim(); ++j1)
      for (BasisIndex i2 = 0; i2 < a.dim(); ++i2)
        for (BasisIndex j2 = 0; j2 < b.dim(); ++j2) {
          auto left = a.product.find(pair_key(i1, i2));
          if (left == a.product.end()) continue;
          auto right = b.product.find(pair_key(j1, j2));
          if (right == b.product.end()) continue;
          // (i1 (x) j1)(i2 (x) j2) = (-1)^{|j1||i2|} i1 i2 (x) j1 j2
          const bool negate = (b.degree(j1) % 2) && (a.degree(i2) % 2);
          Accum<BasisIndex> acc;
          for (const auto& [l, cl] : left->second.terms)
            for (const auto& [r, cr] : right->second.terms) {
              Rat c = cl * cr;
              if (negate) c = -c;
              acc.add(idx(l, r), c);
            }
          auto terms = acc.take();
          if (!terms.empty()) h.product[pair_key(idx(i1, j1), idx(i2, j2))] = SparseVec{std::move(terms)};
        }

  h.coproduct.resize(dim);
  for (BasisIndex i = 0; i < a.dim(); ++i)
    for (BasisIndex j = 0; j < b.dim(); ++j) {
      Accum<std::uint64_t> acc;
      for (const auto& [ka, ca] : a.coproduct[i].terms) {
        const BasisIndex a1 = static_cast<BasisIndex>(ka >> 32), a2 = static_cast<BasisIndex>(ka);
        for (const auto& [kb, cb] : b.coproduct[j].terms) {
          const BasisIndex b1 = static_cast<BasisIndex>(kb >> 32), b2 = static_cast<BasisIndex>(kb);
          // Koszul sign from moving a2 past b1
          const bool negate = (a.degree(a2) % 2) && (b.degree(b1) % 2);
          Rat c = ca * cb;
          if (negate) c = -c;
          acc.add(pair_key(idx(a1, b1), idx(a2, b2)), c);
        }
      }
      h.coproduct[idx(i, j)] = SparsePairVec{acc.take()};
    }

  h.counit.assign(dim, Rat(0));
  for (BasisIndex i = 0; i < a.dim(); ++i)
    for (BasisIndex j = 0; j < b.dim(); ++j) h.counit[idx(i, j)] = a.counit[i] * b.counit[j];
  return h;
}

namespace {

std::string element_failure(const ExplicitHopfAlgebra& h, BasisIndex i) {
  const int di = h.degree(i);
  // coproduct grading
  for (const auto& [k, c] : h.coproduct[i].terms) {
    (void)c;
    const BasisIndex l = static_cast<BasisIndex>(k >> 32), r = static_cast<BasisIndex>(k);
    if (h.degree(l) + h.degree(r) != di)
      return "coproduct of " + h.basis[i].label + " is not degree-homogeneous";
  }
  // unit laws
  SparseVec self{{{i, Rat(1)}}};
  if (!(h.mul(h.unit, i) == self) || !(h.mul(i, h.unit) == self))
    return "unit law fails on " + h.basis[i].label;
  // counit laws
  Accum<BasisIndex> left, right;
  for (const auto& [k, c] : h.coproduct[i].terms) {
    const BasisIndex l = static_cast<BasisIndex>(k >> 32), r = static_cast<BasisIndex>(k);
    left.add(r, c * h.counit[l]);
    right.add(l, c * h.counit[r]);
  }
  if (!(SparseVec{left.take()} == self) || !(SparseVec{right.take()} == self))
    return "counit law fails on " + h.basis[i].label;
  // coassociativity; triple keys need dim < 2^21
  if (h.dim() >= (1u << 21)) return "algebra too large for the coassociativity sweep";
  Accum<std::uint64_t> lhs, rhs;
  for (const auto& [k, c] : h.coproduct[i].terms) {
    const BasisIndex l = static_cast<BasisIndex>(k >> 32), r = static_cast<BasisIndex>(k);
    for (const auto& [k2, c2] : h.coproduct[l].terms) {
      const BasisIndex x = static_cast<BasisIndex>(k2 >> 32), y = static_cast<BasisIndex>(k2);
      lhs.add((std::uint64_t(x) << 42) | (std::uint64_t(y) << 21) | r, c * c2);
    }
    for (const auto& [k2, c2] : h.coproduct[r].terms) {
      const BasisIndex x = static_cast<BasisIndex>(k2 >> 32), y = static_cast<BasisIndex>(k2);
      rhs.add((std::uint64_t(l) << 42) | (std::uint64_t(x) << 21) | y, c * c2);
    }
  }
  if (!(lhs.take() == rhs.take())) return "coproduct of " + h.basis[i].label + " is not coassociative";
  return {};
}

std::string pair_failure(const ExplicitHopfAlgebra& h, BasisIndex i, BasisIndex j) {
  const SparseVec ij = h.mul(i, j);
  const int dsum = h.degree(i) + h.degree(j);
  for (const auto& [k, c] : ij.terms) {
    (void)c;
    if (h.degree(k) != dsum)
      return "product " + h.basis[i].label + " * " + h.basis[j].label + " breaks the grading";
  }
  // graded commutativity
  SparseVec ji = h.mul(j, i);
  if ((h.degree(i) % 2) && (h.degree(j) % 2))
    for (auto& [k, c] : ji.terms) c = -c;
  if (!(ij == ji))
    return "graded commutativity fails on " + h.basis[i].label + " * " + h.basis[j].label;
  // Delta is an algebra morphism into the Koszul tensor square
  SparsePairVec lhs = h.coproduct_of(ij);
  SparsePairVec rhs = h.pair_mul(h.coproduct[i], h.coproduct[j]);
  if (!(lhs == rhs))
    return "coproduct of " + h.basis[i].label + " * " + h.basis[j].label +
           " differs from the product of coproducts";
  return {};
}

std::string global_failure(const ExplicitHopfAlgebra& h) {
  if (h.basis.empty()) return "empty basis";
  if (h.coproduct.size() != h.dim() || h.counit.size() != h.dim())
    return "structure-constant tables do not match the basis size";
  if (h.degree(h.unit) != 0) return "unit is not in degree 0";
  std::size_t degree_zero = 0;
  for (const auto& e : h.basis)
    if (e.degree == 0) ++degree_zero;
  if (degree_zero != 1) return "degree-0 component is not one-dimensional";
  std::set<std::string> labels;
  for (const auto& e : h.basis)
    if (!labels.insert(e.label).second) return "duplicate basis label " + e.label;
  if (h.counit[h.unit] != 1) return "counit does not send the unit to 1";
  if (!(h.coproduct[h.unit] == SparsePairVec{{{pair_key(h.unit, h.unit), Rat(1)}}}))
    return "coproduct of the unit is not 1 (x) 1";
  return {};
}

}  // namespace

AxiomReport verify_axioms_serial(const ExplicitHopfAlgebra& h) {
  if (auto f = global_failure(h); !f.empty()) return {false, f};
  for (BasisIndex i = 0; i < h.dim(); ++i)
    if (auto f = element_failure(h, i); !f.empty()) return {false, f};
  for (BasisIndex i = 0; i < h.dim(); ++i)
    for (BasisIndex j = 0; j < h.dim(); ++j)
      if (auto f = pair_failure(h, i, j); !f.empty()) return {false, f};
  return {};
}

AxiomReport verify_axioms(const ExplicitHopfAlgebra& h) {
  if (auto f = global_failure(h); !f.empty()) return {false, f};
  const std::uint64_t n = h.dim();
  const std::uint64_t sentinel = ~std::uint64_t{0};
  std::uint64_t first_element_fail = sentinel;
  std::uint64_t first_pair_fail = sentinel;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) reduction(min : first_element_fail)
#endif
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!element_failure(h, static_cast<BasisIndex>(i)).empty())
      first_element_fail = std::min(first_element_fail, i);
  }
  if (first_element_fail != sentinel)
    return {false, element_failure(h, static_cast<BasisIndex>(first_element_fail))};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) reduction(min : first_pair_fail)
#endif
  for (std::uint64_t k = 0; k < n * n; ++k) {
    if (!pair_failure(h, static_cast<BasisIndex>(k / n), static_cast<BasisIndex>(k % n)).empty())
      first_pair_fail = std::min(first_pair_fail, k);
  }
  if (first_pair_fail != sentinel)
    return {false, pair_failure(h, static_cast<BasisIndex>(first_pair_fail / n),
                                static_cast<BasisIndex>(first_pair_fail % n))};
  return {};
}

std::vector<int> PrimitiveBasis::degrees() const {
  std::vector<int> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(v.degree);
  return out;
}

PrimitiveBasis primitives(const ExplicitHopfAlgebra& h) {
  PrimitiveBasis out;
  const auto groups = h.by_degree();
  for (int d = 1; d < static_cast<int>(groups.size()); ++d) {
    const auto& elems = groups[static_cast<std::size_t>(d)];
    if (elems.empty()) continue;
    // rows of the defect map x -> Delta(x) - x(x)1 - 1(x)x
    std::vector<SparsePairVec> defects;
    defects.reserve(elems.size());
    std::map<std::uint64_t, std::size_t> columns;
    for (BasisIndex e : elems) {
      Accum<std::uint64_t> acc;
      for (const auto& [k, c] : h.coproduct[e].terms) acc.add(k, c);
      acc.add(pair_key(e, h.unit), Rat(-1));
      acc.add(pair_key(h.unit, e), Rat(-1));
      defects.push_back(SparsePairVec{acc.take()});
      for (const auto& [k, c] : defects.back().terms) {
        (void)c;
        columns.emplace(k, columns.size());
      }
    }
    RatMatrix m(columns.size(), elems.size());
    for (std::size_t j = 0; j < elems.size(); ++j)
      for (const auto& [k, c] : defects[j].terms) m.at(columns[k], j) = c;
    for (const auto& kernel_vec : m.nullspace()) {
      Accum<BasisIndex> coords;
      for (std::size_t j = 0; j < elems.size(); ++j) coords.add(elems[j], kernel_vec[j]);
      out.vectors.push_back({d, SparseVec{coords.take()}});
    }
  }
  return out;
}

namespace {

// Ordered products of a generator list over all subset masks.
std::vector<SparseVec> subset_products(const ExplicitHopfAlgebra& h,
                                       const std::vector<SparseVec>& gens) {
  const std::size_t n = gens.size();
  std::vector<SparseVec> w(std::size_t{1} << n);
  w[0] = SparseVec{{{h.unit, Rat(1)}}};
  for (std::uint32_t mask = 1; mask < w.size(); ++mask) {
    const int low = std::countr_zero(mask);
    w[mask] = h.mul(gens[static_cast<std::size_t>(low)], w[mask & (mask - 1)]);
  }
  return w;
}

std::string describe_combination(const std::vector<Rat>& coeffs,
                                 const std::vector<std::string>& labels) {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(coeffs[i]) + ")*" + labels[i];
  }
  return s.empty() ? "0" : s;
}

}  // namespace

HopfTheoremReport verify_hopf_theorem(const ExplicitHopfAlgebra& h, const HopfLimits& limits) {
  HopfTheoremReport report;
  const PrimitiveBasis prim = primitives(h);
  for (const auto& v : prim.vectors)
    if (v.degree % 2 == 0) {
      report.failure = "primitive of even degree " + std::to_string(v.degree) +
                       "; H is not an exterior algebra on its primitives";
      return report;
    }

  const int top = h.max_degree();
  report.algebra_dims.assign(static_cast<std::size_t>(top) + 1, 0);
  for (const auto& e : h.basis) report.algebra_dims[static_cast<std::size_t>(e.degree)]++;

  // dim (wedge* PH)^d from the generating polynomial prod (1 + t^deg)
  std::vector<Int> ext{Int(1)};
  for (const auto& v : prim.vectors) {
    std::vector<Int> next(ext.size() + static_cast<std::size_t>(v.degree), Int(0));
    for (std::size_t i = 0; i < ext.size(); ++i) {
      next[i] += ext[i];
      next[i + static_cast<std::size_t>(v.degree)] += ext[i];
    }
    ext = std::move(next);
  }
  report.exterior_dims.assign(std::max(ext.size(), report.algebra_dims.size()), 0);
  for (std::size_t i = 0; i < ext.size(); ++i)
    report.exterior_dims[i] = static_cast<std::size_t>(ext[i].get_ui());
  report.algebra_dims.resize(report.exterior_dims.size(), 0);

  for (std::size_t d = 0; d < report.exterior_dims.size(); ++d)
    if (report.exterior_dims[d] != report.algebra_dims[d]) {
      report.failure = "degree " + std::to_string(d) + ": dim H = " +
                       std::to_string(report.algebra_dims[d]) + " but wedge*PH has dim " +
                       std::to_string(report.exterior_dims[d]);
      return report;
    }

  const std::size_t n = prim.vectors.size();
  if ((std::size_t{1} << n) > std::max(limits.max_dim, h.dim()))
    throw Error("CapExceeded", "primitive count " + std::to_string(n) + " exceeds the basis cap");

  std::vector<SparseVec> gens;
  gens.reserve(n);
  for (const auto& v : prim.vectors) gens.push_back(v.coords);
  const auto w = subset_products(h, gens);

  // per-degree rank of the canonical map
  const auto groups = h.by_degree();
  std::vector<std::vector<std::uint32_t>> masks_by_degree(groups.size());
  std::vector<int> pdeg;
  for (const auto& v : prim.vectors) pdeg.push_back(v.degree);
  for (std::uint32_t mask = 0; mask < w.size(); ++mask) {
    int d = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (1u << k)) d += pdeg[k];
    masks_by_degree[static_cast<std::size_t>(d)].push_back(mask);
  }

  for (std::size_t d = 0; d < groups.size(); ++d) {
    const auto& cols = masks_by_degree[d];
    const auto& rows = groups[d];
    if (cols.empty() && rows.empty()) continue;
    std::map<BasisIndex, std::size_t> row_of;
    for (BasisIndex e : rows) row_of.emplace(e, row_of.size());
    RatMatrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& [k, c] : w[cols[j]].terms) m.at(row_of.at(k), j) = c;
    if (m.rank() != cols.size()) {
      const auto kernel = m.nullspace();
      std::vector<std::string> labels;
      for (auto mask : cols) labels.push_back(mask_label(mask));
      report.failure = "degree " + std::to_string(d) + ": kernel witness " +
                       describe_combination(kernel.front(), labels);
      return report;
    }
  }
  report.iso = true;
  return report;
}

SparseVec HopfMorphism::apply(const SparseVec& v) const {
  Accum<BasisIndex> acc;
  for (const auto& [j, c] : v.terms)
    for (std::size_t i = 0; i < matrix.rows(); ++i)
      acc.add(static_cast<BasisIndex>(i), c * matrix.at(i, j));
  return SparseVec{acc.take()};
}

void check_hopf_morphism(const HopfMorphism& f) {
  const auto& dom = *f.domain;
  const auto& cod = *f.codomain;
  if (f.matrix.rows() != cod.dim() || f.matrix.cols() != dom.dim())
    throw Error("NotHopfMorphism", "matrix shape does not match the algebras");
  auto image = [&](BasisIndex j) {
    SparseVec v;
    for (std::size_t i = 0; i < cod.dim(); ++i)
      if (f.matrix.at(i, j) != 0) v.terms.push_back({static_cast<BasisIndex>(i), f.matrix.at(i, j)});
    return v;
  };
  std::vector<SparseVec> img(dom.dim());
  for (BasisIndex j = 0; j < dom.dim(); ++j) {
    img[j] = image(j);
    for (const auto& [i, c] : img[j].terms) {
      (void)c;
      if (cod.degree(i) != dom.degree(j))
        throw Error("NotHopfMorphism", "image of " + dom.basis[j].label + " is not graded");
    }
  }
  if (!(img[dom.unit] == SparseVec{{{cod.unit, Rat(1)}}}))
    throw Error("NotHopfMorphism", "unit is not preserved");
  for (BasisIndex j = 0; j < dom.dim(); ++j) {
    // counit
    Rat eps(0);
    for (const auto& [i, c] : img[j].terms) eps += c * cod.counit[i];
    if (eps != dom.counit[j])
      throw Error("NotHopfMorphism", "counit not preserved on " + dom.basis[j].label);
    // coproduct
    Accum<std::uint64_t> lhs;
    for (const auto& [k, c] : dom.coproduct[j].terms) {
      const BasisIndex l = static_cast<BasisIndex>(k >> 32), r = static_cast<BasisIndex>(k);
      for (const auto& [il, cl] : img[l].terms)
        for (const auto& [ir, cr] : img[r].terms) lhs.add(pair_key(il, ir), c * cl * cr);
    }
    if (!(SparsePairVec{lhs.take()} == cod.coproduct_of(img[j])))
      throw Error("NotHopfMorphism", "coproduct not preserved on " + dom.basis[j].label);
  }
  for (BasisIndex i = 0; i < dom.dim(); ++i)
    for (BasisIndex j = 0; j < dom.dim(); ++j) {
      SparseVec lhs;
      {
        Accum<BasisIndex> acc;
        for (const auto& [k, c] : dom.mul(i, j).terms)
          for (const auto& [l, cl] : img[k].terms) acc.add(l, c * cl);
        lhs = SparseVec{acc.take()};
      }
      if (!(lhs == cod.mul(img[i], img[j])))
        throw Error("NotHopfMorphism", "product not preserved on " + dom.basis[i].label + " * " +
                                           dom.basis[j].label);
    }
}

HopfMorphism exterior_extend(const ExplicitHopfAlgebra& dom, const ExplicitHopfAlgebra& cod,
                             const std::vector<SparseVec>& generator_images) {
  const std::size_t n = generator_images.size();
  if (dom.dim() != (std::size_t{1} << n))
    throw Error("ShapeMismatch", "domain is not an exterior algebra on the given generators");
  const auto w = subset_products(cod, generator_images);
  HopfMorphism f;
  f.domain = &dom;
  f.codomain = &cod;
  f.matrix = RatMatrix(cod.dim(), dom.dim());
  for (std::size_t mask = 0; mask < dom.dim(); ++mask)
    for (const auto& [i, c] : w[mask].terms) f.matrix.at(i, mask) = c;
  return f;
}

HopfMorphism tensor_projection_first(const ExplicitHopfAlgebra& tensor,
                                     const ExplicitHopfAlgebra& first,
                                     const ExplicitHopfAlgebra& second) {
  if (tensor.dim() != first.dim() * second.dim())
    throw Error("ShapeMismatch", "tensor dimensions do not match the factors");
  HopfMorphism f;
  f.domain = &tensor;
  f.codomain = &first;
  f.matrix = RatMatrix(first.dim(), tensor.dim());
  for (BasisIndex i = 0; i < first.dim(); ++i)
    for (BasisIndex j = 0; j < second.dim(); ++j)
      f.matrix.at(i, i * second.dim() + j) = second.counit[j];
  return f;
}

HopfMorphism tensor_inclusion_second(const ExplicitHopfAlgebra& tensor,
                                     const ExplicitHopfAlgebra& first,
                                     const ExplicitHopfAlgebra& second) {
  if (tensor.dim() != first.dim() * second.dim())
    throw Error("ShapeMismatch", "tensor dimensions do not match the factors");
  HopfMorphism f;
  f.domain = &second;
  f.codomain = &tensor;
  f.matrix = RatMatrix(tensor.dim(), second.dim());
  for (BasisIndex j = 0; j < second.dim(); ++j)
    f.matrix.at(first.unit * second.dim() + j, j) = 1;
  return f;
}

namespace {

// Coordinates of v over the primitive basis; false when v is outside.
bool primitive_coordinates(const PrimitiveBasis& basis, std::size_t ambient_dim,
                           const SparseVec& v, std::vector<Rat>& coords) {
  RatMatrix m(ambient_dim, basis.vectors.size());
  for (std::size_t j = 0; j < basis.vectors.size(); ++j)
    for (const auto& [i, c] : basis.vectors[j].coords.terms) m.at(i, j) = c;
  std::vector<Rat> rhs(ambient_dim, Rat(0));
  for (const auto& [i, c] : v.terms) rhs[i] = c;
  if (!m.solve(rhs, coords)) return false;
  // confirm: solve() returns a candidate even for inconsistent systems
  std::vector<Rat> back = m.apply(coords);
  return back == rhs;
}

}  // namespace

ExactnessReport check_primitive_exactness(const HopfMorphism& iota_star,
                                          const HopfMorphism& pi_star, const HopfLimits& limits) {
  if (iota_star.domain != pi_star.codomain)
    throw Error("ShapeMismatch", "iota* must start where pi* lands (the middle algebra)");
  check_hopf_morphism(iota_star);
  check_hopf_morphism(pi_star);
  const auto& hg = *iota_star.domain;
  const auto& hn = *iota_star.codomain;
  const auto& hq = *pi_star.domain;

  ExactnessReport report;
  const PrimitiveBasis pg = primitives(hg);
  const PrimitiveBasis pn = primitives(hn);
  const PrimitiveBasis pq = primitives(hq);

  const int top = std::max({hg.max_degree(), hn.max_degree(), hq.max_degree()});
  for (int d = 1; d <= top; ++d) {
    auto count = [d](const PrimitiveBasis& p) {
      std::size_t c = 0;
      for (const auto& v : p.vectors) c += (v.degree == d);
      return c;
    };
    const auto cq = count(pq), cg = count(pg), cn = count(pn);
    if (cq || cg || cn)
      report.primitive_dims.push_back({static_cast<std::size_t>(d), cq, cg, cn});
  }

  // iota* restricted to primitives, in primitive coordinates
  RatMatrix a(pn.vectors.size(), pg.vectors.size());
  for (std::size_t j = 0; j < pg.vectors.size(); ++j) {
    std::vector<Rat> coords;
    if (!primitive_coordinates(pn, hn.dim(), iota_star.apply(pg.vectors[j].coords), coords)) {
      report.failure = "iota* image of a primitive is not primitive";
      return report;
    }
    for (std::size_t i = 0; i < coords.size(); ++i) a.at(i, j) = coords[i];
  }
  // pi* restricted to primitives
  RatMatrix b(pg.vectors.size(), pq.vectors.size());
  for (std::size_t j = 0; j < pq.vectors.size(); ++j) {
    std::vector<Rat> coords;
    if (!primitive_coordinates(pg, hg.dim(), pi_star.apply(pq.vectors[j].coords), coords)) {
      report.failure = "pi* image of a primitive is not primitive";
      return report;
    }
    for (std::size_t i = 0; i < coords.size(); ++i) b.at(i, j) = coords[i];
  }

  report.injective = b.rank() == pq.vectors.size();
  report.surjective = a.rank() == pn.vectors.size();
  bool composite_zero = true;
  const RatMatrix ab = a * b;
  for (std::size_t i = 0; i < ab.rows(); ++i)
    for (std::size_t j = 0; j < ab.cols(); ++j)
      if (ab.at(i, j) != 0) composite_zero = false;
  report.middle_exact = composite_zero &&
                        pg.vectors.size() == pn.vectors.size() + pq.vectors.size();
  report.exact = report.injective && report.surjective && report.middle_exact;
  if (!report.exact) {
    if (!report.injective)
      report.failure = "pi* is not injective on primitives";
    else if (!report.surjective)
      report.failure = "iota* is not surjective on primitives";
    else if (!composite_zero)
      report.failure = "iota* after pi* is nonzero on primitives";
    else
      report.failure = "primitive dimensions do not add up: dim PH(G) = " +
                       std::to_string(pg.vectors.size()) + ", dim PH(N) + dim PH(Q) = " +
                       std::to_string(pn.vectors.size() + pq.vectors.size());
    return report;
  }

  // section s of iota* on primitives: a * s = id
  std::vector<SparseVec> gens;
  std::vector<int> gen_degrees;
  for (std::size_t k = 0; k < pn.vectors.size(); ++k) {
    std::vector<Rat> rhs(pn.vectors.size(), Rat(0));
    rhs[k] = 1;
    std::vector<Rat> x;
    if (!a.solve(rhs, x)) {
      report.failure = "no section of iota* on primitives";
      return report;
    }
    Accum<BasisIndex> acc;
    for (std::size_t j = 0; j < x.size(); ++j)
      for (const auto& [i, c] : pg.vectors[j].coords.terms) acc.add(i, c * x[j]);
    gens.push_back(SparseVec{acc.take()});
    gen_degrees.push_back(pn.vectors[k].degree);
  }
  for (std::size_t k = 0; k < pq.vectors.size(); ++k) {
    gens.push_back(pi_star.apply(pq.vectors[k].coords));
    gen_degrees.push_back(pq.vectors[k].degree);
  }
  for (int d : gen_degrees)
    if (d % 2 == 0) {
      report.failure = "even-degree primitive; the induced map is outside the exterior setting";
      return report;
    }
  const std::size_t n = gens.size();
  if (n >= 31 || (std::size_t{1} << n) > std::max(limits.max_dim, hg.dim()))
    throw Error("CapExceeded", "combined primitive count exceeds the basis cap");

  // Theta: wedge(PH(N) + PH(Q)) -> H(G), e_S -> ordered product
  const auto w = subset_products(hg, gens);
  if (w.size() != hg.dim()) {
    report.failure = "dim H(G) = " + std::to_string(hg.dim()) + " differs from 2^" +
                     std::to_string(n) + " tensor basis elements";
    return report;
  }
  RatMatrix theta(hg.dim(), w.size());
  for (std::size_t mask = 0; mask < w.size(); ++mask)
    for (const auto& [i, c] : w[mask].terms) theta.at(i, mask) = c;
  if (theta.rank() != hg.dim()) {
    report.failure = "section-induced map is not bijective";
    return report;
  }

  // graded algebra morphism on the full basis: Theta(e_S e_T) = Theta(e_S) Theta(e_T)
  const std::uint64_t dim = w.size();
  const std::uint64_t sentinel = ~std::uint64_t{0};
  std::uint64_t first_fail = sentinel;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) reduction(min : first_fail)
#endif
  for (std::uint64_t k = 0; k < dim * dim; ++k) {
    const std::uint32_t s = static_cast<std::uint32_t>(k / dim);
    const std::uint32_t t = static_cast<std::uint32_t>(k % dim);
    const SparseVec lhs = hg.mul(w[s], w[t]);
    SparseVec rhs;
    if (!(s & t)) {
      rhs = w[s | t];
      if (merge_inversions(s, t) % 2)
        for (auto& [i, c] : rhs.terms) c = -c;
    }
    if (!(lhs == rhs)) first_fail = std::min(first_fail, k);
  }
  if (first_fail != sentinel) {
    report.failure = "algebra-morphism check fails on basis pair (" +
                     mask_label(static_cast<std::uint32_t>(first_fail / dim)) + ", " +
                     mask_label(static_cast<std::uint32_t>(first_fail % dim)) + ")";
    return report;
  }
  report.iso_verified = true;
  return report;
}

}  // namespace gvc
