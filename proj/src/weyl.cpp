#include "gvc/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace gvc {

IntMat IntMat::identity(int n) {
  IntMat m{n, std::vector<int>(static_cast<std::size_t>(n) * n, 0)};
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
  IntMat out{n, std::vector<int>(static_cast<std::size_t>(n) * n, 0)};
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += v * o.at(k, j);
    }
  return out;
}

namespace {

IntMat transposition(int n, int i, int j) {
  IntMat m = IntMat::identity(n);
  m.at(i, i) = m.at(j, j) = 0;
  m.at(i, j) = m.at(j, i) = 1;
  return m;
}

std::vector<IntMat> weyl_generators(const DynkinType& type, int& matrix_dim) {
  if (auto err = dynkin_rank_error(type)) throw Error("RankOutOfRange", *err);
  const int n = type.rank;
  std::vector<IntMat> gens;
  switch (type.family) {
    case DynkinFamily::A: {
      matrix_dim = n + 1;
      for (int i = 0; i + 1 < matrix_dim; ++i) gens.push_back(transposition(matrix_dim, i, i + 1));
      break;
    }
    case DynkinFamily::B:
    case DynkinFamily::C: {
      matrix_dim = n;
      for (int i = 0; i + 1 < n; ++i) gens.push_back(transposition(n, i, i + 1));
      IntMat flip = IntMat::identity(n);
      flip.at(n - 1, n - 1) = -1;
      gens.push_back(flip);
      break;
    }
    case DynkinFamily::D: {
      matrix_dim = n;
      for (int i = 0; i + 1 < n; ++i) gens.push_back(transposition(n, i, i + 1));
      IntMat swap_flip = IntMat::identity(n);
      swap_flip.at(n - 2, n - 2) = swap_flip.at(n - 1, n - 1) = 0;
      swap_flip.at(n - 2, n - 1) = swap_flip.at(n - 1, n - 2) = -1;
      gens.push_back(swap_flip);
      break;
    }
    default: {
      // simple reflections in the root basis: row i of s_i is e_i - C_i
      matrix_dim = n;
      const auto cartan = cartan_matrix(type);
      for (int i = 0; i < n; ++i) {
        IntMat s = IntMat::identity(n);
        for (int j = 0; j < n; ++j) s.at(i, j) -= cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        gens.push_back(s);
      }
      break;
    }
  }
  return gens;
}

}  // namespace

WeylGroupRealization realize_weyl_group(const DynkinType& type, std::size_t max_order) {
  int matrix_dim = 0;
  const auto gens = weyl_generators(type, matrix_dim);
  std::set<std::vector<int>> seen;
  std::deque<IntMat> queue;
  WeylGroupRealization w{type, matrix_dim, {}};
  const IntMat id = IntMat::identity(matrix_dim);
  seen.insert(id.a);
  queue.push_back(id);
  while (!queue.empty()) {
    IntMat current = std::move(queue.front());
    queue.pop_front();
    w.elements.push_back(current);
    for (const auto& g : gens) {
      IntMat next = current * g;
      if (seen.insert(next.a).second) {
        if (seen.size() > max_order)
          throw Error("GroupTooLarge", "Weyl group of " + to_string(type) +
                                           " exceeds the enumeration bound of " +
                                           std::to_string(max_order));
        queue.push_back(std::move(next));
      }
    }
  }
  return w;
}

namespace {

RatSeries molien_term(const IntMat& w, std::size_t order) {
  RatMatrix m(static_cast<std::size_t>(w.n), static_cast<std::size_t>(w.n));
  for (int i = 0; i < w.n; ++i)
    for (int j = 0; j < w.n; ++j) m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = w.at(i, j);
  return series_of(det_identity_minus_t(m), order).inverse();
}

}  // namespace

RatSeries molien_series_serial(const WeylGroupRealization& w, std::size_t order) {
  RatSeries sum(order);
  for (const auto& elem : w.elements) sum += molien_term(elem, order);
  RatSeries out(order);
  const Rat scale(1, static_cast<unsigned long>(w.order()));
  for (std::size_t k = 0; k <= order; ++k) out.coeff(k) = sum.coeff(k) * scale;
  return out;
}

RatSeries molien_series(const WeylGroupRealization& w, std::size_t order) {
  RatSeries sum(order);
  const std::int64_t n = static_cast<std::int64_t>(w.elements.size());
#ifdef _OPENMP
#pragma omp declare reduction(series_add : RatSeries : omp_out += omp_in) \
    initializer(omp_priv = RatSeries(omp_orig.order()))
#pragma omp parallel for schedule(static) reduction(series_add : sum)
#endif
  for (std::int64_t i = 0; i < n; ++i)
    sum += molien_term(w.elements[static_cast<std::size_t>(i)], order);
  RatSeries out(order);
  const Rat scale(1, static_cast<unsigned long>(w.order()));
  for (std::size_t k = 0; k <= order; ++k) out.coeff(k) = sum.coeff(k) * scale;
  return out;
}

std::vector<int> molien_degrees(const DynkinType& type, std::size_t max_order) {
  const auto w = realize_weyl_group(type, max_order);
  const int factor_count = w.matrix_dim;
  for (std::size_t order = 40; order <= 640; order *= 2) {
    RatSeries series = molien_series(w, order);
    std::vector<int> degrees;
    bool stuck = false;
    while (static_cast<int>(degrees.size()) < factor_count) {
      std::size_t k = 1;
      while (k <= order && series.coeff(k) == 0) ++k;
      if (k > order) {
        stuck = true;  // truncation too short to see the next factor
        break;
      }
      // divide by 1/(1 - t^k), i.e. multiply by (1 - t^k)
      RatSeries next(order);
      for (std::size_t i = 0; i <= order; ++i) {
        next.coeff(i) = series.coeff(i);
        if (i >= k) next.coeff(i) -= series.coeff(i - k);
      }
      series = std::move(next);
      degrees.push_back(static_cast<int>(k));
    }
    if (stuck) continue;
    bool remainder_is_one = series.coeff(0) == 1;
    for (std::size_t i = 1; i <= order && remainder_is_one; ++i)
      remainder_is_one = series.coeff(i) == 0;
    Int degree_product(1);
    for (int d : degrees) degree_product *= d;
    if (!remainder_is_one || degree_product != Int(static_cast<unsigned long>(w.order())))
      continue;  // not yet a certified factoring; raise the order
    if (type.family == DynkinFamily::A) {
      auto it = std::find(degrees.begin(), degrees.end(), 1);
      if (it == degrees.end())
        throw Error("FactoringFailed",
                    "type A Molien series lacks the degree-1 trivial invariant");
      degrees.erase(it);
    }
    std::sort(degrees.begin(), degrees.end());
    return degrees;
  }
  throw Error("FactoringFailed",
              "Molien series of " + to_string(type) + " did not factor as a finite product");
}

std::size_t enumerate_roots(const DynkinType& type) {
  if (type.rank > 8) throw Error("RankOutOfRange", "root enumeration supports rank <= 8");
  const auto cartan = cartan_matrix(type);
  const int n = type.rank;
  std::set<std::vector<int>> roots;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> simple(static_cast<std::size_t>(n), 0);
    simple[static_cast<std::size_t>(i)] = 1;
    roots.insert(simple);
    queue.push_back(std::move(simple));
  }
  while (!queue.empty()) {
    const std::vector<int> v = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      std::vector<int> image = v;
      int pairing = 0;
      for (int j = 0; j < n; ++j)
        pairing += cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
      image[static_cast<std::size_t>(i)] -= pairing;
      if (roots.insert(image).second) queue.push_back(std::move(image));
    }
  }
  return roots.size();
}

}  // namespace gvc
