#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "gvc/matrix.hpp"
#include "gvc/numeric.hpp"

namespace gvc {

using BasisIndex = std::uint32_t;

// Sparse vector over a graded basis: sorted by index, coefficients nonzero.
struct SparseVec {
  std::vector<std::pair<BasisIndex, Rat>> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const SparseVec& o) const { return terms == o.terms; }
};

// Element of H (x) H; key packs (left << 32) | right.
struct SparsePairVec {
  std::vector<std::pair<std::uint64_t, Rat>> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const SparsePairVec& o) const { return terms == o.terms; }
};

inline std::uint64_t pair_key(BasisIndex left, BasisIndex right) {
  return (static_cast<std::uint64_t>(left) << 32) | right;
}

struct GradedBasisElement {
  std::string label;
  int degree = 0;
};

struct HopfLimits {
  std::size_t max_dim = 4096;  // 2^12 basis elements
};

// Finite-dimensional graded Hopf algebra over Q given by structure
// constants. Zero products are absent from the table.
class ExplicitHopfAlgebra {
 public:
  std::vector<GradedBasisElement> basis;  // basis[unit] has degree 0
  BasisIndex unit = 0;
  std::unordered_map<std::uint64_t, SparseVec> product;
  std::vector<SparsePairVec> coproduct;  // indexed by basis element
  std::vector<Rat> counit;               // functional on the basis

  std::size_t dim() const { return basis.size(); }
  int degree(BasisIndex i) const { return basis[i].degree; }
  int max_degree() const;

  SparseVec mul(BasisIndex i, BasisIndex j) const;
  SparseVec mul(const SparseVec& a, const SparseVec& b) const;
  SparsePairVec coproduct_of(const SparseVec& v) const;
  SparsePairVec pair_mul(const SparsePairVec& a, const SparsePairVec& b) const;

  // Basis indices per degree, 0..max_degree().
  std::vector<std::vector<BasisIndex>> by_degree() const;
};

// Exterior Hopf algebra on odd-degree primitive generators. Basis elements
// are generator subsets encoded as bitmasks; index == mask.
ExplicitHopfAlgebra exterior_hopf(const std::vector<int>& degrees, const HopfLimits& limits = {});

// Graded tensor product with Koszul-sign multiplication; index of (a, b)
// is a*dim(B)+b.
ExplicitHopfAlgebra hopf_tensor(const ExplicitHopfAlgebra& a, const ExplicitHopfAlgebra& b,
                                const HopfLimits& limits = {});

struct AxiomReport {
  bool ok = true;
  std::string failure;  // first failing axiom instance, deterministic
};

// Exhaustive structure-constant check: grading, unit, graded commutativity,
// coassociativity, counit laws, and the Koszul-sign algebra-morphism
// property of the coproduct. The default entry point parallelizes the pair
// sweep; the serial variant is the reference kept for testing.
AxiomReport verify_axioms(const ExplicitHopfAlgebra& h);
AxiomReport verify_axioms_serial(const ExplicitHopfAlgebra& h);

struct PrimitiveVector {
  int degree = 0;
  SparseVec coords;  // over the ambient basis
};

struct PrimitiveBasis {
  std::vector<PrimitiveVector> vectors;  // sorted by degree

  std::vector<int> degrees() const;
};

// Degreewise kernel of x -> Delta(x) - x(x)1 - 1(x)x, by exact elimination.
PrimitiveBasis primitives(const ExplicitHopfAlgebra& h);

struct HopfTheoremReport {
  bool iso = false;
  std::string failure;  // degree and kernel/cokernel witness when not iso
  std::vector<std::size_t> algebra_dims;   // dim H^d
  std::vector<std::size_t> exterior_dims;  // dim (wedge* PH)^d
};

// Builds the canonical algebra map from the exterior algebra on the
// primitives into H and reports bijectivity per degree.
HopfTheoremReport verify_hopf_theorem(const ExplicitHopfAlgebra& h, const HopfLimits& limits = {});

// Linear map between explicit Hopf algebras; column j holds the image of
// domain basis element j in codomain coordinates.
struct HopfMorphism {
  const ExplicitHopfAlgebra* domain = nullptr;
  const ExplicitHopfAlgebra* codomain = nullptr;
  RatMatrix matrix;

  SparseVec apply(const SparseVec& v) const;
};

// Throws NotHopfMorphism unless the map commutes with unit, counit,
// product, coproduct and preserves grading.
void check_hopf_morphism(const HopfMorphism& f);

// Multiplicative extension of generator images; domain must come from
// exterior_hopf (mask basis). The result is not assumed to be a Hopf
// morphism; run check_hopf_morphism.
HopfMorphism exterior_extend(const ExplicitHopfAlgebra& dom, const ExplicitHopfAlgebra& cod,
                             const std::vector<SparseVec>& generator_images);

// Canonical maps for G = N (x) Q: the projection H(G) -> H(N) restricting
// along the inclusion of N, and the injection H(Q) -> H(G).
HopfMorphism tensor_projection_first(const ExplicitHopfAlgebra& tensor,
                                     const ExplicitHopfAlgebra& first,
                                     const ExplicitHopfAlgebra& second);
HopfMorphism tensor_inclusion_second(const ExplicitHopfAlgebra& tensor,
                                     const ExplicitHopfAlgebra& first,
                                     const ExplicitHopfAlgebra& second);

struct ExactnessReport {
  bool injective = false;    // pi* on primitives
  bool surjective = false;   // iota* on primitives
  bool middle_exact = false; // ker(iota*) = im(pi*) on primitives
  bool exact = false;
  bool iso_verified = false; // section-induced isomorphism checked
  std::string failure;
  // per degree: dim PH(Q), dim PH(G), dim PH(N)
  std::vector<std::array<std::size_t, 4>> primitive_dims;
};

// Checks 0 -> PH(Q) -> PH(G) -> PH(N) -> 0 for iota*: H(G) -> H(N) and
// pi*: H(Q) -> H(G); when exact, constructs a section of iota* on
// primitives and verifies that the induced map from the exterior algebra
// on PH(N) + PH(Q) to H(G) is a bijective graded algebra morphism.
ExactnessReport check_primitive_exactness(const HopfMorphism& iota_star,
                                          const HopfMorphism& pi_star,
                                          const HopfLimits& limits = {});

}  // namespace gvc
