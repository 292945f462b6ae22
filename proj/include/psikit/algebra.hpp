#pragma once

#include <string>
#include <vector>

#include "psikit/groebner.hpp"
#include "psikit/poly.hpp"

namespace psikit {

// Finitely presented commutative algebra over one of the coefficient
// domains: base[g0,...,g_{n-1}] / (relations).  Zero generators presents
// the base ring itself (or a quotient of it, when relations are constants).
// Equality of algebras always means equality of presentations.
struct FpAlgebra {
  Domain base;
  std::vector<std::string> gens;
  IdealGens relations;     // validated: domain == base, nvars == gens.size()
  GroebnerBasis gb;        // reduced basis of `relations`, computed once
  bool zero_ring = false;  // 1 lies in the relation ideal

  unsigned nvars() const { return static_cast<unsigned>(gens.size()); }
  bool same_presentation(const FpAlgebra& o) const;
  // normal form of f against the relation basis
  Poly reduce(const Poly& f) const;
  std::string describe() const;
};

FpAlgebra make_algebra(const Domain& base, std::vector<std::string> gens,
                       std::vector<Poly> relations);
// the base ring presented with no generators
FpAlgebra base_ring(const Domain& base);

// Morphism between presented algebras: one target element per source
// generator.  Validated on construction: compatible bases and every
// source relation maps into the target ideal.
struct RingMorphism {
  FpAlgebra source;
  FpAlgebra target;
  std::vector<Poly> images;  // reduced mod target ideal
};

// Legal coefficient maps: Int -> Int/Rat/ModP(p), Rat -> Rat,
// ModP(p) -> ModP(p).
bool base_compatible(const Domain& src, const Domain& dst);

RingMorphism make_morphism(const FpAlgebra& A, const FpAlgebra& B,
                           std::vector<Poly> images);
RingMorphism identity_morphism(const FpAlgebra& A);

// image of a source element, reduced in the target
Poly apply(const RingMorphism& u, const Poly& f);

// v after u; requires target of u == source of v as presentations
RingMorphism compose(const RingMorphism& u, const RingMorphism& v);

// Ideal of a presented algebra, given by generators in its context.
struct IdealSpec {
  FpAlgebra ambient;
  std::vector<Poly> gens;
};

enum class PrimeStatus { Verified, Claimed };

// A prime is an IdealSpec plus a verification flag; "Claimed" primes are
// trusted by consumers but carry the flag so results stay auditable.
struct PrimeSpec {
  IdealSpec ideal;
  PrimeStatus status = PrimeStatus::Claimed;
};

// 1 is not in relations + gens
bool ideal_is_proper(const IdealSpec& I);

// Finitely presented module over an algebra: mgens.size() generators,
// each relation row gives one algebra coefficient per module generator.
struct ModulePresentation {
  FpAlgebra over;
  std::vector<std::string> mgens;
  std::vector<std::vector<Poly>> relations;
};

// A/I -> B/J induced by u; requires u(I) contained in J + (target ideal)
RingMorphism quotient_construction(const RingMorphism& u, const IdealSpec& I,
                                   const IdealSpec& J);

// A -> A[1/s] with one fresh generator y and relation s*y - 1
std::pair<FpAlgebra, RingMorphism> localize_ring(const FpAlgebra& A,
                                                 const Poly& s);

// A[1/s] -> B[1/t]; defined when u(s) is invertible in B[1/t], i.e. u(s)
// divides a power of t modulo the target ideal (t == u(s) in particular)
RingMorphism localize_construction(const RingMorphism& u, const Poly& s,
                                   const Poly& t);

struct TensorResult {
  FpAlgebra T;  // B tensor_A C
  RingMorphism to_B;
  RingMorphism to_C;
  // B == C case only: reduced generators b_i(x)1 - 1(x)b_i of the kernel
  // of the multiplication map, zeros dropped; empty otherwise
  std::vector<Poly> mult_kernel;
};

// pushout of f: A -> B and g: A -> C; requires same source presentation
TensorResult tensor_over(const RingMorphism& f, const RingMorphism& g);

struct ProductResult {
  FpAlgebra P;  // B x C
  Poly e;       // idempotent supported on the B factor
  RingMorphism diagonal;  // base -> P, a |-> (a, a)
  RingMorphism proj_B;
  RingMorphism proj_C;
};

// requires a common base domain
ProductResult product_construction(const FpAlgebra& B, const FpAlgebra& C);

struct IdealizationResult {
  FpAlgebra R;             // A (+) M, square-zero extension
  RingMorphism canonical;  // A -> R
};

IdealizationResult idealization(const FpAlgebra& A,
                                const ModulePresentation& M);

// A[X] -> B[X], X |-> X over u, with a shared fresh variable name
RingMorphism polynomial_extension(const RingMorphism& u);

// generators of the contraction u^{-1}(J + target ideal) in the source
// presentation; requires J proper
IdealSpec contract_ideal(const RingMorphism& u, const IdealSpec& J);

}  // namespace psikit
