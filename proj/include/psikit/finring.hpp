#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "psikit/algebra.hpp"

namespace psikit {

// Explicit Cayley tables: add[i][j] and mul[i][j] are element indices.
struct RingTable {
  std::vector<std::vector<std::uint32_t>> add;
  std::vector<std::vector<std::uint32_t>> mul;
  std::uint32_t zero = 0;
  std::uint32_t one = 0;
};

// Finite commutative ring with a normalized element encoding.
//
// Presentation-backed rings keep a monomial basis with per-monomial moduli;
// an element is the mixed-radix index of its canonical coefficient tuple and
// the carrier size is the product of the moduli.  Basis monomials are stored
// in decreasing order, so reducing an out-of-range coefficient only carries
// into later positions.  Table-backed rings keep the validated tables.
struct FiniteRing {
  std::uint64_t n = 1;
  std::int64_t characteristic = 1;
  bool table_backed = false;

  // presentation backing
  Domain base = Domain::integers();
  std::vector<std::string> gens;
  GroebnerBasis gb;                         // relations lifted to Int
  std::vector<Exponents> basis;             // decreasing monomial order
  std::vector<std::int64_t> moduli;         // parallel to basis, each >= 2
  std::vector<std::vector<std::int64_t>> carry;  // coords of NF(m_i * mu_i)
  std::vector<std::vector<std::int64_t>> sc;     // coords of NF(mu_i * mu_j)

  // table backing
  std::vector<std::uint16_t> tadd, tmul;
  std::uint32_t tzero = 0, tone = 0;

  std::uint64_t size() const { return n; }
  std::uint64_t zero() const;
  std::uint64_t one() const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;

  std::vector<std::int64_t> coords(std::uint64_t idx) const;
  std::uint64_t index(const std::vector<std::int64_t>& c) const;
  bool same_ring(const FiniteRing& o) const;

  std::string elem_str(std::uint64_t idx) const;
  std::string str() const;
};

// Build from a presentation whose carrier is finite (the relation ideal
// contains a positive integer and each generator is integral), or from
// explicit tables with all ring axioms checked.
FiniteRing build_finite(const FpAlgebra& A);
FiniteRing build_finite(const RingTable& T);

// Residue polynomial of an element and index of a residue class;
// presentation-backed rings only.
Poly elem_poly(const FiniteRing& R, std::uint64_t idx);
std::uint64_t poly_elem(const FiniteRing& R, const Poly& f);

// Subset of a finite ring as a bitmask over element indices.
struct ElemSet {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> w;

  static ElemSet empty(std::uint64_t n);
  bool test(std::uint64_t i) const;
  void set(std::uint64_t i);
  std::uint64_t count() const;
  std::vector<std::uint64_t> elems() const;
  bool operator==(const ElemSet& o) const { return n == o.n && w == o.w; }
  bool operator<(const ElemSet& o) const;
};

ElemSet principal_ideal(const FiniteRing& R, std::uint64_t g);
ElemSet ideal_generated(const FiniteRing& R,
                        const std::vector<std::uint64_t>& gs);
ElemSet ideal_sum(const FiniteRing& R, const ElemSet& I, const ElemSet& J);

// All ideals, by closure of principal ideals under sum; sorted by size then
// mask.  Includes (0) and R.
std::vector<ElemSet> enumerate_ideals(const FiniteRing& R);

// ab in I implies a in I or b in I, checked over all pairs.  I proper.
bool is_prime_ideal_finite(const FiniteRing& R, const ElemSet& I);

// All prime ideals: proper ideals passing is_prime_ideal_finite.
std::vector<ElemSet> primes_finite(const FiniteRing& R);

// Every nonzero element invertible (and 1 != 0).
bool is_field_finite(const FiniteRing& R);

// Quotient R/I on coset representatives, as a table-backed ring together
// with the class index of every element of R.
struct QuotientTable {
  FiniteRing Q;
  std::vector<std::uint64_t> cls;
};
QuotientTable quotient_table(const FiniteRing& R, const ElemSet& I);

// Componentwise product B x C as a table-backed ring; element index is
// b + B.n * c.
FiniteRing finite_product_table(const FiniteRing& B, const FiniteRing& C);

// Unital homomorphism between finite rings, stored as the full index map.
struct FiniteMorphism {
  FiniteRing A, B;
  std::vector<std::uint64_t> map;
};

// Extend generator images through the presentation of A, then verify the
// homomorphism property exhaustively.
FiniteMorphism build_finite_morphism(const FiniteRing& A, const FiniteRing& B,
                                     const std::vector<std::uint64_t>& gen_images);
// Explicit full map, verified the same way.
FiniteMorphism finite_morphism_from_map(const FiniteRing& A,
                                        const FiniteRing& B,
                                        std::vector<std::uint64_t> map);
// Build both carriers of a presented morphism and transport the images.
FiniteMorphism build_finite_morphism(const RingMorphism& u);

// v after u.
FiniteMorphism compose_finite(const FiniteMorphism& u,
                              const FiniteMorphism& v);

// Preimage of a subset under the map.
ElemSet contract_finite(const FiniteMorphism& u, const ElemSet& I);

// All proper ideals I of the target with u(a) b in I implying u(a) in I or
// b in I, by exhaustive quantification.
std::vector<ElemSet> a_primes_finite(const FiniteMorphism& u);

struct BruteStatus {
  bool psi = false;
  bool strong = false;
};

// psi: every A-prime ideal is prime.  strong: psi, and for every prime Q of
// the target the induced residue map A/u^{-1}(Q) -> B/Q is a bijection of
// finite fields (equal size and surjective).
BruteStatus bruteforce_status(const FiniteMorphism& u);

// Reproducible pseudo-random morphism among products of Z/p^k and small
// F_q-quotients, rejected until the homomorphism checks pass.
FiniteMorphism random_instance(std::uint64_t seed, std::uint64_t size_bound);

} // namespace psikit
