#pragma once

#include <optional>
#include <vector>

#include "psikit/poly.hpp"

namespace psikit {

// A finite generating set for an ideal in Domain[x_0..x_{nvars-1}].
struct IdealGens {
  Domain dom;
  unsigned nvars = 0;
  std::vector<Poly> gens;

  static IdealGens make(Domain d, unsigned nvars, std::vector<Poly> gens);
};

// Reduced Groebner basis.  Over Rat/ModP this is the classical reduced basis
// (monic, unique for the order).  Over Int it is a reduced strong basis:
// every leading coefficient is positive, non-leading coefficients are the
// canonical euclidean residues, and both S- and G-polynomials of all pairs
// reduce to zero.
struct GroebnerBasis {
  Domain dom;
  unsigned nvars = 0;
  MonomialOrder order;
  std::vector<Poly> gens;

  bool is_unit_ideal() const;
};

GroebnerBasis groebner(const IdealGens& I,
                       const MonomialOrder& order = MonomialOrder::degrevlex());

// Canonical full normal form: every term of the result is irreducible.
Poly normal_form(const Poly& f, const GroebnerBasis& G);

bool in_ideal(const Poly& f, const GroebnerBasis& G);

// Same ideal, decided by mutual membership.
bool ideal_equal(const IdealGens& A, const IdealGens& B);

// Generators of I restricted to the non-masked variables; the result lives
// in a smaller context holding the kept variables in their original order.
IdealGens eliminate(const IdealGens& I, const std::vector<char>& elim_mask);

// (I : f^inf) by adjoining t*f - 1 and eliminating t.
IdealGens saturate(const IdealGens& I, const Poly& f);

// Standard monomials of the quotient by I; nullopt when infinite.
// Field domains only.  The unit ideal yields the empty basis (zero ring).
std::optional<std::vector<Exponents>> quotient_basis(const GroebnerBasis& G);

// Monic minimal polynomial of the residue of v in the finite-dimensional
// quotient (field domains); returned univariate in a fresh variable.
Poly min_poly(const Poly& v, const GroebnerBasis& G,
              const std::vector<Exponents>& basis);

// Coordinates of NF(f) in the standard-monomial basis.
std::vector<Coeff> coords_in_basis(const Poly& f, const GroebnerBasis& G,
                                   const std::vector<Exponents>& basis);

} // namespace psikit
