#pragma once

#include <vector>

#include "psikit/poly.hpp"

namespace psikit {

struct FactorPower {
  Poly base; // monic irreducible, univariate, same domain as the input
  unsigned mult = 1;
};

// input = lead * prod base_i ^ mult_i, factors sorted by degree then text.
struct Factorization {
  Coeff lead;
  std::vector<FactorPower> factors;
};

// Factor a nonzero univariate polynomial over Rat or ModP(p).
Factorization univ_factor(const Poly& f);

bool univ_irreducible(const Poly& f);
bool univ_squarefree(const Poly& f);

// Division with remainder by a nonzero divisor over a field: a = q*b + r.
void univ_divrem(const Poly& a, const Poly& b, Poly& q, Poly& r);

// Monic gcd over a field.
Poly univ_gcd(const Poly& a, const Poly& b);

// Extended gcd over a field: g monic, g = s*a + t*b.
void univ_egcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t);

} // namespace psikit
