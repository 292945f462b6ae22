#pragma once

#include <gmpxx.h>

#include <string>

#include "psikit/error.hpp"

namespace psikit {

enum class BaseTag { Int, Rat, ModP };

// Coefficient domain: the integers, the rationals, or a prime field.
// Values are carried as canonical mpq_class; for Int and ModP the
// denominator is always 1, and for ModP the numerator lies in [0, p).
struct Domain {
  BaseTag tag = BaseTag::Int;
  mpz_class p; // modulus, meaningful only for ModP

  static Domain integers() { return {BaseTag::Int, 0}; }
  static Domain rationals() { return {BaseTag::Rat, 0}; }
  static Domain modp(const mpz_class& p);

  bool operator==(const Domain& o) const {
    return tag == o.tag && (tag != BaseTag::ModP || p == o.p);
  }
  bool is_field() const { return tag != BaseTag::Int; }
  std::string str() const;
};

// A coefficient together with the arithmetic of its domain.  Ops are free
// functions taking the Domain explicitly; polynomials carry the Domain once.
using Coeff = mpq_class;

Coeff c_norm(const Domain& d, const Coeff& a);
Coeff c_add(const Domain& d, const Coeff& a, const Coeff& b);
Coeff c_sub(const Domain& d, const Coeff& a, const Coeff& b);
Coeff c_mul(const Domain& d, const Coeff& a, const Coeff& b);
Coeff c_neg(const Domain& d, const Coeff& a);
// Multiplicative inverse; domain must be a field and a nonzero.
Coeff c_inv(const Domain& d, const Coeff& a);
// Exact division in a field, or integer division when it is exact.
Coeff c_div(const Domain& d, const Coeff& a, const Coeff& b);
bool c_is_zero(const Coeff& a);
bool c_is_one(const Coeff& a);

// Integer-only helpers (domain Int).
mpz_class c_num(const Coeff& a);

bool probable_prime(const mpz_class& n);

// All prime factors of |n| (n != 0), ascending, without multiplicity.
// Throws ResourceLimit if a cofactor resists factoring.
std::vector<mpz_class> prime_factors(const mpz_class& n);

bool is_squarefree_int(const mpz_class& n);

} // namespace psikit
