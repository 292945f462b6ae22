#include "psikit/coeff.hpp"

#include <algorithm>
#include <vector>

namespace psikit {

const char* errkind_name(ErrKind k) {
  switch (k) {
  case ErrKind::ResourceLimit: return "ResourceLimit";
  case ErrKind::ContextMismatch: return "ContextMismatch";
  case ErrKind::InfiniteDimension: return "InfiniteDimension";
  case ErrKind::DuplicateName: return "DuplicateName";
  case ErrKind::MalformedRelation: return "MalformedRelation";
  case ErrKind::RelationNotPreserved: return "RelationNotPreserved";
  case ErrKind::BaseIncompatible: return "BaseIncompatible";
  case ErrKind::ImageNotContained: return "ImageNotContained";
  case ErrKind::IncompatibleMultiplicative: return "IncompatibleMultiplicative";
  case ErrKind::UnsupportedFiber: return "UnsupportedFiber";
  case ErrKind::UnsupportedSource: return "UnsupportedSource";
  case ErrKind::NotPsiAtPrime: return "NotPsiAtPrime";
  case ErrKind::NotCommonIdeal: return "NotCommonIdeal";
  case ErrKind::NotFiniteQuotient: return "NotFiniteQuotient";
  case ErrKind::InvalidD: return "InvalidD";
  case ErrKind::ImproperIdeal: return "ImproperIdeal";
  case ErrKind::NotPrime: return "NotPrime";
  case ErrKind::TooLarge: return "TooLarge";
  case ErrKind::NotARing: return "NotARing";
  case ErrKind::MeaninglessFact: return "MeaninglessFact";
  case ErrKind::IllTypedExpression: return "IllTypedExpression";
  case ErrKind::UnknownName: return "UnknownName";
  case ErrKind::SyntaxError: return "SyntaxError";
  case ErrKind::Internal: return "Internal";
  }
  return "Unknown";
}

Domain Domain::modp(const mpz_class& p) {
  if (p < 2 || !probable_prime(p))
    fail(ErrKind::BaseIncompatible, "modulus " + p.get_str() + " is not prime");
  return {BaseTag::ModP, p};
}

std::string Domain::str() const {
  switch (tag) {
  case BaseTag::Int: return "ZZ";
  case BaseTag::Rat: return "QQ";
  case BaseTag::ModP: return "Fp(" + p.get_str() + ")";
  }
  return "?";
}

Coeff c_norm(const Domain& d, const Coeff& a) {
  switch (d.tag) {
  case BaseTag::Rat:
    return a;
  case BaseTag::Int:
    if (a.get_den() != 1)
      fail(ErrKind::ContextMismatch, "non-integer coefficient over ZZ");
    return a;
  case BaseTag::ModP: {
    if (a.get_den() != 1)
      fail(ErrKind::ContextMismatch, "non-integer coefficient over Fp");
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_num().get_mpz_t(), d.p.get_mpz_t());
    return Coeff(r);
  }
  }
  return a;
}

Coeff c_add(const Domain& d, const Coeff& a, const Coeff& b) {
  return c_norm(d, a + b);
}
Coeff c_sub(const Domain& d, const Coeff& a, const Coeff& b) {
  return c_norm(d, a - b);
}
Coeff c_mul(const Domain& d, const Coeff& a, const Coeff& b) {
  return c_norm(d, a * b);
}
Coeff c_neg(const Domain& d, const Coeff& a) { return c_norm(d, -a); }

Coeff c_inv(const Domain& d, const Coeff& a) {
  if (c_is_zero(a)) fail(ErrKind::Internal, "inverse of zero");
  switch (d.tag) {
  case BaseTag::Rat:
    return Coeff(1) / a;
  case BaseTag::ModP: {
    mpz_class r;
    if (!mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), d.p.get_mpz_t()))
      fail(ErrKind::Internal, "non-invertible residue");
    return Coeff(r);
  }
  case BaseTag::Int:
    fail(ErrKind::Internal, "inverse requested over ZZ");
  }
  return a;
}

Coeff c_div(const Domain& d, const Coeff& a, const Coeff& b) {
  if (d.tag == BaseTag::Int) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_num().get_mpz_t(),
                b.get_num().get_mpz_t());
    if (r != 0) fail(ErrKind::Internal, "inexact integer division");
    return Coeff(q);
  }
  return c_mul(d, a, c_inv(d, b));
}

bool c_is_zero(const Coeff& a) { return a == 0; }
bool c_is_one(const Coeff& a) { return a == 1; }

mpz_class c_num(const Coeff& a) { return a.get_num(); }

bool probable_prime(const mpz_class& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace {

// Pollard rho with Brent cycling; n odd composite, no small factors.
mpz_class rho_factor(const mpz_class& n) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0xC0FFEEul);
  for (int attempt = 0; attempt < 64; ++attempt) {
    mpz_class c = rng.get_z_range(n - 3) + 1;
    mpz_class x = rng.get_z_range(n - 2) + 1, y = x, d = 1;
    long limit = 1 << 20;
    while (d == 1 && limit-- > 0) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      mpz_class diff = x - y;
      if (diff < 0) diff = -diff;
      if (diff == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d > 1 && d < n) return d;
  }
  fail(ErrKind::ResourceLimit, "cannot factor " + n.get_str());
}

void factor_into(const mpz_class& n, std::vector<mpz_class>& out) {
  if (n == 1) return;
  if (probable_prime(n)) {
    out.push_back(n);
    return;
  }
  mpz_class d = rho_factor(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

} // namespace

std::vector<mpz_class> prime_factors(const mpz_class& n_in) {
  mpz_class n = abs(n_in);
  if (n == 0) fail(ErrKind::Internal, "prime_factors(0)");
  std::vector<mpz_class> out;
  for (mpz_class p = 2; p * p <= n && p < 100000; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) factor_into(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_squarefree_int(const mpz_class& n_in) {
  mpz_class n = abs(n_in);
  if (n == 0) return false;
  for (const auto& p : prime_factors(n))
    if (mpz_divisible_p(n.get_mpz_t(), mpz_class(p * p).get_mpz_t()))
      return false;
  return true;
}

} // namespace psikit
