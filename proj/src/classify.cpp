#include "psikit/classify.hpp"

#include <random>

#include "psikit/error.hpp"
#include "psikit/factor.hpp"

namespace psikit {
namespace {

// w(t) reduced against G, for univariate w and a residue representative t.
Poly eval_at(const Poly& w, const Poly& t, const GroebnerBasis& G) {
  const Domain& dom = w.domain();
  std::vector<Coeff> cs(w.is_zero() ? 0 : w.degree() + 1, Coeff(0));
  for (const auto& tm : w.terms()) cs[tm.mono[0]] = tm.c;
  Poly acc = Poly::zero(dom, t.nvars());
  for (std::size_t i = cs.size(); i-- > 0;) {
    acc = acc.mul(t).add(Poly::constant(dom, t.nvars(), cs[i]));
    acc = normal_form(acc, G);
  }
  return acc;
}

Poly nf_pow(Poly z, std::size_t e, const GroebnerBasis& G) {
  Poly r = Poly::constant(z.domain(), z.nvars(), Coeff(1));
  while (e > 0) {
    if (e & 1) r = normal_form(r.mul(z), G);
    e >>= 1;
    if (e > 0) z = normal_form(z.mul(z), G);
  }
  return r;
}

// Inspect one candidate: decides Field when its minimal polynomial is
// irreducible of full degree, extracts a witness when it factors, and stays
// silent when it generates a proper subfield.
std::optional<QuotClass> examine(const Poly& t, const GroebnerBasis& G,
                                 const std::vector<Exponents>& basis,
                                 std::size_t D) {
  Poly m = min_poly(t, G, basis);
  if (m.degree() < 1) return std::nullopt;
  Factorization F = univ_factor(m);

  for (const auto& fp : F.factors) {
    if (fp.mult < 2) continue;
    // w = (m / q)(t) squares to zero: m | w^2 because q appears twice in m
    Poly q, r;
    univ_divrem(m, fp.base, q, r);
    QuotClass out;
    out.kind = QuotKind::NotField;
    out.wkind = WitnessKind::Nilpotent;
    out.nilpotent = eval_at(q, t, G);
    out.zero_divisor = out.nilpotent;
    out.cofactor = eval_at(fp.base, t, G);
    return out;
  }

  if (F.factors.size() >= 2) {
    const Poly& f = F.factors[0].base;
    Poly g, r0;
    univ_divrem(m, f, g, r0); // exact: g = m / f
    Poly one, s, u;
    univ_egcd(f, g, one, s, u);
    Poly q1, e_uni;
    univ_divrem(s.mul(f), m, q1, e_uni); // e = s*f mod m: 0 mod f, 1 mod g
    QuotClass out;
    out.kind = QuotKind::NotField;
    out.wkind = WitnessKind::Idempotent;
    out.idempotent = eval_at(e_uni, t, G);
    out.zero_divisor = eval_at(f, t, G);
    out.cofactor = eval_at(g, t, G);
    return out;
  }

  if (m.degree() == D) {
    QuotClass out;
    out.kind = QuotKind::Field;
    out.dim = D;
    return out;
  }
  return std::nullopt;
}

// Complete sweep of a small ModP quotient.  A finite commutative ring with
// no nontrivial idempotent is local, and then it is a field exactly when it
// has no nonzero nilpotent; z^D = 0 for every z in the maximal ideal.
QuotClass exhaustive_modp(const GroebnerBasis& G,
                          const std::vector<Exponents>& basis) {
  const Domain& dom = G.dom;
  const std::size_t D = basis.size();
  const unsigned long p = mpz_get_ui(dom.p.get_mpz_t());
  const Poly one = Poly::constant(dom, G.nvars, Coeff(1));

  std::optional<Poly> first_nilpotent;
  std::vector<unsigned long> odo(D, 0);
  for (;;) {
    std::size_t k = 0;
    while (k < D && ++odo[k] == p) odo[k++] = 0;
    if (k == D) break;

    std::vector<Term> ts;
    for (std::size_t i = 0; i < D; ++i)
      if (odo[i] != 0) ts.push_back(Term{basis[i], Coeff(odo[i])});
    Poly z = Poly::from_terms(dom, G.nvars, std::move(ts));

    Poly z2 = normal_form(z.mul(z), G);
    if (z2.equals(z) && !z.equals(one)) {
      QuotClass out;
      out.kind = QuotKind::NotField;
      out.wkind = WitnessKind::Idempotent;
      out.idempotent = z;
      out.zero_divisor = z;
      out.cofactor = one.sub(z);
      return out;
    }
    if (!first_nilpotent && nf_pow(z, D, G).is_zero()) first_nilpotent = z;
  }

  if (first_nilpotent) {
    // minimal k with z^k = 0, then w = z^ceil(k/2) has w^2 = 0
    Poly z = *first_nilpotent;
    std::size_t k = 1;
    Poly zk = z;
    while (!zk.is_zero()) {
      ++k;
      zk = normal_form(zk.mul(z), G);
    }
    Poly w = nf_pow(z, (k + 1) / 2, G);
    QuotClass out;
    out.kind = QuotKind::NotField;
    out.wkind = WitnessKind::Nilpotent;
    out.nilpotent = w;
    out.zero_divisor = w;
    out.cofactor = w;
    return out;
  }
  QuotClass out;
  out.kind = QuotKind::Field;
  out.dim = D;
  return out;
}

} // namespace

QuotClass classify_artinian_quotient(const IdealGens& I, std::uint64_t seed) {
  if (!I.dom.is_field())
    fail(ErrKind::ContextMismatch, "classification needs field coefficients");
  GroebnerBasis G = groebner(I);
  QuotClass res;
  if (G.is_unit_ideal()) {
    res.kind = QuotKind::Zero;
    return res;
  }
  auto qb = quotient_basis(G);
  if (!qb)
    fail(ErrKind::InfiniteDimension, "quotient is not finite-dimensional");
  const std::vector<Exponents>& basis = *qb;
  const std::size_t D = basis.size();
  if (D == 1) {
    res.kind = QuotKind::Field;
    res.dim = 1;
    return res;
  }

  for (unsigned i = 0; i < I.nvars; ++i) {
    auto r = examine(Poly::variable(I.dom, I.nvars, i), G, basis, D);
    if (r) return *r;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (unsigned retry = 0; retry < limits().classify_retries; ++retry) {
    Poly t = Poly::zero(I.dom, I.nvars);
    for (unsigned i = 0; i < I.nvars; ++i) {
      int c = coeff(rng);
      if (c != 0)
        t = t.add(Poly::variable(I.dom, I.nvars, i)
                      .scale(c_norm(I.dom, Coeff(c))));
    }
    if (t.is_zero()) continue;
    auto r = examine(t, G, basis, D);
    if (r) return *r;
  }

  if (I.dom.tag == BaseTag::ModP) {
    mpz_class size = 1;
    bool small = true;
    for (std::size_t i = 0; i < D && small; ++i) {
      size *= I.dom.p;
      if (size > static_cast<unsigned long>(limits().classify_enum_bound))
        small = false;
    }
    if (small) return exhaustive_modp(G, basis);
  }
  fail(ErrKind::ResourceLimit, "field classification budget exhausted");
}

} // namespace psikit
