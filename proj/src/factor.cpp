#include "psikit/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>

#include "psikit/error.hpp"

namespace psikit {
namespace {

// Dense univariate layer, coefficients ascending by degree, no trailing zeros.
using UV = std::vector<Coeff>;

void uv_trim(UV& a) {
  while (!a.empty() && c_is_zero(a.back())) a.pop_back();
}

int uv_deg(const UV& a) { return static_cast<int>(a.size()) - 1; }

UV uv_from_poly(const Poly& f) {
  if (f.is_zero()) return {};
  UV a(static_cast<std::size_t>(f.degree()) + 1, Coeff(0));
  for (const auto& t : f.terms()) a[t.mono[0]] = t.c;
  uv_trim(a);
  return a;
}

Poly uv_to_poly(const Domain& d, const UV& a) {
  std::vector<Term> ts;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!c_is_zero(a[i]))
      ts.push_back(Term{Exponents{static_cast<std::uint32_t>(i)}, a[i]});
  return Poly::from_terms(d, 1, std::move(ts));
}

UV uv_add(const Domain& d, const UV& a, const UV& b) {
  UV r(std::max(a.size(), b.size()), Coeff(0));
  for (std::size_t i = 0; i < r.size(); ++i) {
    Coeff x = i < a.size() ? a[i] : Coeff(0);
    Coeff y = i < b.size() ? b[i] : Coeff(0);
    r[i] = c_add(d, x, y);
  }
  uv_trim(r);
  return r;
}

UV uv_sub(const Domain& d, const UV& a, const UV& b) {
  UV r(std::max(a.size(), b.size()), Coeff(0));
  for (std::size_t i = 0; i < r.size(); ++i) {
    Coeff x = i < a.size() ? a[i] : Coeff(0);
    Coeff y = i < b.size() ? b[i] : Coeff(0);
    r[i] = c_sub(d, x, y);
  }
  uv_trim(r);
  return r;
}

UV uv_mul(const Domain& d, const UV& a, const UV& b) {
  if (a.empty() || b.empty()) return {};
  UV r(a.size() + b.size() - 1, Coeff(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (c_is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = c_add(d, r[i + j], c_mul(d, a[i], b[j]));
  }
  uv_trim(r);
  return r;
}

UV uv_scale(const Domain& d, UV a, const Coeff& c) {
  for (auto& x : a) x = c_mul(d, x, c);
  uv_trim(a);
  return a;
}

// a = q*b + r with deg r < deg b; field coefficients, b nonzero.
void uv_divrem_impl(const Domain& d, UV a, const UV& b, UV& q, UV& r) {
  if (b.empty()) fail(ErrKind::Internal, "univariate division by zero");
  const int db = uv_deg(b);
  const Coeff inv_lb = c_inv(d, b.back());
  q.assign(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Coeff(0));
  while (uv_deg(a) >= db) {
    int k = uv_deg(a) - db;
    Coeff c = c_mul(d, a.back(), inv_lb);
    q[k] = c;
    for (int i = 0; i <= db; ++i)
      a[k + i] = c_sub(d, a[k + i], c_mul(d, c, b[i]));
    uv_trim(a);
  }
  uv_trim(q);
  r = std::move(a);
}

UV uv_rem(const Domain& d, const UV& a, const UV& b) {
  UV q, r;
  uv_divrem_impl(d, a, b, q, r);
  return r;
}

UV uv_quo(const Domain& d, const UV& a, const UV& b) {
  UV q, r;
  uv_divrem_impl(d, a, b, q, r);
  return q;
}

UV uv_monic(const Domain& d, UV a) {
  if (a.empty()) return a;
  Coeff inv = c_inv(d, a.back());
  return uv_scale(d, std::move(a), inv);
}

UV uv_gcd_impl(const Domain& d, UV a, UV b) {
  while (!b.empty()) {
    UV r = uv_rem(d, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return uv_monic(d, std::move(a));
}

void uv_egcd_impl(const Domain& d, const UV& a, const UV& b, UV& g, UV& s,
                  UV& t) {
  UV r0 = a, r1 = b;
  UV s0 = {Coeff(1)}, s1 = {};
  UV t0 = {}, t1 = {Coeff(1)};
  while (!r1.empty()) {
    UV q, r;
    uv_divrem_impl(d, r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    UV s2 = uv_sub(d, s0, uv_mul(d, q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    UV t2 = uv_sub(d, t0, uv_mul(d, q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    g = {};
    s = {};
    t = {};
    return;
  }
  Coeff inv = c_inv(d, r0.back());
  g = uv_scale(d, std::move(r0), inv);
  s = uv_scale(d, std::move(s0), inv);
  t = uv_scale(d, std::move(t0), inv);
}

UV uv_deriv(const Domain& d, const UV& a) {
  if (a.size() <= 1) return {};
  UV r(a.size() - 1, Coeff(0));
  for (std::size_t i = 1; i < a.size(); ++i)
    r[i - 1] = c_mul(d, a[i], c_norm(d, Coeff(static_cast<unsigned long>(i))));
  uv_trim(r);
  return r;
}

UV uv_mulmod(const Domain& d, const UV& a, const UV& b, const UV& f) {
  return uv_rem(d, uv_mul(d, a, b), f);
}

UV uv_powmod(const Domain& d, UV base, mpz_class e, const UV& f) {
  UV r = uv_rem(d, {Coeff(1)}, f);
  base = uv_rem(d, base, f);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = uv_mulmod(d, r, base, f);
    e >>= 1;
    if (e > 0) base = uv_mulmod(d, base, base, f);
  }
  return r;
}

std::uint64_t uv_hash(const Domain& d, const UV& a) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  mix(d.str());
  for (const auto& c : a) mix(c.get_str());
  return h;
}

// ---- squarefree decomposition ----

using SqfPart = std::pair<UV, unsigned>;

// p-th root of f when f'(x) = 0: f = g(x^p) and over a prime field the
// coefficients are their own p-th roots.
UV uv_pth_root(const UV& a, unsigned long p) {
  UV r;
  for (std::size_t i = 0; i < a.size(); i += p) r.push_back(a[i]);
  uv_trim(r);
  return r;
}

void sqf_decompose(const Domain& dom, UV f, unsigned multiplier,
                   std::vector<SqfPart>& out) {
  if (uv_deg(f) <= 0) return;
  UV fp = uv_deriv(dom, f);
  if (fp.empty()) {
    // only in characteristic p, and then p <= deg f
    unsigned long p = mpz_get_ui(dom.p.get_mpz_t());
    sqf_decompose(dom, uv_pth_root(f, p), multiplier * static_cast<unsigned>(p),
                  out);
    return;
  }
  UV c = uv_gcd_impl(dom, f, fp);
  UV w = uv_quo(dom, f, c);
  unsigned i = 1;
  while (uv_deg(w) > 0) {
    UV y = uv_gcd_impl(dom, w, c);
    UV z = uv_quo(dom, w, y);
    if (uv_deg(z) > 0) out.push_back({z, i * multiplier});
    w = std::move(y);
    c = uv_quo(dom, c, w);
    ++i;
  }
  if (uv_deg(c) > 0) {
    unsigned long p = mpz_get_ui(dom.p.get_mpz_t());
    sqf_decompose(dom, uv_pth_root(c, p), multiplier * static_cast<unsigned>(p),
                  out);
  }
}

// ---- factorization over a prime field ----

mpz_class rand_below(std::mt19937_64& rng, const mpz_class& p) {
  std::size_t bits = mpz_sizeinbase(p.get_mpz_t(), 2) + 64;
  mpz_class acc = 0;
  for (std::size_t b = 0; b < bits; b += 64) {
    acc <<= 64;
    acc += mpz_class(static_cast<unsigned long>(rng()));
  }
  return acc % p;
}

UV uv_random(const Domain& dom, std::mt19937_64& rng, int deg) {
  UV a(static_cast<std::size_t>(deg) + 1, Coeff(0));
  for (auto& c : a) c = Coeff(rand_below(rng, dom.p));
  uv_trim(a);
  return a;
}

// distinct-degree: (product of all irreducible factors of degree d, d)
std::vector<std::pair<UV, unsigned>> ddf(const Domain& dom, UV g) {
  std::vector<std::pair<UV, unsigned>> out;
  UV x = uv_rem(dom, {Coeff(0), Coeff(1)}, g);
  UV h = x;
  unsigned d = 0;
  while (2 * (d + 1) <= static_cast<unsigned>(uv_deg(g))) {
    ++d;
    h = uv_powmod(dom, h, dom.p, g);
    UV gd = uv_gcd_impl(dom, uv_sub(dom, h, x), g);
    if (uv_deg(gd) > 0) {
      out.push_back({gd, d});
      g = uv_quo(dom, g, gd);
      h = uv_rem(dom, h, g);
      x = uv_rem(dom, x, g);
    }
  }
  if (uv_deg(g) > 0) out.push_back({g, static_cast<unsigned>(uv_deg(g))});
  return out;
}

// equal-degree splitting, Cantor-Zassenhaus
void edf(const Domain& dom, const UV& f, unsigned d, std::mt19937_64& rng,
         std::vector<UV>& out) {
  if (uv_deg(f) == static_cast<int>(d)) {
    out.push_back(uv_monic(dom, f));
    return;
  }
  UV split;
  for (unsigned tries = 0;; ++tries) {
    if (tries > 400) fail(ErrKind::ResourceLimit, "equal-degree split stalled");
    UV a = uv_random(dom, rng, uv_deg(f) - 1);
    if (uv_deg(a) < 1) continue;
    UV g0 = uv_gcd_impl(dom, a, f);
    if (uv_deg(g0) > 0 && uv_deg(g0) < uv_deg(f)) {
      split = g0;
      break;
    }
    UV g;
    if (dom.p == 2) {
      UV b = a, t = a;
      for (unsigned i = 1; i < d; ++i) {
        b = uv_mulmod(dom, b, b, f);
        t = uv_add(dom, t, b);
      }
      g = uv_gcd_impl(dom, t, f);
    } else {
      mpz_class pd;
      mpz_pow_ui(pd.get_mpz_t(), dom.p.get_mpz_t(), d);
      UV b = uv_powmod(dom, a, (pd - 1) / 2, f);
      g = uv_gcd_impl(dom, uv_sub(dom, b, {Coeff(1)}), f);
    }
    if (uv_deg(g) > 0 && uv_deg(g) < uv_deg(f)) {
      split = g;
      break;
    }
  }
  edf(dom, split, d, rng, out);
  edf(dom, uv_quo(dom, f, split), d, rng, out);
}

std::vector<UV> factor_sqfree_modp(const Domain& dom, const UV& g,
                                   std::mt19937_64& rng) {
  std::vector<UV> out;
  for (auto& [prod, d] : ddf(dom, g)) edf(dom, prod, d, rng, out);
  return out;
}

// ---- factorization over the rationals ----

// Integer polynomials, dense ascending; modulus passed explicitly.
using ZV = std::vector<mpz_class>;

void zv_trim(ZV& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int zv_deg(const ZV& a) { return static_cast<int>(a.size()) - 1; }

ZV zv_mod(ZV a, const mpz_class& m) {
  for (auto& c : a) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  zv_trim(a);
  return a;
}

ZV zv_add(const ZV& a, const ZV& b) {
  ZV r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  zv_trim(r);
  return r;
}

ZV zv_sub(const ZV& a, const ZV& b) {
  ZV r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  zv_trim(r);
  return r;
}

ZV zv_mul(const ZV& a, const ZV& b) {
  if (a.empty() || b.empty()) return {};
  ZV r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  zv_trim(r);
  return r;
}

ZV zv_mulmod(const ZV& a, const ZV& b, const mpz_class& m) {
  return zv_mod(zv_mul(a, b), m);
}

// division by a monic divisor over Z/m (or over Z when m == 0)
void zv_divrem_monic(ZV a, const ZV& b, const mpz_class& m, ZV& q, ZV& r) {
  const int db = zv_deg(b);
  q.assign(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, 0);
  while (zv_deg(a) >= db) {
    int k = zv_deg(a) - db;
    mpz_class c = a.back();
    q[k] = c;
    for (int i = 0; i <= db; ++i) a[k + i] -= c * b[i];
    zv_trim(a);
  }
  if (m != 0) {
    q = zv_mod(std::move(q), m);
    a = zv_mod(std::move(a), m);
  }
  zv_trim(q);
  r = std::move(a);
}

ZV zv_symmetric(ZV a, const mpz_class& m) {
  const mpz_class half = m / 2;
  for (auto& c : a) {
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  zv_trim(a);
  return a;
}

UV zv_to_uv(const Domain& d, const ZV& a) {
  UV r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(c_norm(d, Coeff(c)));
  uv_trim(r);
  return r;
}

ZV uv_to_zv(const UV& a) {
  ZV r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(c_num(c_norm(Domain::integers(), c)));
  zv_trim(r);
  return r;
}

// One quadratic lift: from F = g*h, s*g + t*h = 1 (mod m) to the same mod m^2.
// h stays monic; degree shapes are preserved.
void hensel_step(const ZV& F, ZV& g, ZV& h, ZV& s, ZV& t, const mpz_class& m) {
  const mpz_class m2 = m * m;
  ZV e = zv_mod(zv_sub(F, zv_mul(g, h)), m2);
  ZV q, r;
  zv_divrem_monic(zv_mulmod(s, e, m2), h, m2, q, r);
  ZV g1 = zv_mod(zv_add(zv_add(g, zv_mulmod(t, e, m2)), zv_mulmod(q, g, m2)),
                 m2);
  ZV h1 = zv_mod(zv_add(h, r), m2);
  ZV b = zv_mod(zv_sub(zv_add(zv_mulmod(s, g1, m2), zv_mulmod(t, h1, m2)),
                       ZV{1}),
                m2);
  ZV c, dd;
  zv_divrem_monic(zv_mulmod(s, b, m2), h1, m2, c, dd);
  ZV s1 = zv_mod(zv_sub(s, dd), m2);
  ZV t1 = zv_mod(zv_sub(zv_sub(t, zv_mulmod(t, b, m2)), zv_mulmod(c, g1, m2)),
                 m2);
  g = std::move(g1);
  h = std::move(h1);
  s = std::move(s1);
  t = std::move(t1);
}

// Lift fs (monic mod p, product = F mod p) to factors mod M = p^(2^j),
// product = F mod M.  F monic.
std::vector<ZV> lift_tree(const ZV& F, const std::vector<ZV>& fs,
                          const mpz_class& p, const mpz_class& M) {
  if (fs.size() == 1) return {zv_mod(F, M)};
  const std::size_t half = fs.size() / 2;
  ZV g{1}, h{1};
  for (std::size_t i = 0; i < half; ++i) g = zv_mulmod(g, fs[i], p);
  for (std::size_t i = half; i < fs.size(); ++i) h = zv_mulmod(h, fs[i], p);

  // Bezout mod p with deg s < deg h, deg t < deg g
  Domain fp = Domain::modp(p);
  UV ug, us, ut;
  uv_egcd_impl(fp, zv_to_uv(fp, g), zv_to_uv(fp, h), ug, us, ut);
  if (uv_deg(ug) != 0)
    fail(ErrKind::Internal, "modular factors not coprime in lift");
  us = uv_rem(fp, us, zv_to_uv(fp, h));
  // t = (1 - s*g)/h exactly mod p
  UV num = uv_sub(fp, {Coeff(1)}, uv_mul(fp, us, zv_to_uv(fp, g)));
  ut = uv_quo(fp, num, zv_to_uv(fp, h));

  ZV G = g, H = h, S = uv_to_zv(us), T = uv_to_zv(ut);
  mpz_class m = p;
  while (m < M) {
    hensel_step(zv_mod(F, m * m), G, H, S, T, m);
    m *= m;
  }
  std::vector<ZV> out = lift_tree(G, {fs.begin(), fs.begin() + half}, p, M);
  std::vector<ZV> right = lift_tree(H, {fs.begin() + half, fs.end()}, p, M);
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

// Zassenhaus recombination of modular factors into true monic Z-factors.
std::vector<ZV> recombine(ZV G, std::vector<ZV> mf, const mpz_class& M) {
  std::vector<ZV> out;
  std::vector<std::size_t> active(mf.size());
  for (std::size_t i = 0; i < mf.size(); ++i) active[i] = i;
  std::size_t s = 1;
  while (2 * s <= active.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ZV prod{1};
      for (std::size_t i : idx) prod = zv_mulmod(prod, mf[active[i]], M);
      prod = zv_symmetric(std::move(prod), M);
      ZV q, r;
      zv_divrem_monic(G, prod, 0, q, r);
      if (r.empty()) {
        out.push_back(prod);
        G = std::move(q);
        std::vector<std::size_t> keep;
        for (std::size_t i = 0, k = 0; i < active.size(); ++i) {
          if (k < s && idx[k] == i) {
            ++k;
            continue;
          }
          keep.push_back(active[i]);
        }
        active = std::move(keep);
        found = true;
        break;
      }
      // next size-s combination
      std::size_t j = s;
      while (j > 0 && idx[j - 1] == active.size() - s + (j - 1)) --j;
      if (j == 0) break;
      ++idx[j - 1];
      for (std::size_t k = j; k < s; ++k) idx[k] = idx[k - 1] + 1;
    }
    if (!found) ++s;
  }
  if (zv_deg(G) > 0) out.push_back(G);
  return out;
}

// Monic irreducible rational factors of a squarefree monic rational poly.
std::vector<UV> factor_sqfree_rat(const Domain& dom, const UV& z,
                                  std::mt19937_64& rng) {
  const int n = uv_deg(z);
  if (n == 1) return {z};

  // primitive integer form, positive leading coefficient
  mpz_class den = 1;
  for (const auto& c : z)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZV pz;
  pz.reserve(z.size());
  for (const auto& c : z) {
    mpq_class q = c * den;
    pz.push_back(q.get_num());
  }
  mpz_class content = 0;
  for (const auto& c : pz)
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  for (auto& c : pz) c /= content;
  const mpz_class b = pz.back();

  // monicize: Gm(x) = b^(n-1) * pz(x/b), so Gm[i] = pz[i] * b^(n-1-i)
  ZV Gm(pz.size());
  Gm[n] = 1;
  mpz_class pw = 1;
  for (int i = n - 1; i >= 0; --i) {
    Gm[i] = pz[i] * pw;
    pw *= b;
  }

  // good prime: Gm squarefree mod p
  mpz_class p = 2;
  for (;;) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    Domain fp = Domain::modp(p);
    UV gbar = zv_to_uv(fp, Gm);
    if (uv_deg(gbar) != n) continue; // cannot happen: monic
    if (uv_deg(uv_gcd_impl(fp, gbar, uv_deriv(fp, gbar))) == 0) break;
  }
  Domain fp = Domain::modp(p);
  UV gbar = zv_to_uv(fp, Gm);
  std::vector<UV> mfu = factor_sqfree_modp(fp, gbar, rng);
  std::vector<ZV> irre;
  if (mfu.size() == 1) {
    irre.push_back(Gm);
  } else {
    // Mignotte-style bound: any monic divisor has |coeffs| <= 2^n * |Gm|_2
    mpz_class norm2 = 0;
    for (const auto& c : Gm) norm2 += c * c;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    mpz_class bound = (root + 1);
    bound <<= static_cast<unsigned>(n);
    mpz_class M = p;
    while (M < 2 * bound + 1) M *= M;
    std::vector<ZV> mfz;
    mfz.reserve(mfu.size());
    for (const auto& u : mfu) mfz.push_back(uv_to_zv(u));
    std::vector<ZV> lifted = lift_tree(zv_mod(Gm, M), mfz, p, M);
    irre = recombine(Gm, std::move(lifted), M);
  }

  // map back: H(x) monic factor of Gm gives monic factor H(b*x)/b^deg(H) of z
  std::vector<UV> out;
  for (const auto& H : irre) {
    UV h(H.size());
    const int k = zv_deg(H);
    mpz_class bp = 1;
    for (int i = k; i >= 0; --i) {
      // coefficient H_i * b^i / b^k = H_i / b^(k-i)
      h[i] = Coeff(H[i], bp);
      h[i].canonicalize();
      if (i > 0) bp *= b;
    }
    uv_trim(h);
    out.push_back(uv_monic(dom, std::move(h)));
  }
  return out;
}

bool factor_order(const FactorPower& a, const FactorPower& b) {
  if (a.base.degree() != b.base.degree())
    return a.base.degree() < b.base.degree();
  return a.base.str() < b.base.str();
}

} // namespace

Factorization univ_factor(const Poly& f) {
  const Domain& dom = f.domain();
  if (!dom.is_field())
    fail(ErrKind::ContextMismatch, "univ_factor needs field coefficients");
  if (f.nvars() != 1)
    fail(ErrKind::ContextMismatch, "univ_factor needs a univariate input");
  if (f.is_zero())
    fail(ErrKind::MalformedRelation, "univ_factor of the zero polynomial");

  UV a = uv_from_poly(f);
  Factorization out;
  out.lead = a.back();
  if (uv_deg(a) == 0) return out;
  a = uv_monic(dom, std::move(a));

  std::mt19937_64 rng(uv_hash(dom, a));
  std::vector<SqfPart> parts;
  sqf_decompose(dom, a, 1, parts);
  for (const auto& [g, mult] : parts) {
    std::vector<UV> irre = dom.tag == BaseTag::Rat
                               ? factor_sqfree_rat(dom, g, rng)
                               : factor_sqfree_modp(dom, g, rng);
    for (auto& h : irre)
      out.factors.push_back(FactorPower{uv_to_poly(dom, h), mult});
  }
  std::sort(out.factors.begin(), out.factors.end(), factor_order);
  return out;
}

bool univ_irreducible(const Poly& f) {
  if (f.is_zero() || f.degree() == 0) return false;
  Factorization F = univ_factor(f);
  return F.factors.size() == 1 && F.factors[0].mult == 1;
}

bool univ_squarefree(const Poly& f) {
  const Domain& dom = f.domain();
  if (!dom.is_field() || f.nvars() != 1)
    fail(ErrKind::ContextMismatch, "univ_squarefree context");
  if (f.is_zero()) return false;
  UV a = uv_from_poly(f);
  if (uv_deg(a) == 0) return true;
  UV d = uv_deriv(dom, a);
  if (d.empty()) return false;
  return uv_deg(uv_gcd_impl(dom, a, d)) == 0;
}

void univ_divrem(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  const Domain& dom = a.domain();
  if (!dom.is_field() || !(dom == b.domain()) || a.nvars() != 1 ||
      b.nvars() != 1)
    fail(ErrKind::ContextMismatch, "univ_divrem context");
  if (b.is_zero()) fail(ErrKind::MalformedRelation, "division by zero");
  UV uq, ur;
  uv_divrem_impl(dom, uv_from_poly(a), uv_from_poly(b), uq, ur);
  q = uv_to_poly(dom, uq);
  r = uv_to_poly(dom, ur);
}

Poly univ_gcd(const Poly& a, const Poly& b) {
  const Domain& dom = a.domain();
  if (!dom.is_field() || !(dom == b.domain()) || a.nvars() != 1 ||
      b.nvars() != 1)
    fail(ErrKind::ContextMismatch, "univ_gcd context");
  return uv_to_poly(dom, uv_gcd_impl(dom, uv_from_poly(a), uv_from_poly(b)));
}

void univ_egcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t) {
  const Domain& dom = a.domain();
  if (!dom.is_field() || !(dom == b.domain()) || a.nvars() != 1 ||
      b.nvars() != 1)
    fail(ErrKind::ContextMismatch, "univ_egcd context");
  UV ug, us, ut;
  uv_egcd_impl(dom, uv_from_poly(a), uv_from_poly(b), ug, us, ut);
  g = uv_to_poly(dom, ug);
  s = uv_to_poly(dom, us);
  t = uv_to_poly(dom, ut);
}

} // namespace psikit
