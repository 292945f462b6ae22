#include "psikit/finring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "psikit/error.hpp"

namespace psikit {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t m) {
  std::int64_t q = a / m, r = a % m;
  return (r < 0) ? q - 1 : q; // m > 0 throughout
}

// Reduce a coordinate vector to the canonical ranges.  Position i holds the
// coefficient of basis[i]; subtracting q * (the ideal element with leading
// term m_i * mu_i) only disturbs strictly smaller monomials, i.e. later
// positions.  Returns false on int64 overflow.
bool fix_i64(const FiniteRing& R, std::vector<std::int64_t>& c) {
  const std::size_t k = c.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::int64_t q = floor_div(c[i], R.moduli[i]);
    if (q == 0) continue;
    c[i] -= q * R.moduli[i];
    const auto& cr = R.carry[i];
    for (std::size_t j = i + 1; j < k; ++j) {
      if (cr[j] == 0) continue;
      std::int64_t t;
      if (__builtin_mul_overflow(q, cr[j], &t)) return false;
      if (__builtin_add_overflow(c[j], t, &c[j])) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> fix_exact(const FiniteRing& R,
                                    std::vector<mpz_class> c) {
  const std::size_t k = c.size();
  for (std::size_t i = 0; i < k; ++i) {
    mpz_class m = R.moduli[i], q;
    mpz_fdiv_q(q.get_mpz_t(), c[i].get_mpz_t(), m.get_mpz_t());
    if (q == 0) continue;
    c[i] -= q * m;
    for (std::size_t j = i + 1; j < k; ++j)
      if (R.carry[i][j] != 0) c[j] += q * R.carry[i][j];
  }
  std::vector<std::int64_t> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = c[i].get_si();
  return out;
}

} // namespace

std::uint64_t FiniteRing::zero() const { return table_backed ? tzero : 0; }

std::uint64_t FiniteRing::one() const {
  if (table_backed) return tone;
  if (basis.empty()) return 0; // zero ring
  std::vector<std::int64_t> c(basis.size(), 0);
  c.back() = 1; // the constant monomial is the smallest, hence last
  return index(c);
}

std::vector<std::int64_t> FiniteRing::coords(std::uint64_t idx) const {
  std::vector<std::int64_t> c(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    c[i] = std::int64_t(idx % std::uint64_t(moduli[i]));
    idx /= std::uint64_t(moduli[i]);
  }
  return c;
}

std::uint64_t FiniteRing::index(const std::vector<std::int64_t>& c) const {
  std::uint64_t idx = 0;
  for (std::size_t i = basis.size(); i-- > 0;)
    idx = idx * std::uint64_t(moduli[i]) + std::uint64_t(c[i]);
  return idx;
}

std::uint64_t FiniteRing::add(std::uint64_t a, std::uint64_t b) const {
  if (table_backed) return tadd[a * n + b];
  auto ca = coords(a), cb = coords(b);
  for (std::size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
  if (!fix_i64(*this, ca)) {
    std::vector<mpz_class> e(ca.size());
    auto xa = coords(a), xb = coords(b);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = xa[i] + xb[i];
    ca = fix_exact(*this, std::move(e));
  }
  return index(ca);
}

std::uint64_t FiniteRing::neg(std::uint64_t a) const {
  if (table_backed) {
    for (std::uint64_t b = 0; b < n; ++b)
      if (tadd[a * n + b] == tzero) return b;
    fail(ErrKind::Internal, "missing additive inverse");
  }
  auto c = coords(a);
  for (auto& x : c) x = -x;
  if (!fix_i64(*this, c)) {
    std::vector<mpz_class> e(c.size());
    auto xa = coords(a);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = -xa[i];
    c = fix_exact(*this, std::move(e));
  }
  return index(c);
}

std::uint64_t FiniteRing::sub(std::uint64_t a, std::uint64_t b) const {
  return add(a, neg(b));
}

std::uint64_t FiniteRing::mul(std::uint64_t a, std::uint64_t b) const {
  if (table_backed) return tmul[a * n + b];
  const std::size_t k = basis.size();
  auto ca = coords(a), cb = coords(b);
  std::vector<std::int64_t> acc(k, 0);
  bool ok = true;
  for (std::size_t i = 0; ok && i < k; ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; ok && j < k; ++j) {
      if (cb[j] == 0) continue;
      std::int64_t w = ca[i] * cb[j];
      const auto& s = sc[i * k + j];
      for (std::size_t t = 0; t < k; ++t) {
        if (s[t] == 0) continue;
        std::int64_t p;
        if (__builtin_mul_overflow(w, s[t], &p) ||
            __builtin_add_overflow(acc[t], p, &acc[t])) {
          ok = false;
          break;
        }
      }
    }
  }
  if (ok) ok = fix_i64(*this, acc);
  if (!ok) {
    std::vector<mpz_class> e(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (ca[i] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (cb[j] == 0) continue;
        mpz_class w = mpz_class(ca[i]) * cb[j];
        const auto& s = sc[i * k + j];
        for (std::size_t t = 0; t < k; ++t)
          if (s[t] != 0) e[t] += w * s[t];
      }
    }
    acc = fix_exact(*this, std::move(e));
  }
  return index(acc);
}

bool FiniteRing::same_ring(const FiniteRing& o) const {
  return n == o.n && characteristic == o.characteristic &&
         table_backed == o.table_backed && base == o.base && gens == o.gens &&
         basis == o.basis && moduli == o.moduli && carry == o.carry &&
         sc == o.sc && tadd == o.tadd && tmul == o.tmul && tzero == o.tzero &&
         tone == o.tone;
}

std::string FiniteRing::elem_str(std::uint64_t idx) const {
  if (table_backed) return "#" + std::to_string(idx);
  return elem_poly(*this, idx).str(gens);
}

std::string FiniteRing::str() const {
  return std::to_string(n) + "-element ring, char " +
         std::to_string(characteristic);
}

FiniteRing build_finite(const FpAlgebra& A) {
  FiniteRing R;
  R.base = A.base;
  R.gens = A.gens;
  if (A.zero_ring) return R; // one element, characteristic 1

  const unsigned nv = A.nvars();
  const Domain zz = Domain::integers();
  GroebnerBasis G;
  if (A.base.tag == BaseTag::Int) {
    G = A.gb;
  } else if (A.base.tag == BaseTag::ModP) {
    std::vector<Poly> rel;
    for (const auto& g : A.relations.gens) rel.push_back(g.map_domain(zz));
    rel.push_back(Poly::constant(zz, nv, Coeff(A.base.p)));
    G = groebner(IdealGens::make(zz, nv, rel));
  } else {
    fail(ErrKind::TooLarge, "characteristic-zero carrier is infinite");
  }
  if (G.is_unit_ideal()) return R;
  R.gb = G;

  mpz_class m = 0;
  for (const auto& g : G.gens)
    if (g.is_constant()) m = c_num(g.constant_value());
  if (m == 0)
    fail(ErrKind::TooLarge,
         "infinite carrier: no positive integer lies in the relation ideal");
  const std::uint64_t bound = limits().finite_ring_bound;
  if (m > bound) fail(ErrKind::TooLarge, "carrier larger than the bound");
  R.characteristic = std::int64_t(m.get_si());

  // For each generator, the coefficient modulus of x^k is the gcd of the
  // leading coefficients over basis elements whose lm divides x^k.  The
  // carrier is finite iff that modulus reaches 1 for every generator.
  std::vector<std::uint32_t> box(nv, 0);
  for (unsigned v = 0; v < nv; ++v) {
    std::vector<std::pair<std::uint64_t, mpz_class>> pp;
    for (const auto& g : G.gens) {
      const auto& lm = g.terms().front().mono;
      bool pure = true;
      for (unsigned t = 0; t < nv; ++t)
        if (t != v && lm[t] != 0) pure = false;
      if (pure && lm[v] > 0)
        pp.push_back({lm[v], c_num(g.terms().front().c)});
    }
    std::sort(pp.begin(), pp.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    mpz_class g = m;
    bool fin = false;
    for (const auto& [d, lc] : pp) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), lc.get_mpz_t());
      if (g == 1) {
        box[v] = std::uint32_t(d);
        fin = true;
        break;
      }
    }
    if (!fin)
      fail(ErrKind::TooLarge,
           "infinite carrier: generator " + A.gens[v] + " is not integral");
  }

  auto modulus_of = [&](const Exponents& mu) {
    mpz_class g = 0;
    for (const auto& e : G.gens)
      if (mono_divides(e.terms().front().mono, mu))
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(),
                c_num(e.terms().front().c).get_mpz_t());
    return g;
  };

  // Collect the basis monomials: everything with coefficient modulus >= 2.
  // The modulus only shrinks along divisibility, which prunes the walk, and
  // the running size product caps the work at the configured bound.
  std::vector<std::pair<Exponents, std::int64_t>> found;
  std::uint64_t prod = 1;
  Exponents cur(nv, 0);
  std::function<void(unsigned)> walk = [&](unsigned v) {
    if (v == nv) {
      mpz_class md = modulus_of(cur);
      if (md >= 2) {
        std::uint64_t mi = md.get_ui();
        if (prod > bound / mi)
          fail(ErrKind::TooLarge, "carrier larger than the bound");
        prod *= mi;
        found.push_back({cur, std::int64_t(mi)});
      }
      return;
    }
    for (std::uint32_t e = 0; e < box[v]; ++e) {
      cur[v] = e;
      if (modulus_of(cur) == 1) break;
      walk(v + 1);
    }
    cur[v] = 0;
  };
  walk(0);

  std::sort(found.begin(), found.end(), [&](const auto& a, const auto& b) {
    return G.order.cmp(a.first, b.first) > 0;
  });
  const std::size_t k = found.size();
  R.basis.reserve(k);
  R.moduli.reserve(k);
  for (const auto& [mu, md] : found) {
    R.basis.push_back(mu);
    R.moduli.push_back(md);
  }
  R.n = prod;
  if (k == 0 || total_degree(R.basis.back()) != 0)
    fail(ErrKind::Internal, "constant monomial missing from the basis");

  std::map<Exponents, std::size_t> pos;
  for (std::size_t i = 0; i < k; ++i) pos[R.basis[i]] = i;
  auto nf_coords = [&](const Poly& f) {
    Poly r = normal_form(f, G);
    std::vector<std::int64_t> c(k, 0);
    for (const auto& t : r.terms()) {
      auto it = pos.find(t.mono);
      if (it == pos.end())
        fail(ErrKind::Internal, "normal form left the monomial basis");
      c[it->second] = std::int64_t(c_num(t.c).get_si());
    }
    return c;
  };

  R.carry.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    Poly f = Poly::from_terms(zz, nv, {Term{R.basis[i], Coeff(R.moduli[i])}});
    R.carry[i] = nf_coords(f);
    for (std::size_t j = 0; j <= i; ++j)
      if (R.carry[i][j] != 0)
        fail(ErrKind::Internal, "carry reaches a monomial that is not smaller");
  }
  R.sc.resize(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Poly f = Poly::from_terms(
          zz, nv, {Term{mono_mul(R.basis[i], R.basis[j]), Coeff(1)}});
      R.sc[i * k + j] = nf_coords(f);
    }
  return R;
}

FiniteRing build_finite(const RingTable& T) {
  const std::size_t n = T.add.size();
  if (n == 0) fail(ErrKind::NotARing, "empty carrier");
  if (n > limits().finite_ring_bound)
    fail(ErrKind::TooLarge, "carrier larger than the bound");
  if (T.mul.size() != n || T.zero >= n || T.one >= n)
    fail(ErrKind::NotARing, "malformed table shape");
  for (std::size_t i = 0; i < n; ++i) {
    if (T.add[i].size() != n || T.mul[i].size() != n)
      fail(ErrKind::NotARing, "malformed table row");
    for (std::size_t j = 0; j < n; ++j)
      if (T.add[i][j] >= n || T.mul[i][j] >= n)
        fail(ErrKind::NotARing, "table entry out of range");
  }

  FiniteRing R;
  R.table_backed = true;
  R.n = n;
  R.tzero = T.zero;
  R.tone = T.one;
  R.tadd.resize(n * n);
  R.tmul.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      R.tadd[i * n + j] = std::uint16_t(T.add[i][j]);
      R.tmul[i * n + j] = std::uint16_t(T.mul[i][j]);
    }

  auto at = [&](const std::vector<std::uint16_t>& t, std::size_t a,
                std::size_t b) { return t[a * n + b]; };
  auto wit = [](const char* law, std::size_t a, std::size_t b,
                std::size_t c) {
    std::string s = std::string(law) + " fails at (#" + std::to_string(a) +
                    ", #" + std::to_string(b);
    if (c != std::size_t(-1)) s += ", #" + std::to_string(c);
    return s + ")";
  };
  for (std::size_t a = 0; a < n; ++a) {
    if (at(R.tadd, a, T.zero) != a)
      fail(ErrKind::NotARing, wit("additive identity", a, T.zero, -1));
    if (at(R.tmul, a, T.one) != a)
      fail(ErrKind::NotARing, wit("multiplicative identity", a, T.one, -1));
    bool inv = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (at(R.tadd, a, b) == T.zero) inv = true;
      if (at(R.tadd, a, b) != at(R.tadd, b, a))
        fail(ErrKind::NotARing, wit("addition commutativity", a, b, -1));
      if (at(R.tmul, a, b) != at(R.tmul, b, a))
        fail(ErrKind::NotARing, wit("multiplication commutativity", a, b, -1));
    }
    if (!inv)
      fail(ErrKind::NotARing,
           "additive inverse missing for #" + std::to_string(a));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (at(R.tadd, at(R.tadd, a, b), c) != at(R.tadd, a, at(R.tadd, b, c)))
          fail(ErrKind::NotARing, wit("addition associativity", a, b, c));
        if (at(R.tmul, at(R.tmul, a, b), c) != at(R.tmul, a, at(R.tmul, b, c)))
          fail(ErrKind::NotARing, wit("multiplication associativity", a, b, c));
        if (at(R.tmul, a, at(R.tadd, b, c)) !=
            at(R.tadd, at(R.tmul, a, b), at(R.tmul, a, c)))
          fail(ErrKind::NotARing, wit("distributivity", a, b, c));
      }

  std::int64_t ch = 1;
  std::uint64_t x = R.tone;
  while (x != R.tzero) {
    x = at(R.tadd, x, R.tone);
    ++ch;
    if (std::uint64_t(ch) > n)
      fail(ErrKind::NotARing, "1 has no additive order");
  }
  R.characteristic = ch;
  return R;
}

Poly elem_poly(const FiniteRing& R, std::uint64_t idx) {
  if (R.table_backed)
    fail(ErrKind::ContextMismatch,
         "table-backed ring has no residue polynomials");
  const unsigned nv = unsigned(R.gens.size());
  if (R.n == 1) return Poly::zero(R.base, nv);
  auto c = R.coords(idx);
  std::vector<Term> ts;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) ts.push_back(Term{R.basis[i], Coeff(c[i])});
  Poly f = Poly::from_terms(Domain::integers(), nv, std::move(ts));
  return R.base.tag == BaseTag::Int ? f : f.map_domain(R.base);
}

std::uint64_t poly_elem(const FiniteRing& R, const Poly& f) {
  if (R.table_backed)
    fail(ErrKind::ContextMismatch,
         "table-backed ring has no residue polynomials");
  if (!(f.domain() == R.base) || f.nvars() != R.gens.size())
    fail(ErrKind::ContextMismatch, "element context mismatch");
  if (R.n == 1) return 0;
  Poly g =
      R.base.tag == BaseTag::Int ? f : f.map_domain(Domain::integers());
  Poly r = normal_form(g, R.gb);
  std::vector<std::int64_t> c(R.basis.size(), 0);
  for (const auto& t : r.terms()) {
    std::size_t i = 0;
    while (i < R.basis.size() && !(R.basis[i] == t.mono)) ++i;
    if (i == R.basis.size())
      fail(ErrKind::Internal, "normal form left the monomial basis");
    c[i] = std::int64_t(c_num(t.c).get_si());
  }
  return R.index(c);
}

ElemSet ElemSet::empty(std::uint64_t n) {
  ElemSet s;
  s.n = n;
  s.w.assign(std::size_t((n + 63) / 64), 0);
  return s;
}

bool ElemSet::test(std::uint64_t i) const {
  return (w[std::size_t(i >> 6)] >> (i & 63)) & 1;
}

void ElemSet::set(std::uint64_t i) {
  w[std::size_t(i >> 6)] |= std::uint64_t(1) << (i & 63);
}

std::uint64_t ElemSet::count() const {
  std::uint64_t c = 0;
  for (auto x : w) c += std::uint64_t(__builtin_popcountll(x));
  return c;
}

std::vector<std::uint64_t> ElemSet::elems() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < n; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

bool ElemSet::operator<(const ElemSet& o) const {
  if (n != o.n) return n < o.n;
  return w < o.w;
}

ElemSet principal_ideal(const FiniteRing& R, std::uint64_t g) {
  ElemSet s = ElemSet::empty(R.n);
  for (std::uint64_t x = 0; x < R.n; ++x) s.set(R.mul(x, g));
  return s;
}

ElemSet ideal_sum(const FiniteRing& R, const ElemSet& I, const ElemSet& J) {
  ElemSet s = ElemSet::empty(R.n);
  auto ie = I.elems(), je = J.elems();
  for (auto a : ie)
    for (auto b : je) s.set(R.add(a, b));
  return s;
}

ElemSet ideal_generated(const FiniteRing& R,
                        const std::vector<std::uint64_t>& gs) {
  ElemSet s = ElemSet::empty(R.n);
  s.set(R.zero());
  for (auto g : gs) s = ideal_sum(R, s, principal_ideal(R, g));
  return s;
}

std::vector<ElemSet> enumerate_ideals(const FiniteRing& R) {
  std::set<ElemSet> prins;
  for (std::uint64_t g = 0; g < R.n; ++g) prins.insert(principal_ideal(R, g));
  std::set<ElemSet> seen;
  std::vector<ElemSet> queue;
  ElemSet z = ElemSet::empty(R.n);
  z.set(R.zero());
  seen.insert(z);
  queue.push_back(z);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    ElemSet cur = queue[qi];
    for (const auto& p : prins) {
      ElemSet j = ideal_sum(R, cur, p);
      if (seen.insert(j).second) {
        if (seen.size() > limits().classify_enum_bound)
          fail(ErrKind::TooLarge, "ideal lattice too large to enumerate");
        queue.push_back(j);
      }
    }
  }
  std::vector<ElemSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const ElemSet& a, const ElemSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return out;
}

bool is_prime_ideal_finite(const FiniteRing& R, const ElemSet& I) {
  if (I.count() == R.n)
    fail(ErrKind::ImproperIdeal, "prime test needs a proper ideal");
  std::vector<std::uint64_t> outside;
  for (std::uint64_t x = 0; x < R.n; ++x)
    if (!I.test(x)) outside.push_back(x);
  for (std::size_t i = 0; i < outside.size(); ++i)
    for (std::size_t j = i; j < outside.size(); ++j)
      if (I.test(R.mul(outside[i], outside[j]))) return false;
  return true;
}

std::vector<ElemSet> primes_finite(const FiniteRing& R) {
  std::vector<ElemSet> out;
  for (const auto& I : enumerate_ideals(R))
    if (I.count() < R.n && is_prime_ideal_finite(R, I)) out.push_back(I);
  return out;
}

bool is_field_finite(const FiniteRing& R) {
  if (R.n < 2) return false;
  for (std::uint64_t x = 0; x < R.n; ++x) {
    if (x == R.zero()) continue;
    bool inv = false;
    for (std::uint64_t y = 0; y < R.n && !inv; ++y)
      if (R.mul(x, y) == R.one()) inv = true;
    if (!inv) return false;
  }
  return true;
}

QuotientTable quotient_table(const FiniteRing& R, const ElemSet& I) {
  std::vector<std::int64_t> cls(R.n, -1);
  std::vector<std::uint64_t> reps;
  auto ie = I.elems();
  for (std::uint64_t x = 0; x < R.n; ++x) {
    if (cls[x] >= 0) continue;
    for (auto i : ie) cls[R.add(x, i)] = std::int64_t(reps.size());
    if (cls[x] < 0) fail(ErrKind::Internal, "coset misses its base point");
    reps.push_back(x);
  }
  const std::size_t nq = reps.size();
  FiniteRing Q;
  Q.table_backed = true;
  Q.n = nq;
  Q.tadd.resize(nq * nq);
  Q.tmul.resize(nq * nq);
  for (std::size_t a = 0; a < nq; ++a)
    for (std::size_t b = 0; b < nq; ++b) {
      Q.tadd[a * nq + b] = std::uint16_t(cls[R.add(reps[a], reps[b])]);
      Q.tmul[a * nq + b] = std::uint16_t(cls[R.mul(reps[a], reps[b])]);
    }
  Q.tzero = std::uint32_t(cls[R.zero()]);
  Q.tone = std::uint32_t(cls[R.one()]);
  std::int64_t ch = 1;
  std::uint64_t x = Q.tone;
  while (x != Q.tzero) {
    x = Q.tadd[x * nq + Q.tone];
    ++ch;
  }
  Q.characteristic = ch;
  QuotientTable out;
  out.Q = std::move(Q);
  out.cls.resize(R.n);
  for (std::uint64_t i = 0; i < R.n; ++i) out.cls[i] = std::uint64_t(cls[i]);
  return out;
}

FiniteRing finite_product_table(const FiniteRing& B, const FiniteRing& C) {
  const std::uint64_t n = B.n * C.n;
  if (B.n != 0 && n / B.n != C.n)
    fail(ErrKind::TooLarge, "carrier larger than the bound");
  if (n > limits().finite_ring_bound)
    fail(ErrKind::TooLarge, "carrier larger than the bound");
  FiniteRing P;
  P.table_backed = true;
  P.n = n;
  P.tadd.resize(std::size_t(n) * n);
  P.tmul.resize(std::size_t(n) * n);
  for (std::uint64_t b1 = 0; b1 < B.n; ++b1)
    for (std::uint64_t c1 = 0; c1 < C.n; ++c1)
      for (std::uint64_t b2 = 0; b2 < B.n; ++b2)
        for (std::uint64_t c2 = 0; c2 < C.n; ++c2) {
          std::uint64_t x = b1 + B.n * c1, y = b2 + B.n * c2;
          P.tadd[x * n + y] =
              std::uint16_t(B.add(b1, b2) + B.n * C.add(c1, c2));
          P.tmul[x * n + y] =
              std::uint16_t(B.mul(b1, b2) + B.n * C.mul(c1, c2));
        }
  P.tzero = std::uint32_t(B.zero() + B.n * C.zero());
  P.tone = std::uint32_t(B.one() + B.n * C.one());
  P.characteristic = std::lcm(B.characteristic, C.characteristic);
  return P;
}

namespace {

void verify_hom(const FiniteMorphism& m) {
  const FiniteRing& A = m.A;
  const FiniteRing& B = m.B;
  if (m.map.size() != A.n)
    fail(ErrKind::ContextMismatch, "map covers the wrong carrier");
  for (auto v : m.map)
    if (v >= B.n) fail(ErrKind::ContextMismatch, "image index out of range");
  if (m.map[A.one()] != B.one())
    fail(ErrKind::RelationNotPreserved, "u(1) != 1");
  for (std::uint64_t x = 0; x < A.n; ++x)
    for (std::uint64_t y = 0; y <= x; ++y) {
      if (m.map[A.add(x, y)] != B.add(m.map[x], m.map[y]))
        fail(ErrKind::RelationNotPreserved,
             "not additive at (" + A.elem_str(x) + ", " + A.elem_str(y) + ")");
      if (m.map[A.mul(x, y)] != B.mul(m.map[x], m.map[y]))
        fail(ErrKind::RelationNotPreserved,
             "not multiplicative at (" + A.elem_str(x) + ", " +
                 A.elem_str(y) + ")");
    }
}

} // namespace

FiniteMorphism build_finite_morphism(
    const FiniteRing& A, const FiniteRing& B,
    const std::vector<std::uint64_t>& gen_images) {
  if (A.table_backed)
    fail(ErrKind::ContextMismatch, "table-backed source needs an explicit map");
  if (gen_images.size() != A.gens.size())
    fail(ErrKind::ContextMismatch, "one image per source generator required");
  for (auto g : gen_images)
    if (g >= B.n) fail(ErrKind::ContextMismatch, "image index out of range");

  const std::size_t k = A.basis.size();
  std::vector<std::uint64_t> bimg(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t r = B.one();
    for (std::size_t v = 0; v < A.gens.size(); ++v)
      for (std::uint32_t e = 0; e < A.basis[i][v]; ++e)
        r = B.mul(r, gen_images[v]);
    bimg[i] = r;
  }
  auto scal = [&](std::uint64_t x, std::int64_t c) {
    std::uint64_t r = B.zero(), p = x;
    while (c > 0) {
      if (c & 1) r = B.add(r, p);
      p = B.add(p, p);
      c >>= 1;
    }
    return r;
  };
  FiniteMorphism m;
  m.A = A;
  m.B = B;
  m.map.resize(A.n);
  for (std::uint64_t idx = 0; idx < A.n; ++idx) {
    auto c = A.coords(idx);
    std::uint64_t acc = B.zero();
    for (std::size_t i = 0; i < k; ++i)
      if (c[i] != 0) acc = B.add(acc, scal(bimg[i], c[i]));
    m.map[idx] = acc;
  }
  verify_hom(m);
  return m;
}

FiniteMorphism finite_morphism_from_map(const FiniteRing& A,
                                        const FiniteRing& B,
                                        std::vector<std::uint64_t> map) {
  FiniteMorphism m;
  m.A = A;
  m.B = B;
  m.map = std::move(map);
  verify_hom(m);
  return m;
}

FiniteMorphism build_finite_morphism(const RingMorphism& u) {
  FiniteRing FA = build_finite(u.source);
  FiniteRing FB = build_finite(u.target);
  std::vector<std::uint64_t> gi;
  gi.reserve(u.images.size());
  for (const auto& im : u.images) gi.push_back(poly_elem(FB, im));
  return build_finite_morphism(FA, FB, gi);
}

FiniteMorphism compose_finite(const FiniteMorphism& u,
                              const FiniteMorphism& v) {
  if (!u.B.same_ring(v.A))
    fail(ErrKind::ContextMismatch, "composition needs a matching middle ring");
  std::vector<std::uint64_t> map(u.A.n);
  for (std::uint64_t a = 0; a < u.A.n; ++a) map[a] = v.map[u.map[a]];
  return finite_morphism_from_map(u.A, v.B, std::move(map));
}

ElemSet contract_finite(const FiniteMorphism& u, const ElemSet& I) {
  ElemSet s = ElemSet::empty(u.A.n);
  for (std::uint64_t a = 0; a < u.A.n; ++a)
    if (I.test(u.map[a])) s.set(a);
  return s;
}

std::vector<ElemSet> a_primes_finite(const FiniteMorphism& u) {
  std::vector<std::uint64_t> img = u.map;
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  std::vector<ElemSet> out;
  for (const auto& I : enumerate_ideals(u.B)) {
    if (I.count() == u.B.n) continue;
    bool aprime = true;
    for (auto ua : img) {
      if (I.test(ua)) continue;
      for (std::uint64_t b = 0; b < u.B.n && aprime; ++b)
        if (!I.test(b) && I.test(u.B.mul(ua, b))) aprime = false;
      if (!aprime) break;
    }
    if (aprime) out.push_back(I);
  }
  return out;
}

BruteStatus bruteforce_status(const FiniteMorphism& u) {
  BruteStatus st;
  auto aps = a_primes_finite(u);
  st.psi = true;
  for (const auto& I : aps)
    if (!is_prime_ideal_finite(u.B, I)) {
      st.psi = false;
      break;
    }
  if (!st.psi) return st;

  // With psi settled the A-primes are exactly the primes of the target.
  st.strong = true;
  for (const auto& Q : aps) {
    ElemSet P = contract_finite(u, Q);
    std::uint64_t ra = u.A.n / P.count();
    std::uint64_t rb = u.B.n / Q.count();
    if (ra != rb) {
      st.strong = false;
      break;
    }
    std::vector<std::int64_t> rep(u.B.n, -1);
    auto qe = Q.elems();
    std::int64_t classes = 0;
    for (std::uint64_t b = 0; b < u.B.n; ++b) {
      if (rep[b] >= 0) continue;
      for (auto q : qe) rep[u.B.add(b, q)] = classes;
      ++classes;
    }
    std::vector<char> hit(std::size_t(classes), 0);
    std::uint64_t hits = 0;
    for (std::uint64_t a = 0; a < u.A.n; ++a) {
      auto c = std::size_t(rep[u.map[a]]);
      if (!hit[c]) {
        hit[c] = 1;
        ++hits;
      }
    }
    if (hits != rb) {
      st.strong = false;
      break;
    }
  }
  return st;
}

namespace {

Poly upoly(std::vector<std::pair<std::uint32_t, std::int64_t>> tm) {
  std::vector<Term> ts;
  for (auto& [e, c] : tm) ts.push_back(Term{Exponents{e}, Coeff(c)});
  return Poly::from_terms(Domain::integers(), 1, std::move(ts));
}

struct CatEntry {
  std::uint64_t size;
  FpAlgebra (*make)();
};

const std::vector<CatEntry>& catalog() {
  static const std::vector<CatEntry> cat = {
      {2,
       [] {
         return make_algebra(Domain::integers(), {},
                             {Poly::constant(Domain::integers(), 0, Coeff(2))});
       }},
      {3,
       [] {
         return make_algebra(Domain::integers(), {},
                             {Poly::constant(Domain::integers(), 0, Coeff(3))});
       }},
      {4,
       [] {
         return make_algebra(Domain::integers(), {},
                             {Poly::constant(Domain::integers(), 0, Coeff(4))});
       }},
      {5,
       [] {
         return make_algebra(Domain::integers(), {},
                             {Poly::constant(Domain::integers(), 0, Coeff(5))});
       }},
      {8,
       [] {
         return make_algebra(Domain::integers(), {},
                             {Poly::constant(Domain::integers(), 0, Coeff(8))});
       }},
      {9,
       [] {
         return make_algebra(Domain::integers(), {},
                             {Poly::constant(Domain::integers(), 0, Coeff(9))});
       }},
      {4, // F4
       [] {
         return make_algebra(Domain::integers(), {"x"},
                             {upoly({{0, 2}}), upoly({{2, 1}, {1, 1}, {0, 1}})});
       }},
      {9, // F9
       [] {
         return make_algebra(Domain::integers(), {"x"},
                             {upoly({{0, 3}}), upoly({{2, 1}, {0, 1}})});
       }},
      {4, // F2[x]/(x^2)
       [] {
         return make_algebra(Domain::integers(), {"x"},
                             {upoly({{0, 2}}), upoly({{2, 1}})});
       }},
      {9, // F3[x]/(x^2)
       [] {
         return make_algebra(Domain::integers(), {"x"},
                             {upoly({{0, 3}}), upoly({{2, 1}})});
       }},
      {4, // F2 x F2
       [] {
         return make_algebra(Domain::integers(), {"x"},
                             {upoly({{0, 2}}), upoly({{2, 1}, {1, 1}})});
       }},
  };
  return cat;
}

} // namespace

FiniteMorphism random_instance(std::uint64_t seed, std::uint64_t size_bound) {
  if (size_bound > limits().finite_ring_bound)
    fail(ErrKind::TooLarge, "size bound above the finite-ring limit");
  std::mt19937_64 rng(seed);
  auto pick = [&](std::uint64_t mod) { return rng() % mod; };

  const auto& cat = catalog();
  std::vector<std::size_t> ok;
  for (std::size_t i = 0; i < cat.size(); ++i)
    if (cat[i].size <= size_bound) ok.push_back(i);
  if (ok.empty()) fail(ErrKind::TooLarge, "no finite ring fits the bound");

  for (int attempt = 0; attempt < 200; ++attempt) {
    const CatEntry& sa = cat[ok[pick(ok.size())]];
    FpAlgebra A = sa.make();
    bool prod = ok.size() > 1 && pick(2) == 1;
    const CatEntry& t1 = cat[ok[pick(ok.size())]];
    FpAlgebra B;
    if (prod) {
      const CatEntry& t2 = cat[ok[pick(ok.size())]];
      if (t1.size * t2.size > size_bound) continue;
      FpAlgebra B1 = t1.make(), B2 = t2.make();
      B = product_construction(B1, B2).P;
    } else {
      B = t1.make();
    }
    FiniteRing FA = build_finite(A);
    FiniteRing FB = build_finite(B);
    const unsigned tries = FA.gens.empty() ? 1 : 40;
    for (unsigned t = 0; t < tries; ++t) {
      std::vector<std::uint64_t> gi;
      for (std::size_t v = 0; v < FA.gens.size(); ++v) gi.push_back(pick(FB.n));
      try {
        return build_finite_morphism(FA, FB, gi);
      } catch (const Error&) {
      }
    }
  }
  // deterministic fallback: identity on the smallest catalog entry
  FiniteRing FA = build_finite(cat[ok[0]].make());
  std::vector<std::uint64_t> id(FA.n);
  std::iota(id.begin(), id.end(), 0);
  return finite_morphism_from_map(FA, FA, std::move(id));
}

} // namespace psikit
