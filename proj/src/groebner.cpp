#include "psikit/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace psikit {

IdealGens IdealGens::make(Domain d, unsigned nvars, std::vector<Poly> gens) {
  for (auto& g : gens)
    if (!(g.domain() == d) || g.nvars() != nvars)
      fail(ErrKind::ContextMismatch, "generator context mismatch");
  return {d, nvars, std::move(gens)};
}

bool GroebnerBasis::is_unit_ideal() const {
  for (auto& g : gens)
    if (g.is_constant() && !g.is_zero() && c_is_one(g.constant_value()))
      return true;
  return false;
}

namespace {

// Engine-internal polynomials: term vector sorted descending by the engine
// order, so terms.front() is the leading term.
struct EP {
  std::vector<Term> t;
  bool zero() const { return t.empty(); }
  const Term& lt() const { return t.front(); }
};

EP to_ep(const Poly& p, const MonomialOrder& ord) {
  EP e;
  e.t = p.terms();
  std::sort(e.t.begin(), e.t.end(), [&](const Term& a, const Term& b) {
    return ord.cmp(a.mono, b.mono) > 0;
  });
  return e;
}

Poly from_ep(const Domain& d, unsigned nvars, const EP& e) {
  return Poly::from_terms(d, nvars, e.t);
}

// a + c * x^m * b, merged in order.
EP ep_axpy(const Domain& dom, const MonomialOrder& ord, const EP& a,
           const Coeff& c, const Exponents& m, const EP& b) {
  EP r;
  r.t.reserve(a.t.size() + b.t.size());
  std::size_t i = 0, j = 0;
  while (i < a.t.size() || j < b.t.size()) {
    int cmp;
    Exponents bm;
    if (j < b.t.size()) bm = mono_mul(b.t[j].mono, m);
    if (i >= a.t.size())
      cmp = -1;
    else if (j >= b.t.size())
      cmp = 1;
    else
      cmp = ord.cmp(a.t[i].mono, bm);
    if (cmp > 0) {
      r.t.push_back(a.t[i++]);
    } else if (cmp < 0) {
      Coeff nc = c_mul(dom, c, b.t[j].c);
      if (!c_is_zero(nc)) r.t.push_back({bm, nc});
      ++j;
    } else {
      Coeff nc = c_add(dom, a.t[i].c, c_mul(dom, c, b.t[j].c));
      if (!c_is_zero(nc)) r.t.push_back({a.t[i].mono, nc});
      ++i;
      ++j;
    }
  }
  if (r.t.size() > limits().max_terms)
    fail(ErrKind::ResourceLimit, "term count exceeds bound");
  return r;
}

// Scale so the polynomial is monic (fields) or has positive leading
// coefficient with content 1 intact (Int keeps integer content: strong basis
// elements are not content-normalized, only sign-normalized).
EP ep_normalize(const Domain& dom, EP e) {
  if (e.zero()) return e;
  if (dom.is_field()) {
    Coeff inv = c_inv(dom, e.lt().c);
    for (auto& t : e.t) t.c = c_mul(dom, t.c, inv);
  } else if (e.lt().c < 0) {
    for (auto& t : e.t) t.c = -t.c;
  }
  return e;
}

struct Reducer {
  const Domain& dom;
  const MonomialOrder& ord;
  const std::vector<EP>& basis;

  // Index of the basis element used to reduce a term (c, m), or -1.
  // Fields: first basis element whose lm divides m.  Int: among elements
  // whose lm divides m, the one with the smallest positive leading
  // coefficient; reducible only when floor(c / lc) != 0.
  int pick(const Coeff& c, const Exponents& m, mpz_class& q_out) const {
    if (dom.is_field()) {
      for (std::size_t k = 0; k < basis.size(); ++k)
        if (mono_divides(basis[k].lt().mono, m)) {
          q_out = 0;
          return int(k);
        }
      return -1;
    }
    int best = -1;
    mpz_class best_lc;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!mono_divides(basis[k].lt().mono, m)) continue;
      mpz_class lc = c_num(basis[k].lt().c);
      if (best < 0 || lc < best_lc) {
        best = int(k);
        best_lc = lc;
      }
    }
    if (best < 0) return -1;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), c_num(c).get_mpz_t(), best_lc.get_mpz_t());
    if (q == 0) return -1;
    q_out = q;
    return best;
  }

  // Full normal form: every surviving term is irreducible.
  EP nf(EP f) const {
    EP done;
    int guard = 0;
    while (!f.zero()) {
      if (++guard > 2000000)
        fail(ErrKind::ResourceLimit, "reduction step bound exceeded");
      const Term lt = f.lt();
      mpz_class q;
      int k = pick(lt.c, lt.mono, q);
      if (k < 0) {
        done.t.push_back(lt);
        f.t.erase(f.t.begin());
        continue;
      }
      const EP& g = basis[std::size_t(k)];
      Exponents shift = mono_div(lt.mono, g.lt().mono);
      Coeff factor = dom.is_field()
                         ? c_neg(dom, c_div(dom, lt.c, g.lt().c))
                         : Coeff(mpz_class(-q));
      f = ep_axpy(dom, ord, f, factor, shift, g);
    }
    return done;
  }
};

struct Pair {
  std::uint64_t deg;
  Exponents lcm;
  unsigned i, j;
  char type; // 'S' or 'G'

  bool operator<(const Pair& o) const {
    if (deg != o.deg) return deg < o.deg;
    if (lcm != o.lcm) return lcm < o.lcm;
    if (i != o.i) return i < o.i;
    if (j != o.j) return j < o.j;
    return type < o.type;
  }
};

void push_pairs(const Domain& dom, std::set<Pair>& pairs,
                const std::vector<EP>& basis, unsigned j) {
  for (unsigned i = 0; i < j; ++i) {
    Exponents l = mono_lcm(basis[i].lt().mono, basis[j].lt().mono);
    std::uint64_t d = total_degree(l);
    pairs.insert({d, l, i, j, 'S'});
    if (!dom.is_field()) {
      mpz_class a = c_num(basis[i].lt().c), b = c_num(basis[j].lt().c);
      if (!mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) &&
          !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        pairs.insert({d, l, i, j, 'G'});
    }
  }
}

EP make_spoly(const Domain& dom, const MonomialOrder& ord, const EP& f,
              const EP& g) {
  Exponents l = mono_lcm(f.lt().mono, g.lt().mono);
  EP zero;
  if (dom.is_field()) {
    // both monic
    EP a = ep_axpy(dom, ord, zero, Coeff(1), mono_div(l, f.lt().mono), f);
    return ep_axpy(dom, ord, a, Coeff(-1), mono_div(l, g.lt().mono), g);
  }
  mpz_class a = c_num(f.lt().c), b = c_num(g.lt().c);
  mpz_class lc;
  mpz_lcm(lc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  EP s = ep_axpy(dom, ord, zero, Coeff(mpz_class(lc / a)),
                 mono_div(l, f.lt().mono), f);
  return ep_axpy(dom, ord, s, Coeff(mpz_class(-lc / b)),
                 mono_div(l, g.lt().mono), g);
}

EP make_gpoly(const Domain& dom, const MonomialOrder& ord, const EP& f,
              const EP& g) {
  Exponents l = mono_lcm(f.lt().mono, g.lt().mono);
  mpz_class a = c_num(f.lt().c), b = c_num(g.lt().c);
  mpz_class d, s, t;
  mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  EP zero;
  EP r = ep_axpy(dom, ord, zero, Coeff(s), mono_div(l, f.lt().mono), f);
  return ep_axpy(dom, ord, r, Coeff(t), mono_div(l, g.lt().mono), g);
}

std::vector<EP> autoreduce(const Domain& dom, const MonomialOrder& ord,
                           std::vector<EP> basis) {
  bool changed = true;
  int guard = 0;
  while (changed) {
    if (++guard > 10000)
      fail(ErrKind::ResourceLimit, "autoreduction bound exceeded");
    changed = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<EP> others;
      others.reserve(basis.size() - 1);
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != k) others.push_back(basis[j]);
      Reducer red{dom, ord, others};
      EP h = ep_normalize(dom, red.nf(basis[k]));
      if (h.t != basis[k].t) {
        changed = true;
        if (h.zero()) {
          basis.erase(basis.begin() + long(k));
          --k;
        } else {
          basis[k] = h;
        }
      }
    }
  }
  std::sort(basis.begin(), basis.end(), [&](const EP& a, const EP& b) {
    int c = ord.cmp(a.lt().mono, b.lt().mono);
    if (c != 0) return c < 0;
    return c_num(a.lt().c) < c_num(b.lt().c);
  });
  return basis;
}

} // namespace

GroebnerBasis groebner(const IdealGens& I, const MonomialOrder& order) {
  std::vector<EP> basis;
  for (auto& g : I.gens) {
    if (g.is_zero()) continue;
    basis.push_back(ep_normalize(I.dom, to_ep(g, order)));
  }
  std::set<Pair> pairs;
  for (unsigned j = 0; j < basis.size(); ++j)
    push_pairs(I.dom, pairs, basis, j);

  std::size_t processed = 0;
  while (!pairs.empty()) {
    if (++processed > 200000)
      fail(ErrKind::ResourceLimit, "pair bound exceeded in basis computation");
    Pair pr = *pairs.begin();
    pairs.erase(pairs.begin());
    const EP& f = basis[pr.i];
    const EP& g = basis[pr.j];
    if (I.dom.is_field() && pr.type == 'S' &&
        mono_coprime(f.lt().mono, g.lt().mono))
      continue;
    EP h = pr.type == 'S' ? make_spoly(I.dom, order, f, g)
                          : make_gpoly(I.dom, order, f, g);
    Reducer red{I.dom, order, basis};
    h = ep_normalize(I.dom, red.nf(h));
    if (h.zero()) continue;
    if (total_degree(h.lt().mono) > limits().max_degree)
      fail(ErrKind::ResourceLimit, "degree exceeds bound in basis computation");
    basis.push_back(h);
    if (basis.size() > 2000)
      fail(ErrKind::ResourceLimit, "basis size bound exceeded");
    push_pairs(I.dom, pairs, basis, unsigned(basis.size() - 1));
  }

  basis = autoreduce(I.dom, order, basis);
  GroebnerBasis G{I.dom, I.nvars, order, {}};
  for (auto& e : basis) G.gens.push_back(from_ep(I.dom, I.nvars, e));
  return G;
}

Poly normal_form(const Poly& f, const GroebnerBasis& G) {
  if (!(f.domain() == G.dom) || f.nvars() != G.nvars)
    fail(ErrKind::ContextMismatch, "normal form context mismatch");
  std::vector<EP> basis;
  for (auto& g : G.gens) basis.push_back(to_ep(g, G.order));
  Reducer red{G.dom, G.order, basis};
  return from_ep(G.dom, G.nvars, red.nf(to_ep(f, G.order)));
}

bool in_ideal(const Poly& f, const GroebnerBasis& G) {
  return normal_form(f, G).is_zero();
}

bool ideal_equal(const IdealGens& A, const IdealGens& B) {
  GroebnerBasis GA = groebner(A), GB = groebner(B);
  for (auto& g : B.gens)
    if (!in_ideal(g, GA)) return false;
  for (auto& g : A.gens)
    if (!in_ideal(g, GB)) return false;
  return true;
}

IdealGens eliminate(const IdealGens& I, const std::vector<char>& elim_mask) {
  if (elim_mask.size() != I.nvars)
    fail(ErrKind::ContextMismatch, "elimination mask size mismatch");
  GroebnerBasis G = groebner(I, MonomialOrder::block(elim_mask));
  std::vector<unsigned> kept;
  for (unsigned i = 0; i < I.nvars; ++i)
    if (!elim_mask[i]) kept.push_back(i);
  std::vector<unsigned> where(I.nvars, 0);
  for (unsigned k = 0; k < kept.size(); ++k) where[kept[k]] = k;

  IdealGens R{I.dom, unsigned(kept.size()), {}};
  for (auto& g : G.gens) {
    bool pure = true;
    for (auto& t : g.terms())
      for (unsigned i = 0; i < I.nvars && pure; ++i)
        if (elim_mask[i] && t.mono[i] > 0) pure = false;
    if (!pure) continue;
    // project exponents onto the kept variables
    std::vector<Term> terms;
    for (auto& t : g.terms()) {
      Exponents e(kept.size(), 0);
      for (unsigned k = 0; k < kept.size(); ++k) e[k] = t.mono[kept[k]];
      terms.push_back({e, t.c});
    }
    R.gens.push_back(Poly::from_terms(I.dom, unsigned(kept.size()), terms));
  }
  return R;
}

IdealGens saturate(const IdealGens& I, const Poly& f) {
  if (!(f.domain() == I.dom) || f.nvars() != I.nvars)
    fail(ErrKind::ContextMismatch, "saturation context mismatch");
  unsigned n = I.nvars;
  std::vector<unsigned> where;
  for (unsigned i = 0; i < n; ++i) where.push_back(i);
  IdealGens J{I.dom, n + 1, {}};
  for (auto& g : I.gens) J.gens.push_back(g.embed(n + 1, where));
  Poly tf = f.embed(n + 1, where).mul(Poly::variable(I.dom, n + 1, n));
  J.gens.push_back(tf.sub(Poly::constant(I.dom, n + 1, 1)));
  std::vector<char> mask(n + 1, 0);
  mask[n] = 1;
  return eliminate(J, mask);
}

std::optional<std::vector<Exponents>> quotient_basis(const GroebnerBasis& G) {
  if (!G.dom.is_field())
    fail(ErrKind::ContextMismatch, "quotient basis needs field coefficients");
  if (G.is_unit_ideal()) return std::vector<Exponents>{};
  unsigned n = G.nvars;
  std::vector<Exponents> lms;
  for (auto& g : G.gens) {
    // leading monomial under the basis order
    const Term* lt = nullptr;
    for (auto& t : g.terms())
      if (!lt || G.order.cmp(t.mono, lt->mono) > 0) lt = &t;
    lms.push_back(lt->mono);
  }
  // per-variable cap from pure-power leading monomials
  std::vector<std::uint32_t> cap(n, 0);
  std::vector<bool> capped(n, false);
  for (auto& m : lms) {
    int var = -1;
    bool pure = true;
    for (unsigned i = 0; i < n; ++i) {
      if (m[i] == 0) continue;
      if (var >= 0) {
        pure = false;
        break;
      }
      var = int(i);
    }
    if (pure && var >= 0) {
      if (!capped[var] || m[unsigned(var)] < cap[unsigned(var)]) {
        cap[unsigned(var)] = m[unsigned(var)];
        capped[unsigned(var)] = true;
      }
    }
  }
  if (n > 0)
    for (unsigned i = 0; i < n; ++i)
      if (!capped[i]) return std::nullopt;

  std::vector<Exponents> out;
  Exponents cur(n, 0);
  std::uint64_t guard = 1;
  for (unsigned i = 0; i < n; ++i) {
    guard *= cap[i];
    if (guard > limits().classify_enum_bound)
      fail(ErrKind::ResourceLimit, "quotient dimension exceeds bound");
  }
  // enumerate the box under the caps, keep monomials not divisible by any lm
  std::function<void(unsigned)> rec = [&](unsigned i) {
    if (i == n) {
      for (auto& m : lms)
        if (mono_divides(m, cur)) return;
      out.push_back(cur);
      return;
    }
    for (cur[i] = 0; cur[i] < cap[i]; ++cur[i]) rec(i + 1);
    cur[i] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end(), [&](const Exponents& a, const Exponents& b) {
    return G.order.cmp(a, b) < 0;
  });
  return out;
}

std::vector<Coeff> coords_in_basis(const Poly& f, const GroebnerBasis& G,
                                   const std::vector<Exponents>& basis) {
  Poly nf = normal_form(f, G);
  std::map<Exponents, std::size_t> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
  std::vector<Coeff> v(basis.size(), Coeff(0));
  for (auto& t : nf.terms()) {
    auto it = pos.find(t.mono);
    if (it == pos.end())
      fail(ErrKind::Internal, "normal form escapes the standard basis");
    v[it->second] = t.c;
  }
  return v;
}

Poly min_poly(const Poly& v, const GroebnerBasis& G,
              const std::vector<Exponents>& basis) {
  if (!G.dom.is_field())
    fail(ErrKind::ContextMismatch, "min_poly needs field coefficients");
  const Domain& d = G.dom;
  std::size_t D = basis.size();
  if (D == 0) fail(ErrKind::Internal, "min_poly over the zero ring");

  // incremental row reduction; rows remember their expression in powers of v
  struct Row {
    std::vector<Coeff> vec;
    std::vector<Coeff> combo; // coefficients over v^0..v^k
    std::size_t pivot;
  };
  std::vector<Row> rows;
  Poly pw = Poly::constant(d, G.nvars, 1);
  for (std::size_t k = 0; k <= D; ++k) {
    if (k > 0) pw = normal_form(pw.mul(v), G);
    std::vector<Coeff> vec = coords_in_basis(pw, G, basis);
    std::vector<Coeff> combo(k + 1, Coeff(0));
    combo[k] = Coeff(1);
    for (auto& r : rows) {
      if (c_is_zero(vec[r.pivot])) continue;
      Coeff factor = vec[r.pivot];
      for (std::size_t i = 0; i < D; ++i)
        vec[i] = c_sub(d, vec[i], c_mul(d, factor, r.vec[i]));
      for (std::size_t i = 0; i < r.combo.size(); ++i)
        combo[i] = c_sub(d, combo[i], c_mul(d, factor, r.combo[i]));
    }
    bool zero = true;
    std::size_t piv = 0;
    for (std::size_t i = 0; i < D; ++i)
      if (!c_is_zero(vec[i])) {
        zero = false;
        piv = i;
        break;
      }
    if (zero) {
      // combo gives the monic-up-to-scalar dependence; normalize
      Coeff lead = combo[k];
      Poly mp = Poly::zero(d, 1);
      for (std::size_t i = 0; i <= k; ++i) {
        if (c_is_zero(combo[i])) continue;
        mp = mp.add(Poly::variable(d, 1, 0, std::uint32_t(i))
                        .scale(c_div(d, combo[i], lead)));
      }
      return mp;
    }
    Coeff inv = c_inv(d, vec[piv]);
    for (auto& x : vec) x = c_mul(d, x, inv);
    for (auto& x : combo) x = c_mul(d, x, inv);
    rows.push_back({std::move(vec), std::move(combo), piv});
  }
  fail(ErrKind::Internal, "no linear dependence among residue powers");
}

} // namespace psikit
