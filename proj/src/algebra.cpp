#include "psikit/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "psikit/error.hpp"

namespace psikit {

namespace {

// identity embedding of an n-var poly into a wider context at `offset`
Poly widen(const Poly& f, unsigned target_nvars, unsigned offset) {
  std::vector<unsigned> where(f.nvars());
  for (unsigned i = 0; i < f.nvars(); ++i) where[i] = offset + i;
  return f.embed(target_nvars, where);
}

std::string fresh_name(const std::vector<std::string>& taken,
                       const std::string& stem) {
  auto used = [&](const std::string& s) {
    return std::find(taken.begin(), taken.end(), s) != taken.end();
  };
  if (!used(stem)) return stem;
  for (unsigned k = 1;; ++k) {
    std::string cand = stem + std::to_string(k);
    if (!used(cand)) return cand;
  }
}

// coefficient map for a legal base change
std::function<Coeff(const Coeff&)> coeff_map(const Domain& dst) {
  return [dst](const Coeff& c) { return c_norm(dst, c); };
}

Coeff constant_term(const Poly& f) {
  for (auto& t : f.terms())
    if (total_degree(t.mono) == 0) return t.c;
  return Coeff(0);
}

Poly push_through(const Poly& f, const std::vector<Poly>& images,
                  const FpAlgebra& target) {
  Poly v = f.substitute(images, target.base, target.nvars(),
                        coeff_map(target.base));
  return target.reduce(v);
}

}  // namespace

bool FpAlgebra::same_presentation(const FpAlgebra& o) const {
  if (!(base == o.base) || gens != o.gens) return false;
  if (relations.gens.size() != o.relations.gens.size()) return false;
  for (size_t i = 0; i < relations.gens.size(); ++i)
    if (!relations.gens[i].equals(o.relations.gens[i])) return false;
  return true;
}

Poly FpAlgebra::reduce(const Poly& f) const { return normal_form(f, gb); }

std::string FpAlgebra::describe() const {
  std::ostringstream os;
  os << base.str();
  if (!gens.empty()) {
    os << "[";
    for (size_t i = 0; i < gens.size(); ++i)
      os << (i ? "," : "") << gens[i];
    os << "]";
  }
  if (!relations.gens.empty()) {
    os << "/(";
    for (size_t i = 0; i < relations.gens.size(); ++i)
      os << (i ? ", " : "") << relations.gens[i].str(gens);
    os << ")";
  }
  return os.str();
}

FpAlgebra make_algebra(const Domain& base, std::vector<std::string> gens,
                       std::vector<Poly> relations) {
  if (gens.size() > limits().max_vars)
    fail(ErrKind::ResourceLimit, "too many generators: " +
                                     std::to_string(gens.size()) + " > " +
                                     std::to_string(limits().max_vars));
  std::set<std::string> seen;
  for (auto& g : gens) {
    if (g.empty()) fail(ErrKind::DuplicateName, "empty generator name");
    if (!seen.insert(g).second)
      fail(ErrKind::DuplicateName, "generator name repeated: " + g);
  }
  unsigned n = static_cast<unsigned>(gens.size());
  for (auto& r : relations) {
    if (!(r.domain() == base))
      fail(ErrKind::MalformedRelation,
           "relation coefficients live in " + r.domain().str() + ", not " +
               base.str());
    if (r.nvars() != n)
      fail(ErrKind::MalformedRelation,
           "relation mentions " + std::to_string(r.nvars()) +
               " variables in a " + std::to_string(n) + " generator algebra");
  }
  FpAlgebra A;
  A.base = base;
  A.gens = std::move(gens);
  A.relations = IdealGens::make(base, n, std::move(relations));
  A.gb = groebner(A.relations);
  A.zero_ring = A.gb.is_unit_ideal();
  return A;
}

FpAlgebra base_ring(const Domain& base) { return make_algebra(base, {}, {}); }

bool base_compatible(const Domain& src, const Domain& dst) {
  if (src.tag == BaseTag::Int) return true;
  return src == dst;
}

RingMorphism make_morphism(const FpAlgebra& A, const FpAlgebra& B,
                           std::vector<Poly> images) {
  if (!base_compatible(A.base, B.base))
    fail(ErrKind::BaseIncompatible,
         "no coefficient map " + A.base.str() + " -> " + B.base.str());
  if (images.size() != A.gens.size())
    fail(ErrKind::ContextMismatch,
         "expected " + std::to_string(A.gens.size()) + " images, got " +
             std::to_string(images.size()));
  for (auto& im : images) {
    if (!(im.domain() == B.base) || im.nvars() != B.nvars())
      fail(ErrKind::ContextMismatch, "image outside the target context");
    im = B.reduce(im);
  }
  for (auto& r : A.relations.gens) {
    Poly v = r.substitute(images, B.base, B.nvars(), coeff_map(B.base));
    if (!B.reduce(v).is_zero())
      fail(ErrKind::RelationNotPreserved,
           "relation " + r.str(A.gens) + " does not map into the target ideal");
  }
  return RingMorphism{A, B, std::move(images)};
}

RingMorphism identity_morphism(const FpAlgebra& A) {
  std::vector<Poly> images;
  for (unsigned i = 0; i < A.nvars(); ++i)
    images.push_back(Poly::variable(A.base, A.nvars(), i));
  return make_morphism(A, A, std::move(images));
}

Poly apply(const RingMorphism& u, const Poly& f) {
  if (!(f.domain() == u.source.base) || f.nvars() != u.source.nvars())
    fail(ErrKind::ContextMismatch, "element outside the source context");
  return push_through(f, u.images, u.target);
}

RingMorphism compose(const RingMorphism& u, const RingMorphism& v) {
  if (!u.target.same_presentation(v.source))
    fail(ErrKind::ContextMismatch,
         "middle presentations differ: " + u.target.describe() + " vs " +
             v.source.describe());
  std::vector<Poly> images;
  images.reserve(u.images.size());
  for (auto& im : u.images) images.push_back(apply(v, im));
  return make_morphism(u.source, v.target, std::move(images));
}

bool ideal_is_proper(const IdealSpec& I) {
  std::vector<Poly> gens = I.ambient.relations.gens;
  for (auto& g : I.gens) gens.push_back(g);
  auto G = groebner(IdealGens::make(I.ambient.base, I.ambient.nvars(),
                                    std::move(gens)));
  return !G.is_unit_ideal();
}

RingMorphism quotient_construction(const RingMorphism& u, const IdealSpec& I,
                                   const IdealSpec& J) {
  if (!I.ambient.same_presentation(u.source))
    fail(ErrKind::ContextMismatch, "I does not live in the source");
  if (!J.ambient.same_presentation(u.target))
    fail(ErrKind::ContextMismatch, "J does not live in the target");
  std::vector<Poly> target_rels = u.target.relations.gens;
  for (auto& g : J.gens) target_rels.push_back(g);
  FpAlgebra Bq = make_algebra(u.target.base, u.target.gens, target_rels);
  for (auto& g : I.gens) {
    if (!Bq.reduce(apply(u, g)).is_zero())
      fail(ErrKind::ImageNotContained,
           "image of " + g.str(u.source.gens) + " is not in the target ideal");
  }
  std::vector<Poly> source_rels = u.source.relations.gens;
  for (auto& g : I.gens) source_rels.push_back(g);
  FpAlgebra Aq = make_algebra(u.source.base, u.source.gens, source_rels);
  return make_morphism(Aq, Bq, u.images);
}

std::pair<FpAlgebra, RingMorphism> localize_ring(const FpAlgebra& A,
                                                 const Poly& s) {
  if (!(s.domain() == A.base) || s.nvars() != A.nvars())
    fail(ErrKind::ContextMismatch, "element outside the ambient context");
  std::vector<std::string> gens = A.gens;
  gens.push_back(fresh_name(gens, "inv"));
  unsigned n = A.nvars() + 1;
  std::vector<Poly> rels;
  for (auto& r : A.relations.gens) rels.push_back(widen(r, n, 0));
  Poly y = Poly::variable(A.base, n, n - 1);
  rels.push_back(widen(s, n, 0).mul(y).sub(Poly::constant(A.base, n, 1)));
  FpAlgebra As = make_algebra(A.base, gens, rels);
  std::vector<Poly> images;
  for (unsigned i = 0; i < A.nvars(); ++i)
    images.push_back(Poly::variable(A.base, n, i));
  return {As, make_morphism(A, As, std::move(images))};
}

RingMorphism localize_construction(const RingMorphism& u, const Poly& s,
                                   const Poly& t) {
  if (!(t.domain() == u.target.base) || t.nvars() != u.target.nvars())
    fail(ErrKind::ContextMismatch, "t outside the target context");
  auto [As, iA] = localize_ring(u.source, s);
  auto [Bt, iB] = localize_ring(u.target, t);
  unsigned nb = Bt.nvars();
  Poly us = apply(iB, apply(u, s));
  std::vector<Poly> images;
  for (auto& im : u.images) images.push_back(apply(iB, im));
  if (us.equals(Bt.reduce(widen(t, nb, 0)))) {
    // t and u(s) agree in B[1/t]; 1/s maps straight to 1/t
    images.push_back(Poly::variable(Bt.base, nb, nb - 1));
  } else {
    // invert u(s) in B[1/t]: adjoin w with u(s)*w = 1 and eliminate it.
    // u(s) is invertible there iff w reduces to a w-free polynomial.
    unsigned nw = nb + 1;
    std::vector<Poly> rels;
    for (auto& r : Bt.relations.gens) rels.push_back(widen(r, nw, 0));
    Poly w = Poly::variable(Bt.base, nw, nw - 1);
    rels.push_back(widen(us, nw, 0).mul(w).sub(
        Poly::constant(Bt.base, nw, 1)));
    std::vector<char> mask(nw, 0);
    mask[nw - 1] = 1;
    auto G = groebner(IdealGens::make(Bt.base, nw, std::move(rels)),
                      MonomialOrder::block(mask));
    Poly inv = normal_form(w, G);
    bool w_free = true;
    for (auto& term : inv.terms())
      if (term.mono[nw - 1] > 0) w_free = false;
    if (!w_free)
      fail(ErrKind::IncompatibleMultiplicative,
           "u(s) does not divide a power of t in the target");
    std::vector<unsigned> keep(nb);
    for (unsigned i = 0; i < nb; ++i) keep[i] = i;
    Poly packed = Poly::zero(Bt.base, nb);
    for (auto& term : inv.terms()) {
      Exponents e(term.mono.begin(), term.mono.end() - 1);
      packed = packed.add(Poly::from_terms(Bt.base, nb, {{e, term.c}}));
    }
    images.push_back(Bt.reduce(packed));
  }
  try {
    return make_morphism(As, Bt, std::move(images));
  } catch (const Error& e) {
    if (e.kind() == ErrKind::RelationNotPreserved)
      fail(ErrKind::IncompatibleMultiplicative,
           "u(s) is not invertible in the localized target");
    throw;
  }
}

namespace {

// shared by tensor and product: second block of names, renamed to avoid
// clashes with the first block (clashing pairs get suffixes 1 and 2)
void merge_names(std::vector<std::string>& left,
                 std::vector<std::string>& right) {
  std::vector<std::string> all = left;
  all.insert(all.end(), right.begin(), right.end());
  for (size_t j = 0; j < right.size(); ++j) {
    auto hit = std::find(left.begin(), left.end(), right[j]);
    if (hit == left.end()) continue;
    std::string stem = right[j];
    *hit = fresh_name(all, stem + "1");
    all.push_back(*hit);
    right[j] = fresh_name(all, stem + "2");
    all.push_back(right[j]);
  }
}

Domain join_base(const Domain& b, const Domain& c) {
  if (b == c) return b;
  if (b.tag == BaseTag::Int) return c;
  if (c.tag == BaseTag::Int) return b;
  fail(ErrKind::BaseIncompatible,
       "no common coefficient domain for " + b.str() + " and " + c.str());
}

}  // namespace

TensorResult tensor_over(const RingMorphism& f, const RingMorphism& g) {
  if (!f.source.same_presentation(g.source))
    fail(ErrKind::ContextMismatch, "structure maps have different sources");
  const FpAlgebra& B = f.target;
  const FpAlgebra& C = g.target;
  Domain jb = join_base(B.base, C.base);
  std::vector<std::string> bnames = B.gens, cnames = C.gens;
  merge_names(bnames, cnames);
  unsigned nb = B.nvars(), nc = C.nvars(), n = nb + nc;
  std::vector<std::string> names = bnames;
  names.insert(names.end(), cnames.begin(), cnames.end());
  std::vector<Poly> rels;
  for (auto& r : B.relations.gens)
    rels.push_back(widen(r.map_domain(jb), n, 0));
  for (auto& r : C.relations.gens)
    rels.push_back(widen(r.map_domain(jb), n, nb));
  for (size_t j = 0; j < f.images.size(); ++j) {
    Poly lhs = widen(f.images[j].map_domain(jb), n, 0);
    Poly rhs = widen(g.images[j].map_domain(jb), n, nb);
    rels.push_back(lhs.sub(rhs));
  }
  TensorResult res{make_algebra(jb, names, rels), {}, {}, {}};
  std::vector<Poly> bimg, cimg;
  for (unsigned i = 0; i < nb; ++i)
    bimg.push_back(Poly::variable(jb, n, i));
  for (unsigned i = 0; i < nc; ++i)
    cimg.push_back(Poly::variable(jb, n, nb + i));
  res.to_B = make_morphism(B, res.T, bimg);
  res.to_C = make_morphism(C, res.T, cimg);
  bool same_map = B.same_presentation(C) && f.images.size() == g.images.size();
  for (size_t j = 0; same_map && j < f.images.size(); ++j)
    same_map = f.images[j].equals(g.images[j]);
  if (same_map) {
    for (unsigned i = 0; i < nb; ++i) {
      Poly d = res.T.reduce(bimg[i].sub(cimg[i]));
      if (!d.is_zero()) res.mult_kernel.push_back(d);
    }
  }
  return res;
}

ProductResult product_construction(const FpAlgebra& B, const FpAlgebra& C) {
  if (!(B.base == C.base))
    fail(ErrKind::ContextMismatch,
         "product factors live over different bases: " + B.base.str() +
             " vs " + C.base.str());
  const Domain& dom = B.base;
  std::vector<std::string> bnames = B.gens, cnames = C.gens;
  merge_names(bnames, cnames);
  std::vector<std::string> all = bnames;
  all.insert(all.end(), cnames.begin(), cnames.end());
  std::string ename = fresh_name(all, "e");
  std::vector<std::string> names{ename};
  names.insert(names.end(), bnames.begin(), bnames.end());
  names.insert(names.end(), cnames.begin(), cnames.end());
  unsigned nb = B.nvars(), nc = C.nvars(), n = 1 + nb + nc;
  Poly e = Poly::variable(dom, n, 0);
  Poly one = Poly::constant(dom, n, 1);
  std::vector<Poly> rels;
  rels.push_back(e.mul(e).sub(e));
  // a factor relation holds on its component and vanishes on the other,
  // so its constant term is tied to the component's unit (e or 1-e)
  for (auto& r : B.relations.gens) {
    Poly w = widen(r, n, 1);
    Coeff c0 = constant_term(w);
    rels.push_back(w.sub(Poly::constant(dom, n, c0)).add(e.scale(c0)));
  }
  for (auto& r : C.relations.gens) {
    Poly w = widen(r, n, 1 + nb);
    rels.push_back(w.sub(e.scale(constant_term(w))));
  }
  for (unsigned i = 0; i < nb; ++i) {
    Poly b = Poly::variable(dom, n, 1 + i);
    rels.push_back(one.sub(e).mul(b));
  }
  for (unsigned j = 0; j < nc; ++j) {
    Poly c = Poly::variable(dom, n, 1 + nb + j);
    rels.push_back(e.mul(c));
  }
  for (unsigned i = 0; i < nb; ++i)
    for (unsigned j = 0; j < nc; ++j)
      rels.push_back(Poly::variable(dom, n, 1 + i)
                         .mul(Poly::variable(dom, n, 1 + nb + j)));
  ProductResult res{make_algebra(dom, names, rels), e, {}, {}, {}};
  res.e = res.P.reduce(e);
  res.diagonal = make_morphism(base_ring(dom), res.P, {});
  std::vector<Poly> pb, pc;
  pb.push_back(Poly::constant(dom, nb, 1));
  for (unsigned i = 0; i < nb; ++i)
    pb.push_back(Poly::variable(dom, nb, i));
  for (unsigned j = 0; j < nc; ++j) pb.push_back(Poly::zero(dom, nb));
  pc.push_back(Poly::zero(dom, nc));
  for (unsigned i = 0; i < nb; ++i) pc.push_back(Poly::zero(dom, nc));
  for (unsigned j = 0; j < nc; ++j)
    pc.push_back(Poly::variable(dom, nc, j));
  res.proj_B = make_morphism(res.P, B, pb);
  res.proj_C = make_morphism(res.P, C, pc);
  return res;
}

IdealizationResult idealization(const FpAlgebra& A,
                                const ModulePresentation& M) {
  if (!M.over.same_presentation(A))
    fail(ErrKind::ContextMismatch, "module is not presented over this ring");
  for (auto& row : M.relations)
    if (row.size() != M.mgens.size())
      fail(ErrKind::ContextMismatch,
           "module relation row does not match the generator count");
  unsigned na = A.nvars(), nm = static_cast<unsigned>(M.mgens.size());
  unsigned n = na + nm;
  std::vector<std::string> names = A.gens;
  names.insert(names.end(), M.mgens.begin(), M.mgens.end());
  std::vector<Poly> rels;
  for (auto& r : A.relations.gens) rels.push_back(widen(r, n, 0));
  for (auto& row : M.relations) {
    Poly acc = Poly::zero(A.base, n);
    for (unsigned k = 0; k < nm; ++k) {
      if (!(row[k].domain() == A.base) || row[k].nvars() != na)
        fail(ErrKind::ContextMismatch,
             "module relation coefficient outside the base ring context");
      acc = acc.add(
          widen(row[k], n, 0).mul(Poly::variable(A.base, n, na + k)));
    }
    rels.push_back(acc);
  }
  for (unsigned k = 0; k < nm; ++k)
    for (unsigned l = k; l < nm; ++l)
      rels.push_back(Poly::variable(A.base, n, na + k)
                         .mul(Poly::variable(A.base, n, na + l)));
  IdealizationResult res{make_algebra(A.base, names, rels), {}};
  std::vector<Poly> images;
  for (unsigned i = 0; i < na; ++i)
    images.push_back(Poly::variable(A.base, n, i));
  res.canonical = make_morphism(A, res.R, std::move(images));
  return res;
}

RingMorphism polynomial_extension(const RingMorphism& u) {
  std::vector<std::string> taken = u.source.gens;
  taken.insert(taken.end(), u.target.gens.begin(), u.target.gens.end());
  std::string X = fresh_name(taken, "X");
  auto extend = [&X](const FpAlgebra& A) {
    std::vector<std::string> names = A.gens;
    names.push_back(X);
    std::vector<Poly> rels;
    for (auto& r : A.relations.gens)
      rels.push_back(widen(r, A.nvars() + 1, 0));
    return make_algebra(A.base, names, rels);
  };
  FpAlgebra Ax = extend(u.source), Bx = extend(u.target);
  unsigned nb = Bx.nvars();
  std::vector<Poly> images;
  for (auto& im : u.images) images.push_back(widen(im, nb, 0));
  images.push_back(Poly::variable(Bx.base, nb, nb - 1));
  return make_morphism(Ax, Bx, std::move(images));
}

IdealSpec contract_ideal(const RingMorphism& u, const IdealSpec& J) {
  if (!J.ambient.same_presentation(u.target))
    fail(ErrKind::ContextMismatch, "J does not live in the target");
  if (!ideal_is_proper(J))
    fail(ErrKind::ImproperIdeal, "cannot contract the unit ideal");
  const FpAlgebra& A = u.source;
  const FpAlgebra& B = u.target;
  unsigned nb = B.nvars(), na = A.nvars(), n = nb + na;
  bool to_int = A.base.tag == BaseTag::Int && !(B.base.tag == BaseTag::Int);
  // cross-base contractions run over Int: ModP targets add p as a relation,
  // Rat targets clear denominators and saturate afterwards
  Domain work = to_int ? Domain::integers() : B.base;
  auto lift = [&](Poly v) {
    if (to_int && B.base.tag == BaseTag::Rat) {
      mpz_class den = 1;
      for (auto& t : v.terms())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den().get_mpz_t());
      v = v.scale(Coeff(den));
    }
    return v.map_domain(work);
  };
  std::vector<Poly> gens;
  for (auto& r : B.relations.gens) gens.push_back(lift(widen(r, n, 0)));
  for (auto& g : J.gens) gens.push_back(lift(widen(g, n, 0)));
  if (to_int && B.base.tag == BaseTag::ModP)
    gens.push_back(Poly::constant(work, n, Coeff(B.base.p)));
  for (unsigned i = 0; i < na; ++i)
    gens.push_back(lift(Poly::variable(B.base, n, nb + i)
                            .sub(widen(u.images[i], n, 0))));
  std::vector<char> mask(n, 0);
  for (unsigned i = 0; i < nb; ++i) mask[i] = 1;
  IdealGens E = eliminate(IdealGens::make(work, n, std::move(gens)), mask);
  if (to_int && B.base.tag == BaseTag::Rat) {
    // recover the full rational contraction: saturate by the product of
    // the primes in the leading coefficients of its strong basis
    auto G = groebner(E);
    std::set<mpz_class> ps;
    for (auto& g : G.gens)
      if (!g.is_zero())
        for (auto& p : prime_factors(c_num(g.terms().front().c)))
          ps.insert(p);
    mpz_class d = 1;
    for (auto& p : ps) d *= p;
    if (d > 1)
      E = saturate(E, Poly::constant(work, na, Coeff(d)));
  }
  return IdealSpec{A, E.gens};
}

}  // namespace psikit
