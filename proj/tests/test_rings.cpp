#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psikit/algebra.hpp"
#include "t_util.hpp"

using namespace psikit;
using namespace tu;

#define CHECK_KIND(expr, K)                            \
  do {                                                 \
    bool hit_ = false;                                 \
    try {                                              \
      (void)(expr);                                    \
    } catch (const Error& e_) {                        \
      hit_ = e_.kind() == ErrKind::K;                  \
      if (!hit_) MESSAGE(e_.what());                   \
    }                                                  \
    CHECK(hit_);                                       \
  } while (0)

namespace {

const Domain Z = Domain::integers();
const Domain Q = Domain::rationals();

FpAlgebra gauss_int() {
  return make_algebra(Z, {"i"}, {X(Z, 1, 0, 2) + C(Z, 1, 1)});
}

FpAlgebra sqrt17_ring() {  // Z[x]/(x^2 - 17)
  return make_algebra(Z, {"x"}, {X(Z, 1, 0, 2) - C(Z, 1, 17)});
}

FpAlgebra half_ring() {  // Z[w]/(w^2 - w - 4), w = (1+sqrt17)/2
  return make_algebra(Z, {"w"},
                      {X(Z, 1, 0, 2) - X(Z, 1, 0) - C(Z, 1, 4)});
}

}  // namespace

TEST_CASE("make_algebra: validation and the unit ring flag") {
  FpAlgebra A = sqrt17_ring();
  CHECK(A.nvars() == 1);
  CHECK(!A.zero_ring);
  CHECK(A.describe() == "ZZ[x]/(x^2 - 17)");

  FpAlgebra H = half_ring();
  CHECK(H.relations.gens[0].str(H.gens) == "w^2 - w - 4");

  FpAlgebra QQ = make_algebra(Q, {}, {});
  CHECK(QQ.nvars() == 0);
  CHECK(QQ.base == Q);
  CHECK(!QQ.zero_ring);

  CHECK(make_algebra(Z, {}, {C(Z, 0, 1)}).zero_ring);
  CHECK(make_algebra(Z, {"x"}, {X(Z, 1, 0), X(Z, 1, 0) - C(Z, 1, 1)})
            .zero_ring);

  CHECK_KIND(make_algebra(Z, {"a", "a"}, {}), DuplicateName);
  // wrong variable count and wrong coefficient domain
  CHECK_KIND(make_algebra(Z, {"a"}, {X(Z, 2, 1)}), MalformedRelation);
  CHECK_KIND(make_algebra(Z, {"a"}, {X(Q, 1, 0)}), MalformedRelation);
  CHECK_KIND(
      make_algebra(Z, {"a", "b", "c", "d", "e", "f", "g", "h", "i"}, {}),
      ResourceLimit);
}

TEST_CASE("make_morphism: relation checking and base compatibility") {
  // x |-> 2w - 1 carries x^2 - 17 into 4(w^2 - w - 4)
  FpAlgebra A = sqrt17_ring(), H = half_ring();
  RingMorphism u =
      make_morphism(A, H, {C(Z, 1, 2) * X(Z, 1, 0) - C(Z, 1, 1)});
  CHECK(u.images[0].str(H.gens) == "2*w - 1");

  RingMorphism st = make_morphism(base_ring(Z), gauss_int(), {});
  CHECK(st.images.empty());

  FpAlgebra Nil = make_algebra(Z, {"x"}, {X(Z, 1, 0, 2)});
  CHECK_KIND(make_morphism(Nil, base_ring(Z), {C(Z, 0, 1)}),
             RelationNotPreserved);
  CHECK_KIND(make_morphism(base_ring(Q), base_ring(Z), {}),
             BaseIncompatible);
  CHECK_KIND(make_morphism(base_ring(Domain::modp(2)),
                           base_ring(Domain::modp(3)), {}),
             BaseIncompatible);
  CHECK_KIND(make_morphism(gauss_int(), gauss_int(), {}), ContextMismatch);
  // Int source reaches Rat and ModP targets
  make_morphism(base_ring(Z), base_ring(Q), {});
  make_morphism(base_ring(Z), base_ring(Domain::modp(7)), {});
}

TEST_CASE("compose: identity, structure maps, substitution") {
  FpAlgebra A = sqrt17_ring(), H = half_ring();
  RingMorphism u =
      make_morphism(A, H, {C(Z, 1, 2) * X(Z, 1, 0) - C(Z, 1, 1)});
  RingMorphism idu = compose(identity_morphism(A), u);
  CHECK(idu.images[0].equals(u.images[0]));
  CHECK(idu.source.same_presentation(A));

  FpAlgebra Qi = make_algebra(Q, {"i"}, {X(Q, 1, 0, 2) + C(Q, 1, 1)});
  RingMorphism zq = make_morphism(base_ring(Z), base_ring(Q), {});
  RingMorphism qi = make_morphism(base_ring(Q), Qi, {});
  RingMorphism zi = compose(zq, qi);
  CHECK(zi.source.base == Z);
  CHECK(zi.target.same_presentation(Qi));

  // (x |-> y^2) then (y |-> z+1) sends x to (z+1)^2
  FpAlgebra Ax = make_algebra(Z, {"x"}, {});
  FpAlgebra By = make_algebra(Z, {"y"}, {});
  FpAlgebra Cz = make_algebra(Z, {"z"}, {});
  RingMorphism f = make_morphism(Ax, By, {X(Z, 1, 0, 2)});
  RingMorphism g = make_morphism(By, Cz, {X(Z, 1, 0) + C(Z, 1, 1)});
  RingMorphism h = compose(f, g);
  CHECK(h.images[0].str(Cz.gens) == "z^2 + 2*z + 1");

  CHECK_KIND(compose(f, make_morphism(Cz, Cz, {X(Z, 1, 0)})),
             ContextMismatch);
}

TEST_CASE("compose keeps validity across a chain") {
  // w |-> 1 - w is the conjugation of Z[(1+sqrt17)/2]
  FpAlgebra A = sqrt17_ring(), H = half_ring();
  RingMorphism u =
      make_morphism(A, H, {C(Z, 1, 2) * X(Z, 1, 0) - C(Z, 1, 1)});
  RingMorphism conj = make_morphism(H, H, {C(Z, 1, 1) - X(Z, 1, 0)});
  RingMorphism cu = compose(u, conj);  // re-verified inside make_morphism
  CHECK(cu.images[0].str(H.gens) == "-2*w + 1");
  RingMorphism back = compose(cu, conj);
  CHECK(back.images[0].equals(u.images[0]));
}

TEST_CASE("quotient_construction: F5 -> Z[i]/5 and containment failure") {
  RingMorphism st = make_morphism(base_ring(Z), gauss_int(), {});
  IdealSpec I{base_ring(Z), {C(Z, 0, 5)}};
  IdealSpec J{gauss_int(), {C(Z, 1, 5)}};
  RingMorphism q = quotient_construction(st, I, J);
  CHECK(q.source.nvars() == 0);
  CHECK(q.source.relations.gens.size() == 1);
  CHECK(q.source.relations.gens[0].str() == "5");
  CHECK(q.target.relations.gens.size() == 2);
  CHECK(!q.source.zero_ring);
  CHECK(!q.target.zero_ring);

  IdealSpec I0{base_ring(Z), {}};
  IdealSpec J0{gauss_int(), {}};
  RingMorphism same = quotient_construction(st, I0, J0);
  CHECK(same.source.same_presentation(st.source));
  CHECK(same.target.same_presentation(st.target));

  RingMorphism idz = identity_morphism(base_ring(Z));
  CHECK_KIND(quotient_construction(idz, IdealSpec{base_ring(Z), {C(Z, 0, 2)}},
                                   IdealSpec{base_ring(Z), {C(Z, 0, 3)}}),
             ImageNotContained);
}

TEST_CASE("localize_ring: Rabinowitsch presentation of Z[1/2]") {
  auto [As, unit] = localize_ring(base_ring(Z), C(Z, 0, 2));
  CHECK(As.gens == std::vector<std::string>{"inv"});
  REQUIRE(As.relations.gens.size() == 1);
  CHECK(As.relations.gens[0].str(As.gens) == "2*inv - 1");
  CHECK(unit.source.nvars() == 0);
  CHECK(!As.zero_ring);

  // s = 1 gives an isomorphic presentation: the new generator is 1
  auto [A1, unit1] = localize_ring(base_ring(Z), C(Z, 0, 1));
  (void)unit1;
  CHECK(A1.reduce(X(Z, 1, 0)).str() == "1");
}

TEST_CASE("localize_construction: direct, derived, and incompatible") {
  RingMorphism st = make_morphism(base_ring(Z), gauss_int(), {});
  RingMorphism loc = localize_construction(st, C(Z, 0, 5), C(Z, 1, 5));
  CHECK(loc.source.gens == std::vector<std::string>{"inv"});
  CHECK(loc.target.gens == std::vector<std::string>{"i", "inv"});
  REQUIRE(loc.images.size() == 1);
  CHECK(loc.images[0].str(loc.target.gens) == "inv");

  // u(s) = 2 divides t = 4 after one power: 1/2 = 2/4
  RingMorphism idz = identity_morphism(base_ring(Z));
  RingMorphism half = localize_construction(idz, C(Z, 0, 2), C(Z, 0, 4));
  CHECK(half.images[0].str(half.target.gens) == "2*inv");

  // 3 is not invertible in Z[1/2]
  CHECK_KIND(localize_construction(idz, C(Z, 0, 3), C(Z, 0, 2)),
             IncompatibleMultiplicative);
}

TEST_CASE("tensor_over: disjoint presentations and renaming") {
  RingMorphism st = make_morphism(base_ring(Z), gauss_int(), {});
  TensorResult t = tensor_over(st, st);
  CHECK(t.T.gens == std::vector<std::string>{"i1", "i2"});
  REQUIRE(t.T.relations.gens.size() == 2);
  CHECK(t.T.relations.gens[0].str(t.T.gens) == "i1^2 + 1");
  CHECK(t.T.relations.gens[1].str(t.T.gens) == "i2^2 + 1");
  // kernel of the multiplication map is generated by i1 - i2
  REQUIRE(t.mult_kernel.size() == 1);
  CHECK(t.mult_kernel[0].str(t.T.gens) == "i1 - i2");
  CHECK(t.to_B.images[0].str(t.T.gens) == "i1");
  CHECK(t.to_C.images[0].str(t.T.gens) == "i2");
}

TEST_CASE("tensor_over: base change Q (x)_Z Z[i] = Q[i]") {
  RingMorphism f = make_morphism(base_ring(Z), base_ring(Q), {});
  RingMorphism g = make_morphism(base_ring(Z), gauss_int(), {});
  TensorResult t = tensor_over(f, g);
  CHECK(t.T.base == Q);
  CHECK(t.T.gens == std::vector<std::string>{"i"});
  REQUIRE(t.T.relations.gens.size() == 1);
  CHECK(t.T.relations.gens[0].str(t.T.gens) == "i^2 + 1");
  CHECK(t.mult_kernel.empty());  // different factors
  CHECK(t.to_C.target.base == Q);
}

TEST_CASE("tensor_over: B (x)_A B collapses for B = A") {
  FpAlgebra A = sqrt17_ring();
  RingMorphism id = identity_morphism(A);
  TensorResult t = tensor_over(id, id);
  CHECK(t.mult_kernel.empty());
  CHECK(in_ideal(X(Z, 2, 0) - X(Z, 2, 1), t.T.gb));
}

TEST_CASE("tensor_over is symmetric up to swapping the blocks") {
  FpAlgebra B = gauss_int();
  FpAlgebra Cr = make_algebra(Z, {"j"}, {X(Z, 1, 0, 2) - C(Z, 1, 2)});
  RingMorphism f = make_morphism(base_ring(Z), B, {});
  RingMorphism g = make_morphism(base_ring(Z), Cr, {});
  TensorResult bc = tensor_over(f, g);
  TensorResult cb = tensor_over(g, f);
  CHECK(bc.T.gens == std::vector<std::string>{"i", "j"});
  CHECK(cb.T.gens == std::vector<std::string>{"j", "i"});
  std::vector<Poly> swapped;
  for (auto& r : cb.T.relations.gens) swapped.push_back(r.embed(2, {1, 0}));
  CHECK(ideal_equal(bc.T.relations, IdealGens::make(Z, 2, swapped)));
}

TEST_CASE("product_construction: Z[1/2] x F2 with diagonal from Z") {
  auto [B, unitB] = localize_ring(base_ring(Z), C(Z, 0, 2));
  (void)unitB;
  FpAlgebra F2 = make_algebra(Z, {}, {C(Z, 0, 2)});
  ProductResult pr = product_construction(B, F2);
  CHECK(pr.P.gens == std::vector<std::string>{"e", "inv"});
  CHECK(!pr.P.zero_ring);
  // e is a nontrivial idempotent
  Poly e = pr.e;
  CHECK(pr.P.reduce(e.mul(e).sub(e)).is_zero());
  CHECK(!pr.P.reduce(e).is_zero());
  CHECK(!pr.P.reduce(e - C(Z, 2, 1)).is_zero());
  CHECK(pr.diagonal.source.nvars() == 0);

  // projections after the diagonal are the two structure maps
  RingMorphism dB = compose(pr.diagonal, pr.proj_B);
  RingMorphism dC = compose(pr.diagonal, pr.proj_C);
  CHECK(dB.source.same_presentation(base_ring(Z)));
  CHECK(dB.target.same_presentation(B));
  CHECK(dB.images.empty());
  CHECK(dC.target.same_presentation(F2));
}

TEST_CASE("product_construction: unit-ring factor disappears") {
  FpAlgebra B = gauss_int();
  FpAlgebra zero = make_algebra(Z, {}, {C(Z, 0, 1)});
  REQUIRE(zero.zero_ring);
  ProductResult pr = product_construction(B, zero);
  CHECK(pr.P.reduce(pr.e - C(Z, pr.P.nvars(), 1)).is_zero());
  CHECK(!pr.P.zero_ring);
  // with e = 1 the B relations hold on the nose
  CHECK(pr.P.reduce(X(Z, 2, 1, 2) + C(Z, 2, 1)).is_zero());
}

TEST_CASE("product_construction: F2 x F2 has four elements") {
  FpAlgebra F2 = base_ring(Domain::modp(2));
  ProductResult pr = product_construction(F2, F2);
  CHECK(pr.P.base == Domain::modp(2));
  auto basis = quotient_basis(pr.P.gb);
  REQUIRE(basis.has_value());
  CHECK(basis->size() == 2);  // 2^2 = 4 elements
  Domain F = Domain::modp(2);
  Poly e = pr.e, one = C(F, 1, 1);
  // e and 1+e are the two nontrivial idempotents
  for (Poly z : {e, one + e}) {
    CHECK(pr.P.reduce(z * z - z).is_zero());
    CHECK(!pr.P.reduce(z).is_zero());
    CHECK(!pr.P.reduce(z - one).is_zero());
  }
}

TEST_CASE("idealization: cyclic module, zero module, dual numbers") {
  ModulePresentation M{base_ring(Z), {"m"}, {{C(Z, 0, 3)}}};
  IdealizationResult r = idealization(base_ring(Z), M);
  CHECK(r.R.gens == std::vector<std::string>{"m"});
  REQUIRE(r.R.relations.gens.size() == 2);
  CHECK(r.R.relations.gens[0].str(r.R.gens) == "3*m");
  CHECK(r.R.relations.gens[1].str(r.R.gens) == "m^2");
  CHECK(r.canonical.images.empty());

  ModulePresentation M0{base_ring(Z), {}, {}};
  IdealizationResult r0 = idealization(base_ring(Z), M0);
  CHECK(r0.R.same_presentation(base_ring(Z)));

  ModulePresentation Mq{base_ring(Q), {"m"}, {}};
  IdealizationResult rq = idealization(base_ring(Q), Mq);
  CHECK(rq.R.base == Q);
  REQUIRE(rq.R.relations.gens.size() == 1);
  CHECK(rq.R.relations.gens[0].str(rq.R.gens) == "m^2");
}

TEST_CASE("idealization: module generators square to zero") {
  FpAlgebra A = gauss_int();
  ModulePresentation M{A, {"m", "n"}, {{C(Z, 1, 2), X(Z, 1, 0)}}};
  IdealizationResult r = idealization(A, M);
  unsigned n = r.R.nvars();
  for (unsigned k = 1; k < n; ++k) {
    Poly g = X(Z, n, k);
    CHECK(r.R.reduce(g.mul(g)).is_zero());
  }
  // the module relation 2m + i n holds
  CHECK(r.R.reduce(C(Z, 3, 2) * X(Z, 3, 1) + X(Z, 3, 0) * X(Z, 3, 2))
            .is_zero());
}

TEST_CASE("polynomial_extension: fresh variable on both sides") {
  RingMorphism st = make_morphism(base_ring(Z), gauss_int(), {});
  RingMorphism ext = polynomial_extension(st);
  CHECK(ext.source.gens == std::vector<std::string>{"X"});
  CHECK(ext.target.gens == std::vector<std::string>{"i", "X"});
  REQUIRE(ext.images.size() == 1);
  CHECK(ext.images[0].str(ext.target.gens) == "X");

  RingMorphism idX = polynomial_extension(identity_morphism(ext.source));
  // the stem X is taken, so the fresh variable gets a suffix
  CHECK(idX.source.gens == std::vector<std::string>{"X", "X1"});
  CHECK(idX.images[1].str(idX.source.gens) == "X1");

  FpAlgebra Qi = make_algebra(Q, {"i"}, {X(Q, 1, 0, 2) + C(Q, 1, 1)});
  RingMorphism qext =
      polynomial_extension(make_morphism(base_ring(Q), Qi, {}));
  CHECK(qext.source.base == Q);
  CHECK(qext.target.gens == std::vector<std::string>{"i", "X"});
}

TEST_CASE("contract_ideal: Gaussian integer norms") {
  RingMorphism st = make_morphism(base_ring(Z), gauss_int(), {});
  IdealSpec J1{gauss_int(), {X(Z, 1, 0) + C(Z, 1, 2)}};  // (2+i)
  IdealSpec c1 = contract_ideal(st, J1);
  REQUIRE(c1.gens.size() == 1);
  CHECK(c1.gens[0].str() == "5");

  IdealSpec J0{gauss_int(), {}};
  CHECK(contract_ideal(st, J0).gens.empty());

  IdealSpec J2{gauss_int(), {X(Z, 1, 0) + C(Z, 1, 1)}};  // (1+i)
  IdealSpec c2 = contract_ideal(st, J2);
  REQUIRE(c2.gens.size() == 1);
  CHECK(c2.gens[0].str() == "2");

  CHECK_KIND(
      contract_ideal(st, IdealSpec{gauss_int(), {C(Z, 1, 1)}}),
      ImproperIdeal);
}

TEST_CASE("contract_ideal: substitution kernel over Z") {
  FpAlgebra Aa = make_algebra(Z, {"a"}, {});
  FpAlgebra Bx = make_algebra(Z, {"x"}, {});
  RingMorphism u = make_morphism(Aa, Bx, {X(Z, 1, 0, 2)});  // a |-> x^2
  IdealSpec J{Bx, {X(Z, 1, 0, 3)}};                         // (x^3)
  IdealSpec c = contract_ideal(u, J);
  CHECK(ideal_equal(IdealGens::make(Z, 1, c.gens),
                    IdealGens::make(Z, 1, {X(Z, 1, 0, 2)})));
  CHECK(ideal_is_proper(c));
}

TEST_CASE("contract_ideal: cross-base targets") {
  // Z -> F2 pulls (0) back to (2)
  RingMorphism red = make_morphism(base_ring(Z), base_ring(Domain::modp(2)), {});
  IdealSpec c2 = contract_ideal(red, IdealSpec{base_ring(Domain::modp(2)), {}});
  REQUIRE(c2.gens.size() == 1);
  CHECK(c2.gens[0].str() == "2");

  // Z[a] -> Q[x], a |-> x: the contraction of (2x) is (a), not (2a)
  FpAlgebra Aa = make_algebra(Z, {"a"}, {});
  FpAlgebra Qx = make_algebra(Q, {"x"}, {});
  RingMorphism u = make_morphism(Aa, Qx, {X(Q, 1, 0)});
  IdealSpec J{Qx, {C(Q, 1, 2) * X(Q, 1, 0)}};
  IdealSpec c = contract_ideal(u, J);
  CHECK(ideal_equal(IdealGens::make(Z, 1, c.gens),
                    IdealGens::make(Z, 1, {X(Z, 1, 0)})));

  // Z -> Q(i) pulls (0) back to (0): the inclusion is injective
  FpAlgebra Qi = make_algebra(Q, {"i"}, {X(Q, 1, 0, 2) + C(Q, 1, 1)});
  RingMorphism zqi =
      compose(make_morphism(base_ring(Z), base_ring(Q), {}),
              make_morphism(base_ring(Q), Qi, {}));
  CHECK(contract_ideal(zqi, IdealSpec{Qi, {}}).gens.empty());
}

TEST_CASE("apply reduces through the presentation") {
  FpAlgebra A = sqrt17_ring(), H = half_ring();
  RingMorphism u =
      make_morphism(A, H, {C(Z, 1, 2) * X(Z, 1, 0) - C(Z, 1, 1)});
  // x^2 |-> (2w-1)^2 = 4(w^2-w-4) + 17 = 17 mod the target ideal
  CHECK(apply(u, X(Z, 1, 0, 2)).str(H.gens) == "17");
  CHECK_KIND(apply(u, X(Q, 1, 0)), ContextMismatch);
}
