#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>

#include "psikit/error.hpp"
#include "psikit/groebner.hpp"
#include "t_util.hpp"

using namespace psikit;
using namespace tu;

static const Domain Q = Domain::rationals();
static const Domain Z = Domain::integers();

TEST_CASE("groebner: principal ideal is already reduced") {
  auto G = groebner(ideal(Q, 1, {X(Q, 1, 0)}));
  REQUIRE(G.gens.size() == 1);
  CHECK(G.gens[0].str() == "x0");
}

TEST_CASE("groebner: univariate pair collapses to the gcd") {
  Poly x = X(Q, 1, 0);
  auto G = groebner(ideal(Q, 1, {x * x - C(Q, 1, 1), x - C(Q, 1, 1)}));
  REQUIRE(G.gens.size() == 1);
  CHECK(G.gens[0].str() == "x0 - 1");
}

TEST_CASE("groebner: strong basis over the integers picks up gcd of leads") {
  Poly x = X(Z, 1, 0);
  auto G = groebner(ideal(Z, 1, {C(Z, 1, 2) * x, C(Z, 1, 3) * x}));
  bool has_x = false;
  for (const auto& g : G.gens)
    if (g.equals(x)) has_x = true;
  CHECK(has_x);
}

TEST_CASE("normal_form: member reduces to zero") {
  Poly x = X(Q, 1, 0);
  auto G = groebner(ideal(Q, 1, {x - C(Q, 1, 1)}));
  CHECK(normal_form(x * x - C(Q, 1, 1), G).is_zero());
}

TEST_CASE("normal_form: evaluation at the root") {
  Poly x = X(Q, 1, 0);
  auto G = groebner(ideal(Q, 1, {x - C(Q, 1, 1)}));
  CHECK(normal_form(x + C(Q, 1, 1), G).str() == "2");
}

TEST_CASE("normal_form: x is not a member of (2x) over the integers") {
  Poly x = X(Z, 1, 0);
  auto G = groebner(ideal(Z, 1, {C(Z, 1, 2) * x}));
  CHECK(normal_form(x, G).equals(x));
}

TEST_CASE("eliminate: graph of the identity leaves the zero ideal") {
  Poly x = X(Q, 2, 0), y = X(Q, 2, 1);
  auto R = eliminate(ideal(Q, 2, {x - y}), {1, 0});
  CHECK(R.nvars == 1);
  CHECK(R.gens.empty());
}

TEST_CASE("eliminate: substitution pushes the relation onto y") {
  Poly x = X(Q, 2, 0), y = X(Q, 2, 1);
  auto R = eliminate(ideal(Q, 2, {x * x - C(Q, 2, 2), y - x}), {1, 0});
  REQUIRE(R.gens.size() == 1);
  CHECK(R.gens[0].str() == "x0^2 - 2");
}

TEST_CASE("eliminate: the unit ideal survives elimination") {
  Poly x = X(Q, 2, 0), y = X(Q, 2, 1);
  auto R = eliminate(ideal(Q, 2, {x * y - C(Q, 2, 1), x}), {1, 0});
  REQUIRE(R.gens.size() == 1);
  CHECK(R.gens[0].str() == "1");
}

TEST_CASE("saturate: dividing x out of (xy)") {
  Poly x = X(Q, 2, 0), y = X(Q, 2, 1);
  auto S = saturate(ideal(Q, 2, {x * y}), x);
  auto G = groebner(S);
  REQUIRE(G.gens.size() == 1);
  CHECK(G.gens[0].equals(y));
}

TEST_CASE("saturate: nilpotent support blows up to the unit ideal") {
  Poly x = X(Q, 1, 0);
  auto S = saturate(ideal(Q, 1, {x * x}), x);
  CHECK(groebner(S).is_unit_ideal());
}

TEST_CASE("saturate: integer coefficient saturation") {
  Poly y = X(Z, 1, 0);
  auto S = saturate(ideal(Z, 1, {C(Z, 1, 3) * y}), C(Z, 1, 3));
  auto G = groebner(S);
  REQUIRE(G.gens.size() == 1);
  CHECK(G.gens[0].equals(y));
}

TEST_CASE("quotient_basis: two standard monomials under x^2+1") {
  Poly x = X(Q, 1, 0);
  auto G = groebner(ideal(Q, 1, {x * x + C(Q, 1, 1)}));
  auto B = quotient_basis(G);
  REQUIRE(B.has_value());
  REQUIRE(B->size() == 2);
  std::set<Exponents> got(B->begin(), B->end());
  CHECK(got.count(Exponents{0}) == 1);
  CHECK(got.count(Exponents{1}) == 1);
}

TEST_CASE("quotient_basis: linear relation leaves only 1") {
  Poly x = X(Q, 1, 0);
  auto G = groebner(ideal(Q, 1, {x - C(Q, 1, 5)}));
  auto B = quotient_basis(G);
  REQUIRE(B.has_value());
  REQUIRE(B->size() == 1);
  CHECK((*B)[0] == Exponents{0});
}

TEST_CASE("quotient_basis: (xy) has infinite quotient") {
  Poly x = X(Q, 2, 0), y = X(Q, 2, 1);
  auto G = groebner(ideal(Q, 2, {x * y}));
  CHECK(!quotient_basis(G).has_value());
}

TEST_CASE("min_poly: defining relation comes back") {
  Poly x = X(Q, 1, 0);
  auto G = groebner(ideal(Q, 1, {x * x + C(Q, 1, 1)}));
  auto B = *quotient_basis(G);
  Poly m = min_poly(x, G, B);
  Poly t = X(Q, 1, 0);
  CHECK(m.equals(t * t + C(Q, 1, 1)));
}

TEST_CASE("min_poly: shifted nilpotent") {
  Poly x = X(Q, 1, 0);
  auto G = groebner(ideal(Q, 1, {x * x}));
  auto B = *quotient_basis(G);
  Poly m = min_poly(x + C(Q, 1, 1), G, B);
  Poly t = X(Q, 1, 0);
  CHECK(m.equals(t * t - C(Q, 1, 2) * t + C(Q, 1, 1)));
}

TEST_CASE("min_poly: the unit has t - 1") {
  Poly x = X(Q, 1, 0);
  auto G = groebner(ideal(Q, 1, {x * x + C(Q, 1, 1)}));
  auto B = *quotient_basis(G);
  Poly m = min_poly(C(Q, 1, 1), G, B);
  Poly t = X(Q, 1, 0);
  CHECK(m.equals(t - C(Q, 1, 1)));
}

// ---- invariants ----

namespace {

// all h0*g0 + h1*g1 with multiplier coefficients in {-1,0,1} over the
// monomials 1, x, y
std::vector<Poly> small_combinations(const Domain& d, unsigned n,
                                     const Poly& g0, const Poly& g1) {
  std::vector<Poly> monos{C(d, n, 1)};
  for (unsigned i = 0; i < n; ++i) monos.push_back(X(d, n, i));
  // enumerate sums of c*mono over the monomial window
  std::size_t count = 1;
  for (std::size_t i = 0; i < monos.size(); ++i) count *= 3;
  std::vector<Poly> hs;
  for (std::size_t code = 0; code < count; ++code) {
    std::size_t c = code;
    Poly h = Poly::zero(d, n);
    for (const auto& m : monos) {
      int v = int(c % 3) - 1;
      c /= 3;
      if (v != 0) h = h.add(m.scale(c_norm(d, Coeff(v))));
    }
    hs.push_back(h);
  }
  std::vector<Poly> out;
  for (const auto& h0 : hs)
    for (const auto& h1 : hs) out.push_back(h0.mul(g0).add(h1.mul(g1)));
  return out;
}

} // namespace

TEST_CASE("invariant: every explicit combination reduces to zero") {
  struct Inst {
    Domain d;
    unsigned n;
    Poly g0, g1;
  };
  std::vector<Inst> insts;
  {
    Poly x = X(Q, 2, 0), y = X(Q, 2, 1);
    insts.push_back({Q, 2, x * x - y, x * y - C(Q, 2, 1)});
  }
  {
    Poly x = X(Z, 2, 0), y = X(Z, 2, 1);
    insts.push_back({Z, 2, C(Z, 2, 2) * x + y, C(Z, 2, 3) * y});
  }
  for (const auto& in : insts) {
    auto G = groebner(ideal(in.d, in.n, {in.g0, in.g1}));
    for (const auto& f : small_combinations(in.d, in.n, in.g0, in.g1))
      CHECK(normal_form(f, G).is_zero());
  }
}

TEST_CASE("invariant: nonzero normal form means no small combination") {
  // linear instance where the bounded window is exhaustive for degree <= 1
  Poly x = X(Q, 3, 0), y = X(Q, 3, 1), z = X(Q, 3, 2);
  Poly g0 = x - y, g1 = y - z;
  auto G = groebner(ideal(Q, 3, {g0, g1}));
  std::set<std::string> combos;
  for (const auto& f : small_combinations(Q, 3, g0, g1))
    combos.insert(f.str());
  // sweep all +-1/0 coefficient polynomials over 1, x, y, z
  for (std::size_t code = 0; code < 81; ++code) {
    std::size_t c = code;
    Poly f = Poly::zero(Q, 3);
    std::vector<Poly> monos{C(Q, 3, 1), x, y, z};
    for (const auto& m : monos) {
      int v = int(c % 3) - 1;
      c /= 3;
      if (v != 0) f = f.add(m.scale(Coeff(v)));
    }
    bool nf_zero = normal_form(f, G).is_zero();
    bool in_window = combos.count(f.str()) > 0;
    if (nf_zero)
      CHECK(in_window); // small members are explicit small combinations
    else
      CHECK(!in_window);
  }
}

TEST_CASE("invariant: groebner is idempotent") {
  std::vector<IdealGens> insts;
  {
    Poly x = X(Q, 2, 0), y = X(Q, 2, 1);
    insts.push_back(ideal(Q, 2, {x * x - y, x * y - C(Q, 2, 1)}));
  }
  {
    Poly x = X(Z, 2, 0), y = X(Z, 2, 1);
    insts.push_back(ideal(Z, 2, {C(Z, 2, 4) * x + y, C(Z, 2, 6) * y,
                                 x * x - y * y}));
  }
  {
    Poly x = X(Z, 1, 0);
    insts.push_back(ideal(Z, 1, {C(Z, 1, 2) * x, C(Z, 1, 3) * x}));
  }
  for (const auto& I : insts) {
    auto G1 = groebner(I);
    auto G2 = groebner(IdealGens::make(G1.dom, G1.nvars, G1.gens));
    REQUIRE(G1.gens.size() == G2.gens.size());
    for (std::size_t i = 0; i < G1.gens.size(); ++i)
      CHECK(G1.gens[i].equals(G2.gens[i]));
  }
}

TEST_CASE("invariant: saturation is a fixpoint") {
  struct Inst {
    IdealGens I;
    Poly f;
  };
  std::vector<Inst> insts;
  {
    Poly x = X(Q, 2, 0), y = X(Q, 2, 1);
    insts.push_back({ideal(Q, 2, {x * y}), x});
    insts.push_back({ideal(Q, 2, {x * x * y * y * y}), y});
  }
  {
    Poly y = X(Z, 1, 0);
    insts.push_back({ideal(Z, 1, {C(Z, 1, 3) * y}), C(Z, 1, 3)});
  }
  for (const auto& in : insts) {
    auto S1 = saturate(in.I, in.f);
    auto S2 = saturate(S1, in.f);
    CHECK(ideal_equal(S1, S2));
  }
}
