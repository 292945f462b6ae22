#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "psikit/groebner.hpp"

// Shorthand for building polynomials in tests.
namespace tu {

using psikit::Coeff;
using psikit::Domain;
using psikit::IdealGens;
using psikit::Poly;

inline Poly X(const Domain& d, unsigned n, unsigned i, std::uint32_t e = 1) {
  return Poly::variable(d, n, i, e);
}

inline Poly C(const Domain& d, unsigned n, long num, long den = 1) {
  Coeff c(num, den);
  c.canonicalize();
  return Poly::constant(d, n, psikit::c_norm(d, c));
}

inline Poly operator+(const Poly& a, const Poly& b) { return a.add(b); }
inline Poly operator-(const Poly& a, const Poly& b) { return a.sub(b); }
inline Poly operator*(const Poly& a, const Poly& b) { return a.mul(b); }
inline Poly operator-(const Poly& a) { return a.neg(); }

inline IdealGens ideal(const Domain& d, unsigned n,
                       std::initializer_list<Poly> gs) {
  return IdealGens::make(d, n, std::vector<Poly>(gs));
}

inline std::vector<std::string> basis_strs(const psikit::GroebnerBasis& G) {
  std::vector<std::string> v;
  for (const auto& g : G.gens) v.push_back(g.str());
  return v;
}

} // namespace tu
