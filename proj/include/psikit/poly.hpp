#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "psikit/coeff.hpp"

namespace psikit {

// Global resource bounds; mutable so the CLI can override.
struct Limits {
  unsigned max_degree = 64;
  std::size_t max_terms = 100000;
  unsigned max_vars = 8;
  std::size_t finite_ring_bound = 4096;
  unsigned prime_search_bound = 1000;
  unsigned classify_retries = 20;
  std::size_t classify_enum_bound = std::size_t(1) << 20;
  std::size_t deduce_fact_bound = 1000;
};
Limits& limits();

using Exponents = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Exponents& e);
bool mono_divides(const Exponents& a, const Exponents& b); // a | b
Exponents mono_mul(const Exponents& a, const Exponents& b);
Exponents mono_div(const Exponents& b, const Exponents& a); // b / a
Exponents mono_lcm(const Exponents& a, const Exponents& b);
bool mono_coprime(const Exponents& a, const Exponents& b);

// Term orders: graded reverse lexicographic, and a two-block product of
// degrevlex orders used for elimination (masked variables compare first).
struct MonomialOrder {
  enum class Kind { DegRevLex, Block };
  Kind kind = Kind::DegRevLex;
  std::vector<char> elim; // Block only: 1 = eliminated variable

  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder block(std::vector<char> mask) {
    return {Kind::Block, std::move(mask)};
  }
  int cmp(const Exponents& a, const Exponents& b) const; // <0, 0, >0
  bool less(const Exponents& a, const Exponents& b) const { return cmp(a, b) < 0; }
};

struct Term {
  Exponents mono;
  Coeff c;

  bool operator==(const Term& o) const { return mono == o.mono && c == o.c; }
};

// Multivariate polynomial over a fixed Domain with a fixed variable count.
// Terms are kept sorted descending by degrevlex with no zero coefficients;
// that normal form makes equality structural.
class Poly {
public:
  Poly() : dom_(Domain::integers()), nvars_(0) {}
  Poly(Domain dom, unsigned nvars) : dom_(dom), nvars_(nvars) {}

  static Poly zero(const Domain& d, unsigned nvars) { return Poly(d, nvars); }
  static Poly constant(const Domain& d, unsigned nvars, const Coeff& c);
  static Poly variable(const Domain& d, unsigned nvars, unsigned i,
                       std::uint32_t exp = 1);
  static Poly from_terms(const Domain& d, unsigned nvars,
                         std::vector<Term> terms);

  const Domain& domain() const { return dom_; }
  unsigned nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant value (zero polynomial included).
  Coeff constant_value() const;
  std::uint64_t degree() const; // max total degree, 0 for the zero poly

  Poly add(const Poly& o) const;
  Poly sub(const Poly& o) const;
  Poly neg() const;
  Poly mul(const Poly& o) const;
  Poly scale(const Coeff& c) const;
  Poly pow(std::uint64_t k) const;

  bool equals(const Poly& o) const;

  // Substitute images[i] for variable i; all images share a context and the
  // coefficients are carried over by cmap.
  Poly substitute(const std::vector<Poly>& images, const Domain& target,
                  unsigned target_nvars,
                  const std::function<Coeff(const Coeff&)>& cmap) const;

  // Reinterpret coefficients in another domain (Int -> Rat / ModP, etc.).
  Poly map_domain(const Domain& target) const;

  // Extend/permute the variable context: variable i becomes where[i].
  Poly embed(unsigned target_nvars, const std::vector<unsigned>& where) const;

  // d/dx_i, mainly for univariate squarefree checks.
  Poly derivative(unsigned i) const;

  std::string str(const std::vector<std::string>& names) const;
  std::string str() const;

private:
  Domain dom_;
  unsigned nvars_;
  std::vector<Term> terms_;

  void normalize();
};

Poly p_add(const Poly& a, const Poly& b);
Poly p_sub(const Poly& a, const Poly& b);
Poly p_mul(const Poly& a, const Poly& b);

std::vector<std::string> default_names(unsigned n);

} // namespace psikit
