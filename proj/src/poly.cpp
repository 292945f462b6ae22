#include "psikit/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace psikit {

Limits& limits() {
  static Limits l;
  return l;
}

std::uint64_t total_degree(const Exponents& e) {
  std::uint64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

bool mono_divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents mono_mul(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponents mono_div(const Exponents& b, const Exponents& a) {
  Exponents r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

Exponents mono_lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool mono_coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

namespace {

// degrevlex on the positions selected by mask (nullptr = all): compare total
// degree, then the last differing selected position; smaller exponent there
// wins.
int drl_cmp(const Exponents& a, const Exponents& b, const std::vector<char>* mask,
            char want) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (mask && (*mask)[i] != want) continue;
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (mask && (*mask)[i] != want) continue;
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

} // namespace

int MonomialOrder::cmp(const Exponents& a, const Exponents& b) const {
  if (kind == Kind::DegRevLex) return drl_cmp(a, b, nullptr, 0);
  int c = drl_cmp(a, b, &elim, 1);
  if (c != 0) return c;
  return drl_cmp(a, b, &elim, 0);
}

namespace {
struct DrlDesc {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return drl_cmp(a, b, nullptr, 0) > 0;
  }
};
} // namespace

void Poly::normalize() {
  std::map<Exponents, Coeff, DrlDesc> acc;
  for (auto& t : terms_) {
    auto it = acc.find(t.mono);
    if (it == acc.end())
      acc.emplace(t.mono, c_norm(dom_, t.c));
    else
      it->second = c_add(dom_, it->second, t.c);
  }
  terms_.clear();
  for (auto& [m, c] : acc)
    if (!c_is_zero(c)) terms_.push_back({m, c});
  if (terms_.size() > limits().max_terms)
    fail(ErrKind::ResourceLimit, "term count exceeds bound");
}

Poly Poly::constant(const Domain& d, unsigned nvars, const Coeff& c) {
  Poly p(d, nvars);
  p.terms_.push_back({Exponents(nvars, 0), c});
  p.normalize();
  return p;
}

Poly Poly::variable(const Domain& d, unsigned nvars, unsigned i,
                    std::uint32_t exp) {
  if (i >= nvars) fail(ErrKind::Internal, "variable index out of range");
  Poly p(d, nvars);
  Exponents e(nvars, 0);
  e[i] = exp;
  p.terms_.push_back({e, Coeff(1)});
  p.normalize();
  return p;
}

Poly Poly::from_terms(const Domain& d, unsigned nvars, std::vector<Term> terms) {
  Poly p(d, nvars);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && total_degree(terms_[0].mono) == 0);
}

Coeff Poly::constant_value() const {
  if (terms_.empty()) return Coeff(0);
  if (!is_constant()) fail(ErrKind::Internal, "constant_value of non-constant");
  return terms_[0].c;
}

std::uint64_t Poly::degree() const {
  std::uint64_t d = 0;
  for (auto& t : terms_) d = std::max(d, total_degree(t.mono));
  return d;
}

Poly Poly::add(const Poly& o) const {
  if (!(dom_ == o.dom_) || nvars_ != o.nvars_)
    fail(ErrKind::ContextMismatch, "polynomial contexts differ in add");
  Poly r(dom_, nvars_);
  r.terms_ = terms_;
  r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
  r.normalize();
  return r;
}

Poly Poly::sub(const Poly& o) const { return add(o.neg()); }

Poly Poly::neg() const {
  Poly r(dom_, nvars_);
  for (auto& t : terms_) r.terms_.push_back({t.mono, c_neg(dom_, t.c)});
  return r;
}

Poly Poly::mul(const Poly& o) const {
  if (!(dom_ == o.dom_) || nvars_ != o.nvars_)
    fail(ErrKind::ContextMismatch, "polynomial contexts differ in mul");
  Poly r(dom_, nvars_);
  for (auto& a : terms_)
    for (auto& b : o.terms_)
      r.terms_.push_back({mono_mul(a.mono, b.mono), a.c * b.c});
  r.normalize();
  if (r.degree() > limits().max_degree)
    fail(ErrKind::ResourceLimit, "degree exceeds bound");
  return r;
}

Poly Poly::scale(const Coeff& c) const {
  Poly r(dom_, nvars_);
  for (auto& t : terms_) r.terms_.push_back({t.mono, t.c * c});
  r.normalize();
  return r;
}

Poly Poly::pow(std::uint64_t k) const {
  Poly r = Poly::constant(dom_, nvars_, 1);
  Poly b = *this;
  while (k) {
    if (k & 1) r = r.mul(b);
    k >>= 1;
    if (k) b = b.mul(b);
  }
  return r;
}

bool Poly::equals(const Poly& o) const {
  if (!(dom_ == o.dom_) || nvars_ != o.nvars_ || terms_.size() != o.terms_.size())
    return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].c != o.terms_[i].c)
      return false;
  return true;
}

Poly Poly::substitute(const std::vector<Poly>& images, const Domain& target,
                      unsigned target_nvars,
                      const std::function<Coeff(const Coeff&)>& cmap) const {
  if (images.size() != nvars_)
    fail(ErrKind::ContextMismatch, "wrong image count in substitution");
  Poly acc = Poly::zero(target, target_nvars);
  for (auto& t : terms_) {
    Poly m = Poly::constant(target, target_nvars, cmap(t.c));
    for (unsigned i = 0; i < nvars_; ++i)
      if (t.mono[i] > 0) m = m.mul(images[i].pow(t.mono[i]));
    acc = acc.add(m);
  }
  return acc;
}

Poly Poly::map_domain(const Domain& target) const {
  Poly r(target, nvars_);
  for (auto& t : terms_) r.terms_.push_back({t.mono, t.c});
  r.normalize();
  return r;
}

Poly Poly::embed(unsigned target_nvars, const std::vector<unsigned>& where) const {
  if (where.size() != nvars_)
    fail(ErrKind::Internal, "embed map has wrong length");
  Poly r(dom_, target_nvars);
  for (auto& t : terms_) {
    Exponents e(target_nvars, 0);
    for (unsigned i = 0; i < nvars_; ++i) e[where[i]] = t.mono[i];
    r.terms_.push_back({e, t.c});
  }
  r.normalize();
  return r;
}

Poly Poly::derivative(unsigned i) const {
  Poly r(dom_, nvars_);
  for (auto& t : terms_) {
    if (t.mono[i] == 0) continue;
    Exponents e = t.mono;
    Coeff c = t.c * Coeff(e[i]);
    e[i] -= 1;
    r.terms_.push_back({e, c});
  }
  r.normalize();
  return r;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : terms_) {
    Coeff c = t.c;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool unit_coeff = (c == 1) && total_degree(t.mono) > 0;
    if (!unit_coeff) os << c.get_str();
    bool printed = !unit_coeff;
    for (unsigned i = 0; i < nvars_; ++i) {
      if (t.mono[i] == 0) continue;
      if (printed) os << "*";
      os << names[i];
      if (t.mono[i] > 1) os << "^" << t.mono[i];
      printed = true;
    }
  }
  return os.str();
}

std::string Poly::str() const { return str(default_names(nvars_)); }

Poly p_add(const Poly& a, const Poly& b) { return a.add(b); }
Poly p_sub(const Poly& a, const Poly& b) { return a.sub(b); }
Poly p_mul(const Poly& a, const Poly& b) { return a.mul(b); }

std::vector<std::string> default_names(unsigned n) {
  std::vector<std::string> v;
  for (unsigned i = 0; i < n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

} // namespace psikit
