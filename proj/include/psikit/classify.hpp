#pragma once

#include <cstdint>
#include <optional>

#include "psikit/groebner.hpp"

namespace psikit {

enum class QuotKind { Zero, Field, NotField };
enum class WitnessKind { ZeroDivisor, Nilpotent, Idempotent };

// Result of classifying a zero-dimensional quotient over a field.  For
// NotField every payload that the run established is filled in; wkind names
// the headline witness.  Invariants: zero_divisor * cofactor = 0 with both
// nonzero; nilpotent^2 = 0 and nonzero; idempotent^2 = idempotent, not 0 or 1.
struct QuotClass {
  QuotKind kind = QuotKind::Zero;
  std::size_t dim = 0; // Field only
  WitnessKind wkind = WitnessKind::ZeroDivisor;
  std::optional<Poly> zero_divisor;
  std::optional<Poly> cofactor;
  std::optional<Poly> nilpotent;
  std::optional<Poly> idempotent;
};

// Decide whether k[x_1..x_n]/I is the zero ring, a field, or neither, for a
// zero-dimensional ideal I over Rat or ModP.  The element search draws its
// random linear forms from a generator seeded with `seed`.
QuotClass classify_artinian_quotient(const IdealGens& I,
                                     std::uint64_t seed = 1);

} // namespace psikit
