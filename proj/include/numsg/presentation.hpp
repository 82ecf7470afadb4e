#pragma once

#include <span>
#include <vector>

#include "numsg/construction.hpp"
#include "numsg/core.hpp"

namespace numsg {

/// Exponent vector over an ordered generator list.
using Factorization = std::vector<Int>;

struct Relation {
  Factorization lhs;
  Factorization rhs;

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// A finite generating system of the kernel congruence of the
/// factorization map N^k -> S for the listed generators.
struct Presentation {
  std::vector<Int> generators;
  std::vector<Relation> relations;
};

/// Dot product of exponents with generators.
Int evaluate(std::span<const Int> generators, const Factorization& f);

/// Every exponent vector over `generators` that evaluates to n, in
/// increasing lexicographic order.
std::vector<Factorization> factorizations(std::span<const Int> generators, Int n);
std::vector<Factorization> factorizations(const NumericalSemigroup& s, Int n);

/// Largest element that can have a disconnected factorization graph:
/// F(S) + 2 max(msg(S)).
Int betti_bound(const NumericalSemigroup& s);

/// Minimal presentation over msg(S). For each element whose factorization
/// graph is disconnected, the lexicographically least factorization of each
/// component is related to the next one.
Presentation minimal_presentation(const NumericalSemigroup& s);

/// Presentation of Δ_d(a) over d·msg(Δ) followed by da+1, ..., da+d-1,
/// lifting `sigma` and adding the quadratic relations among the new
/// generators. `u` and `v` factor a and a+1 over msg(Δ).
/// Throws BadFactorization if they do not.
Presentation lifted_presentation(const DeltaDaSpec& spec, const Presentation& sigma,
                                 const Factorization& u, const Factorization& v);

/// Same, with sigma = minimal_presentation(Δ) and the lexicographically
/// smallest factorizations of a and a+1.
Presentation lifted_presentation(const DeltaDaSpec& spec);

/// True iff, for every n <= bound, the relation moves of P connect all
/// factorizations of n. P.generators must be msg(S) in some order.
bool verify_presentation(const NumericalSemigroup& s, const Presentation& p, Int bound);
bool verify_presentation(const NumericalSemigroup& s, const Presentation& p);

}  // namespace numsg
