#pragma once

#include <vector>

#include "diffop/polynomial.hpp"

namespace diffop {

// Reduced Groebner basis under graded lex (x > y > z): generators monic,
// no leading term divides any term of another generator.
struct GroebnerBasis {
  std::vector<Polynomial> generators;
};

// Full reduction of p modulo the set: cancels every term divisible by some
// leading term, not just the leading one.
Polynomial reduce_by_set(const Polynomial& p, const std::vector<Polynomial>& basis);

// Buchberger's algorithm with the coprime-leading-term criterion, followed
// by interreduction. Zero inputs are ignored.
GroebnerBasis buchberger(std::vector<Polynomial> generators);

// True iff the leading-term ideal contains a pure power of the variable.
bool has_pure_power_lead(const GroebnerBasis& basis, Var v);

}  // namespace diffop
