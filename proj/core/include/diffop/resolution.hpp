#pragma once

#include <map>
#include <string>
#include <vector>

#include "diffop/check.hpp"
#include "diffop/glossary.hpp"
#include "diffop/ring_context.hpp"
#include "diffop/weyl.hpp"

namespace diffop {

// Initial segment plus two-periodic tail of an augmented free resolution
//   ... -> F_{h+2} -> F_{h+1} -> F_h -> ... -> F_1 -> F_0 -> target,
// with d_i = head[i-1] for i <= h and the tail pair repeating afterwards
// (d_{h+1} = tail_a, d_{h+2} = tail_b, d_{h+3} = tail_a, ...).
struct PeriodicComplex {
  std::string name;
  std::vector<std::string> labels;      // generator names for F_0 (may be empty)
  PolyMatrix augmentation;              // F_0 -> ambient coordinates
  std::string aug_caption;
  std::vector<int> ambient_degrees;
  std::vector<PolyMatrix> head;
  std::vector<std::string> head_captions;
  PolyMatrix tail_a, tail_b;
  std::string tail_a_caption, tail_b_caption;
  // frames[i] = internal degrees of the basis of F_i for i = 0 .. h+2;
  // beyond that the two-periodic tail shifts degrees by period_shift.
  std::vector<std::vector<int>> frames;
  int period_shift = 0;

  std::size_t head_length() const { return head.size(); }
  const PolyMatrix& differential(std::size_t i) const;
  std::vector<int> frame(std::size_t i) const;
};

// Builders only assemble; use complex_checks / verify_or_throw to verify.
PeriodicComplex build_G1(const RingContext& ctx, const Glossary& g);
PeriodicComplex build_G2(const RingContext& ctx, const Glossary& g);
PeriodicComplex build_G3(const RingContext& ctx, const Glossary& g);
PeriodicComplex build_S2(const RingContext& ctx, const Glossary& g);
PeriodicComplex build_S3(const RingContext& ctx, const Glossary& g);
PeriodicComplex build_cone_C(const RingContext& ctx, const Glossary& g);
PeriodicComplex build_resolution_D1(const RingContext& ctx, const Glossary& g);
PeriodicComplex build_resolution_D2(const RingContext& ctx, const Glossary& g);
PeriodicComplex build_resolution_D3(const RingContext& ctx, const Glossary& g);

PeriodicComplex build_target(const std::string& target, const RingContext& ctx,
                             const Glossary& g);

// Differential i of the cone of theta(2); i = 1..4, two-periodic from 3.
PolyMatrix cone_differential(const Glossary& g, int i);

// Composition-to-zero mod f at every junction (augmentation, head, tail
// wrap both orders), matrix-factorization identity of the tail pair over Q,
// minimality of all differentials, and homogeneity under the frames.
std::vector<CheckResult> complex_checks(const PeriodicComplex& cplx, const RingContext& ctx);

// Throws ComplexCheckError / MinimalityError on the first failure.
void verify_or_throw(const PeriodicComplex& cplx, const RingContext& ctx);

// The commuting squares of the lift theta(2) : shifted G(2) -> G(1) and of
// theta(3) : shifted G(3) -> C, over R. Q-arena probes are attached as
// informational results.
std::vector<CheckResult> chain_map_checks(const RingContext& ctx, const Glossary& g);

// Graded Betti table: entries[(i, j)] in homological index i, internal
// degree j. Read off the frames of a minimal homogeneous resolution.
struct BettiTable {
  std::map<std::pair<int, int>, int> entries;
  bool operator==(const BettiTable& other) const = default;
};

// Reads beta_{i,j} from the frames through homological index max_index.
// Throws MinimalityError if a differential has a unit entry.
BettiTable betti_table(const PeriodicComplex& res, int max_index);

// Closed forms for D1, D2, D3 (from the graded-Betti corollaries) and the
// kernel modules S2, S3 (from the generator degrees and periodicity).
BettiTable closed_form_betti(const std::string& target, int d, int max_index);

std::string to_text(const BettiTable& table);

// Computable shadow of the surjectivity in the order-filtration short exact
// sequence: every generator column of M0(2) / M0(3) lifts to an operator
// passing both membership oracles whose top-order block is that column.
std::vector<CheckResult> ses_surjectivity_checks(const RingContext& ctx, const Glossary& g,
                                                 int order);

}  // namespace diffop
