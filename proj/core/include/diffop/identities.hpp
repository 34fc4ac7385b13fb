#pragma once

#include <string>
#include <vector>

#include "diffop/check.hpp"
#include "diffop/glossary.hpp"
#include "diffop/ring_context.hpp"

namespace diffop {

// Executable identity catalog, organized into the suites A (Euler and
// Cramer-type polynomial identities), B (Hamiltonian identities), C
// (relations among kernel-module generators), D (matrix identities), and
// EF (lifting-square lemmas). Failures keep the residual for diagnosis,
// so this doubles as the regression harness for the glossary tables.
std::vector<CheckResult> run_appendix_A(const RingContext& ctx);
std::vector<CheckResult> run_appendix_B(const RingContext& ctx);
std::vector<CheckResult> run_appendix_C(const RingContext& ctx, const Glossary& g);
std::vector<CheckResult> run_appendix_D(const RingContext& ctx, const Glossary& g);
std::vector<CheckResult> run_appendix_EF(const RingContext& ctx, const Glossary& g);

// Consistency of a (possibly mutated) glossary table against a fresh
// rebuild from the context; catches any single-entry perturbation.
std::vector<CheckResult> run_glossary_consistency(const RingContext& ctx, const Glossary& g);

// Expected number of normative (non-informational) checks per suite;
// the manifest test pins these so removing a check is loud.
struct SuiteManifest {
  std::size_t appendix_A;
  std::size_t appendix_B;
  std::size_t appendix_C;
  std::size_t appendix_D;
  std::size_t appendix_EF;
};
SuiteManifest expected_manifest();

}  // namespace diffop
