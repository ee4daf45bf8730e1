#pragma once
// Executable verification of the identity catalog: the Fibonacci and Lucas
// lemma/theorem/corollary chain, the polynomiality claims (checked three
// independent ways: exact division, coefficient signs, atom valuations), the
// special-case reductions, the classical convolution identities, and a
// bounded search for Fibonacci analogues of the convolution identities.
//
// Every check produces an IdentityReport whose verdict is the equality of
// two canonical texts. Reports carry an expected verdict so that the checks
// the source material predicts to fail (the "expected-negative" contrasts)
// count as passing exactly when they fail.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lucasforge/fib.hpp"
#include "lucasforge/lucas.hpp"
#include "lucasforge/valuation.hpp"

namespace lucasforge {

using ParamList = std::vector<std::pair<std::string, long>>;

struct IdentityReport {
  std::string id;
  ParamList params;
  std::string lhs;
  std::string rhs;
  bool verdict = false;
  bool expected = true;
  std::string note;

  bool passed() const noexcept { return verdict == expected; }
};

struct SuiteReport {
  std::vector<IdentityReport> reports;  // sorted by id, then parameter values
  long passed = 0;
  long failed = 0;
  std::vector<std::pair<std::string, double>> family_seconds;
};

struct AxisRange {
  long lo = 0;
  long hi = -1;  // inclusive; hi < lo means empty
  bool empty() const noexcept { return hi < lo; }
};

struct FamilySpec {
  std::string id;
  std::vector<std::pair<std::string, AxisRange>> axes;
};

struct SuiteConfig {
  int jobs = 1;
  int lucas_max_index = kLucasDefaultMaxIndex;
  std::vector<FamilySpec> families;

  // Every family at its full verification grid.
  static SuiteConfig defaults();
};

// Registry: known family ids in canonical order, and the default axes of one
// family (throws Error for an unknown id).
const std::vector<std::string>& identity_family_ids();
FamilySpec default_family_spec(const std::string& id);

struct IdentityContext {
  const FibCache& fib;
  const LucasCache& lucas;
};

// --- Fibonacci-level identities ---
IdentityReport verify_lemma_fib(const IdentityContext& ctx, long n);
IdentityReport verify_main_fib(const IdentityContext& ctx, long n);
IdentityReport verify_corollary_fib(const IdentityContext& ctx, long n);
// The classical (1/(n+2)) binom(2n+1,n) integrality probe; expected to fail
// at n = 2 and only there.
IdentityReport verify_classical_contrast(long n);

// --- Lucas-level identities (each also checks its own s=t=1 specialization
// against the Fibonacci layer) ---
IdentityReport verify_lemma_lucas(const IdentityContext& ctx, long n);
IdentityReport verify_main_lucas(const IdentityContext& ctx, long n);
IdentityReport verify_corollary_lucas(const IdentityContext& ctx, long n);
IdentityReport verify_lucas_doubling(const IdentityContext& ctx, long n);

// --- classical convolution identities ---
IdentityReport verify_von_szily(long m, long n);
IdentityReport verify_mikic_super(long n, long l);
IdentityReport verify_mikic_catalan(long n);

// --- polynomiality with three-route agreement: exact division vs atom
// valuation (including reconstruction of the quotient as an atom product)
// vs coefficient nonnegativity ---
IdentityReport verify_poly_super_lucas(const IdentityContext& ctx, long m, long n);
IdentityReport verify_poly_generalized_lucas(const IdentityContext& ctx, long r, long n);
IdentityReport verify_poly_kdiv_super(const IdentityContext& ctx, long m, long n, long k);

// All three polynomiality families over their full grids (S{m,n} with
// m,n <= 12, the generalized analogue with r <= 6, n <= 12, and S{m,n:k}
// with m,n <= 8, k <= 4).
SuiteReport verify_polynomiality_theorems(int jobs = 1,
                                          int lucas_max_index = kLucasDefaultMaxIndex);

// --- special-case reductions (one report per sub-identity) ---
std::vector<IdentityReport> verify_special_fib(const IdentityContext& ctx, long n);
std::vector<IdentityReport> verify_special_lucas(const IdentityContext& ctx, long n);

// Product of atoms over the divisors of n reproduces {n}, and its value at
// (1,1) is F_n.
IdentityReport verify_atom_factorization(const IdentityContext& ctx, long n);

// --- bounded conjecture search (makes no truth claim beyond the grid) ---
struct SearchOutcome {
  std::string template_id;
  std::string weight_id;
  std::vector<std::pair<std::string, AxisRange>> ranges;
  std::vector<ParamList> holding;
  std::vector<std::pair<ParamList, BigInt>> residuals;  // lhs - rhs at failures
};

const std::vector<std::string>& search_template_ids();
const std::vector<std::string>& search_weight_ids();

// template_id in {von-szily-f, mikic-super-f, mikic-catalan-f}; weight_id in
// {alt, alt-tri, alt-sq, alt-binom2}. Underscores and case in the ids are
// normalized. Throws UnknownTemplate / UnknownWeightFamily.
SearchOutcome search_fib_analogue(const IdentityContext& ctx, const std::string& template_id,
                                  const std::string& weight_id,
                                  const std::vector<std::pair<std::string, AxisRange>>& ranges);

// Runs the configured families (possibly concurrently) and returns reports
// in deterministic order: lexicographic by id, then by parameter values.
SuiteReport run_suite(const SuiteConfig& config);

}  // namespace lucasforge
