#pragma once
// Atom-valuation arithmetic for Lucas factorial quotients. The exponent of
// the atom P_d in {n}! is floor(n/d); in the k-divisible factorial {n:k}! it
// is floor(n/M) with M = d/gcd(d,k). Comparing summed exponents decides
// polynomiality of a quotient of factorial products without touching a
// single polynomial.

#include <vector>

#include "lucasforge/errors.hpp"

namespace lucasforge {

// Exponent of P_d in {n:k}!, i.e. floor(n / (d/gcd(d,k))). k = 1 gives the
// plain Lucas factorial rule floor(n/d).
long atom_multiplicity(long n, long d, long k = 1);

struct ValuationRow {
  long d = 0;
  long num_exponent = 0;  // a_d: summed over the numerator indices
  long den_exponent = 0;  // b_d: summed over the denominator indices
};

struct ValuationReport {
  std::vector<long> numerator_indices;
  std::vector<long> denominator_indices;
  long k = 1;
  std::vector<ValuationRow> rows;  // every d from 2 up to k * max(index)
  bool verdict = true;             // a_d >= b_d for every row
};

// Atomic decomposition of prod {n_i:k}! / prod {k_j:k}!. The quotient is a
// polynomial iff the verdict is true.
ValuationReport factorial_quotient_report(const std::vector<long>& nums,
                                          const std::vector<long>& dens, long k = 1);

}  // namespace lucasforge
