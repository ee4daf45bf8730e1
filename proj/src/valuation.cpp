#include "lucasforge/valuation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace lucasforge {

long atom_multiplicity(long n, long d, long k) {
  if (n < 0) throw IndexOutOfRange("atom_multiplicity: negative factorial index");
  if (d < 2) throw IndexOutOfRange("atom_multiplicity: atoms are indexed from d = 2");
  if (k < 1) throw IndexOutOfRange("atom_multiplicity: k must be >= 1");
  long m = d / std::gcd(d, k);
  return n / m;
}

ValuationReport factorial_quotient_report(const std::vector<long>& nums,
                                          const std::vector<long>& dens, long k) {
  if (k < 1) throw IndexOutOfRange("factorial_quotient_report: k must be >= 1");
  for (long i : nums)
    if (i < 0) throw IndexOutOfRange("factorial_quotient_report: negative numerator index");
  for (long j : dens)
    if (j < 0) throw IndexOutOfRange("factorial_quotient_report: negative denominator index");

  ValuationReport report;
  report.numerator_indices = nums;
  report.denominator_indices = dens;
  report.k = k;

  long top = 0;
  for (long i : nums) top = std::max(top, i);
  for (long j : dens) top = std::max(top, j);
  // The divisibility criterion quantifies over every atom index d >= 2;
  // indices up to top contribute Lucas polynomials up to {top*k}, so that is
  // where the scan stops.
  for (long d = 2; d <= top * k; ++d) {
    ValuationRow row{d, 0, 0};
    for (long i : nums) row.num_exponent += atom_multiplicity(i, d, k);
    for (long j : dens) row.den_exponent += atom_multiplicity(j, d, k);
    if (row.num_exponent < row.den_exponent) report.verdict = false;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace lucasforge
