// Cost arithmetic: exact formulas, lower bounds and parity rules for the
// minimal number of stabilizations connecting two Legendrian classes.
// Everything here works on invariant pairs only; realizability and
// simpleness of the underlying knot types are the caller's responsibility
// (see knot_types), and searches over actual fronts live in isotopy.

#pragma once

#include <optional>
#include <string>

#include "legfront/front.hpp"

namespace legfront {

// === results =================================================================

// Exact value, closed interval, or bare lower bound, with a note naming the
// rule (or search) that produced it.
struct CostResult {
  enum class Kind : uint8_t { Exact, Interval, LowerBound };

  Kind kind = Kind::Exact;
  long long lo = 0;  // Exact: the value; LowerBound: the bound
  long long hi = 0;  // Interval only; equals lo otherwise
  std::string provenance;

  static CostResult exact(long long value, std::string provenance);
  static CostResult interval(long long lo, long long hi,
                             std::string provenance);
  static CostResult lower_bound(long long bound, std::string provenance);

  bool is_exact() const { return kind == Kind::Exact; }
  long long value() const { return lo; }

  friend bool operator==(const CostResult&, const CostResult&) = default;
};

// {"kind": "Exact", "value": v} / {"kind": "Interval", "range": [lo, hi]} /
// {"kind": "LowerBoundOnly", "bound": b}, each with "provenance".
std::string cost_result_to_json(const CostResult& r, int indent = -1);
CostResult cost_result_from_json(const std::string& text);

// === bounds and parity =======================================================

// Universal lower bound: every stabilization moves tb by -1 and rot by +-1,
// so no path between the classes is shorter than max{|dtb|, |drot|}.
long long cost_lower_bound(const ClassicalInvariants& a,
                           const ClassicalInvariants& b);

// A length-c stabilization path between the classes must change tb by
// exactly c in total split across the two sides, so c == |dtb| (mod 2) —
// in particular, equal tb forces even cost. Requires c >= 0.
bool cost_parity_ok(const ClassicalInvariants& a, const ClassicalInvariants& b,
                    long long c);

// === exact formulas ==========================================================

// Exact cost between classes of one Legendrian-simple knot type:
// max{|dtb|, |drot|}. Both classes must belong to the same simple type and
// be realized; this function does not check that.
long long cost_simple(const ClassicalInvariants& a,
                      const ClassicalInvariants& b);

// Exact cost between adjacent twist-knot fronts E_{k,l} and E_{k+1,l-1}:
// 0 when k = l-1 (the two are Legendrian isotopic), else 2.
// Requires k >= 1, l >= 2 and k + l >= 4.
long long twist_adjacent_cost(long long k, long long l);

// Exact cost between connected sums that differ by recorded stabilizations:
// if one summand pair is (S+)^p(S-)^n apart and the other (S+)^q(S-)^m
// apart (different topological types), the cost is |p-q| + |n-m|.
// Same-direction stabilizations add up: encode them as (p+q', n+m', 0, 0).
// Requires all inputs >= 0.
long long cost_stab_related(long long p, long long n, long long q,
                            long long m);

// Cost between K1#K2 and L1#L2 where each factor pair costs 2*r_i via
// max-tb representatives of two different simple types. When both rot
// sequences run in the same order the costs add: Exact(2*r1 + 2*r2).
// Opposite order leaves only bounds: Interval(2*|r1 - r2|, 2*max{r1, r2}).
// Requires r1, r2 >= 0.
CostResult cost_maxtb_sum(long long r1, long long r2, bool same_rot_order);

// Upper bound for the cost between connected sums from the factor costs:
// min of c11 + c22 and, when both cross terms are known (factors of the
// same type can be matched either way), c12 + c21.
long long cost_sum_upper(long long c11, long long c22,
                         std::optional<long long> c12 = std::nullopt,
                         std::optional<long long> c21 = std::nullopt);

}  // namespace legfront
