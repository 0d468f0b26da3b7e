#include "legfront/cost.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace legfront {

// === results =================================================================

CostResult CostResult::exact(long long value, std::string provenance) {
  if (value < 0) throw std::invalid_argument("cost cannot be negative");
  return {Kind::Exact, value, value, std::move(provenance)};
}

CostResult CostResult::interval(long long lo, long long hi,
                                std::string provenance) {
  if (lo < 0 || hi < lo) throw std::invalid_argument("bad cost interval");
  return {Kind::Interval, lo, hi, std::move(provenance)};
}

CostResult CostResult::lower_bound(long long bound, std::string provenance) {
  if (bound < 0) throw std::invalid_argument("cost cannot be negative");
  return {Kind::LowerBound, bound, bound, std::move(provenance)};
}

std::string cost_result_to_json(const CostResult& r, int indent) {
  nlohmann::json j;
  switch (r.kind) {
    case CostResult::Kind::Exact:
      j = {{"kind", "Exact"}, {"value", r.lo}};
      break;
    case CostResult::Kind::Interval:
      j = {{"kind", "Interval"}, {"range", {r.lo, r.hi}}};
      break;
    case CostResult::Kind::LowerBound:
      j = {{"kind", "LowerBoundOnly"}, {"bound", r.lo}};
      break;
  }
  j["provenance"] = r.provenance;
  return j.dump(indent);
}

CostResult cost_result_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const std::string kind = j.at("kind").get<std::string>();
  const std::string prov = j.value("provenance", "");
  if (kind == "Exact")
    return CostResult::exact(j.at("value").get<long long>(), prov);
  if (kind == "Interval")
    return CostResult::interval(j.at("range").at(0).get<long long>(),
                                j.at("range").at(1).get<long long>(), prov);
  if (kind == "LowerBoundOnly")
    return CostResult::lower_bound(j.at("bound").get<long long>(), prov);
  throw std::invalid_argument("unknown cost result kind: " + kind);
}

// === bounds and parity =======================================================

long long cost_lower_bound(const ClassicalInvariants& a,
                           const ClassicalInvariants& b) {
  return std::max(std::llabs(a.tb - b.tb), std::llabs(a.rot - b.rot));
}

bool cost_parity_ok(const ClassicalInvariants& a, const ClassicalInvariants& b,
                    long long c) {
  if (c < 0) throw std::invalid_argument("cost cannot be negative");
  return ((c - std::llabs(a.tb - b.tb)) & 1) == 0;
}

// === exact formulas ==========================================================

long long cost_simple(const ClassicalInvariants& a,
                      const ClassicalInvariants& b) {
  return cost_lower_bound(a, b);
}

long long twist_adjacent_cost(long long k, long long l) {
  if (k < 1 || l < 2 || k + l < 4)
    throw std::invalid_argument("twist_adjacent_cost needs k >= 1, l >= 2, "
                                "k + l >= 4");
  return k == l - 1 ? 0 : 2;
}

long long cost_stab_related(long long p, long long n, long long q,
                            long long m) {
  if (p < 0 || n < 0 || q < 0 || m < 0)
    throw std::invalid_argument("stabilization counts cannot be negative");
  return std::llabs(p - q) + std::llabs(n - m);
}

CostResult cost_maxtb_sum(long long r1, long long r2, bool same_rot_order) {
  if (r1 < 0 || r2 < 0)
    throw std::invalid_argument("factor costs cannot be negative");
  if (same_rot_order)
    return CostResult::exact(2 * (r1 + r2), "max-tb sum, aligned rot order");
  return CostResult::interval(2 * std::llabs(r1 - r2), 2 * std::max(r1, r2),
                              "max-tb sum, opposed rot order");
}

long long cost_sum_upper(long long c11, long long c22,
                         std::optional<long long> c12,
                         std::optional<long long> c21) {
  long long best = c11 + c22;
  if (c12 && c21) best = std::min(best, *c12 + *c21);
  return best;
}

}  // namespace legfront
