#pragma once

#include <map>
#include <string>
#include <utility>

#include "json.hpp"

namespace fnega {

struct BlockViews;
struct CorrelationMatrix;
struct RegionPartition;

// Connected charge correlators <Q_A^a Q_B^b>_c keyed by (a, b).
class CumulantSet {
 public:
  using Key = std::pair<unsigned, unsigned>;

  bool contains(unsigned a, unsigned b) const { return values_.count({a, b}) > 0; }
  double at(unsigned a, unsigned b) const;
  void set(unsigned a, unsigned b, double v) { values_[{a, b}] = v; }
  void merge(const CumulantSet& other);
  const std::map<Key, double>& values() const { return values_; }

  unsigned max_order() const;
  nlohmann::json to_json() const;  // {"order": M, "values": {"a,b": x}}

 private:
  std::map<Key, double> values_;
};

// Wick trace formulas for the second-order connected correlators:
//   <Q_A^2>_c  = Tr C11 - Tr (C11)^2
//   <Q_AQ_B>_c = -Tr (C12 C21)
//   <Q_B^2>_c  = Tr C22 - Tr (C22)^2
// Returns keys (2,0), (1,1), (0,2).
CumulantSet cumulants_order2(const BlockViews& B);

// Fourth-order trace formulas, keys (4,0), (3,1), (2,2), (1,3), (0,4).
// The mixed (2,2) term uses -4 Tr(C11 C12 C22 C21); the alternative operator
// ordering does not chain dimensionally, and this reading is pinned by exact
// Fock-space cross-validation in the test suite.
CumulantSet cumulants_order4(const BlockViews& B);

// Orders 1+2 (+4): (1,0) = Tr C11 and (0,1) = Tr C22 included.
CumulantSet wick_cumulants(const BlockViews& B, unsigned max_order);

// Independent oracle for arbitrary (a, b), 1 <= a+b <= 8: mixed derivative of
//   K(lA, lB) = log det(I + C_AB (exp(i Lambda) - I))
// at zero via central finite differences (tensor-product stencil, 3-level
// Richardson, extended-precision determinants), divided by i^(a+b).
double generating_function_cumulant(const CorrelationMatrix& C, const RegionPartition& P,
                                    unsigned a, unsigned b);

}  // namespace fnega
