#pragma once

#include <memory>

#include "singvec/singular_vectors.hpp"

namespace test {

using namespace singvec;

inline std::shared_ptr<const AlgebraData> algebra(Family f, int m = 0, int n = 0) {
  return std::make_shared<const AlgebraData>(build_algebra_data(CaseId{f, m, n}));
}

inline std::shared_ptr<const BracketTable> table(Family f, int m = 0, int n = 0) {
  return std::make_shared<const BracketTable>(build_structure_constants(algebra(f, m, n)));
}

inline std::shared_ptr<PBWAlgebra> engine(std::shared_ptr<const BracketTable> t) {
  return std::make_shared<PBWAlgebra>(t, PBWOrder::standard(*t));
}

inline Weight W(std::initializer_list<Rational> xs) { return Weight(std::vector<Rational>(xs)); }

inline Rational Q(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace test
