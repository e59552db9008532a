#include "gspec/polynomial.hpp"

namespace gspec {

IntPoly make_int_poly(std::initializer_list<long> ascending) {
  std::vector<Integer> v;
  v.reserve(ascending.size());
  for (long c : ascending) v.emplace_back(c);
  return IntPoly(std::move(v));
}

}  // namespace gspec
