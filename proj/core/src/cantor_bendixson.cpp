#include "realreg/analysis.hpp"
#include "realreg/error.hpp"

namespace realreg {

ExpSumDescription cb_derivative(const ExpSumDescription& e) {
  ExpSumDescription out{e.base, e.arity, {}};
  for (const auto& chain : e.chains)
    for (std::size_t j = 1; j < chain.depth(); ++j) out.chains.push_back(chain.truncated(j));
  return canonicalize(std::move(out));
}

std::size_t cb_rank(const ExpSumDescription& e) {
  std::size_t rank = 0;
  ExpSumDescription current = e;
  while (!current.empty()) {
    current = cb_derivative(current);
    ++rank;
  }
  return rank;
}

std::optional<RationalVec> isolated_point(const ExpSumDescription& e) {
  if (e.empty()) return std::nullopt;
  const auto derivative = cb_derivative(e);
  for (std::size_t depth = 0; depth <= 8; ++depth)
    for (const auto& p : enumerate_points(e, depth))
      if (!contains(derivative, p)) return p;
  return std::nullopt;
}

}  // namespace realreg
