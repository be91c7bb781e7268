#include "trigroup/reduction.hpp"

namespace trigroup {

bool is_root(const Quadruple& q) {
  const Integer s = q.sum();
  for (int i = 1; i <= 4; ++i)
    if (apply_generator(q, GeneratorIndex(i)).sum() < s) return false;
  return true;
}

std::optional<std::pair<Quadruple, GeneratorIndex>> reduce_step(const Quadruple& q) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < 4; ++k)
    if (q[k] > q[best]) best = k;
  GeneratorIndex g(static_cast<int>(best) + 1);
  Quadruple next = apply_generator(q, g);
  if (next.sum() >= q.sum()) return std::nullopt;
  return std::make_pair(std::move(next), g);
}

ReductionTrace reduce_to_root(const Quadruple& q) {
  ReductionTrace trace{q, {}, q};
  while (auto step = reduce_step(trace.root)) {
    trace.steps.push_back({step->second, step->first});
    trace.root = std::move(step->first);
  }
  return trace;
}

Integer gcd_content(const Quadruple& q) {
  Integer g = 0;
  for (const auto& v : q.entries()) g = gcd(g, v);
  return g;
}

bool is_primitive(const Quadruple& q) { return gcd_content(q) == 1; }

bool same_orbit(const Quadruple& q1, const Quadruple& q2) { return gcd_content(q1) == gcd_content(q2); }

bool same_ordered_orbit(const Quadruple& q1, const Quadruple& q2) {
  return reduce_to_root(q1).root == reduce_to_root(q2).root;
}

Quadruple replay_from_root(const ReductionTrace& trace) {
  Quadruple q = trace.root;
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) q = apply_generator(q, it->generator);
  return q;
}

}  // namespace trigroup
