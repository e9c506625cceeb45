#include "mebf/simulate.hpp"

#include <stdexcept>

namespace mebf {

void SimulationSpec::validate() const {
  if (n < 1 || m < 1) throw std::invalid_argument("simulation: n and m must be at least 1");
  if (k < 1) throw std::invalid_argument("simulation: k must be at least 1");
  if (!(p0 >= 0.0 && p0 <= 1.0)) throw std::invalid_argument("simulation: p0 must lie in [0,1]");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("simulation: p must lie in [0,1]");
}

namespace {

BinaryMatrix sample(BernoulliStream& rng, std::size_t rows, std::size_t cols, double rate) {
  BinaryMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (rng.draw(rate)) out.set(i, j);
  return out;
}

}  // namespace

SimulatedInstance simulate(const SimulationSpec& spec) {
  spec.validate();
  BernoulliStream rng(spec.seed);
  SimulatedInstance inst;
  inst.U = sample(rng, spec.n, spec.k, spec.p0);
  inst.V = sample(rng, spec.k, spec.m, spec.p0);
  inst.E = sample(rng, spec.n, spec.m, spec.p);
  inst.X = elementwise(BoolOp::Xor, bool_product(inst.U, inst.V), inst.E);
  return inst;
}

}  // namespace mebf
