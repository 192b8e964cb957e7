// Coproduct and antipode of a few Krasner matroids in the minor Hopf algebra.

#include <iostream>

#include "hypermatroid/enumerate.hpp"
#include "hypermatroid/hopf.hpp"
#include "hypermatroid/io.hpp"

using namespace hypermatroid;

int main() {
  const Hyperfield k = Hyperfield::krasner();
  HopfAlgebra alg(k);
  for (auto [r, n] : {std::pair{1, 1}, {1, 2}, {2, 3}}) {
    std::map<Mask, Element> values;
    for_each_k_subset(n, r, [&](Mask m) { values.emplace(m, k.one()); });
    AlgebraElement x = alg.element(GPFunction(k, numbered_ground(n), r, std::move(values)));
    std::cout << "U(" << r << "," << n << ")\n  coproduct:\n" << io::tensor_text(alg.coproduct(x))
              << "  antipode:\n" << io::algebra_text(alg.antipode_takeuchi(x)) << "\n";
  }
}
