// The alternating chirotope on four points: circuits, dual, and a contraction.

#include <iostream>

#include "hypermatroid/constructions.hpp"
#include "hypermatroid/io.hpp"

using namespace hypermatroid;

int main() {
  const Hyperfield s = Hyperfield::signs();
  std::map<Mask, Element> values;
  for_each_k_subset(4, 2, [&](Mask m) { values.emplace(m, s.one()); });
  GPFunction phi(s, GroundSet({"a", "b", "c", "d"}), 2, std::move(values));

  std::cout << "strong check: " << io::report_text(check_strong_gpf(phi));
  std::cout << "\n-- circuits\n" << io::matroid_text(io::matroid_doc(circuits_from_gpf(phi)));
  std::cout << "\n-- dual\n" << io::matroid_text(io::matroid_doc(dual_gpf(phi)));
  std::cout << "\n-- contract a\n" << io::matroid_text(io::matroid_doc(contract_gpf(phi, 0b0001)));
}
