// Prints a few hypersums in each built-in hyperfield.

#include <iostream>

#include "hypermatroid/hyperfield.hpp"

using namespace hypermatroid;

int main() {
  const Hyperfield k = Hyperfield::krasner(), s = Hyperfield::signs(), t = Hyperfield::tropical(), p = Hyperfield::phase();
  auto show = [](const Hyperfield& h, const char* a, const char* b) {
    std::cout << h.name() << ": " << a << " + " << b << " = " << h.describe(h.add(h.parse(a), h.parse(b))) << "\n";
  };
  show(k, "1", "1");
  show(s, "1", "-1");
  show(s, "1", "1");
  show(t, "2", "3");
  show(t, "5/2", "5/2");
  show(p, "turn:0", "turn:1/4");
  show(p, "turn:0", "turn:1/2");
  std::cout << "signs table passes the axioms: " << std::boolalpha
            << verify_hyperfield_axioms(Hyperfield::from_table(to_table(s))).pass() << "\n";
}
