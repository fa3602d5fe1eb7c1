// Walks through J^1(O(l)) on P^1: classes agree, splittings differ.
#include "jetk/jetk.hpp"

#include <iostream>

int main() {
  using namespace jetk;
  for (std::int64_t l = 0; l <= 4; ++l) {
    const auto left = birkhoff_split(jet_transition(l, Side::left));
    const auto right = birkhoff_split(jet_transition(l, Side::right));
    const KClass cls = evaluate(parse("J1(O(" + std::to_string(l) + "), left)"), 1);
    std::cout << "l=" << l << "  left " << left.to_string() << "  right " << right.to_string() << "  [J] = "
              << cls.to_string() << "  a(O(l)) = " << to_decimal(atiyah_class_p1(l)) << "\n";
  }
  std::cout << "\n" << emit_text(prove_non_isomorphic(3, 2));
}
