// Class multiplication coefficients of Alt(5), from the character table and by
// counting, plus the permutation character on five points.

#include <iostream>

#include "engel/class_algebra.hpp"

int main() {
  using namespace engel;
  const Group G = alternating_group(5);
  const auto T = load_character_table(std::string(ENGEL_DATA_DIR) + "/chartab/a5.ct");
  const auto map = match_classes(G, T);

  const std::size_t k = T.class_count();
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      std::cout << T.classes[i].name << " * " << T.classes[j].name << " =";
      for (std::size_t v = 0; v < k; ++v) {
        const auto a = class_constant_formula(T, i, j, v);
        if (a == 0) continue;
        std::cout << " " << a << "*" << T.classes[v].name;
        if (Rational(class_constant_bruteforce(G, map[i], map[j], map[v])) != a) std::cout << "(!)";
      }
      std::cout << "\n";
    }

  auto pi = perm_character(G, point_stabilizer(G, 0));
  decompose(pi, T, map);
  std::cout << "1_H^G on 5 points:";
  for (const auto& m : pi.multiplicities) std::cout << " " << m;
  std::cout << "  <pi,pi> = " << *pi.norm << "\n";
}
