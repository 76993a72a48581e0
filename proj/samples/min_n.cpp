// Smallest n with Gamma_n(G) strongly connected for a few small groups,
// next to the tabulated value.
//
//   ./sample_min_n            # default list
//   ./sample_min_n "psl2 19"  # any group specification

#include <iostream>

#include "engel/group_spec.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> specs{"alt 5", "alt 6", "psl2 7", "psl2 11", "m10"};
  if (argc > 1) specs.assign(argv + 1, argv + argc);
  for (const auto& text : specs) {
    const auto spec = engel::parse_group_spec(text);
    const auto G = engel::build_group(spec, ENGEL_DATA_DIR);
    const auto r = engel::min_strong_n(G);
    const auto pred = engel::predict_for(spec);
    std::cout << spec.label() << " |G|=" << G.order() << "  min n: "
              << (r.outcome == engel::MinNOutcome::Found ? std::to_string(r.n) : engel::to_string(r.outcome))
              << "  table: " << (pred ? pred->value_string() : "-") << "\n";
  }
}
