// Value sets of the c-BCT of x^{3^k+1} over F_{3^n}, n = 2..4, next to the
// recorded reference table.
//
//   cboom_sample [k]

#include <iostream>

#include "cboom/atlas.hpp"
#include "cboom/field_spec.hpp"

int main(int argc, char** argv) {
  using namespace cboom;
  const std::uint32_t k = argc > 1 ? static_cast<std::uint32_t>(std::stoul(argv[1])) : 1;
  int mismatches = 0;
  for (std::uint32_t n = 2; n <= 4; ++n) {
    const auto rec = compute_atlas(make_field(3, n), "gold", k);
    std::cout << to_pretty(rec);
    try {
      const auto d = diff_fixture(rec, find_fixture("gold", 3, n, k));
      std::cout << "  reference: " << (d.pass() ? "match" : "MISMATCH") << "\n";
      mismatches += !d.pass();
    } catch (const FixtureNotFound&) {
      std::cout << "  reference: no entry\n";
    }
  }
  return mismatches ? 1 : 0;
}
