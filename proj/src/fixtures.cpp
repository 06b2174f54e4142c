#include "parablat/fixtures.hpp"

#include <algorithm>
#include <cctype>

namespace parablat {

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  IntMatrix g(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    g.set_block(off, off, b);
    off += b.rows();
  }
  return g;
}

IntMatrix gram_H() { return IntMatrix{{0, 1}, {1, 0}}; }
IntMatrix gram_H2() { return IntMatrix{{0, 2}, {2, 0}}; }
IntMatrix gram_A1() { return IntMatrix{{2}}; }
IntMatrix gram_A2() { return IntMatrix{{2, 1}, {1, 2}}; }
IntMatrix gram_G3() { return IntMatrix{{0, 2, 0}, {2, 0, 1}, {0, 1, 2}}; }

Sublattice coordinate_sublattice(std::size_t n, const std::vector<std::size_t>& indices) {
  RatMatrix b(n, indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) b(indices[j], j) = 1;
  return Sublattice(b);
}

std::vector<Fixture> all_fixtures() {
  auto make = [](std::string key, IntMatrix gram, std::vector<std::size_t> iso) {
    std::string file = key;
    std::transform(file.begin(), file.end(), file.begin(), [](unsigned char c) { return std::tolower(c); });
    const std::size_t n = gram.rows();
    return Fixture{key, file, EvenLattice(key, std::move(gram)), coordinate_sublattice(n, iso)};
  };
  return {
      make("FIX-H", gram_H(), {0}),
      make("FIX-G3", gram_G3(), {0}),
      make("FIX-L5", block_diagonal({gram_H(), gram_H(), gram_A1()}), {0, 2}),
      make("FIX-L5b", block_diagonal({gram_H2(), gram_H(), gram_A1()}), {0, 2}),
      make("FIX-L7", block_diagonal({gram_H(), gram_H(), gram_A2()}), {0, 2}),
      make("FIX-G5", block_diagonal({gram_G3(), gram_H()}), {0, 3}),
  };
}

Fixture fixture(std::string_view key) {
  std::string want(key);
  std::transform(want.begin(), want.end(), want.begin(), [](unsigned char c) { return std::tolower(c); });
  for (auto& f : all_fixtures())
    if (f.filename == want) return f;
  throw InputError("unknown fixture '" + std::string(key) + "'");
}

}  // namespace parablat
