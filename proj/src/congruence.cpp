#include "parablat/congruence.hpp"

#include <algorithm>

#include "parablat/linalg.hpp"

namespace parablat {

IntMatrix sl2_S() { return IntMatrix{{0, -1}, {1, 0}}; }
IntMatrix sl2_T() { return IntMatrix{{1, 1}, {0, 1}}; }

IntMatrix sl2_inverse(const IntMatrix& m) {
  return IntMatrix{{m(1, 1), -m(0, 1)}, {-m(1, 0), m(0, 0)}};
}

IntMatrix reduce_mod(const IntMatrix& m, const Int& N) {
  IntMatrix r = m;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = mod(r(i, j), N);
  return r;
}

std::vector<IntMatrix> sl2_mod(const Int& N) {
  require(N >= 1, "modulus must be positive");
  std::vector<IntMatrix> out;
  for (Int a = 0; a < N; ++a)
    for (Int b = 0; b < N; ++b)
      for (Int c = 0; c < N; ++c)
        for (Int d = 0; d < N; ++d)
          if (mod(a * d - b * c - 1, N) == 0) out.push_back(IntMatrix{{a, b}, {c, d}});
  return out;
}

IntMatrix lift_sl2(const IntMatrix& m, const Int& N) {
  IntMatrix r = reduce_mod(m, N);
  require(mod(r(0, 0) * r(1, 1) - r(0, 1) * r(1, 0) - 1, N) == 0, "matrix does not have determinant 1 mod N");
  if (N == 1) return IntMatrix::identity(2);
  Int c = r(1, 0) == 0 ? N : r(1, 0);
  Int d = r(1, 1);
  while (gcd(c, d) != 1) d += N;
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t(), c.get_mpz_t());
  IntMatrix base{{s, -t}, {c, d}};  // s·d + t·c = 1
  IntMatrix diff = reduce_mod(r * sl2_inverse(base), N);
  ensure(diff(0, 0) == 1 && diff(1, 0) == 0 && diff(1, 1) == 1, "lift correction is not unipotent");
  IntMatrix lifted = IntMatrix{{1, diff(0, 1)}, {0, 1}} * base;
  ensure(reduce_mod(lifted, N) == r && det(lifted) == 1, "SL2 lift failed");
  return lifted;
}

CosetEnumeration coset_enumeration(const std::function<bool(const IntMatrix&)>& member, std::size_t max_cosets) {
  CosetEnumeration out;
  out.representatives.push_back(IntMatrix::identity(2));
  const IntMatrix gens[] = {sl2_S(), sl2_T()};
  auto add_generator = [&](const IntMatrix& g) {
    if (g == IntMatrix::identity(2)) return;
    if (std::find(out.schreier_generators.begin(), out.schreier_generators.end(), g) != out.schreier_generators.end())
      return;
    out.schreier_generators.push_back(g);
  };
  for (std::size_t k = 0; k < out.representatives.size(); ++k) {
    for (const IntMatrix& s : gens) {
      const IntMatrix x = out.representatives[k] * s;
      bool found = false;
      for (const IntMatrix& h : out.representatives) {
        const IntMatrix q = x * sl2_inverse(h);
        if (member(q)) {
          add_generator(q);
          found = true;
          break;
        }
      }
      if (!found) {
        require(out.representatives.size() < max_cosets, "coset enumeration exceeded its limit");
        out.representatives.push_back(x);
      }
    }
  }
  return out;
}

std::size_t count_mod(const Int& N, const std::function<bool(const IntMatrix&)>& pred) {
  std::size_t n = 0;
  for (const IntMatrix& m : sl2_mod(N))
    if (pred(m)) ++n;
  return n;
}

}  // namespace parablat
