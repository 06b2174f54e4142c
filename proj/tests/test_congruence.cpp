#include "doctest.h"
#include "parablat/congruence.hpp"
#include "parablat/linalg.hpp"

using namespace parablat;

TEST_CASE("orders of SL2(Z/N)") {
  CHECK(sl2_mod(2).size() == 6);
  CHECK(sl2_mod(3).size() == 24);
  CHECK(sl2_mod(4).size() == 48);
  CHECK(sl2_mod(5).size() == 120);
}

TEST_CASE("S and T") {
  const IntMatrix S = sl2_S(), T = sl2_T();
  CHECK(det(S) == 1);
  CHECK(det(T) == 1);
  CHECK(S * S == -IntMatrix::identity(2));
  const IntMatrix ST = S * T;
  CHECK(ST * ST * ST == -IntMatrix::identity(2));
  CHECK(sl2_inverse(T) * T == IntMatrix::identity(2));
}

TEST_CASE("lifting from SL2(Z/N)") {
  for (const Int N : {Int(2), Int(4), Int(6), Int(7)})
    for (const IntMatrix& m : sl2_mod(N)) {
      const IntMatrix lift = lift_sl2(m, N);
      CHECK(det(lift) == 1);
      CHECK(reduce_mod(lift, N) == m);
    }
}

TEST_CASE("coset enumeration") {
  auto gamma0 = [](const Int& N) {
    return [N](const IntMatrix& m) { return mod(m(1, 0), N) == 0; };
  };
  CHECK(coset_enumeration(gamma0(2)).index() == 3);
  CHECK(coset_enumeration(gamma0(3)).index() == 4);
  CHECK(coset_enumeration(gamma0(4)).index() == 6);
  auto gamma1_4 = [](const IntMatrix& m) { return mod(m(1, 0), 4) == 0 && mod(m(0, 0), 4) == 1; };
  const CosetEnumeration c = coset_enumeration(gamma1_4);
  CHECK(c.index() == 12);
  for (const IntMatrix& g : c.schreier_generators) CHECK(gamma1_4(g));
  CHECK(coset_enumeration([](const IntMatrix&) { return true; }).index() == 1);
  CHECK(count_mod(4, [](const IntMatrix& m) { return m(1, 0) == 0; }) == 8);
}
