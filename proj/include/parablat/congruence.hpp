#pragma once

#include <functional>
#include <vector>

#include "parablat/matrix.hpp"

namespace parablat {

IntMatrix sl2_S();
IntMatrix sl2_T();
IntMatrix sl2_inverse(const IntMatrix& m);

// All matrices in SL2(Z/N) with entries in [0, N).
std::vector<IntMatrix> sl2_mod(const Int& N);
// A preimage in SL2(Z) of a matrix with determinant 1 mod N.
IntMatrix lift_sl2(const IntMatrix& m, const Int& N);
IntMatrix reduce_mod(const IntMatrix& m, const Int& N);

// Right cosets Γ\SL2(Z) of a finite-index subgroup given by a membership test,
// found by closing {Γ} under right multiplication by S and T.
struct CosetEnumeration {
  std::vector<IntMatrix> representatives;
  std::vector<IntMatrix> schreier_generators;  // generate Γ; identities dropped, deduplicated
  std::size_t index() const { return representatives.size(); }
};
CosetEnumeration coset_enumeration(const std::function<bool(const IntMatrix&)>& member,
                                   std::size_t max_cosets = 5000);

// #{x in SL2(Z/N) : pred(x)} where pred sees the reduced matrix.
std::size_t count_mod(const Int& N, const std::function<bool(const IntMatrix&)>& pred);

}  // namespace parablat
