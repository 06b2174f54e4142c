#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "parablat/boundary.hpp"
#include "parablat/fixtures.hpp"

namespace parablat::checks {

// ---- oracles: recomputations that avoid the frame machinery where possible

bool oracle_in_L(const RatVector& v);
bool oracle_in_Lstar(const EvenLattice& L, const RatVector& v);
// U ∩ L* found by scanning I-coordinates with denominator |det G|.
Sublattice oracle_i_lstar(const EvenLattice& L, const Sublattice& I);
// v ∈ L*_I iff v ∈ L* pairs integrally with U ∩ L*.
bool oracle_in_LstarI(const EvenLattice& L, const Sublattice& i_lstar, const RatVector& v);

// Class of the W̃-component of λ, obtained by solving the pairing equations
// against I and the complement directly.
struct GlueSample {
  RatVector lambda;
  RatVector w;        // W̃-component
  RatVector utilde;   // Ũ-component
  bool w_in_lattice;  // w ∈ Z^n, i.e. trivial class
  Rat q_w;            // w²/2 mod Z
  Rat q_utilde;       // ũ²/2 mod Z
};
GlueSample oracle_glue(const EvenLattice& L, const RatMatrix& i_basis, const RatMatrix& complement_basis,
                       const RatVector& lambda);

// Tries every hom Ĩ → Δ_Λ on the complement basis and tests whether one restricts to ι.
bool oracle_iota_class_trivial(const IsotropicFrame& F);

// Direct Γ_{L,I} test of an n×n matrix without the spinor shortcut machinery:
// integrality, isometry, trivial on Δ_L, stabilizes U, and identity component
// via the reflection factorization of A itself and det(A|_U) > 0.
bool oracle_gamma_LI(const RatMatrix& a, const IsotropicFrame& F);

// ---- sampling

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  std::mt19937_64& rng() { return rng_; }

  long uniform(long lo, long hi);  // inclusive
  Rat rational(long max_num, long max_den);
  RatMatrix rational_matrix(std::size_t rows, std::size_t cols, long max_num, long max_den);
  RatMatrix antisymmetric(std::size_t r, long max_num, long max_den);
  IntMatrix integer_matrix(std::size_t rows, std::size_t cols, long bound);
  RatMatrix invertible(std::size_t r, long max_num, long max_den);
  IntMatrix sl_word(std::size_t r, std::size_t length);  // product of elementary matrices
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<long>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 rng_;
};

// Everything a randomized suite needs to know about one frame, computed once.
struct FrameContext {
  std::string key;
  IsotropicFrame frame;
  std::vector<IntMatrix> o_lambda;      // all of O(Λ)
  std::vector<IntMatrix> gamma_lambda;  // Γ_Λ
  std::vector<IntMatrix> lstar_gens;    // generators of SL(I_{L*}, I)
  std::vector<IntMatrix> iota_gens;     // generators of SL(I_ι, I)

  static FrameContext make(const std::string& key, const IsotropicFrame& F);
  RatMatrix random_lstar_element(Sampler& s, std::size_t length) const;
  RatMatrix random_iota_element(Sampler& s, std::size_t length) const;
  RatMatrix random_gamma(Sampler& s) const;   // from Γ_Λ
  RatMatrix random_o_lambda(Sampler& s) const;
  ParabolicCoords random_coords(Sampler& s) const;  // generic rational coordinates
  HeisenbergElement random_zheis(Sampler& s) const;
  ParabolicCoords random_member(Sampler& s) const;
  // Member with exactly one of the conditions (i)–(iv) broken; nullopt when
  // the frame admits no such perturbation.
  std::optional<ParabolicCoords> near_miss(Sampler& s, int condition) const;
  Sublattice random_complement(Sampler& s) const;
};

std::vector<FrameContext> fixture_contexts();

// ---- suites

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteOptions {
  std::uint64_t seed = 20240611;
  double scale = 1.0;  // multiplies every sample count
  std::size_t count(std::size_t base) const;
};

CheckResult acceptance_1_decomposition(const SuiteOptions& o);
CheckResult acceptance_2_iota(const SuiteOptions& o);
CheckResult acceptance_3_membership(const SuiteOptions& o);
CheckResult acceptance_4_heisenberg(const SuiteOptions& o);
CheckResult acceptance_5_cocycle(const SuiteOptions& o);
CheckResult acceptance_6_splitting(const SuiteOptions& o);
CheckResult acceptance_7_spinor(const SuiteOptions& o);
CheckResult acceptance_8_boundary(const SuiteOptions& o);
CheckResult acceptance_9_complement(const SuiteOptions& o);

std::vector<CheckResult> acceptance_suite(const SuiteOptions& o);
// Acceptance criteria plus the remaining per-module invariants.
std::vector<CheckResult> full_suite(const SuiteOptions& o);

std::vector<CheckResult> linalg_invariants(const SuiteOptions& o);
std::vector<CheckResult> lattice_invariants(const SuiteOptions& o);
std::vector<CheckResult> frame_invariants(const SuiteOptions& o);
std::vector<CheckResult> parabolic_invariants(const SuiteOptions& o);
std::vector<CheckResult> boundary_invariants(const SuiteOptions& o);
std::vector<CheckResult> serialization_invariants(const SuiteOptions& o);

}  // namespace parablat::checks
