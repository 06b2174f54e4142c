#include <algorithm>

#include "parablat/checks.hpp"

namespace parablat::checks {

long Sampler::uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

Rat Sampler::rational(long max_num, long max_den) {
  Rat x(Int(uniform(-max_num, max_num)), Int(uniform(1, max_den)));
  x.canonicalize();
  return x;
}

RatMatrix Sampler::rational_matrix(std::size_t rows, std::size_t cols, long max_num, long max_den) {
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational(max_num, max_den);
  return m;
}

RatMatrix Sampler::antisymmetric(std::size_t r, long max_num, long max_den) {
  RatMatrix m(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      m(i, j) = rational(max_num, max_den);
      m(j, i) = -m(i, j);
    }
  return m;
}

IntMatrix Sampler::integer_matrix(std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(-bound, bound);
  return m;
}

RatMatrix Sampler::invertible(std::size_t r, long max_num, long max_den) {
  while (true) {
    RatMatrix m = rational_matrix(r, r, max_num, max_den);
    if (det(m) != 0) return m;
  }
}

IntMatrix Sampler::sl_word(std::size_t r, std::size_t length) {
  IntMatrix m = IntMatrix::identity(r);
  if (r < 2) return m;
  for (std::size_t step = 0; step < length; ++step) {
    const std::size_t i = uniform(0, r - 1);
    std::size_t j = uniform(0, r - 2);
    if (j >= i) ++j;
    IntMatrix e = IntMatrix::identity(r);
    e(i, j) = uniform(0, 1) ? 1 : -1;
    m = m * e;
  }
  return m;
}

namespace {

IntMatrix int_inverse(const IntMatrix& m) { return to_int(inverse(to_rat(m))); }

// Generators of SL(J, I) with J given in I-coordinates.
std::vector<IntMatrix> sl_JI_generators(const RatMatrix& j_coords) {
  const std::size_t r = j_coords.rows();
  if (r == 1) return {IntMatrix::identity(1)};
  if (r == 2) {
    auto member = [&](const IntMatrix& M) { return sl_JI_member(to_rat(M), j_coords); };
    std::vector<IntMatrix> gens = coset_enumeration(member).schreier_generators;
    if (gens.empty()) gens.push_back(IntMatrix::identity(2));
    return gens;
  }
  // Elementary matrices with off-diagonal entry the exponent of J/I.
  Int e = 1;
  for (std::size_t j = 0; j < j_coords.cols(); ++j) e = lcm(e, common_denominator(j_coords.col(j)));
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (i != j) {
        IntMatrix g = IntMatrix::identity(r);
        g(i, j) = e;
        gens.push_back(g);
      }
  return gens;
}

RatMatrix random_word(Sampler& s, const std::vector<IntMatrix>& gens, std::size_t length) {
  IntMatrix m = IntMatrix::identity(gens.front().rows());
  for (std::size_t k = 0; k < length; ++k) {
    IntMatrix g = s.pick(gens);
    if (s.uniform(0, 1)) g = int_inverse(g);
    m = m * g;
  }
  return to_rat(m);
}

}  // namespace

FrameContext FrameContext::make(const std::string& key, const IsotropicFrame& F) {
  FrameContext ctx{key, F, {}, {}, {}, {}};
  const std::size_t m = F.m();
  if (m == 0) {
    ctx.o_lambda = {IntMatrix(0, 0)};
    ctx.gamma_lambda = {IntMatrix(0, 0)};
  } else if (F.lambda_lattice().signature().second == 0) {
    ctx.o_lambda = aut_definite(F.lambda_gram()).elements;
    ctx.gamma_lambda = gamma_Lambda(F.lambda_gram()).elements;
  } else {
    ctx.o_lambda = {IntMatrix::identity(m), -IntMatrix::identity(m)};
    ctx.gamma_lambda = {IntMatrix::identity(m)};
  }
  ctx.lstar_gens = sl_JI_generators(F.i_lstar_coords());
  ctx.iota_gens = sl_JI_generators(F.i_iota_coords());
  return ctx;
}

RatMatrix FrameContext::random_lstar_element(Sampler& s, std::size_t length) const {
  return random_word(s, lstar_gens, length);
}

RatMatrix FrameContext::random_iota_element(Sampler& s, std::size_t length) const {
  return random_word(s, iota_gens, length);
}

RatMatrix FrameContext::random_gamma(Sampler& s) const { return to_rat(s.pick(gamma_lambda)); }

RatMatrix FrameContext::random_o_lambda(Sampler& s) const { return to_rat(s.pick(o_lambda)); }

ParabolicCoords FrameContext::random_coords(Sampler& s) const {
  const std::size_t r = frame.r(), m = frame.m();
  return {s.invertible(r, 3, 3), random_o_lambda(s), s.rational_matrix(r, m, 4, 6), s.antisymmetric(r, 3, 6)};
}

HeisenbergElement FrameContext::random_zheis(Sampler& s) const {
  const std::size_t r = frame.r(), m = frame.m();
  const RatMatrix psi = to_rat(s.integer_matrix(r, m, 2)) * frame.lambda_gram_rat();
  return {psi, c_psi(psi, frame) + to_rat(to_int(s.antisymmetric(r, 2, 1)))};
}

ParabolicCoords FrameContext::random_member(Sampler& s) const {
  const RatMatrix M = random_lstar_element(s, s.uniform(0, 6));
  const ParabolicCoords base = complete_to_element(M, random_gamma(s), frame);
  return heis_times(random_zheis(s), base, frame);
}

std::optional<ParabolicCoords> FrameContext::near_miss(Sampler& s, int condition) const {
  ParabolicCoords c = random_member(s);
  const std::size_t r = frame.r(), m = frame.m();
  switch (condition) {
    case 1: {
      std::vector<IntMatrix> bad;
      for (const IntMatrix& g : o_lambda)
        if (det_spinor(to_rat(g), frame.lambda_gram_rat()) == DetSpinor{1, 1} &&
            std::find(gamma_lambda.begin(), gamma_lambda.end(), g) == gamma_lambda.end())
          bad.push_back(g);
      if (bad.empty()) return std::nullopt;
      c.gamma = to_rat(s.pick(bad));
      return c;
    }
    case 2: {
      RatMatrix X;
      if (r == 1) {
        X = RatMatrix{{Rat(s.uniform(2, 3))}};
      } else {
        std::vector<RatMatrix> candidates;
        for (int k = 0; k < 8; ++k) {
          RatMatrix w = to_rat(s.sl_word(r, 1 + s.uniform(0, 4)));
          if (!sl_JI_member(w, frame.i_lstar_coords())) candidates.push_back(w);
        }
        RatMatrix e = RatMatrix::identity(r);
        e(0, 1) = Rat(1, 2);
        candidates.push_back(e);
        X = s.pick(candidates);
      }
      c.M = c.M * X;
      return c;
    }
    case 3: {
      if (m == 0) return std::nullopt;
      RatMatrix delta(r, m);
      const std::size_t i = s.uniform(0, r - 1), j = s.uniform(0, m - 1);
      delta(i, j) = s.uniform(0, 1) ? Rat(1, s.uniform(2, 3)) : Rat(1);
      c.psi = c.psi + delta;
      if (auto eta = complete_eta(c.M, c.psi, frame)) c.eta = *eta;
      return c;
    }
    case 4: {
      if (r < 2) return std::nullopt;
      const std::size_t i = s.uniform(0, r - 2);
      const Rat eps(1, s.uniform(2, 4));
      c.eta(i, i + 1) += eps;
      c.eta(i + 1, i) -= eps;
      return c;
    }
  }
  return std::nullopt;
}

Sublattice FrameContext::random_complement(Sampler& s) const {
  const RatMatrix& base = frame.Itilde().basis();
  const RatMatrix& perp = frame.iperp_lstar().basis();
  RatMatrix gens = base;
  for (std::size_t k = 0; k < base.cols(); ++k) {
    RatVector col = gens.col(k);
    for (std::size_t j = 0; j < perp.cols(); ++j) {
      const long t = s.uniform(-2, 2);
      for (std::size_t i = 0; i < col.size(); ++i) col[i] += perp(i, j) * t;
    }
    gens.set_col(k, col);
  }
  return Sublattice(gens);
}

std::vector<FrameContext> fixture_contexts() {
  std::vector<FrameContext> out;
  for (const Fixture& fx : all_fixtures()) out.push_back(FrameContext::make(fx.key, IsotropicFrame::build(fx.lattice, fx.isotropic)));
  return out;
}

}  // namespace parablat::checks
