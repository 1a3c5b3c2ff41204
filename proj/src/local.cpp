#include <algorithm>
#include <random>
#include <stdexcept>

#include "iwa/local.hpp"

namespace iwa {

namespace {

// Laplace expansion along the first column; matrices here are tiny
GradedPoly poly_det(const RingPtr& R, const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return GradedPoly::constant(R, 1);
  if (n == 1) return m[0][0];
  GradedPoly acc = GradedPoly::zero(R);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][0].is_zero()) continue;
    PolyMatrix minor;
    minor.reserve(n - 1);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      minor.push_back(PolyRow(m[r].begin() + 1, m[r].end()));
    }
    GradedPoly term = m[i][0] * poly_det(R, minor);
    if (i % 2)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

void next_combination(std::vector<std::size_t>& idx, std::size_t limit, bool& done) {
  std::size_t k = idx.size();
  std::size_t i = k;
  while (i-- > 0) {
    if (idx[i] + (k - i) < limit) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return;
    }
    if (i == 0) break;
  }
  done = true;
}

std::vector<GradedPoly> principal_gb(const RingPtr& R, const GradedPoly& f) {
  return groebner_basis({f});
}

} // namespace

std::uint32_t prime_valuation(const GradedPoly& f, const GradedPoly& prime) {
  if (f.is_zero()) throw std::domain_error("prime_valuation of zero");
  GradedPoly rest = f;
  std::uint32_t v = 0;
  for (;;) {
    auto q = GradedPoly::divide_exact(rest, prime);
    if (!q) return v;
    rest = *q;
    ++v;
  }
}

std::uint32_t fitting_valuation(const ModulePresentation& M, const GradedPoly& prime,
                                std::uint32_t k) {
  M.validate();
  const RingPtr& R = M.ring;
  if (k >= M.gens) return 0; // Fitt_k = (1) once the minor size hits zero
  const std::size_t s = M.gens - k;
  if (M.rels.size() < s) throw std::domain_error("fitting_valuation: Fitting ideal is zero");

  std::optional<std::uint32_t> best;
  std::vector<std::size_t> rows(s), cols(s);
  for (std::size_t i = 0; i < s; ++i) rows[i] = i;
  bool rdone = false;
  while (!rdone) {
    for (std::size_t i = 0; i < s; ++i) cols[i] = i;
    bool cdone = false;
    while (!cdone) {
      PolyMatrix sub(s, PolyRow());
      for (std::size_t i = 0; i < s; ++i) {
        sub[i].reserve(s);
        for (std::size_t j = 0; j < s; ++j) sub[i].push_back(M.rels[rows[i]][cols[j]]);
      }
      GradedPoly d = poly_det(R, sub);
      if (!d.is_zero()) {
        std::uint32_t v = prime_valuation(d, prime);
        if (!best || v < *best) best = v;
        if (*best == 0) return 0;
      }
      next_combination(cols, M.gens, cdone);
    }
    next_combination(rows, M.rels.size(), rdone);
  }
  if (!best) throw std::domain_error("fitting_valuation: Fitting ideal is zero");
  return *best;
}

std::uint32_t local_length(const ModulePresentation& M, const GradedPoly& prime) {
  return fitting_valuation(M, prime, 0);
}

std::vector<std::uint32_t> elementary_divisors(const ModulePresentation& M,
                                               const GradedPoly& prime) {
  std::vector<std::uint32_t> out;
  std::uint32_t prev = fitting_valuation(M, prime, 0);
  for (std::uint32_t k = 1; prev > 0; ++k) {
    std::uint32_t cur = fitting_valuation(M, prime, k);
    if (cur >= prev) throw std::logic_error("elementary_divisors: valuations not decreasing");
    out.push_back(prev - cur);
    prev = cur;
  }
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] > out[i - 1])
      throw std::logic_error("elementary_divisors: exponents not sorted");
  return out;
}

CharIdeal char_ideal(const ModulePresentation& M) {
  M.validate();
  if (!is_torsion(M)) throw std::invalid_argument("char_ideal: module has positive rank");
  CharIdeal chi;
  chi.generator = GradedPoly::constant(M.ring, 1);
  for (const auto& P : height_one_support(M)) {
    std::uint32_t l = local_length(M, P);
    if (l == 0) throw std::logic_error("char_ideal: support prime with zero length");
    chi.divisor.push_back({P, l});
    for (std::uint32_t i = 0; i < l; ++i) chi.generator *= P;
  }
  chi.generator = chi.generator.is_zero() ? chi.generator : chi.generator.monic();
  return chi;
}

StructureCertificate structure_certificate(const ModulePresentation& M, std::uint64_t seed,
                                           int witness_tries) {
  M.validate();
  if (!is_torsion(M))
    throw std::invalid_argument("structure_certificate: module has positive rank");
  const RingPtr& R = M.ring;

  StructureCertificate cert;
  PolyMatrix pn = delta_submodule(M, 2);
  cert.reduced = quotient_by(M, pn);
  cert.chi = char_ideal(M);

  if (is_zero_module(cert.reduced)) {
    // M itself pseudo-null: empty decomposition is exact, not just up to
    // pseudo-isomorphism
    cert.fitting_match = true;
    cert.witness_found = true;
    return cert;
  }

  std::vector<GradedPoly> W = height_one_support(cert.reduced);
  if (W.empty())
    throw std::logic_error("structure_certificate: reduced module lost its support");

  // k-th elementary divisor across all primes, aligned by rank
  std::vector<std::vector<std::uint32_t>> eds;
  std::size_t r = 0;
  for (const auto& P : W) {
    eds.push_back(elementary_divisors(cert.reduced, P));
    r = std::max(r, eds.back().size());
  }
  std::vector<GradedPoly> desc; // L with the largest exponents first
  for (std::size_t kk = 0; kk < r; ++kk) {
    GradedPoly L = GradedPoly::constant(R, 1);
    for (std::size_t pi = 0; pi < W.size(); ++pi) {
      std::uint32_t e = kk < eds[pi].size() ? eds[pi][kk] : 0;
      for (std::uint32_t t = 0; t < e; ++t) L *= W[pi];
    }
    desc.push_back(L.monic());
  }
  cert.elementary.assign(desc.rbegin(), desc.rend()); // L_1 | L_2 | ... | L_r

  // model module D = A/(L_1) + ... + A/(L_r); every Fitting valuation at
  // every support prime must agree with the reduced module
  PolyMatrix diag(r, PolyRow(r, GradedPoly::zero(R)));
  for (std::size_t i = 0; i < r; ++i) diag[i][i] = cert.elementary[i];
  ModulePresentation D(R, static_cast<std::uint32_t>(r), diag);
  cert.fitting_match = true;
  for (const auto& P : W)
    for (std::uint32_t k = 0; k <= r; ++k)
      if (fitting_valuation(cert.reduced, P, k) != fitting_valuation(D, P, k))
        cert.fitting_match = false;

  // witness search over constant coefficient combinations of the generators:
  // bucket candidate vectors by annihilator, then try tuples until the joint
  // cokernel is pseudo-null (independence can fail locally for a particular
  // tuple even when each annihilator is right, so retry at the tuple level)
  std::mt19937_64 rng(seed);
  const std::uint32_t g = cert.reduced.gens;
  std::vector<std::vector<GradedPoly>> targets;
  targets.reserve(r);
  for (std::size_t i = 0; i < r; ++i) targets.push_back(principal_gb(R, cert.elementary[i]));

  std::vector<std::vector<PolyRow>> cands(r);
  auto consider = [&](const std::vector<std::uint32_t>& coeffs) {
    PolyRow w(g, GradedPoly::zero(R));
    for (std::uint32_t j = 0; j < g; ++j) w[j] = GradedPoly::constant(R, coeffs[j]);
    auto ann = groebner_basis(colon_rows_into_ideal(R, cert.reduced.rels, w, g));
    for (std::size_t i = 0; i < r; ++i)
      if (ideal_equal(R, ann, targets[i])) cands[i].push_back(w);
  };
  double space = 1;
  for (std::uint32_t j = 0; j < g; ++j) space *= R->p;
  if (space <= 2048.0) {
    std::vector<std::uint32_t> coeffs(g, 0);
    for (std::uint64_t code = 1; code < static_cast<std::uint64_t>(space); ++code) {
      std::uint64_t c = code;
      for (std::uint32_t j = 0; j < g; ++j) {
        coeffs[j] = static_cast<std::uint32_t>(c % R->p);
        c /= R->p;
      }
      consider(coeffs);
    }
  } else {
    for (int t = 0; t < witness_tries; ++t) {
      std::vector<std::uint32_t> coeffs(g);
      bool nonzero = false;
      for (auto& c : coeffs) {
        c = static_cast<std::uint32_t>(rng() % R->p);
        nonzero = nonzero || c;
      }
      if (nonzero) consider(coeffs);
    }
  }

  bool have_all = true;
  for (const auto& bucket : cands) have_all = have_all && !bucket.empty();
  if (have_all) {
    for (int attempt = 0; attempt < 40 && !cert.witness_found; ++attempt) {
      std::vector<PolyRow> ws;
      ws.reserve(r);
      for (std::size_t i = 0; i < r; ++i) ws.push_back(cands[i][rng() % cands[i].size()]);
      ModulePresentation coker = quotient_by(cert.reduced, ws);
      if (is_pseudo_null(coker)) {
        cert.witness_found = true;
        cert.witnesses = std::move(ws);
      }
    }
  }
  return cert;
}

} // namespace iwa
