// pgroup.hpp — congruence subgroups of GL_n(Z/p^N) with p-valuations:
// axiom verification for a valuation omega, the graded Lie algebra of the
// filtration with its bracket and the Pi operator (p-th power map), and the
// weight vector that turns gr of the completed group ring into a weighted
// polynomial ring F_p[X0, ..., Xd].
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace iwa {

// An element of the level-c congruence subgroup of GL_n(Z_p), stored modulo
// p^N: entries row-major in Z/p^N with g = identity mod p^c (c >= 1, and
// c >= 2 when p = 2, so that the p-th power map is well behaved).
struct GroupElement {
  std::uint32_t p = 0, n = 0, N = 0, c = 1;
  std::vector<std::uint64_t> m; // n*n entries mod p^N

  GroupElement() = default;
  GroupElement(std::uint32_t p, std::uint32_t n, std::uint32_t N, std::uint32_t c,
               std::vector<std::uint64_t> entries);

  void validate() const; // congruence invariant; throws std::invalid_argument
  bool is_identity() const;
  bool operator==(const GroupElement& o) const;
};

GroupElement group_identity(std::uint32_t p, std::uint32_t n, std::uint32_t N,
                            std::uint32_t c);
GroupElement group_mul(const GroupElement& g, const GroupElement& h);
GroupElement group_inv(const GroupElement& g);
GroupElement group_pow(const GroupElement& g, std::uint64_t k);
// g^-1 h^-1 g h
GroupElement commutator(const GroupElement& g, const GroupElement& h);

// A valuation value known at modulus p^N.  `atleast` marks a bare lower
// bound: the element vanishes at the working modulus, so only num/den <= true
// value is certified.  `infinite` additionally records that the stored matrix
// is exactly the identity.
struct Omega {
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool atleast = false;
  bool infinite = false;

  std::string str() const;
};

// Either the built-in congruence valuation omega(g) = min_ij v_p((g - 1)_ij)
// or a user-supplied table of rational values on listed elements (values with
// a common denominator e, as produced by an abelianizing valuation).
struct ValuationSpec {
  bool builtin = true;
  std::vector<GroupElement> elems;
  std::vector<Omega> values;

  static ValuationSpec congruence() { return ValuationSpec{}; }
  static ValuationSpec table(std::vector<GroupElement> elems, std::vector<Omega> values);
};

// Built-in: exact when the difference is nonzero at the modulus, a lower
// bound "> = N" otherwise.  Table specs look the element up by matrix
// equality and throw std::out_of_range when it is absent (identity excepted).
Omega omega(const GroupElement& g, const ValuationSpec& spec);

// Axiom verification for a p-valuation on a sample, Def-style:
//   (1) 1/(p-1) < omega(g), and omega(g) = infinity only for g = 1
//   (2) omega(g h^-1) >= min(omega(g), omega(h))
//   (3) omega(g^-1 h^-1 g h) >= omega(g) + omega(h)
//   (4) omega(g^p) = omega(g) + 1, with equality
// Every verdict is certified at the working modulus; an inequality the
// modulus cannot decide is reported as inconclusive, never as a pass.
struct AxiomIssue {
  std::string axiom;  // "range", "quotient", "commutator", "power"
  std::size_t i = 0, j = 0;
  std::string detail;
};
struct ValuationReport {
  std::size_t elements = 0;
  std::size_t pairs = 0;
  std::vector<AxiomIssue> failures;
  std::vector<AxiomIssue> inconclusive;
  bool pass() const { return failures.empty() && inconclusive.empty(); }
};
ValuationReport verify_p_valuation(const std::vector<GroupElement>& sample,
                                   const ValuationSpec& spec);

// The bracket of gr(G): class of the commutator in degree omega(g) + omega(h).
// `lead` is the leading matrix of the commutator mod p (its symbol in the
// matrix realization); zero means the bracket vanishes in gr, certified.
struct GrSymbol {
  bool zero = false;
  bool inconclusive = false;
  Omega degree;
  std::vector<std::uint32_t> lead; // n*n mod p, empty when zero/inconclusive
};
GrSymbol gr_bracket(const GroupElement& g, const GroupElement& h,
                    const ValuationSpec& spec);

// Weight vector (e*1, e*omega(g_1), ..., e*omega(g_d)) for the graded group
// ring F_p[X0, ..., Xd], where e clears all denominators and X0 is the symbol
// of p.  Verifies by rank accounting at sampled degrees <= 3 that the
// generator symbols are F_p[Pi]-independent and span gr(G) there; throws
// std::runtime_error naming the degree otherwise.
std::vector<std::uint32_t> weight_vector(const std::vector<GroupElement>& gens,
                                         const ValuationSpec& spec);

// Sampled graded Lie algebra: homogeneous components with F_p-bases of
// leading matrices, the bracket and Pi tables on basis representatives, an
// abelianness verdict, and the F_p[Pi]-rank estimate.
struct GrComponent {
  std::int64_t num = 0, den = 1; // degree
  std::vector<GroupElement> reps;
  std::vector<std::vector<std::uint32_t>> basis; // leading matrices mod p
};
struct BracketEntry {
  std::size_t ci = 0, bi = 0, cj = 0, bj = 0;
  GrSymbol value;
};
struct PiEntry {
  std::size_t ci = 0, bi = 0;
  std::vector<std::uint32_t> lead; // symbol of g^p in degree + 1
  bool inconclusive = false;
};
struct GradedLieReport {
  std::vector<GrComponent> components;
  std::vector<BracketEntry> brackets;
  std::vector<PiEntry> pi;
  bool abelian = true;
  std::uint32_t rank_d = 0;
};
GradedLieReport gr_lie_report(const std::vector<GroupElement>& gens,
                              const ValuationSpec& spec, std::int64_t max_degree);

// Pseudo-random elements as bounded-length words in the generators and their
// inverses; deterministic for a fixed seed.
std::vector<GroupElement> sample_words(const std::vector<GroupElement>& gens,
                                       std::size_t count, std::size_t maxlen,
                                       std::uint64_t seed);

} // namespace iwa
