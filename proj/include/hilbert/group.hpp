#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hilbert/domain.hpp"
#include "hilbert/flats.hpp"

namespace hilbert {

// A projective transformation certified to preserve a domain. Exact
// certificates come from the vertex-cone permutation (polytopes) or form
// invariance (ellipsoids); sampled certificates record the membership trials
// that passed.
struct GroupElement {
  ProjMapQ map;
  enum class Certificate { Exact, Sampled };
  Certificate certificate = Certificate::Exact;
  int samples = 0;
  uint64_t seed = 0;
  std::vector<int> vertex_permutation;  // polytope exact certificates
};

// Exact certification; throws NotAnAutomorphism with a witness point.
GroupElement certify_preserves(const ConvexDomain& domain, const ProjMapQ& g);

// Sampled certification: n random interior points must stay inside under g
// and its inverse.
GroupElement certify_preserves_sampled(const ConvexDomain& domain, const ProjMapQ& g, int samples,
                                       uint64_t seed);

struct IsometryReport {
  int samples = 0;
  uint64_t seed = 0;
  double max_deviation = 0;
  bool pass = false;
  double tol = 0;
};

// Max |d(gx, gy) - d(x, y)| over sampled interior pairs.
IsometryReport isometry_check(const ConvexDomain& domain, const ProjMapQ& g, int samples,
                              uint64_t seed, double tol = 1e-9);

// g maps the flat's vertex set to itself (up to scale, uniformly signed);
// it then fixes the pseudo-dual.
bool stabilizes_flat(const GroupElement& g, const Flat& flat);

struct TranslationLength {
  double value = 0;
  bool closed_form = false;      // diagonal in the vertex basis
  bool budget_exhausted = false;
  long evaluations = 0;
};

// inf_x d(x, g x) on a simplex domain. Diagonal elements get the exact
// (1/2)(max - min) log-eigenvalue form; otherwise multi-start coordinate
// descent in log coordinates. use_closed_form = false forces the numeric
// path (used to cross-check the closed form).
TranslationLength translation_length(const ConvexDomain& simplex, const GroupElement& g,
                                     int starts = 32, long budget = 10000, uint64_t seed = 0,
                                     bool use_closed_form = true);

struct GeneratorSet {
  std::vector<GroupElement> elements;
  std::vector<std::string> labels;

  // Appends missing inverses (label + "'"), so word enumeration can walk
  // both directions.
  static GeneratorSet close_under_inverses(std::vector<GroupElement> gens,
                                           std::vector<std::string> labels);
};

struct OrbitPoint {
  PointQ point;
  std::string word;  // first (breadth-first) word reaching the point
};

// Breadth-first orbit of x under words up to the length bound, with exact
// projective dedup.
std::vector<OrbitPoint> orbit(const GeneratorSet& generators, const PointQ& x,
                              int max_word_length);

struct PreciseInvarianceReport {
  struct WordStatus {
    std::string word;
    int inside = 0;
    int total = 0;
    enum class Verdict { Preserved, MovedOff, Violation } verdict = Verdict::Preserved;
  };
  std::vector<WordStatus> words;
  bool violation_found = false;
  std::string witness_word;
  uint64_t seed = 0;
};

// Samples region points and checks, word by word, whether the region is
// mapped onto itself or clean off itself. A mixed sample is a definite
// violation witness: the image meets the region without equalling it.
PreciseInvarianceReport precise_invariance_check(
    const std::function<bool(const PointQ&)>& member,
    const std::function<PointQ(Rng&)>& region_sampler, const GeneratorSet& generators,
    int max_word_length, int samples_per_word, uint64_t seed);

}  // namespace hilbert
