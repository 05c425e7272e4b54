// igband - free idempotent generated semigroups over finite bands

#ifndef IGBAND_DECIDE_HPP_
#define IGBAND_DECIDE_HPP_

#include <optional>
#include <string>
#include <utility>

#include "igband/band.hpp"
#include "igband/igword.hpp"
#include "igband/rewrite.hpp"

namespace igband {

/// A band together with everything the deciders need: its decomposition,
/// classification and (for normal bands) structure morphisms. Build once,
/// share freely; all members are immutable.
struct BandContext {
  Band band;
  DClassDecomposition dec;
  BandClassification cls;
  std::optional<StructureMorphisms> morphisms;

  static BandContext make(Band b);

  const StructureMorphisms* phi() const {
    return morphisms ? &*morphisms : nullptr;
  }
};

enum class Verdict { Equal, NotEqual, Inconclusive };

enum class DecisionMethod {
  SemilatticeNf,
  RectangularNf,
  LocallyLarge,
  NormalComponent,
  BfsOracle,
};

std::string to_string(Verdict v);
std::string to_string(DecisionMethod m);

/// The outcome of an equality query. Equal verdicts carry a replayable
/// certificate (and, for the normal-form deciders, the identical canonical
/// forms); not-equal verdicts carry a concrete distinguishing invariant,
/// described in evidence and - for the canonical-form deciders - the two
/// differing canonical forms.
struct EqualityVerdict {
  Verdict verdict = Verdict::Inconclusive;
  DecisionMethod method = DecisionMethod::BfsOracle;
  std::optional<RewriteCertificate> certificate;
  std::optional<std::pair<GenWord, GenWord>> canonical_forms;
  std::string evidence;
};

/// Word problem over a semilattice: normal forms are unique, so compare
/// them letterwise. Exact. Throws BandError when b is not a semilattice.
EqualityVerdict equal_semilattice(const Band& b, const GenWord& w1,
                                  const GenWord& w2);

/// Word problem over a rectangular band, by unique normal forms. Exact.
EqualityVerdict equal_rectangular(const Band& b, const GenWord& w1,
                                  const GenWord& w2);

/// Word problem over a locally large band: ANFs have pairwise-equal blocks,
/// each decidable by in-component normal forms, so the block-normalized ANF
/// word is canonical. Exact.
EqualityVerdict equal_locally_large(const Band& b,
                                    const DClassDecomposition& d,
                                    const GenWord& w1, const GenWord& w2);

/// Replaces each letter x in B_beta by x phi_{beta,alpha}. Requires a normal
/// band and every letter's class >= alpha.
GenWord project_component(const Band& b, const DClassDecomposition& d,
                          const StructureMorphisms& m, const GenWord& w,
                          int alpha);

/// Word problem for words whose letters all lie in one class B_alpha of a
/// normal band: equality in IG(B) reduces to IG(B_alpha), decided by
/// rectangular normal forms. Exact.
EqualityVerdict equal_normal_component(const Band& b,
                                       const DClassDecomposition& d,
                                       const StructureMorphisms& m,
                                       const GenWord& w1, const GenWord& w2);

/// The general dispatcher. Routes to the strongest applicable decider
/// (semilattice, rectangular, locally large, normal single-component);
/// otherwise applies sound necessary-condition filters - identical normal
/// forms, distinct single generators, the Y-projection normal form, R-classes
/// of prefix products at significant indices and the L-class dual, identical
/// ANFs - and finally falls back to the bounded breadth-first oracle.
/// Not-equal is only ever reported with a distinguishing invariant; an
/// exhausted oracle search yields Inconclusive.
EqualityVerdict equal(const BandContext& ctx, const GenWord& w1,
                      const GenWord& w2, const SearchBudget& budget);

/// As above with the default budget for the pair.
EqualityVerdict equal(const BandContext& ctx, const GenWord& w1,
                      const GenWord& w2);

}  // namespace igband

#endif  // IGBAND_DECIDE_HPP_
