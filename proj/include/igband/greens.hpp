// igband - free idempotent generated semigroups over finite bands

#ifndef IGBAND_GREENS_HPP_
#define IGBAND_GREENS_HPP_

#include <optional>
#include <string>

#include "igband/decide.hpp"

namespace igband {

enum class Side { R, L };

/// The first (side R) or last (side L) letter of an ANF of w; that generator
/// is R-tilde (resp. L-tilde) related to w in IG(B).
int tilde_idempotent(const BandContext& ctx, const GenWord& w, Side side);

/// Whether the tilde idempotents of the two words are R- (resp. L-) related
/// in B, which for ANFs characterizes being R-tilde (L-tilde) related in
/// IG(B).
bool tilde_related(const BandContext& ctx, const GenWord& w1,
                   const GenWord& w2, Side side);

/// A machine-checkable proof that the target word is R*-related to no
/// idempotent of IG(B). The target is R-tilde related to its tilde
/// idempotent e-bar; the witness exhibits either a single x with
/// x·target = target but x·e-bar != e-bar, or a pair (x, y) with
/// x·target = y·target but x·e-bar != y·e-bar. Either refutes
/// target R* e-bar, and R-tilde relatedness transfers the refutation to
/// every idempotent.
struct NonAbundanceWitness {
  GenWord target;
  int tilde_idempotent = 0;  // band element index
  GenWord x;
  std::optional<GenWord> y;  // absent: single witness, present: pair
  RewriteCertificate equality_evidence;   // x·target ->* target (or y·target)
  EqualityVerdict inequality_evidence;    // not-equal on the e-bar side

  bool is_pair() const { return y.has_value(); }
};

struct VerificationResult {
  bool ok = false;
  std::string reason;  // set when not ok
};

/// Re-derives the tilde idempotent, replays the equality certificate against
/// the expected endpoints and re-decides the inequality with the dispatcher.
VerificationResult verify_nonabundance(const BandContext& ctx,
                                       const NonAbundanceWitness& w,
                                       const SearchBudget& budget);

struct WitnessSearchBudget {
  int max_candidate_len = 2;
  SearchBudget oracle{0, 100000};  // max_len 0: derive from the words
};

/// Enumerates candidate words x (singles before pairs, shorter first,
/// lexicographic within a length) and returns the first verified witness,
/// using the dispatcher for the equality and the inequality. Candidates
/// whose inequality the dispatcher cannot soundly refute are skipped.
std::optional<NonAbundanceWitness> search_nonabundance(
    const BandContext& ctx, const GenWord& target,
    const WitnessSearchBudget& budget);

std::string serialize_witness(const Band& b, const NonAbundanceWitness& w);
NonAbundanceWitness parse_witness(const BandContext& ctx,
                                  const std::string& text);

/// For a word w = x_1 ... x_n with all letters in one D-class, the explicit
/// inverse-like word z = (x_n x_{n-1})(x_{n-1} x_{n-2}) ... (x_2 x_1) (bars
/// implied), with a contraction-only certificate that w z w reduces to w.
/// For a single letter, z is that letter.
std::pair<GenWord, RewriteCertificate> regularity_witness(
    const Band& b, const DClassDecomposition& d, const GenWord& w);

/// A refutation of Condition (P): two ANFs equal in IG(B) whose s-th block
/// ends are L-related but block prefixes differ (clause 1), or whose block
/// starts are R-related but suffixes differ (clause 2).
struct ConditionPViolation {
  AlmostNormalForm w1;
  AlmostNormalForm w2;
  RewriteCertificate equality;
  int clause = 1;           // 1 or 2
  int index = 1;            // s (clause 1, 1-based) or t (clause 2, 0-based)
  int letter1 = 0;          // the related letters of B
  int letter2 = 0;
  GenWord part1;            // differing prefixes (clause 1) or suffixes (2)
  GenWord part2;
  EqualityVerdict part_inequality;
};

struct ConditionPBudget {
  int max_word_len = 6;
  std::size_t max_states = 1000000;
  SearchBudget part_oracle{0, 100000};
};

/// Enumerates equality classes of words up to max_word_len (via exhausted
/// rewrite closures), collects their ANF members and checks both clauses of
/// Condition (P); returns the first violation in a fixed deterministic
/// order, or nullopt when the budget is exhausted without one. Inconclusive
/// part comparisons never count as violations.
std::optional<ConditionPViolation> falsify_condition_p(
    const BandContext& ctx, const ConditionPBudget& budget);

}  // namespace igband

#endif  // IGBAND_GREENS_HPP_
