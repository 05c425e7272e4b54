// igband - free idempotent generated semigroups over finite bands

#ifndef IGBAND_REWRITE_HPP_
#define IGBAND_REWRITE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "igband/band.hpp"

namespace igband {

/// A word over the generator alphabet {e-bar : e in B}; letter i stands for
/// the generator attached to band element i. Words are never empty.
struct GenWord {
  std::vector<int> letters;

  GenWord() = default;
  explicit GenWord(std::vector<int> l) : letters(std::move(l)) {}

  int size() const { return static_cast<int>(letters.size()); }
  int operator[](int i) const { return letters[i]; }
  bool operator==(const GenWord&) const = default;

  GenWord concat(const GenWord& other) const;
};

/// Parses a space-separated list of element names, e.g. "e h v".
GenWord parse_word(const Band& b, const std::string& names);
std::string format_word(const Band& b, const GenWord& w);

enum class StepKind { Contraction, Expansion };

/// One elementary rewrite. A contraction at position p replaces the adjacent
/// letters (u, v) = (w[p], w[p+1]) - which must form a basic pair - by their
/// product uv. An expansion at position p replaces the letter w[p], which
/// must equal the stated product, by the two letters (u, v).
struct RewriteStep {
  int position = 0;
  StepKind kind = StepKind::Contraction;
  int u = 0;
  int v = 0;
  int product = 0;

  /// Same rewrite read in the opposite direction.
  RewriteStep inverted() const;
};

/// A replayable proof that start and end are the same element of IG(B).
struct RewriteCertificate {
  GenWord start;
  std::vector<RewriteStep> steps;
  GenWord end;
};

/// Applies one step; throws BandError when the step does not match the word.
GenWord apply_step(const Band& b, const GenWord& w, const RewriteStep& s);

/// True iff replaying the steps from c.start yields c.end with every step
/// individually valid.
bool check_certificate(const Band& b, const RewriteCertificate& c);

/// Chains two certificates (first.end must equal second.start).
RewriteCertificate chain_certificates(const RewriteCertificate& first,
                                      const RewriteCertificate& second);
/// The same proof read backwards.
RewriteCertificate invert_certificate(const RewriteCertificate& c);

std::string serialize_certificate(const Band& b, const RewriteCertificate& c);
RewriteCertificate parse_certificate(const Band& b, const std::string& text);

/// Contracts the basic pair at (pos, pos+1), if there is one.
std::optional<GenWord> contract(const Band& b, const GenWord& w, int pos);

/// All one-step expansions of the letter at pos: every word obtained by
/// replacing g = w[pos] with u v where (u, v) is basic and uv = g.
std::vector<GenWord> expansions(const Band& b, const GenWord& w, int pos);

/// Leftmost-first contraction to an irreducible word. Deterministic; at most
/// length-1 steps since every contraction shortens the word.
std::pair<GenWord, RewriteCertificate> normal_form(const Band& b,
                                                   const GenWord& w);

struct ConfluenceCounterexample {
  GenWord critical;  // a length-3 word with both adjacent pairs basic
  GenWord left;      // irreducible descendant via the left redex
  GenWord right;     // irreducible descendant via the right redex
};

struct ConfluenceReport {
  bool locally_confluent = true;
  std::optional<ConfluenceCounterexample> counterexample;
};

/// Checks every critical word e-bar f-bar g-bar (both adjacent pairs basic)
/// for joinability of its two one-step descendants. By Newman's lemma the
/// verdict decides confluence of the whole (noetherian) system.
ConfluenceReport check_local_confluence(const Band& b);

struct SearchBudget {
  int max_len = 0;             // words longer than this are pruned
  std::size_t max_states = 100000;

  /// The default budget for a pair of input words: max_len is the longer
  /// input length + 4, max_states is 100000.
  static SearchBudget defaults_for(const GenWord& w1, const GenWord& w2);
};

enum class OracleOutcome { Equal, DistinctWithinBudget, Inconclusive };

struct OracleResult {
  OracleOutcome outcome = OracleOutcome::Inconclusive;
  std::optional<RewriteCertificate> certificate;  // present when Equal
  std::size_t states = 0;                         // words enqueued
};

/// Breadth-first closure of {w1} under contraction and expansion, pruning
/// words longer than budget.max_len. Equal when w2 is reached (with a
/// replayable certificate); DistinctWithinBudget when the closure is
/// exhausted below max_states without reaching w2 - a proof that no rewrite
/// path within the length bound connects the words; Inconclusive when
/// max_states is hit first.
OracleResult bfs_equal(const Band& b, const GenWord& w1, const GenWord& w2,
                       const SearchBudget& budget);

/// Precomputed basic-pair tables: contraction targets and, per element, the
/// list of basic factorizations. Built once per search.
struct BasicPairTables {
  explicit BasicPairTables(const Band& b);

  // contract_to[u][v] = uv when (u,v) is basic, else -1.
  std::vector<std::vector<int>> contract_to;
  // factorizations[g] = all basic (u,v) with uv = g.
  std::vector<std::vector<std::pair<int, int>>> factorizations;
};

/// The full breadth-first closure used by bfs_equal, exposed so callers that
/// query many words against one base (oracle sweeps, witness searches) can
/// reuse a single traversal.
class RewriteClosure {
 public:
  /// Explores from base; stops early if target (when given) is found.
  RewriteClosure(const Band& b, GenWord base, const SearchBudget& budget,
                 const GenWord* target = nullptr);

  bool contains(const GenWord& w) const;
  bool exhausted() const { return exhausted_; }
  std::size_t states() const { return order_.size(); }
  const std::vector<GenWord>& words() const { return order_; }

  /// Certificate base ->* w; w must be contained.
  RewriteCertificate certificate_to(const GenWord& w) const;
  /// Certificate w1 ->* w2 through the base; both must be contained.
  RewriteCertificate certificate_between(const GenWord& w1,
                                         const GenWord& w2) const;

 private:
  struct Parent {
    int index = -1;  // index of parent word in order_, -1 for the base
    RewriteStep step;
  };

  const Band& band_;
  std::vector<GenWord> order_;
  std::unordered_map<std::string, int> index_;
  std::vector<Parent> parents_;
  bool exhausted_ = false;

  static std::string key(const GenWord& w);
};

}  // namespace igband

#endif  // IGBAND_REWRITE_HPP_
