// igband - free idempotent generated semigroups over finite bands

#ifndef IGBAND_IGWORD_HPP_
#define IGBAND_IGWORD_HPP_

#include <utility>
#include <vector>

#include "igband/band.hpp"
#include "igband/rewrite.hpp"

namespace igband {

enum class ScanDirection { LeftToRight, RightToLeft };

/// The significant indices of a word, extracted by the greedy scan: i_1 is
/// the largest index with class(x_1), ..., class(x_{i_1}) >= class(x_{i_1});
/// k_1 the largest with class(x_{i_1}) below every class up to position k_1;
/// the scan then restarts at k_1 + 1. The number r of indices (the Y-length)
/// and the classes at the indices (the ordered Y-components) are invariants
/// of the word's class in IG(B); the right-to-left scan is the mirror image
/// and yields the same components.
struct SignificantProfile {
  ScanDirection direction = ScanDirection::LeftToRight;
  std::vector<int> indices;     // 1-based positions, increasing
  std::vector<int> stops;       // 1-based k_l per index (mirrored for RTL)
  std::vector<int> components;  // class ids, in left-to-right word order

  int y_length() const { return static_cast<int>(indices.size()); }
};

SignificantProfile significant_indices(const Band& b,
                                       const DClassDecomposition& d,
                                       const GenWord& w, ScanDirection dir);

/// The image of a word under the morphism IG(B) -> IG(Y) that sends each
/// generator to its D-class, together with its unique normal form in IG(Y).
/// Letters of both words are class ids of d (elements of
/// d.semilattice_band(b)).
struct YProjection {
  GenWord word;
  GenWord nf;
};

YProjection y_projection(const Band& b, const DClassDecomposition& d,
                         const GenWord& w);

/// A word partitioned into maximal single-component blocks whose adjacent
/// components are incomparable. Almost normal forms are not unique in
/// general, but Y-length and ordered components are class invariants.
struct AlmostNormalForm {
  GenWord word;
  std::vector<int> block_bounds;  // 1-based end positions of blocks 1..r-1
  std::vector<int> components;    // class id per block

  int block_count() const { return static_cast<int>(components.size()); }
  /// Half-open 0-based letter range of block t.
  std::pair<int, int> block_range(int t) const;
  GenWord block_word(int t) const;
};

/// Rebuilds the block structure of a word that is already in almost normal
/// form; returns nullopt when it is not (some adjacent run components are
/// comparable).
std::optional<AlmostNormalForm> as_anf(const Band& b,
                                       const DClassDecomposition& d,
                                       const GenWord& w);

/// Computes an almost normal form of w by folding its letters through the
/// ANF product, together with a replayable proof of equality with w. Blocks
/// of the result are contracted to their (unique) in-component normal forms.
/// When the band is normal, pass its StructureMorphisms: the conjugates
/// produced by absorption are then checked against the phi maps.
std::pair<AlmostNormalForm, RewriteCertificate> anf(
    const Band& b, const DClassDecomposition& d, const StructureMorphisms* m,
    const GenWord& w);

/// The ANF of the product of two ANFs. Cases on the boundary components
/// alpha_r (last of left) and beta_1 (first of right):
///   incomparable - concatenate;
///   alpha_r >= beta_1 - conjugate the trailing blocks of left through the
///     first letter of right, walking left while components dominate beta_1;
///   alpha_r < beta_1 - dually, conjugate the leading blocks of right into
///     the last block of left.
/// Blocks of the result are re-normalized. The certificate starts at the
/// concatenation of the two input words.
std::pair<AlmostNormalForm, RewriteCertificate> anf_multiply(
    const Band& b, const DClassDecomposition& d, const StructureMorphisms* m,
    const AlmostNormalForm& left, const AlmostNormalForm& right);

/// "e h | v" - blocks separated by '|'.
std::string format_anf(const Band& b, const AlmostNormalForm& a);

}  // namespace igband

#endif  // IGBAND_IGWORD_HPP_
