// igband - free idempotent generated semigroups over finite bands

#ifndef IGBAND_BAND_HPP_
#define IGBAND_BAND_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace igband {

/// Thrown on malformed input (band files, words, witness files) and on
/// precondition violations of the public operations.
struct BandError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite band: a semigroup in which every element is idempotent, given by
/// its full Cayley table. Elements are addressed by index in declaration
/// order; \c table[i][j] is the index of the product of element i by j.
///
/// Instances produced by parse_band() and build_strong_semilattice() are
/// validated (idempotent diagonal, associative table) and immutable by
/// convention: nothing in this library mutates a Band after construction.
struct Band {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;

  int size() const { return static_cast<int>(elements.size()); }
  int mul(int x, int y) const { return table[x][y]; }
  const std::string& name(int x) const { return elements[x]; }

  /// Index of a named element, or -1.
  int find(const std::string& name) const;
  /// Index of a named element; throws BandError if absent.
  int index_of(const std::string& name) const;
};

/// Parses the plain-text band file format:
///
///     # comment
///     elements: a b x y
///     a: a y x y
///     b: y b x y
///     x: x y x y
///     y: y y x y
///
/// Rows may appear in any order but every element needs exactly one row.
/// Validates idempotency and associativity; errors carry the line number and
/// the offending names.
Band parse_band(const std::string& text);

/// Canonical serialization; parse_band(serialize_band(b)) == b.
std::string serialize_band(const Band& b);

/// The two products of a basic pair. (e, f) is basic when
/// {e, f} intersects {ef, fe}; these pairs generate the defining
/// relations of IG(B).
struct BasicProducts {
  int ef;
  int fe;
};

std::optional<BasicProducts> is_basic_pair(const Band& b, int e, int f);

/// The decomposition of a band as a semilattice Y of rectangular bands: the
/// classes are the D-classes, and the induced meet on class ids makes the set
/// of classes a meet semilattice with class(x) ∧ class(y) = class(xy).
struct DClassDecomposition {
  std::vector<int> class_of;             // element index -> class id
  std::vector<std::vector<int>> classes; // class id -> member element indices
  std::vector<std::vector<int>> meet;    // class id x class id -> class id

  int num_classes() const { return static_cast<int>(classes.size()); }
  bool leq(int a, int b) const { return meet[a][b] == a; }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  /// R-related within the band (ef = f and fe = e).
  static bool related_r(const Band& b, int e, int f) {
    return b.mul(e, f) == f && b.mul(f, e) == e;
  }
  /// L-related within the band (ef = e and fe = f).
  static bool related_l(const Band& b, int e, int f) {
    return b.mul(e, f) == e && b.mul(f, e) == f;
  }

  /// A printable name for a class: "Y" + name of its first member.
  std::string class_name(const Band& b, int cls) const;

  /// The semilattice Y itself as a band (element i = class i, product =
  /// meet). Words over B project into words over this band.
  Band semilattice_band(const Band& b) const;
};

DClassDecomposition decompose(const Band& b);

/// A D-class of b as a standalone band. to_parent maps the component's
/// element indices back into b; from_parent is the partial inverse (-1 for
/// elements outside the class).
struct ComponentBand {
  Band band;
  std::vector<int> to_parent;
  std::vector<int> from_parent;
};

ComponentBand component_band(const Band& b, const DClassDecomposition& d,
                             int cls);

/// Element tuple refuting a classification flag, with a short note saying
/// what it violates.
struct Witness {
  std::vector<int> elements;
  std::string note;
};

struct BandClassification {
  bool is_semilattice = false;
  bool is_rectangular = false;
  bool is_chain = false;
  bool is_normal = false;
  bool is_regular_band = false;
  bool is_locally_large = false;
  bool is_y_basic = false;
  /// Only meaningful for normal bands; nullopt means "not applicable".
  std::optional<bool> is_pliant;

  /// One witness per false flag, keyed by flag name.
  std::map<std::string, Witness> witnesses;
};

BandClassification classify(const Band& b, const DClassDecomposition& d);

/// The structure morphisms phi_{alpha,beta} of a normal band, defined for
/// every comparable pair beta <= alpha. Derived from the table as
/// phi_{alpha,beta}(x) = x f x for f in B_beta (the choice of f is
/// irrelevant for normal bands; this is checked exhaustively).
struct StructureMorphisms {
  // phi[alpha][beta][x] for x in B_alpha (by global element index);
  // entries are -1 when beta </= alpha or x not in B_alpha.
  std::vector<std::vector<std::vector<int>>> phi;

  int apply(int alpha, int beta, int x) const;
};

/// Throws BandError("not a normal band") when classify(b).is_normal is
/// false, and std::logic_error if the derived maps fail (B1), (B2), the
/// product law or choice-independence - which would indicate a decomposition
/// bug, not bad input.
StructureMorphisms structure_morphisms(const Band& b,
                                       const DClassDecomposition& d);

/// Builds a normal band from a strong-semilattice description:
///
///     order: alpha > beta
///     order: alpha > gamma
///     component alpha: rows=2 cols=2 names=a b c d
///     component beta: rows=1 cols=1 names=e
///     phi alpha beta: a->e b->e c->e d->e
///
/// phi lines are given for covering pairs only; a missing phi onto a
/// one-element component is filled in (it is forced). Composites along
/// different covering chains must agree (condition (B2)); the synthesized
/// table uses xy = (x phi_{alpha,alpha^beta})(y phi_{beta,alpha^beta}) and is
/// then validated as a Band whose decomposition recovers the description.
Band build_strong_semilattice(const std::string& text);

}  // namespace igband

#endif  // IGBAND_BAND_HPP_
