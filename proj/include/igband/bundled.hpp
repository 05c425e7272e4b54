// igband - free idempotent generated semigroups over finite bands

#ifndef IGBAND_BUNDLED_HPP_
#define IGBAND_BUNDLED_HPP_

#include <string>
#include <vector>

#include "igband/band.hpp"

namespace igband::bundled {

/// Names of the bands shipped with the library:
///   y3         - the 3-element semilattice with two incomparable atoms
///   band4      - 4-element non-normal band (two singletons over a
///                right-zero pair)
///   normal5    - 5-element normal band without unique IG normal forms
///   nonnormal5 - 5-element non-normal band (singleton over a 2x2)
///   normal10   - 10-element normal band with four D-classes
///   rect1      - 2x2 rectangular band with an adjoined identity
const std::vector<std::string>& names();

/// The band-file text for a bundled band; throws BandError for unknown
/// names.
const std::string& file_text(const std::string& name);

Band band(const std::string& name);

}  // namespace igband::bundled

#endif  // IGBAND_BUNDLED_HPP_
