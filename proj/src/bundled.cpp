#include "igband/bundled.hpp"

#include <map>

namespace igband::bundled {

namespace {

// The 3-element semilattice Y = {e, f, g} with e, f > g and e, f
// incomparable. IG(Y) is adequate but not regular.
const char* const kY3 = R"(# y3: semilattice, two incomparable atoms over a zero
elements: e f g
e: e g g
f: g f g
g: g g g
)";

// Four-element band: singleton classes {a}, {b} over the right-zero pair
// {x, y}. Not normal; IG is weakly abundant but not abundant.
const char* const kBand4 = R"(# band4: two singletons over a right-zero pair
elements: a b x y
a: a y x y
b: y b x y
x: x y x y
y: y y x y
)";

// Normal band on {a},{b,c},{d},{e} with a->b the only non-forced structure
// map. The rewriting system is not confluent: c d = b d in IG without a
// common contraction.
const char* const kNormal5 = R"(# normal5: strong semilattice, phi(a) = b
elements: a b c d e
a: a b c d e
b: b b c e e
c: b b c e e
d: d e e d e
e: e e e e e
)";

// Singleton {l} over the 2x2 class {u, w, u', w'}. Not normal: the component
// projection of IG-equality fails here.
const char* const kNonnormal5 = R"(# nonnormal5: singleton over a 2x2 class
elements: l u w u' w'
l: l u' w' u' w'
u: u u w u w
w: w u w u w
u': u' u' w' u' w'
w': w' u' w' u' w'
)";

// Strong semilattice of {a,b;c,d} over {e,f;g,h} and {v}, all over {u};
// phi maps the top 2x2 bijectively onto the lower one. IG is weakly
// abundant but not abundant.
const char* const kNormal10 = R"(# normal10: four D-classes, phi bijective on the 2x2s
elements: a b c d e f g h v u
a: a b a b e f e f v u
b: a b a b e f e f v u
c: c d c d g h g h v u
d: c d c d g h g h v u
e: e f e f e f e f u u
f: e f e f e f e f u u
g: g h g h g h g h u u
h: g h g h g h g h u u
v: v v v v u u u u v u
u: u u u u u u u u u u
)";

// 2x2 rectangular band {p,q;r,s} with an adjoined identity a. Locally
// large, a chain, not normal.
const char* const kRect1 = R"(# rect1: 2x2 rectangular band with adjoined identity
elements: p q r s a
p: p q p q p
q: p q p q q
r: r s r s r
s: r s r s s
a: p q r s a
)";

const std::map<std::string, const char*>& registry() {
  static const std::map<std::string, const char*> reg = {
      {"y3", kY3},           {"band4", kBand4},
      {"normal5", kNormal5}, {"nonnormal5", kNonnormal5},
      {"normal10", kNormal10}, {"rect1", kRect1},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& names() {
  static const std::vector<std::string> n = {"y3",         "band4",
                                             "normal5",    "nonnormal5",
                                             "normal10",   "rect1"};
  return n;
}

const std::string& file_text(const std::string& name) {
  static const std::map<std::string, std::string> cache = [] {
    std::map<std::string, std::string> m;
    for (const auto& [k, v] : registry()) {
      m.emplace(k, v);
    }
    return m;
  }();
  auto it = cache.find(name);
  if (it == cache.end()) {
    throw BandError("unknown bundled band '" + name + "'");
  }
  return it->second;
}

Band band(const std::string& name) { return parse_band(file_text(name)); }

}  // namespace igband::bundled
