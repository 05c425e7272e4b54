#include "igband/band.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace igband {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '\'';
  });
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

// Strips a trailing '# ...' comment and surrounding whitespace.
std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  std::string s = (pos == std::string::npos) ? line : line.substr(0, pos);
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) {
    return "";
  }
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line_no, const std::string& msg) {
  throw BandError("line " + std::to_string(line_no) + ": " + msg);
}

void validate_band(const Band& b) {
  int n = b.size();
  for (int e = 0; e < n; ++e) {
    if (b.mul(e, e) != e) {
      throw BandError("non-idempotent diagonal at " + b.name(e));
    }
  }
  for (int e = 0; e < n; ++e) {
    for (int f = 0; f < n; ++f) {
      for (int g = 0; g < n; ++g) {
        if (b.mul(b.mul(e, f), g) != b.mul(e, b.mul(f, g))) {
          throw BandError("associativity failure at triple (" + b.name(e) +
                          ", " + b.name(f) + ", " + b.name(g) + ")");
        }
      }
    }
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

int Band::find(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (elements[i] == name) {
      return i;
    }
  }
  return -1;
}

int Band::index_of(const std::string& name) const {
  int i = find(name);
  if (i < 0) {
    throw BandError("unknown element name '" + name + "'");
  }
  return i;
}

Band parse_band(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;

  Band b;
  bool have_header = false;
  std::vector<bool> row_seen;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    if (line.empty()) {
      continue;
    }
    auto toks = tokenize(line);
    if (!have_header) {
      if (toks[0] != "elements:") {
        fail(line_no, "expected 'elements:' header, got '" + toks[0] + "'");
      }
      if (toks.size() < 2) {
        fail(line_no, "empty element list");
      }
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (!valid_name(toks[i])) {
          fail(line_no, "invalid element name '" + toks[i] + "' (column " +
                            std::to_string(i) + ")");
        }
        if (b.find(toks[i]) >= 0) {
          fail(line_no, "duplicate element name '" + toks[i] + "'");
        }
        b.elements.push_back(toks[i]);
      }
      int n = b.size();
      b.table.assign(n, std::vector<int>(n, -1));
      row_seen.assign(n, false);
      have_header = true;
      continue;
    }

    // Table row: "<name>: e1 e2 ... en"
    if (toks[0].empty() || toks[0].back() != ':') {
      fail(line_no, "expected a table row '<name>: ...'");
    }
    std::string row_name = toks[0].substr(0, toks[0].size() - 1);
    int row = b.find(row_name);
    if (row < 0) {
      fail(line_no, "unknown element name '" + row_name + "'");
    }
    if (row_seen[row]) {
      fail(line_no, "duplicate row for '" + row_name + "'");
    }
    if (static_cast<int>(toks.size()) - 1 != b.size()) {
      fail(line_no, "row for '" + row_name + "' has " +
                        std::to_string(toks.size() - 1) + " entries, expected " +
                        std::to_string(b.size()));
    }
    for (int j = 0; j < b.size(); ++j) {
      int v = b.find(toks[j + 1]);
      if (v < 0) {
        fail(line_no, "unknown element name '" + toks[j + 1] + "' (column " +
                          std::to_string(j + 1) + ")");
      }
      b.table[row][j] = v;
    }
    row_seen[row] = true;
  }

  if (!have_header) {
    throw BandError("empty band file");
  }
  for (int i = 0; i < b.size(); ++i) {
    if (!row_seen[i]) {
      throw BandError("missing table row for '" + b.name(i) + "'");
    }
  }
  validate_band(b);
  return b;
}

std::string serialize_band(const Band& b) {
  std::ostringstream out;
  out << "elements:";
  for (const auto& e : b.elements) {
    out << ' ' << e;
  }
  out << '\n';
  for (int i = 0; i < b.size(); ++i) {
    out << b.name(i) << ':';
    for (int j = 0; j < b.size(); ++j) {
      out << ' ' << b.name(b.mul(i, j));
    }
    out << '\n';
  }
  return out.str();
}

std::optional<BasicProducts> is_basic_pair(const Band& b, int e, int f) {
  int ef = b.mul(e, f);
  int fe = b.mul(f, e);
  if (ef == e || ef == f || fe == e || fe == f) {
    return BasicProducts{ef, fe};
  }
  return std::nullopt;
}

std::string DClassDecomposition::class_name(const Band& b, int cls) const {
  return "Y" + b.name(classes[cls][0]);
}

Band DClassDecomposition::semilattice_band(const Band& b) const {
  Band y;
  int k = num_classes();
  for (int c = 0; c < k; ++c) {
    y.elements.push_back(class_name(b, c));
  }
  y.table.assign(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a) {
    for (int c = 0; c < k; ++c) {
      y.table[a][c] = meet[a][c];
    }
  }
  return y;
}

DClassDecomposition decompose(const Band& b) {
  int n = b.size();
  UnionFind uf(n);
  for (int e = 0; e < n; ++e) {
    for (int f = e + 1; f < n; ++f) {
      if (DClassDecomposition::related_l(b, e, f) ||
          DClassDecomposition::related_r(b, e, f)) {
        uf.unite(e, f);
      }
    }
  }

  DClassDecomposition d;
  d.class_of.assign(n, -1);
  for (int e = 0; e < n; ++e) {
    int root = uf.find(e);
    if (d.class_of[root] < 0) {
      d.class_of[root] = d.num_classes();
      d.classes.emplace_back();
    }
    d.class_of[e] = d.class_of[root];
    d.classes[d.class_of[e]].push_back(e);
  }

  int k = d.num_classes();
  d.meet.assign(k, std::vector<int>(k, -1));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int a = d.class_of[x];
      int c = d.class_of[y];
      int m = d.class_of[b.mul(x, y)];
      if (d.meet[a][c] < 0) {
        d.meet[a][c] = m;
      } else if (d.meet[a][c] != m) {
        // Cannot happen for a valid band: D-classes multiply classwise.
        throw std::logic_error("D-class product is not well defined");
      }
    }
  }
  for (int a = 0; a < k; ++a) {
    for (int c = 0; c < k; ++c) {
      if (d.meet[a][c] != d.meet[c][a]) {
        throw std::logic_error("D-class meet is not commutative");
      }
    }
  }
  // Each class is a rectangular band under the restricted table.
  for (const auto& cls : d.classes) {
    for (int x : cls) {
      for (int y : cls) {
        if (b.mul(b.mul(x, y), x) != x) {
          throw std::logic_error("D-class is not rectangular");
        }
      }
    }
  }
  return d;
}

ComponentBand component_band(const Band& b, const DClassDecomposition& d,
                             int cls) {
  ComponentBand c;
  c.from_parent.assign(b.size(), -1);
  for (int e : d.classes[cls]) {
    c.from_parent[e] = static_cast<int>(c.to_parent.size());
    c.to_parent.push_back(e);
    c.band.elements.push_back(b.name(e));
  }
  int m = static_cast<int>(c.to_parent.size());
  c.band.table.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      c.band.table[i][j] = c.from_parent[b.mul(c.to_parent[i], c.to_parent[j])];
    }
  }
  return c;
}

BandClassification classify(const Band& b, const DClassDecomposition& d) {
  BandClassification r;
  int n = b.size();

  r.is_semilattice = true;
  for (int e = 0; e < n && r.is_semilattice; ++e) {
    for (int f = 0; f < n; ++f) {
      if (b.mul(e, f) != b.mul(f, e)) {
        r.is_semilattice = false;
        r.witnesses["is_semilattice"] = {{e, f}, "ef != fe"};
        break;
      }
    }
  }

  r.is_rectangular = true;
  for (int x = 0; x < n && r.is_rectangular; ++x) {
    for (int y = 0; y < n; ++y) {
      if (b.mul(b.mul(x, y), x) != x) {
        r.is_rectangular = false;
        r.witnesses["is_rectangular"] = {{x, y}, "xyx != x"};
        break;
      }
    }
  }

  r.is_chain = true;
  for (int a = 0; a < d.num_classes() && r.is_chain; ++a) {
    for (int c = a + 1; c < d.num_classes(); ++c) {
      if (!d.comparable(a, c)) {
        r.is_chain = false;
        r.witnesses["is_chain"] = {{d.classes[a][0], d.classes[c][0]},
                                   "classes of these elements are incomparable"};
        break;
      }
    }
  }

  r.is_normal = true;
  for (int x = 0; x < n && r.is_normal; ++x) {
    for (int y = 0; y < n && r.is_normal; ++y) {
      for (int z = 0; z < n; ++z) {
        int xyzx = b.mul(b.mul(b.mul(x, y), z), x);
        int xzyx = b.mul(b.mul(b.mul(x, z), y), x);
        if (xyzx != xzyx) {
          r.is_normal = false;
          r.witnesses["is_normal"] = {{x, y, z}, "xyzx != xzyx"};
          break;
        }
      }
    }
  }

  r.is_regular_band = true;
  for (int x = 0; x < n && r.is_regular_band; ++x) {
    for (int y = 0; y < n && r.is_regular_band; ++y) {
      for (int z = 0; z < n; ++z) {
        int xyxzx = b.mul(b.mul(b.mul(b.mul(x, y), x), z), x);
        int xyzx = b.mul(b.mul(b.mul(x, y), z), x);
        if (xyxzx != xyzx) {
          r.is_regular_band = false;
          r.witnesses["is_regular_band"] = {{x, y, z}, "xyxzx != xyzx"};
          break;
        }
      }
    }
  }

  r.is_locally_large = true;
  for (int u = 0; u < n && r.is_locally_large; ++u) {
    for (int v = 0; v < n; ++v) {
      int a = d.class_of[u];
      int c = d.class_of[v];
      if (a != c && d.leq(a, c)) {
        if (b.mul(u, v) != u || b.mul(v, u) != u) {
          r.is_locally_large = false;
          r.witnesses["is_locally_large"] = {{u, v},
                                             "uv != u or vu != u below v"};
          break;
        }
      }
    }
  }

  r.is_y_basic = true;
  for (const auto& cls : d.classes) {
    bool left_zero = true;
    bool right_zero = true;
    std::vector<int> lz_pair, rz_pair;
    for (int p : cls) {
      for (int q : cls) {
        if (b.mul(p, q) != p && lz_pair.empty()) {
          left_zero = false;
          lz_pair = {p, q};
        }
        if (b.mul(p, q) != q && rz_pair.empty()) {
          right_zero = false;
          rz_pair = {p, q};
        }
      }
    }
    if (!left_zero && !right_zero) {
      r.is_y_basic = false;
      r.witnesses["is_y_basic"] = {
          {lz_pair[0], lz_pair[1], rz_pair[0], rz_pair[1]},
          "class is neither left zero (first pair) nor right zero (second)"};
      break;
    }
  }

  if (!r.is_normal) {
    r.is_pliant = std::nullopt;  // defined only for normal bands
  } else {
    bool pliant = true;
    for (int cls = 0; cls < d.num_classes() && pliant; ++cls) {
      int f = d.classes[cls][0];
      int constant = -1;
      int first_u = -1;
      for (int u = 0; u < n; ++u) {
        int cu = d.class_of[u];
        if (cu == cls || !d.leq(cls, cu)) {
          continue;  // only classes strictly above
        }
        int image = b.mul(b.mul(u, f), u);  // u phi_{class(u), cls}
        if (constant < 0) {
          constant = image;
          first_u = u;
        } else if (image != constant) {
          pliant = false;
          r.witnesses["is_pliant"] = {
              {first_u, u, constant, image},
              "phi images into the class of the last two elements differ"};
          break;
        }
      }
    }
    r.is_pliant = pliant;
  }

  return r;
}

int StructureMorphisms::apply(int alpha, int beta, int x) const {
  int y = phi[alpha][beta][x];
  if (y < 0) {
    throw BandError("phi undefined: class pair not comparable or element "
                    "outside the source class");
  }
  return y;
}

StructureMorphisms structure_morphisms(const Band& b,
                                       const DClassDecomposition& d) {
  auto cls = classify(b, d);
  if (!cls.is_normal) {
    throw BandError("not a normal band");
  }
  int n = b.size();
  int k = d.num_classes();
  StructureMorphisms m;
  m.phi.assign(k, std::vector<std::vector<int>>(k, std::vector<int>(n, -1)));

  for (int alpha = 0; alpha < k; ++alpha) {
    for (int beta = 0; beta < k; ++beta) {
      if (!d.leq(beta, alpha)) {
        continue;
      }
      for (int x : d.classes[alpha]) {
        int image = -1;
        for (int f : d.classes[beta]) {
          int xfx = b.mul(b.mul(x, f), x);
          if (image < 0) {
            image = xfx;
          } else if (xfx != image) {
            throw std::logic_error(
                "phi derivation depends on the choice of f (decomposition "
                "bug)");
          }
        }
        if (d.class_of[image] != beta) {
          throw std::logic_error("phi image lands outside the target class");
        }
        m.phi[alpha][beta][x] = image;
      }
    }
  }

  // (B1), (B2) and the product law.
  for (int alpha = 0; alpha < k; ++alpha) {
    for (int x : d.classes[alpha]) {
      if (m.phi[alpha][alpha][x] != x) {
        throw std::logic_error("phi_{alpha,alpha} is not the identity");
      }
    }
  }
  for (int alpha = 0; alpha < k; ++alpha) {
    for (int beta = 0; beta < k; ++beta) {
      for (int gamma = 0; gamma < k; ++gamma) {
        if (!d.leq(beta, alpha) || !d.leq(gamma, beta)) {
          continue;
        }
        for (int x : d.classes[alpha]) {
          if (m.phi[beta][gamma][m.phi[alpha][beta][x]] !=
              m.phi[alpha][gamma][x]) {
            throw std::logic_error("phi composition law (B2) fails");
          }
        }
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int alpha = d.class_of[x];
      int beta = d.class_of[y];
      int ab = d.meet[alpha][beta];
      if (b.mul(x, y) !=
          b.mul(m.phi[alpha][ab][x], m.phi[beta][ab][y])) {
        throw std::logic_error("strong semilattice product law fails");
      }
    }
  }
  return m;
}

namespace {

struct SsComponent {
  std::string name;
  int rows = 0;
  int cols = 0;
  std::vector<std::string> names;  // row-major
};

}  // namespace

Band build_strong_semilattice(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;

  std::vector<SsComponent> comps;
  std::vector<std::pair<std::string, std::string>> order_pairs;
  // phi_lines[(upper, lower)] = list of "x->y" tokens
  std::map<std::pair<std::string, std::string>, std::vector<std::string>>
      phi_lines;

  auto comp_index = [&](const std::string& nm) {
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (comps[i].name == nm) {
        return static_cast<int>(i);
      }
    }
    return -1;
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    if (line.empty()) {
      continue;
    }
    auto toks = tokenize(line);
    if (toks[0] == "order:") {
      if (toks.size() != 4 || toks[2] != ">") {
        fail(line_no, "expected 'order: <alpha> > <beta>'");
      }
      order_pairs.emplace_back(toks[1], toks[3]);
    } else if (toks[0] == "component") {
      if (toks.size() < 5 || toks[1].empty()) {
        fail(line_no, "expected 'component <name>: rows=R cols=C names=...'");
      }
      SsComponent c;
      c.name = toks[1];
      if (!c.name.empty() && c.name.back() == ':') {
        c.name.pop_back();
      }
      if (comp_index(c.name) >= 0) {
        fail(line_no, "duplicate component '" + c.name + "'");
      }
      std::size_t i = 2;
      if (toks[i].rfind("rows=", 0) != 0 || toks[i + 1].rfind("cols=", 0) != 0 ||
          toks[i + 2].rfind("names=", 0) != 0) {
        fail(line_no, "expected rows=, cols=, names= in that order");
      }
      c.rows = std::stoi(toks[i].substr(5));
      c.cols = std::stoi(toks[i + 1].substr(5));
      if (c.rows <= 0 || c.cols <= 0) {
        fail(line_no, "rows and cols must be positive");
      }
      c.names.push_back(toks[i + 2].substr(6));
      for (std::size_t j = i + 3; j < toks.size(); ++j) {
        c.names.push_back(toks[j]);
      }
      if (static_cast<int>(c.names.size()) != c.rows * c.cols) {
        fail(line_no, "component '" + c.name + "' lists " +
                          std::to_string(c.names.size()) + " names, expected " +
                          std::to_string(c.rows * c.cols));
      }
      for (const auto& nm : c.names) {
        if (!valid_name(nm)) {
          fail(line_no, "invalid element name '" + nm + "'");
        }
      }
      comps.push_back(std::move(c));
    } else if (toks[0] == "phi") {
      if (toks.size() < 4 || toks[2].empty() || toks[2].back() != ':') {
        fail(line_no, "expected 'phi <alpha> <beta>: x->y ...'");
      }
      std::string upper = toks[1];
      std::string lower = toks[2].substr(0, toks[2].size() - 1);
      auto key = std::make_pair(upper, lower);
      if (phi_lines.count(key)) {
        fail(line_no, "duplicate phi for " + upper + " > " + lower);
      }
      phi_lines[key] = std::vector<std::string>(toks.begin() + 3, toks.end());
    } else {
      fail(line_no, "unrecognized directive '" + toks[0] + "'");
    }
  }

  int k = static_cast<int>(comps.size());
  if (k == 0) {
    throw BandError("strong-semilattice description has no components");
  }

  // Strict order (transitive closure of the given covering relations).
  std::vector<std::vector<bool>> gt(k, std::vector<bool>(k, false));
  for (const auto& [up, lo] : order_pairs) {
    int a = comp_index(up);
    int c = comp_index(lo);
    if (a < 0 || c < 0) {
      throw BandError("order relation mentions unknown component '" +
                      (a < 0 ? up : lo) + "'");
    }
    gt[a][c] = true;
  }
  for (int m = 0; m < k; ++m) {
    for (int a = 0; a < k; ++a) {
      for (int c = 0; c < k; ++c) {
        if (gt[a][m] && gt[m][c]) {
          gt[a][c] = true;
        }
      }
    }
  }
  for (int a = 0; a < k; ++a) {
    if (gt[a][a]) {
      throw BandError("order contains a cycle through '" + comps[a].name + "'");
    }
  }
  auto geq = [&](int a, int c) { return a == c || gt[a][c]; };

  // Meet semilattice check: every pair needs a unique greatest lower bound.
  std::vector<std::vector<int>> meet(k, std::vector<int>(k, -1));
  for (int a = 0; a < k; ++a) {
    for (int c = 0; c < k; ++c) {
      std::vector<int> lbs;
      for (int m = 0; m < k; ++m) {
        if (geq(a, m) && geq(c, m)) {
          lbs.push_back(m);
        }
      }
      if (lbs.empty()) {
        throw BandError("non-meet-semilattice order: " + comps[a].name +
                        " and " + comps[c].name + " have no lower bound");
      }
      int best = lbs[0];
      for (int m : lbs) {
        if (gt[m][best]) {
          best = m;
        }
      }
      for (int m : lbs) {
        if (!geq(best, m)) {
          throw BandError("non-meet-semilattice order: " + comps[a].name +
                          " and " + comps[c].name +
                          " have incomparable maximal lower bounds " +
                          comps[best].name + " and " + comps[m].name);
        }
      }
      meet[a][c] = best;
    }
  }

  // Covering pairs of the strict order.
  auto covers = [&](int a, int c) {
    if (!gt[a][c]) {
      return false;
    }
    for (int m = 0; m < k; ++m) {
      if (gt[a][m] && gt[m][c]) {
        return false;
      }
    }
    return true;
  };

  // Element bookkeeping: global indices, component-local rectangular product.
  Band b;
  std::vector<int> comp_of;    // global element -> component
  std::vector<int> local_of;   // global element -> local index (row-major)
  std::vector<int> base(k, 0); // component -> first global index
  for (int c = 0; c < k; ++c) {
    base[c] = b.size();
    for (const auto& nm : comps[c].names) {
      if (b.find(nm) >= 0) {
        throw BandError("duplicate element name '" + nm +
                        "' across components");
      }
      b.elements.push_back(nm);
      comp_of.push_back(c);
      local_of.push_back(static_cast<int>(local_of.size()) - base[c]);
    }
  }
  auto rect_mul = [&](int c, int x, int y) {
    // x, y global indices within component c; product keeps x's row, y's col.
    int lx = local_of[x];
    int ly = local_of[y];
    int row = lx / comps[c].cols;
    int col = ly % comps[c].cols;
    return base[c] + row * comps[c].cols + col;
  };

  // Covering-pair morphisms (explicit or forced onto singleton components).
  std::map<std::pair<int, int>, std::vector<int>> cover_phi;
  for (const auto& [key, maps] : phi_lines) {
    int a = comp_index(key.first);
    int c = comp_index(key.second);
    if (a < 0 || c < 0) {
      throw BandError("phi mentions unknown component");
    }
    if (!covers(a, c)) {
      throw BandError("phi " + key.first + " " + key.second +
                      ": not a covering pair (give phi for covering pairs "
                      "only)");
    }
    std::vector<int> f(comps[a].names.size(), -1);
    for (const auto& tok : maps) {
      auto arrow = tok.find("->");
      if (arrow == std::string::npos) {
        throw BandError("phi " + key.first + " " + key.second +
                        ": malformed mapping '" + tok + "'");
      }
      std::string from = tok.substr(0, arrow);
      std::string to = tok.substr(arrow + 2);
      int gx = b.index_of(from);
      int gy = b.index_of(to);
      if (comp_of[gx] != a || comp_of[gy] != c) {
        throw BandError("phi " + key.first + " " + key.second + ": '" + tok +
                        "' does not map the upper component into the lower");
      }
      f[local_of[gx]] = gy;
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] < 0) {
        throw BandError("phi " + key.first + " " + key.second +
                        ": no image for '" + comps[a].names[i] + "'");
      }
    }
    cover_phi[{a, c}] = std::move(f);
  }
  for (int a = 0; a < k; ++a) {
    for (int c = 0; c < k; ++c) {
      if (!covers(a, c) || cover_phi.count({a, c})) {
        continue;
      }
      if (comps[c].names.size() != 1) {
        throw BandError("missing phi " + comps[a].name + " " + comps[c].name +
                        " (target has more than one element)");
      }
      cover_phi[{a, c}] =
          std::vector<int>(comps[a].names.size(), base[c]);
    }
  }
  // Each covering phi must be a morphism of rectangular bands.
  for (const auto& [key, f] : cover_phi) {
    auto [a, c] = key;
    int sz = static_cast<int>(comps[a].names.size());
    for (int i = 0; i < sz; ++i) {
      for (int j = 0; j < sz; ++j) {
        int xy = rect_mul(a, base[a] + i, base[a] + j);
        if (rect_mul(c, f[i], f[j]) != f[local_of[xy]]) {
          throw BandError("phi " + comps[a].name + " " + comps[c].name +
                          " is not a morphism: breaks at (" +
                          comps[a].names[i] + ", " + comps[a].names[j] + ")");
        }
      }
    }
  }

  // Compose along covering chains, checking path-independence (B2).
  // full_phi[a][c] maps local indices of component a into global elements of
  // component c, for every a >= c.
  std::vector<std::vector<std::vector<int>>> full_phi(
      k, std::vector<std::vector<int>>(k));
  // Process lower components in topological order (fewest below first):
  // full_phi[a][c] composed as cover step a -> m, then full_phi[m][c].
  std::vector<std::vector<std::string>> path_name(
      k, std::vector<std::string>(k));
  for (int a = 0; a < k; ++a) {
    full_phi[a][a].resize(comps[a].names.size());
    for (std::size_t i = 0; i < comps[a].names.size(); ++i) {
      full_phi[a][a][i] = base[a] + static_cast<int>(i);
    }
    path_name[a][a] = comps[a].name;
  }
  // Iterate until fixpoint over order depth; k is a safe bound.
  for (int round = 0; round < k; ++round) {
    for (int a = 0; a < k; ++a) {
      for (int c = 0; c < k; ++c) {
        if (!gt[a][c]) {
          continue;
        }
        for (const auto& [key, f] : cover_phi) {
          auto [up, mid] = key;
          if (up != a || !geq(mid, c) || full_phi[mid][c].empty()) {
            continue;
          }
          std::vector<int> comp(comps[a].names.size());
          for (std::size_t i = 0; i < comp.size(); ++i) {
            comp[i] = full_phi[mid][c][local_of[f[i]]];
          }
          std::string via =
              comps[a].name + ">" + path_name[mid][c];
          if (full_phi[a][c].empty()) {
            full_phi[a][c] = std::move(comp);
            path_name[a][c] = via;
          } else if (full_phi[a][c] != comp) {
            throw BandError("phi path-dependence: composites along " +
                            path_name[a][c] + " and " + via + " differ");
          }
        }
      }
    }
  }
  for (int a = 0; a < k; ++a) {
    for (int c = 0; c < k; ++c) {
      if (gt[a][c] && full_phi[a][c].empty()) {
        throw std::logic_error("phi composition missing for " +
                               comps[a].name + " > " + comps[c].name);
      }
    }
  }

  // Synthesize the table via the strong-semilattice product law.
  int n = b.size();
  b.table.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int a = comp_of[x];
      int c = comp_of[y];
      int m = meet[a][c];
      int xm = full_phi[a][m][local_of[x]];
      int ym = full_phi[c][m][local_of[y]];
      b.table[x][y] = rect_mul(m, xm, ym);
    }
  }

  validate_band(b);

  // The decomposition of the result must recover the description.
  auto d = decompose(b);
  if (d.num_classes() != k) {
    throw BandError("table validation failure: synthesized band has " +
                    std::to_string(d.num_classes()) + " D-classes, expected " +
                    std::to_string(k));
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if ((d.class_of[x] == d.class_of[y]) != (comp_of[x] == comp_of[y])) {
        throw BandError(
            "table validation failure: D-classes do not match components");
      }
    }
  }
  return b;
}

}  // namespace igband
