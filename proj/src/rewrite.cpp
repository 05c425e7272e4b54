#include "igband/rewrite.hpp"

#include <algorithm>
#include <sstream>

namespace igband {

GenWord GenWord::concat(const GenWord& other) const {
  GenWord out;
  out.letters.reserve(letters.size() + other.letters.size());
  out.letters = letters;
  out.letters.insert(out.letters.end(), other.letters.begin(),
                     other.letters.end());
  return out;
}

GenWord parse_word(const Band& b, const std::string& names) {
  std::istringstream in(names);
  GenWord w;
  std::string tok;
  while (in >> tok) {
    w.letters.push_back(b.index_of(tok));
  }
  if (w.letters.empty()) {
    throw BandError("empty word");
  }
  return w;
}

std::string format_word(const Band& b, const GenWord& w) {
  std::string out;
  for (int i = 0; i < w.size(); ++i) {
    if (i) {
      out += ' ';
    }
    out += b.name(w[i]);
  }
  return out;
}

RewriteStep RewriteStep::inverted() const {
  RewriteStep s = *this;
  s.kind = (kind == StepKind::Contraction) ? StepKind::Expansion
                                           : StepKind::Contraction;
  return s;
}

GenWord apply_step(const Band& b, const GenWord& w, const RewriteStep& s) {
  auto basic = is_basic_pair(b, s.u, s.v);
  if (!basic || b.mul(s.u, s.v) != s.product) {
    throw BandError("invalid step: (" + b.name(s.u) + ", " + b.name(s.v) +
                    ") is not a basic pair with the stated product");
  }
  GenWord out;
  if (s.kind == StepKind::Contraction) {
    if (s.position < 0 || s.position + 1 >= w.size()) {
      throw BandError("contraction position out of range");
    }
    if (w[s.position] != s.u || w[s.position + 1] != s.v) {
      throw BandError("contraction does not match the word at position " +
                      std::to_string(s.position));
    }
    out.letters.assign(w.letters.begin(), w.letters.begin() + s.position);
    out.letters.push_back(s.product);
    out.letters.insert(out.letters.end(),
                       w.letters.begin() + s.position + 2, w.letters.end());
  } else {
    if (s.position < 0 || s.position >= w.size()) {
      throw BandError("expansion position out of range");
    }
    if (w[s.position] != s.product) {
      throw BandError("expansion does not match the word at position " +
                      std::to_string(s.position));
    }
    out.letters.assign(w.letters.begin(), w.letters.begin() + s.position);
    out.letters.push_back(s.u);
    out.letters.push_back(s.v);
    out.letters.insert(out.letters.end(),
                       w.letters.begin() + s.position + 1, w.letters.end());
  }
  return out;
}

bool check_certificate(const Band& b, const RewriteCertificate& c) {
  GenWord w = c.start;
  if (w.letters.empty()) {
    return false;
  }
  try {
    for (const auto& s : c.steps) {
      w = apply_step(b, w, s);
    }
  } catch (const BandError&) {
    return false;
  }
  return w == c.end;
}

RewriteCertificate chain_certificates(const RewriteCertificate& first,
                                      const RewriteCertificate& second) {
  if (!(first.end == second.start)) {
    throw BandError("certificates do not chain: end/start mismatch");
  }
  RewriteCertificate out;
  out.start = first.start;
  out.steps = first.steps;
  out.steps.insert(out.steps.end(), second.steps.begin(), second.steps.end());
  out.end = second.end;
  return out;
}

RewriteCertificate invert_certificate(const RewriteCertificate& c) {
  RewriteCertificate out;
  out.start = c.end;
  out.end = c.start;
  out.steps.reserve(c.steps.size());
  for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) {
    out.steps.push_back(it->inverted());
  }
  return out;
}

std::string serialize_certificate(const Band& b, const RewriteCertificate& c) {
  std::ostringstream out;
  out << "start: " << format_word(b, c.start) << '\n';
  for (const auto& s : c.steps) {
    if (s.kind == StepKind::Contraction) {
      out << s.position << " C " << b.name(s.u) << ' ' << b.name(s.v)
          << " -> " << b.name(s.product) << '\n';
    } else {
      out << s.position << " E " << b.name(s.product) << " -> " << b.name(s.u)
          << ' ' << b.name(s.v) << '\n';
    }
  }
  out << "end: " << format_word(b, c.end) << '\n';
  return out.str();
}

RewriteCertificate parse_certificate(const Band& b, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  RewriteCertificate c;
  bool have_start = false;
  bool have_end = false;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      continue;
    }
    line = line.substr(first);
    if (line.rfind("start:", 0) == 0) {
      c.start = parse_word(b, line.substr(6));
      have_start = true;
      continue;
    }
    if (line.rfind("end:", 0) == 0) {
      c.end = parse_word(b, line.substr(4));
      have_end = true;
      continue;
    }
    std::istringstream ls(line);
    RewriteStep s;
    std::string kind, a1, a2, arrow, a3;
    if (!(ls >> s.position >> kind)) {
      throw BandError("malformed certificate line: " + line);
    }
    if (kind == "C") {
      if (!(ls >> a1 >> a2 >> arrow >> a3) || arrow != "->") {
        throw BandError("malformed contraction line: " + line);
      }
      s.kind = StepKind::Contraction;
      s.u = b.index_of(a1);
      s.v = b.index_of(a2);
      s.product = b.index_of(a3);
    } else if (kind == "E") {
      if (!(ls >> a1 >> arrow >> a2 >> a3) || arrow != "->") {
        throw BandError("malformed expansion line: " + line);
      }
      s.kind = StepKind::Expansion;
      s.product = b.index_of(a1);
      s.u = b.index_of(a2);
      s.v = b.index_of(a3);
    } else {
      throw BandError("unknown step kind '" + kind + "'");
    }
    c.steps.push_back(s);
  }
  if (!have_start || !have_end) {
    throw BandError("certificate needs start: and end: lines");
  }
  return c;
}

std::optional<GenWord> contract(const Band& b, const GenWord& w, int pos) {
  if (pos < 0 || pos + 1 >= w.size()) {
    throw BandError("contract position out of range");
  }
  int u = w[pos];
  int v = w[pos + 1];
  if (!is_basic_pair(b, u, v)) {
    return std::nullopt;
  }
  RewriteStep s{pos, StepKind::Contraction, u, v, b.mul(u, v)};
  return apply_step(b, w, s);
}

std::vector<GenWord> expansions(const Band& b, const GenWord& w, int pos) {
  if (pos < 0 || pos >= w.size()) {
    throw BandError("expansion position out of range");
  }
  int g = w[pos];
  std::vector<GenWord> out;
  for (int u = 0; u < b.size(); ++u) {
    for (int v = 0; v < b.size(); ++v) {
      if (b.mul(u, v) != g || !is_basic_pair(b, u, v)) {
        continue;
      }
      RewriteStep s{pos, StepKind::Expansion, u, v, g};
      out.push_back(apply_step(b, w, s));
    }
  }
  return out;
}

std::pair<GenWord, RewriteCertificate> normal_form(const Band& b,
                                                   const GenWord& w) {
  RewriteCertificate cert;
  cert.start = w;
  GenWord cur = w;
  bool reduced = true;
  while (reduced) {
    reduced = false;
    for (int p = 0; p + 1 < cur.size(); ++p) {
      int u = cur[p];
      int v = cur[p + 1];
      if (is_basic_pair(b, u, v)) {
        RewriteStep s{p, StepKind::Contraction, u, v, b.mul(u, v)};
        cur = apply_step(b, cur, s);
        cert.steps.push_back(s);
        reduced = true;
        break;
      }
    }
  }
  cert.end = cur;
  return {cur, cert};
}

ConfluenceReport check_local_confluence(const Band& b) {
  // All contraction-descendants of a word (the word included).
  auto descendants = [&](const GenWord& w) {
    std::vector<GenWord> out{w};
    for (std::size_t i = 0; i < out.size(); ++i) {
      GenWord cur = out[i];
      for (int p = 0; p + 1 < cur.size(); ++p) {
        if (auto next = contract(b, cur, p)) {
          if (std::find(out.begin(), out.end(), *next) == out.end()) {
            out.push_back(*next);
          }
        }
      }
    }
    return out;
  };

  int n = b.size();
  for (int e = 0; e < n; ++e) {
    for (int f = 0; f < n; ++f) {
      if (!is_basic_pair(b, e, f)) {
        continue;
      }
      for (int g = 0; g < n; ++g) {
        if (!is_basic_pair(b, f, g)) {
          continue;
        }
        GenWord w{{e, f, g}};
        GenWord left{{b.mul(e, f), g}};
        GenWord right{{e, b.mul(f, g)}};
        auto dl = descendants(left);
        auto dr = descendants(right);
        bool joinable = false;
        for (const auto& x : dl) {
          if (std::find(dr.begin(), dr.end(), x) != dr.end()) {
            joinable = true;
            break;
          }
        }
        if (!joinable) {
          ConfluenceReport report;
          report.locally_confluent = false;
          report.counterexample = ConfluenceCounterexample{
              w, normal_form(b, left).first, normal_form(b, right).first};
          return report;
        }
      }
    }
  }
  return {};
}

SearchBudget SearchBudget::defaults_for(const GenWord& w1, const GenWord& w2) {
  return SearchBudget{std::max(w1.size(), w2.size()) + 4, 100000};
}

BasicPairTables::BasicPairTables(const Band& b) {
  int n = b.size();
  contract_to.assign(n, std::vector<int>(n, -1));
  factorizations.assign(n, {});
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (is_basic_pair(b, u, v)) {
        int p = b.mul(u, v);
        contract_to[u][v] = p;
        factorizations[p].emplace_back(u, v);
      }
    }
  }
}

std::string RewriteClosure::key(const GenWord& w) {
  std::string k;
  k.reserve(w.letters.size());
  for (int x : w.letters) {
    k.push_back(static_cast<char>(x));
  }
  return k;
}

RewriteClosure::RewriteClosure(const Band& b, GenWord base,
                               const SearchBudget& budget,
                               const GenWord* target)
    : band_(b) {
  if (base.letters.empty()) {
    throw BandError("empty word");
  }
  if (b.size() > 256) {
    // key() packs one letter per byte.
    throw BandError("bands larger than 256 elements are not supported by "
                    "the search");
  }
  if (budget.max_len < base.size() ||
      (target != nullptr && budget.max_len < target->size())) {
    throw BandError("budget.max_len is smaller than an input word");
  }
  BasicPairTables tables(b);

  index_.emplace(key(base), 0);
  order_.push_back(std::move(base));
  parents_.push_back({});

  auto visit = [&](GenWord&& w, int parent, const RewriteStep& step) {
    auto k = key(w);
    if (index_.count(k)) {
      return false;
    }
    int idx = static_cast<int>(order_.size());
    index_.emplace(std::move(k), idx);
    order_.push_back(std::move(w));
    parents_.push_back({parent, step});
    return target != nullptr && order_.back() == *target;
  };

  std::size_t head = 0;
  bool found = false;
  while (head < order_.size() && !found) {
    if (order_.size() >= budget.max_states) {
      return;  // truncated; exhausted_ stays false
    }
    GenWord cur = order_[head];  // copy: order_ may reallocate below
    int parent = static_cast<int>(head);
    ++head;

    for (int p = 0; p + 1 < cur.size() && !found; ++p) {
      int t = tables.contract_to[cur[p]][cur[p + 1]];
      if (t < 0) {
        continue;
      }
      RewriteStep s{p, StepKind::Contraction, cur[p], cur[p + 1], t};
      found = visit(apply_step(band_, cur, s), parent, s);
    }
    if (cur.size() < budget.max_len) {
      for (int p = 0; p < cur.size() && !found; ++p) {
        for (auto [u, v] : tables.factorizations[cur[p]]) {
          RewriteStep s{p, StepKind::Expansion, u, v, cur[p]};
          found = visit(apply_step(band_, cur, s), parent, s);
          if (found) {
            break;
          }
        }
      }
    }
  }
  exhausted_ = !found && head >= order_.size();
}

bool RewriteClosure::contains(const GenWord& w) const {
  return index_.count(key(w)) > 0;
}

RewriteCertificate RewriteClosure::certificate_to(const GenWord& w) const {
  auto it = index_.find(key(w));
  if (it == index_.end()) {
    throw BandError("word not contained in the closure");
  }
  std::vector<RewriteStep> back;
  int cur = it->second;
  while (parents_[cur].index >= 0) {
    back.push_back(parents_[cur].step);
    cur = parents_[cur].index;
  }
  RewriteCertificate cert;
  cert.start = order_[0];
  cert.steps.assign(back.rbegin(), back.rend());
  cert.end = w;
  return cert;
}

RewriteCertificate RewriteClosure::certificate_between(
    const GenWord& w1, const GenWord& w2) const {
  return chain_certificates(invert_certificate(certificate_to(w1)),
                            certificate_to(w2));
}

OracleResult bfs_equal(const Band& b, const GenWord& w1, const GenWord& w2,
                       const SearchBudget& budget) {
  OracleResult result;
  RewriteClosure closure(b, w1, budget, &w2);
  result.states = closure.states();
  if (closure.contains(w2)) {
    result.outcome = OracleOutcome::Equal;
    result.certificate = closure.certificate_to(w2);
  } else if (closure.exhausted()) {
    result.outcome = OracleOutcome::DistinctWithinBudget;
  } else {
    result.outcome = OracleOutcome::Inconclusive;
  }
  return result;
}

}  // namespace igband
