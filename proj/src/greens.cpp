#include "igband/greens.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>
#include <sstream>

namespace igband {

int tilde_idempotent(const BandContext& ctx, const GenWord& w, Side side) {
  auto [a, cert] = anf(ctx.band, ctx.dec, ctx.phi(), w);
  return side == Side::R ? a.word[0] : a.word[a.word.size() - 1];
}

bool tilde_related(const BandContext& ctx, const GenWord& w1,
                   const GenWord& w2, Side side) {
  int e1 = tilde_idempotent(ctx, w1, side);
  int e2 = tilde_idempotent(ctx, w2, side);
  return side == Side::R ? DClassDecomposition::related_r(ctx.band, e1, e2)
                         : DClassDecomposition::related_l(ctx.band, e1, e2);
}

VerificationResult verify_nonabundance(const BandContext& ctx,
                                       const NonAbundanceWitness& w,
                                       const SearchBudget& budget) {
  const Band& b = ctx.band;
  int e = tilde_idempotent(ctx, w.target, Side::R);
  if (e != w.tilde_idempotent) {
    return {false, "tilde idempotent of the target is '" + b.name(e) +
                       "', witness claims '" + b.name(w.tilde_idempotent) +
                       "'"};
  }

  GenWord xt = w.x.concat(w.target);
  GenWord other = w.is_pair() ? w.y->concat(w.target) : w.target;
  if (!(w.equality_evidence.start == xt) ||
      !(w.equality_evidence.end == other)) {
    return {false, "equality certificate endpoints do not match the witness"};
  }
  if (!check_certificate(b, w.equality_evidence)) {
    return {false, "equality certificate does not replay"};
  }

  GenWord ebar{{w.tilde_idempotent}};
  GenWord lhs = w.x.concat(ebar);
  GenWord rhs = w.is_pair() ? w.y->concat(ebar) : ebar;
  auto verdict = equal(ctx, lhs, rhs, budget);
  if (verdict.verdict != Verdict::NotEqual) {
    return {false, "inequality did not re-decide as not-equal (got " +
                       to_string(verdict.verdict) + ")"};
  }
  return {true, ""};
}

namespace {

// All words of length 1..max_len in (length, lexicographic) order.
std::vector<GenWord> enumerate_words(int alphabet, int max_len) {
  std::vector<GenWord> out;
  std::vector<GenWord> current;
  for (int a = 0; a < alphabet; ++a) {
    current.push_back(GenWord{{a}});
  }
  for (int len = 1; len <= max_len; ++len) {
    out.insert(out.end(), current.begin(), current.end());
    if (len == max_len) {
      break;
    }
    std::vector<GenWord> next;
    next.reserve(current.size() * alphabet);
    for (const auto& w : current) {
      for (int a = 0; a < alphabet; ++a) {
        GenWord e = w;
        e.letters.push_back(a);
        next.push_back(std::move(e));
      }
    }
    current = std::move(next);
  }
  return out;
}

SearchBudget budget_for(const SearchBudget& base, const GenWord& w1,
                        const GenWord& w2) {
  SearchBudget out = base;
  if (out.max_len < std::max(w1.size(), w2.size())) {
    out.max_len = std::max(w1.size(), w2.size()) + 4;
  }
  return out;
}

}  // namespace

std::optional<NonAbundanceWitness> search_nonabundance(
    const BandContext& ctx, const GenWord& target,
    const WitnessSearchBudget& budget) {
  const Band& b = ctx.band;
  int e = tilde_idempotent(ctx, target, Side::R);
  GenWord ebar{{e}};
  auto candidates = enumerate_words(b.size(), budget.max_candidate_len);

  auto try_witness = [&](const GenWord& x,
                         const GenWord* y) -> std::optional<NonAbundanceWitness> {
    GenWord lhs_t = x.concat(target);
    GenWord rhs_t = (y != nullptr) ? y->concat(target) : target;
    auto eq = equal(ctx, lhs_t, rhs_t, budget_for(budget.oracle, lhs_t, rhs_t));
    if (eq.verdict != Verdict::Equal || !eq.certificate) {
      return std::nullopt;
    }
    GenWord lhs_e = x.concat(ebar);
    GenWord rhs_e = (y != nullptr) ? y->concat(ebar) : ebar;
    auto ne = equal(ctx, lhs_e, rhs_e, budget_for(budget.oracle, lhs_e, rhs_e));
    if (ne.verdict != Verdict::NotEqual) {
      return std::nullopt;
    }
    NonAbundanceWitness w;
    w.target = target;
    w.tilde_idempotent = e;
    w.x = x;
    if (y != nullptr) {
      w.y = *y;
    }
    w.equality_evidence = *eq.certificate;
    w.inequality_evidence = ne;
    return w;
  };

  for (const auto& x : candidates) {
    if (auto w = try_witness(x, nullptr)) {
      return w;
    }
  }
  // Pairs, grouped by the later candidate in enumeration order, so that
  // shorter pairs come first.
  std::size_t n = candidates.size();
  for (std::size_t bound = 0; bound < n; ++bound) {
    for (std::size_t i = 0; i <= bound; ++i) {
      for (std::size_t j = 0; j <= bound; ++j) {
        if (i == j || (i != bound && j != bound)) {
          continue;  // only pairs whose later word is `bound`
        }
        if (auto w = try_witness(candidates[i], &candidates[j])) {
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

std::string serialize_witness(const Band& b, const NonAbundanceWitness& w) {
  std::ostringstream out;
  out << "nonabundance-witness\n";
  out << "target: " << format_word(b, w.target) << '\n';
  out << "tilde-idempotent: " << b.name(w.tilde_idempotent) << '\n';
  out << "kind: " << (w.is_pair() ? "pair" : "single") << '\n';
  out << "x: " << format_word(b, w.x) << '\n';
  if (w.is_pair()) {
    out << "y: " << format_word(b, *w.y) << '\n';
  }
  out << "inequality: " << to_string(w.inequality_evidence.verdict) << " ("
      << w.inequality_evidence.evidence << ")\n";
  out << "certificate:\n";
  out << serialize_certificate(b, w.equality_evidence);
  return out.str();
}

NonAbundanceWitness parse_witness(const BandContext& ctx,
                                  const std::string& text) {
  const Band& b = ctx.band;
  std::istringstream in(text);
  std::string line;
  NonAbundanceWitness w;
  bool have_target = false;
  bool have_x = false;
  bool pair = false;
  std::string cert_text;
  bool in_cert = false;
  while (std::getline(in, line)) {
    if (in_cert) {
      cert_text += line + "\n";
      continue;
    }
    auto strip = line.find_first_not_of(" \t\r");
    if (strip == std::string::npos) {
      continue;
    }
    line = line.substr(strip);
    if (line.rfind("target:", 0) == 0) {
      w.target = parse_word(b, line.substr(7));
      have_target = true;
    } else if (line.rfind("tilde-idempotent:", 0) == 0) {
      std::istringstream ls(line.substr(17));
      std::string name;
      ls >> name;
      w.tilde_idempotent = b.index_of(name);
    } else if (line.rfind("kind:", 0) == 0) {
      std::istringstream ls(line.substr(5));
      std::string kind;
      ls >> kind;
      pair = (kind == "pair");
    } else if (line.rfind("x:", 0) == 0) {
      w.x = parse_word(b, line.substr(2));
      have_x = true;
    } else if (line.rfind("y:", 0) == 0) {
      w.y = parse_word(b, line.substr(2));
    } else if (line.rfind("certificate:", 0) == 0) {
      in_cert = true;
    }
    // other lines (header, inequality tag) are informational
  }
  if (!have_target || !have_x) {
    throw BandError("witness file needs target: and x: lines");
  }
  if (pair && !w.y) {
    throw BandError("pair witness needs a y: line");
  }
  if (!pair) {
    w.y.reset();
  }
  w.equality_evidence = parse_certificate(b, cert_text);
  // The inequality is re-derived rather than trusted.
  GenWord ebar{{w.tilde_idempotent}};
  GenWord lhs = w.x.concat(ebar);
  GenWord rhs = w.is_pair() ? w.y->concat(ebar) : ebar;
  w.inequality_evidence = equal(ctx, lhs, rhs);
  return w;
}

std::pair<GenWord, RewriteCertificate> regularity_witness(
    const Band& b, const DClassDecomposition& d, const GenWord& w) {
  int cls = d.class_of[w[0]];
  for (int i = 1; i < w.size(); ++i) {
    if (d.class_of[w[i]] != cls) {
      throw BandError("letters lie in more than one D-class ('" +
                      b.name(w[0]) + "' vs '" + b.name(w[i]) + "')");
    }
  }
  int n = w.size();
  GenWord z;
  if (n == 1) {
    z.letters.push_back(w[0]);
  } else {
    for (int i = n - 1; i >= 1; --i) {
      z.letters.push_back(b.mul(w[i], w[i - 1]));
    }
  }

  RewriteCertificate cert;
  cert.start = w.concat(z).concat(w);
  GenWord cur = cert.start;
  auto contract_at = [&](int pos) {
    int u = cur[pos];
    int v = cur[pos + 1];
    RewriteStep s{pos, StepKind::Contraction, u, v, b.mul(u, v)};
    cur = apply_step(b, cur, s);
    cert.steps.push_back(s);
  };
  // w z collapses telescopically to the first letter: each letter of z
  // swallows the current last letter of w in two contractions.
  for (int i = n - 1; i >= 1; --i) {
    // positions: prefix x_1..x_i, then the conjugator (x_{i+1} x_i)-bar.
    contract_at(i);      // (x_{i+1}, x_{i+1} x_i) -> x_{i+1} x_i
    contract_at(i - 1);  // (x_i, x_{i+1} x_i) -> x_i
  }
  // Now at x_1 x_1 x_2 ... x_n (or x_1 x_1 x_1 for n = 1 with z = x_1).
  while (cur.size() > w.size()) {
    contract_at(0);
  }
  cert.end = cur;
  if (!(cert.end == w)) {
    throw std::logic_error("regularity telescope did not reduce to w");
  }
  return {z, cert};
}

namespace {

// Green's R/L class ids of the band elements.
std::vector<int> green_class_ids(const Band& b, Side side) {
  std::vector<int> id(b.size(), -1);
  int next = 0;
  for (int e = 0; e < b.size(); ++e) {
    if (id[e] >= 0) {
      continue;
    }
    id[e] = next;
    for (int f = e + 1; f < b.size(); ++f) {
      bool rel = side == Side::R ? DClassDecomposition::related_r(b, e, f)
                                 : DClassDecomposition::related_l(b, e, f);
      if (id[f] < 0 && rel) {
        id[f] = next;
      }
    }
    ++next;
  }
  return id;
}

}  // namespace

std::optional<ConditionPViolation> falsify_condition_p(
    const BandContext& ctx, const ConditionPBudget& budget) {
  const Band& b = ctx.band;
  const DClassDecomposition& d = ctx.dec;
  auto r_id = green_class_ids(b, Side::R);
  auto l_id = green_class_ids(b, Side::L);

  auto key_of = [](const GenWord& w) {
    std::string k;
    k.reserve(w.letters.size());
    for (int x : w.letters) {
      k.push_back(static_cast<char>(x));
    }
    return k;
  };
  std::unordered_set<std::string> seen;
  SearchBudget closure_budget{budget.max_word_len, budget.max_states};

  // Check the two clauses over the ANF members of one equality class;
  // members are compared against the first representative of their group.
  auto check_class =
      [&](const RewriteClosure& closure) -> std::optional<ConditionPViolation> {
    std::vector<AlmostNormalForm> members;
    for (const auto& m : closure.words()) {
      if (auto a = as_anf(b, d, m)) {
        members.push_back(std::move(*a));
      }
    }
    if (members.size() < 2) {
      return std::nullopt;
    }
    std::sort(members.begin(), members.end(),
              [](const AlmostNormalForm& x, const AlmostNormalForm& y) {
                if (x.word.size() != y.word.size()) {
                  return x.word.size() < y.word.size();
                }
                return x.word.letters < y.word.letters;
              });
    int r = members[0].block_count();
    for (const auto& m : members) {
      if (m.block_count() != r) {
        throw std::logic_error("equal ANFs with different Y-lengths");
      }
    }
    for (int clause = 1; clause <= 2; ++clause) {
      for (int t = 0; t < r; ++t) {
        std::map<int, std::size_t> group_rep;  // green class -> first member
        for (std::size_t mi = 0; mi < members.size(); ++mi) {
          const auto& m = members[mi];
          auto [s_pos, e_pos] = m.block_range(t);
          int letter = clause == 1 ? m.word[e_pos - 1] : m.word[s_pos];
          int key = clause == 1 ? l_id[letter] : r_id[letter];
          auto [it, fresh] = group_rep.try_emplace(key, mi);
          if (fresh) {
            continue;
          }
          const auto& rep = members[it->second];
          auto part_of = [&](const AlmostNormalForm& a) {
            auto [ps, pe] = a.block_range(t);
            return clause == 1
                       ? GenWord(std::vector<int>(a.word.letters.begin(),
                                                  a.word.letters.begin() + pe))
                       : GenWord(std::vector<int>(a.word.letters.begin() + ps,
                                                  a.word.letters.end()));
          };
          GenWord part1 = part_of(rep);
          GenWord part2 = part_of(m);
          if (part1 == part2) {
            continue;
          }
          auto verdict = equal(ctx, part1, part2,
                               budget_for(budget.part_oracle, part1, part2));
          if (verdict.verdict != Verdict::NotEqual) {
            continue;  // equal or inconclusive: no violation here
          }
          ConditionPViolation viol;
          viol.w1 = rep;
          viol.w2 = m;
          viol.equality = closure.certificate_between(rep.word, m.word);
          viol.clause = clause;
          viol.index = clause == 1 ? t + 1 : t;
          auto [rs, re] = rep.block_range(t);
          auto [ms, me] = m.block_range(t);
          viol.letter1 = clause == 1 ? rep.word[re - 1] : rep.word[rs];
          viol.letter2 = clause == 1 ? m.word[me - 1] : m.word[ms];
          viol.part1 = std::move(part1);
          viol.part2 = std::move(part2);
          viol.part_inequality = std::move(verdict);
          return viol;
        }
      }
    }
    return std::nullopt;
  };

  // Walk all base words in (length, lex) order without materializing them;
  // each equality class is explored once, when its first member comes up.
  for (int len = 1; len <= budget.max_word_len; ++len) {
    std::vector<int> odo(len, 0);
    while (true) {
      GenWord base{odo};
      if (!seen.count(key_of(base))) {
        RewriteClosure closure(b, base, closure_budget);
        for (const auto& m : closure.words()) {
          seen.insert(key_of(m));
        }
        // A truncated closure cannot certify its class; skip it.
        if (closure.exhausted()) {
          if (auto viol = check_class(closure)) {
            return viol;
          }
        }
      }
      // Advance the odometer.
      int pos = len - 1;
      while (pos >= 0 && odo[pos] == b.size() - 1) {
        odo[pos--] = 0;
      }
      if (pos < 0) {
        break;
      }
      ++odo[pos];
    }
  }
  return std::nullopt;
}

}  // namespace igband
