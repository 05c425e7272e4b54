// Acceptance suite: replays the worked examples and property sweeps end to
// end, one pass/fail line per criterion. Exits nonzero if any criterion
// fails. All randomness is seeded; budgets and tolerances are fixed here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "igband/bundled.hpp"
#include "igband/decide.hpp"
#include "igband/greens.hpp"

using namespace igband;

namespace {

struct Criterion {
  std::string label;
  double time_limit_s;
  std::function<bool(std::string&)> run;
};

GenWord w(const Band& b, const std::string& names) {
  return parse_word(b, names);
}

std::vector<GenWord> all_words(int alphabet, int max_len) {
  std::vector<GenWord> out;
  std::vector<GenWord> cur;
  for (int a = 0; a < alphabet; ++a) {
    cur.push_back(GenWord{{a}});
  }
  for (int len = 1; len <= max_len; ++len) {
    out.insert(out.end(), cur.begin(), cur.end());
    if (len == max_len) {
      break;
    }
    std::vector<GenWord> next;
    for (const auto& x : cur) {
      for (int a = 0; a < alphabet; ++a) {
        GenWord e = x;
        e.letters.push_back(a);
        next.push_back(std::move(e));
      }
    }
    cur = std::move(next);
  }
  return out;
}

// --- criterion 1: Example 3.4 non-regularity over y3 ---

bool criterion1(std::string& note) {
  Band b = bundled::band("y3");
  auto ef = w(b, "e f");
  long checked = 0;
  for (int n = 1; n <= 3; ++n) {
    GenWord target;
    for (int i = 0; i < n; ++i) {
      target = (i == 0) ? ef : target.concat(ef);
    }
    for (const auto& word : all_words(b.size(), 8)) {
      auto v = equal_semilattice(b, target.concat(word).concat(target),
                                 target);
      if (v.verdict == Verdict::Equal) {
        note = "counterexample: (e f)^" + std::to_string(n) + " regular via " +
               format_word(b, word);
        return false;
      }
      ++checked;
    }
  }
  note = std::to_string(checked) + " sandwich products, zero equal to (e f)^n";
  return true;
}

// --- criterion 2: confluence verdicts ---

bool criterion2(std::string& note) {
  if (!check_local_confluence(bundled::band("y3")).locally_confluent) {
    note = "y3 not locally confluent";
    return false;
  }
  for (int rows = 1; rows <= 3; ++rows) {
    for (int cols = 1; cols <= 3; ++cols) {
      std::string desc = "component only: rows=" + std::to_string(rows) +
                         " cols=" + std::to_string(cols) + " names=";
      for (int i = 0; i < rows * cols; ++i) {
        desc += (i ? " e" : "e") + std::to_string(i);
      }
      if (!check_local_confluence(build_strong_semilattice(desc + "\n"))
               .locally_confluent) {
        note = "rectangular " + std::to_string(rows) + "x" +
               std::to_string(cols) + " not locally confluent";
        return false;
      }
    }
  }
  Band n5 = bundled::band("normal5");
  auto report = check_local_confluence(n5);
  if (report.locally_confluent || !report.counterexample) {
    note = "normal5 reported locally confluent";
    return false;
  }
  const auto& cx = *report.counterexample;
  bool branches_match =
      (format_word(n5, cx.left) == "b d" && format_word(n5, cx.right) == "c d") ||
      (format_word(n5, cx.left) == "c d" && format_word(n5, cx.right) == "b d");
  if (format_word(n5, cx.critical) != "c a d" || !branches_match) {
    note = "unexpected counterexample " + format_word(n5, cx.critical) +
           " -> {" + format_word(n5, cx.left) + ", " +
           format_word(n5, cx.right) + "}";
    return false;
  }
  note = "y3 and 9 rectangular bands confluent; normal5: c a d -> {b d, c d}";
  return true;
}

// --- criterion 3: band4 non-abundance witness ---

bool criterion3(std::string& note) {
  auto ctx = BandContext::make(bundled::band("band4"));
  const Band& b = ctx.band;

  NonAbundanceWitness witness;
  witness.target = w(b, "a b");
  witness.tilde_idempotent = b.index_of("a");
  witness.x = w(b, "x");
  witness.y = w(b, "y");
  auto path = bfs_equal(b, w(b, "x a b"), w(b, "y a b"),
                        SearchBudget{5, 100000});
  if (path.outcome != OracleOutcome::Equal) {
    note = "x a b = y a b not certified";
    return false;
  }
  witness.equality_evidence = *path.certificate;
  witness.inequality_evidence = equal(ctx, w(b, "x a"), w(b, "y a"));
  if (!verify_nonabundance(ctx, witness, SearchBudget{6, 100000}).ok) {
    note = "paper pair witness (x, y) rejected";
    return false;
  }

  WitnessSearchBudget budget;
  budget.max_candidate_len = 1;
  budget.oracle = SearchBudget{6, 100000};
  auto found = search_nonabundance(ctx, w(b, "a b"), budget);
  if (!found || !found->is_pair() || format_word(b, found->x) != "x" ||
      format_word(b, *found->y) != "y") {
    note = "search did not rediscover the pair (x, y) at length 1";
    return false;
  }
  note = "pair witness (x, y) verified and rediscovered at candidate length 1";
  return true;
}

// --- criterion 4: nonnormal5 projection counterexample ---

bool criterion4(std::string& note) {
  auto ctx = BandContext::make(bundled::band("nonnormal5"));
  const Band& b = ctx.band;
  auto v = equal(ctx, w(b, "u' w"), w(b, "w'"));
  if (v.verdict != Verdict::Equal || !v.certificate ||
      v.certificate->steps.size() > 6 ||
      !check_certificate(b, *v.certificate)) {
    note = "u' w = w' not certified within 6 steps";
    return false;
  }
  auto comp = component_band(b, ctx.dec, ctx.dec.class_of[b.index_of("u")]);
  auto cv = equal_rectangular(comp.band, w(comp.band, "u' w"),
                              w(comp.band, "w'"));
  if (cv.verdict != Verdict::NotEqual) {
    note = "standalone component decided u' w = w'";
    return false;
  }
  note = "equal in IG(B) (" + std::to_string(v.certificate->steps.size()) +
         " steps) but not in IG(B_beta)";
  return true;
}

// --- criterion 5: normal10 non-abundance ---

bool criterion5(std::string& note) {
  auto ctx = BandContext::make(bundled::band("normal10"));
  const Band& b = ctx.band;
  auto r = bfs_equal(b, w(b, "e v"), w(b, "e h e v"),
                     SearchBudget{5, 200000});
  if (r.outcome != OracleOutcome::Equal || r.certificate->steps.size() > 8 ||
      !check_certificate(b, *r.certificate)) {
    note = "e v = e h e v not certified within 8 steps";
    return false;
  }
  auto ne = equal_normal_component(b, ctx.dec, *ctx.morphisms,
                                   w(b, "e h e"), w(b, "e"));
  if (ne.verdict != Verdict::NotEqual) {
    note = "component decider failed on e h e vs e";
    return false;
  }
  NonAbundanceWitness witness;
  witness.target = w(b, "e v");
  witness.tilde_idempotent = b.index_of("e");
  witness.x = w(b, "e h");
  witness.equality_evidence = invert_certificate(*r.certificate);
  witness.inequality_evidence = ne;
  if (!verify_nonabundance(ctx, witness, SearchBudget{6, 200000}).ok) {
    note = "single witness x = e h rejected";
    return false;
  }
  note = "e v = e h e v in " + std::to_string(r.certificate->steps.size()) +
         " steps; e h e != e; witness e h verified";
  return true;
}

// --- criterion 6: normal5 derivation ---

bool criterion6(std::string& note) {
  Band b = bundled::band("normal5");
  auto r = bfs_equal(b, w(b, "c d"), w(b, "b d"), SearchBudget{4, 100000});
  if (r.outcome != OracleOutcome::Equal ||
      !check_certificate(b, *r.certificate)) {
    note = "c d = b d not certified at max_len 4";
    return false;
  }
  note = "c d = b d certified in " +
         std::to_string(r.certificate->steps.size()) + " steps at max_len 4";
  return true;
}

// --- criterion 7: decider/oracle agreement ---

// Oracle closures cached per equality class.
class OracleCache {
 public:
  OracleCache(const Band& b, SearchBudget budget) : band_(b), budget_(budget) {}

  // Returns nullptr when the class could not be exhausted.
  const RewriteClosure* closure_for(const GenWord& word) {
    for (const auto& c : closures_) {
      if (c->contains(word)) {
        return c->exhausted() ? c.get() : nullptr;
      }
    }
    closures_.push_back(
        std::make_unique<RewriteClosure>(band_, word, budget_));
    return closures_.back()->exhausted() ? closures_.back().get() : nullptr;
  }

 private:
  const Band& band_;
  SearchBudget budget_;
  std::vector<std::unique_ptr<RewriteClosure>> closures_;
};

bool agreement_sweep(const BandContext& ctx,
                     const std::vector<GenWord>& words, SearchBudget budget,
                     long& conclusive, long& vacuous, std::string& note) {
  OracleCache cache(ctx.band, budget);
  long spot = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto* closure = cache.closure_for(words[i]);
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (closure == nullptr) {
        ++vacuous;
        continue;
      }
      bool oracle_equal = closure->contains(words[j]);
      auto verdict = equal(ctx, words[i], words[j], budget);
      if (verdict.verdict == Verdict::Inconclusive) {
        note = "decider inconclusive on '" + format_word(ctx.band, words[i]) +
               "' vs '" + format_word(ctx.band, words[j]) + "'";
        return false;
      }
      if ((verdict.verdict == Verdict::Equal) != oracle_equal) {
        note = "disagreement on '" + format_word(ctx.band, words[i]) +
               "' vs '" + format_word(ctx.band, words[j]) + "': decider says " +
               to_string(verdict.verdict);
        return false;
      }
      ++conclusive;
      // Spot-check the closure against a literal bfs_equal call.
      if (++spot % 97 == 0) {
        auto r = bfs_equal(ctx.band, words[i], words[j], budget);
        bool bfs_eq = r.outcome == OracleOutcome::Equal;
        if (bfs_eq != oracle_equal ||
            (!bfs_eq && r.outcome == OracleOutcome::Inconclusive)) {
          note = "closure and bfs_equal disagree on '" +
                 format_word(ctx.band, words[i]) + "' vs '" +
                 format_word(ctx.band, words[j]) + "'";
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion7(std::string& note) {
  long conclusive = 0;
  long vacuous = 0;

  // y3: semilattice decider, all words of length <= 3 plus random pairs.
  {
    auto ctx = BandContext::make(bundled::band("y3"));
    auto words = all_words(ctx.band.size(), 3);
    if (!agreement_sweep(ctx, words, SearchBudget{7, 700000}, conclusive,
                         vacuous, note)) {
      return false;
    }
    std::mt19937 rng(1001);
    std::vector<GenWord> sample;
    for (int i = 0; i < 1000; ++i) {  // 500 pairs
      int len = 1 + static_cast<int>(rng() % 5);
      GenWord word;
      for (int j = 0; j < len; ++j) {
        word.letters.push_back(static_cast<int>(rng() % ctx.band.size()));
      }
      sample.push_back(std::move(word));
    }
    OracleCache cache(ctx.band, SearchBudget{7, 700000});
    for (int i = 0; i < 500; ++i) {
      const auto* closure = cache.closure_for(sample[2 * i]);
      if (closure == nullptr) {
        ++vacuous;
        continue;
      }
      auto verdict =
          equal(ctx, sample[2 * i], sample[2 * i + 1], SearchBudget{7, 700000});
      if ((verdict.verdict == Verdict::Equal) !=
          closure->contains(sample[2 * i + 1])) {
        note = "y3 random pair disagreement";
        return false;
      }
      ++conclusive;
    }
  }

  // rect1: locally large decider.
  {
    auto ctx = BandContext::make(bundled::band("rect1"));
    auto words = all_words(ctx.band.size(), 3);
    if (!agreement_sweep(ctx, words, SearchBudget{7, 700000}, conclusive,
                         vacuous, note)) {
      return false;
    }
    std::mt19937 rng(1002);
    OracleCache cache(ctx.band, SearchBudget{7, 700000});
    for (int i = 0; i < 500; ++i) {
      GenWord w1, w2;
      int l1 = 1 + static_cast<int>(rng() % 5);
      for (int j = 0; j < l1; ++j) {
        w1.letters.push_back(static_cast<int>(rng() % ctx.band.size()));
      }
      int l2 = 1 + static_cast<int>(rng() % 5);
      for (int j = 0; j < l2; ++j) {
        w2.letters.push_back(static_cast<int>(rng() % ctx.band.size()));
      }
      const auto* closure = cache.closure_for(w1);
      if (closure == nullptr) {
        ++vacuous;
        continue;
      }
      auto verdict = equal(ctx, w1, w2, SearchBudget{7, 700000});
      if ((verdict.verdict == Verdict::Equal) != closure->contains(w2)) {
        note = "rect1 random pair disagreement";
        return false;
      }
      ++conclusive;
    }
  }

  // normal10: component decider on single-class words.
  {
    auto ctx = BandContext::make(bundled::band("normal10"));
    SearchBudget budget{6, 700000};
    OracleCache cache(ctx.band, budget);
    for (int cls = 0; cls < ctx.dec.num_classes(); ++cls) {
      const auto& members = ctx.dec.classes[cls];
      std::vector<GenWord> words;
      std::vector<GenWord> cur;
      for (int e : members) {
        cur.push_back(GenWord{{e}});
      }
      for (int len = 1; len <= 3; ++len) {
        words.insert(words.end(), cur.begin(), cur.end());
        if (len == 3) {
          break;
        }
        std::vector<GenWord> next;
        for (const auto& x : cur) {
          for (int e : members) {
            GenWord n = x;
            n.letters.push_back(e);
            next.push_back(std::move(n));
          }
        }
        cur = std::move(next);
      }
      for (const auto& w1 : words) {
        const auto* closure = cache.closure_for(w1);
        for (const auto& w2 : words) {
          if (closure == nullptr) {
            ++vacuous;
            continue;
          }
          auto verdict = equal(ctx, w1, w2, budget);
          if (verdict.verdict == Verdict::Inconclusive ||
              (verdict.verdict == Verdict::Equal) != closure->contains(w2)) {
            note = "normal10 disagreement on '" + format_word(ctx.band, w1) +
                   "' vs '" + format_word(ctx.band, w2) + "'";
            return false;
          }
          ++conclusive;
        }
      }
    }
    std::mt19937 rng(1003);
    for (int i = 0; i < 500; ++i) {
      int cls = static_cast<int>(rng() % ctx.dec.num_classes());
      const auto& members = ctx.dec.classes[cls];
      auto rand_word = [&]() {
        GenWord word;
        int len = 1 + static_cast<int>(rng() % 5);
        for (int j = 0; j < len; ++j) {
          word.letters.push_back(members[rng() % members.size()]);
        }
        return word;
      };
      GenWord w1 = rand_word();
      GenWord w2 = rand_word();
      const auto* closure = cache.closure_for(w1);
      if (closure == nullptr) {
        ++vacuous;
        continue;
      }
      auto verdict = equal(ctx, w1, w2, budget);
      if ((verdict.verdict == Verdict::Equal) != closure->contains(w2)) {
        note = "normal10 random pair disagreement on '" +
               format_word(ctx.band, w1) + "' vs '" +
               format_word(ctx.band, w2) + "'";
        return false;
      }
      ++conclusive;
    }
  }

  if (conclusive < 1000) {
    note = "too few conclusive comparisons (" + std::to_string(conclusive) +
           ")";
    return false;
  }
  note = std::to_string(conclusive) + " conclusive comparisons agree (" +
         std::to_string(vacuous) + " vacuous)";
  return true;
}

// --- criterion 8: ANF properties ---

bool criterion8(std::string& note) {
  long checked = 0;
  for (const auto& name : bundled::names()) {
    Band b = bundled::band(name);
    auto d = decompose(b);
    std::optional<StructureMorphisms> m;
    if (classify(b, d).is_normal) {
      m = structure_morphisms(b, d);
    }
    const StructureMorphisms* phi = m ? &*m : nullptr;
    for (const auto& word : all_words(b.size(), 4)) {
      auto [a, cert] = anf(b, d, phi, word);
      if (!check_certificate(b, cert) || !(cert.start == word) ||
          !(cert.end == a.word)) {
        note = std::string(name) + ": certificate invalid for " +
               format_word(b, word);
        return false;
      }
      for (int t = 0; t < a.block_count(); ++t) {
        auto [s, e] = a.block_range(t);
        for (int i = s; i < e; ++i) {
          if (d.class_of[a.word[i]] != a.components[t]) {
            note = std::string(name) + ": block letter outside component";
            return false;
          }
        }
        if (t + 1 < a.block_count() &&
            d.comparable(a.components[t], a.components[t + 1])) {
          note = std::string(name) + ": adjacent components comparable";
          return false;
        }
      }
      auto ltr = significant_indices(b, d, a.word,
                                     ScanDirection::LeftToRight);
      auto rtl = significant_indices(b, d, a.word,
                                     ScanDirection::RightToLeft);
      if (ltr.y_length() != a.block_count()) {
        note = std::string(name) + ": Y-length != block count";
        return false;
      }
      for (int t = 0; t < a.block_count(); ++t) {
        auto [s, e] = a.block_range(t);
        if (ltr.indices[t] != e || rtl.indices[t] != s + 1) {
          note = std::string(name) + ": significant indices off the block "
                                     "boundaries for " +
                 format_word(b, word);
          return false;
        }
      }
      ++checked;
    }
  }
  note = std::to_string(checked) + " words, all ANF invariants hold";
  return true;
}

// --- criterion 9: congruence-condition sampling ---

bool criterion9(std::string& note) {
  long total = 0;
  for (const auto& name : bundled::names()) {
    auto ctx = BandContext::make(bundled::band(name));
    std::mt19937 rng(2024);
    auto rand_word = [&](int max_len) {
      GenWord word;
      int len = 1 + static_cast<int>(rng() % max_len);
      for (int j = 0; j < len; ++j) {
        word.letters.push_back(static_cast<int>(rng() % ctx.band.size()));
      }
      return word;
    };
    int accepted_r = 0;
    int accepted_l = 0;
    long attempts = 0;
    while ((accepted_r < 500 || accepted_l < 500) && attempts < 2000000) {
      ++attempts;
      auto w1 = rand_word(4);
      auto w2 = rand_word(4);
      auto z = rand_word(3);
      if (accepted_r < 500 && tilde_related(ctx, w1, w2, Side::R)) {
        ++accepted_r;
        if (!tilde_related(ctx, z.concat(w1), z.concat(w2), Side::R)) {
          note = std::string(name) + ": R-tilde left congruence fails";
          return false;
        }
      }
      if (accepted_l < 500 && tilde_related(ctx, w1, w2, Side::L)) {
        ++accepted_l;
        if (!tilde_related(ctx, w1.concat(z), w2.concat(z), Side::L)) {
          note = std::string(name) + ": L-tilde right congruence fails";
          return false;
        }
      }
    }
    if (accepted_r < 500 || accepted_l < 500) {
      note = std::string(name) + ": sampling starved";
      return false;
    }
    total += accepted_r + accepted_l;
  }
  note = std::to_string(total) + " related triples, congruence preserved";
  return true;
}

// --- criterion 10: Condition (P) falsifier ---

bool criterion10(std::string& note) {
  ConditionPBudget budget;
  budget.max_word_len = 6;

  auto n10 = BandContext::make(bundled::band("normal10"));
  auto viol = falsify_condition_p(n10, budget);
  if (!viol) {
    note = "no violation found for normal10";
    return false;
  }
  if (!check_certificate(n10.band, viol->equality) ||
      viol->part_inequality.verdict != Verdict::NotEqual) {
    note = "normal10 violation does not validate";
    return false;
  }
  std::string found = "normal10 violates clause (" +
                      std::to_string(viol->clause) + "): " +
                      format_word(n10.band, viol->w1.word) + " = " +
                      format_word(n10.band, viol->w2.word);

  for (const auto& name : {"y3", "rect1"}) {
    auto ctx = BandContext::make(bundled::band(name));
    if (falsify_condition_p(ctx, budget).has_value()) {
      note = std::string(name) + " reported a Condition (P) violation";
      return false;
    }
  }
  note = found + "; y3 and rect1 exhaust clean";
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"criterion 1: Example 3.4 non-regularity over y3 (exhaustive, len <= 8)",
       5.0, criterion1},
      {"criterion 2: confluence verdicts (y3, rectangular up to 3x3, normal5)",
       1.0, criterion2},
      {"criterion 3: band4 pair witness verified and rediscovered", 1.0,
       criterion3},
      {"criterion 4: nonnormal5 projection counterexample", 1.0, criterion4},
      {"criterion 5: normal10 non-abundance witness", 2.0, criterion5},
      {"criterion 6: normal5 derivation c d = b d at max_len 4", 1.0,
       criterion6},
      {"criterion 7: decider/oracle agreement (y3, rect1, normal10)", 60.0,
       criterion7},
      {"criterion 8: ANF properties for all words of length <= 4", 30.0,
       criterion8},
      {"criterion 9: congruence-condition sampling (500 per band per side)",
       30.0, criterion9},
      {"criterion 10: Condition (P) falsifier (normal10 vs y3/rect1)", 120.0,
       criterion10},
  };

  int failures = 0;
  for (auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (ok && secs > c.time_limit_s) {
      ok = false;
      note += " [exceeded time limit]";
    }
    std::printf("[%s] %s (%.2fs, limit %.0fs)\n", ok ? "PASS" : "FAIL",
                c.label.c_str(), secs, c.time_limit_s);
    if (!note.empty()) {
      std::printf("       %s\n", note.c_str());
    }
    failures += ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
