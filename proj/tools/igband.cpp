// igband - free idempotent generated semigroups over finite bands
//
// Command-line front end: load a band (bundled name or file), run the
// deciders, searches and reports, and replay the worked examples.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "igband/bundled.hpp"
#include "igband/decide.hpp"
#include "igband/greens.hpp"

using namespace igband;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconclusive = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string band_spec = "";
  int max_len = 0;           // 0: derive from the input words
  std::size_t max_states = 100000;
  long seed = 0;             // reserved for the sampling suites
  bool machine = false;
  bool show_certificate = false;
};

Band load_band(const std::string& spec) {
  for (const auto& name : bundled::names()) {
    if (spec == name) {
      return bundled::band(spec);
    }
  }
  std::ifstream in(spec);
  if (!in.good()) {
    throw BandError("cannot open band file '" + spec + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  // Band files start with an 'elements:' header; everything else is
  // treated as a strong-semilattice description.
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') {
      continue;
    }
    if (line.compare(pos, 9, "elements:") == 0) {
      return parse_band(text);
    }
    break;
  }
  return build_strong_semilattice(text);
}

SearchBudget budget_for(const RunConfig& cfg, const GenWord& w1,
                        const GenWord& w2) {
  SearchBudget b = SearchBudget::defaults_for(w1, w2);
  if (cfg.max_len > 0) {
    b.max_len = std::max(cfg.max_len, b.max_len - 4);
  }
  b.max_states = cfg.max_states;
  return b;
}

void print_certificate(const Band& b, const RewriteCertificate& cert) {
  std::cout << serialize_certificate(b, cert);
}

// One rectangular D-class as an R-rows x L-columns grid.
std::vector<std::vector<int>> eggbox_grid(const Band& b,
                                          const DClassDecomposition& d,
                                          int cls) {
  const auto& members = d.classes[cls];
  std::vector<int> rows;
  std::vector<int> cols;
  for (int e : members) {
    bool found = false;
    for (int r : rows) {
      found = found || DClassDecomposition::related_r(b, e, r);
    }
    if (!found) {
      rows.push_back(e);
    }
    found = false;
    for (int c : cols) {
      found = found || DClassDecomposition::related_l(b, e, c);
    }
    if (!found) {
      cols.push_back(e);
    }
  }
  std::vector<std::vector<int>> grid(rows.size(),
                                     std::vector<int>(cols.size(), -1));
  for (int e : members) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (DClassDecomposition::related_r(b, e, rows[r]) &&
            DClassDecomposition::related_l(b, e, cols[c])) {
          grid[r][c] = e;
        }
      }
    }
  }
  return grid;
}

void print_grid(const std::vector<std::vector<std::string>>& cells) {
  std::size_t width = 1;
  for (const auto& row : cells) {
    for (const auto& cell : row) {
      width = std::max(width, cell.size());
    }
  }
  std::string rule = "+";
  for (std::size_t c = 0; c < cells[0].size(); ++c) {
    rule += std::string(width + 2, '-') + "+";
  }
  std::cout << rule << '\n';
  for (const auto& row : cells) {
    std::cout << "|";
    for (const auto& cell : row) {
      std::cout << ' ' << cell << std::string(width - cell.size(), ' ')
                << " |";
    }
    std::cout << '\n' << rule << '\n';
  }
}

int cmd_validate(const RunConfig& cfg) {
  Band b = load_band(cfg.band_spec);
  auto d = decompose(b);
  if (cfg.machine) {
    std::cout << "valid=true elements=" << b.size()
              << " classes=" << d.num_classes() << '\n';
  } else {
    std::cout << "valid band: " << b.size() << " elements, "
              << d.num_classes() << " D-classes\n";
    for (int c = 0; c < d.num_classes(); ++c) {
      std::cout << "  " << d.class_name(b, c) << " = {";
      for (std::size_t i = 0; i < d.classes[c].size(); ++i) {
        std::cout << (i ? " " : "") << b.name(d.classes[c][i]);
      }
      std::cout << "}\n";
    }
  }
  return kExitOk;
}

int cmd_classify(const RunConfig& cfg) {
  Band b = load_band(cfg.band_spec);
  auto d = decompose(b);
  auto c = classify(b, d);
  auto flag = [&](const std::string& name, bool value) {
    if (cfg.machine) {
      std::cout << name << "=" << (value ? "true" : "false") << '\n';
    } else {
      std::cout << "  " << name << ": " << (value ? "yes" : "no");
      auto it = c.witnesses.find(name);
      if (it != c.witnesses.end()) {
        std::cout << "  (witness";
        for (int e : it->second.elements) {
          std::cout << ' ' << b.name(e);
        }
        std::cout << ": " << it->second.note << ")";
      }
      std::cout << '\n';
    }
  };
  if (!cfg.machine) {
    std::cout << "classification:\n";
  }
  flag("is_semilattice", c.is_semilattice);
  flag("is_rectangular", c.is_rectangular);
  flag("is_chain", c.is_chain);
  flag("is_normal", c.is_normal);
  flag("is_regular_band", c.is_regular_band);
  flag("is_locally_large", c.is_locally_large);
  flag("is_y_basic", c.is_y_basic);
  if (c.is_pliant.has_value()) {
    flag("is_pliant", *c.is_pliant);
  } else if (cfg.machine) {
    std::cout << "is_pliant=not-applicable\n";
  } else {
    std::cout << "  is_pliant: not applicable (band is not normal)\n";
  }
  return kExitOk;
}

int cmd_eggbox(const RunConfig& cfg) {
  Band b = load_band(cfg.band_spec);
  auto d = decompose(b);
  for (int c = 0; c < d.num_classes(); ++c) {
    auto grid = eggbox_grid(b, d, c);
    if (cfg.machine) {
      std::cout << "class=" << d.class_name(b, c) << " rows=" << grid.size()
                << " cols=" << grid[0].size() << '\n';
      continue;
    }
    std::cout << "D-class " << d.class_name(b, c) << " (" << grid.size()
              << "x" << grid[0].size() << "):\n";
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : grid) {
      std::vector<std::string> line;
      for (int e : row) {
        line.push_back(b.name(e));
      }
      cells.push_back(std::move(line));
    }
    print_grid(cells);
  }
  if (serialize_band(b) == serialize_band(bundled::band("y3")) &&
      !cfg.machine) {
    std::cout << "\nIG(Y) egg-box of the D*-class IG(Y) \\ {g} (paper data):\n";
    print_grid({{"e, (ef)^n e", "(ef)^n"}, {"(fe)^n", "f, (fe)^n f"}});
    std::cout << "(rows are R*-classes, columns L*-classes, n >= 1;\n"
                 " the other D*-class is the singleton {g})\n";
  }
  return kExitOk;
}

int cmd_nf(const RunConfig& cfg, const std::string& word) {
  Band b = load_band(cfg.band_spec);
  auto w = parse_word(b, word);
  auto [nf, cert] = normal_form(b, w);
  if (cfg.machine) {
    std::cout << "nf=" << format_word(b, nf) << " steps=" << cert.steps.size()
              << '\n';
  } else {
    std::cout << format_word(b, nf) << '\n';
  }
  if (cfg.show_certificate) {
    print_certificate(b, cert);
  }
  return kExitOk;
}

int cmd_anf(const RunConfig& cfg, const std::string& word) {
  Band b = load_band(cfg.band_spec);
  auto ctx = BandContext::make(b);
  auto w = parse_word(b, word);
  auto [a, cert] = anf(b, ctx.dec, ctx.phi(), w);
  if (cfg.machine) {
    std::cout << "anf=" << format_word(b, a.word)
              << " blocks=" << a.block_count() << " steps="
              << cert.steps.size() << '\n';
  } else {
    std::cout << format_anf(b, a) << '\n';
  }
  if (cfg.show_certificate) {
    print_certificate(b, cert);
  }
  return kExitOk;
}

int cmd_indices(const RunConfig& cfg, const std::string& word) {
  Band b = load_band(cfg.band_spec);
  auto d = decompose(b);
  auto w = parse_word(b, word);
  for (auto dir : {ScanDirection::LeftToRight, ScanDirection::RightToLeft}) {
    auto p = significant_indices(b, d, w, dir);
    std::string tag =
        dir == ScanDirection::LeftToRight ? "left-to-right" : "right-to-left";
    if (cfg.machine) {
      std::cout << (dir == ScanDirection::LeftToRight ? "ltr" : "rtl")
                << "_indices=";
      for (int i = 0; i < p.y_length(); ++i) {
        std::cout << (i ? "," : "") << p.indices[i];
      }
      std::cout << '\n';
      continue;
    }
    std::cout << tag << " indices:";
    for (int i : p.indices) {
      std::cout << ' ' << i;
    }
    std::cout << "  (stops:";
    for (int k : p.stops) {
      std::cout << ' ' << k;
    }
    std::cout << ")  components:";
    for (int c : p.components) {
      std::cout << ' ' << d.class_name(b, c);
    }
    std::cout << '\n';
  }
  auto p = significant_indices(b, d, w, ScanDirection::LeftToRight);
  if (cfg.machine) {
    std::cout << "y_length=" << p.y_length() << '\n';
  } else {
    std::cout << "Y-length: " << p.y_length() << '\n';
  }
  return kExitOk;
}

int cmd_project_y(const RunConfig& cfg, const std::string& word) {
  Band b = load_band(cfg.band_spec);
  auto d = decompose(b);
  auto w = parse_word(b, word);
  auto p = y_projection(b, d, w);
  Band y = d.semilattice_band(b);
  if (cfg.machine) {
    std::cout << "projection=" << format_word(y, p.word)
              << " nf=" << format_word(y, p.nf) << '\n';
  } else {
    std::cout << "projection: " << format_word(y, p.word) << '\n'
              << "normal form in IG(Y): " << format_word(y, p.nf) << '\n';
  }
  return kExitOk;
}

int cmd_equal(const RunConfig& cfg, const std::string& word1,
              const std::string& word2) {
  Band b = load_band(cfg.band_spec);
  auto ctx = BandContext::make(std::move(b));
  auto w1 = parse_word(ctx.band, word1);
  auto w2 = parse_word(ctx.band, word2);
  auto v = equal(ctx, w1, w2, budget_for(cfg, w1, w2));
  if (cfg.machine) {
    std::cout << "verdict=" << to_string(v.verdict)
              << " method=" << to_string(v.method);
    if (v.certificate) {
      std::cout << " steps=" << v.certificate->steps.size();
    }
    std::cout << '\n';
  } else {
    std::cout << to_string(v.verdict) << "  (method: " << to_string(v.method)
              << ")\n";
    if (!v.evidence.empty()) {
      std::cout << "evidence: " << v.evidence << '\n';
    }
  }
  if (cfg.show_certificate && v.certificate) {
    print_certificate(ctx.band, *v.certificate);
  }
  return v.verdict == Verdict::Inconclusive ? kExitInconclusive : kExitOk;
}

int cmd_witness_search(const RunConfig& cfg, const std::string& target,
                       int max_candidate_len) {
  auto ctx = BandContext::make(load_band(cfg.band_spec));
  auto t = parse_word(ctx.band, target);
  WitnessSearchBudget budget;
  budget.max_candidate_len = max_candidate_len;
  budget.oracle = SearchBudget{cfg.max_len, cfg.max_states};
  auto found = search_nonabundance(ctx, t, budget);
  if (!found) {
    std::cout << "no witness up to candidate length " << max_candidate_len
              << " (not a proof of abundance)\n";
    return kExitInconclusive;
  }
  std::cout << serialize_witness(ctx.band, *found);
  return kExitOk;
}

int cmd_witness_verify(const RunConfig& cfg, const std::string& path) {
  auto ctx = BandContext::make(load_band(cfg.band_spec));
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in.good()) {
      throw BandError("cannot open witness file '" + path + "'");
    }
    buf << in.rdbuf();
  }
  auto witness = parse_witness(ctx, buf.str());
  SearchBudget budget{cfg.max_len > 0 ? cfg.max_len : 8, cfg.max_states};
  auto result = verify_nonabundance(ctx, witness, budget);
  if (result.ok) {
    std::cout << "witness verified: " << format_word(ctx.band, witness.target)
              << " is R*-related to no idempotent\n";
    return kExitOk;
  }
  std::cout << "witness rejected: " << result.reason << '\n';
  return kExitInconclusive;
}

int cmd_regularity(const RunConfig& cfg, const std::string& word) {
  Band b = load_band(cfg.band_spec);
  auto d = decompose(b);
  auto w = parse_word(b, word);
  auto [z, cert] = regularity_witness(b, d, w);
  if (cfg.machine) {
    std::cout << "z=" << format_word(b, z) << " steps=" << cert.steps.size()
              << '\n';
  } else {
    std::cout << "z = " << format_word(b, z) << "   (w z w reduces to w in "
              << cert.steps.size() << " contractions)\n";
  }
  if (cfg.show_certificate) {
    print_certificate(b, cert);
  }
  return kExitOk;
}

int cmd_confluence(const RunConfig& cfg) {
  Band b = load_band(cfg.band_spec);
  auto report = check_local_confluence(b);
  if (report.locally_confluent) {
    std::cout << (cfg.machine ? "locally_confluent=true\n"
                              : "locally confluent\n");
  } else {
    const auto& cx = *report.counterexample;
    if (cfg.machine) {
      std::cout << "locally_confluent=false critical="
                << format_word(b, cx.critical) << '\n';
    } else {
      std::cout << "counterexample: " << format_word(b, cx.critical)
                << " reduces to both '" << format_word(b, cx.left)
                << "' and '" << format_word(b, cx.right)
                << "' (distinct irreducibles)\n";
    }
  }
  return kExitOk;
}

int cmd_condition_p(const RunConfig& cfg, int max_word_len) {
  auto ctx = BandContext::make(load_band(cfg.band_spec));
  ConditionPBudget budget;
  budget.max_word_len = max_word_len;
  auto viol = falsify_condition_p(ctx, budget);
  const Band& b = ctx.band;
  if (!viol) {
    std::cout << "no Condition (P) violation among words of length <= "
              << max_word_len << '\n';
    return kExitInconclusive;
  }
  if (cfg.machine) {
    std::cout << "violation clause=" << viol->clause
              << " w1=" << format_word(b, viol->w1.word)
              << " w2=" << format_word(b, viol->w2.word) << '\n';
    return kExitOk;
  }
  std::cout << "Condition (P) fails, clause (" << viol->clause << ") at "
            << (viol->clause == 1 ? "s = " : "t = ") << viol->index << ":\n"
            << "  equal ANFs:  " << format_word(b, viol->w1.word) << "  =  "
            << format_word(b, viol->w2.word) << '\n'
            << "  " << (viol->clause == 1 ? "L" : "R") << "-related letters: "
            << b.name(viol->letter1) << ", " << b.name(viol->letter2) << '\n'
            << "  but '" << format_word(b, viol->part1) << "' != '"
            << format_word(b, viol->part2) << "' in IG(B)\n"
            << "  (" << viol->part_inequality.evidence << ")\n";
  if (cfg.show_certificate) {
    print_certificate(b, viol->equality);
  }
  return kExitOk;
}

// ---- demos: replay the worked examples and assert their outcomes ----

[[noreturn]] void demo_failed(const std::string& what) {
  std::cout << "DEMO ASSERTION FAILED: " << what << '\n';
  std::exit(kExitInconclusive);
}

void demo_check(bool ok, const std::string& what) {
  if (!ok) {
    demo_failed(what);
  }
  std::cout << "  ok: " << what << '\n';
}

int demo_y3_nonregular() {
  std::cout << "y3: IG(Y) over the 3-element semilattice is not regular\n";
  Band b = bundled::band("y3");
  auto ef = parse_word(b, "e f");
  // Enumerate w of length <= 8 and check (ef)^n w (ef)^n != (ef)^n.
  for (int n = 1; n <= 3; ++n) {
    GenWord target;
    for (int i = 0; i < n; ++i) {
      target = target.letters.empty() ? ef : target.concat(ef);
    }
    long checked = 0;
    std::vector<GenWord> cur;
    for (int a = 0; a < b.size(); ++a) {
      cur.push_back(GenWord{{a}});
    }
    for (int len = 1; len <= 8; ++len) {
      for (const auto& w : cur) {
        auto v = equal_semilattice(b, target.concat(w).concat(target), target);
        if (v.verdict == Verdict::Equal) {
          demo_failed("found w with (ef)^n w (ef)^n = (ef)^n");
        }
        ++checked;
      }
      if (len < 8) {
        std::vector<GenWord> next;
        for (const auto& w : cur) {
          for (int a = 0; a < b.size(); ++a) {
            GenWord e = w;
            e.letters.push_back(a);
            next.push_back(std::move(e));
          }
        }
        cur = std::move(next);
      }
    }
    std::cout << "  ok: (e f)^" << n << " has no inner inverse among "
              << checked << " words of length <= 8\n";
  }
  return kExitOk;
}

int demo_normal5() {
  std::cout << "normal5: c d = b d in IG(B), so normal forms are not unique\n";
  Band b = bundled::band("normal5");
  auto r = bfs_equal(b, parse_word(b, "c d"), parse_word(b, "b d"),
                     SearchBudget{4, 100000});
  demo_check(r.outcome == OracleOutcome::Equal, "c d = b d (oracle)");
  std::cout << serialize_certificate(b, *r.certificate);
  auto report = check_local_confluence(b);
  demo_check(!report.locally_confluent &&
                 format_word(b, report.counterexample->critical) == "c a d",
             "critical word c a d has two distinct irreducible descendants");
  return kExitOk;
}

int demo_band4() {
  std::cout << "band4: IG(B) is weakly abundant but not abundant\n";
  auto ctx = BandContext::make(bundled::band("band4"));
  const Band& b = ctx.band;
  WitnessSearchBudget budget;
  budget.max_candidate_len = 1;
  budget.oracle = SearchBudget{6, 100000};
  auto found = search_nonabundance(ctx, parse_word(b, "a b"), budget);
  demo_check(found.has_value(), "witness search succeeds at length 1");
  demo_check(found->is_pair() && format_word(b, found->x) == "x" &&
                 format_word(b, *found->y) == "y",
             "the witness is the pair (x, y)");
  auto vr = verify_nonabundance(ctx, *found, SearchBudget{6, 100000});
  demo_check(vr.ok, "witness verifies");
  std::cout << serialize_witness(b, *found);
  return kExitOk;
}

int demo_nonnormal5() {
  std::cout
      << "nonnormal5: u' w = w' in IG(B) but not in IG(B_beta) standalone\n";
  auto ctx = BandContext::make(bundled::band("nonnormal5"));
  const Band& b = ctx.band;
  auto v = equal(ctx, parse_word(b, "u' w"), parse_word(b, "w'"));
  demo_check(v.verdict == Verdict::Equal && v.certificate &&
                 v.certificate->steps.size() <= 6,
             "u' w = w' with a certificate of at most 6 steps");
  std::cout << serialize_certificate(b, *v.certificate);
  auto comp =
      component_band(b, ctx.dec, ctx.dec.class_of[b.index_of("u")]);
  auto cv = equal_rectangular(comp.band, parse_word(comp.band, "u' w"),
                              parse_word(comp.band, "w'"));
  demo_check(cv.verdict == Verdict::NotEqual,
             "u' w != w' inside the standalone component");
  return kExitOk;
}

int demo_normal10() {
  std::cout << "normal10: a normal band whose IG(B) is not abundant\n";
  auto ctx = BandContext::make(bundled::band("normal10"));
  const Band& b = ctx.band;
  auto ev = parse_word(b, "e v");
  auto ehev = parse_word(b, "e h e v");
  auto r = bfs_equal(b, ev, ehev, SearchBudget{5, 200000});
  demo_check(r.outcome == OracleOutcome::Equal &&
                 r.certificate->steps.size() <= 8,
             "e v = e h e v within 8 steps");
  std::cout << serialize_certificate(b, *r.certificate);
  auto ne = equal_normal_component(b, ctx.dec, *ctx.morphisms,
                                   parse_word(b, "e h e"), parse_word(b, "e"));
  demo_check(ne.verdict == Verdict::NotEqual, "e h e != e in IG(B_beta)");

  NonAbundanceWitness witness;
  witness.target = ev;
  witness.tilde_idempotent = b.index_of("e");
  witness.x = parse_word(b, "e h");
  witness.equality_evidence = invert_certificate(*r.certificate);
  witness.inequality_evidence = ne;
  auto vr = verify_nonabundance(ctx, witness, SearchBudget{6, 200000});
  demo_check(vr.ok, "single witness x = e h verifies");
  return kExitOk;
}

int cmd_demo(const std::string& name) {
  if (name == "y3-nonregular") {
    return demo_y3_nonregular();
  }
  if (name == "normal5-nonunique") {
    return demo_normal5();
  }
  if (name == "band4-nonabundant") {
    return demo_band4();
  }
  if (name == "nonnormal5-projection") {
    return demo_nonnormal5();
  }
  if (name == "normal10-nonabundant") {
    return demo_normal10();
  }
  std::cerr << "unknown demo '" << name
            << "'; available: y3-nonregular normal5-nonunique "
               "band4-nonabundant nonnormal5-projection "
               "normal10-nonabundant\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"free idempotent generated semigroups IG(B) over finite bands"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--band", cfg.band_spec,
                 "band file, strong-semilattice file, or bundled name");
  app.add_option("--max-len", cfg.max_len,
                 "oracle length bound (default: input length + 4)");
  app.add_option("--max-states", cfg.max_states, "oracle state bound");
  app.add_option("--seed", cfg.seed, "seed for randomized suites (reserved)");
  app.add_flag("--machine", cfg.machine, "stable machine-readable output");
  app.add_flag("--show-certificate", cfg.show_certificate,
               "print rewrite certificates");

  std::string word1, word2, target, witness_path, demo_name;
  int max_candidate_len = 2;
  int max_word_len = 6;

  auto* validate = app.add_subcommand("validate", "parse and validate a band");
  auto* classify_cmd = app.add_subcommand("classify", "classification flags");
  auto* eggbox = app.add_subcommand("eggbox", "egg-box pictures of the D-classes");
  auto* nf = app.add_subcommand("nf", "leftmost contraction normal form");
  nf->add_option("word", word1, "word (space-separated element names)")
      ->required();
  auto* anf_cmd = app.add_subcommand("anf", "almost normal form");
  anf_cmd->add_option("word", word1)->required();
  auto* indices = app.add_subcommand("indices", "significant indices");
  indices->add_option("word", word1)->required();
  auto* project = app.add_subcommand("project-y", "projection to IG(Y)");
  project->add_option("word", word1)->required();
  auto* equal_cmd = app.add_subcommand("equal", "decide equality in IG(B)");
  equal_cmd->add_option("word1", word1)->required();
  equal_cmd->add_option("word2", word2)->required();
  auto* wsearch = app.add_subcommand("witness-search",
                                     "search for a non-abundance witness");
  wsearch->add_option("target", target)->required();
  wsearch->add_option("--max-candidate-len", max_candidate_len,
                      "longest candidate word (default 2)");
  auto* wverify = app.add_subcommand("witness-verify",
                                     "verify a serialized witness ('-' for stdin)");
  wverify->add_option("file", witness_path)->required();
  auto* regularity = app.add_subcommand(
      "regularity", "inverse-like word for a single-class word");
  regularity->add_option("word", word1)->required();
  auto* confluence =
      app.add_subcommand("confluence", "local confluence check");
  auto* condp = app.add_subcommand("condition-p",
                                   "search for a Condition (P) violation");
  condp->add_option("--max-word-len", max_word_len,
                    "longest word enumerated (default 6)");
  auto* demo = app.add_subcommand("demo", "replay a worked example");
  demo->add_option("name", demo_name,
                   "y3-nonregular | normal5-nonunique | band4-nonabundant | "
                   "nonnormal5-projection | normal10-nonabundant")
      ->required();

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (demo->parsed()) {
      return cmd_demo(demo_name);
    }
    if (cfg.band_spec.empty()) {
      std::cerr << "--band is required for this command\n";
      return kExitUsage;
    }
    if (validate->parsed()) {
      return cmd_validate(cfg);
    }
    if (classify_cmd->parsed()) {
      return cmd_classify(cfg);
    }
    if (eggbox->parsed()) {
      return cmd_eggbox(cfg);
    }
    if (nf->parsed()) {
      return cmd_nf(cfg, word1);
    }
    if (anf_cmd->parsed()) {
      return cmd_anf(cfg, word1);
    }
    if (indices->parsed()) {
      return cmd_indices(cfg, word1);
    }
    if (project->parsed()) {
      return cmd_project_y(cfg, word1);
    }
    if (equal_cmd->parsed()) {
      return cmd_equal(cfg, word1, word2);
    }
    if (wsearch->parsed()) {
      return cmd_witness_search(cfg, target, max_candidate_len);
    }
    if (wverify->parsed()) {
      return cmd_witness_verify(cfg, witness_path);
    }
    if (regularity->parsed()) {
      return cmd_regularity(cfg, word1);
    }
    if (confluence->parsed()) {
      return cmd_confluence(cfg);
    }
    if (condp->parsed()) {
      return cmd_condition_p(cfg, max_word_len);
    }
  } catch (const BandError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
