#include <random>

#include "doctest.h"
#include "igband/bundled.hpp"
#include "igband/greens.hpp"

using namespace igband;

namespace {

GenWord w(const Band& b, const std::string& names) {
  return parse_word(b, names);
}

GenWord random_word(std::mt19937& rng, int alphabet, int max_len) {
  int len = 1 + static_cast<int>(rng() % max_len);
  GenWord out;
  for (int i = 0; i < len; ++i) {
    out.letters.push_back(static_cast<int>(rng() % alphabet));
  }
  return out;
}

}  // namespace

TEST_CASE("greens: tilde idempotents") {
  auto b4 = BandContext::make(bundled::band("band4"));
  CHECK(b4.band.name(tilde_idempotent(b4, w(b4.band, "a b"), Side::R)) == "a");
  CHECK(b4.band.name(tilde_idempotent(b4, w(b4.band, "a b"), Side::L)) == "b");

  auto n10 = BandContext::make(bundled::band("normal10"));
  CHECK(n10.band.name(tilde_idempotent(n10, w(n10.band, "e v"), Side::R)) ==
        "e");
  CHECK(n10.band.name(tilde_idempotent(n10, w(n10.band, "e"), Side::R)) ==
        "e");
  CHECK(n10.band.name(tilde_idempotent(n10, w(n10.band, "e"), Side::L)) ==
        "e");
  // a v collapses to v before the first letter is read off.
  CHECK(n10.band.name(tilde_idempotent(n10, w(n10.band, "a v"), Side::R)) ==
        "v");
}

TEST_CASE("greens: tilde relatedness on y3") {
  auto y3 = BandContext::make(bundled::band("y3"));
  GenWord e = w(y3.band, "e");
  GenWord ef = w(y3.band, "e f");
  GenWord power;
  for (int n = 1; n <= 4; ++n) {
    power = (n == 1) ? ef : power.concat(ef);
    CHECK(tilde_related(y3, power, e, Side::R));          // (e f)^n
    CHECK(tilde_related(y3, power.concat(e), e, Side::R));  // (e f)^n e
  }
  CHECK(!tilde_related(y3, e, w(y3.band, "f"), Side::R));
  CHECK(tilde_related(y3, e, e, Side::R));
}

TEST_CASE("greens: band4 pair witness verifies (the worked example)") {
  auto ctx = BandContext::make(bundled::band("band4"));
  const Band& b = ctx.band;

  NonAbundanceWitness witness;
  witness.target = w(b, "a b");
  witness.tilde_idempotent = b.index_of("a");
  witness.x = w(b, "x");
  witness.y = w(b, "y");
  // x a b = y = y a b, written out as contractions through y and back.
  auto left = bfs_equal(b, w(b, "x a b"), w(b, "y a b"), SearchBudget{4, 10000});
  REQUIRE(left.outcome == OracleOutcome::Equal);
  witness.equality_evidence = *left.certificate;
  witness.inequality_evidence = equal(ctx, w(b, "x a"), w(b, "y a"));

  auto result = verify_nonabundance(ctx, witness, SearchBudget{6, 100000});
  CHECK(result.ok);

  // A tampered witness whose "inequality" is actually an equality fails.
  auto broken = witness;
  broken.y = w(b, "x");
  broken.equality_evidence =
      *bfs_equal(b, w(b, "x a b"), w(b, "x a b"), SearchBudget{4, 10000})
           .certificate;
  auto bad = verify_nonabundance(ctx, broken, SearchBudget{6, 100000});
  CHECK(!bad.ok);
  CHECK(bad.reason.find("not-equal") != std::string::npos);

  // Wrong tilde idempotent is rejected.
  auto wrong = witness;
  wrong.tilde_idempotent = b.index_of("b");
  CHECK(!verify_nonabundance(ctx, wrong, SearchBudget{6, 100000}).ok);

  // Serialization round-trips through the text format.
  auto text = serialize_witness(b, witness);
  auto parsed = parse_witness(ctx, text);
  CHECK(verify_nonabundance(ctx, parsed, SearchBudget{6, 100000}).ok);
}

TEST_CASE("greens: band4 witness search rediscovers the pair at length 1") {
  auto ctx = BandContext::make(bundled::band("band4"));
  const Band& b = ctx.band;
  WitnessSearchBudget budget;
  budget.max_candidate_len = 1;
  budget.oracle = SearchBudget{6, 100000};
  auto found = search_nonabundance(ctx, w(b, "a b"), budget);
  REQUIRE(found.has_value());
  REQUIRE(found->is_pair());
  CHECK(format_word(b, found->x) == "x");
  CHECK(format_word(b, *found->y) == "y");
  CHECK(verify_nonabundance(ctx, *found, SearchBudget{6, 100000}).ok);
}

TEST_CASE("greens: normal10 witness search finds the single witness e h") {
  auto ctx = BandContext::make(bundled::band("normal10"));
  const Band& b = ctx.band;
  WitnessSearchBudget budget;
  budget.max_candidate_len = 2;
  budget.oracle = SearchBudget{6, 300000};
  auto found = search_nonabundance(ctx, w(b, "e v"), budget);
  REQUIRE(found.has_value());
  CHECK(!found->is_pair());
  CHECK(format_word(b, found->x) == "e h");
  CHECK(b.name(found->tilde_idempotent) == "e");
  CHECK(verify_nonabundance(ctx, *found, SearchBudget{6, 300000}).ok);
}

TEST_CASE("greens: y3 has no witness for (e f)^2 up to length 3") {
  auto ctx = BandContext::make(bundled::band("y3"));
  WitnessSearchBudget budget;
  budget.max_candidate_len = 3;
  budget.oracle = SearchBudget{10, 100000};
  auto found = search_nonabundance(ctx, w(ctx.band, "e f e f"), budget);
  CHECK(!found.has_value());
}

TEST_CASE("greens: witness transfer across idempotents (paper witnesses)") {
  // A verified witness rules out R*-relatedness to every idempotent, not
  // just the tilde one: f-bar either fails tilde-relatedness outright or
  // inherits the refuting equation.
  auto check_transfer = [](const BandContext& ctx,
                           const NonAbundanceWitness& witness) {
    const Band& b = ctx.band;
    for (int f = 0; f < b.size(); ++f) {
      GenWord fbar{{f}};
      if (!tilde_related(ctx, witness.target, fbar, Side::R)) {
        continue;  // not even R-tilde related: R* is impossible
      }
      GenWord lhs = witness.x.concat(fbar);
      GenWord rhs = witness.is_pair() ? witness.y->concat(fbar) : fbar;
      auto v = equal(ctx, lhs, rhs);
      CHECK(v.verdict != Verdict::Equal);
    }
  };

  auto b4 = BandContext::make(bundled::band("band4"));
  NonAbundanceWitness wb4;
  wb4.target = w(b4.band, "a b");
  wb4.tilde_idempotent = b4.band.index_of("a");
  wb4.x = w(b4.band, "x");
  wb4.y = w(b4.band, "y");
  check_transfer(b4, wb4);

  auto n10 = BandContext::make(bundled::band("normal10"));
  NonAbundanceWitness wn10;
  wn10.target = w(n10.band, "e v");
  wn10.tilde_idempotent = n10.band.index_of("e");
  wn10.x = w(n10.band, "e h");
  check_transfer(n10, wn10);
}

TEST_CASE("greens: regularity witness") {
  Band r22 = build_strong_semilattice(
      "component only: rows=2 cols=2 names=p q r s\n");
  auto d22 = decompose(r22);
  auto [z, cert] = regularity_witness(r22, d22, w(r22, "p s"));
  CHECK(format_word(r22, z) == "r");  // s p = r
  CHECK(check_certificate(r22, cert));
  CHECK(cert.start == w(r22, "p s r p s"));
  CHECK(cert.end == w(r22, "p s"));

  // Single letter degenerates to e e e = e.
  auto [z1, cert1] = regularity_witness(r22, d22, w(r22, "p"));
  CHECK(z1 == w(r22, "p"));
  CHECK(check_certificate(r22, cert1));

  // Inside normal10's B_beta: z = (h e) = g.
  Band n10 = bundled::band("normal10");
  auto dn = decompose(n10);
  auto [z2, cert2] = regularity_witness(n10, dn, w(n10, "e h"));
  CHECK(format_word(n10, z2) == "g");
  CHECK(check_certificate(n10, cert2));
  CHECK(cert2.end == w(n10, "e h"));

  CHECK_THROWS_AS(regularity_witness(n10, dn, w(n10, "e v")), BandError);
}

TEST_CASE("greens: regularity witness re-decides as equal, all short words") {
  auto ctx = BandContext::make(bundled::band("normal10"));
  const Band& b = ctx.band;
  auto d = ctx.dec;
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    int cls = static_cast<int>(rng() % d.num_classes());
    const auto& members = d.classes[cls];
    GenWord word;
    int len = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < len; ++i) {
      word.letters.push_back(members[rng() % members.size()]);
    }
    auto [z, cert] = regularity_witness(b, d, word);
    REQUIRE(check_certificate(b, cert));
    auto v = equal(ctx, word.concat(z).concat(word), word);
    REQUIRE(v.verdict == Verdict::Equal);
  }
}

TEST_CASE("greens: tilde congruence sampling") {
  // R-tilde is a left congruence, L-tilde a right congruence, at the level
  // of tilde idempotents.
  for (const auto& name : bundled::names()) {
    CAPTURE(name);
    auto ctx = BandContext::make(bundled::band(name));
    std::mt19937 rng(4242);
    int accepted = 0;
    int attempts = 0;
    while (accepted < 200 && attempts < 20000) {
      ++attempts;
      auto w1 = random_word(rng, ctx.band.size(), 4);
      auto w2 = random_word(rng, ctx.band.size(), 4);
      auto z = random_word(rng, ctx.band.size(), 3);
      if (tilde_related(ctx, w1, w2, Side::R)) {
        ++accepted;
        REQUIRE(tilde_related(ctx, z.concat(w1), z.concat(w2), Side::R));
      }
      if (tilde_related(ctx, w1, w2, Side::L)) {
        REQUIRE(tilde_related(ctx, w1.concat(z), w2.concat(z), Side::L));
      }
    }
    CHECK(accepted >= 200);
  }
}

TEST_CASE("greens: tilde idempotent invariant across certified equality") {
  auto ctx = BandContext::make(bundled::band("normal10"));
  const Band& b = ctx.band;
  std::mt19937 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    auto word = random_word(rng, b.size(), 4);
    auto [a, cert] = anf(b, ctx.dec, ctx.phi(), word);
    int e1 = tilde_idempotent(ctx, cert.start, Side::R);
    int e2 = tilde_idempotent(ctx, cert.end, Side::R);
    REQUIRE(DClassDecomposition::related_r(b, e1, e2));
    int f1 = tilde_idempotent(ctx, cert.start, Side::L);
    int f2 = tilde_idempotent(ctx, cert.end, Side::L);
    REQUIRE(DClassDecomposition::related_l(b, f1, f2));
  }
}

TEST_CASE("greens: condition (P) falsifier on normal10") {
  auto ctx = BandContext::make(bundled::band("normal10"));
  ConditionPBudget budget;
  budget.max_word_len = 6;
  auto viol = falsify_condition_p(ctx, budget);
  REQUIRE(viol.has_value());
  const Band& b = ctx.band;
  // The violating pair is certified equal and the parts certified unequal.
  CHECK(check_certificate(b, viol->equality));
  CHECK(viol->equality.start == viol->w1.word);
  CHECK(viol->equality.end == viol->w2.word);
  CHECK(viol->part_inequality.verdict == Verdict::NotEqual);
  if (viol->clause == 1) {
    CHECK(DClassDecomposition::related_l(b, viol->letter1, viol->letter2));
  } else {
    CHECK(DClassDecomposition::related_r(b, viol->letter1, viol->letter2));
  }
}

TEST_CASE("greens: condition (P) holds for y3 and rect1 within budget") {
  for (const auto& name : {"y3", "rect1"}) {
    CAPTURE(name);
    auto ctx = BandContext::make(bundled::band(name));
    ConditionPBudget budget;
    budget.max_word_len = 6;
    CHECK(!falsify_condition_p(ctx, budget).has_value());
  }
}
