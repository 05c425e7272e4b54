#include "igband/decide.hpp"

#include <algorithm>

namespace igband {

BandContext BandContext::make(Band b) {
  BandContext ctx;
  ctx.band = std::move(b);
  ctx.dec = decompose(ctx.band);
  ctx.cls = classify(ctx.band, ctx.dec);
  if (ctx.cls.is_normal) {
    ctx.morphisms = structure_morphisms(ctx.band, ctx.dec);
  }
  return ctx;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "equal";
    case Verdict::NotEqual: return "not-equal";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(DecisionMethod m) {
  switch (m) {
    case DecisionMethod::SemilatticeNf: return "semilattice-nf";
    case DecisionMethod::RectangularNf: return "rectangular-nf";
    case DecisionMethod::LocallyLarge: return "locally-large";
    case DecisionMethod::NormalComponent: return "normal-component";
    case DecisionMethod::BfsOracle: return "bfs-oracle";
  }
  return "?";
}

namespace {

// Equal-by-identical-canonical-forms plumbing shared by the exact deciders.
EqualityVerdict verdict_from_canonical(const Band& b, DecisionMethod method,
                                       const GenWord& c1, const GenWord& c2,
                                       RewriteCertificate cert1,
                                       RewriteCertificate cert2,
                                       const std::string& canon_kind) {
  EqualityVerdict v;
  v.method = method;
  v.canonical_forms = {c1, c2};
  if (c1 == c2) {
    v.verdict = Verdict::Equal;
    v.evidence = "identical " + canon_kind;
    v.certificate = chain_certificates(cert1, invert_certificate(cert2));
  } else {
    v.verdict = Verdict::NotEqual;
    v.evidence = "distinct " + canon_kind + ": '" + format_word(b, c1) +
                 "' vs '" + format_word(b, c2) + "'";
  }
  return v;
}

bool single_component(const DClassDecomposition& d, const GenWord& w,
                      int* cls_out = nullptr) {
  int cls = d.class_of[w[0]];
  for (int i = 1; i < w.size(); ++i) {
    if (d.class_of[w[i]] != cls) {
      return false;
    }
  }
  if (cls_out != nullptr) {
    *cls_out = cls;
  }
  return true;
}

// Product of a letter range in the band.
int range_product(const Band& b, const GenWord& w, int begin, int end) {
  int p = w[begin];
  for (int i = begin + 1; i < end; ++i) {
    p = b.mul(p, w[i]);
  }
  return p;
}

}  // namespace

EqualityVerdict equal_semilattice(const Band& b, const GenWord& w1,
                                  const GenWord& w2) {
  for (int e = 0; e < b.size(); ++e) {
    for (int f = 0; f < b.size(); ++f) {
      if (b.mul(e, f) != b.mul(f, e)) {
        throw BandError("not a semilattice");
      }
    }
  }
  auto [n1, c1] = normal_form(b, w1);
  auto [n2, c2] = normal_form(b, w2);
  return verdict_from_canonical(b, DecisionMethod::SemilatticeNf, n1, n2, c1,
                                c2, "normal forms");
}

EqualityVerdict equal_rectangular(const Band& b, const GenWord& w1,
                                  const GenWord& w2) {
  for (int x = 0; x < b.size(); ++x) {
    for (int y = 0; y < b.size(); ++y) {
      if (b.mul(b.mul(x, y), x) != x) {
        throw BandError("not rectangular");
      }
    }
  }
  auto [n1, c1] = normal_form(b, w1);
  auto [n2, c2] = normal_form(b, w2);
  return verdict_from_canonical(b, DecisionMethod::RectangularNf, n1, n2, c1,
                                c2, "normal forms");
}

EqualityVerdict equal_locally_large(const Band& b,
                                    const DClassDecomposition& d,
                                    const GenWord& w1, const GenWord& w2) {
  if (!classify(b, d).is_locally_large) {
    throw BandError("not locally large");
  }
  auto [a1, c1] = anf(b, d, nullptr, w1);
  auto [a2, c2] = anf(b, d, nullptr, w2);
  if (a1.components != a2.components) {
    EqualityVerdict v;
    v.method = DecisionMethod::LocallyLarge;
    v.verdict = Verdict::NotEqual;
    v.canonical_forms = {a1.word, a2.word};
    v.evidence = "mismatched Y-length or ordered Y-components";
    return v;
  }
  return verdict_from_canonical(b, DecisionMethod::LocallyLarge, a1.word,
                                a2.word, c1, c2,
                                "block-normalized almost normal forms");
}

GenWord project_component(const Band& b, const DClassDecomposition& d,
                          const StructureMorphisms& m, const GenWord& w,
                          int alpha) {
  GenWord out;
  out.letters.reserve(w.letters.size());
  for (int i = 0; i < w.size(); ++i) {
    int beta = d.class_of[w[i]];
    if (!d.leq(alpha, beta)) {
      throw BandError("letter '" + b.name(w[i]) +
                      "' lies in a class not above the target class");
    }
    out.letters.push_back(m.apply(beta, alpha, w[i]));
  }
  return out;
}

EqualityVerdict equal_normal_component(const Band& b,
                                       const DClassDecomposition& d,
                                       const StructureMorphisms&,
                                       const GenWord& w1, const GenWord& w2) {
  int cls1 = -1;
  int cls2 = -1;
  if (!single_component(d, w1, &cls1) || !single_component(d, w2, &cls2)) {
    throw BandError("words must have all letters in a single D-class");
  }
  if (cls1 != cls2) {
    throw BandError("words lie in different D-classes");
  }
  // Contractions of a single-component word stay inside the component, and a
  // pair is basic in B_alpha exactly when it is basic in B, so the plain
  // leftmost normal form is the component normal form.
  auto [n1, c1] = normal_form(b, w1);
  auto [n2, c2] = normal_form(b, w2);
  return verdict_from_canonical(b, DecisionMethod::NormalComponent, n1, n2,
                                c1, c2, "component normal forms");
}

EqualityVerdict equal(const BandContext& ctx, const GenWord& w1,
                      const GenWord& w2, const SearchBudget& budget) {
  const Band& b = ctx.band;
  const DClassDecomposition& d = ctx.dec;

  if (ctx.cls.is_semilattice) {
    return equal_semilattice(b, w1, w2);
  }
  if (ctx.cls.is_rectangular) {
    return equal_rectangular(b, w1, w2);
  }
  if (ctx.cls.is_locally_large) {
    return equal_locally_large(b, d, w1, w2);
  }
  int cls1 = -1;
  int cls2 = -1;
  if (ctx.cls.is_normal && single_component(d, w1, &cls1) &&
      single_component(d, w2, &cls2) && cls1 == cls2) {
    return equal_normal_component(b, d, *ctx.morphisms, w1, w2);
  }

  // Fallback route: sound filters first, then the bounded oracle.
  EqualityVerdict v;
  v.method = DecisionMethod::BfsOracle;

  auto [n1, cert1] = normal_form(b, w1);
  auto [n2, cert2] = normal_form(b, w2);
  if (n1 == n2) {
    v.verdict = Verdict::Equal;
    v.evidence = "identical leftmost normal forms";
    v.canonical_forms = {n1, n2};
    v.certificate = chain_certificates(cert1, invert_certificate(cert2));
    return v;
  }
  if (n1.size() == 1 && n2.size() == 1) {
    v.verdict = Verdict::NotEqual;
    v.evidence = "distinct generators '" + b.name(n1[0]) + "' and '" +
                 b.name(n2[0]) + "' (generators embed in IG(B))";
    return v;
  }

  auto p1 = y_projection(b, d, w1);
  auto p2 = y_projection(b, d, w2);
  if (!(p1.nf == p2.nf)) {
    v.verdict = Verdict::NotEqual;
    v.evidence = "mismatched Y-components: projections normalize to '" +
                 format_word(d.semilattice_band(b), p1.nf) + "' vs '" +
                 format_word(d.semilattice_band(b), p2.nf) + "'";
    return v;
  }

  // Same Y-length here, so significant indices correspond 1:1. Prefix
  // products up to corresponding indices must be R-related in B, suffix
  // products from the mirrored indices L-related.
  auto s1 = significant_indices(b, d, w1, ScanDirection::LeftToRight);
  auto s2 = significant_indices(b, d, w2, ScanDirection::LeftToRight);
  for (int l = 0; l < s1.y_length(); ++l) {
    int q1 = range_product(b, w1, 0, s1.indices[l]);
    int q2 = range_product(b, w2, 0, s2.indices[l]);
    if (!DClassDecomposition::related_r(b, q1, q2)) {
      v.verdict = Verdict::NotEqual;
      v.evidence = "prefix products at significant index " +
                   std::to_string(l + 1) + " are not R-related: '" +
                   b.name(q1) + "' vs '" + b.name(q2) + "'";
      return v;
    }
  }
  auto r1 = significant_indices(b, d, w1, ScanDirection::RightToLeft);
  auto r2 = significant_indices(b, d, w2, ScanDirection::RightToLeft);
  for (int l = 0; l < r1.y_length(); ++l) {
    int q1 = range_product(b, w1, r1.indices[l] - 1, w1.size());
    int q2 = range_product(b, w2, r2.indices[l] - 1, w2.size());
    if (!DClassDecomposition::related_l(b, q1, q2)) {
      v.verdict = Verdict::NotEqual;
      v.evidence = "suffix products at mirrored significant index " +
                   std::to_string(l + 1) + " are not L-related: '" +
                   b.name(q1) + "' vs '" + b.name(q2) + "'";
      return v;
    }
  }

  auto [a1, ac1] = anf(b, d, ctx.phi(), w1);
  auto [a2, ac2] = anf(b, d, ctx.phi(), w2);
  if (a1.word == a2.word) {
    v.verdict = Verdict::Equal;
    v.evidence = "identical almost normal forms";
    v.canonical_forms = {a1.word, a2.word};
    v.certificate = chain_certificates(ac1, invert_certificate(ac2));
    return v;
  }

  // Search between the normal forms, deepening the length bound one step at
  // a time: tight bounds keep the closure small, and a path found at any
  // bound settles the question. Stitch the contraction proofs around the
  // oracle path.
  int max_len = std::max(budget.max_len, std::max(n1.size(), n2.size()));
  OracleOutcome last = OracleOutcome::Inconclusive;
  for (int len = std::max(n1.size(), n2.size()); len <= max_len; ++len) {
    auto oracle = bfs_equal(b, n1, n2, SearchBudget{len, budget.max_states});
    if (oracle.outcome == OracleOutcome::Equal) {
      v.verdict = Verdict::Equal;
      v.evidence = "breadth-first oracle path";
      v.certificate = chain_certificates(
          chain_certificates(cert1, *oracle.certificate),
          invert_certificate(cert2));
      return v;
    }
    last = oracle.outcome;
    if (last == OracleOutcome::Inconclusive) {
      break;  // larger bounds only truncate harder
    }
  }
  v.verdict = Verdict::Inconclusive;
  v.evidence = (last == OracleOutcome::DistinctWithinBudget)
                   ? "no rewrite path within max_len " +
                         std::to_string(max_len) +
                         " (closure exhausted; not a proof of inequality)"
                   : "oracle truncated at max_states " +
                         std::to_string(budget.max_states);
  return v;
}

EqualityVerdict equal(const BandContext& ctx, const GenWord& w1,
                      const GenWord& w2) {
  return equal(ctx, w1, w2, SearchBudget::defaults_for(w1, w2));
}

}  // namespace igband
