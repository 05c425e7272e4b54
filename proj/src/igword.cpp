#include "igband/igword.hpp"

#include <algorithm>
#include <numeric>

namespace igband {

namespace {

std::vector<int> classes_of(const DClassDecomposition& d, const GenWord& w) {
  std::vector<int> out(w.size());
  for (int i = 0; i < w.size(); ++i) {
    out[i] = d.class_of[w[i]];
  }
  return out;
}

// The left-to-right greedy scan on a class sequence; returns 0-based
// (index, stop) pairs.
std::vector<std::pair<int, int>> scan_ltr(const DClassDecomposition& d,
                                          const std::vector<int>& cls) {
  std::vector<std::pair<int, int>> out;
  int n = static_cast<int>(cls.size());
  int pos = 0;
  while (pos < n) {
    int idx = pos;
    for (int i = pos; i < n; ++i) {
      bool all_above = true;
      for (int j = pos; j <= i; ++j) {
        if (!d.leq(cls[i], cls[j])) {
          all_above = false;
          break;
        }
      }
      if (all_above) {
        idx = i;
      }
    }
    int stop = idx;
    while (stop + 1 < n && d.leq(cls[idx], cls[stop + 1])) {
      ++stop;
    }
    out.emplace_back(idx, stop);
    pos = stop + 1;
  }
  return out;
}

}  // namespace

SignificantProfile significant_indices(const Band&,
                                       const DClassDecomposition& d,
                                       const GenWord& w, ScanDirection dir) {
  if (w.letters.empty()) {
    throw BandError("empty word");
  }
  SignificantProfile p;
  p.direction = dir;
  auto cls = classes_of(d, w);
  if (dir == ScanDirection::LeftToRight) {
    for (auto [idx, stop] : scan_ltr(d, cls)) {
      p.indices.push_back(idx + 1);
      p.stops.push_back(stop + 1);
      p.components.push_back(cls[idx]);
    }
  } else {
    auto rev = cls;
    std::reverse(rev.begin(), rev.end());
    auto pairs = scan_ltr(d, rev);
    int n = w.size();
    // Mirror back and list in increasing position order.
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
      p.indices.push_back(n - it->first);
      p.stops.push_back(n - it->second);
      p.components.push_back(cls[n - 1 - it->first]);
    }
  }
  return p;
}

YProjection y_projection(const Band& b, const DClassDecomposition& d,
                         const GenWord& w) {
  YProjection out;
  out.word = GenWord(classes_of(d, w));
  Band y = d.semilattice_band(b);
  out.nf = normal_form(y, out.word).first;
  return out;
}

std::pair<int, int> AlmostNormalForm::block_range(int t) const {
  int start = (t == 0) ? 0 : block_bounds[t - 1];
  int end = (t == block_count() - 1) ? word.size() : block_bounds[t];
  return {start, end};
}

GenWord AlmostNormalForm::block_word(int t) const {
  auto [s, e] = block_range(t);
  return GenWord(std::vector<int>(word.letters.begin() + s,
                                  word.letters.begin() + e));
}

std::optional<AlmostNormalForm> as_anf(const Band&,
                                       const DClassDecomposition& d,
                                       const GenWord& w) {
  if (w.letters.empty()) {
    return std::nullopt;
  }
  AlmostNormalForm a;
  a.word = w;
  auto cls = classes_of(d, w);
  a.components.push_back(cls[0]);
  for (int i = 1; i < w.size(); ++i) {
    if (cls[i] != a.components.back()) {
      a.block_bounds.push_back(i);
      a.components.push_back(cls[i]);
    }
  }
  for (std::size_t t = 0; t + 1 < a.components.size(); ++t) {
    if (d.comparable(a.components[t], a.components[t + 1])) {
      return std::nullopt;
    }
  }
  return a;
}

namespace {

// Incremental ANF construction over a working word. Blocks describe the
// processed prefix; letters beyond it are pending input. Every emitted step
// is applied through apply_step, so an inconsistent derivation throws
// instead of producing a bogus certificate.
class AnfAccumulator {
 public:
  AnfAccumulator(const Band& b, const DClassDecomposition& d,
                 const StructureMorphisms* m, GenWord working)
      : b_(b), d_(d), m_(m), working_(std::move(working)) {}

  // Starts the block structure with the first pending letter.
  void init_first_letter() {
    block_len_ = {1};
    comps_ = {d_.class_of[working_[0]]};
    prefix_ = 1;
  }

  void adopt_blocks(const AlmostNormalForm& a) {
    block_len_.clear();
    comps_ = a.components;
    for (int t = 0; t < a.block_count(); ++t) {
      auto [s, e] = a.block_range(t);
      block_len_.push_back(e - s);
    }
    prefix_ = a.word.size();
  }

  int prefix() const { return prefix_; }
  int total() const { return working_.size(); }

  // Absorbs the next pending run: an ANF block list of length `count`
  // letters with block structure (lens, comps) sitting at working[prefix..).
  void absorb(const std::vector<int>& right_lens,
              const std::vector<int>& right_comps) {
    int beta1 = right_comps[0];
    int alpha_r = comps_.back();
    if (!d_.comparable(alpha_r, beta1)) {
      // Case (i): concatenation is already in almost normal form.
      append_blocks(right_lens, right_comps);
    } else if (d_.leq(beta1, alpha_r)) {
      // Case (ii): conjugate trailing letters of the prefix through the
      // first right letter, then merge with the right's first block.
      int bt = static_cast<int>(comps_.size());
      while (bt > 0 && d_.leq(beta1, comps_[bt - 1])) {
        --bt;
      }
      int p0 = 0;
      for (int t = 0; t < bt; ++t) {
        p0 += block_len_[t];
      }
      for (int p = prefix_ - 1; p >= p0; --p) {
        absorb_right_at(p);
      }
      int conj = prefix_ - p0;
      block_len_.resize(bt);
      comps_.resize(bt);
      block_len_.push_back(conj + right_lens[0]);
      comps_.push_back(beta1);
      prefix_ += right_lens[0];
      append_blocks(
          std::vector<int>(right_lens.begin() + 1, right_lens.end()),
          std::vector<int>(right_comps.begin() + 1, right_comps.end()));
    } else {
      // Case (iii): conjugate the right's leading blocks down into the last
      // block of the prefix.
      int v = 0;
      int absorbed = 0;
      while (v < static_cast<int>(right_comps.size()) &&
             d_.leq(alpha_r, right_comps[v])) {
        absorbed += right_lens[v];
        ++v;
      }
      for (int j = 0; j < absorbed; ++j) {
        absorb_left_at(prefix_ - 1 + j);
      }
      block_len_.back() += absorbed;
      prefix_ += absorbed;
      append_blocks(
          std::vector<int>(right_lens.begin() + v, right_lens.end()),
          std::vector<int>(right_comps.begin() + v, right_comps.end()));
    }
    renormalize();
  }

  AlmostNormalForm finish() && {
    if (prefix_ != working_.size()) {
      throw std::logic_error("pending letters left after ANF fold");
    }
    AlmostNormalForm a;
    a.word = working_;
    a.components = comps_;
    int acc = 0;
    for (std::size_t t = 0; t + 1 < block_len_.size(); ++t) {
      acc += block_len_[t];
      a.block_bounds.push_back(acc);
    }
    for (std::size_t t = 0; t + 1 < comps_.size(); ++t) {
      if (d_.comparable(comps_[t], comps_[t + 1])) {
        throw std::logic_error("adjacent ANF components are comparable");
      }
    }
    return a;
  }

  std::vector<RewriteStep> steps;

 private:
  void emit(const RewriteStep& s) {
    working_ = apply_step(b_, working_, s);
    steps.push_back(s);
  }

  // W[p] = x (high), W[p+1] = z (low, class(z) <= class(x)):
  // rewrites to W[p] = xzx via the basic pairs (zx, z) and (x, zx).
  void absorb_right_at(int p) {
    int x = working_[p];
    int z = working_[p + 1];
    int zx = b_.mul(z, x);
    emit({p + 1, StepKind::Expansion, zx, z, z});
    int xzx = b_.mul(x, zx);
    emit({p, StepKind::Contraction, x, zx, xzx});
    check_conjugate(x, z, xzx);
  }

  // W[p] = z (low), W[p+1] = y (high): rewrites to W[p+1] = yzy via the
  // basic pairs (z, yz) and (yz, y).
  void absorb_left_at(int p) {
    int z = working_[p];
    int y = working_[p + 1];
    int yz = b_.mul(y, z);
    emit({p, StepKind::Expansion, z, yz, z});
    int yzy = b_.mul(yz, y);
    emit({p + 1, StepKind::Contraction, yz, y, yzy});
    check_conjugate(y, z, yzy);
  }

  // For a normal band the conjugate x z x must be the phi image of x in the
  // class of z (the simpler Corollary form); mismatch means the structure
  // maps and the table disagree.
  void check_conjugate(int x, int z, int result) const {
    if (m_ == nullptr) {
      return;
    }
    int cx = d_.class_of[x];
    int cz = d_.class_of[z];
    if (m_->apply(cx, cz, x) != result) {
      throw std::logic_error("conjugate disagrees with phi on a normal band");
    }
  }

  void append_blocks(const std::vector<int>& lens,
                     const std::vector<int>& comps) {
    for (std::size_t t = 0; t < lens.size(); ++t) {
      block_len_.push_back(lens[t]);
      comps_.push_back(comps[t]);
      prefix_ += lens[t];
    }
  }

  // Contracts every block to its in-component normal form (leftmost first)
  // and merges equal-component neighbours.
  void renormalize() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t t = 0; t + 1 < comps_.size(); ++t) {
        if (comps_[t] == comps_[t + 1]) {
          block_len_[t] += block_len_[t + 1];
          block_len_.erase(block_len_.begin() + t + 1);
          comps_.erase(comps_.begin() + t + 1);
          changed = true;
          break;
        }
      }
    }
    int start = 0;
    for (std::size_t t = 0; t < block_len_.size(); ++t) {
      bool reduced = true;
      while (reduced) {
        reduced = false;
        for (int p = start; p + 1 < start + block_len_[t]; ++p) {
          int u = working_[p];
          int v = working_[p + 1];
          if (is_basic_pair(b_, u, v)) {
            emit({p, StepKind::Contraction, u, v, b_.mul(u, v)});
            --block_len_[t];
            --prefix_;
            reduced = true;
            break;
          }
        }
      }
      start += block_len_[t];
    }
  }

  const Band& b_;
  const DClassDecomposition& d_;
  const StructureMorphisms* m_;
  GenWord working_;
  std::vector<int> block_len_;
  std::vector<int> comps_;
  int prefix_ = 0;
};

}  // namespace

std::pair<AlmostNormalForm, RewriteCertificate> anf(
    const Band& b, const DClassDecomposition& d, const StructureMorphisms* m,
    const GenWord& w) {
  if (w.letters.empty()) {
    throw BandError("empty word");
  }
  AnfAccumulator acc(b, d, m, w);
  acc.init_first_letter();
  int fed = 1;
  while (acc.prefix() < acc.total()) {
    // The next pending letter forms a singleton block.
    int letter = w[fed++];
    acc.absorb({1}, {d.class_of[letter]});
  }
  RewriteCertificate cert;
  cert.start = w;
  cert.steps = acc.steps;
  auto result = std::move(acc).finish();
  cert.end = result.word;
  return {result, cert};
}

std::pair<AlmostNormalForm, RewriteCertificate> anf_multiply(
    const Band& b, const DClassDecomposition& d, const StructureMorphisms* m,
    const AlmostNormalForm& left, const AlmostNormalForm& right) {
  GenWord start = left.word.concat(right.word);
  AnfAccumulator acc(b, d, m, start);
  acc.adopt_blocks(left);
  std::vector<int> lens;
  for (int t = 0; t < right.block_count(); ++t) {
    auto [s, e] = right.block_range(t);
    lens.push_back(e - s);
  }
  acc.absorb(lens, right.components);
  RewriteCertificate cert;
  cert.start = start;
  cert.steps = acc.steps;
  auto result = std::move(acc).finish();
  cert.end = result.word;
  return {result, cert};
}

std::string format_anf(const Band& b, const AlmostNormalForm& a) {
  std::string out;
  for (int t = 0; t < a.block_count(); ++t) {
    if (t) {
      out += " | ";
    }
    out += format_word(b, a.block_word(t));
  }
  return out;
}

}  // namespace igband
