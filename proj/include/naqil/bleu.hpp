#ifndef NAQIL_BLEU_HPP
#define NAQIL_BLEU_HPP

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

// Corpus BLEU with modified (clipped) n-gram precision, geometric mean and
// brevity penalty, plus a smoothed per-segment variant. Precisions are kept
// as exact rationals.

namespace naqil {

struct Rational {
  int64_t num = 0;
  int64_t den = 0;
  double value() const { return den == 0 ? 0.0 : double(num) / double(den); }
  bool operator==(const Rational&) const = default;
};

namespace bleu_detail {

inline std::vector<std::string> tokenize(const std::string& text,
                                         bool lowercase) {
  std::vector<std::string> out;
  std::string tok;
  std::istringstream in(text);
  while (in >> tok) {
    if (lowercase)
      for (char& ch : tok)
        ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    out.push_back(tok);
  }
  return out;
}

inline std::map<std::string, int64_t> ngram_counts(
    const std::vector<std::string>& toks, size_t n) {
  std::map<std::string, int64_t> out;
  if (toks.size() < n) return out;
  for (size_t i = 0; i + n <= toks.size(); ++i) {
    std::string key;
    for (size_t k = 0; k < n; ++k) {
      if (k) key += '\x01';
      key += toks[i + k];
    }
    ++out[key];
  }
  return out;
}

}  // namespace bleu_detail

// Clipped n-gram precision of one candidate against its references.
inline Rational clipped_precision(const std::vector<std::string>& cand,
                                  const std::vector<std::vector<std::string>>& refs,
                                  size_t n) {
  const auto cc = bleu_detail::ngram_counts(cand, n);
  std::map<std::string, int64_t> maxref;
  for (const auto& r : refs)
    for (const auto& [g, cnt] : bleu_detail::ngram_counts(r, n))
      maxref[g] = std::max(maxref[g], cnt);
  Rational p;
  for (const auto& [g, cnt] : cc) {
    p.den += cnt;
    auto it = maxref.find(g);
    if (it != maxref.end()) p.num += std::min(cnt, it->second);
  }
  return p;
}

// exp(1 - r/c) for short candidates, 1 otherwise (including c == r).
inline double brevity_penalty(int64_t c, int64_t r) {
  if (c == 0) return 0.0;
  if (c >= r) return 1.0;
  return std::exp(1.0 - double(r) / double(c));
}

class BleuScorer {
 public:
  explicit BleuScorer(size_t max_n = 4, bool lowercase = true)
      : max_n_(max_n), lowercase_(lowercase) {
    if (max_n_ == 0) throw std::invalid_argument("max_n must be positive");
    num_.assign(max_n_, 0);
    den_.assign(max_n_, 0);
  }

  std::vector<std::string> tokenize(const std::string& s) const {
    return bleu_detail::tokenize(s, lowercase_);
  }

  void add(const std::string& candidate,
           const std::vector<std::string>& references) {
    if (references.empty())
      throw std::invalid_argument("segment without references");
    const auto cand = tokenize(candidate);
    std::vector<std::vector<std::string>> refs;
    for (const auto& r : references) refs.push_back(tokenize(r));
    for (size_t n = 1; n <= max_n_; ++n) {
      const Rational p = clipped_precision(cand, refs, n);
      num_[n - 1] += p.num;
      den_[n - 1] += p.den;
    }
    cand_len_ += static_cast<int64_t>(cand.size());
    ref_len_ += closest_ref_length(cand.size(), refs);
  }

  Rational precision(size_t n) const {
    if (n < 1 || n > max_n_) throw std::invalid_argument("bad n-gram order");
    return {num_[n - 1], den_[n - 1]};
  }

  int64_t candidate_length() const { return cand_len_; }
  int64_t reference_length() const { return ref_len_; }

  double score() const {
    double logsum = 0.0;
    for (size_t n = 1; n <= max_n_; ++n) {
      const Rational p = precision(n);
      if (p.num == 0 || p.den == 0) return 0.0;
      logsum += std::log(p.value());
    }
    return brevity_penalty(cand_len_, ref_len_) *
           std::exp(logsum / double(max_n_));
  }

  // Per-segment score: the order is capped at the largest n whose clipped
  // count and candidate count are both non-zero, floored at 1.
  double sentence_score(const std::string& candidate,
                        const std::vector<std::string>& references) const {
    const auto cand = tokenize(candidate);
    std::vector<std::vector<std::string>> refs;
    for (const auto& r : references) refs.push_back(tokenize(r));
    std::vector<Rational> ps;
    for (size_t n = 1; n <= max_n_; ++n)
      ps.push_back(clipped_precision(cand, refs, n));
    size_t eff = 1;
    for (size_t n = max_n_; n >= 1; --n) {
      if (ps[n - 1].num > 0 && ps[n - 1].den > 0) { eff = n; break; }
      if (n == 1) break;
    }
    double logsum = 0.0;
    for (size_t n = 1; n <= eff; ++n) {
      if (ps[n - 1].num == 0 || ps[n - 1].den == 0) return 0.0;
      logsum += std::log(ps[n - 1].value());
    }
    const int64_t r = closest_ref_length(cand.size(), refs);
    return brevity_penalty(static_cast<int64_t>(cand.size()), r) *
           std::exp(logsum / double(eff));
  }

  static int64_t closest_ref_length(
      size_t cand_len, const std::vector<std::vector<std::string>>& refs) {
    int64_t best = static_cast<int64_t>(refs.front().size());
    for (const auto& r : refs) {
      const int64_t len = static_cast<int64_t>(r.size());
      const int64_t c = static_cast<int64_t>(cand_len);
      const int64_t d_new = std::abs(len - c), d_old = std::abs(best - c);
      if (d_new < d_old || (d_new == d_old && len < best)) best = len;
    }
    return best;
  }

 private:
  size_t max_n_;
  bool lowercase_;
  std::vector<int64_t> num_, den_;
  int64_t cand_len_ = 0, ref_len_ = 0;
};

}  // namespace naqil

#endif  // NAQIL_BLEU_HPP
