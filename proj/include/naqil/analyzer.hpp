#ifndef NAQIL_ANALYZER_HPP
#define NAQIL_ANALYZER_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "naqil/features.hpp"
#include "naqil/lexicon.hpp"
#include "naqil/unicode.hpp"

// Root extraction in two passes over each word:
//
//   word  =  proclitic + base1 + enclitic        (pass 1, clitic table)
//   base1 =  prefix + base + suffix              (pass 2, affix table)
//
// then the stripped base is matched against the scheme dictionary: a scheme
// fits when it has the same letter count and the base carries the scheme's
// own letters at every infix position; deleting those positions leaves the
// 3-letter root. All candidate splits are kept; candidates are ranked by
// (scheme found, total stripped length, root order) so the first entry is
// the preferred reading. Reassembling any candidate yields the input again.

namespace naqil {

struct Segmentation {
  std::string proclitic;
  std::string prefix;
  std::string base;
  std::string suffix;
  std::string enclitic;

  std::string reassemble() const {
    return proclitic + prefix + base + suffix + enclitic;
  }
  size_t stripped_length() const {
    return length_utf8(proclitic) + length_utf8(prefix) + length_utf8(suffix) +
           length_utf8(enclitic);
  }
};

struct Analysis {
  Segmentation seg;
  std::string scheme;  // empty when no scheme fits
  std::string root;    // empty when no scheme fits
  std::string lemma;   // base of the segmentation
};

namespace detail {

inline bool starts_with_cp(const std::vector<char32_t>& w,
                           const std::vector<char32_t>& p) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

inline bool ends_with_cp(const std::vector<char32_t>& w,
                         const std::vector<char32_t>& s) {
  return s.size() <= w.size() && std::equal(s.rbegin(), s.rend(), w.rbegin());
}

}  // namespace detail

// Scheme match on an already-stripped base; returns every fitting scheme.
inline std::vector<std::pair<const SchemeEntry*, std::string>> match_scheme(
    const std::string& base, const Lexicon& lex) {
  std::vector<std::pair<const SchemeEntry*, std::string>> out;
  const std::vector<char32_t> cps = decode_utf8(base);
  for (const SchemeEntry* s : lex.schemes_of_length(cps.size())) {
    bool ok = true;
    for (size_t pos : s->infixes)
      if (cps[pos - 1] != s->pattern_cps[pos - 1]) { ok = false; break; }
    if (!ok) continue;
    std::vector<char32_t> root;
    for (size_t i = 0; i < cps.size(); ++i)
      if (std::find(s->infixes.begin(), s->infixes.end(), i + 1) ==
          s->infixes.end())
        root.push_back(cps[i]);
    // Bare alif is a long vowel, never a radical; hamza seats (أ إ آ) are.
    if (std::find(root.begin(), root.end(), char32_t(0x0627)) != root.end())
      continue;
    out.emplace_back(s, encode_utf8(root));
  }
  return out;
}

// All clitic+affix splits of a normalized word. The trivial split is always
// present. Words shorter than 3 letters yield only the trivial split.
inline std::vector<Segmentation> segment(const std::string& word,
                                         const Lexicon& lex) {
  std::vector<Segmentation> out;
  const std::vector<char32_t> w = decode_utf8(word);
  if (w.size() < 3) {
    out.push_back({"", "", word, "", ""});
    return out;
  }

  auto sub = [&](size_t b, size_t e) {
    return encode_utf8(std::vector<char32_t>(w.begin() + b, w.begin() + e));
  };

  std::vector<std::string> pros = lex.clitics.proclitics;
  pros.emplace_back("");
  std::vector<std::string> encs = lex.clitics.enclitics;
  encs.emplace_back("");
  std::vector<std::string> pres = lex.clitics.prefixes;
  pres.emplace_back("");
  std::vector<std::string> sufs = lex.clitics.suffixes;
  sufs.emplace_back("");

  for (const std::string& pro : pros) {
    const std::vector<char32_t> pc = decode_utf8(pro);
    if (!detail::starts_with_cp(w, pc)) continue;
    for (const std::string& enc : encs) {
      const std::vector<char32_t> ec = decode_utf8(enc);
      if (pc.size() + ec.size() >= w.size()) continue;  // base1 nonempty
      if (!detail::ends_with_cp(w, ec)) continue;
      if (!lex.compat.clitics_compatible(pro, enc)) continue;
      const size_t b1b = pc.size(), b1e = w.size() - ec.size();
      const std::vector<char32_t> b1(w.begin() + b1b, w.begin() + b1e);
      for (const std::string& pre : pres) {
        const std::vector<char32_t> prc = decode_utf8(pre);
        if (!detail::starts_with_cp(b1, prc)) continue;
        if (!pre.empty() && !lex.compat.clitic_prefix_compatible(pro, pre))
          continue;
        for (const std::string& suf : sufs) {
          const std::vector<char32_t> sc = decode_utf8(suf);
          if (prc.size() + sc.size() >= b1.size()) continue;  // base nonempty
          if (!detail::ends_with_cp(b1, sc)) continue;
          if (!lex.compat.affixes_compatible(pre, suf)) continue;
          out.push_back({pro, pre, sub(b1b + prc.size(), b1e - sc.size()),
                         suf, enc});
        }
      }
    }
  }
  return out;
}

// Ranked analyses of one word (input may carry diacritics; normalized here).
inline std::vector<Analysis> analyze(const std::string& raw,
                                     const Lexicon& lex) {
  const std::string word = normalize_arabic(raw);
  std::vector<Analysis> out;
  for (const Segmentation& seg : segment(word, lex)) {
    auto schemes = match_scheme(seg.base, lex);
    if (schemes.empty()) {
      out.push_back({seg, "", "", seg.base});
    } else {
      for (const auto& [sch, root] : schemes)
        out.push_back({seg, sch->pattern, root, seg.base});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Analysis& a,
                                              const Analysis& b) {
    const bool as = !a.root.empty(), bs = !b.root.empty();
    if (as != bs) return as;
    const size_t al = a.seg.stripped_length(), bl = b.seg.stripped_length();
    if (al != bl) return al > bl;
    if (a.root != b.root) return a.root < b.root;
    return a.seg.reassemble() < b.seg.reassemble();  // deterministic tiebreak
  });
  return out;
}

inline Analysis best_analysis(const std::string& word, const Lexicon& lex) {
  return analyze(word, lex).front();
}

// Index lemma of a surface word: base of the preferred candidate.
inline std::string lemma_of(const std::string& word, const Lexicon& lex) {
  return best_analysis(word, lex).lemma;
}

// Human-readable traits carried by the segments of one analysis.
inline std::vector<std::string> features_of(const Analysis& a) {
  std::vector<std::string> t;

  // Compound proclitics decompose into the atomic markers.
  std::vector<char32_t> pro = decode_utf8(a.seg.proclitic);
  size_t i = 0;
  while (i < pro.size()) {
    const char32_t c = pro[i];
    if (c == 0x0623) { t.push_back("interrogative"); ++i; continue; }        // أ
    if (c == 0x0633) { t.push_back("tense:future"); ++i; continue; }         // س
    if (c == 0x0641) { t.push_back("conjunction:f"); ++i; continue; }        // ف
    if (c == 0x0648) { t.push_back("conjunction:w"); ++i; continue; }        // و
    if (c == 0x0628) { t.push_back("preposition:b"); ++i; continue; }        // ب
    if (c == 0x0643) { t.push_back("preposition:k"); ++i; continue; }        // ك
    if (c == 0x0644) {                                                       // ل / لل
      if (i + 1 < pro.size() && pro[i + 1] == 0x0644) {
        t.push_back("preposition:l");
        t.push_back("definite");
        i += 2;
        continue;
      }
      t.push_back("preposition:l");
      ++i;
      continue;
    }
    if (c == 0x0627 && i + 1 < pro.size() && pro[i + 1] == 0x0644) {         // ال
      t.push_back("definite");
      i += 2;
      continue;
    }
    ++i;  // في of فيال handled by the ي skip below
  }

  const std::string& pre = a.seg.prefix;
  if (pre == "ا" || pre == "أ")
    t.push_back("subject:1/S");
  else if (pre == "ت")
    t.push_back("subject:2-or-3F");
  else if (pre == "ي")
    t.push_back("subject:3/M");
  else if (pre == "ن")
    t.push_back("subject:1/P");
  if (!pre.empty() && pre != "إ") t.push_back("tense:present");

  const std::string& suf = a.seg.suffix;
  if (suf == "ان") t.push_back("subject:dual");
  else if (suf == "ون") t.push_back("subject:P/M");
  else if (suf == "ين") t.push_back("subject:dual-or-plural-oblique");
  else if (suf == "وا") { t.push_back("subject:3/P/M"); t.push_back("tense:past"); }
  else if (suf == "ات") t.push_back("plural:F");
  else if (suf == "ة") t.push_back("gender:F");
  else if (suf == "تما") { t.push_back("subject:2/B"); t.push_back("tense:past"); }
  else if (suf == "تم") { t.push_back("subject:2/P/M"); t.push_back("tense:past"); }
  else if (suf == "تن") { t.push_back("subject:2/P/F"); t.push_back("tense:past"); }
  else if (suf == "ت") { t.push_back("subject:past-t"); t.push_back("tense:past"); }
  else if (suf == "نا") { t.push_back("subject:1/P"); t.push_back("tense:past"); }
  else if (suf == "ن") t.push_back("subject:P/F");

  const std::string& enc = a.seg.enclitic;
  if (enc == "ني") t.push_back("object:1/S");
  else if (enc == "نا") t.push_back("pronoun:1/P");
  else if (enc == "ك") t.push_back("pronoun:2/S");
  else if (enc == "كما") t.push_back("pronoun:2/B");
  else if (enc == "كم") t.push_back("pronoun:2/P/M");
  else if (enc == "كن") t.push_back("pronoun:2/P/F");
  else if (enc == "ه") t.push_back("pronoun:3/M/S");
  else if (enc == "ها") t.push_back("pronoun:3/F/S");
  else if (enc == "هما") t.push_back("pronoun:3/B");
  else if (enc == "هم") t.push_back("pronoun:3/P/M");
  else if (enc == "هن") t.push_back("pronoun:3/P/F");
  else if (enc == "ي") t.push_back("pronoun:1/S-possessive");

  return t;
}

}  // namespace naqil

#endif  // NAQIL_ANALYZER_HPP
