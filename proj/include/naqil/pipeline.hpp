#ifndef NAQIL_PIPELINE_HPP
#define NAQIL_PIPELINE_HPP

#include <string>
#include <vector>

#include "naqil/analyzer.hpp"
#include "naqil/syntax.hpp"
#include "naqil/transfer.hpp"

// End-to-end drivers: tagged English to Arabic, and Arabic word analysis
// with English gloss hints.

namespace naqil {

struct TranslationResult {
  std::string output;
  std::vector<std::string> trace;
};

inline TranslationResult translate(const Lexicon& lex,
                                   const std::string& tagged) {
  Clause c = transfer_clause(lex, tagged);
  Renderer r(lex);
  return {r.render(c), c.trace};
}

// Alternative readings of the ambiguous subject pronouns (you, they).
struct Variant {
  std::string label;
  std::string output;
};

inline std::vector<Variant> translate_variants(const Lexicon& lex,
                                               const std::string& tagged) {
  std::vector<TaggedToken> toks = parse_tagged(tagged);
  std::string pron;
  for (const TaggedToken& t : toks)
    if (t.tag == "PRP") {
      const std::string w = detail::lower(t.word);
      if (w == "you" || w == "they") { pron = w; break; }
    }
  Clause base = ClauseParser(lex, toks).parse();
  Renderer r(lex);
  std::vector<Variant> out;
  if (pron.empty() || !base.subject_pron) {
    out.push_back({"", r.render(base)});
    return out;
  }
  struct Reading { const char* label; PronounRef ref; };
  static const Reading you_rows[] = {
      {"you(S,M)", {Person::second, Gender::masculine, Number::singular}},
      {"you(S,F)", {Person::second, Gender::feminine, Number::singular}},
      {"you(B)", {Person::second, Gender::masculine, Number::dual}},
      {"you(P,M)", {Person::second, Gender::masculine, Number::plural}},
      {"you(P,F)", {Person::second, Gender::feminine, Number::plural}},
  };
  static const Reading they_rows[] = {
      {"they(B,M)", {Person::third, Gender::masculine, Number::dual}},
      {"they(B,F)", {Person::third, Gender::feminine, Number::dual}},
      {"they(P,M)", {Person::third, Gender::masculine, Number::plural}},
      {"they(P,F)", {Person::third, Gender::feminine, Number::plural}},
  };
  const Reading* rows = pron == "you" ? you_rows : they_rows;
  const size_t n = pron == "you" ? 5 : 4;
  for (size_t i = 0; i < n; ++i) {
    Clause c = base;
    c.subject_pron->ref = rows[i].ref;
    out.push_back({rows[i].label, r.render(c)});
  }
  return out;
}

// --- Arabic analysis with gloss hints --------------------------------------

inline std::vector<std::string> tokenize_arabic(const std::string& text) {
  static const std::string punct = "\"'.,;:!()[]{}«»";
  std::vector<std::string> out;
  std::vector<char32_t> cps = decode_utf8(normalize_arabic(text));
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(cur);
    cur.clear();
  };
  for (char32_t cp : cps) {
    const bool sep = cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' ||
                     cp == 0x060c /*،*/ || cp == 0x061b /*؛*/ ||
                     cp == 0x061f /*؟*/ ||
                     (cp < 0x80 && punct.find(static_cast<char>(cp)) !=
                                       std::string::npos);
    if (sep) flush();
    else append_utf8(cur, cp);
  }
  flush();
  return out;
}

struct WordReport {
  std::string word;
  Analysis analysis;
  std::vector<std::string> traits;
  std::string english;  // gloss of the root / lemma if the lexicon knows it
  std::string hints;    // English word-order hint built from the traits
};

namespace detail {

inline std::string gloss_hints(const std::vector<std::string>& traits,
                               const std::string& english) {
  std::vector<std::string> h;
  bool interrog = false, future = false;
  std::string subject, object;
  for (const std::string& t : traits) {
    if (t == "interrogative") interrog = true;
    else if (t == "tense:future") future = true;
    else if (t.starts_with("subject:1/S")) subject = "I";
    else if (t.starts_with("subject:1/P")) subject = "we";
    else if (t.starts_with("subject:2")) subject = "you";
    else if (t.starts_with("subject:3/M")) subject = "he";
    else if (t == "subject:dual") { if (subject.empty()) subject = "they"; }
    else if (t == "pronoun:3/F/S") object = "it";
    else if (t == "pronoun:3/M/S") object = "it";
    else if (t.starts_with("pronoun:1/S")) object = "me";
    else if (t.starts_with("pronoun:2")) object = "you";
  }
  if (future) h.push_back("will");
  if (!subject.empty()) h.push_back(subject);
  h.push_back(english.empty() ? "?" : english);
  if (!object.empty()) h.push_back(object);
  std::string out;
  for (const std::string& w : h) {
    if (!out.empty()) out += " ";
    out += w;
  }
  if (interrog) out += " ?";
  return out;
}

}  // namespace detail

inline WordReport analyze_word(const Lexicon& lex, const std::string& word) {
  WordReport r;
  r.word = normalize_arabic(word);
  r.analysis = best_analysis(word, lex);
  r.traits = features_of(r.analysis);
  // English gloss via the bilingual lexicon, by root then by lemma.
  for (const LexEntry& e : lex.entries) {
    if (!r.analysis.root.empty() && e.root == r.analysis.root &&
        e.pos == PartOfSpeech::verb) {
      r.english = e.english;
      break;
    }
  }
  if (r.english.empty())
    if (const LexEntry* e = lex.find_arabic(r.analysis.lemma))
      r.english = e->english;
  r.hints = detail::gloss_hints(r.traits, r.english);
  return r;
}

inline std::vector<WordReport> analyze_arabic(const Lexicon& lex,
                                              const std::string& text) {
  std::vector<WordReport> out;
  for (const std::string& w : tokenize_arabic(text))
    out.push_back(analyze_word(lex, w));
  return out;
}

}  // namespace naqil

#endif  // NAQIL_PIPELINE_HPP
