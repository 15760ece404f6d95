#ifndef NAQIL_GENERATOR_HPP
#define NAQIL_GENERATOR_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "naqil/features.hpp"
#include "naqil/lexicon.hpp"
#include "naqil/unicode.hpp"

// Surface generation: verb conjugation over the 13 subject rows, noun and
// adjective inflection (definiteness, gender, number, case, possessives),
// and cardinal/ordinal number phrases.

namespace naqil {

class GenerationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The 13 subject rows of the conjugation tables, in table order.
inline const std::array<PronounRef, 13>& paradigm_rows() {
  static const std::array<PronounRef, 13> rows = {{
      {Person::first, Gender::masculine, Number::singular},   // I
      {Person::second, Gender::masculine, Number::singular},  // you (S,M)
      {Person::second, Gender::feminine, Number::singular},   // you (S,F)
      {Person::second, Gender::masculine, Number::dual},      // you (B)
      {Person::second, Gender::masculine, Number::plural},    // you (P,M)
      {Person::second, Gender::feminine, Number::plural},     // you (P,F)
      {Person::third, Gender::masculine, Number::singular},   // he
      {Person::third, Gender::feminine, Number::singular},    // she
      {Person::first, Gender::masculine, Number::plural},     // we
      {Person::third, Gender::masculine, Number::dual},       // they (B,M)
      {Person::third, Gender::feminine, Number::dual},        // they (B,F)
      {Person::third, Gender::masculine, Number::plural},     // they (P,M)
      {Person::third, Gender::feminine, Number::plural},      // they (P,F)
  }};
  return rows;
}

namespace detail {

inline size_t row_index(const PronounRef& p) {
  // you (B,F) shares the you (B) row; they (B,F) has its own row.
  PronounRef key = p;
  if (key.person == Person::second && key.number == Number::dual)
    key.gender = Gender::masculine;
  if (key.person == Person::first)
    key.gender = Gender::masculine;
  const auto& rows = paradigm_rows();
  for (size_t i = 0; i < rows.size(); ++i)
    if (rows[i] == key) return i;
  throw GenerationError("no paradigm row for subject");
}

// Row-indexed affixes.                I      ytS    ytSF    ytB     ytPM    ytPF   he     she    we     thBM   thBF   thPM   thPF
inline const char* kPresentPre[13] = {"أ",   "ت",   "ت",    "ت",    "ت",    "ت",   "ي",   "ت",   "ن",   "ي",   "ت",   "ي",   "ي"};
inline const char* kPresentSuf[13] = {"",    "",    "ين",   "ان",   "ون",   "ن",   "",    "",    "",    "ان",  "ان",  "ون",  "ن"};
inline const char* kPastSuf[13]    = {"ت",   "ت",   "ت",    "تما",  "تم",   "تن",  "",    "ت",   "نا",  "ا",   "تا",  "وا",  "ن"};
inline const char* kJussiveSuf[13] = {"",    "",    "ي",    "ا",    "وا",   "ن",   "",    "",    "",    "ا",   "ا",   "وا",  "ن"};

// Hollow past: rows keeping the full stem (He, She, They B/M, They B/F, They P/M).
inline const bool kHollowPastLong[13] = {false, false, false, false, false, false,
                                         true,  true,  false, true,  true,  true,  false};

struct RootLetters {
  std::string f, a, l;  // first, middle, last radical
};

inline RootLetters split_root(const std::string& root) {
  const std::vector<char32_t> cps = decode_utf8(root);
  if (cps.size() != 3) throw GenerationError("root must have 3 letters");
  return {encode_utf8({cps[0]}), encode_utf8({cps[1]}), encode_utf8({cps[2]})};
}

// Present-stem medial vowel of a hollow verb, keyed by the model word:
// the قام group takes و (يقوم), the باع group ي (يبيع), the خاف group ا.
inline std::string hollow_medial(const LexEntry& v) {
  if (v.model == "باع" || v.model == "سار" || v.model == "عاش") return "ي";
  if (v.model == "خاف" || v.model == "نام") return "ا";
  return "و";
}

}  // namespace detail

// Present-tense core (prefix + stem + suffix), shared by the future and the
// negated forms. `jussive` switches to the suffix set used after لم and لن.
inline std::string present_core(const LexEntry& v, size_t row, bool jussive) {
  const detail::RootLetters r = detail::split_root(v.root);
  const std::string pre = detail::kPresentPre[row];
  const std::string suf =
      jussive ? detail::kJussiveSuf[row] : detail::kPresentSuf[row];
  std::string stem;
  switch (v.verb_class) {
    case VerbClass::sound:
      stem = v.root;
      break;
    case VerbClass::assimilated:
      stem = r.a + r.l;  // first radical dropped in the present
      break;
    case VerbClass::hollow: {
      const bool shortened =
          suf == "ن" || (jussive && suf.empty());
      stem = shortened ? r.f + r.l : r.f + detail::hollow_medial(v) + r.l;
      break;
    }
    case VerbClass::defective: {
      const std::string tail = v.model == "نسي" ? "ى" : "ي";
      if (suf.empty()) return pre + r.f + r.a + (jussive ? "" : tail);
      if (suf == "ون" || suf == "وا" || suf == "ين" || suf == "ي")
        return pre + r.f + r.a + suf;  // weak radical drops before و/ي endings
      return pre + v.root + suf;      // ان / ن rows keep it
    }
  }
  return pre + stem + suf;
}

inline std::string past_form(const LexEntry& v, size_t row) {
  const detail::RootLetters r = detail::split_root(v.root);
  const std::string suf = detail::kPastSuf[row];
  switch (v.verb_class) {
    case VerbClass::sound:
    case VerbClass::assimilated:  // past of the assimilated class is regular
      return v.root + suf;
    case VerbClass::hollow:
      return (detail::kHollowPastLong[row] ? v.root : r.f + r.l) + suf;
    case VerbClass::defective:
      if (suf == "وا") return r.f + r.a + suf;  // نسوا / رموا
      if (v.model == "نسي") return v.root + suf;
      // رمى model: the weak radical surfaces as ى finally and drops in the
      // third-person feminine rows (رمت / رمتا); it stays elsewhere (رميت).
      if (suf.empty()) return r.f + r.a + "ى";
      if ((row == 7 && suf == "ت") || suf == "تا") return r.f + r.a + suf;
      return v.root + suf;
  }
  throw GenerationError("unreachable verb class");
}

// Attach a verbal object enclitic; the ا of a final وا drops before it.
inline std::string attach_object(std::string form, const PronounRef& obj,
                                 Humanness humanness) {
  static const char* forms[3][2][3] = {
      // person x gender x number          S       B       P
      {{"ني", "نا", "نا"}, {"ني", "نا", "نا"}},        // 1st
      {{"ك", "كما", "كم"}, {"ك", "كما", "كن"}},        // 2nd
      {{"ه", "هما", "هم"}, {"ها", "هما", "هن"}},       // 3rd
  };
  PronounRef o = obj;
  if (o.person == Person::third && o.number == Number::plural &&
      humanness == Humanness::non_human)
    o = {Person::third, Gender::feminine, Number::singular};  // non-human ⇒ ها
  const char* suffix = forms[static_cast<int>(o.person) - 1]
                            [o.gender == Gender::feminine ? 1 : 0]
                            [static_cast<int>(o.number)];
  if (form.size() >= 4 && form.ends_with("وا"))
    form.resize(form.size() - 2);  // كتبوا + ه = كتبوه
  return form + suffix;
}

// Full conjugation: tense, polarity and subject row; the interrogative
// particle is clause-level and added by the ordering stage.
inline std::string conjugate(const LexEntry& v, const FeatureBundle& f) {
  if (v.pos != PartOfSpeech::verb)
    throw GenerationError("conjugate called on a non-verb entry");
  const size_t row = detail::row_index({f.person, f.gender, f.number});
  std::string out;
  const bool negative = f.polarity == Polarity::negative;
  switch (f.tense) {
    case Tense::present:
    case Tense::none:
      out = negative ? "لا " + present_core(v, row, false)
                     : present_core(v, row, false);
      break;
    case Tense::past:
      out = negative ? "لم " + present_core(v, row, true) : past_form(v, row);
      break;
    case Tense::future:
      out = negative ? "لن " + present_core(v, row, true)
                     : "س" + present_core(v, row, false);
      break;
  }
  if (f.object) out = attach_object(out, *f.object, f.humanness);
  return out;
}

// Possessive enclitics (my book = كتابي).
inline std::string possessive_suffix(const PronounRef& p, Humanness humanness) {
  PronounRef o = p;
  if (o.person == Person::third && o.number == Number::plural &&
      humanness == Humanness::non_human)
    o = {Person::third, Gender::feminine, Number::singular};
  if (o.person == Person::first && o.number == Number::singular) return "ي";
  static const char* forms[3][2][3] = {
      {{"ي", "نا", "نا"}, {"ي", "نا", "نا"}},
      {{"ك", "كما", "كم"}, {"ك", "كما", "كن"}},
      {{"ه", "هما", "هم"}, {"ها", "هما", "هن"}},
  };
  return forms[static_cast<int>(o.person) - 1]
              [o.gender == Gender::feminine ? 1 : 0]
              [static_cast<int>(o.number)];
}

namespace detail {

inline bool ends_with_ta_marbuta(const std::string& s) {
  return s.ends_with("ة");
}

inline std::string strip_ta_marbuta(std::string s) {
  if (ends_with_ta_marbuta(s)) s.resize(s.size() - std::string("ة").size());
  return s;
}

// Irregular feminine forms of adjectives (ordinals mostly).
inline std::string feminize(const std::string& stem) {
  if (stem == "أول") return "أولى";
  if (ends_with_ta_marbuta(stem)) return stem;
  return stem + "ة";
}

}  // namespace detail

struct NounOptions {
  // Regular masculine plurals inside an annexation chain lose the ن.
  bool annexed_head = false;
};

// Noun/adjective surface form for a feature bundle.
inline std::string inflect_noun(const LexEntry& e, const FeatureBundle& f,
                                const NounOptions& opt = {}) {
  std::string stem = e.lemma;
  const bool feminine = f.gender == Gender::feminine;
  if (feminine && e.gender == 'M') stem = detail::feminize(stem);

  bool suffixed = false;       // a number/gender suffix was attached
  bool feminine_shape = detail::ends_with_ta_marbuta(stem);
  const bool oblique = f.noun_case != Case::nominative;

  switch (f.number) {
    case Number::singular:
      break;
    case Number::dual:
      if (feminine_shape) {
        stem = detail::strip_ta_marbuta(stem) + (oblique ? "تين" : "تان");
      } else {
        stem += oblique ? "ين" : "ان";
      }
      suffixed = true;
      break;
    case Number::plural:
      // Adjectives fall back to the regular ات plural when agreeing in the
      // feminine (قوي ⇒ أقوياء / قويات); nouns keep their broken form.
      if (e.plural == PluralClass::broken &&
          (e.pos != PartOfSpeech::adjective || !feminine)) {
        stem = e.broken_plural;
      } else if (feminine_shape || feminine) {
        stem = detail::strip_ta_marbuta(stem) + "ات";
        suffixed = true;
      } else {
        if (opt.annexed_head)
          stem += oblique ? "ي" : "وا";
        else
          stem += oblique ? "ين" : "ون";
        suffixed = true;
      }
      break;
  }

  if (f.possessor) {
    if (detail::ends_with_ta_marbuta(stem))
      stem = detail::strip_ta_marbuta(stem) + "ت";  // ة opens before enclitics
    return stem + possessive_suffix(*f.possessor, f.humanness);
  }

  switch (f.definiteness) {
    case Definiteness::definite:
      return "ال" + stem;
    case Definiteness::by_annexation:
      return stem;
    case Definiteness::indefinite:
      // Bare-alef seat of the accusative tanwin, singular non-ة words only.
      if (f.noun_case == Case::accusative && f.number == Number::singular &&
          !detail::ends_with_ta_marbuta(stem) && !suffixed &&
          !stem.ends_with("اء") && !stem.ends_with("ى"))
        return stem + "ا";
      return stem;
  }
  throw GenerationError("unreachable definiteness");
}

// ---------------------------------------------------------------------------
// Numbers.

namespace detail {

// Units in the ة-bearing form ("masculine agreement" form) and the bare form.
inline const char* kUnitsTa[10] = {"",  "واحدة", "اثنتان", "ثلاثة", "أربعة",
                                   "خمسة", "ستة", "سبعة", "ثمانية", "تسعة"};
inline const char* kUnitsBare[10] = {"", "واحد", "اثنان", "ثلاث", "أربع",
                                     "خمس", "ست", "سبع", "ثمان", "تسع"};
inline const char* kTensNom[10] = {"", "", "عشرون", "ثلاثون", "أربعون",
                                   "خمسون", "ستون", "سبعون", "ثمانون", "تسعون"};
inline const char* kTensObl[10] = {"", "", "عشرين", "ثلاثين", "أربعين",
                                   "خمسين", "ستين", "سبعين", "ثمانين", "تسعين"};

inline std::string tens_word(int t, Case c) {
  return c == Case::nominative ? kTensNom[t] : kTensObl[t];
}

}  // namespace detail

// Standalone cardinal in words, bare unit forms, parts joined with و.
inline std::string arabic_cardinal(long value, Case c = Case::nominative) {
  if (value <= 0 || value > 999999)
    throw GenerationError("cardinal out of supported range");
  std::vector<std::string> parts;
  const long thousands = value / 1000;
  const long hundreds = (value % 1000) / 100;
  const long rest = value % 100;
  if (thousands == 1) parts.push_back("ألف");
  else if (thousands == 2) parts.push_back("ألفان");
  else if (thousands > 2)
    parts.push_back(std::string(detail::kUnitsBare[thousands]) + " آلاف");
  if (hundreds == 1) parts.push_back("مائة");
  else if (hundreds == 2) parts.push_back("مائتان");
  else if (hundreds > 2)
    parts.push_back(std::string(detail::kUnitsBare[hundreds]) + " مائة");
  if (rest >= 1 && rest <= 10) {
    parts.push_back(detail::kUnitsBare[rest == 10 ? 0 : rest]);
    if (rest == 10) parts.back() = "عشر";
  } else if (rest >= 11 && rest <= 19) {
    parts.push_back(rest == 11
                        ? "أحد عشر"
                        : rest == 12 ? "اثنا عشر"
                                     : std::string(detail::kUnitsBare[rest - 10]) +
                                           " عشر");
  } else if (rest >= 20) {
    const int u = static_cast<int>(rest % 10);
    if (u)
      parts.push_back(std::string(detail::kUnitsBare[u]) + " و " +
                      detail::tens_word(static_cast<int>(rest / 10), c));
    else
      parts.push_back(detail::tens_word(static_cast<int>(rest / 10), c));
  }
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += " و ";
    out += p;
  }
  return out;
}

// Counted-noun phrase: dual for 2, inverted-agreement number + plural for
// 3..10, compound number + accusative singular above.
inline std::string counted_phrase(long value, const LexEntry& noun, Case c,
                                  Definiteness def = Definiteness::indefinite) {
  if (value < 2) throw GenerationError("counted phrase needs value >= 2");
  FeatureBundle f;
  f.gender = noun.gender == 'F' ? Gender::feminine : Gender::masculine;
  f.humanness = noun.human ? Humanness::human : Humanness::non_human;
  f.definiteness = def;
  f.noun_case = c;
  if (value == 2) {
    f.number = Number::dual;
    return inflect_noun(noun, f);
  }
  const bool noun_masculine = noun.gender == 'M';
  if (value <= 10) {
    // Gender inversion: masculine nouns take the ة number word.
    std::string num = noun_masculine ? detail::kUnitsTa[value]
                                     : detail::kUnitsBare[value];
    if (value == 10) num = noun_masculine ? "عشرة" : "عشر";
    f.number = Number::plural;
    f.noun_case = Case::genitive;
    return num + " " + inflect_noun(noun, f);
  }
  // Compound numbers count a singular accusative noun.
  f.number = Number::singular;
  f.noun_case = Case::accusative;
  std::string num;
  if (value <= 19) {
    if (value == 11) num = noun_masculine ? "أحد عشر" : "إحدى عشرة";
    else if (value == 12) num = noun_masculine ? "اثنا عشر" : "اثنتا عشرة";
    else
      num = noun_masculine
                ? std::string(detail::kUnitsTa[value - 10]) + " عشر"
                : std::string(detail::kUnitsBare[value - 10]) + " عشرة";
  } else if (value <= 99) {
    const int u = static_cast<int>(value % 10);
    const int t = static_cast<int>(value / 10);
    if (u == 0) {
      num = detail::tens_word(t, c);
    } else {
      const std::string unit = u == 1 ? (noun_masculine ? "واحد" : "إحدى")
                               : u == 2 ? (noun_masculine ? "اثنان" : "اثنتان")
                                        : (noun_masculine
                                               ? detail::kUnitsTa[u]
                                               : detail::kUnitsBare[u]);
      num = unit + " و " + detail::tens_word(t, c);
    }
  } else {
    num = arabic_cardinal(value, c);
  }
  return num + " " + inflect_noun(noun, f);
}

}  // namespace naqil

#endif  // NAQIL_GENERATOR_HPP
