#ifndef NAQIL_TRANSFER_HPP
#define NAQIL_TRANSFER_HPP

#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "naqil/features.hpp"
#include "naqil/lexicon.hpp"

// Source-side analysis: tokenizing tagged English (word_TAG), detecting
// tense/polarity/mood, and building a clause structure whose slots carry the
// lexicon entries and feature bundles the generator needs.

namespace naqil {

class TranslationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TaggedToken {
  std::string word;  // original spelling
  std::string tag;
};

inline const std::set<std::string>& penn_tags() {
  static const std::set<std::string> tags = {
      "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD",
      "NN", "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR",
      "RBS", "RP", "SYM", "TO", "UH", "VB", "VBD", "VBG", "VBN", "VBP",
      "VBZ", "WDT", "WP", "WP$", "WRB"};
  return tags;
}

inline std::vector<TaggedToken> parse_tagged(const std::string& line) {
  std::vector<TaggedToken> out;
  std::string tok;
  std::istringstream in(line);
  while (in >> tok) {
    const size_t us = tok.rfind('_');
    if (us == std::string::npos || us == 0 || us + 1 == tok.size()) {
      if (tok == "?" || tok == "." || tok == "!") {
        out.push_back({tok, "."});
        continue;
      }
      throw TranslationError("token without tag: '" + tok + "'");
    }
    TaggedToken t{tok.substr(0, us), tok.substr(us + 1)};
    if (t.tag == "." || t.tag == ",") {
      out.push_back({t.word, "."});
      continue;
    }
    if (!penn_tags().count(t.tag))
      throw TranslationError("unknown tag '" + t.tag + "' on '" + t.word + "'");
    out.push_back(t);
  }
  if (out.empty()) throw TranslationError("empty input");
  return out;
}

// --- closed-class English words -------------------------------------------

namespace detail {

inline std::string lower(std::string s) {
  for (char& c : s)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

inline bool is_copula(const std::string& w) {
  const std::string s = lower(w);
  return s == "is" || s == "are" || s == "am" || s == "was" || s == "were" ||
         s == "be" || s == "been" || s == "being";
}

inline bool is_do(const std::string& w) {
  const std::string s = lower(w);
  return s == "do" || s == "does" || s == "did";
}

inline bool is_have(const std::string& w) {
  const std::string s = lower(w);
  return s == "have" || s == "has" || s == "had";
}

struct PronounInfo {
  PronounRef ref;
  bool human = true;
};

inline std::optional<PronounInfo> subject_pronoun(const std::string& w) {
  const std::string s = lower(w);
  if (s == "i") return PronounInfo{{Person::first, Gender::masculine, Number::singular}};
  if (s == "you") return PronounInfo{{Person::second, Gender::masculine, Number::singular}};
  if (s == "he") return PronounInfo{{Person::third, Gender::masculine, Number::singular}};
  if (s == "she") return PronounInfo{{Person::third, Gender::feminine, Number::singular}};
  if (s == "it")
    return PronounInfo{{Person::third, Gender::masculine, Number::singular}, false};
  if (s == "we") return PronounInfo{{Person::first, Gender::masculine, Number::plural}};
  if (s == "they") return PronounInfo{{Person::third, Gender::masculine, Number::plural}};
  return std::nullopt;
}

inline std::optional<PronounInfo> object_pronoun(const std::string& w) {
  const std::string s = lower(w);
  if (s == "me") return PronounInfo{{Person::first, Gender::masculine, Number::singular}};
  if (s == "us") return PronounInfo{{Person::first, Gender::masculine, Number::plural}};
  if (s == "you") return PronounInfo{{Person::second, Gender::masculine, Number::singular}};
  if (s == "him") return PronounInfo{{Person::third, Gender::masculine, Number::singular}};
  if (s == "her") return PronounInfo{{Person::third, Gender::feminine, Number::singular}};
  if (s == "it")
    return PronounInfo{{Person::third, Gender::masculine, Number::singular}, false};
  if (s == "them") return PronounInfo{{Person::third, Gender::masculine, Number::plural}};
  return std::nullopt;
}

inline std::optional<PronounInfo> possessive_pronoun(const std::string& w) {
  const std::string s = lower(w);
  if (s == "my") return PronounInfo{{Person::first, Gender::masculine, Number::singular}};
  if (s == "our") return PronounInfo{{Person::first, Gender::masculine, Number::plural}};
  if (s == "your") return PronounInfo{{Person::second, Gender::masculine, Number::singular}};
  if (s == "his") return PronounInfo{{Person::third, Gender::masculine, Number::singular}};
  if (s == "her") return PronounInfo{{Person::third, Gender::feminine, Number::singular}};
  if (s == "its")
    return PronounInfo{{Person::third, Gender::masculine, Number::singular}, false};
  if (s == "their") return PronounInfo{{Person::third, Gender::masculine, Number::plural}};
  return std::nullopt;
}

// English number words.
inline std::optional<long> number_word(const std::string& w) {
  static const std::pair<const char*, long> tab[] = {
      {"one", 1}, {"two", 2}, {"three", 3}, {"four", 4}, {"five", 5},
      {"six", 6}, {"seven", 7}, {"eight", 8}, {"nine", 9}, {"ten", 10},
      {"eleven", 11}, {"twelve", 12}, {"thirteen", 13}, {"fourteen", 14},
      {"fifteen", 15}, {"sixteen", 16}, {"seventeen", 17}, {"eighteen", 18},
      {"nineteen", 19}, {"twenty", 20}, {"thirty", 30}, {"forty", 40},
      {"fifty", 50}, {"sixty", 60}, {"seventy", 70}, {"eighty", 80},
      {"ninety", 90}, {"hundred", 100}, {"thousand", 1000}};
  const std::string s = lower(w);
  for (const auto& [name, v] : tab)
    if (s == name) return v;
  if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos)
    return std::stol(s);
  return std::nullopt;
}

inline long combine_number_words(const std::vector<long>& vals) {
  long total = 0, cur = 0;
  for (long v : vals) {
    if (v == 100) cur = (cur == 0 ? 1 : cur) * 100;
    else if (v == 1000) { total += (cur == 0 ? 1 : cur) * 1000; cur = 0; }
    else cur += v;
  }
  return total + cur;
}

// Ordinal adjectives; the compound form is the unit used after tens
// (twenty first ⇒ الواحد و العشرون).
struct OrdinalInfo {
  long value;
  const char* masculine;
  const char* feminine;
  const char* compound_unit;
};

inline std::optional<OrdinalInfo> ordinal_word(const std::string& w) {
  static const OrdinalInfo tab[] = {
      {1, "أول", "أولى", "واحد"},
      {2, "ثاني", "ثانية", "اثنان"},
      {3, "ثالث", "ثالثة", "ثالث"},
      {4, "رابع", "رابعة", "رابع"},
      {5, "خامس", "خامسة", "خامس"},
      {6, "سادس", "سادسة", "سادس"},
      {7, "سابع", "سابعة", "سابع"},
      {8, "ثامن", "ثامنة", "ثامن"},
      {9, "تاسع", "تاسعة", "تاسع"},
      {10, "عاشر", "عاشرة", "عاشر"},
  };
  static const char* names[] = {"first", "second", "third", "fourth", "fifth",
                                "sixth", "seventh", "eighth", "ninth", "tenth"};
  const std::string s = lower(w);
  for (size_t i = 0; i < 10; ++i)
    if (s == names[i]) return tab[i];
  return std::nullopt;
}

// Strip the regular inflections so surface forms reach the lexicon; the
// irregular forms are listed in the lexicon directly.
inline std::vector<std::string> lemma_candidates(const std::string& word,
                                                 const std::string& tag) {
  const std::string w = lower(word);
  std::vector<std::string> out = {w};
  auto add = [&](const std::string& s) {
    if (!s.empty()) out.push_back(s);
  };
  if (tag == "VBZ" || tag == "NNS" || tag == "NNPS") {
    if (w.ends_with("ies")) add(w.substr(0, w.size() - 3) + "y");
    if (w.ends_with("es")) add(w.substr(0, w.size() - 2));
    if (w.ends_with("s")) add(w.substr(0, w.size() - 1));
  }
  if (tag == "VBD" || tag == "VBN") {
    if (w.ends_with("ied")) add(w.substr(0, w.size() - 3) + "y");
    if (w.ends_with("ed")) {
      add(w.substr(0, w.size() - 2));
      add(w.substr(0, w.size() - 1));  // arrived -> arrive
      if (w.size() > 4 && w[w.size() - 3] == w[w.size() - 4])
        add(w.substr(0, w.size() - 3));  // stopped -> stop
    }
  }
  if (tag == "VBG" && w.ends_with("ing")) {
    add(w.substr(0, w.size() - 3));
    add(w.substr(0, w.size() - 3) + "e");  // writing -> write
  }
  return out;
}

inline const LexEntry* lookup(const Lexicon& lex, const std::string& word,
                              const std::string& tag, PartOfSpeech pos) {
  for (const std::string& cand : lemma_candidates(word, tag))
    if (const LexEntry* e = lex.find(cand, pos)) return e;
  return nullptr;
}

inline const LexEntry* require(const Lexicon& lex, const std::string& word,
                               const std::string& tag, PartOfSpeech pos) {
  if (const LexEntry* e = lookup(lex, word, tag, pos)) return e;
  throw TranslationError("word not in lexicon: '" + word + "' (" + tag + ")");
}

}  // namespace detail

// --- clause structure ------------------------------------------------------

// One term of an annexation chain.
struct NPTerm {
  const LexEntry* head = nullptr;
  Definiteness def = Definiteness::indefinite;
  Number number = Number::singular;
  std::vector<const LexEntry*> adjectives;  // English order
  std::optional<detail::OrdinalInfo> ordinal;
  std::optional<long> ordinal_tens;  // twenty first ⇒ 20, with ordinal=first
  std::optional<long> count;         // cardinal 2..N before the noun
  std::optional<PronounRef> possessor;
  bool possessor_human = true;
};

// A noun phrase is either a pronoun or an annexation chain of terms.
struct NounPhrase {
  bool pronoun = false;
  PronounRef pref;
  bool pronoun_human = true;
  std::vector<NPTerm> chain;

  Gender gender() const {
    if (pronoun) return pref.gender;
    return chain.front().head->gender == 'F' ? Gender::feminine
                                             : Gender::masculine;
  }
  Number number() const {
    if (pronoun) return pref.number;
    return chain.front().number;
  }
  bool human() const {
    if (pronoun) return pronoun_human;
    return chain.front().head->human;
  }
};

// Coordinated noun phrases (joined with و).
struct NPGroup {
  std::vector<NounPhrase> items;
  bool empty() const { return items.empty(); }
};

struct Clause {
  enum class Kind { fragment, prepositional, nominal, verbal, passive, number };
  Kind kind = Kind::fragment;
  Tense tense = Tense::none;
  Polarity polarity = Polarity::affirmative;
  Mood mood = Mood::declarative;

  NPGroup subject;
  std::optional<detail::PronounInfo> subject_pron;

  const LexEntry* verb = nullptr;  // verbal / passive
  NPGroup object;
  std::optional<detail::PronounInfo> object_pron;

  NPGroup predicate;                           // nominal, NP predicate
  std::vector<const LexEntry*> pred_adjectives;  // nominal, adjective predicate

  const LexEntry* preposition = nullptr;  // trailing or fragment PP
  NPGroup pp_object;

  const LexEntry* adverb = nullptr;
  long number_value = 0;  // Kind::number

  std::vector<std::string> trace;
};

// --- parsing ---------------------------------------------------------------

class ClauseParser {
 public:
  ClauseParser(const Lexicon& lex, std::vector<TaggedToken> toks)
      : lex_(lex), toks_(std::move(toks)) {}

  Clause parse() {
    Clause c;
    if (!toks_.empty() && toks_.back().tag == ".") {
      if (toks_.back().word == "?") c.mood = Mood::interrogative;
      toks_.pop_back();
    }
    if (toks_.empty()) throw TranslationError("empty clause");

    // Pure number phrase.
    if (all_cd()) {
      c.kind = Clause::Kind::number;
      std::vector<long> vals;
      for (const auto& t : toks_) {
        auto v = detail::number_word(t.word);
        if (!v) throw TranslationError("unknown number word '" + t.word + "'");
        vals.push_back(*v);
      }
      c.number_value = detail::combine_number_words(vals);
      c.trace.push_back("number.cardinal");
      return c;
    }

    // Fronted auxiliary (interrogatives).
    if (tag_is_verbish(0)) {
      const std::string w = detail::lower(toks_[0].word);
      if (detail::is_do(w) || w == "will" || detail::is_copula(w)) {
        fronted_aux_ = w;
        c.mood = Mood::interrogative;
        pos_ = 1;
      }
    }

    // Leading preposition: a prepositional fragment.
    if (pos_ < toks_.size() &&
        (toks_[pos_].tag == "IN" || toks_[pos_].tag == "TO") &&
        !is_of(pos_)) {
      c.kind = Clause::Kind::prepositional;
      c.preposition = detail::require(lex_, toks_[pos_].word, toks_[pos_].tag,
                                      PartOfSpeech::preposition);
      ++pos_;
      c.pp_object = parse_np_group();
      c.trace.push_back("fragment.prepositional");
      expect_end();
      return c;
    }

    // Subject.
    if (pos_ < toks_.size() && toks_[pos_].tag == "PRP") {
      auto p = detail::subject_pronoun(toks_[pos_].word);
      if (!p) throw TranslationError("unknown pronoun '" + toks_[pos_].word + "'");
      c.subject_pron = p;
      ++pos_;
    } else {
      c.subject = parse_np_group();
    }

    if (pos_ >= toks_.size() && fronted_aux_.empty()) {
      c.kind = Clause::Kind::fragment;
      c.trace.push_back("fragment.noun-phrase");
      return c;
    }

    parse_predicate(c);
    expect_end();
    return c;
  }

 private:
  const Lexicon& lex_;
  std::vector<TaggedToken> toks_;
  size_t pos_ = 0;
  std::string fronted_aux_;

  bool all_cd() const {
    for (const auto& t : toks_)
      if (t.tag != "CD") return false;
    return true;
  }

  bool tag_is_verbish(size_t i) const {
    const std::string& t = toks_[i].tag;
    return t == "VB" || t == "VBD" || t == "VBP" || t == "VBZ" || t == "MD";
  }

  bool is_of(size_t i) const {
    return i < toks_.size() && toks_[i].tag == "IN" &&
           detail::lower(toks_[i].word) == "of";
  }

  void expect_end() const {
    if (pos_ < toks_.size())
      throw TranslationError("unsupported construction at '" +
                             toks_[pos_].word + "'");
  }

  const TaggedToken& cur() const {
    if (pos_ >= toks_.size()) throw TranslationError("unexpected end of clause");
    return toks_[pos_];
  }

  bool at(const std::string& tag) const {
    return pos_ < toks_.size() && toks_[pos_].tag == tag;
  }

  bool at_word(const std::string& w) const {
    return pos_ < toks_.size() && detail::lower(toks_[pos_].word) == w;
  }

  // One chain term: [DT] [CD|ordinal] JJ* NN(S).
  NPTerm parse_term(bool bare_plural_definite) {
    NPTerm t;
    bool saw_dt = false, indefinite_dt = false;
    if (at("DT")) {
      saw_dt = true;
      const std::string d = detail::lower(cur().word);
      indefinite_dt = d == "a" || d == "an";
      t.def = indefinite_dt ? Definiteness::indefinite : Definiteness::definite;
      ++pos_;
    }
    if (at("PRP$")) {
      auto p = detail::possessive_pronoun(cur().word);
      if (!p) throw TranslationError("unknown possessive '" + cur().word + "'");
      t.possessor = p->ref;
      t.possessor_human = p->human;
      ++pos_;
    }
    while (at("CD")) {
      auto v = detail::number_word(cur().word);
      if (!v) throw TranslationError("unknown number word '" + cur().word + "'");
      t.count = t.count ? *t.count + *v : *v;
      ++pos_;
    }
    while (at("JJ")) {
      if (auto ord = detail::ordinal_word(cur().word)) {
        t.ordinal = ord;
        if (t.count && *t.count >= 20) {
          t.ordinal_tens = *t.count;
          t.count.reset();
        }
        ++pos_;
        continue;
      }
      t.adjectives.push_back(detail::require(lex_, cur().word, "JJ",
                                             PartOfSpeech::adjective));
      ++pos_;
    }
    if (!(at("NN") || at("NNS") || at("NNP") || at("NNPS")))
      throw TranslationError("expected a noun at '" +
                             (pos_ < toks_.size() ? cur().word : "<end>") + "'");
    const std::string& tag = cur().tag;
    const PartOfSpeech pos_kind =
        (tag == "NNP" || tag == "NNPS") ? PartOfSpeech::proper
                                        : PartOfSpeech::noun;
    t.head = detail::require(lex_, cur().word, tag, pos_kind);
    const bool plural_tag = tag == "NNS" || tag == "NNPS";
    ++pos_;

    if (t.count && *t.count == 2) {
      t.number = Number::dual;
      t.count.reset();
    } else if (plural_tag) {
      t.number = Number::plural;
    }
    if (!saw_dt && !t.possessor && pos_kind != PartOfSpeech::proper) {
      // Bare plurals read generically and take the article; bare singulars
      // stay indefinite.
      // A counted bare plural (three books) stays indefinite.
      t.def = (plural_tag && bare_plural_definite && !t.count)
                  ? Definiteness::definite
                  : Definiteness::indefinite;
    }
    if (pos_kind == PartOfSpeech::proper) t.def = Definiteness::by_annexation;
    return t;
  }

  // A chain with possessive ('s) and of-genitives, then CC coordination is
  // handled by parse_np_group.
  NounPhrase parse_np(bool bare_plural_definite = true) {
    NounPhrase np;
    NPTerm first = parse_term(bare_plural_definite);

    // X 's Y  ⇒  Y + X(genitive)
    if (at("POS")) {
      ++pos_;
      NPTerm owned = parse_term(bare_plural_definite);
      if (first.def == Definiteness::indefinite &&
          first.head->pos != PartOfSpeech::proper)
        first.def = Definiteness::definite;  // bare possessor reads definite
      np.chain.push_back(owned);
      np.chain.push_back(first);
      return finish_chain(np);
    }

    // Noun-noun compound: the modifier becomes the genitive term.
    if ((at("NN") || at("NNS")) && first.adjectives.empty() &&
        !first.ordinal && !first.count) {
      NPTerm second = parse_term(bare_plural_definite);
      second.def = first.def == Definiteness::indefinite
                       ? Definiteness::indefinite
                       : first.def;
      NPTerm modifier = first;
      modifier.def = Definiteness::definite;
      np.chain.push_back(second);
      np.chain.push_back(modifier);
      return finish_chain(np);
    }

    np.chain.push_back(first);
    return finish_chain(np);
  }

  NounPhrase finish_chain(NounPhrase np) {
    while (is_of(pos_)) {
      ++pos_;
      NPTerm t = parse_term(true);
      np.chain.push_back(t);
    }
    return np;
  }

  NPGroup parse_np_group() {
    NPGroup g;
    g.items.push_back(parse_np());
    while (at("CC") && at_word("and")) {
      ++pos_;
      g.items.push_back(parse_np());
    }
    return g;
  }

  void parse_predicate(Clause& c) {
    // Tense/polarity from the verb cluster; fronted auxiliaries were removed.
    std::string aux = fronted_aux_;
    bool negative = false;

    auto eat_not = [&] {
      if (at("RB") && (at_word("not") || at_word("n't"))) {
        negative = true;
        ++pos_;
      }
    };

    if (aux.empty() && pos_ < toks_.size()) {
      const std::string w = detail::lower(cur().word);
      if (toks_[pos_].tag == "MD" && w == "will") { aux = "will"; ++pos_; }
      else if (detail::is_do(w) && tag_is_verbish(pos_)) { aux = w; ++pos_; }
      else if (detail::is_copula(w) && tag_is_verbish(pos_)) { aux = w; ++pos_; }
      else if (detail::is_have(w) && tag_is_verbish(pos_)) { aux = w; ++pos_; }
    } else if (!aux.empty() && detail::is_copula(aux)) {
      // Subject was parsed after the fronted copula.
    }
    eat_not();
    if (aux == "will" && pos_ < toks_.size() &&
        detail::is_copula(detail::lower(cur().word))) {
      aux = detail::lower(cur().word) == "be" ? "will-be" : aux;
      ++pos_;
      eat_not();
    }

    c.polarity = negative ? Polarity::negative : Polarity::affirmative;

    // Copular clauses.
    if (detail::is_copula(aux) || aux == "will-be") {
      if (aux == "will-be") c.tense = Tense::future;
      else if (aux == "was" || aux == "were") c.tense = Tense::past;
      else c.tense = Tense::present;

      if (at("VBN")) {  // passive: the teachers were honored
        c.kind = Clause::Kind::passive;
        c.verb = detail::require(lex_, cur().word, "VBN", PartOfSpeech::verb);
        ++pos_;
        c.tense = Tense::past;
        c.trace.push_back("verb.passive.agent-complement");
        return;
      }
      if (at("VBG") &&
          !detail::lookup(lex_, cur().word, "JJ", PartOfSpeech::adjective) &&
          detail::lookup(lex_, cur().word, "VBG", PartOfSpeech::verb)) {
        // Progressive flattens onto the future; participles that live in the
        // lexicon as adjectives (standing) fall through to the predicate path.
        c.kind = Clause::Kind::verbal;
        c.verb = detail::require(lex_, cur().word, "VBG", PartOfSpeech::verb);
        ++pos_;
        c.tense = Tense::future;
        c.trace.push_back("verb.progressive-flattening");
        parse_complements(c);
        return;
      }
      c.kind = Clause::Kind::nominal;
      while (at("JJ") || at("VBG")) {
        // Participial predicates (standing) live in the lexicon as adjectives.
        c.pred_adjectives.push_back(
            detail::require(lex_, cur().word, "JJ", PartOfSpeech::adjective));
        ++pos_;
      }
      if (c.pred_adjectives.empty()) c.predicate = parse_np_group();
      c.trace.push_back("nominal." + std::string(to_string(c.tense)) + "." +
                        (negative ? "negative" : "affirmative"));
      return;
    }

    // have + VBN flattens onto the past.
    if (detail::is_have(aux)) {
      if (!at("VBN")) throw TranslationError("expected past participle");
      c.kind = Clause::Kind::verbal;
      c.verb = detail::require(lex_, cur().word, "VBN", PartOfSpeech::verb);
      ++pos_;
      c.tense = Tense::past;
      c.trace.push_back("verb.perfect-flattening");
      parse_complements(c);
      return;
    }

    // Plain verbal clause.
    if (!(at("VB") || at("VBD") || at("VBP") || at("VBZ")))
      throw TranslationError("expected a verb at '" +
                             (pos_ < toks_.size() ? cur().word : "<end>") + "'");
    const std::string vtag = cur().tag;
    c.kind = Clause::Kind::verbal;
    c.verb = detail::require(lex_, cur().word, vtag, PartOfSpeech::verb);
    ++pos_;
    if (aux == "will") c.tense = Tense::future;
    else if (aux == "did") c.tense = Tense::past;
    else if (aux == "do" || aux == "does") c.tense = Tense::present;
    else if (vtag == "VBD") c.tense = Tense::past;
    else c.tense = Tense::present;
    c.trace.push_back("verb." + std::string(to_string(c.tense)) + "." +
                      (negative ? "negative" : "affirmative"));
    parse_complements(c);
  }

  void parse_complements(Clause& c) {
    if (at("PRP")) {
      auto p = detail::object_pronoun(cur().word);
      if (!p) throw TranslationError("unknown pronoun '" + cur().word + "'");
      c.object_pron = p;
      ++pos_;
      c.trace.push_back("verb.object-enclitic");
    } else if (at("DT") || at("NN") || at("NNS") || at("NNP") || at("JJ") ||
               at("CD") || at("PRP$")) {
      c.object = parse_np_group();
    }
    if ((at("IN") || at("TO")) && !is_of(pos_)) {
      c.preposition = detail::require(lex_, cur().word, cur().tag,
                                      PartOfSpeech::preposition);
      ++pos_;
      c.pp_object = parse_np_group();
    }
    if (at("RB")) {
      c.adverb = detail::require(lex_, cur().word, "RB", PartOfSpeech::adverb);
      ++pos_;
      c.trace.push_back("verb.adverb-final");
    }
  }
};

inline Clause transfer_clause(const Lexicon& lex, const std::string& tagged) {
  return ClauseParser(lex, parse_tagged(tagged)).parse();
}

}  // namespace naqil

#endif  // NAQIL_TRANSFER_HPP
