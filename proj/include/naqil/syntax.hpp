#ifndef NAQIL_SYNTAX_HPP
#define NAQIL_SYNTAX_HPP

#include <string>
#include <vector>

#include "naqil/generator.hpp"
#include "naqil/transfer.hpp"

// Target-side ordering and particle placement: verbal clauses come out
// verb-subject-object, nominal clauses subject-predicate with the tense
// copulas, interrogatives take a clause-initial هل and a final ؟.

namespace naqil {

namespace detail {

inline std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += " ";
    out += p;
  }
  return out;
}

inline std::string detached_pronoun(const PronounRef& p) {
  const size_t row = row_index(p);
  static const char* forms[13] = {"أنا", "أنت", "أنت", "أنتما", "أنتم",
                                  "أنتن", "هو", "هي", "نحن", "هما",
                                  "هما", "هم", "هن"};
  return forms[row];
}

}  // namespace detail

// Bound prepositions fuse with the first word; ل swallows the alef of ال.
inline std::string attach_preposition(const LexEntry& prep, std::string phrase) {
  const std::string& p = prep.lemma;
  if (p != "ب" && p != "ك" && p != "ل") return p + " " + phrase;
  std::string head = phrase, rest;
  if (size_t sp = phrase.find(' '); sp != std::string::npos) {
    head = phrase.substr(0, sp);
    rest = phrase.substr(sp);
  }
  if (p == "ل" && head.starts_with("ال"))
    head = "لل" + head.substr(std::string("ال").size());
  else
    head = p + head;
  return head + rest;
}

class Renderer {
 public:
  explicit Renderer(const Lexicon& lex) : lex_(lex) {}

  std::string render(const Clause& c) const {
    std::vector<std::string> parts;
    switch (c.kind) {
      case Clause::Kind::number:
        parts.push_back(arabic_cardinal(c.number_value));
        break;
      case Clause::Kind::fragment:
        if (c.subject_pron)
          parts.push_back(detail::detached_pronoun(c.subject_pron->ref));
        else
          parts.push_back(render_group(c.subject, Case::nominative));
        break;
      case Clause::Kind::prepositional:
        parts.push_back(attach_preposition(
            *c.preposition, render_group(c.pp_object, Case::genitive)));
        break;
      case Clause::Kind::nominal:
        parts = render_nominal(c);
        break;
      case Clause::Kind::verbal:
        parts = render_verbal(c);
        break;
      case Clause::Kind::passive:
        parts = render_passive(c);
        break;
    }
    std::string out = detail::join(parts);
    if (c.mood == Mood::interrogative) out = "هل " + out + "؟";
    return out;
  }

  // --- noun phrases --------------------------------------------------------

  std::string render_group(const NPGroup& g, Case noun_case) const {
    std::vector<std::string> parts;
    for (size_t i = 0; i < g.items.size(); ++i) {
      if (i) parts.push_back("و");
      parts.push_back(render_np(g.items[i], noun_case));
    }
    return detail::join(parts);
  }

  std::string render_np(const NounPhrase& np, Case noun_case) const {
    if (np.pronoun) return detail::detached_pronoun(np.pref);
    const NPTerm& head = np.chain.front();

    // Counted phrase (3 and above): number word + counted noun.
    if (head.count && *head.count >= 3 && np.chain.size() == 1 &&
        head.adjectives.empty())
      return counted_phrase(*head.count, *head.head, noun_case,
                            head.def);

    std::vector<std::string> parts;
    const bool chained = np.chain.size() > 1;
    bool chain_definite = head.def == Definiteness::definite ||
                          head.possessor.has_value();
    for (size_t i = 0; i < np.chain.size(); ++i) {
      const NPTerm& t = np.chain[i];
      const bool last = i + 1 == np.chain.size();
      FeatureBundle f;
      f.gender = t.head->gender == 'F' ? Gender::feminine : Gender::masculine;
      f.humanness = t.head->human ? Humanness::human : Humanness::non_human;
      f.number = t.number;
      f.noun_case = i == 0 ? noun_case : Case::genitive;
      f.possessor = t.possessor;
      if (t.possessor) f.humanness = t.possessor_human ? Humanness::human
                                                       : Humanness::non_human;
      f.definiteness = (!last && chained) ? Definiteness::by_annexation : t.def;
      if (t.head->pos == PartOfSpeech::proper)
        f.definiteness = Definiteness::by_annexation;
      NounOptions opt;
      opt.annexed_head = chained && !last;
      parts.push_back(inflect_noun(*t.head, f, opt));
      if (last && chained)
        chain_definite = chain_definite || t.def == Definiteness::definite ||
                         t.possessor.has_value();
    }

    // Adjectives of the head follow the whole chain, in reverse order.
    const NPTerm& last_term = np.chain.back();
    const bool adj_definite =
        chained ? chain_definite
                : head.def == Definiteness::definite || head.possessor;
    (void)last_term;
    for (auto it = head.adjectives.rbegin(); it != head.adjectives.rend(); ++it)
      parts.push_back(render_adjective(**it, head, noun_case, adj_definite));

    if (head.ordinal) parts.push_back(render_ordinal(head, noun_case));
    return detail::join(parts);
  }

  // Adjective agreement with its head noun; a non-human plural head takes a
  // feminine singular adjective.
  std::string render_adjective(const LexEntry& adj, const NPTerm& head,
                               Case noun_case, bool definite) const {
    FeatureBundle f;
    f.gender = head.head->gender == 'F' ? Gender::feminine : Gender::masculine;
    f.humanness = head.head->human ? Humanness::human : Humanness::non_human;
    f.number = head.number;
    f.noun_case = noun_case;
    f.definiteness =
        definite ? Definiteness::definite : Definiteness::indefinite;
    if (f.number == Number::plural && f.humanness == Humanness::non_human) {
      f.number = Number::singular;
      f.gender = Gender::feminine;
    }
    return inflect_noun(adj, f);
  }

  std::string render_ordinal(const NPTerm& head, Case noun_case) const {
    const bool fem = head.head->gender == 'F';
    const bool definite = head.def == Definiteness::definite;
    const std::string art = definite ? "ال" : "";
    if (head.ordinal_tens) {
      // twenty first ⇒ الواحد و العشرون
      const std::string unit =
          fem ? detail::feminize(head.ordinal->compound_unit)
              : head.ordinal->compound_unit;
      const std::string tens = detail::tens_word(
          static_cast<int>(*head.ordinal_tens / 10), noun_case);
      return art + unit + " و " + art + tens;
    }
    std::string w = fem ? head.ordinal->feminine : head.ordinal->masculine;
    return art + w;
  }

  // --- clauses -------------------------------------------------------------

  // Copulas of the nominal sentence, by tense, polarity and subject gender.
  static std::string copula(Tense t, Polarity p, Gender g) {
    const bool f = g == Gender::feminine;
    if (p == Polarity::affirmative) {
      switch (t) {
        case Tense::past: return f ? "كانت" : "كان";
        case Tense::future: return f ? "ستصبح" : "سيصبح";
        default: return "";
      }
    }
    switch (t) {
      case Tense::past: return f ? "لم تكن" : "لم يكن";
      case Tense::future: return f ? "لن تصبح" : "لن يصبح";
      default: return f ? "ليست" : "ليس";
    }
  }

  // Predicate agreement computed over the coordinated subject.
  FeatureBundle predicate_bundle(const Clause& c) const {
    FeatureBundle f;
    const NPGroup& g = c.subject;
    if (c.subject_pron) {
      f.gender = c.subject_pron->ref.gender;
      f.number = c.subject_pron->ref.number;
      f.humanness =
          c.subject_pron->human ? Humanness::human : Humanness::non_human;
    } else {
      bool all_f = true, all_h = true;
      size_t units = 0;
      for (const NounPhrase& np : g.items) {
        if (np.gender() == Gender::masculine) all_f = false;
        if (!np.human()) all_h = false;
        units += np.number() == Number::singular ? 1
                 : np.number() == Number::dual ? 2
                                               : 3;
      }
      f.gender = all_f ? Gender::feminine : Gender::masculine;
      f.humanness = all_h ? Humanness::human : Humanness::non_human;
      f.number = units == 1 ? Number::singular
                 : units == 2 ? Number::dual
                              : Number::plural;
    }
    // Nominative only in the affirmative present; كان and ليس govern the
    // accusative.
    f.noun_case = (c.tense == Tense::present &&
                   c.polarity == Polarity::affirmative)
                      ? Case::nominative
                      : Case::accusative;
    if (f.number == Number::plural && f.humanness == Humanness::non_human) {
      f.number = Number::singular;
      f.gender = Gender::feminine;
    }
    f.definiteness = Definiteness::indefinite;
    return f;
  }

  // Agreement gender of a noun subject; non-human plurals read feminine.
  static Gender subject_gender(const NounPhrase& np) {
    if (np.number() == Number::plural && !np.human()) return Gender::feminine;
    return np.gender();
  }

  std::vector<std::string> render_nominal(const Clause& c) const {
    std::vector<std::string> parts;
    const Gender subj_gender =
        c.subject_pron ? c.subject_pron->ref.gender
                       : subject_gender(c.subject.items.front());
    parts.push_back(copula(c.tense, c.polarity, subj_gender));
    if (c.subject_pron)
      parts.push_back(detail::detached_pronoun(c.subject_pron->ref));
    else
      parts.push_back(render_group(c.subject, Case::nominative));
    const FeatureBundle pb = predicate_bundle(c);
    if (!c.pred_adjectives.empty()) {
      // Several predicate adjectives come out in reverse order.
      for (auto it = c.pred_adjectives.rbegin(); it != c.pred_adjectives.rend();
           ++it)
        parts.push_back(inflect_noun(**it, pb));
    } else {
      parts.push_back(render_group(c.predicate, pb.noun_case));
    }
    return parts;
  }

  FeatureBundle verb_bundle(const Clause& c) const {
    FeatureBundle f;
    f.tense = c.tense;
    f.polarity = c.polarity;
    f.mood = c.mood;
    if (c.subject_pron) {
      f.person = c.subject_pron->ref.person;
      f.gender = c.subject_pron->ref.gender;
      f.number = c.subject_pron->ref.number;
    } else {
      // Verb-first agreement: gender only, number stays singular.
      f.person = Person::third;
      f.gender = subject_gender(c.subject.items.front());
      f.number = Number::singular;
    }
    if (c.object_pron) {
      f.object = c.object_pron->ref;
      f.humanness =
          c.object_pron->human ? Humanness::human : Humanness::non_human;
    }
    return f;
  }

  std::vector<std::string> render_verbal(const Clause& c) const {
    std::vector<std::string> parts;
    parts.push_back(conjugate(*c.verb, verb_bundle(c)));
    if (!c.subject.empty())
      parts.push_back(render_group(c.subject, Case::nominative));
    if (!c.object.empty())
      parts.push_back(render_group(c.object, Case::accusative));
    if (c.preposition)
      parts.push_back(attach_preposition(
          *c.preposition, render_group(c.pp_object, Case::genitive)));
    if (c.adverb) parts.push_back(render_adverb(*c.adverb));
    return parts;
  }

  std::vector<std::string> render_passive(const Clause& c) const {
    FeatureBundle f;
    f.tense = Tense::past;
    f.person = Person::third;
    f.gender = subject_gender(c.subject.items.front());
    f.number = Number::singular;
    std::vector<std::string> parts;
    parts.push_back(conjugate(*c.verb, f));
    parts.push_back(render_group(c.subject, Case::nominative));
    return parts;
  }

  // Adverbs surface in the accusative indefinite (quickly = سريعا).
  std::string render_adverb(const LexEntry& adv) const {
    FeatureBundle f;
    f.noun_case = Case::accusative;
    f.definiteness = Definiteness::indefinite;
    return inflect_noun(adv, f);
  }

 private:
  const Lexicon& lex_;
};

}  // namespace naqil

#endif  // NAQIL_SYNTAX_HPP
