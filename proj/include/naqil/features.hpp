#ifndef NAQIL_FEATURES_HPP
#define NAQIL_FEATURES_HPP

#include <optional>
#include <string>

// Morphosyntactic feature bundle shared by the analyzer, the generator and
// the transfer rules.

namespace naqil {

enum class Person { first = 1, second = 2, third = 3 };
enum class Gender { masculine, feminine };
enum class Number { singular, dual, plural };
enum class Tense { none, present, past, future };
enum class Polarity { affirmative, negative };
enum class Mood { declarative, interrogative };
enum class Definiteness { indefinite, definite, by_annexation };
enum class Case { nominative, accusative, genitive };
enum class Humanness { human, non_human };

// Pronoun-like reference: person/gender/number triple used for verb subjects,
// object enclitics and possessors.
struct PronounRef {
  Person person = Person::third;
  Gender gender = Gender::masculine;
  Number number = Number::singular;

  bool operator==(const PronounRef&) const = default;
};

struct FeatureBundle {
  Person person = Person::third;
  Gender gender = Gender::masculine;
  Number number = Number::singular;
  Tense tense = Tense::none;
  Polarity polarity = Polarity::affirmative;
  Mood mood = Mood::declarative;
  Definiteness definiteness = Definiteness::indefinite;
  Case noun_case = Case::nominative;
  Humanness humanness = Humanness::non_human;
  std::optional<PronounRef> object;     // verbal object enclitic
  std::optional<PronounRef> possessor;  // nominal possessive enclitic

  bool operator==(const FeatureBundle&) const = default;
};

inline std::string to_string(Person v) {
  switch (v) {
    case Person::first: return "1";
    case Person::second: return "2";
    default: return "3";
  }
}
inline std::string to_string(Gender v) {
  return v == Gender::masculine ? "M" : "F";
}
inline std::string to_string(Number v) {
  switch (v) {
    case Number::singular: return "S";
    case Number::dual: return "B";
    default: return "P";
  }
}
inline std::string to_string(Tense v) {
  switch (v) {
    case Tense::present: return "present";
    case Tense::past: return "past";
    case Tense::future: return "future";
    default: return "none";
  }
}
inline std::string to_string(Polarity v) {
  return v == Polarity::affirmative ? "affirmative" : "negative";
}
inline std::string to_string(Mood v) {
  return v == Mood::declarative ? "declarative" : "interrogative";
}
inline std::string to_string(Definiteness v) {
  switch (v) {
    case Definiteness::definite: return "definite";
    case Definiteness::by_annexation: return "by-annexation";
    default: return "indefinite";
  }
}
inline std::string to_string(Case v) {
  switch (v) {
    case Case::nominative: return "nominative";
    case Case::accusative: return "accusative";
    default: return "genitive";
  }
}
inline std::string to_string(Humanness v) {
  return v == Humanness::human ? "human" : "non-human";
}

}  // namespace naqil

#endif  // NAQIL_FEATURES_HPP
