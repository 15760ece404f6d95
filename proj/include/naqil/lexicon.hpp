#ifndef NAQIL_LEXICON_HPP
#define NAQIL_LEXICON_HPP

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "naqil/unicode.hpp"

// Lexical resources loaded from a directory of TSV files:
//
//   clitics.tsv    kind (proclitic|enclitic|prefix|suffix) <TAB> form
//   compat.tsv     table (clitic|affix) <TAB> first <TAB> second   incompatible pairs
//   schemes.tsv    pattern <TAB> comma-separated 1-based infix positions (or -)
//   bilingual.tsv  english pos root lemma gender humanness plural broken vclass model
//   stopwords.tsv  one surface form per line
//
// '#' starts a comment, blank lines are skipped, all Arabic text is
// normalized on load. Malformed rows raise LexiconError with file and line.

namespace naqil {

class LexiconError : public std::runtime_error {
 public:
  LexiconError(const std::string& file, size_t line, const std::string& what)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + what) {}
  explicit LexiconError(const std::string& what) : std::runtime_error(what) {}
};

struct CliticInventory {
  std::vector<std::string> proclitics;  // longest-first
  std::vector<std::string> enclitics;
  std::vector<std::string> prefixes;
  std::vector<std::string> suffixes;
};

// Pairs listed in compat.tsv are *incompatible*; anything absent is allowed.
struct CompatibilityTable {
  std::set<std::string> clitic_pairs;  // proclitic+enclitic concatenated
  std::set<std::string> affix_pairs;   // prefix+suffix concatenated
  std::set<std::string> cross_pairs;   // proclitic+prefix concatenated

  bool clitics_compatible(const std::string& pro, const std::string& enc) const {
    return clitic_pairs.find(pro + enc) == clitic_pairs.end();
  }
  bool affixes_compatible(const std::string& pre, const std::string& suf) const {
    return affix_pairs.find(pre + suf) == affix_pairs.end();
  }
  bool clitic_prefix_compatible(const std::string& pro,
                                const std::string& pre) const {
    return cross_pairs.find(pro + pre) == cross_pairs.end();
  }
};

struct SchemeEntry {
  std::string pattern;             // e.g. فاعل
  std::vector<size_t> infixes;     // 1-based positions of pattern letters
  std::vector<char32_t> pattern_cps;
};

enum class PartOfSpeech {
  noun, verb, adjective, adverb, proper, preposition, conjunction, number
};

enum class PluralClass { none, regular, broken };
enum class VerbClass { sound, assimilated, hollow, defective };

struct LexEntry {
  std::string english;
  PartOfSpeech pos = PartOfSpeech::noun;
  std::string root;          // empty when not applicable
  std::string lemma;         // Arabic citation form
  char gender = 'M';         // 'M' or 'F'
  bool human = false;
  PluralClass plural = PluralClass::none;
  std::string broken_plural;            // only for PluralClass::broken
  VerbClass verb_class = VerbClass::sound;
  std::string model;                    // conjugation model word, e.g. قام
};

namespace detail {

inline std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_tsv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, '\t')) out.push_back(trim(field));
  return out;
}

// Comment handling: '#' to end of line.
inline std::string strip_comment(const std::string& line) {
  size_t pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

inline std::string lower_ascii(std::string s) {
  for (char& c : s)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

template <typename Fn>
inline void for_each_row(const std::string& path, Fn fn) {
  std::ifstream in(path);
  if (!in) throw LexiconError("cannot open " + path);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = trim(strip_comment(line));
    if (body.empty()) continue;
    fn(split_tsv(body), lineno);
  }
}

}  // namespace detail

inline PartOfSpeech parse_pos(const std::string& s, const std::string& file,
                              size_t line) {
  if (s == "noun") return PartOfSpeech::noun;
  if (s == "verb") return PartOfSpeech::verb;
  if (s == "adj") return PartOfSpeech::adjective;
  if (s == "adv") return PartOfSpeech::adverb;
  if (s == "proper") return PartOfSpeech::proper;
  if (s == "prep") return PartOfSpeech::preposition;
  if (s == "conj") return PartOfSpeech::conjunction;
  if (s == "num") return PartOfSpeech::number;
  throw LexiconError(file, line, "unknown part of speech '" + s + "'");
}

class Lexicon {
 public:
  CliticInventory clitics;
  CompatibilityTable compat;
  std::vector<SchemeEntry> schemes;
  std::vector<LexEntry> entries;
  std::set<std::string> stopwords;

  static Lexicon load(const std::string& dir) {
    Lexicon lex;
    lex.load_clitics(dir + "/clitics.tsv");
    lex.load_compat(dir + "/compat.tsv");
    lex.load_schemes(dir + "/schemes.tsv");
    lex.load_bilingual(dir + "/bilingual.tsv");
    lex.load_stopwords(dir + "/stopwords.tsv");
    lex.finish();
    return lex;
  }

  const LexEntry* find(const std::string& english, PartOfSpeech pos) const {
    auto it = by_english_.find(detail::lower_ascii(english));
    if (it == by_english_.end()) return nullptr;
    for (const LexEntry* e : it->second)
      if (e->pos == pos) return e;
    return nullptr;
  }

  // First entry for the word regardless of category.
  const LexEntry* find_any(const std::string& english) const {
    auto it = by_english_.find(detail::lower_ascii(english));
    return it == by_english_.end() ? nullptr : it->second.front();
  }

  const LexEntry* find_arabic(const std::string& lemma) const {
    auto it = by_lemma_.find(lemma);
    return it == by_lemma_.end() ? nullptr : it->second;
  }

  bool is_stopword(const std::string& surface) const {
    return stopwords.count(normalize_arabic(surface)) != 0;
  }

  const std::vector<const SchemeEntry*>& schemes_of_length(size_t n) const {
    static const std::vector<const SchemeEntry*> empty;
    auto it = schemes_by_length_.find(n);
    return it == schemes_by_length_.end() ? empty : it->second;
  }

 private:
  std::map<std::string, std::vector<const LexEntry*>> by_english_;
  std::map<std::string, const LexEntry*> by_lemma_;
  std::map<size_t, std::vector<const SchemeEntry*>> schemes_by_length_;

  void load_clitics(const std::string& path) {
    detail::for_each_row(path, [&](const std::vector<std::string>& f, size_t n) {
      if (f.size() != 2) throw LexiconError(path, n, "expected 2 fields");
      const std::string form = normalize_arabic(f[1]);
      if (form.empty()) throw LexiconError(path, n, "empty clitic form");
      if (f[0] == "proclitic") clitics.proclitics.push_back(form);
      else if (f[0] == "enclitic") clitics.enclitics.push_back(form);
      else if (f[0] == "prefix") clitics.prefixes.push_back(form);
      else if (f[0] == "suffix") clitics.suffixes.push_back(form);
      else throw LexiconError(path, n, "unknown clitic kind '" + f[0] + "'");
    });
    auto longest_first = [](std::vector<std::string>& v) {
      std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        return length_utf8(a) > length_utf8(b);
      });
    };
    longest_first(clitics.proclitics);
    longest_first(clitics.enclitics);
    longest_first(clitics.prefixes);
    longest_first(clitics.suffixes);
  }

  void load_compat(const std::string& path) {
    detail::for_each_row(path, [&](const std::vector<std::string>& f, size_t n) {
      if (f.size() != 3) throw LexiconError(path, n, "expected 3 fields");
      const std::string key = normalize_arabic(f[1]) + normalize_arabic(f[2]);
      if (f[0] == "clitic") compat.clitic_pairs.insert(key);
      else if (f[0] == "affix") compat.affix_pairs.insert(key);
      else if (f[0] == "cross") compat.cross_pairs.insert(key);
      else throw LexiconError(path, n, "unknown table '" + f[0] + "'");
    });
  }

  void load_schemes(const std::string& path) {
    detail::for_each_row(path, [&](const std::vector<std::string>& f, size_t n) {
      if (f.size() != 2) throw LexiconError(path, n, "expected 2 fields");
      SchemeEntry e;
      e.pattern = normalize_arabic(f[0]);
      e.pattern_cps = decode_utf8(e.pattern);
      if (f[1] != "-") {
        std::istringstream in(f[1]);
        std::string tok;
        while (std::getline(in, tok, ',')) {
          size_t pos = 0;
          try {
            pos = std::stoul(detail::trim(tok));
          } catch (const std::exception&) {
            throw LexiconError(path, n, "bad infix position '" + tok + "'");
          }
          if (pos < 1 || pos > e.pattern_cps.size())
            throw LexiconError(path, n, "infix position out of range");
          e.infixes.push_back(pos);
        }
      }
      if (e.pattern_cps.size() - e.infixes.size() != 3)
        throw LexiconError(path, n, "scheme must leave a 3-letter root");
      schemes.push_back(e);
    });
  }

  void load_bilingual(const std::string& path) {
    detail::for_each_row(path, [&](const std::vector<std::string>& f, size_t n) {
      if (f.size() != 10) throw LexiconError(path, n, "expected 10 fields");
      LexEntry e;
      e.english = detail::lower_ascii(f[0]);
      e.pos = parse_pos(f[1], path, n);
      e.root = f[2] == "-" ? "" : normalize_arabic(f[2]);
      e.lemma = normalize_arabic(f[3]);
      if (e.lemma.empty()) throw LexiconError(path, n, "empty Arabic lemma");
      if (f[4] != "M" && f[4] != "F")
        throw LexiconError(path, n, "gender must be M or F");
      e.gender = f[4][0];
      if (f[5] != "h" && f[5] != "nh")
        throw LexiconError(path, n, "humanness must be h or nh");
      e.human = f[5] == "h";
      if (f[6] == "-") e.plural = PluralClass::none;
      else if (f[6] == "reg") e.plural = PluralClass::regular;
      else if (f[6] == "brk") e.plural = PluralClass::broken;
      else throw LexiconError(path, n, "plural class must be -, reg or brk");
      e.broken_plural = f[7] == "-" ? "" : normalize_arabic(f[7]);
      if (e.plural == PluralClass::broken && e.broken_plural.empty())
        throw LexiconError(path, n, "broken plural form missing");
      if (f[8] == "-" || f[8] == "sound") e.verb_class = VerbClass::sound;
      else if (f[8] == "assim") e.verb_class = VerbClass::assimilated;
      else if (f[8] == "hollow") e.verb_class = VerbClass::hollow;
      else if (f[8] == "defect") e.verb_class = VerbClass::defective;
      else throw LexiconError(path, n, "unknown verb class '" + f[8] + "'");
      e.model = f[9] == "-" ? "" : normalize_arabic(f[9]);
      if (e.pos == PartOfSpeech::verb) {
        if (e.root.empty())
          throw LexiconError(path, n, "verb entry requires a root");
        if (length_utf8(e.root) != 3)
          throw LexiconError(path, n, "verb root must have 3 letters");
        if (e.verb_class != VerbClass::sound && e.model.empty())
          throw LexiconError(path, n, "weak verb requires a model word");
      }
      entries.push_back(e);
    });
  }

  void load_stopwords(const std::string& path) {
    detail::for_each_row(path, [&](const std::vector<std::string>& f, size_t n) {
      if (f.size() != 1) throw LexiconError(path, n, "expected 1 field");
      stopwords.insert(normalize_arabic(f[0]));
    });
  }

  void finish() {
    for (const LexEntry& e : entries) {
      by_english_[e.english].push_back(&e);
      by_lemma_.emplace(e.lemma, &e);
    }
    for (const SchemeEntry& s : schemes)
      schemes_by_length_[s.pattern_cps.size()].push_back(&s);
  }
};

}  // namespace naqil

#endif  // NAQIL_LEXICON_HPP
