#ifndef NAQIL_IR_HPP
#define NAQIL_IR_HPP

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "naqil/analyzer.hpp"
#include "naqil/pipeline.hpp"

// Lemma-keyed retrieval: documents are tokenized, stop words removed, the
// remaining words reduced to their lemma, and an inverted index built over
// the lemmas (alef variants folded for matching). Queries go through the
// same reduction; English queries are translated word-by-word through the
// bilingual lexicon first.

namespace naqil {

class IndexError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IndexedDocument {
  std::string id;
  size_t token_count = 0;     // post-stopword terms
};

struct Index {
  bool stemmed = true;  // false: surface-form baseline
  std::vector<IndexedDocument> docs;
  std::map<std::string, std::map<size_t, int>> postings;  // term -> doc -> tf

  size_t total_terms() const {
    size_t n = 0;
    for (const auto& d : docs) n += d.token_count;
    return n;
  }
  size_t distinct_terms() const { return postings.size(); }
};

// Index-side reduction of one surface token.
inline std::string index_term(const Lexicon& lex, const std::string& token,
                              bool stemmed) {
  return fold_alef(stemmed ? lemma_of(token, lex) : normalize_arabic(token));
}

inline Index build_index(
    const Lexicon& lex,
    const std::vector<std::pair<std::string, std::string>>& documents,
    bool stemmed = true) {
  Index ix;
  ix.stemmed = stemmed;
  for (const auto& [id, text] : documents) {
    IndexedDocument d;
    d.id = id;
    const size_t doc_no = ix.docs.size();
    for (const std::string& tok : tokenize_arabic(text)) {
      if (lex.is_stopword(tok)) continue;
      ++d.token_count;
      ++ix.postings[index_term(lex, tok, stemmed)][doc_no];
    }
    ix.docs.push_back(d);
  }
  return ix;
}

// --- persistence (plain text, versioned) -----------------------------------

inline void save_index(const Index& ix, std::ostream& out) {
  out << "naqil-index 1 " << (ix.stemmed ? "stemmed" : "surface") << "\n";
  for (const auto& d : ix.docs)
    out << "doc\t" << d.id << "\t" << d.token_count << "\n";
  for (const auto& [term, posting] : ix.postings)
    for (const auto& [doc, tf] : posting)
      out << "post\t" << term << "\t" << doc << "\t" << tf << "\n";
}

inline Index load_index(std::istream& in) {
  Index ix;
  std::string line;
  if (!std::getline(in, line)) throw IndexError("empty index file");
  std::istringstream hdr(line);
  std::string magic;
  int version = 0;
  std::string mode;
  hdr >> magic >> version >> mode;
  if (magic != "naqil-index" || version != 1)
    throw IndexError("unrecognized index header: " + line);
  ix.stemmed = mode != "surface";
  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream is(line);
    std::string kind;
    std::getline(is, kind, '\t');
    if (kind == "doc") {
      IndexedDocument d;
      std::string cnt;
      if (!std::getline(is, d.id, '\t') || !std::getline(is, cnt, '\t'))
        throw IndexError("bad doc line " + std::to_string(lineno));
      d.token_count = std::stoul(cnt);
      ix.docs.push_back(d);
    } else if (kind == "post") {
      std::string term, doc, tf;
      if (!std::getline(is, term, '\t') || !std::getline(is, doc, '\t') ||
          !std::getline(is, tf, '\t'))
        throw IndexError("bad posting line " + std::to_string(lineno));
      ix.postings[term][std::stoul(doc)] = std::stoi(tf);
    } else {
      throw IndexError("bad record kind at line " + std::to_string(lineno));
    }
  }
  return ix;
}

// --- search ----------------------------------------------------------------

struct SearchHit {
  size_t doc = 0;
  std::string id;
  int score = 0;  // tf-weighted count of matched query terms
};

inline std::vector<std::string> query_terms_arabic(const Lexicon& lex,
                                                   const std::string& query,
                                                   bool stemmed) {
  std::vector<std::string> terms;
  for (const std::string& tok : tokenize_arabic(query)) {
    if (lex.is_stopword(tok)) continue;
    terms.push_back(index_term(lex, tok, stemmed));
  }
  return terms;
}

// English query words go through the bilingual dictionary, then the same
// lemma reduction as the documents.
inline std::vector<std::string> query_terms_english(const Lexicon& lex,
                                                    const std::string& query,
                                                    bool stemmed) {
  std::vector<std::string> terms;
  std::string w;
  std::istringstream in(query);
  while (in >> w) {
    const LexEntry* e = nullptr;
    for (const std::string& cand : detail::lemma_candidates(w, "NNS"))
      if ((e = lex.find_any(cand))) break;
    if (!e) throw IndexError("query word not in lexicon: '" + w + "'");
    terms.push_back(index_term(lex, e->lemma, stemmed));
  }
  return terms;
}

inline std::vector<SearchHit> run_query(const Index& ix,
                                        const std::vector<std::string>& terms,
                                        int threshold = 1) {
  std::map<size_t, int> scores;
  for (const std::string& t : terms) {
    auto it = ix.postings.find(t);
    if (it == ix.postings.end()) continue;
    for (const auto& [doc, tf] : it->second) scores[doc] += tf;
  }
  std::vector<SearchHit> hits;
  for (const auto& [doc, score] : scores)
    if (score >= threshold) hits.push_back({doc, ix.docs[doc].id, score});
  std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.doc < b.doc;
  });
  return hits;
}

// --- evaluation ------------------------------------------------------------

struct MetricsReport {
  double precision = 0, recall = 0, silence = 0, noise = 0;
};

inline MetricsReport evaluate_counts(size_t relevant_retrieved,
                                     size_t retrieved, size_t relevant) {
  MetricsReport m;
  m.precision = retrieved ? double(relevant_retrieved) / retrieved : 0.0;
  m.recall = relevant ? double(relevant_retrieved) / relevant : 0.0;
  m.silence = 1.0 - m.recall;
  m.noise = 1.0 - m.precision;
  return m;
}

inline double accuracy(size_t correct, size_t total) {
  return total ? double(correct) / total : 0.0;
}

// Interpolated precision at the 11 standard recall levels: the maximum
// precision reached at any rank with recall at or above the level.
inline std::vector<double> eleven_point_curve(
    const std::vector<std::string>& ranked_ids,
    const std::set<std::string>& relevant) {
  std::vector<std::pair<double, double>> points;  // recall, precision
  size_t hits = 0;
  for (size_t i = 0; i < ranked_ids.size(); ++i) {
    if (relevant.count(ranked_ids[i])) ++hits;
    const double prec = double(hits) / double(i + 1);
    const double rec = relevant.empty() ? 0.0 : double(hits) / relevant.size();
    points.emplace_back(rec, prec);
  }
  std::vector<double> curve(11, 0.0);
  for (int lvl = 0; lvl <= 10; ++lvl) {
    const double level = lvl / 10.0;
    double best = 0.0;
    for (const auto& [rec, prec] : points)
      if (rec >= level - 1e-12) best = std::max(best, prec);
    curve[lvl] = best;
  }
  return curve;
}

inline MetricsReport evaluate_query(const std::vector<SearchHit>& hits,
                                    const std::set<std::string>& relevant) {
  size_t rr = 0;
  for (const auto& h : hits)
    if (relevant.count(h.id)) ++rr;
  return evaluate_counts(rr, hits.size(), relevant.size());
}

}  // namespace naqil

#endif  // NAQIL_IR_HPP
