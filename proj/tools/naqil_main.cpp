// Command line front end: translation, morphological analysis and
// generation, retrieval indexing/search and BLEU scoring over one shared
// lexicon directory.
//
// Exit codes: 0 success, 1 usage error, 2 data or input error.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <naqil/bleu.hpp>
#include <naqil/ir.hpp>
#include <naqil/pipeline.hpp>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace naqil;

namespace {

struct Options {
    std::string lexicon_dir;
    bool as_json = false;
    bool trace = false;
};

const Lexicon& lexicon(const Options& opt) {
    static Lexicon lex = Lexicon::load(opt.lexicon_dir);
    return lex;
}

std::vector<std::string> gather_lines(const std::vector<std::string>& args) {
    if (!args.empty()) {
        std::string joined;
        for (const std::string& a : args) {
            if (!joined.empty()) joined += ' ';
            joined += a;
        }
        return {joined};
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(std::cin, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

// --- translate -------------------------------------------------------------

int cmd_translate(const Options& opt, const std::vector<std::string>& args,
                  bool variants) {
    for (const std::string& line : gather_lines(args)) {
        if (variants) {
            auto vs = translate_variants(lexicon(opt), line);
            if (opt.as_json) {
                json out = json::array();
                for (const auto& v : vs)
                    out.push_back({{"reading", v.label}, {"arabic", v.output}});
                std::cout << out.dump() << "\n";
            } else {
                for (const auto& v : vs) {
                    if (!v.label.empty()) std::cout << v.label << "\t";
                    std::cout << v.output << "\n";
                }
            }
            continue;
        }
        TranslationResult r = translate(lexicon(opt), line);
        if (opt.as_json) {
            json out = {{"arabic", r.output}};
            if (opt.trace) out["rules"] = r.trace;
            std::cout << out.dump() << "\n";
        } else {
            std::cout << r.output << "\n";
            if (opt.trace)
                for (const std::string& rule : r.trace)
                    std::cerr << "rule: " << rule << "\n";
        }
    }
    return 0;
}

// --- analyze ---------------------------------------------------------------

json analysis_json(const Analysis& a) {
    return {{"proclitic", a.seg.proclitic}, {"prefix", a.seg.prefix},
            {"base", a.seg.base},           {"suffix", a.seg.suffix},
            {"enclitic", a.seg.enclitic},   {"scheme", a.scheme},
            {"root", a.root},               {"lemma", a.lemma}};
}

std::string analysis_text(const Analysis& a) {
    std::ostringstream os;
    os << a.seg.proclitic << "|" << a.seg.prefix << "|" << a.seg.base << "|"
       << a.seg.suffix << "|" << a.seg.enclitic
       << " root=" << (a.root.empty() ? "-" : a.root)
       << " scheme=" << (a.scheme.empty() ? "-" : a.scheme)
       << " lemma=" << a.lemma;
    return os.str();
}

int cmd_analyze(const Options& opt, const std::vector<std::string>& args,
                bool all) {
    for (const std::string& line : gather_lines(args)) {
        for (const std::string& tok : tokenize_arabic(line)) {
            if (all) {
                auto cands = analyze(tok, lexicon(opt));
                if (opt.as_json) {
                    json out = {{"word", tok}, {"candidates", json::array()}};
                    for (const Analysis& a : cands)
                        out["candidates"].push_back(analysis_json(a));
                    std::cout << out.dump() << "\n";
                } else {
                    std::cout << tok << ":\n";
                    for (const Analysis& a : cands)
                        std::cout << "  " << analysis_text(a) << "\n";
                }
                continue;
            }
            WordReport r = analyze_word(lexicon(opt), tok);
            if (opt.as_json) {
                json out = {{"word", tok}};
                out.update(analysis_json(r.analysis));
                out["traits"] = r.traits;
                if (!r.english.empty()) out["gloss"] = r.english;
                if (opt.trace) out["hints"] = r.hints;
                std::cout << out.dump() << "\n";
            } else {
                std::cout << tok << " " << analysis_text(r.analysis);
                if (!r.english.empty()) std::cout << " gloss=" << r.english;
                std::cout << "\n";
                if (opt.trace) {
                    for (const std::string& t : r.traits)
                        std::cerr << "trait: " << t << "\n";
                    std::cerr << "hint: " << r.hints << "\n";
                }
            }
        }
    }
    return 0;
}

// --- generate --------------------------------------------------------------

int cmd_generate(const Options& opt, const std::string& word, int person,
                 const std::string& gender, const std::string& number,
                 const std::string& tense, bool negative,
                 const std::string& ncase, const std::string& definiteness,
                 bool variants) {
    const Lexicon& lex = lexicon(opt);
    const LexEntry* e = lex.find_arabic(normalize_arabic(word));
    if (!e)
        for (const LexEntry& cand : lex.entries)
            if (cand.english == word || cand.root == normalize_arabic(word)) {
                e = &cand;
                break;
            }
    if (!e) throw std::runtime_error("word not in lexicon: '" + word + "'");

    FeatureBundle f;
    f.person = static_cast<Person>(person);
    f.gender = gender == "F" ? Gender::feminine : Gender::masculine;
    f.number = number == "B"   ? Number::dual
               : number == "P" ? Number::plural
                               : Number::singular;
    f.tense = tense == "past"     ? Tense::past
              : tense == "future" ? Tense::future
              : tense == "none"   ? Tense::none
                                  : Tense::present;
    f.polarity = negative ? Polarity::negative : Polarity::affirmative;
    f.noun_case = ncase == "acc"   ? Case::accusative
                  : ncase == "gen" ? Case::genitive
                                   : Case::nominative;
    f.definiteness = definiteness == "def"     ? Definiteness::definite
                     : definiteness == "annex" ? Definiteness::by_annexation
                                               : Definiteness::indefinite;
    f.humanness = e->human ? Humanness::human : Humanness::non_human;

    auto emit = [&](const std::string& label, const std::string& form) {
        if (opt.as_json) {
            json out = {{"form", form}};
            if (!label.empty()) out["reading"] = label;
            std::cout << out.dump() << "\n";
        } else {
            if (!label.empty()) std::cout << label << "\t";
            std::cout << form << "\n";
        }
    };
    auto one = [&](const FeatureBundle& fb) {
        return e->pos == PartOfSpeech::verb ? conjugate(*e, fb)
                                            : inflect_noun(*e, fb);
    };
    if (variants && e->pos == PartOfSpeech::verb) {
        for (const PronounRef& p : paradigm_rows()) {
            FeatureBundle fb = f;
            fb.person = p.person;
            fb.gender = p.gender;
            fb.number = p.number;
            emit(to_string(p.person) + "/" + to_string(p.gender) + "/" +
                     to_string(p.number),
                 one(fb));
        }
    } else {
        emit("", one(f));
    }
    return 0;
}

// --- index / search / eval -------------------------------------------------

int cmd_index(const Options& opt, const std::string& dir,
              const std::string& out_path, bool surface) {
    std::vector<std::pair<std::string, std::string>> docs;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".txt")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw std::runtime_error("no .txt documents in '" + dir + "'");
    for (const fs::path& p : files) {
        std::ifstream in(p);
        std::ostringstream ss;
        ss << in.rdbuf();
        docs.emplace_back(p.stem().string(), ss.str());
    }
    Index ix = build_index(lexicon(opt), docs, !surface);
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    save_index(ix, out);
    if (opt.as_json)
        std::cout << json{{"documents", ix.docs.size()},
                          {"terms", ix.total_terms()},
                          {"distinct", ix.distinct_terms()}}
                         .dump()
                  << "\n";
    else
        std::cout << ix.docs.size() << " documents, " << ix.total_terms()
                  << " terms, " << ix.distinct_terms() << " distinct\n";
    return 0;
}

Index load_index_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IndexError("cannot open index '" + path + "'");
    return load_index(in);
}

int cmd_search(const Options& opt, const std::string& index_path,
               const std::string& query, bool english, int threshold) {
    Index ix = load_index_file(index_path);
    const auto terms =
        english ? query_terms_english(lexicon(opt), query, ix.stemmed)
                : query_terms_arabic(lexicon(opt), query, ix.stemmed);
    if (opt.trace)
        for (const std::string& t : terms) std::cerr << "term: " << t << "\n";
    auto hits = run_query(ix, terms, threshold);
    if (opt.as_json) {
        json out = json::array();
        for (const SearchHit& h : hits)
            out.push_back({{"id", h.id}, {"score", h.score}});
        std::cout << out.dump() << "\n";
    } else {
        for (const SearchHit& h : hits)
            std::cout << h.id << "\t" << h.score << "\n";
    }
    return 0;
}

// Judgment file: query-id <TAB> arabic query <TAB> comma-separated relevant
// document ids.
int cmd_eval(const Options& opt, const std::string& index_path,
             const std::string& judgments, int threshold) {
    Index ix = load_index_file(index_path);
    json out = json::array();
    for (const std::string& line : read_lines(judgments)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::string qid, query, rel;
        if (!std::getline(is, qid, '\t') || !std::getline(is, query, '\t') ||
            !std::getline(is, rel, '\t'))
            throw std::runtime_error("bad judgment line: " + line);
        std::set<std::string> relevant;
        std::istringstream rs(rel);
        std::string id;
        while (std::getline(rs, id, ',')) relevant.insert(id);
        auto hits = run_query(
            ix, query_terms_arabic(lexicon(opt), query, ix.stemmed),
            threshold);
        MetricsReport m = evaluate_query(hits, relevant);
        std::vector<std::string> ranked;
        for (const SearchHit& h : hits) ranked.push_back(h.id);
        auto curve = eleven_point_curve(ranked, relevant);
        if (opt.as_json) {
            out.push_back({{"query", qid},
                           {"precision", m.precision},
                           {"recall", m.recall},
                           {"silence", m.silence},
                           {"noise", m.noise},
                           {"curve", curve}});
        } else {
            std::cout << qid << "\tprecision=" << m.precision
                      << "\trecall=" << m.recall << "\tsilence=" << m.silence
                      << "\tnoise=" << m.noise << "\n";
        }
    }
    if (opt.as_json) std::cout << out.dump() << "\n";
    return 0;
}

// --- bleu ------------------------------------------------------------------

int cmd_bleu(const Options& opt, const std::string& hyp_path,
             const std::vector<std::string>& ref_paths,
             const std::string& hyp2_path, int max_n, bool segments,
             bool preserve_case) {
    const auto hyp = read_lines(hyp_path);
    std::vector<std::vector<std::string>> refs;
    for (const std::string& p : ref_paths) {
        refs.push_back(read_lines(p));
        if (refs.back().size() != hyp.size())
            throw std::runtime_error(
                "line count mismatch: '" + hyp_path + "' has " +
                std::to_string(hyp.size()) + " lines, '" + p + "' has " +
                std::to_string(refs.back().size()));
    }
    std::vector<std::string> hyp2;
    if (!hyp2_path.empty()) {
        hyp2 = read_lines(hyp2_path);
        if (hyp2.size() != hyp.size())
            throw std::runtime_error("line count mismatch with '" +
                                     hyp2_path + "'");
    }
    auto refs_for = [&](size_t i) {
        std::vector<std::string> out;
        for (const auto& r : refs) out.push_back(r[i]);
        return out;
    };
    BleuScorer scorer(static_cast<size_t>(max_n), !preserve_case);
    BleuScorer scorer2(static_cast<size_t>(max_n), !preserve_case);
    json seg_out = json::array();
    for (size_t i = 0; i < hyp.size(); ++i) {
        scorer.add(hyp[i], refs_for(i));
        if (!hyp2.empty()) scorer2.add(hyp2[i], refs_for(i));
        if (!segments) continue;
        const double s1 = scorer.sentence_score(hyp[i], refs_for(i));
        if (opt.as_json) {
            json rec = {{"segment", i + 1}, {"score", s1}};
            if (!hyp2.empty()) {
                const double s2 = scorer.sentence_score(hyp2[i], refs_for(i));
                rec["score2"] = s2;
                rec["delta"] = s1 - s2;
            }
            seg_out.push_back(rec);
        } else {
            std::cout << "segment " << i + 1 << "\t" << s1;
            if (!hyp2.empty()) {
                const double s2 = scorer.sentence_score(hyp2[i], refs_for(i));
                std::cout << "\t" << s2 << "\tdelta=" << s1 - s2;
            }
            std::cout << "\n";
        }
    }
    auto corpus_json = [&](const BleuScorer& s) {
        json out = {{"score", s.score()},
                    {"candidate_length", s.candidate_length()},
                    {"reference_length", s.reference_length()},
                    {"brevity_penalty",
                     brevity_penalty(s.candidate_length(),
                                     s.reference_length())}};
        json ps = json::array();
        for (int n = 1; n <= max_n; ++n) {
            const Rational p = s.precision(static_cast<size_t>(n));
            ps.push_back({{"n", n}, {"num", p.num}, {"den", p.den}});
        }
        out["precisions"] = ps;
        return out;
    };
    if (opt.as_json) {
        json out = {{"corpus", corpus_json(scorer)}};
        if (!hyp2.empty()) out["corpus2"] = corpus_json(scorer2);
        if (segments) out["segments"] = seg_out;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "BLEU " << scorer.score() << " (c=" <<
            scorer.candidate_length() << ", r=" << scorer.reference_length()
                  << ")\n";
        for (int n = 1; n <= max_n; ++n) {
            const Rational p = scorer.precision(static_cast<size_t>(n));
            std::cout << "p" << n << " = " << p.num << "/" << p.den << "\n";
        }
        if (!hyp2.empty())
            std::cout << "BLEU(2) " << scorer2.score() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"English to Arabic rule-based translation, Arabic "
                 "morphology and retrieval toolkit"};
    app.require_subcommand(1);

    Options opt;
    const char* env = std::getenv("NAQIL_LEXICON");
    opt.lexicon_dir = env ? env : "data/lexicon";
    app.add_option("--lexicon", opt.lexicon_dir,
                   "Lexicon directory (default: $NAQIL_LEXICON or "
                   "data/lexicon)");
    app.add_flag("--json", opt.as_json, "Machine-readable output");
    app.add_flag("--trace", opt.trace, "Diagnostic detail on stderr");

    // translate
    auto* tr = app.add_subcommand(
        "translate", "Tagged English to Arabic (argv or one line per stdin "
                     "line)");
    std::vector<std::string> tr_args;
    bool tr_variants = false;
    tr->add_option("sentence", tr_args, "Tagged sentence");
    tr->add_flag("--variants", tr_variants,
                 "All readings of ambiguous pronouns");

    // analyze
    auto* an = app.add_subcommand(
        "analyze", "Morphological analysis of Arabic text");
    std::vector<std::string> an_args;
    bool an_all = false;
    an->add_option("text", an_args, "Arabic text");
    an->add_flag("--all", an_all, "Print every candidate segmentation");

    // generate
    auto* ge = app.add_subcommand("generate", "Inflect one lexicon word");
    std::string ge_word, ge_gender = "M", ge_number = "S",
                         ge_tense = "present", ge_case = "nom",
                         ge_def = "indef";
    int ge_person = 3;
    bool ge_negative = false, ge_variants = false;
    ge->add_option("word", ge_word,
                   "English word, Arabic lemma or Arabic root")->required();
    ge->add_option("--person", ge_person, "1, 2 or 3")
        ->check(CLI::Range(1, 3));
    ge->add_option("--gender", ge_gender, "M or F")
        ->check(CLI::IsMember({"M", "F"}));
    ge->add_option("--number", ge_number, "S, B (dual) or P")
        ->check(CLI::IsMember({"S", "B", "P"}));
    ge->add_option("--tense", ge_tense, "present, past, future or none")
        ->check(CLI::IsMember({"present", "past", "future", "none"}));
    ge->add_flag("--negative", ge_negative, "Negated form");
    ge->add_option("--case", ge_case, "nom, acc or gen")
        ->check(CLI::IsMember({"nom", "acc", "gen"}));
    ge->add_option("--definiteness", ge_def, "def, indef or annex")
        ->check(CLI::IsMember({"def", "indef", "annex"}));
    ge->add_flag("--variants", ge_variants, "All 13 paradigm rows (verbs)");

    // index
    auto* ixc = app.add_subcommand(
        "index", "Build an inverted lemma index over a directory of .txt "
                 "files");
    std::string ix_dir, ix_out = "index.txt";
    bool ix_surface = false;
    ixc->add_option("dir", ix_dir, "Document directory")->required();
    ixc->add_option("-o,--output", ix_out, "Index file");
    ixc->add_flag("--surface", ix_surface,
                  "Index surface forms instead of lemmas");

    // search
    auto* se = app.add_subcommand("search", "Query a saved index");
    std::string se_index, se_query;
    bool se_english = false;
    int se_threshold = 1;
    se->add_option("index", se_index, "Index file")->required();
    se->add_option("query", se_query, "Query text")->required();
    se->add_flag("--english", se_english,
                 "Translate the query through the bilingual lexicon");
    se->add_option("--threshold", se_threshold, "Minimum score");

    // eval
    auto* ev = app.add_subcommand(
        "eval", "Score an index against relevance judgments");
    std::string ev_index, ev_judgments;
    int ev_threshold = 1;
    ev->add_option("index", ev_index, "Index file")->required();
    ev->add_option("judgments", ev_judgments,
                   "TSV: id, query, comma-separated relevant ids")
        ->required();
    ev->add_option("--threshold", ev_threshold, "Minimum score");

    // bleu
    auto* bl = app.add_subcommand("bleu", "Corpus and per-segment BLEU");
    std::string bl_hyp, bl_hyp2;
    std::vector<std::string> bl_refs;
    int bl_n = 4;
    bool bl_segments = false, bl_preserve = false;
    bl->add_option("--hyp", bl_hyp, "Hypothesis file")->required();
    bl->add_option("--ref", bl_refs, "Reference file (repeatable)")
        ->required();
    bl->add_option("--hyp2", bl_hyp2, "Second hypothesis for comparison");
    bl->add_option("-n", bl_n, "Maximum n-gram order")
        ->check(CLI::Range(1, 9));
    bl->add_flag("--segments", bl_segments, "Per-segment scores");
    bl->add_flag("--preserve-case", bl_preserve,
                 "Keep Latin-script casing");

    // Let --lexicon/--json/--trace appear after the subcommand name too.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) {
             return true;
         }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*tr) return cmd_translate(opt, tr_args, tr_variants);
        if (*an) return cmd_analyze(opt, an_args, an_all);
        if (*ge)
            return cmd_generate(opt, ge_word, ge_person, ge_gender, ge_number,
                                ge_tense, ge_negative, ge_case, ge_def,
                                ge_variants);
        if (*ixc) return cmd_index(opt, ix_dir, ix_out, ix_surface);
        if (*se)
            return cmd_search(opt, se_index, se_query, se_english,
                              se_threshold);
        if (*ev) return cmd_eval(opt, ev_index, ev_judgments, ev_threshold);
        if (*bl)
            return cmd_bleu(opt, bl_hyp, bl_refs, bl_hyp2, bl_n, bl_segments,
                            bl_preserve);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
