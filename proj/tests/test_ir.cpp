#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <naqil/ir.hpp>
#include <sstream>

using namespace naqil;

namespace {

const Lexicon& lex() {
    static Lexicon l = Lexicon::load(NAQIL_DATA_DIR "/lexicon");
    return l;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Three short texts that all speak about teachers, each with a different
// inflection of the same lemma.
std::vector<std::pair<std::string, std::string>> teacher_docs() {
    return {
        {"a", "حضر المعلم الدرس"},
        {"b", "كتبت المعلمات الدرس"},
        {"c", "حضر المعلمون الدرس"},
    };
}

}  // namespace

TEST_CASE("reference text indexes to the expected term counts") {
    const std::string text =
        read_file(NAQIL_DATA_DIR "/corpus/illustration.txt");
    Index ix = build_index(lex(), {{"t", text}}, true);
    CHECK(ix.total_terms() == 72);
    CHECK(ix.distinct_terms() == 43);

    // A few groups that only merge because inflections share a lemma.
    CHECK(ix.postings.count("صدق") == 1);
    CHECK(ix.postings.count("قول") == 1);
    CHECK(ix.postings.count("كذب") == 1);
}

TEST_CASE("query reduction strips clitics and stop words") {
    auto terms = query_terms_arabic(lex(), "الصدق في القول", true);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0] == "صدق");
    CHECK(terms[1] == "قول");
}

TEST_CASE("lemma index retrieves every inflection, surface index none") {
    Index stemmed = build_index(lex(), teacher_docs(), true);
    Index surface = build_index(lex(), teacher_docs(), false);

    auto qs = query_terms_arabic(lex(), "معلم", true);
    auto hits = run_query(stemmed, qs);
    CHECK(hits.size() == 3);

    auto qr = query_terms_arabic(lex(), "معلم", false);
    CHECK(run_query(surface, qr).empty());
}

TEST_CASE("english queries go through the bilingual lexicon") {
    Index ix = build_index(lex(), teacher_docs(), true);
    auto terms = query_terms_english(lex(), "teachers", true);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0] == "معلم");
    CHECK(run_query(ix, terms).size() == 3);
    CHECK_THROWS_AS(query_terms_english(lex(), "zzzz", true), IndexError);
}

TEST_CASE("score threshold filters weak matches") {
    Index ix = build_index(lex(), teacher_docs(), true);
    auto terms = query_terms_arabic(lex(), "حضر المعلم", true);
    // Docs a and c mention both attendance and the teacher; doc b only
    // the teacher.
    auto all = run_query(ix, terms, 1);
    CHECK(all.size() == 3);
    auto strong = run_query(ix, terms, 2);
    REQUIRE(strong.size() == 2);
    CHECK(strong[0].score == 2);
    CHECK(strong[1].score == 2);
}

TEST_CASE("retrieval metrics from raw counts") {
    MetricsReport m = evaluate_counts(9, 14, 12);
    CHECK(m.precision == doctest::Approx(9.0 / 14.0));
    CHECK(m.recall == doctest::Approx(0.75));
    CHECK(m.silence == doctest::Approx(0.25));
    CHECK(m.noise == doctest::Approx(1.0 - 9.0 / 14.0));
    CHECK(accuracy(69, 72) == doctest::Approx(69.0 / 72.0));
    CHECK(evaluate_counts(0, 0, 5).precision == 0.0);
}

TEST_CASE("evaluate_query counts relevant hits") {
    Index ix = build_index(lex(), teacher_docs(), true);
    auto hits = run_query(ix, query_terms_arabic(lex(), "معلم", true));
    MetricsReport m = evaluate_query(hits, {"a", "b"});
    CHECK(m.precision == doctest::Approx(2.0 / 3.0));
    CHECK(m.recall == doctest::Approx(1.0));
}

TEST_CASE("eleven point interpolated precision") {
    // Perfect ranking: flat curve at 1.
    auto flat = eleven_point_curve({"a", "b"}, {"a", "b"});
    for (double p : flat) CHECK(p == doctest::Approx(1.0));

    auto curve = eleven_point_curve({"a", "x", "b", "y"}, {"a", "b"});
    CHECK(curve[0] == doctest::Approx(1.0));
    CHECK(curve[10] == doctest::Approx(2.0 / 3.0));
    for (size_t i = 1; i < curve.size(); ++i)
        CHECK(curve[i] <= curve[i - 1] + 1e-12);
}

TEST_CASE("index persistence round trip") {
    Index ix = build_index(lex(), teacher_docs(), true);
    std::stringstream buf;
    save_index(ix, buf);
    Index back = load_index(buf);
    CHECK(back.stemmed == ix.stemmed);
    CHECK(back.total_terms() == ix.total_terms());
    CHECK(back.postings == ix.postings);
    REQUIRE(back.docs.size() == 3);
    CHECK(back.docs[1].id == "b");

    std::stringstream bad("not-an-index 9\n");
    CHECK_THROWS_AS(load_index(bad), IndexError);
}
