#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <naqil/lexicon.hpp>

#include <filesystem>
#include <fstream>

using namespace naqil;

static const Lexicon& lex() {
    static Lexicon l = Lexicon::load(NAQIL_DATA_DIR "/lexicon");
    return l;
}

TEST_CASE("resource files load") {
    const Lexicon& l = lex();
    CHECK(l.clitics.proclitics.size() >= 12);
    CHECK(l.clitics.enclitics.size() >= 10);
    CHECK(l.schemes.size() == 3);
    CHECK(l.entries.size() >= 150);
}

TEST_CASE("clitic lists are sorted longest first") {
    const auto& p = lex().clitics.proclitics;
    for (size_t i = 1; i < p.size(); ++i)
        CHECK(length_utf8(p[i - 1]) >= length_utf8(p[i]));
}

TEST_CASE("compatibility bans article plus pronoun") {
    const auto& l = lex();
    CHECK_FALSE(l.compat.clitics_compatible("ال", "ه"));
    CHECK_FALSE(l.compat.clitics_compatible("بال", "هم"));
    CHECK(l.compat.clitics_compatible("ب", "ه"));
    CHECK(l.compat.clitics_compatible("و", "نا"));
}

TEST_CASE("affix compatibility") {
    const auto& l = lex();
    // prefix ا (imperative seat) cannot take present plural endings
    CHECK_FALSE(l.compat.affixes_compatible("ا", "ون"));
    CHECK(l.compat.affixes_compatible("ي", "ون"));
    CHECK(l.compat.affixes_compatible("ت", "ين"));
}

TEST_CASE("bilingual lookup by english and pos") {
    const auto& l = lex();
    const LexEntry* e = l.find("book", PartOfSpeech::noun);
    REQUIRE(e != nullptr);
    CHECK(e->lemma == "كتاب");
    CHECK(e->plural == PluralClass::broken);
    CHECK(e->broken_plural == "كتب");

    const LexEntry* v = l.find("write", PartOfSpeech::verb);
    REQUIRE(v != nullptr);
    CHECK(v->root == "كتب");
    CHECK(v->verb_class == VerbClass::sound);
}

TEST_CASE("irregular english forms resolve to the same entry") {
    const auto& l = lex();
    const LexEntry* a = l.find("write", PartOfSpeech::verb);
    const LexEntry* b = l.find("wrote", PartOfSpeech::verb);
    REQUIRE(a != nullptr);
    REQUIRE(b != nullptr);
    CHECK(a->root == b->root);

    const LexEntry* m = l.find("men", PartOfSpeech::noun);
    REQUIRE(m != nullptr);
    CHECK(m->lemma == "رجل");
}

TEST_CASE("verb classes") {
    const auto& l = lex();
    CHECK(l.find("arrive", PartOfSpeech::verb)->verb_class == VerbClass::assimilated);
    CHECK(l.find("say", PartOfSpeech::verb)->verb_class == VerbClass::hollow);
    CHECK(l.find("forget", PartOfSpeech::verb)->verb_class == VerbClass::defective);
}

TEST_CASE("arabic lemma lookup") {
    const auto& l = lex();
    const LexEntry* e = l.find_arabic("معلم");
    REQUIRE(e != nullptr);
    CHECK(e->english == "teacher");
}

TEST_CASE("stop list membership") {
    const auto& l = lex();
    CHECK(l.is_stopword("في"));
    CHECK(l.is_stopword("معانيه"));
    CHECK_FALSE(l.is_stopword("قوله"));
    CHECK_FALSE(l.is_stopword("الفطن"));
    CHECK_FALSE(l.is_stopword("كتاب"));
}

TEST_CASE("schemes are keyed by length") {
    const auto& l = lex();
    CHECK(l.schemes_of_length(3).size() == 1);   // فعل
    CHECK(l.schemes_of_length(4).size() == 1);   // فاعل
    CHECK(l.schemes_of_length(6).size() == 1);   // مفاعيل
    CHECK(l.schemes_of_length(5).empty());
}

TEST_CASE("malformed rows are rejected with location") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "naqil_lex_bad";
    fs::create_directories(dir);
    for (const char* name : {"clitics.tsv", "compat.tsv", "schemes.tsv",
                             "bilingual.tsv", "stopwords.tsv"}) {
        std::ofstream out(dir / name);
        out << "# empty\n";
    }
    {
        std::ofstream out(dir / "bilingual.tsv");
        out << "book\tnoun\t-\n";  // too few fields
    }
    CHECK_THROWS_AS(Lexicon::load(dir.string()), LexiconError);
    fs::remove_all(dir);
}
