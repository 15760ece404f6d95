#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <naqil/analyzer.hpp>

using namespace naqil;

static const Lexicon& lex() {
    static Lexicon l = Lexicon::load(NAQIL_DATA_DIR "/lexicon");
    return l;
}

TEST_CASE("scheme match recovers the root") {
    auto m = match_scheme("صالح", lex());
    REQUIRE(m.size() == 1);
    CHECK(m[0].first->pattern == "فاعل");
    CHECK(m[0].second == "صلح");

    m = match_scheme("مفاتيح", lex());
    REQUIRE(m.size() == 1);
    CHECK(m[0].first->pattern == "مفاعيل");
    CHECK(m[0].second == "فتح");

    m = match_scheme("كتب", lex());
    REQUIRE(m.size() == 1);
    CHECK(m[0].second == "كتب");
}

TEST_CASE("scheme requires the pattern letter at infix positions") {
    // second letter is not alif, so فاعل does not fit
    CHECK(match_scheme("صديق", lex()).empty());
    CHECK(match_scheme("تحرى", lex()).empty());
}

TEST_CASE("segmentation always includes the trivial split") {
    for (std::string w : {"كتب", "المعلم", "و", "من"}) {
        auto segs = segment(normalize_arabic(w), lex());
        bool trivial = false;
        for (const auto& s : segs)
            if (s.proclitic.empty() && s.prefix.empty() && s.suffix.empty() &&
                s.enclitic.empty() && s.base == normalize_arabic(w))
                trivial = true;
        CHECK(trivial);
    }
}

TEST_CASE("every candidate reassembles to the input") {
    for (std::string w : {"المعلمون", "بالصدق", "يكتبون", "مفاتيحهم",
                          "وسيكتبونها", "للفقراء"}) {
        std::string norm = normalize_arabic(w);
        auto segs = segment(norm, lex());
        CHECK(segs.size() > 1);
        for (const auto& s : segs) CHECK(s.reassemble() == norm);
    }
}

TEST_CASE("incompatible splits are pruned") {
    // ال cannot combine with a pronoun enclitic
    for (const auto& s : segment("المعلمه", lex())) {
        if (s.proclitic == "ال") CHECK(s.enclitic.empty());
    }
}

TEST_CASE("inflections of one lemma share an index key") {
    CHECK(lemma_of("المعلم", lex()) == "معلم");
    CHECK(lemma_of("المعلمات", lex()) == "معلم");
    CHECK(lemma_of("المعلمون", lex()) == "معلم");
    CHECK(lemma_of("معلم", lex()) == "معلم");
}

TEST_CASE("preferred analysis picks the scheme reading") {
    Analysis a = best_analysis("بالصدق", lex());
    CHECK(a.seg.proclitic == "بال");
    CHECK(a.root == "صدق");
    CHECK(a.lemma == "صدق");

    a = best_analysis("مفاتيح", lex());
    CHECK(a.scheme == "مفاعيل");
    CHECK(a.root == "فتح");
}

TEST_CASE("verb surface forms") {
    Analysis a = best_analysis("يكتبون", lex());
    CHECK(a.seg.prefix == "ي");
    CHECK(a.seg.suffix == "ون");
    CHECK(a.root == "كتب");

    a = best_analysis("كتبوا", lex());
    CHECK(a.seg.suffix == "وا");
    CHECK(a.lemma == "كتب");
}

TEST_CASE("short words are not segmented") {
    auto segs = segment("من", lex());
    REQUIRE(segs.size() == 1);
    CHECK(segs[0].base == "من");
}

TEST_CASE("diacritics are ignored by analysis") {
    CHECK(lemma_of("قولاً", lex()) == lemma_of("قولا", lex()));
    CHECK(best_analysis("الرَّجُل", lex()).lemma == "رجل");
}

TEST_CASE("occurrences of the divine name share one key") {
    CHECK(lemma_of("الله", lex()) == lemma_of("لله", lex()));
}

TEST_CASE("segment traits") {
    auto t = features_of(best_analysis("سيكتبون", lex()));
    auto has = [&](const char* f) {
        return std::find(t.begin(), t.end(), f) != t.end();
    };
    CHECK(has("tense:future"));
    CHECK(has("subject:3/M"));
    CHECK(has("subject:P/M"));

    t = features_of(best_analysis("كتابها", lex()));
    CHECK(std::find(t.begin(), t.end(), "pronoun:3/F/S") != t.end());
}
