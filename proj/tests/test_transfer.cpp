#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <naqil/transfer.hpp>

using namespace naqil;

static const Lexicon& lex() {
    static Lexicon l = Lexicon::load(NAQIL_DATA_DIR "/lexicon");
    return l;
}

static Clause parse(const std::string& s) { return transfer_clause(lex(), s); }

TEST_CASE("tagged tokens") {
    auto toks = parse_tagged("The_DT boy_NN wrote_VBD ._.");
    REQUIRE(toks.size() == 4);
    CHECK(toks[0].word == "The");
    CHECK(toks[0].tag == "DT");
    CHECK(toks[3].tag == ".");

    CHECK_THROWS_AS(parse_tagged("boy"), TranslationError);
    CHECK_THROWS_AS(parse_tagged("boy_XX"), TranslationError);
    CHECK_THROWS_AS(parse_tagged(""), TranslationError);
    // bare sentence punctuation is tolerated
    CHECK(parse_tagged("boy_NN ?").back().tag == ".");
}

TEST_CASE("regular inflections reach the lexicon") {
    auto c = detail::lemma_candidates("writes", "VBZ");
    CHECK(std::find(c.begin(), c.end(), "write") != c.end());
    c = detail::lemma_candidates("teachers", "NNS");
    CHECK(std::find(c.begin(), c.end(), "teacher") != c.end());
    c = detail::lemma_candidates("stories", "NNS");
    CHECK(std::find(c.begin(), c.end(), "story") != c.end());
    c = detail::lemma_candidates("arrived", "VBD");
    CHECK(std::find(c.begin(), c.end(), "arrive") != c.end());
    c = detail::lemma_candidates("writing", "VBG");
    CHECK(std::find(c.begin(), c.end(), "write") != c.end());
}

TEST_CASE("simple verbal clause") {
    Clause c = parse("The_DT boy_NN wrote_VBD the_DT lesson_NN ._.");
    CHECK(c.kind == Clause::Kind::verbal);
    CHECK(c.tense == Tense::past);
    CHECK(c.polarity == Polarity::affirmative);
    REQUIRE(c.verb != nullptr);
    CHECK(c.verb->root == "كتب");
    REQUIRE(c.subject.items.size() == 1);
    CHECK(c.subject.items[0].chain[0].head->lemma == "ولد");
    REQUIRE(c.object.items.size() == 1);
    CHECK(c.object.items[0].chain[0].head->lemma == "درس");
    CHECK(c.object.items[0].chain[0].def == Definiteness::definite);
}

TEST_CASE("pronoun subject and tense auxiliaries") {
    Clause c = parse("I_PRP will_MD write_VB the_DT lesson_NN ._.");
    CHECK(c.tense == Tense::future);
    REQUIRE(c.subject_pron.has_value());
    CHECK(c.subject_pron->ref.person == Person::first);

    c = parse("She_PRP writes_VBZ the_DT lesson_NN ._.");
    CHECK(c.tense == Tense::present);
    CHECK(c.subject_pron->ref.gender == Gender::feminine);
}

TEST_CASE("do-support negation") {
    Clause c = parse("The_DT boy_NN did_VBD not_RB write_VB the_DT lesson_NN ._.");
    CHECK(c.tense == Tense::past);
    CHECK(c.polarity == Polarity::negative);

    c = parse("The_DT boy_NN does_VBZ not_RB write_VB the_DT lesson_NN ._.");
    CHECK(c.tense == Tense::present);
    CHECK(c.polarity == Polarity::negative);

    c = parse("The_DT boy_NN will_MD not_RB write_VB the_DT lesson_NN ._.");
    CHECK(c.tense == Tense::future);
    CHECK(c.polarity == Polarity::negative);
}

TEST_CASE("perfect flattens onto the past") {
    Clause c = parse("The_DT boy_NN has_VBZ written_VBN the_DT lesson_NN ._.");
    CHECK(c.kind == Clause::Kind::verbal);
    CHECK(c.tense == Tense::past);
}

TEST_CASE("progressive flattens onto the future") {
    Clause c = parse("The_DT boy_NN is_VBZ writing_VBG the_DT lesson_NN ._.");
    CHECK(c.kind == Clause::Kind::verbal);
    CHECK(c.tense == Tense::future);
}

TEST_CASE("participle without a verb entry reads as a predicate") {
    Clause c = parse("The_DT men_NNS are_VBP standing_VBG ._.");
    CHECK(c.kind == Clause::Kind::nominal);
    REQUIRE(c.pred_adjectives.size() == 1);
    CHECK(c.pred_adjectives[0]->lemma == "واقف");
}

TEST_CASE("nominal clause tenses") {
    Clause c = parse("The_DT teacher_NN is_VBZ big_JJ ._.");
    CHECK(c.kind == Clause::Kind::nominal);
    CHECK(c.tense == Tense::present);

    c = parse("The_DT teacher_NN was_VBD big_JJ ._.");
    CHECK(c.tense == Tense::past);

    c = parse("The_DT teacher_NN will_MD be_VB big_JJ ._.");
    CHECK(c.tense == Tense::future);

    c = parse("The_DT teacher_NN is_VBZ not_RB big_JJ ._.");
    CHECK(c.polarity == Polarity::negative);
}

TEST_CASE("passive clause") {
    Clause c = parse("The_DT teachers_NNS were_VBD honored_VBN ._.");
    CHECK(c.kind == Clause::Kind::passive);
    REQUIRE(c.verb != nullptr);
    CHECK(c.verb->root == "كرم");
}

TEST_CASE("fronted auxiliary makes an interrogative") {
    Clause c = parse("Did_VBD the_DT boy_NN write_VB the_DT lesson_NN ?");
    CHECK(c.mood == Mood::interrogative);
    CHECK(c.tense == Tense::past);

    c = parse("Is_VBZ the_DT teacher_NN big_JJ ?");
    CHECK(c.mood == Mood::interrogative);
    CHECK(c.kind == Clause::Kind::nominal);
}

TEST_CASE("annexation from 's and of") {
    Clause c = parse("The_DT key_NN of_IN the_DT door_NN ._.");
    CHECK(c.kind == Clause::Kind::fragment);
    REQUIRE(c.subject.items.size() == 1);
    const auto& chain = c.subject.items[0].chain;
    REQUIRE(chain.size() == 2);
    CHECK(chain[0].head->lemma == "مفتاح");
    CHECK(chain[1].head->lemma == "باب");

    c = parse("The_DT boy_NN 's_POS book_NN ._.");
    const auto& ch2 = c.subject.items[0].chain;
    REQUIRE(ch2.size() == 2);
    CHECK(ch2[0].head->lemma == "كتاب");
    CHECK(ch2[1].head->lemma == "ولد");
}

TEST_CASE("noun-noun compound becomes annexation") {
    Clause c = parse("The_DT house_NN key_NN ._.");
    const auto& chain = c.subject.items[0].chain;
    REQUIRE(chain.size() == 2);
    CHECK(chain[0].head->lemma == "مفتاح");
    CHECK(chain[1].head->lemma == "بيت");
    CHECK(chain[1].def == Definiteness::definite);
}

TEST_CASE("bare plurals are definite, bare singulars indefinite") {
    Clause c = parse("Men_NNS are_VBP standing_VBG ._.");
    CHECK(c.subject.items[0].chain[0].def == Definiteness::definite);

    c = parse("A_DT boy_NN wrote_VBD a_DT lesson_NN ._.");
    CHECK(c.subject.items[0].chain[0].def == Definiteness::indefinite);
    CHECK(c.object.items[0].chain[0].def == Definiteness::indefinite);
}

TEST_CASE("coordination") {
    Clause c = parse("The_DT boy_NN and_CC the_DT girl_NN went_VBD to_TO "
                     "the_DT school_NN ._.");
    CHECK(c.subject.items.size() == 2);
    REQUIRE(c.preposition != nullptr);
    CHECK(c.preposition->lemma == "ل");
    CHECK(c.pp_object.items[0].chain[0].head->lemma == "مدرسة");
}

TEST_CASE("counts and ordinals") {
    Clause c = parse("Three_CD books_NNS ._.");
    const NPTerm& t = c.subject.items[0].chain[0];
    REQUIRE(t.count.has_value());
    CHECK(*t.count == 3);

    c = parse("Two_CD teachers_NNS ._.");
    CHECK(c.subject.items[0].chain[0].number == Number::dual);

    c = parse("The_DT first_JJ book_NN ._.");
    const NPTerm& o = c.subject.items[0].chain[0];
    REQUIRE(o.ordinal.has_value());
    CHECK(o.ordinal->value == 1);

    c = parse("The_DT twenty_CD first_JJ book_NN ._.");
    const NPTerm& tf = c.subject.items[0].chain[0];
    REQUIRE(tf.ordinal.has_value());
    REQUIRE(tf.ordinal_tens.has_value());
    CHECK(*tf.ordinal_tens == 20);
}

TEST_CASE("pure number clause") {
    Clause c = parse("1435_CD ._.");
    CHECK(c.kind == Clause::Kind::number);
    CHECK(c.number_value == 1435);

    c = parse("one_CD thousand_CD four_CD hundred_CD thirty_CD five_CD ._.");
    CHECK(c.number_value == 1435);
}

TEST_CASE("object pronoun") {
    Clause c = parse("The_DT teacher_NN honored_VBD them_PRP ._.");
    REQUIRE(c.object_pron.has_value());
    CHECK(c.object_pron->ref.person == Person::third);
    CHECK(c.object_pron->ref.number == Number::plural);
}

TEST_CASE("unknown vocabulary is an error") {
    CHECK_THROWS_AS(parse("The_DT zeppelin_NN flew_VBD ._."), TranslationError);
}
