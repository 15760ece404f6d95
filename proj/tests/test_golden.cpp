#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <naqil/pipeline.hpp>

using namespace naqil;

// End-to-end sentences; every output is compared byte for byte.

static const Lexicon& lex() {
    static Lexicon l = Lexicon::load(NAQIL_DATA_DIR "/lexicon");
    return l;
}

struct Golden {
    const char* english;
    const char* arabic;
};

static const Golden kGolden[] = {
    // tense family of a sound verb
    {"The_DT boy_NN wrote_VBD the_DT lesson_NN ._.", "كتب الولد الدرس"},
    {"The_DT boy_NN writes_VBZ the_DT lesson_NN ._.", "يكتب الولد الدرس"},
    {"The_DT boy_NN will_MD write_VB the_DT lesson_NN ._.",
     "سيكتب الولد الدرس"},
    {"I_PRP wrote_VBD the_DT lesson_NN ._.", "كتبت الدرس"},
    {"I_PRP write_VBP a_DT lesson_NN ._.", "أكتب درسا"},
    {"I_PRP will_MD write_VB the_DT lesson_NN ._.", "سأكتب الدرس"},
    {"She_PRP writes_VBZ the_DT lesson_NN ._.", "تكتب الدرس"},
    {"We_PRP write_VBP the_DT lesson_NN ._.", "نكتب الدرس"},
    {"They_PRP wrote_VBD the_DT lesson_NN ._.", "كتبوا الدرس"},

    // negation
    {"The_DT boy_NN does_VBZ not_RB write_VB the_DT lesson_NN ._.",
     "لا يكتب الولد الدرس"},
    {"The_DT boy_NN did_VBD not_RB write_VB the_DT lesson_NN ._.",
     "لم يكتب الولد الدرس"},
    {"The_DT boy_NN will_MD not_RB write_VB the_DT lesson_NN ._.",
     "لن يكتب الولد الدرس"},
    {"He_PRP did_VBD not_RB say_VB the_DT truth_NN ._.", "لم يقل الحق"},

    // interrogatives
    {"Did_VBD the_DT boy_NN write_VB the_DT lesson_NN ?",
     "هل كتب الولد الدرس؟"},
    {"Will_MD the_DT boy_NN write_VB the_DT lesson_NN ?",
     "هل سيكتب الولد الدرس؟"},
    {"Is_VBZ the_DT teacher_NN big_JJ ?", "هل المعلم كبير؟"},

    // auxiliary flattening
    {"The_DT boy_NN has_VBZ written_VBN the_DT lesson_NN ._.",
     "كتب الولد الدرس"},
    {"The_DT boy_NN is_VBZ writing_VBG the_DT lesson_NN ._.",
     "سيكتب الولد الدرس"},

    // nominal sentences
    {"The_DT teacher_NN is_VBZ big_JJ ._.", "المعلم كبير"},
    {"The_DT teacher_NN was_VBD big_JJ ._.", "كان المعلم كبيرا"},
    {"The_DT teacher_NN will_MD be_VB big_JJ ._.", "سيصبح المعلم كبيرا"},
    {"The_DT teacher_NN is_VBZ not_RB big_JJ ._.", "ليس المعلم كبيرا"},
    {"The_DT teacher_NN was_VBD not_RB big_JJ ._.", "لم يكن المعلم كبيرا"},
    {"The_DT teacher_NN will_MD not_RB be_VB big_JJ ._.",
     "لن يصبح المعلم كبيرا"},
    {"The_DT car_NN is_VBZ big_JJ ._.", "السيارة كبيرة"},
    {"The_DT car_NN was_VBD big_JJ ._.", "كانت السيارة كبيرة"},
    {"The_DT books_NNS are_VBP useful_JJ ._.", "الكتب مفيدة"},
    {"Men_NNS are_VBP standing_VBG ._.", "الرجال واقفون"},

    // noun phrases
    {"The_DT big_JJ teacher_NN ._.", "المعلم الكبير"},
    {"A_DT beautiful_JJ big_JJ car_NN ._.", "سيارة كبيرة جميلة"},
    {"The_DT key_NN of_IN the_DT door_NN of_IN the_DT house_NN ._.",
     "مفتاح باب البيت"},
    {"The_DT house_NN key_NN ._.", "مفتاح البيت"},
    {"The_DT boy_NN 's_POS book_NN ._.", "كتاب الولد"},
    {"My_PRP$ book_NN ._.", "كتابي"},
    {"The_DT first_JJ book_NN ._.", "الكتاب الأول"},
    {"The_DT twenty_CD first_JJ book_NN ._.", "الكتاب الواحد و العشرون"},
    {"Three_CD books_NNS ._.", "ثلاثة كتب"},
    {"The_DT two_CD teachers_NNS ._.", "المعلمان"},

    // prepositional fragments and complements
    {"With_IN the_DT book_NN ._.", "بالكتاب"},
    {"As_IN a_DT book_NN ._.", "ككتاب"},
    {"To_TO the_DT doctor_NN ._.", "للطبيب"},
    {"In_IN the_DT school_NN ._.", "في المدرسة"},
    {"The_DT boy_NN went_VBD to_TO the_DT school_NN ._.",
     "ذهب الولد للمدرسة"},
    {"The_DT boy_NN played_VBD in_IN the_DT garden_NN ._.",
     "لعب الولد في الحديقة"},
    {"The_DT boy_NN wrote_VBD the_DT lesson_NN quickly_RB ._.",
     "كتب الولد الدرس سريعا"},

    // weak verbs end to end
    {"The_DT boy_NN arrived_VBD ._.", "وصل الولد"},
    {"The_DT director_NN saw_VBD a_DT teacher_NN ._.", "رأى المدير معلما"},
    {"He_PRP forgot_VBD the_DT lesson_NN ._.", "نسي الدرس"},
    {"The_DT mother_NN slept_VBD ._.", "نامت الأم"},
    {"He_PRP visited_VBD the_DT school_NN ._.", "زار المدرسة"},

    // passive and object enclitics
    {"The_DT teachers_NNS were_VBD honored_VBN ._.", "كرم المعلمون"},
    {"The_DT teacher_NN honored_VBD them_PRP ._.", "كرمهم المعلم"},

    // coordination and numbers
    {"The_DT boy_NN and_CC the_DT girl_NN went_VBD to_TO the_DT school_NN ._.",
     "ذهب الولد و البنت للمدرسة"},
    {"1435_CD ._.", "ألف و أربع مائة و خمس و ثلاثون"},
};

TEST_CASE("golden sentences") {
    for (const Golden& g : kGolden) {
        CAPTURE(g.english);
        CHECK(translate(lex(), g.english).output == g.arabic);
    }
}

TEST_CASE("traces name the rules applied") {
    auto r = translate(lex(),
                       "The_DT boy_NN did_VBD not_RB write_VB the_DT "
                       "lesson_NN ._.");
    REQUIRE(!r.trace.empty());
    CHECK(r.trace[0] == "verb.past.negative");
}
