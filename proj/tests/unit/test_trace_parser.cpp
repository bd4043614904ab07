#include <gtest/gtest.h>

#include "naco/core/errors.hpp"
#include "naco/parse/trace_parser.hpp"
#include "test_support.hpp"

using namespace naco;
using parse::Verdict;

namespace {

const char* kWellFormed =
    "1. The sentence asks who directed a film, so it is a question. It is clear and grammatical.\n"
    "2. Step by step reasoning:\n"
    "   a. Step 1: Passage 1 says Jigokumon is a 1953 film.\n"
    "   b. Step 2: Passage 1 says it was directed by Teinosuke Kinugasa.\n"
    "   c. Step 3: So the director is Teinosuke Kinugasa.\n"
    "3. Answer: <ans> Teinosuke Kinugasa <ans>\n";

}  // namespace

TEST(ParseCot, NotAQuestionOnly) {
    const auto t = parse::parse_cot_response("not a question");
    EXPECT_EQ(t.verdict, Verdict::NotAQuestion);
    EXPECT_TRUE(t.steps.empty());
    EXPECT_FALSE(t.answer.has_value());
    EXPECT_FALSE(t.degraded.has_value());
}

TEST(ParseCot, WellFormedThreeSteps) {
    const auto t = parse::parse_cot_response(kWellFormed);
    EXPECT_EQ(t.verdict, Verdict::Ok);
    ASSERT_EQ(t.steps.size(), 3u);
    EXPECT_EQ(t.steps[0], "Passage 1 says Jigokumon is a 1953 film.");
    EXPECT_EQ(t.answer, "Teinosuke Kinugasa");
    EXPECT_FALSE(t.degraded.has_value());
    EXPECT_EQ(t.raw, kWellFormed);
}

TEST(ParseCot, MissingAnswerIsDegraded) {
    const std::string raw =
        "1. It is a question.\n2. Step by step reasoning:\n   a. Step 1: one.\n   b. Step 2: two.\n";
    const auto lenient = parse::parse_cot_response(raw);
    EXPECT_TRUE(lenient.degraded.has_value());
    EXPECT_EQ(lenient.steps.size(), 2u);
    try {
        parse::parse_cot_response_strict(raw);
        FAIL() << "expected ParseDegraded";
    } catch (const parse::ParseDegraded& e) {
        EXPECT_EQ(e.trace().steps.size(), 2u);
        EXPECT_FALSE(e.trace().answer.has_value());
    }
}

TEST(ParseCot, MissingStepBlockIsDegraded) {
    const auto t = parse::parse_cot_response("It is a question. <ans> Paris <ans>");
    EXPECT_EQ(t.verdict, Verdict::Ok);
    EXPECT_EQ(t.answer, "Paris");
    EXPECT_TRUE(t.steps.empty());
    EXPECT_TRUE(t.degraded.has_value());
    EXPECT_THROW(parse::parse_cot_response_strict("It is a question. <ans> Paris <ans>"), parse::ParseDegraded);
}

TEST(ParseCot, StrictAcceptsWellFormed) {
    EXPECT_EQ(parse::parse_cot_response_strict(kWellFormed).steps.size(), 3u);
}

TEST(ParseCot, UnnaturalVerdictClearsSteps) {
    const auto t = parse::parse_cot_response(
        "1. The sentence has grammar errors. Question unnatural.\n"
        "2. Step by step reasoning:\n   a. Step 1: something\n3. Answer: <ans> x <ans>\n");
    EXPECT_EQ(t.verdict, Verdict::Unnatural);
    EXPECT_TRUE(t.steps.empty());
    EXPECT_EQ(parse::count_reasoning_steps(t), 0);
}

TEST(ParseCot, NotAQuestionTakesPrecedence) {
    for (const char* raw : {"Question unnatural, and not a question.\n", "Not a question. Question unnatural.\n"}) {
        EXPECT_EQ(parse::parse_cot_response(raw).verdict, Verdict::NotAQuestion) << raw;
    }
}

TEST(ParseCot, VerdictPhrasesAfterSectionOneAreIgnored) {
    const auto t = parse::parse_cot_response(
        "1. It is a clear question.\n2. Step by step reasoning:\n"
        "   a. Step 1: The passage says the claim is not a question of taste.\n"
        "3. Answer: <ans> taste <ans>\n");
    EXPECT_EQ(t.verdict, Verdict::Ok);
    EXPECT_EQ(t.steps.size(), 1u);
}

TEST(ParseCot, AlternativeStepMarkers) {
    const auto t = parse::parse_cot_response(
        "1. It is a question.\n"
        "2. **Step-by-step reasoning:**\n"
        "- first fact\n"
        "* second fact\n"
        "\xE2\x80\xA2 third fact\n"
        "**Step 4:** fourth fact\n"
        "5) fifth fact\n"
        "3. **Answer:** <ans>done</ans>\n");
    ASSERT_EQ(t.steps.size(), 5u);
    EXPECT_EQ(t.steps[0], "first fact");
    EXPECT_EQ(t.steps[3], "fourth fact");
    EXPECT_EQ(t.steps[4], "fifth fact");
    EXPECT_EQ(t.answer, "done");
    EXPECT_EQ(parse::count_reasoning_steps(t), 5);
}

TEST(ParseCot, LabelOnTheLineBeforeItsText) {
    const auto t = parse::parse_cot_response(
        "1. Question.\n2. Step by step reasoning:\nStep 1:\nThe film is from 1953.\nStep 2:\nIt is by Kinugasa.\n"
        "3. Answer: <ans> Kinugasa <ans>\n");
    ASSERT_EQ(t.steps.size(), 2u);
    EXPECT_EQ(t.steps[1], "It is by Kinugasa.");
}

TEST(ParseCot, EllipsisPlaceholderIsNotAStep) {
    const auto t = parse::parse_cot_response(
        "1. Question.\n2. Step by step reasoning:\n a. Step 1: x\n b. ...\n3. Answer: <ans> y <ans>\n");
    EXPECT_EQ(t.steps.size(), 1u);
}

TEST(ParseCot, UnterminatedAnswerIsAbsent) {
    const auto t = parse::parse_cot_response("1. Q.\n2. Step by step reasoning:\na. x\n3. Answer: <ans> y\n");
    EXPECT_FALSE(t.answer.has_value());
    EXPECT_TRUE(t.degraded.has_value());
}

TEST(ParseCot, CountMatchesSteps) {
    parse::CoTTrace t;
    t.steps = {"s1", "s2"};
    EXPECT_EQ(parse::count_reasoning_steps(t), 2);
    t.verdict = Verdict::NotAQuestion;
    EXPECT_EQ(parse::count_reasoning_steps(t), 0);
    t = parse::parse_cot_response(parse::render_cot_response(Verdict::Ok, {"a", "b", "c", "d", "e"}, "z"));
    EXPECT_EQ(parse::count_reasoning_steps(t), 5);
}

TEST(ParseCot, RoundTripOverRandomFixtures) {
    std::mt19937_64 rng(7);
    const std::vector<std::string> words = {"Passage", "one", "says", "the", "film", "1953", "was",
                                            "directed", "by", "Kinugasa", "so", "answer", "is"};
    for (int i = 0; i < 300; ++i) {
        const auto verdict = static_cast<Verdict>(rng() % 3);
        std::vector<std::string> steps;
        std::optional<std::string> answer;
        if (verdict == Verdict::Ok) {
            const auto n = 1 + rng() % 6;
            for (std::size_t s = 0; s < n; ++s) {
                auto tokens = naco::test::random_tokens(rng, 8, words);
                tokens.insert(tokens.begin(), "Fact");
                steps.push_back(naco::test::join(tokens) + ".");
            }
            auto tokens = naco::test::random_tokens(rng, 3, words);
            tokens.push_back("X");
            answer = naco::test::join(tokens);
        }
        const auto raw = parse::render_cot_response(verdict, steps, answer);
        const auto t = parse::parse_cot_response(raw);
        EXPECT_EQ(t.verdict, verdict) << raw;
        EXPECT_EQ(t.steps, steps) << raw;
        EXPECT_EQ(t.answer, answer) << raw;
        EXPECT_EQ(parse::count_reasoning_steps(t) == 0, t.steps.empty());
        EXPECT_EQ(parse::parse_cot_response(raw).steps, t.steps);
    }
}

TEST(ParseDirectEval, ThreeLines) {
    const auto s = parse::parse_direct_eval_response("Naturalness: 2\nAnswerability: 1\nComplexity: 2");
    EXPECT_EQ(s, (parse::DirectEvalScores{2, 1, 2}));
    EXPECT_EQ(s.total(), 5);
}

TEST(ParseDirectEval, TolerantFormatting) {
    const auto s = parse::parse_direct_eval_response(
        "Here are my ratings.\n**Fluency:** 1/2\n- Answerability: 0,\ncomplexity : 2\n");
    EXPECT_EQ(s, (parse::DirectEvalScores{1, 0, 2}));
}

TEST(ParseDirectEval, Errors) {
    EXPECT_THROW(parse::parse_direct_eval_response("Naturalness: 3\nAnswerability: 1\nComplexity: 2"), OutOfRange);
    EXPECT_THROW(parse::parse_direct_eval_response("Naturalness: 2\nAnswerability: 1\n"), ParseFailed);
    EXPECT_THROW(parse::parse_direct_eval_response("Naturalness: two\nAnswerability: 1\nComplexity: 2"), ParseFailed);
}
