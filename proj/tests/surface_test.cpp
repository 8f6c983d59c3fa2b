// Copyright 2026 The logicbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "logicbench/error.hpp"
#include "logicbench/rng.hpp"
#include "logicbench/surface.hpp"
#include "test_support.hpp"

namespace logicbench {
namespace {

using testing::f;

void write(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

TEST(Templates, BuiltinCountsAndSamples) {
  const TemplateSet& t = TemplateSet::builtin();
  for (std::size_t c = 0; c < 4; ++c) {
    EXPECT_EQ(t.of(static_cast<TemplateClass>(c)).size(), kTemplateCounts[c]);
  }
  EXPECT_EQ(kTemplateCounts, (std::array<std::size_t, 4>{16, 15, 11, 8}));
  EXPECT_EQ(t.of(TemplateClass::kBasic)[0], "The claim that {x} holds true.");
  EXPECT_EQ(t.of(TemplateClass::kNegation)[0], "The claim that {x} does not reflect reality.");
  EXPECT_EQ(t.of(TemplateClass::kConditional)[0], "Once we know that {x}, we also know that {y}.");
  EXPECT_EQ(t.of(TemplateClass::kDisjunction)[0], "It is a fact that either {x} or {y}.");
  EXPECT_EQ(t.checksum().size(), 64u);
}

TEST(Templates, SlotsAppearExactlyOnce) {
  const TemplateSet& t = TemplateSet::builtin();
  for (std::size_t c = 0; c < 4; ++c) {
    for (const auto& s : t.of(static_cast<TemplateClass>(c))) {
      auto count = [&](std::string_view slot) {
        std::size_t n = 0;
        for (auto p = s.find(slot); p != std::string::npos; p = s.find(slot, p + 1)) ++n;
        return n;
      };
      EXPECT_EQ(count("{x}"), 1u) << s;
      EXPECT_EQ(count("{y}"), c >= 2 ? 1u : 0u) << s;
    }
  }
}

std::string template_text(std::size_t basic, std::size_t neg, std::size_t cond, std::size_t disj) {
  std::string text = "[basic]\n";
  for (std::size_t i = 0; i < basic; ++i) text += "B" + std::to_string(i) + " {x}.\n";
  text += "[negation]\n";
  for (std::size_t i = 0; i < neg; ++i) text += "N" + std::to_string(i) + " {x}.\n";
  text += "[conditional]\n";
  for (std::size_t i = 0; i < cond; ++i) text += "C" + std::to_string(i) + " {x} {y}.\n";
  text += "[disjunction]\n";
  for (std::size_t i = 0; i < disj; ++i) text += "D" + std::to_string(i) + " {x} {y}.\n";
  return text;
}

TEST(Templates, ParseValidatesCountsSectionsAndSlots) {
  EXPECT_NO_THROW(TemplateSet::parse(template_text(16, 15, 11, 8)));
  EXPECT_THROW(TemplateSet::parse(template_text(15, 15, 11, 8)), Error);
  EXPECT_THROW(TemplateSet::parse("[other]\n" + template_text(16, 15, 11, 8)), Error);
  EXPECT_THROW(TemplateSet::parse("stray {x}\n" + template_text(16, 15, 11, 8)), Error);
  std::string bad = template_text(16, 15, 11, 8);
  bad.replace(bad.find("C0 {x} {y}"), 10, "C0 {x} {x}");
  try {
    TemplateSet::parse(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSchema);
  }
}

TEST(Templates, LoadFromFileMatchesBuiltinWhenIdentical) {
  testing::TempDir dir;
  write(dir.file("t.txt"), template_text(16, 15, 11, 8));
  TemplateSet t = TemplateSet::load(dir.file("t.txt"));
  EXPECT_EQ(t.of(TemplateClass::kDisjunction).back(), "D7 {x} {y}.");
  EXPECT_THROW(TemplateSet::load(dir.file("missing.txt")), Error);
}

TEST(Bank, Filter) {
  EXPECT_TRUE(SentenceBank::passes_filter("Doors are solids."));
  EXPECT_FALSE(SentenceBank::passes_filter("Either it rains or it snows."));
  EXPECT_FALSE(SentenceBank::passes_filter("Cats are not dogs."));
  EXPECT_FALSE(SentenceBank::passes_filter("Too short."));
  EXPECT_FALSE(SentenceBank::passes_filter("Caf\xc3\xa9s serve coffee daily."));
  EXPECT_TRUE(SentenceBank::passes_filter("Oranges contain vitamin C."));  // "or" only as a whole word
  std::string long_sentence = "Word";
  for (int i = 0; i < 20; ++i) long_sentence += " word";
  EXPECT_FALSE(SentenceBank::passes_filter(long_sentence + "."));
}

TEST(Bank, TsvWithGenericSentenceColumn) {
  testing::TempDir dir;
  write(dir.file("kb.tsv"),
        "SOURCE\tTERM\tQUANTIFIER\tGENERIC SENTENCE\tSCORE\n"
        "x\tdoor\t\tDoors are solids.\t0.9\n"
        "x\train\t\tEither it rains or it snows.\t0.8\n"
        "x\tdoor\t\tDoors are solids.\t0.9\n"
        "short\n");
  SentenceBank bank = SentenceBank::load(dir.file("kb.tsv"));
  ASSERT_EQ(bank.size(), 1u);
  EXPECT_EQ(bank.sentences()[0], "Doors are solids.");
  EXPECT_EQ(bank.rejected(), 3u);
  EXPECT_EQ(bank.checksum().size(), 64u);
}

TEST(Bank, PlainTextAndEmptyBank) {
  testing::TempDir dir;
  write(dir.file("plain.txt"), "Doors are solids\nEither it rains or it snows.\n\n");
  SentenceBank bank = SentenceBank::load(dir.file("plain.txt"), BankFormat::kPlain);
  ASSERT_EQ(bank.size(), 1u);
  EXPECT_EQ(bank.sentences()[0], "Doors are solids.");  // terminal period added

  write(dir.file("none.txt"), "Either it rains or it snows.\n");
  try {
    SentenceBank::load(dir.file("none.txt"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSchema);
  }
  write(dir.file("nocol.tsv"), "a\tb\nx\ty\n");
  EXPECT_THROW(SentenceBank::load(dir.file("nocol.tsv"), BankFormat::kTsv), Error);
}

TEST(Bank, BuiltinIsCleanAndLargeEnough) {
  const SentenceBank& bank = SentenceBank::builtin();
  EXPECT_EQ(bank.size(), 200u);
  EXPECT_EQ(bank.rejected(), 0u);
  for (const auto& s : bank.sentences()) EXPECT_TRUE(SentenceBank::passes_filter(s)) << s;
  EXPECT_TRUE(bank.starts_with_proper_noun("Japan is in Asia."));
  EXPECT_FALSE(bank.starts_with_proper_noun("Doors are solids."));
}

TEST(Binding, InjectiveAndTotal) {
  AtomBinding b;
  b.bind(AtomId{0}, "Doors are solids.");
  EXPECT_THROW(b.bind(AtomId{1}, "Doors are solids."), Error);
  EXPECT_THROW(b.bind(AtomId{0}, "Japan is in Asia."), Error);
  EXPECT_THROW(b.sentence(AtomId{3}), Error);
  EXPECT_EQ(b.clause(AtomId{0}), "doors are solids");
  b.bind(AtomId{1}, "Japan is in Asia.", true);
  EXPECT_EQ(b.clause(AtomId{1}), "Japan is in Asia");
}

TEST(Binding, BindAtomsExhaustsBank) {
  std::vector<std::string> lines{"Doors are solids.", "Japan is in Asia.", "Cats chase small mice."};
  SentenceBank bank = SentenceBank::from_lines(lines, "x");
  Stream stream(1);
  AtomBinding b;
  std::vector<AtomId> atoms{AtomId{0}, AtomId{1}, AtomId{2}};
  bind_atoms(atoms, bank, stream, b);
  std::set<std::string> used;
  for (const auto& [atom, s] : b.entries()) used.insert(s);
  EXPECT_EQ(used.size(), 3u);
  std::vector<AtomId> more{AtomId{3}};
  try {
    bind_atoms(more, bank, stream, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBankExhausted);
  }
}

TEST(Clause, LowercasesAndStrips) {
  EXPECT_EQ(as_clause("Doors are solids."), "doors are solids");
  EXPECT_EQ(as_clause("DNA carries genes."), "DNA carries genes");
  EXPECT_EQ(as_clause("Japan is in Asia.", true), "Japan is in Asia");
}

TEST(Realize, TableSamples) {
  const TemplateSet& t = TemplateSet::builtin();
  EXPECT_EQ(fill_template(t.of(TemplateClass::kNegation)[0],
                          as_clause("Condensation is water vapor changing to liquid water.")),
            "The claim that condensation is water vapor changing to liquid water does not reflect reality.");
  EXPECT_EQ(fill_template(t.of(TemplateClass::kDisjunction)[0], "{x}", "{y}"),
            "It is a fact that either {x} or {y}.");
}

TEST(Realize, NestedConditionalQuotesInnerClause) {
  AtomBinding b;
  b.bind(AtomId{0}, "Night blooming plants depend on bats.");
  b.bind(AtomId{1}, "Many species are critically endangered.");
  b.bind(AtomId{2}, "Doors are solids.");
  Formula g = f("a -> (b -> ~c)");
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Stream s(seed);
    std::string text = realize_statement(g, b, TemplateSet::builtin(), s);
    auto open = text.find('\'');
    auto close = text.rfind('\'');
    ASSERT_NE(open, std::string::npos) << text;
    ASSERT_LT(open, close) << text;
    std::string inner = text.substr(open + 1, close - open - 1);
    EXPECT_NE(inner.find("many species are critically endangered"), std::string::npos) << text;
    EXPECT_NE(inner.find("doors are solids"), std::string::npos) << text;
    EXPECT_TRUE(std::islower(static_cast<unsigned char>(inner[0]))) << text;
    EXPECT_NE(inner.back(), '.') << text;
    EXPECT_TRUE(std::isupper(static_cast<unsigned char>(text[0])));
    EXPECT_EQ(text.back(), '.');
  }
}

TEST(Realize, StandaloneAtomIsPlainOrWrapped) {
  AtomBinding b;
  b.bind(AtomId{0}, "Doors are solids.");
  RealizeOptions never{.basic_wrap_probability = 0.0}, always{.basic_wrap_probability = 1.0};
  Stream s(1);
  EXPECT_EQ(realize_statement(f("a"), b, TemplateSet::builtin(), s, never), "Doors are solids.");
  std::string wrapped = realize_statement(f("a"), b, TemplateSet::builtin(), s, always);
  EXPECT_NE(wrapped, "Doors are solids.");
  EXPECT_NE(wrapped.find("doors are solids"), std::string::npos);
}

// Property: rendering is seed-stable and leaves no unfilled slot.
TEST(RealizeProperty, DeterministicAndComplete) {
  std::mt19937_64 rng(4);
  AtomBinding b;
  const auto& bank = SentenceBank::builtin().sentences();
  for (std::uint32_t i = 0; i < 5; ++i) b.bind(AtomId{i}, bank[i * 7]);
  for (int i = 0; i < 300; ++i) {
    Formula g = testing::random_formula(rng, 5, 3);
    Stream s1(i), s2(i);
    std::string x = realize_statement(g, b, TemplateSet::builtin(), s1);
    ASSERT_EQ(x, realize_statement(g, b, TemplateSet::builtin(), s2));
    ASSERT_EQ(x.find('{'), std::string::npos) << x;
    for (AtomId a : g.atoms()) {
      ASSERT_NE(x.find(as_clause(b.sentence(a)).substr(1)), std::string::npos) << x;
    }
  }
}

TEST(Readability, Syllables) {
  EXPECT_EQ(count_syllables("cat"), 1u);
  EXPECT_EQ(count_syllables("The"), 1u);
  EXPECT_EQ(count_syllables("make"), 1u);
  EXPECT_EQ(count_syllables("table"), 2u);
  EXPECT_EQ(count_syllables("condensation"), 4u);
  EXPECT_EQ(count_syllables("be"), 1u);
  EXPECT_EQ(count_syllables("rhythm"), 1u);
}

TEST(Readability, HandComputedFixtures) {
  std::vector<std::string> cat{"The cat sat."};
  TextCounts c = count_text(cat);
  EXPECT_EQ(c.sentences, 1u);
  EXPECT_EQ(c.words, 3u);
  EXPECT_EQ(c.syllables, 3u);
  EXPECT_NEAR(flesch_kincaid_grade(cat), 0.39 * 3 + 11.8 * 1 - 15.59, 1e-9);
  EXPECT_NEAR(flesch_kincaid_grade(cat), -2.62, 0.01);

  // doors(1) are(1) sol-ids(2) / con-den-sa-tion(4) forms(1) wa-ter(2) drops(1).
  std::vector<std::string> two{"Doors are solids.", "Condensation forms water drops!"};
  TextCounts t = count_text(two);
  EXPECT_EQ(t.sentences, 2u);
  EXPECT_EQ(t.words, 7u);
  EXPECT_EQ(t.syllables, 1u + 1 + 2 + 4 + 1 + 2 + 1);
  EXPECT_NEAR(flesch_kincaid_grade(two), 0.39 * 7 / 2 + 11.8 * 12 / 7 - 15.59, 1e-9);
  EXPECT_THROW(flesch_kincaid_grade(std::vector<std::string>{}), Error);
}

TEST(Readability, GradeIsScaleInvariant) {
  std::vector<std::string> corpus{"Doors are solids.", "It is not true that Japan is in Asia."};
  std::vector<std::string> twice = corpus;
  twice.insert(twice.end(), corpus.begin(), corpus.end());
  EXPECT_DOUBLE_EQ(flesch_kincaid_grade(corpus), flesch_kincaid_grade(twice));
}

TEST(Readability, Vocabulary) {
  EXPECT_EQ(vocabulary_size(std::vector<std::string>{"A b a."}), 2u);
  EXPECT_EQ(vocabulary_size(std::vector<std::string>{}), 0u);
  EXPECT_EQ(vocabulary_size(std::vector<std::string>{"Doors DOORS doors'", "solids"}), 2u);
}

}  // namespace
}  // namespace logicbench
