#include <gtest/gtest.h>

#include <filesystem>
#include <functional>
#include <fstream>
#include <sstream>

#include "subspace_sets/embeddings.hpp"
#include "subspace_sets/errors.hpp"
#include "test_support.hpp"

namespace ss = subspace_sets;
namespace fs = std::filesystem;

namespace {

const fs::path kData = SUBSPACE_SETS_TEST_DATA;

ss::EmbeddingTable parse_table(const std::string& text, ss::EmbeddingFormat f) {
  std::istringstream in(text);
  return ss::read_word_embeddings(in, f);
}

std::size_t parse_error_line(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ss::ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError";
  return 0;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(WordEmbeddings, Word2VecText) {
  const auto t = parse_table("2 3\napple 1 0 0\nred 0 1 0", ss::EmbeddingFormat::word2vec_text);
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(t.dim(), 3u);
  EXPECT_EQ(ss::lookup(t, "apple"), ss::testing::unit(3, 0));
  EXPECT_EQ(t.words(), (std::vector<std::string>{"apple", "red"}));
}

TEST(WordEmbeddings, GloveTextInfersDimension) {
  const auto t = parse_table("apple 1 0 0\nred 0 1 0", ss::EmbeddingFormat::glove_text);
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(t.dim(), 3u);
  EXPECT_EQ(ss::lookup(t, "red"), ss::testing::unit(3, 1));
}

TEST(WordEmbeddings, ShortLineIsParseErrorWithLine) {
  EXPECT_EQ(parse_error_line([] {
              parse_table("red 0 1 0\napple 1 0", ss::EmbeddingFormat::glove_text);
            }),
            2u);
  EXPECT_EQ(parse_error_line([] {
              parse_table("1 3\napple 1 0", ss::EmbeddingFormat::word2vec_text);
            }),
            2u);
}

TEST(WordEmbeddings, EmptyFile) {
  EXPECT_THROW(parse_table("", ss::EmbeddingFormat::glove_text), ss::ParseError);
  EXPECT_THROW(parse_table("\n\n", ss::EmbeddingFormat::word2vec_text), ss::ParseError);
  EXPECT_THROW(parse_table("0 3\n", ss::EmbeddingFormat::word2vec_text), ss::ParseError);
}

TEST(WordEmbeddings, DuplicatesKeepFirstAndAreCounted) {
  const auto t = parse_table("a 1 0\nb 0 1\na 5 5\n", ss::EmbeddingFormat::glove_text);
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(t.duplicate_count(), 1u);
  EXPECT_EQ(ss::lookup(t, "a"), ss::testing::unit(2, 0));
}

TEST(WordEmbeddings, CrlfAndBlankLinesTolerated) {
  const auto t = parse_table("2 2\r\na 1 0\r\n\r\nb 0 1\r\n", ss::EmbeddingFormat::word2vec_text);
  EXPECT_EQ(t.size(), 2u);
}

TEST(Lookup, OutOfVocabularyAndCaseSensitivity) {
  const auto t = parse_table("apple 1 0 0\nred 0 1 0", ss::EmbeddingFormat::glove_text);
  EXPECT_THROW(ss::lookup(t, "banana"), ss::OutOfVocabulary);
  try {
    ss::lookup(t, "Apple");
    FAIL();
  } catch (const ss::OutOfVocabulary& e) {
    EXPECT_EQ(e.word(), "Apple");
  }
}

TEST(WordEmbeddings, MalformedFixtures) {
  const auto line_of = [](const char* name, ss::EmbeddingFormat f) {
    return parse_error_line([&] { ss::load_word_embeddings(kData / name, f); });
  };
  EXPECT_EQ(line_of("malformed_dim.w2v.txt", ss::EmbeddingFormat::word2vec_text), 3u);
  EXPECT_EQ(line_of("malformed_dim.glove.txt", ss::EmbeddingFormat::glove_text), 2u);
  EXPECT_EQ(line_of("malformed_number.glove.txt", ss::EmbeddingFormat::glove_text), 4u);
  EXPECT_EQ(line_of("malformed_count.w2v.txt", ss::EmbeddingFormat::word2vec_text), 4u);
  EXPECT_EQ(line_of("malformed_zero.glove.txt", ss::EmbeddingFormat::glove_text), 2u);
  EXPECT_THROW(ss::load_word_embeddings(kData / "does_not_exist.txt",
                                        ss::EmbeddingFormat::glove_text),
               ss::ParseError);
}

TEST(WordEmbeddings, GoldenFilesRoundTripBitwise) {
  for (const auto& [name, format] :
       {std::pair{"golden_table.w2v.txt", ss::EmbeddingFormat::word2vec_text},
        std::pair{"golden_table.glove.txt", ss::EmbeddingFormat::glove_text}}) {
    const auto table = ss::load_word_embeddings(kData / name, format);
    std::ostringstream out;
    ss::write_word_embeddings(out, table);
    EXPECT_EQ(out.str(), slurp(kData / name)) << name;
  }
}

// Property: write → read reproduces every vector exactly and keeps order.
TEST(WordEmbeddings, RandomTablesRoundTrip) {
  ss::Rng rng(14);
  for (const auto format : {ss::EmbeddingFormat::word2vec_text, ss::EmbeddingFormat::glove_text}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto dim = 1 + ss::uniform_below(rng, 6);
      ss::EmbeddingTable t(dim, format);
      const auto n = 1 + ss::uniform_below(rng, 30);
      for (std::size_t i = 0; i < n; ++i) {
        ss::DenseVector v = ss::testing::random_vector(rng, static_cast<Eigen::Index>(dim));
        v *= std::pow(10.0, static_cast<double>(ss::uniform_below(rng, 40)) - 20.0);
        t.add("w" + std::to_string(ss::uniform_below(rng, 1000)), v);
      }
      std::stringstream buf;
      ss::write_word_embeddings(buf, t);
      const auto back = ss::read_word_embeddings(buf, format);
      ASSERT_EQ(back.words(), t.words());
      EXPECT_EQ(back.vectors(), t.vectors());
    }
  }
}

TEST(TokenEmbeddings, ReadsRecordsInOrder) {
  std::istringstream in("s1\ta b\t2\t1 0 0 1\ns2\tc\t2\t0.5 0.5\n");
  const auto sentences = ss::read_token_embeddings(in);
  ASSERT_EQ(sentences.size(), 2u);
  EXPECT_EQ(sentences[0].id, "s1");
  EXPECT_EQ(sentences[0].tokens, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(sentences[0].vectors(1, 1), 1.0);
  EXPECT_EQ(sentences[1].vectors.rows(), 1);
}

TEST(TokenEmbeddings, MalformedFixtures) {
  const auto line_of = [](const char* name) {
    return parse_error_line([&] { ss::load_token_embeddings(kData / name); });
  };
  EXPECT_EQ(line_of("malformed_tokens.tok"), 2u);
  EXPECT_EQ(line_of("malformed_dup_id.tok"), 3u);
  EXPECT_EQ(line_of("malformed_empty.tok"), 2u);
}

TEST(TokenEmbeddings, OtherErrors) {
  const auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return ss::read_token_embeddings(in);
  };
  EXPECT_THROW(parse("s1\ta\t2\n"), ss::ParseError);                      // 3 fields
  EXPECT_THROW(parse("s1\ta\t2\t0 0\n"), ss::ParseError);                 // zero vector
  EXPECT_THROW(parse("s1\ta\t2\t1 0\ns2\tb\t3\t1 0 0\n"), ss::ParseError); // dims differ
  EXPECT_THROW(parse("s1\ta\t1\tnan\n"), ss::ParseError);
}

TEST(TokenEmbeddings, RoundTrip) {
  ss::Rng rng(2);
  std::vector<ss::SentenceEmbedding> sentences;
  for (int i = 0; i < 5; ++i) {
    ss::SentenceEmbedding s;
    s.id = "id" + std::to_string(i);
    for (int k = 0; k <= i; ++k) s.tokens.push_back("t" + std::to_string(k));
    s.vectors = ss::testing::random_matrix(rng, i + 1, 4);
    sentences.push_back(s);
  }
  std::stringstream buf;
  ss::write_token_embeddings(buf, sentences);
  const auto back = ss::read_token_embeddings(buf);
  ASSERT_EQ(back.size(), sentences.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].tokens, sentences[i].tokens);
    EXPECT_EQ(back[i].vectors, sentences[i].vectors);
  }
}
