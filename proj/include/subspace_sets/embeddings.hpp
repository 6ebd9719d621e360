#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "subspace_sets/linalg.hpp"

namespace subspace_sets {

enum class EmbeddingFormat { word2vec_text, glove_text };

EmbeddingFormat parse_embedding_format(std::string_view name);
std::string_view to_string(EmbeddingFormat format);

/// Word → vector map with fixed dimension. Insertion order is preserved and
/// defines tie-breaking in rankings.
class EmbeddingTable {
 public:
  EmbeddingTable(std::size_t dim, EmbeddingFormat source_format);

  /// Appends a word. A word already present keeps its first vector; the
  /// call returns false and bumps duplicate_count().
  bool add(std::string word, const Eigen::Ref<const DenseVector>& vector);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return words_.size(); }
  EmbeddingFormat source_format() const { return source_format_; }
  std::size_t duplicate_count() const { return duplicates_; }

  const std::vector<std::string>& words() const { return words_; }
  const std::string& word(std::size_t index) const { return words_[index]; }

  /// All vectors as a size() × dim() row-major matrix view.
  Eigen::Map<const DenseMatrix> vectors() const;
  Eigen::Map<const DenseVector> vector(std::size_t index) const;

  std::optional<std::size_t> index_of(std::string_view word) const;

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::size_t dim_;
  EmbeddingFormat source_format_;
  std::vector<std::string> words_;
  std::vector<double> data_;
  std::unordered_map<std::string, std::size_t, Hash, std::equal_to<>> index_;
  std::size_t duplicates_ = 0;
};

/// Case-sensitive lookup; throws OutOfVocabulary.
DenseVector lookup(const EmbeddingTable& table, std::string_view word);

EmbeddingTable read_word_embeddings(std::istream& in, EmbeddingFormat format);
EmbeddingTable load_word_embeddings(const std::filesystem::path& path,
                                    EmbeddingFormat format);

/// Writes `table` in its source format with %.17g values.
void write_word_embeddings(std::ostream& out, const EmbeddingTable& table);

/// One sentence: tokens in order with one contextual vector per token.
struct SentenceEmbedding {
  std::string id;
  std::vector<std::string> tokens;
  DenseMatrix vectors;  // tokens.size() × dim

  std::size_t dim() const { return static_cast<std::size_t>(vectors.cols()); }
  std::size_t size() const { return tokens.size(); }
};

/// Records `id \t tok1 tok2 … \t dim \t f1 … f_{n·dim}`, one per line.
std::vector<SentenceEmbedding> read_token_embeddings(std::istream& in);
std::vector<SentenceEmbedding> load_token_embeddings(
    const std::filesystem::path& path);
void write_token_embeddings(std::ostream& out,
                            const std::vector<SentenceEmbedding>& sentences);

}  // namespace subspace_sets
