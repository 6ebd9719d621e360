#include "subspace_sets/embeddings.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "subspace_sets/errors.hpp"
#include "subspace_sets/text.hpp"

namespace subspace_sets {

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(0, "cannot open " + path.string());
  }
  return in;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

}  // namespace

EmbeddingFormat parse_embedding_format(std::string_view name) {
  if (name == "word2vec_text") return EmbeddingFormat::word2vec_text;
  if (name == "glove_text") return EmbeddingFormat::glove_text;
  throw InvalidInput("unknown embedding format: " + std::string(name));
}

std::string_view to_string(EmbeddingFormat format) {
  switch (format) {
    case EmbeddingFormat::word2vec_text:
      return "word2vec_text";
    case EmbeddingFormat::glove_text:
      return "glove_text";
  }
  return "?";
}

EmbeddingTable::EmbeddingTable(std::size_t dim, EmbeddingFormat source_format)
    : dim_(dim), source_format_(source_format) {
  if (dim == 0) throw InvalidInput("embedding dimension must be positive");
}

bool EmbeddingTable::add(std::string word,
                         const Eigen::Ref<const DenseVector>& vector) {
  if (static_cast<std::size_t>(vector.size()) != dim_) {
    throw DimensionMismatch(dim_, vector.size());
  }
  require_finite(vector, "embedding vector");
  if (index_.contains(word)) {
    ++duplicates_;
    return false;
  }
  index_.emplace(word, words_.size());
  words_.push_back(std::move(word));
  data_.insert(data_.end(), vector.data(), vector.data() + vector.size());
  return true;
}

Eigen::Map<const DenseMatrix> EmbeddingTable::vectors() const {
  return {data_.data(), static_cast<Eigen::Index>(words_.size()),
          static_cast<Eigen::Index>(dim_)};
}

Eigen::Map<const DenseVector> EmbeddingTable::vector(std::size_t index) const {
  return {data_.data() + index * dim_, static_cast<Eigen::Index>(dim_)};
}

std::optional<std::size_t> EmbeddingTable::index_of(std::string_view word) const {
  const auto it = index_.find(word);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

DenseVector lookup(const EmbeddingTable& table, std::string_view word) {
  const auto index = table.index_of(word);
  if (!index) throw OutOfVocabulary(std::string(word));
  return table.vector(*index);
}

EmbeddingTable read_word_embeddings(std::istream& in, EmbeddingFormat format) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<EmbeddingTable> table;
  std::size_t declared = 0;
  std::size_t records = 0;
  DenseVector buffer;

  if (format == EmbeddingFormat::word2vec_text) {
    while (std::getline(in, line)) {
      ++line_no;
      if (!is_blank(line)) break;
    }
    if (line_no == 0 || is_blank(line)) {
      throw ParseError(0, "empty embedding file");
    }
    const auto header = text::split_whitespace(text::chomp(line));
    if (header.size() != 2) {
      throw ParseError(line_no, "expected '<vocab_size> <dim>' header");
    }
    declared = text::parse_size(header[0], line_no);
    const std::size_t dim = text::parse_size(header[1], line_no);
    if (dim == 0) throw ParseError(line_no, "dimension must be positive");
    table.emplace(dim, format);
    buffer.resize(static_cast<Eigen::Index>(dim));
  }

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = text::chomp(line);
    if (is_blank(row)) continue;
    const auto fields = text::split_whitespace(row);
    if (!table) {
      if (fields.size() < 2) {
        throw ParseError(line_no, "expected '<word> <f1> … <fd>'");
      }
      table.emplace(fields.size() - 1, format);
      buffer.resize(static_cast<Eigen::Index>(fields.size() - 1));
    }
    const std::size_t dim = table->dim();
    if (fields.size() != dim + 1) {
      throw ParseError(line_no, "expected " + std::to_string(dim) +
                                    " values, got " +
                                    std::to_string(fields.size() - 1));
    }
    if (format == EmbeddingFormat::word2vec_text && records == declared) {
      throw ParseError(line_no, "more vectors than the declared " +
                                    std::to_string(declared));
    }
    for (std::size_t j = 0; j < dim; ++j) {
      buffer(static_cast<Eigen::Index>(j)) =
          text::parse_double(fields[j + 1], line_no);
    }
    if (buffer.squaredNorm() == 0.0) {
      throw ParseError(line_no, "zero vector for '" + std::string(fields[0]) + "'");
    }
    table->add(std::string(fields[0]), buffer);
    ++records;
  }

  if (!table || records == 0) {
    throw ParseError(0, "empty embedding file");
  }
  if (format == EmbeddingFormat::word2vec_text && records != declared) {
    throw ParseError(0, "header declares " + std::to_string(declared) +
                            " vectors, file has " + std::to_string(records));
  }
  return std::move(*table);
}

EmbeddingTable load_word_embeddings(const std::filesystem::path& path,
                                    EmbeddingFormat format) {
  auto in = open_input(path);
  return read_word_embeddings(in, format);
}

void write_word_embeddings(std::ostream& out, const EmbeddingTable& table) {
  if (table.source_format() == EmbeddingFormat::word2vec_text) {
    out << table.size() << ' ' << table.dim() << '\n';
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << table.word(i);
    const auto v = table.vector(i);
    for (Eigen::Index j = 0; j < v.size(); ++j) {
      out << ' ' << text::format_g17(v(j));
    }
    out << '\n';
  }
}

std::vector<SentenceEmbedding> read_token_embeddings(std::istream& in) {
  std::vector<SentenceEmbedding> out;
  std::unordered_set<std::string> seen;
  std::optional<std::size_t> file_dim;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = text::chomp(line);
    if (is_blank(row)) continue;
    const auto fields = text::split(row, '\t');
    if (fields.size() != 4) {
      throw ParseError(line_no, "expected 4 tab-separated fields, got " +
                                    std::to_string(fields.size()));
    }
    SentenceEmbedding s;
    s.id = std::string(fields[0]);
    if (s.id.empty()) throw ParseError(line_no, "empty sentence id");
    if (!seen.insert(s.id).second) {
      throw ParseError(line_no, "duplicate sentence id '" + s.id + "'");
    }
    for (const auto tok : text::split_whitespace(fields[1])) {
      s.tokens.emplace_back(tok);
    }
    if (s.tokens.empty()) throw ParseError(line_no, "sentence has no tokens");

    const std::size_t dim = text::parse_size(fields[2], line_no);
    if (dim == 0) throw ParseError(line_no, "dimension must be positive");
    if (file_dim && *file_dim != dim) {
      throw ParseError(line_no, "dimension " + std::to_string(dim) +
                                    " differs from " + std::to_string(*file_dim));
    }
    file_dim = dim;

    const auto values = text::split_whitespace(fields[3]);
    if (values.size() != s.tokens.size() * dim) {
      throw ParseError(line_no, std::to_string(s.tokens.size()) + " tokens need " +
                                    std::to_string(s.tokens.size() * dim) +
                                    " values, got " + std::to_string(values.size()));
    }
    s.vectors.resize(static_cast<Eigen::Index>(s.tokens.size()),
                     static_cast<Eigen::Index>(dim));
    for (std::size_t k = 0; k < values.size(); ++k) {
      s.vectors.data()[k] = text::parse_double(values[k], line_no);
    }
    for (Eigen::Index i = 0; i < s.vectors.rows(); ++i) {
      if (s.vectors.row(i).squaredNorm() == 0.0) {
        throw ParseError(line_no, "zero vector for token '" +
                                      s.tokens[static_cast<std::size_t>(i)] + "'");
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<SentenceEmbedding> load_token_embeddings(
    const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_token_embeddings(in);
}

void write_token_embeddings(std::ostream& out,
                            const std::vector<SentenceEmbedding>& sentences) {
  for (const auto& s : sentences) {
    out << s.id << '\t';
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      if (i > 0) out << ' ';
      out << s.tokens[i];
    }
    out << '\t' << s.dim() << '\t';
    for (Eigen::Index k = 0; k < s.vectors.size(); ++k) {
      if (k > 0) out << ' ';
      out << text::format_g17(s.vectors.data()[k]);
    }
    out << '\n';
  }
}

}  // namespace subspace_sets
