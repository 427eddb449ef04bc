#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace wordfreq {

// Base of every recoverable input/data error raised by the library. The CLI
// maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FileNotFound : public Error {
 public:
  explicit FileNotFound(std::string path)
      : Error("cannot read file: " + path), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class WrongMode : public Error {
 public:
  using Error::Error;
};

class MalformedRow : public Error {
 public:
  MalformedRow(std::size_t row, const std::string& what)
      : Error("row " + std::to_string(row) + ": " + what), row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

class MultiTokenWord : public Error {
 public:
  MultiTokenWord(std::size_t row, std::string word)
      : Error("row " + std::to_string(row) + ": '" + word +
              "' does not normalize to a single token"),
        row_(row),
        word_(std::move(word)) {}
  std::size_t row() const noexcept { return row_; }
  const std::string& word() const noexcept { return word_; }

 private:
  std::size_t row_;
  std::string word_;
};

class UnknownCategory : public Error {
 public:
  explicit UnknownCategory(const std::string& name)
      : Error("unknown lexicon category: " + name) {}
};

class OutOfVocabulary : public Error {
 public:
  explicit OutOfVocabulary(const std::string& word)
      : Error("word not in vocabulary: " + word) {}
};

class MixedVocabulary : public Error {
 public:
  MixedVocabulary() : Error("vectors are built over different vocabularies") {}
};

class WrongKind : public Error {
 public:
  using Error::Error;
};

class MixedKind : public Error {
 public:
  MixedKind() : Error("vectors have different kinds") {}
};

}  // namespace wordfreq
