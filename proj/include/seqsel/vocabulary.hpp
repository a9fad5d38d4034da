#ifndef SEQSEL_VOCABULARY_HPP
#define SEQSEL_VOCABULARY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace seqsel {

// Ordered lexical word list with reverse lookup. Word indices used across
// probability maps, labels and bag-of-words columns all refer to positions
// in one of these.
class Vocabulary {
 public:
  Vocabulary() = default;
  explicit Vocabulary(std::vector<std::string> words);

  std::size_t size() const { return words_.size(); }
  const std::string& word(std::size_t i) const { return words_[i]; }
  const std::vector<std::string>& words() const { return words_; }

  std::optional<std::size_t> index_of(const std::string& word) const {
    auto it = index_.find(word);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Lowercase, split on non-alphanumeric characters, drop the eight functional
// stop words ("is", "are", "at", "on", "in", "with", "and", "to").
std::vector<std::string> tokenize(const std::string& text);

}  // namespace seqsel

#endif  // SEQSEL_VOCABULARY_HPP
