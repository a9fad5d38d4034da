#include "seqsel/vocabulary.hpp"

#include <array>
#include <cctype>

#include "seqsel/common.hpp"

namespace seqsel {

Vocabulary::Vocabulary(std::vector<std::string> words) : words_(std::move(words)) {
  if (words_.empty()) fail(ErrorCode::empty_input, "vocabulary must be non-empty");
  index_.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i].empty()) fail(ErrorCode::parameter, "vocabulary contains an empty token");
    auto [it, inserted] = index_.emplace(words_[i], i);
    if (!inserted) fail(ErrorCode::parameter, "duplicate vocabulary token: " + words_[i]);
  }
}

std::vector<std::string> tokenize(const std::string& text) {
  static const std::array<std::string, 8> kStopWords = {
      "is", "are", "at", "on", "in", "with", "and", "to"};

  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&]() {
    if (current.empty()) return;
    bool stop = false;
    for (const auto& s : kStopWords) {
      if (current == s) {
        stop = true;
        break;
      }
    }
    if (!stop) tokens.push_back(current);
    current.clear();
  };

  for (unsigned char ch : text) {
    if (std::isalnum(ch)) {
      current.push_back(static_cast<char>(std::tolower(ch)));
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

}  // namespace seqsel
