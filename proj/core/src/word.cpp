#include "dforge/word.hpp"

#include <cctype>

#include "dforge/error.hpp"

namespace dforge {

GroupWord GroupWord::parse(std::string_view text) {
  GroupWord word;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_space();
  while (i < text.size()) {
    const char g = text[i];
    if (g != 'x' && g != 'y')
      throw InvalidInput("word: unexpected '" + std::string(1, g) + "' in \"" +
                         std::string(text) + "\"");
    ++i;
    unsigned long exponent = 1;
    skip_space();
    if (i < text.size() && text[i] == '^') {
      ++i;
      const bool braced = i < text.size() && text[i] == '{';
      if (braced)
        ++i;
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (i == start || i - start > 9)
        throw InvalidInput("word: bad exponent in \"" + std::string(text) + "\"");
      exponent = std::stoul(std::string(text.substr(start, i - start)));
      if (braced) {
        if (i >= text.size() || text[i] != '}')
          throw InvalidInput("word: missing '}' in \"" + std::string(text) + "\"");
        ++i;
      }
      if (exponent == 0)
        throw InvalidInput("word: exponents must be positive");
    }
    word.letters.push_back({g, static_cast<unsigned>(exponent)});
    skip_space();
  }
  if (word.letters.empty())
    throw InvalidInput("word: empty");
  return word;
}

std::string GroupWord::to_string() const {
  std::string out;
  for (const auto &l : letters) {
    out += l.generator;
    if (l.exponent != 1)
      out += "^" + std::to_string(l.exponent);
  }
  return out;
}

std::size_t GroupWord::length() const {
  std::size_t total = 0;
  for (const auto &l : letters)
    total += l.exponent;
  return total;
}

Permutation evaluate_word(const GroupWord &w, const Permutation &x, const Permutation &y) {
  if (x.degree() != y.degree())
    throw InvalidInput("evaluate_word: x and y have different degrees");
  Permutation out(x.degree());
  for (const auto &l : w.letters)
    out = out * power(l.generator == 'x' ? x : y, l.exponent);
  return out;
}

} // namespace dforge
