#include "stallings/words.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "stallings/errors.hpp"

namespace stallings {

Alphabet::Alphabet(std::size_t size) : size_(size) {
  if (size == 0) {
    throw InvalidArgument("alphabet must contain at least one generator");
  }
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
  for (Letter x : letters_) {
    if (!x.valid_in(alphabet_)) {
      throw AlphabetError("letter index " + std::to_string(x.index()) +
                          " outside alphabet of size " + std::to_string(alphabet_.size()));
    }
  }
}

Word::Word(Alphabet alphabet, std::initializer_list<int> indices) : alphabet_(alphabet) {
  letters_.reserve(indices.size());
  for (int i : indices) {
    push_back(Letter(i));
  }
}

void Word::push_back(Letter x) {
  if (!x.valid_in(alphabet_)) {
    throw AlphabetError("letter index " + std::to_string(x.index()) +
                        " outside alphabet of size " + std::to_string(alphabet_.size()));
  }
  letters_.push_back(x);
}

bool Word::is_reduced() const noexcept {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i] == letters_[i - 1].inverse()) {
      return false;
    }
  }
  return true;
}

std::strong_ordering operator<=>(const Word& u, const Word& v) {
  if (auto c = u.size() <=> v.size(); c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(u.letters_.begin(), u.letters_.end(),
                                                v.letters_.begin(), v.letters_.end());
}

Word reduce(const Word& w) {
  // Single stack pass; confluent with any order of cancellations.
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter x : w.letters()) {
    if (!stack.empty() && stack.back() == x.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return Word(w.alphabet(), std::move(stack));
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(w.alphabet(), std::move(out));
}

Word concatenate(const Word& u, const Word& v) {
  if (u.alphabet() != v.alphabet()) {
    throw AlphabetError("cannot combine words over alphabets of size " +
                        std::to_string(u.alphabet().size()) + " and " +
                        std::to_string(v.alphabet().size()));
  }
  std::vector<Letter> out(u.letters().begin(), u.letters().end());
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return Word(u.alphabet(), std::move(out));
}

Word multiply(const Word& u, const Word& v) { return reduce(concatenate(u, v)); }

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) {
    s.remove_prefix(1);
  }
  while (!s.empty() && is_space(s.back())) {
    s.remove_suffix(1);
  }
  return s;
}

Letter checked(int index, Alphabet alphabet, std::string_view text) {
  if (index == 0) {
    throw ParseError("zero is not a letter index in \"" + std::string(text) + "\"");
  }
  Letter x(index);
  if (!x.valid_in(alphabet)) {
    throw ParseError("letter " + std::to_string(index) + " in \"" + std::string(text) +
                     "\" outside alphabet of size " + std::to_string(alphabet.size()));
  }
  return x;
}

Word parse_compact(std::string_view text, Alphabet alphabet) {
  Word w(alphabet);
  if (text == "1") {
    return w;
  }
  for (char c : text) {
    int index = 0;
    if (c >= 'a' && c <= 'z') {
      index = c - 'a' + 1;
    } else if (c >= 'A' && c <= 'Z') {
      index = -(c - 'A' + 1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in word \"" +
                       std::string(text) + "\"");
    }
    w.push_back(checked(index, alphabet, text));
  }
  return w;
}

Word parse_numeric(std::string_view text, Alphabet alphabet) {
  Word w(alphabet);
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) {
      ++j;
    }
    std::string_view token = text.substr(i, j - i);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("bad numeric letter \"" + std::string(token) + "\"");
    }
    w.push_back(checked(value, alphabet, text));
    i = j;
  }
  return w;
}

}  // namespace

Word parse_word(std::string_view text, Alphabet alphabet, WordSyntax syntax) {
  text = trim(text);
  if (syntax == WordSyntax::compact) {
    if (!alphabet.supports_compact()) {
      throw ParseError("compact syntax needs an alphabet of at most 26 letters");
    }
    return parse_compact(text, alphabet);
  }
  return parse_numeric(text, alphabet);
}

std::vector<Word> parse_words(std::string_view text, Alphabet alphabet, WordSyntax syntax) {
  std::vector<Word> out;
  if (trim(text).empty()) {
    return out;
  }
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                           : comma - start);
    out.push_back(parse_word(piece, alphabet, syntax));
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Word& w, WordSyntax syntax) {
  std::string out;
  if (syntax == WordSyntax::compact && w.alphabet().supports_compact()) {
    for (Letter x : w.letters()) {
      char base = x.positive() ? 'a' : 'A';
      out.push_back(static_cast<char>(base + static_cast<int>(x.generator()) - 1));
    }
    return out;
  }
  for (Letter x : w.letters()) {
    if (!out.empty()) {
      out.push_back(' ');
    }
    out += std::to_string(x.index());
  }
  return out;
}

std::string to_string(const Word& w) {
  return to_string(w, w.alphabet().supports_compact() ? WordSyntax::compact
                                                      : WordSyntax::numeric);
}

std::string join(std::span<const Word> words, WordSyntax syntax, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) {
      out += separator;
    }
    out += to_string(words[i], syntax);
  }
  return out;
}

std::string join(std::span<const Word> words, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) {
      out += separator;
    }
    out += to_string(words[i]);
  }
  return out;
}

std::size_t total_length(std::span<const Word> words) noexcept {
  std::size_t n = 0;
  for (const Word& w : words) {
    n += w.size();
  }
  return n;
}

}  // namespace stallings
