#ifndef STALLINGS_WORDS_HPP_
#define STALLINGS_WORDS_HPP_

// Reduced words over a symmetrized alphabet A ∪ A^{-1}: the elements of
// the free group F(A).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stallings {

// Number of positive generators. Always at least one.
class Alphabet {
 public:
  explicit Alphabet(std::size_t size);

  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  // Number of letters in A ∪ A^{-1}.
  [[nodiscard]] std::size_t symbol_count() const noexcept { return 2 * size_; }
  // Compact syntax (a-z / A-Z) only covers alphabets of at most 26 letters.
  [[nodiscard]] bool supports_compact() const noexcept { return size_ <= 26; }

  friend bool operator==(Alphabet, Alphabet) = default;

 private:
  std::size_t size_;
};

// A signed generator: +i is the i-th generator, -i its formal inverse.
class Letter {
 public:
  constexpr explicit Letter(int index) noexcept : index_(index) {}

  [[nodiscard]] constexpr int index() const noexcept { return index_; }
  [[nodiscard]] constexpr bool positive() const noexcept { return index_ > 0; }
  [[nodiscard]] constexpr std::size_t generator() const noexcept {
    return static_cast<std::size_t>(index_ > 0 ? index_ : -index_);
  }
  [[nodiscard]] constexpr Letter inverse() const noexcept { return Letter(-index_); }
  [[nodiscard]] constexpr Letter positive_part() const noexcept {
    return Letter(static_cast<int>(generator()));
  }

  // Dense position in the order +1, -1, +2, -2, ... used for transition
  // tables and for every deterministic traversal in the library.
  [[nodiscard]] constexpr std::size_t slot() const noexcept {
    return 2 * (generator() - 1) + (index_ < 0 ? 1 : 0);
  }
  [[nodiscard]] static constexpr Letter from_slot(std::size_t slot) noexcept {
    auto gen = static_cast<int>(slot / 2 + 1);
    return Letter(slot % 2 == 0 ? gen : -gen);
  }

  [[nodiscard]] bool valid_in(Alphabet a) const noexcept {
    return index_ != 0 && generator() <= a.size();
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  // Orders letters by slot, i.e. a < A < b < B < ...
  friend constexpr std::strong_ordering operator<=>(Letter x, Letter y) noexcept {
    return x.slot() <=> y.slot();
  }

 private:
  int index_;
};

enum class WordSyntax { compact, numeric };

// A finite sequence of letters over a fixed alphabet. Not necessarily
// reduced; use reduce() to obtain the group element's normal form.
class Word {
 public:
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
  Word(Alphabet alphabet, std::vector<Letter> letters);
  Word(Alphabet alphabet, std::initializer_list<int> indices);

  [[nodiscard]] Alphabet alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] std::span<const Letter> letters() const noexcept { return letters_; }
  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
  [[nodiscard]] Letter operator[](std::size_t i) const { return letters_[i]; }
  [[nodiscard]] bool is_reduced() const noexcept;

  void push_back(Letter x);

  // Shortlex order on letters (by slot); alphabet must match.
  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& u, const Word& v);

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

// Free reduction: the unique reduced word equal to w in F(A).
[[nodiscard]] Word reduce(const Word& w);
[[nodiscard]] Word invert(const Word& w);
// reduce(u·v). Throws AlphabetError when the alphabets differ.
[[nodiscard]] Word multiply(const Word& u, const Word& v);
// u·v without reduction.
[[nodiscard]] Word concatenate(const Word& u, const Word& v);

// Parses a single word. Compact: a-z positive, A-Z inverse, "" or "1" the
// identity. Numeric: whitespace-separated non-zero integers. The result is
// not reduced. Throws ParseError / AlphabetError.
[[nodiscard]] Word parse_word(std::string_view text, Alphabet alphabet,
                              WordSyntax syntax = WordSyntax::compact);
// Comma-separated list of words.
[[nodiscard]] std::vector<Word> parse_words(std::string_view text, Alphabet alphabet,
                                            WordSyntax syntax = WordSyntax::compact);

// Compact form when the alphabet allows it, numeric otherwise.
[[nodiscard]] std::string to_string(const Word& w);
[[nodiscard]] std::string to_string(const Word& w, WordSyntax syntax);
[[nodiscard]] std::string join(std::span<const Word> words, std::string_view separator = ",");
[[nodiscard]] std::string join(std::span<const Word> words, WordSyntax syntax,
                               std::string_view separator = ",");

// Sum of lengths.
[[nodiscard]] std::size_t total_length(std::span<const Word> words) noexcept;

}  // namespace stallings

#endif  // STALLINGS_WORDS_HPP_
