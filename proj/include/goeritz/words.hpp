#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace goeritz {

  // The generators alpha, beta, gamma, delta of the genus two Goeritz group
  // together with the inverses that are distinct letters. alpha and gamma
  // are involutions and so have no separate inverse symbol.
  enum class Letter : std::uint8_t {
    alpha,
    beta,
    beta_inv,
    gamma,
    delta,
    delta_inv
  };

  inline constexpr Letter all_letters[]
      = {Letter::alpha, Letter::gamma, Letter::beta,
         Letter::beta_inv, Letter::delta, Letter::delta_inv};

  constexpr Letter inverse(Letter l) noexcept {
    switch (l) {
      case Letter::beta:
        return Letter::beta_inv;
      case Letter::beta_inv:
        return Letter::beta;
      case Letter::delta:
        return Letter::delta_inv;
      case Letter::delta_inv:
        return Letter::delta;
      default:
        return l;
    }
  }

  // Canonical one character spelling: a, b, B, g, d, D.
  char to_char(Letter l) noexcept;

  using Word = std::vector<Letter>;

  // Parses `text` over the alphabet {a,A,b,B,g,G,d,D}; whitespace is ignored
  // and A, G are read as alpha, gamma. The result is not freely reduced.
  // Throws parse_error on any other character.
  Word parse_word(std::string_view text);

  // Inverse of parse_word on canonical spellings. The empty word renders as
  // the empty string.
  std::string render(Word const& w);

  Word free_reduce(Word const& w);

  Word inverse(Word const& w);

  Word operator*(Word const& u, Word const& v);

  // Concatenation of k copies of w.
  Word power(Word const& w, std::size_t k);

  // `length` letters drawn uniformly and independently with a generator
  // seeded by `seed`, then freely reduced.
  Word random_word(std::size_t length, std::uint64_t seed);

}  // namespace goeritz
