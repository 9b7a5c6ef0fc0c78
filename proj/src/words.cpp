#include "goeritz/words.hpp"

#include <random>

#include "goeritz/errors.hpp"

namespace goeritz {

  char to_char(Letter l) noexcept {
    switch (l) {
      case Letter::alpha:
        return 'a';
      case Letter::beta:
        return 'b';
      case Letter::beta_inv:
        return 'B';
      case Letter::gamma:
        return 'g';
      case Letter::delta:
        return 'd';
      case Letter::delta_inv:
        return 'D';
    }
    return '?';
  }

  Word parse_word(std::string_view text) {
    Word result;
    result.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      char const c = text[i];
      switch (c) {
        case 'a':
        case 'A':
          result.push_back(Letter::alpha);
          break;
        case 'g':
        case 'G':
          result.push_back(Letter::gamma);
          break;
        case 'b':
          result.push_back(Letter::beta);
          break;
        case 'B':
          result.push_back(Letter::beta_inv);
          break;
        case 'd':
          result.push_back(Letter::delta);
          break;
        case 'D':
          result.push_back(Letter::delta_inv);
          break;
        case ' ':
        case '\t':
        case '\n':
        case '\r':
        case '\f':
        case '\v':
          break;
        default:
          throw parse_error("unexpected character '" + std::string(1, c)
                                + "' at position " + std::to_string(i)
                                + " (expected one of aAbBgGdD)",
                            i);
      }
    }
    return result;
  }

  std::string render(Word const& w) {
    std::string result;
    result.reserve(w.size());
    for (Letter l : w) {
      result.push_back(to_char(l));
    }
    return result;
  }

  Word free_reduce(Word const& w) {
    // Stack based: every letter either cancels the top or is pushed.
    Word result;
    result.reserve(w.size());
    for (Letter l : w) {
      if (!result.empty() && result.back() == inverse(l)) {
        result.pop_back();
      } else {
        result.push_back(l);
      }
    }
    return result;
  }

  Word inverse(Word const& w) {
    Word result;
    result.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      result.push_back(inverse(*it));
    }
    return result;
  }

  Word operator*(Word const& u, Word const& v) {
    Word result;
    result.reserve(u.size() + v.size());
    result.insert(result.end(), u.begin(), u.end());
    result.insert(result.end(), v.begin(), v.end());
    return result;
  }

  Word power(Word const& w, std::size_t k) {
    Word result;
    result.reserve(w.size() * k);
    for (std::size_t i = 0; i < k; ++i) {
      result.insert(result.end(), w.begin(), w.end());
    }
    return result;
  }

  Word random_word(std::size_t length, std::uint64_t seed) {
    std::mt19937_64                            gen(seed);
    std::uniform_int_distribution<std::size_t> pick(0, std::size(all_letters) - 1);
    Word                                       w;
    w.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
      w.push_back(all_letters[pick(gen)]);
    }
    return free_reduce(w);
  }

}  // namespace goeritz
