#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace goeritz {

  // Malformed textual input (words, vertex literals).
  class parse_error : public std::runtime_error {
   public:
    parse_error(std::string const& msg, std::size_t position)
        : std::runtime_error(msg), _position(position) {}

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  // An operation was called outside its domain, e.g. descend() on vertices
  // that are already Gamma-adjacent.
  class precondition_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Something that the theory guarantees did not hold: a cycle in the tree,
  // a missing invariant form, an integer overflow in a matrix product.
  class invariant_error : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace goeritz
