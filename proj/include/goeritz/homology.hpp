#pragma once

// The action of H_2 on H_1(T; Z) of the genus two Heegaard surface, in the
// ordered basis ([B], [Z], [C], [Y]) with [A] = -[B] - [C] and
// [X] = -[Z] - [Y]. Matrices act on column vectors, so represent(w) for
// w = l_1 ... l_n is M(l_1) ... M(l_n).
//
// The representation is not faithful (beta maps to an involution); it is
// used as an independent consistency check on the word problem.

#include <array>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "goeritz/words.hpp"

namespace goeritz {

  class HomMatrix {
   public:
    using row_type = std::array<std::int64_t, 4>;

    HomMatrix() = default;
    explicit HomMatrix(std::array<row_type, 4> const& rows) : _rows(rows) {}

    static HomMatrix identity();

    std::int64_t operator()(std::size_t i, std::size_t j) const {
      return _rows[i][j];
    }

    std::int64_t& operator()(std::size_t i, std::size_t j) {
      return _rows[i][j];
    }

    std::array<row_type, 4> const& rows() const noexcept {
      return _rows;
    }

    HomMatrix transpose() const;

    friend bool operator==(HomMatrix const&, HomMatrix const&) = default;

   private:
    std::array<row_type, 4> _rows{};
  };

  // Entries are checked: overflow throws invariant_error.
  HomMatrix    operator*(HomMatrix const& x, HomMatrix const& y);
  HomMatrix    operator-(HomMatrix const& x);
  std::int64_t determinant(HomMatrix const& x);

  std::ostream& operator<<(std::ostream& os, HomMatrix const& x);

  // alpha = -I, beta = diag(1, 1, -1, -1),
  // gamma: [B] -> -[C], [C] -> -[B], [Z] -> [Y], [Y] -> [Z],
  // delta: [B] -> [C], [C] -> -[B] - [C], [Y] -> [Z], [Z] -> -[Z] - [Y].
  HomMatrix generator_matrix(Letter l);

  HomMatrix represent(Word const& w);

  // Basis (with primitive integer entries) of the antisymmetric J satisfying
  // M^T J M = J for every M in `generators`.
  std::vector<HomMatrix> invariant_forms(std::span<HomMatrix const> generators);

  // A nondegenerate antisymmetric form preserved by all generator matrices.
  // Throws invariant_error if there is none.
  HomMatrix invariant_form();

}  // namespace goeritz
