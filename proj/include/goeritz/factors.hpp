#pragma once

// Closed form arithmetic in the vertex and edge stabilisers
//
//   H_P = <alpha, beta, gamma>   elements beta^n alpha^a gamma^c, n in Z
//   H_M = <delta, alpha, gamma>  elements delta^k alpha^a gamma^c, k in Z/3
//   H_E = <alpha, gamma>         elements alpha^a gamma^c
//
// The product laws are the normal form consequences of the defining
// relations: alpha is central in both factors, alpha and gamma commute,
// gamma beta = alpha beta gamma and gamma delta = delta^2 gamma.
//
// Left transversals of H_E are {beta^n : n in Z} in H_P and
// {1, delta, delta^2} in H_M; the *_decompose functions split an element as
// transversal representative times an H_E tail.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "goeritz/words.hpp"

namespace goeritz {

  using Integer = boost::multiprecision::cpp_int;

  // std::nullopt stands for infinite order.
  using element_order_type = std::optional<std::size_t>;

  struct EElem {
    bool alpha = false;
    bool gamma = false;

    friend bool operator==(EElem, EElem) = default;
    friend auto operator<=>(EElem, EElem) = default;
  };

  struct PElem {
    Integer beta  = 0;
    bool    alpha = false;
    bool    gamma = false;

    friend bool operator==(PElem const&, PElem const&) = default;
  };

  struct MElem {
    std::uint8_t delta = 0;  // always in {0, 1, 2}
    bool         alpha = false;
    bool         gamma = false;

    friend bool operator==(MElem, MElem) = default;
  };

  EElem operator*(EElem x, EElem y) noexcept;
  PElem operator*(PElem const& x, PElem const& y);
  MElem operator*(MElem x, MElem y) noexcept;

  EElem inverse(EElem x) noexcept;
  PElem inverse(PElem const& x);
  MElem inverse(MElem x) noexcept;

  bool is_identity(EElem x) noexcept;
  bool is_identity(PElem const& x);
  bool is_identity(MElem x) noexcept;

  PElem embed_p(EElem e);
  MElem embed_m(EElem e) noexcept;

  // Builds the normalised element of H_M with delta exponent k mod 3.
  MElem make_m(Integer const& k, bool alpha, bool gamma);

  struct PDecomposition {
    Integer rep;  // x = beta^rep * tail
    EElem   tail;

    friend bool operator==(PDecomposition const&, PDecomposition const&)
        = default;
  };

  struct MDecomposition {
    std::uint8_t rep;  // x = delta^rep * tail
    EElem        tail;

    friend bool operator==(MDecomposition, MDecomposition) = default;
  };

  PDecomposition p_decompose(PElem const& x);
  MDecomposition m_decompose(MElem x) noexcept;

  // Absent when the letter is not in the factor (delta for H_P, beta for H_M).
  std::optional<PElem> letter_image_p(Letter l);
  std::optional<MElem> letter_image_m(Letter l);

  element_order_type element_order(PElem const& x);
  std::size_t        element_order(MElem x) noexcept;

  // Every element of the finite groups, in lexicographic order of fields.
  std::vector<EElem> all_e_elements();
  std::vector<MElem> all_m_elements();

  std::ostream& operator<<(std::ostream& os, EElem const& x);
  std::ostream& operator<<(std::ostream& os, PElem const& x);
  std::ostream& operator<<(std::ostream& os, MElem const& x);

}  // namespace goeritz
