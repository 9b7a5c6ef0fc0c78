#include "goeritz/factors.hpp"

namespace goeritz {

  EElem operator*(EElem x, EElem y) noexcept {
    return {x.alpha != y.alpha, x.gamma != y.gamma};
  }

  // beta^n alpha^a gamma^c * beta^m alpha^b gamma^d: moving gamma^c past
  // beta^m produces alpha^(c*m) since gamma beta^m = alpha^m beta^m gamma.
  PElem operator*(PElem const& x, PElem const& y) {
    bool const twist = x.gamma && bit_test(y.beta, 0);
    return {x.beta + y.beta, (x.alpha != y.alpha) != twist, x.gamma != y.gamma};
  }

  // gamma delta^m = delta^(-m) gamma and alpha is central.
  MElem operator*(MElem x, MElem y) noexcept {
    int const m = x.gamma ? (3 - y.delta) % 3 : y.delta;
    return {static_cast<std::uint8_t>((x.delta + m) % 3),
            x.alpha != y.alpha,
            x.gamma != y.gamma};
  }

  EElem inverse(EElem x) noexcept {
    return x;
  }

  PElem inverse(PElem const& x) {
    bool const twist = x.gamma && bit_test(x.beta, 0);
    return {-x.beta, x.alpha != twist, x.gamma};
  }

  MElem inverse(MElem x) noexcept {
    // (delta^k g)^-1 = g^-1 delta^-k and g = alpha^a gamma^c flips the sign
    // of delta exactly when c = 1.
    std::uint8_t const k = x.gamma ? x.delta : (3 - x.delta) % 3;
    return {k, x.alpha, x.gamma};
  }

  bool is_identity(EElem x) noexcept {
    return !x.alpha && !x.gamma;
  }

  bool is_identity(PElem const& x) {
    return x.beta == 0 && !x.alpha && !x.gamma;
  }

  bool is_identity(MElem x) noexcept {
    return x.delta == 0 && !x.alpha && !x.gamma;
  }

  PElem embed_p(EElem e) {
    return {0, e.alpha, e.gamma};
  }

  MElem embed_m(EElem e) noexcept {
    return {0, e.alpha, e.gamma};
  }

  MElem make_m(Integer const& k, bool alpha, bool gamma) {
    Integer r = k % 3;
    if (r < 0) {
      r += 3;
    }
    return {static_cast<std::uint8_t>(r.convert_to<int>()), alpha, gamma};
  }

  PDecomposition p_decompose(PElem const& x) {
    return {x.beta, {x.alpha, x.gamma}};
  }

  MDecomposition m_decompose(MElem x) noexcept {
    return {x.delta, {x.alpha, x.gamma}};
  }

  std::optional<PElem> letter_image_p(Letter l) {
    switch (l) {
      case Letter::alpha:
        return PElem{0, true, false};
      case Letter::gamma:
        return PElem{0, false, true};
      case Letter::beta:
        return PElem{1, false, false};
      case Letter::beta_inv:
        return PElem{-1, false, false};
      default:
        return std::nullopt;
    }
  }

  std::optional<MElem> letter_image_m(Letter l) {
    switch (l) {
      case Letter::alpha:
        return MElem{0, true, false};
      case Letter::gamma:
        return MElem{0, false, true};
      case Letter::delta:
        return MElem{1, false, false};
      case Letter::delta_inv:
        return MElem{2, false, false};
      default:
        return std::nullopt;
    }
  }

  element_order_type element_order(PElem const& x) {
    // If gamma is absent, x^k = (k n, k a mod 2, 0). If gamma is present,
    // x^2 = (2n, c n mod 2, 0) so x has finite order only when n = 0.
    if (x.beta != 0) {
      return std::nullopt;
    }
    return (x.alpha || x.gamma) ? 2 : 1;
  }

  std::size_t element_order(MElem x) noexcept {
    MElem       power = x;
    std::size_t k     = 1;
    while (!is_identity(power)) {
      power = power * x;
      ++k;
    }
    return k;
  }

  std::vector<EElem> all_e_elements() {
    return {{false, false}, {false, true}, {true, false}, {true, true}};
  }

  std::vector<MElem> all_m_elements() {
    std::vector<MElem> result;
    for (std::uint8_t k = 0; k < 3; ++k) {
      for (bool a : {false, true}) {
        for (bool c : {false, true}) {
          result.push_back({k, a, c});
        }
      }
    }
    return result;
  }

  std::ostream& operator<<(std::ostream& os, EElem const& x) {
    return os << "(" << x.alpha << "," << x.gamma << ")";
  }

  std::ostream& operator<<(std::ostream& os, PElem const& x) {
    return os << "(" << x.beta << "," << x.alpha << "," << x.gamma << ")";
  }

  std::ostream& operator<<(std::ostream& os, MElem const& x) {
    return os << "(" << int(x.delta) << "," << x.alpha << "," << x.gamma
              << ")";
  }

}  // namespace goeritz
