#pragma once

// Normal forms in H_2 = H_P *_{H_E} H_M.
//
// Every element has a unique expression
//
//   s_1 s_2 ... s_r e
//
// where the s_i are non-trivial transversal representatives (beta^n with
// n != 0, or delta, delta^2) taken alternately from H_P and H_M, and e lies
// in H_E. The H_E part is kept at the right hand end, so the coset w H_P or
// w H_M of an element is read off by dropping e (and possibly s_r).

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "goeritz/factors.hpp"
#include "goeritz/words.hpp"

namespace goeritz {

  enum class Factor : std::uint8_t { P, M };

  struct Syllable {
    Factor  factor;
    Integer exponent;  // non-zero; in {1, 2} when factor == Factor::M

    friend bool operator==(Syllable const&, Syllable const&) = default;
  };

  bool operator<(Syllable const& x, Syllable const& y);

  class AmalgamElem {
   public:
    AmalgamElem() = default;

    std::vector<Syllable> const& syllables() const noexcept {
      return _syllables;
    }

    EElem tail() const noexcept {
      return _tail;
    }

    bool is_identity() const noexcept {
      return _syllables.empty() && goeritz::is_identity(_tail);
    }

    // Right multiplication, keeping the normal form.
    AmalgamElem& push(Letter l);
    AmalgamElem& push(PElem const& x);
    AmalgamElem& push(MElem x);
    AmalgamElem& push(EElem x);
    AmalgamElem& push(Syllable const& s);

    friend bool operator==(AmalgamElem const&, AmalgamElem const&) = default;

   private:
    std::vector<Syllable> _syllables;
    EElem                 _tail;
  };

  AmalgamElem push_letter(AmalgamElem x, Letter l);

  // Left fold of push_letter; linear in |w|.
  AmalgamElem normal_form(Word const& w);

  AmalgamElem operator*(AmalgamElem const& x, AmalgamElem const& y);
  AmalgamElem inverse(AmalgamElem const& x);

  inline bool is_identity(AmalgamElem const& x) noexcept {
    return x.is_identity();
  }

  bool equal(Word const& u, Word const& v);

  // The factor element a syllable stands for.
  PElem p_element(Syllable const& s);
  MElem m_element(Syllable const& s);

  // Spells the normal form as a word: beta^n as n copies of b (or B),
  // delta^k as d or dd, the tail as a, g or ag.
  Word render(AmalgamElem const& x);

  // Finite orders of H_2 lie in {1, 2, 3, 6}: a torsion element fixes a
  // vertex of the Bass-Serre tree, so it is conjugate into H_P (orders 1, 2)
  // or H_M (orders 1, 2, 3, 6). Checking powers up to 6 is therefore
  // complete.
  element_order_type order(Word const& w);
  element_order_type order(AmalgamElem const& x);

  enum class Membership : std::uint8_t {
    in_he,
    in_hp_only,
    in_hm_only,
    not_in_factors
  };

  Membership       membership(Word const& w);
  Membership       membership(AmalgamElem const& x);
  std::string_view to_string(Membership m) noexcept;

  struct Relator {
    std::string name;  // the relation as written, e.g. "gbg = ab"
    Word        word;  // relator form, trivial in the group
  };

  struct RelatorFamily {
    std::string          name;
    std::vector<Relator> relators;
  };

  // The eight relators of the presentation of H_2:
  // aa, gg, ddd, agag, adaD, abaB, gbgBA, DgddG.
  std::vector<Word> relators();

  // H_2 (8), H_P (5), H_M (6) and H_E (3), in that order.
  std::vector<RelatorFamily> relator_families();

  // Letterwise substitution alpha -> alpha, beta -> alpha beta,
  // gamma -> alpha gamma, delta -> delta (inverses accordingly).
  Word theta_twist(Word const& w);

  // {"syllables":[{"factor":"P","exp":3},...],"tail":{"alpha":0,"gamma":1}}
  // Exponents that do not fit into 64 bits are written as decimal strings.
  nlohmann::ordered_json to_json(AmalgamElem const& x);
  nlohmann::ordered_json syllables_to_json(std::vector<Syllable> const& s);

}  // namespace goeritz
