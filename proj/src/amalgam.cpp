#include "goeritz/amalgam.hpp"

#include <limits>

namespace goeritz {

  bool operator<(Syllable const& x, Syllable const& y) {
    if (x.factor != y.factor) {
      return x.factor < y.factor;
    }
    return x.exponent < y.exponent;
  }

  AmalgamElem& AmalgamElem::push(Letter l) {
    switch (l) {
      case Letter::alpha:
        return push(EElem{true, false});
      case Letter::gamma:
        return push(EElem{false, true});
      case Letter::beta:
      case Letter::beta_inv:
        return push(*letter_image_p(l));
      case Letter::delta:
      case Letter::delta_inv:
        return push(*letter_image_m(l));
    }
    return *this;
  }

  // x = s_1 ... s_r e and g in H_P. If s_r is a P-syllable it is absorbed
  // together with e into one element of H_P, which is then split again as
  // beta^n * e'. Dropping s_r leaves a normal form ending in an M-syllable
  // (or nothing), so appending beta^n (when n != 0) keeps the alternation
  // and no further cascade is needed.
  AmalgamElem& AmalgamElem::push(PElem const& g) {
    PElem h = embed_p(_tail) * g;
    if (!_syllables.empty() && _syllables.back().factor == Factor::P) {
      h = PElem{_syllables.back().exponent, false, false} * h;
      _syllables.pop_back();
    }
    auto [rep, e] = p_decompose(h);
    if (rep != 0) {
      _syllables.push_back({Factor::P, std::move(rep)});
    }
    _tail = e;
    return *this;
  }

  AmalgamElem& AmalgamElem::push(MElem g) {
    MElem h = embed_m(_tail) * g;
    if (!_syllables.empty() && _syllables.back().factor == Factor::M) {
      h = m_element(_syllables.back()) * h;
      _syllables.pop_back();
    }
    auto [rep, e] = m_decompose(h);
    if (rep != 0) {
      _syllables.push_back({Factor::M, Integer(rep)});
    }
    _tail = e;
    return *this;
  }

  AmalgamElem& AmalgamElem::push(EElem e) {
    _tail = _tail * e;
    return *this;
  }

  AmalgamElem& AmalgamElem::push(Syllable const& s) {
    if (s.factor == Factor::P) {
      return push(p_element(s));
    }
    return push(m_element(s));
  }

  AmalgamElem push_letter(AmalgamElem x, Letter l) {
    x.push(l);
    return x;
  }

  AmalgamElem normal_form(Word const& w) {
    AmalgamElem x;
    for (Letter l : w) {
      x.push(l);
    }
    return x;
  }

  AmalgamElem operator*(AmalgamElem const& x, AmalgamElem const& y) {
    AmalgamElem result = x;
    for (auto const& s : y.syllables()) {
      result.push(s);
    }
    result.push(y.tail());
    return result;
  }

  AmalgamElem inverse(AmalgamElem const& x) {
    AmalgamElem result;
    result.push(inverse(x.tail()));
    auto const& s = x.syllables();
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
      if (it->factor == Factor::P) {
        result.push(PElem{-it->exponent, false, false});
      } else {
        result.push(inverse(m_element(*it)));
      }
    }
    return result;
  }

  bool equal(Word const& u, Word const& v) {
    return normal_form(u) == normal_form(v);
  }

  PElem p_element(Syllable const& s) {
    return {s.exponent, false, false};
  }

  MElem m_element(Syllable const& s) {
    return make_m(s.exponent, false, false);
  }

  Word render(AmalgamElem const& x) {
    Word w;
    for (auto const& s : x.syllables()) {
      if (s.factor == Factor::P) {
        Letter const l = s.exponent > 0 ? Letter::beta : Letter::beta_inv;
        for (Integer i = abs(s.exponent); i > 0; --i) {
          w.push_back(l);
        }
      } else {
        w.insert(w.end(), s.exponent == 1 ? 1 : 2, Letter::delta);
      }
    }
    if (x.tail().alpha) {
      w.push_back(Letter::alpha);
    }
    if (x.tail().gamma) {
      w.push_back(Letter::gamma);
    }
    return w;
  }

  element_order_type order(AmalgamElem const& x) {
    AmalgamElem power = x;
    for (std::size_t k = 1; k <= 6; ++k) {
      if (power.is_identity()) {
        return k;
      }
      power = power * x;
    }
    return std::nullopt;
  }

  element_order_type order(Word const& w) {
    return order(normal_form(w));
  }

  Membership membership(AmalgamElem const& x) {
    auto const& s = x.syllables();
    if (s.empty()) {
      return Membership::in_he;
    } else if (s.size() == 1) {
      return s[0].factor == Factor::P ? Membership::in_hp_only
                                      : Membership::in_hm_only;
    }
    return Membership::not_in_factors;
  }

  Membership membership(Word const& w) {
    return membership(normal_form(w));
  }

  std::string_view to_string(Membership m) noexcept {
    switch (m) {
      case Membership::in_he:
        return "InHE";
      case Membership::in_hp_only:
        return "InHPOnly";
      case Membership::in_hm_only:
        return "InHMOnly";
      case Membership::not_in_factors:
        return "NotInFactors";
    }
    return "";
  }

  namespace {
    Relator rel(std::string name, std::string_view word) {
      return {std::move(name), parse_word(word)};
    }
  }  // namespace

  std::vector<RelatorFamily> relator_families() {
    return {{"H2",
             {rel("a^2 = 1", "aa"),
              rel("g^2 = 1", "gg"),
              rel("d^3 = 1", "ddd"),
              rel("(ag)^2 = 1", "agag"),
              rel("adaD = 1", "adaD"),
              rel("abaB = 1", "abaB"),
              rel("gbg = ab", "gbgBA"),
              rel("d = gddg", "DgddG")}},
            {"HP",
             {rel("a^2 = 1", "aa"),
              rel("g^2 = 1", "gg"),
              rel("(ag)^2 = 1", "agag"),
              rel("abaB = 1", "abaB"),
              rel("gbg = ab", "gbgBA")}},
            {"HM",
             {rel("d^3 = 1", "ddd"),
              rel("a^2 = 1", "aa"),
              rel("g^2 = 1", "gg"),
              rel("adAD = 1", "adAD"),
              rel("(ag)^2 = 1", "agag"),
              rel("d = gddg", "DgddG")}},
            {"HE",
             {rel("a^2 = 1", "aa"),
              rel("g^2 = 1", "gg"),
              rel("(ag)^2 = 1", "agag")}}};
  }

  std::vector<Word> relators() {
    auto const        families = relator_families();
    std::vector<Word> result;
    for (auto const& r : families.front().relators) {
      result.push_back(r.word);
    }
    return result;
  }

  Word theta_twist(Word const& w) {
    Word result;
    result.reserve(2 * w.size());
    for (Letter l : w) {
      switch (l) {
        case Letter::beta:
          result.push_back(Letter::alpha);
          result.push_back(Letter::beta);
          break;
        case Letter::beta_inv:
          result.push_back(Letter::beta_inv);
          result.push_back(Letter::alpha);
          break;
        case Letter::gamma:
          result.push_back(Letter::alpha);
          result.push_back(Letter::gamma);
          break;
        default:
          result.push_back(l);
      }
    }
    return result;
  }

  namespace {
    nlohmann::ordered_json exponent_json(Integer const& n) {
      if (n >= std::numeric_limits<std::int64_t>::min()
          && n <= std::numeric_limits<std::int64_t>::max()) {
        return n.convert_to<std::int64_t>();
      }
      return n.str();
    }
  }  // namespace

  nlohmann::ordered_json syllables_to_json(std::vector<Syllable> const& s) {
    auto result = nlohmann::ordered_json::array();
    for (auto const& syl : s) {
      nlohmann::ordered_json j;
      j["factor"] = syl.factor == Factor::P ? "P" : "M";
      j["exp"]    = exponent_json(syl.exponent);
      result.push_back(std::move(j));
    }
    return result;
  }

  nlohmann::ordered_json to_json(AmalgamElem const& x) {
    nlohmann::ordered_json j;
    j["syllables"]     = syllables_to_json(x.syllables());
    j["tail"]["alpha"] = x.tail().alpha ? 1 : 0;
    j["tail"]["gamma"] = x.tail().gamma ? 1 : 0;
    return j;
  }

}  // namespace goeritz
