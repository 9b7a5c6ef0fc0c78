#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "goeritz/factors.hpp"
#include "oracle.hpp"

using namespace goeritz;

namespace {
  std::string spell(PElem const& x) {
    std::string s;
    for (Integer i = abs(x.beta); i > 0; --i) {
      s.push_back(x.beta > 0 ? 'b' : 'B');
    }
    return s + (x.alpha ? "a" : "") + (x.gamma ? "g" : "");
  }

  std::string spell(MElem const& x) {
    std::string s = x.delta == 0 ? "" : (x.delta == 1 ? "d" : "D");
    return s + (x.alpha ? "a" : "") + (x.gamma ? "g" : "");
  }

  PElem random_p(std::mt19937_64& gen) {
    std::uniform_int_distribution<int> n(-20, 20), bit(0, 1);
    return {n(gen), bit(gen) == 1, bit(gen) == 1};
  }

  MElem random_m(std::mt19937_64& gen) {
    std::uniform_int_distribution<int> k(0, 2), bit(0, 1);
    return {static_cast<std::uint8_t>(k(gen)), bit(gen) == 1, bit(gen) == 1};
  }

  PElem eval_p(std::string_view w) {
    PElem x;
    for (Letter l : parse_word(w)) {
      x = x * *letter_image_p(l);
    }
    return x;
  }

  MElem eval_m(std::string_view w) {
    MElem x;
    for (Letter l : parse_word(w)) {
      x = x * *letter_image_m(l);
    }
    return x;
  }
}  // namespace

TEST_CASE("multiplication examples", "[factors]") {
  // gamma beta = alpha beta gamma; the rewriting oracle agrees
  CHECK(oracle::rewrite("gb") == "bag");
  CHECK(PElem{0, false, true} * PElem{1, false, false}
        == PElem{1, true, true});
  // gamma delta = delta^2 gamma
  CHECK(oracle::rewrite("gd") == "Dg");
  CHECK(MElem{0, false, true} * MElem{1, false, false}
        == MElem{2, false, true});
  CHECK(EElem{true, false} * EElem{true, false} == EElem{});
}

TEST_CASE("products agree with the rewriting oracle", "[factors][property]") {
  std::mt19937_64 gen(17);
  for (int i = 0; i < 2000; ++i) {
    PElem const x = random_p(gen), y = random_p(gen);
    CHECK(spell(x * y) == oracle::rewrite(spell(x) + spell(y)));
    MElem const u = random_m(gen), v = random_m(gen);
    CHECK(spell(u * v) == oracle::rewrite(spell(u) + spell(v)));
  }
}

TEST_CASE("group axioms on random triples", "[factors][property]") {
  std::mt19937_64 gen(2024);
  for (int i = 0; i < 10000; ++i) {
    PElem const x = random_p(gen), y = random_p(gen), z = random_p(gen);
    REQUIRE((x * y) * z == x * (y * z));
    REQUIRE(is_identity(x * inverse(x)));
    REQUIRE(is_identity(inverse(x) * x));
    REQUIRE(x * PElem{} == x);

    MElem const u = random_m(gen), v = random_m(gen), w = random_m(gen);
    REQUIRE((u * v) * w == u * (v * w));
    REQUIRE(is_identity(u * inverse(u)));
    REQUIRE(is_identity(inverse(u) * u));
  }
  for (auto e : all_e_elements()) {
    for (auto f : all_e_elements()) {
      for (auto g : all_e_elements()) {
        CHECK((e * f) * g == e * (f * g));
      }
      CHECK(embed_p(e) * embed_p(f) == embed_p(e * f));
      CHECK(embed_m(e) * embed_m(f) == embed_m(e * f));
    }
  }
}

TEST_CASE("inverse formula in H_P", "[factors]") {
  // (n, a, c)^-1 = (-n, a xor (c n mod 2), c)
  CHECK(inverse(PElem{3, false, true}) == PElem{-3, true, true});
  CHECK(inverse(PElem{2, true, true}) == PElem{-2, true, true});
  CHECK(inverse(PElem{-5, true, false}) == PElem{5, true, false});
}

TEST_CASE("finite factors by enumeration", "[factors]") {
  CHECK(all_e_elements().size() == 4);
  auto const hm = all_m_elements();
  CHECK(hm.size() == 12);
  // closed under multiplication and pairwise distinct
  std::set<std::string> seen;
  for (auto const& x : hm) {
    seen.insert(spell(x));
    for (auto const& y : hm) {
      CHECK(std::find(hm.begin(), hm.end(), x * y) != hm.end());
    }
  }
  CHECK(seen.size() == 12);

  std::set<std::size_t> orders;
  for (auto const& x : hm) {
    orders.insert(element_order(x));
  }
  CHECK(orders == std::set<std::size_t>{1, 2, 3, 6});
}

TEST_CASE("element orders", "[factors]") {
  CHECK_FALSE(element_order(PElem{1, false, false}).has_value());
  CHECK(element_order(MElem{1, true, false}) == 6);  // alpha delta
  CHECK(element_order(MElem{1, false, true}) == 2);  // gamma delta
  CHECK(element_order(MElem{2, false, false}) == 3);
  CHECK(element_order(PElem{0, true, true}) == 2);
  CHECK(element_order(PElem{}) == 1);
  // torsion in H_P is exactly the H_E part
  for (int n = -6; n <= 6; ++n) {
    for (bool a : {false, true}) {
      for (bool c : {false, true}) {
        PElem const x{n, a, c};
        bool const  finite = element_order(x).has_value();
        CHECK(finite == (n == 0));
        if (!finite) {
          // brute force: no power up to 12 is trivial
          PElem p = x;
          for (int k = 1; k <= 12; ++k, p = p * x) {
            CHECK_FALSE(is_identity(p));
          }
        }
      }
    }
  }
}

TEST_CASE("relators of the factor presentations", "[factors]") {
  for (auto w : {"aa", "gg", "agag", "abaB", "gbgBA"}) {
    CAPTURE(w);
    CHECK(is_identity(eval_p(w)));
  }
  for (auto w : {"ddd", "aa", "gg", "adAD", "agag", "DgddG"}) {
    CAPTURE(w);
    CHECK(is_identity(eval_m(w)));
  }
  CHECK(eval_m("gddg") == eval_m("d"));
}

TEST_CASE("decompositions", "[factors]") {
  CHECK(p_decompose(PElem{3, true, false})
        == PDecomposition{3, {true, false}});
  CHECK(p_decompose(PElem{1, true, true}) == PDecomposition{1, {true, true}});
  // beta * alpha gamma = (1, 1, 1)
  CHECK(PElem{1, false, false} * embed_p({true, true})
        == PElem{1, true, true});
  CHECK(m_decompose(MElem{2, false, true}) == MDecomposition{2, {false, true}});

  std::mt19937_64 gen(5);
  for (int i = 0; i < 1000; ++i) {
    PElem const x       = random_p(gen);
    auto const [n, e]   = p_decompose(x);
    CHECK(PElem{n, false, false} * embed_p(e) == x);
  }
  std::set<std::pair<int, int>> images;
  for (auto const& x : all_m_elements()) {
    auto const [k, e] = m_decompose(x);
    CHECK(MElem{k, false, false} * embed_m(e) == x);
    images.insert({k, e.alpha * 2 + e.gamma});
  }
  CHECK(images.size() == 12);  // bijective onto {1, d, d^2} x H_E
}

TEST_CASE("letter images", "[factors]") {
  CHECK_FALSE(letter_image_p(Letter::delta).has_value());
  CHECK_FALSE(letter_image_m(Letter::beta).has_value());
  CHECK(letter_image_m(Letter::delta_inv) == MElem{2, false, false});
  CHECK(letter_image_p(Letter::alpha) == PElem{0, true, false});
  CHECK(letter_image_p(Letter::beta_inv) == PElem{-1, false, false});
  CHECK(letter_image_m(Letter::gamma) == MElem{0, false, true});
}

TEST_CASE("beta exponents are unbounded", "[factors]") {
  Integer const big = Integer(1) << 100;
  PElem const   x{big, false, true};
  PElem const   y = x * x;
  CHECK(y.beta == 2 * big);
  CHECK(is_identity(x * inverse(x)));
  CHECK(make_m(Integer(-4), false, false) == MElem{2, false, false});
}
