#include "goeritz/homology.hpp"

#include <numeric>
#include <utility>

#include "goeritz/errors.hpp"

namespace goeritz {

  namespace {
    std::int64_t checked_add(std::int64_t x, std::int64_t y) {
      std::int64_t r;
      if (__builtin_add_overflow(x, y, &r)) {
        throw invariant_error("integer overflow in homology matrix");
      }
      return r;
    }

    std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
      std::int64_t r;
      if (__builtin_mul_overflow(x, y, &r)) {
        throw invariant_error("integer overflow in homology matrix");
      }
      return r;
    }

    // Column j of the result is the image of basis vector j.
    HomMatrix from_columns(std::array<HomMatrix::row_type, 4> const& cols) {
      HomMatrix m;
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
          m(i, j) = cols[j][i];
        }
      }
      return m;
    }

    //                          B  Z  C  Y
    HomMatrix const alpha_matrix = -HomMatrix::identity();
    HomMatrix const beta_matrix  = from_columns({{{1, 0, 0, 0},
                                                  {0, 1, 0, 0},
                                                  {0, 0, -1, 0},
                                                  {0, 0, 0, -1}}});
    HomMatrix const gamma_matrix = from_columns({{{0, 0, -1, 0},
                                                  {0, 0, 0, 1},
                                                  {-1, 0, 0, 0},
                                                  {0, 1, 0, 0}}});
    HomMatrix const delta_matrix = from_columns({{{0, 0, 1, 0},
                                                  {0, -1, 0, -1},
                                                  {-1, 0, -1, 0},
                                                  {0, 1, 0, 0}}});

    using Rational = std::pair<std::int64_t, std::int64_t>;  // num, den > 0

    Rational normalise(std::int64_t num, std::int64_t den) {
      if (den < 0) {
        num = -num;
        den = -den;
      }
      std::int64_t const g = std::gcd(num, den);
      return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
    }

    Rational sub(Rational x, Rational y) {
      return normalise(checked_add(checked_mul(x.first, y.second),
                                   -checked_mul(y.first, x.second)),
                       checked_mul(x.second, y.second));
    }

    Rational mul(Rational x, Rational y) {
      return normalise(checked_mul(x.first, y.first),
                       checked_mul(x.second, y.second));
    }

    Rational div(Rational x, Rational y) {
      return normalise(checked_mul(x.first, y.second),
                       checked_mul(x.second, y.first));
    }

    constexpr std::array<std::pair<std::size_t, std::size_t>, 6> upper
        = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

    HomMatrix antisymmetric(std::array<std::int64_t, 6> const& coeffs) {
      HomMatrix j;
      for (std::size_t k = 0; k < 6; ++k) {
        auto [r, c] = upper[k];
        j(r, c)     = coeffs[k];
        j(c, r)     = -coeffs[k];
      }
      return j;
    }

    // Nullspace of an m x 6 rational system by reduction to row echelon
    // form; each basis vector is scaled to a primitive integer vector.
    std::vector<std::array<std::int64_t, 6>>
    nullspace(std::vector<std::array<Rational, 6>> rows) {
      std::array<int, 6> pivot_row;
      pivot_row.fill(-1);
      std::size_t rank = 0;
      for (std::size_t col = 0; col < 6 && rank < rows.size(); ++col) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][col].first == 0) {
          ++p;
        }
        if (p == rows.size()) {
          continue;
        }
        std::swap(rows[rank], rows[p]);
        Rational const lead = rows[rank][col];
        for (auto& x : rows[rank]) {
          x = div(x, lead);
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (r != rank && rows[r][col].first != 0) {
            Rational const f = rows[r][col];
            for (std::size_t c = 0; c < 6; ++c) {
              rows[r][c] = sub(rows[r][c], mul(f, rows[rank][c]));
            }
          }
        }
        pivot_row[col] = static_cast<int>(rank++);
      }

      std::vector<std::array<std::int64_t, 6>> basis;
      for (std::size_t free = 0; free < 6; ++free) {
        if (pivot_row[free] != -1) {
          continue;
        }
        std::array<Rational, 6> v;
        v.fill({0, 1});
        v[free] = {1, 1};
        for (std::size_t col = 0; col < 6; ++col) {
          if (pivot_row[col] != -1) {
            v[col] = normalise(-rows[pivot_row[col]][free].first,
                               rows[pivot_row[col]][free].second);
          }
        }
        std::int64_t l = 1;
        for (auto const& x : v) {
          l = std::lcm(l, x.second);
        }
        std::array<std::int64_t, 6> w;
        std::int64_t                g = 0;
        for (std::size_t k = 0; k < 6; ++k) {
          w[k] = checked_mul(v[k].first, l / v[k].second);
          g    = std::gcd(g, w[k]);
        }
        for (auto& x : w) {
          x /= g;
        }
        basis.push_back(w);
      }
      return basis;
    }
  }  // namespace

  HomMatrix HomMatrix::identity() {
    HomMatrix m;
    for (std::size_t i = 0; i < 4; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  HomMatrix HomMatrix::transpose() const {
    HomMatrix m;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        m(i, j) = (*this)(j, i);
      }
    }
    return m;
  }

  HomMatrix operator*(HomMatrix const& x, HomMatrix const& y) {
    HomMatrix m;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < 4; ++k) {
          s = checked_add(s, checked_mul(x(i, k), y(k, j)));
        }
        m(i, j) = s;
      }
    }
    return m;
  }

  HomMatrix operator-(HomMatrix const& x) {
    HomMatrix m;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        m(i, j) = checked_mul(-1, x(i, j));
      }
    }
    return m;
  }

  // Laplace expansion along the first row.
  std::int64_t determinant(HomMatrix const& x) {
    auto minor3 = [&](std::size_t skip) {
      std::array<std::size_t, 3> c{};
      for (std::size_t j = 0, k = 0; j < 4; ++j) {
        if (j != skip) {
          c[k++] = j;
        }
      }
      auto e = [&](std::size_t i, std::size_t j) { return x(i + 1, c[j]); };
      std::int64_t d = 0;
      d = checked_add(d, checked_mul(e(0, 0), checked_add(checked_mul(e(1, 1), e(2, 2)), -checked_mul(e(1, 2), e(2, 1)))));
      d = checked_add(d, -checked_mul(e(0, 1), checked_add(checked_mul(e(1, 0), e(2, 2)), -checked_mul(e(1, 2), e(2, 0)))));
      d = checked_add(d, checked_mul(e(0, 2), checked_add(checked_mul(e(1, 0), e(2, 1)), -checked_mul(e(1, 1), e(2, 0)))));
      return d;
    };
    std::int64_t d = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      std::int64_t const t = checked_mul(x(0, j), minor3(j));
      d                    = checked_add(d, j % 2 == 0 ? t : -t);
    }
    return d;
  }

  std::ostream& operator<<(std::ostream& os, HomMatrix const& x) {
    for (std::size_t i = 0; i < 4; ++i) {
      os << (i == 0 ? "[" : " ");
      for (std::size_t j = 0; j < 4; ++j) {
        os << (j == 0 ? "[" : ", ") << x(i, j);
      }
      os << (i == 3 ? "]]" : "]\n");
    }
    return os;
  }

  HomMatrix generator_matrix(Letter l) {
    switch (l) {
      case Letter::alpha:
        return alpha_matrix;
      case Letter::beta:
      case Letter::beta_inv:
        // beta^2 acts trivially on homology
        return beta_matrix;
      case Letter::gamma:
        return gamma_matrix;
      case Letter::delta:
        return delta_matrix;
      case Letter::delta_inv:
        return delta_matrix * delta_matrix;
    }
    return HomMatrix::identity();
  }

  HomMatrix represent(Word const& w) {
    HomMatrix m = HomMatrix::identity();
    for (Letter l : w) {
      m = m * generator_matrix(l);
    }
    return m;
  }

  std::vector<HomMatrix>
  invariant_forms(std::span<HomMatrix const> generators) {
    // The equations (M^T J M - J)(r, c) = 0 for r < c are linear in the
    // six upper triangular entries of J.
    std::vector<std::array<Rational, 6>> rows;
    for (auto const& m : generators) {
      std::array<HomMatrix, 6> images;
      for (std::size_t k = 0; k < 6; ++k) {
        std::array<std::int64_t, 6> e{};
        e[k]      = 1;
        auto const basis = antisymmetric(e);
        images[k] = m.transpose() * basis * m;
        for (std::size_t i = 0; i < 4; ++i) {
          for (std::size_t j = 0; j < 4; ++j) {
            images[k](i, j) = checked_add(images[k](i, j), -basis(i, j));
          }
        }
      }
      for (auto [r, c] : upper) {
        std::array<Rational, 6> row;
        for (std::size_t k = 0; k < 6; ++k) {
          row[k] = {images[k](r, c), 1};
        }
        rows.push_back(row);
      }
    }
    std::vector<HomMatrix> result;
    for (auto const& v : nullspace(std::move(rows))) {
      result.push_back(antisymmetric(v));
    }
    return result;
  }

  HomMatrix invariant_form() {
    std::array<HomMatrix, 4> const gens
        = {alpha_matrix, beta_matrix, gamma_matrix, delta_matrix};
    auto const forms = invariant_forms(gens);
    for (auto const& j : forms) {
      if (determinant(j) != 0) {
        return j;
      }
    }
    // With more than one basis form, small combinations could still be
    // nondegenerate.
    if (forms.size() > 1) {
      for (std::int64_t a = -2; a <= 2; ++a) {
        for (std::int64_t b = -2; b <= 2; ++b) {
          HomMatrix j;
          for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t c = 0; c < 4; ++c) {
              j(r, c) = a * forms[0](r, c) + b * forms[1](r, c);
            }
          }
          if (determinant(j) != 0) {
            return j;
          }
        }
      }
    }
    throw invariant_error("no invariant form: the generator matrices do not "
                          "preserve a nondegenerate antisymmetric form");
  }

}  // namespace goeritz
