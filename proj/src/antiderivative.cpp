#include "integrable/antiderivative.hpp"

#include "integrable/linsolve.hpp"

#include <tuple>

namespace integrable {

namespace {

// Grading preserved by d: counts of v-, theta_u-, theta_v-jets, the e^u
// exponent and the total jet order (raised by exactly one).
struct Shape {
  std::uint32_t nv, ntu, ntv, expu, order;
  auto operator<=>(const Shape&) const = default;
};

Shape shape_of(const Monomial& m) {
  return {m.degree(Kind::V), m.degree(Kind::ThetaU), m.degree(Kind::ThetaV), m.exp_u(), m.total_order()};
}

}  // namespace

std::optional<SuperPoly> antiderivative(const SuperPoly& p) {
  // Slice by (shape, eps, q): d is Coeff-linear and preserves the shape.
  using SliceKey = std::tuple<Shape, CoeffKey>;
  std::map<SliceKey, std::map<Monomial, Rational>> slices;
  std::map<Shape, std::uint32_t> max_u;
  for (const auto& [m, c] : p.terms()) {
    Shape s = shape_of(m);
    auto& mu = max_u[s];
    mu = std::max(mu, m.degree(Kind::U));
    for (const auto& [k, r] : c.terms()) slices[{s, k}][m] += r;
  }

  struct System {
    RowIndex<Monomial> rows;
    ColumnEchelon echelon;
    std::vector<Monomial> candidates;
  };
  std::map<Shape, System> systems;

  SuperPoly result;
  for (const auto& [key, target] : slices) {
    const auto& [shape, ck] = key;
    if (shape.order == 0) return std::nullopt;
    auto [sit, fresh] = systems.try_emplace(shape);
    System& sys = sit->second;
    if (fresh) {
      Shape lower = shape;
      lower.order -= 1;
      for (std::uint32_t nu = 0; nu <= max_u[shape]; ++nu)
        for (auto& m : enumerate_monomials(nu, lower.nv, lower.ntu, lower.ntv, lower.expu, lower.order)) {
          SuperPoly d = derive_t(SuperPoly(m, Coeff(1)));
          SparseVector col;
          for (const auto& [dm, dc] : d.terms()) col[sys.rows.id(dm)] = dc.at(0, 0);
          sys.echelon.add_column(col);
          sys.candidates.push_back(std::move(m));
        }
    }
    SparseVector rhs;
    for (const auto& [m, r] : target) {
      auto id = sys.rows.find(m);
      if (!id) return std::nullopt;
      rhs[*id] = r;
    }
    auto x = sys.echelon.solve(rhs);
    if (!x) return std::nullopt;
    for (const auto& [j, r] : *x) {
      if (sys.candidates[j].is_one()) continue;
      result.add_term(sys.candidates[j], Coeff(r, ck.eps, ck.q));
    }
  }
  return result;
}

bool is_total_derivative_mod_constants(const SuperPoly& p) {
  SuperPoly rest = p - SuperPoly(p.constant_term());
  return antiderivative(rest).has_value();
}

}  // namespace integrable
