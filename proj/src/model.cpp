#include "scrollar/model.hpp"

#include <algorithm>
#include <optional>

#include "scrollar/errors.hpp"

namespace scrollar {

int nondegenerate_order(const DeletionSpec& spec, int i) {
  auto below = [i](const std::vector<int>& v) {
    return static_cast<int>(std::count_if(v.begin(), v.end(), [i](int s) { return s < i; }));
  };
  return 2 + below(spec.col1_deleted) - below(spec.col0_deleted);
}

DivisorModel derive_model(const DeletionSpec& spec) {
  require_valid(spec);
  const int g = spec.genus;
  DivisorModel model;
  model.spec_ = spec;
  model.lambda_D_ = build_lambda_D(spec);

  std::vector<std::optional<long>> diag0(static_cast<std::size_t>(g + 1));
  std::vector<std::optional<long>> diag1(static_cast<std::size_t>(g + 1));
  for (int y = 0; y < model.lambda_D_.rows(); ++y) {
    diag0[static_cast<std::size_t>(model.lambda_D_.at(0, y))] = y;
    diag1[static_cast<std::size_t>(model.lambda_D_.at(1, y))] = y - 1;
  }

  std::vector<int> orders(static_cast<std::size_t>(g), 0);
  model.xi_.assign(static_cast<std::size_t>(g), 0);
  for (int i = 1; i <= g; ++i) {
    const auto& d0 = diag0[static_cast<std::size_t>(i)];
    const auto& d1 = diag1[static_cast<std::size_t>(i)];
    if (!d0 && !d1) throw ConsistencyError("symbol missing from lambda_D");
    if (d0 && d1) {
      const int m = nondegenerate_order(spec, i);
      if (m != *d0 - *d1) {
        throw ConsistencyError("torsion order disagrees with the lattice distance in lambda_D");
      }
      orders[static_cast<std::size_t>(i - 1)] = m;
    }
    model.xi_[static_cast<std::size_t>(i - 1)] = d0 ? *d0 : *d1;
  }
  model.profile_ = TorsionProfile(std::move(orders));
  return model;
}

long DivisorModel::xi_base(int i) const {
  if (i < 1 || i > genus()) throw InputError("symbol out of range");
  return xi_[static_cast<std::size_t>(i - 1)];
}

long DivisorModel::xi_power(int i, int c) const {
  if (c < 1) throw InputError("multiple c must be positive");
  return static_cast<long>(c) * xi_base(i) - static_cast<long>(c - 1) * (i - 1);
}

bool DivisorModel::congruence_ok(int s, long delta, int c) const {
  return congruent(delta, xi_power(s, c), profile_.order(s));
}

}  // namespace scrollar
