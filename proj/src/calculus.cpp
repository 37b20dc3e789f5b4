#include "framecomplex/calculus.hpp"

#include <algorithm>

#include "framecomplex/errors.hpp"

namespace fcx {

// ---------------------------------------------------------------- TangentField

TangentField::TangentField(BundleContext ctx) : ctx_(ctx) {}

TangentField TangentField::total_derivative_field(BundleContext ctx, int direction, int order) {
  if (direction < 1 || direction > ctx.frame_dim)
    throw DomainError("frame direction " + std::to_string(direction) + " out of range");
  if (order < 0) throw DomainError("field order must be non-negative");
  TangentField out(ctx);
  for (int p = 0; p <= order - 1; ++p) {
    for (const auto& index : MultiIndex::all_of_degree(ctx.frame_dim, p)) {
      for (int alpha = 1; alpha <= ctx.fiber_dim; ++alpha) {
        JetCoordinate slot = jet(alpha, index);
        out.add_component(slot, PolyExpr::coordinate(jet(alpha, index.raised(direction))));
      }
    }
  }
  return out;
}

void TangentField::add_component(const JetCoordinate& slot, const PolyExpr& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = components_.emplace(slot, coefficient);
  if (!inserted) {
    it->second = it->second + coefficient;
    if (it->second.is_zero()) components_.erase(it);
  }
}

TangentField TangentField::vertical_endo(int direction) const {
  if (direction < 1 || direction > ctx_.frame_dim)
    throw DomainError("frame direction " + std::to_string(direction) + " out of range");
  TangentField out(ctx_);
  for (const auto& [slot, coeff] : components_) {
    int factor = slot.index.count(direction) + 1;
    JetCoordinate raised = jet(slot.fiber, slot.index.raised(direction));
    out.add_component(raised, coeff.scaled(factor));
  }
  return out;
}

PolyExpr TangentField::apply(const PolyExpr& f) const {
  PolyExpr out;
  for (const auto& [slot, coeff] : components_) out = out + coeff * f.partial(slot);
  return out;
}

bool TangentField::operator==(const TangentField& other) const {
  return ctx_ == other.ctx_ && components_ == other.components_;
}

// ------------------------------------------------------------ total derivative

namespace {

void check_direction(const BundleContext& ctx, int direction) {
  if (direction < 1 || direction > ctx.frame_dim)
    throw DomainError("frame direction " + std::to_string(direction) + " out of range");
}

}  // namespace

PolyExpr total_derivative(const BundleContext& ctx, const PolyExpr& f, int direction) {
  check_direction(ctx, direction);
  PolyExpr out;
  for (const auto& coord : f.support()) {
    if (coord.index.width() != ctx.frame_dim)
      throw DomainError("coordinate width does not match context: " + coord.to_string());
    PolyExpr raised = PolyExpr::coordinate(jet(coord.fiber, coord.index.raised(direction)));
    out = out + raised * f.partial(coord);
  }
  return out;
}

ScalarForm total_derivative(const ScalarForm& phi, int direction) {
  check_direction(phi.context(), direction);
  ScalarForm out(phi.context(), phi.degree());
  for (const auto& [labels, coeff] : phi.terms()) {
    // Coefficient part.
    out = out + ScalarForm::term(phi.context(),
                                 total_derivative(phi.context(), coeff, direction), labels);
    // d_i(du^alpha_I) = du^alpha_{I+1_i}, one label at a time.
    for (std::size_t l = 0; l < labels.size(); ++l) {
      std::vector<JetCoordinate> raised = labels;
      raised[l] = jet(labels[l].fiber, labels[l].index.raised(direction));
      out = out + ScalarForm::term(phi.context(), coeff, std::move(raised));
    }
  }
  return out;
}

VectorForm total_derivative(const VectorForm& phi, int direction) {
  VectorForm out(phi.context(), phi.degree(), phi.covalence());
  for (const auto& [tuple, component] : phi.components())
    out = out + VectorForm::term(total_derivative(component, direction), tuple);
  return out;
}

// ----------------------------------------------------------------- contraction

ScalarForm contract_total(const ScalarForm& phi, int direction) {
  check_direction(phi.context(), direction);
  if (phi.degree() == 0) return ScalarForm(phi.context(), 0);
  ScalarForm out(phi.context(), phi.degree() - 1);
  for (const auto& [labels, coeff] : phi.terms()) {
    int sign = 1;
    for (std::size_t l = 0; l < labels.size(); ++l) {
      PolyExpr velocity = PolyExpr::coordinate(jet(labels[l].fiber, labels[l].index.raised(direction)));
      std::vector<JetCoordinate> rest;
      rest.reserve(labels.size() - 1);
      for (std::size_t j = 0; j < labels.size(); ++j)
        if (j != l) rest.push_back(labels[j]);
      PolyExpr factor = coeff * velocity;
      out = out + ScalarForm::term(phi.context(), sign == 1 ? factor : -factor, std::move(rest));
      sign = -sign;
    }
  }
  return out;
}

VectorForm contract_total(const VectorForm& phi, int direction) {
  VectorForm out(phi.context(), phi.degree() == 0 ? 0 : phi.degree() - 1, phi.covalence());
  for (const auto& [tuple, component] : phi.components())
    out = out + VectorForm::term(contract_total(component, direction), tuple);
  return out;
}

// --------------------------------------------------------- vertical endomorphism

ScalarForm vertical_endo(const ScalarForm& phi, int direction) {
  check_direction(phi.context(), direction);
  ScalarForm out(phi.context(), phi.degree());
  for (const auto& [labels, coeff] : phi.terms()) {
    // Degree-0 derivation: S^i(f) = 0, S^i(du^alpha_J) = J(i) du^alpha_{J-1_i}.
    for (std::size_t l = 0; l < labels.size(); ++l) {
      int count = labels[l].index.count(direction);
      if (count == 0) continue;
      std::vector<JetCoordinate> lowered = labels;
      lowered[l] = jet(labels[l].fiber, *labels[l].index.lowered(direction));
      out = out + ScalarForm::term(phi.context(), coeff.scaled(count), std::move(lowered));
    }
  }
  return out;
}

VectorForm vertical_endo(const VectorForm& phi, int direction) {
  VectorForm out(phi.context(), phi.degree(), phi.covalence());
  for (const auto& [tuple, component] : phi.components())
    out = out + VectorForm::term(vertical_endo(component, direction), tuple);
  return out;
}

// ------------------------------------------------------- vector-valued operators

namespace {

// Position of `index` when inserted into the increasing tuple; -1 if present.
int insertion_slot(const std::vector<int>& tuple, int index) {
  int slot = 0;
  for (int entry : tuple) {
    if (entry == index) return -1;
    if (entry < index) ++slot;
  }
  return slot;
}

}  // namespace

VectorForm dT(const VectorForm& phi) {
  const auto& ctx = phi.context();
  int covalence = std::min(phi.covalence() + 1, ctx.frame_dim);
  VectorForm out(ctx, phi.degree(), covalence);
  if (phi.covalence() >= ctx.frame_dim) return out;
  for (const auto& [tuple, component] : phi.components()) {
    for (int i = 1; i <= ctx.frame_dim; ++i) {
      int slot = insertion_slot(tuple, i);
      if (slot < 0) continue;  // dt^i ^ dt^tuple = 0
      std::vector<int> extended = tuple;
      extended.insert(extended.begin() + slot, i);
      ScalarForm derived = total_derivative(component, i);
      out = out + VectorForm::term(slot % 2 == 0 ? derived : -derived, extended);
    }
  }
  return out;
}

VectorForm iT(const VectorForm& phi) {
  const auto& ctx = phi.context();
  int covalence = std::min(phi.covalence() + 1, ctx.frame_dim);
  VectorForm out(ctx, phi.degree() == 0 ? 0 : phi.degree() - 1, covalence);
  if (phi.covalence() >= ctx.frame_dim || phi.degree() == 0) return out;
  for (const auto& [tuple, component] : phi.components()) {
    for (int i = 1; i <= ctx.frame_dim; ++i) {
      int slot = insertion_slot(tuple, i);
      if (slot < 0) continue;
      std::vector<int> extended = tuple;
      extended.insert(extended.begin() + slot, i);
      ScalarForm contracted = contract_total(component, i);
      out = out + VectorForm::term(slot % 2 == 0 ? contracted : -contracted, extended);
    }
  }
  return out;
}

VectorForm S_op(const VectorForm& phi) {
  const auto& ctx = phi.context();
  VectorForm out(ctx, phi.degree(), phi.covalence() == 0 ? 0 : phi.covalence() - 1);
  if (phi.covalence() == 0) return out;
  for (const auto& [tuple, component] : phi.components()) {
    // d/dt^{tuple[l]} _| dt^tuple = (-1)^l dt^{tuple minus entry l}.
    for (std::size_t l = 0; l < tuple.size(); ++l) {
      std::vector<int> rest;
      rest.reserve(tuple.size() - 1);
      for (std::size_t j = 0; j < tuple.size(); ++j)
        if (j != l) rest.push_back(tuple[j]);
      ScalarForm acted = vertical_endo(component, tuple[l]);
      out = out + VectorForm::term(l % 2 == 0 ? acted : -acted, rest);
    }
  }
  return out;
}

// --------------------------------------------------------- multi-index strings

ScalarForm apply_dI(const ScalarForm& phi, const MultiIndex& I) {
  ScalarForm out = phi;
  for (int i = 1; i <= I.width(); ++i)
    for (int c = 0; c < I.count(i); ++c) out = total_derivative(out, i);
  return out;
}

ScalarForm apply_SI(const ScalarForm& phi, const MultiIndex& I) {
  ScalarForm out = phi;
  for (int i = 1; i <= I.width(); ++i)
    for (int c = 0; c < I.count(i); ++c) out = vertical_endo(out, i);
  return out;
}

PolyExpr apply_dI(const BundleContext& ctx, const PolyExpr& f, const MultiIndex& I) {
  PolyExpr out = f;
  for (int i = 1; i <= I.width(); ++i)
    for (int c = 0; c < I.count(i); ++c) out = total_derivative(ctx, out, i);
  return out;
}

PolyExpr delta_apply(const BundleContext& ctx, const MultiIndex& I, int direction_j,
                     const PolyExpr& f, int order) {
  if (I.width() != ctx.frame_dim)
    throw DomainError("multi-index width does not match context");
  TangentField field = TangentField::total_derivative_field(ctx, direction_j, order);
  for (int i = 1; i <= I.width(); ++i)
    for (int c = 0; c < I.count(i); ++c) field = field.vertical_endo(i);
  return field.apply(f);
}

}  // namespace fcx
