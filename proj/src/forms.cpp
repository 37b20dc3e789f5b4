#include "framecomplex/forms.hpp"

#include <algorithm>

#include "framecomplex/errors.hpp"

namespace fcx {

namespace {

// Sorts by insertion, counting transpositions. Returns 0 on a repeated entry,
// otherwise the permutation sign.
template <typename T>
int sort_with_sign(std::vector<T>& items) {
  int sign = 1;
  for (std::size_t i = 1; i < items.size(); ++i) {
    T value = items[i];
    std::size_t j = i;
    while (j > 0 && value < items[j - 1]) {
      items[j] = items[j - 1];
      --j;
      sign = -sign;
    }
    items[j] = value;
  }
  for (std::size_t i = 1; i < items.size(); ++i)
    if (!(items[i - 1] < items[i])) return 0;
  return sign;
}

}  // namespace

// ------------------------------------------------------------------ ScalarForm

ScalarForm::ScalarForm(BundleContext ctx, int degree) : ctx_(ctx), degree_(degree) {
  if (degree < 0) throw DomainError("form degree must be non-negative");
}

ScalarForm ScalarForm::function(BundleContext ctx, PolyExpr f) {
  ScalarForm out(ctx, 0);
  if (!f.is_zero()) out.terms_.emplace(std::vector<JetCoordinate>{}, std::move(f));
  return out;
}

ScalarForm ScalarForm::term(BundleContext ctx, PolyExpr coefficient,
                            std::vector<JetCoordinate> labels) {
  ScalarForm out(ctx, static_cast<int>(labels.size()));
  for (const auto& label : labels) {
    if (label.fiber < 1 || label.fiber > ctx.fiber_dim)
      throw DomainError("du label fiber index out of range: " + label.to_string());
    if (label.index.width() != ctx.frame_dim)
      throw DomainError("du label width does not match context: " + label.to_string());
  }
  int sign = sort_with_sign(labels);
  if (sign == 0 || coefficient.is_zero()) return out;
  out.terms_.emplace(std::move(labels),
                     sign == 1 ? std::move(coefficient) : -coefficient);
  return out;
}

void ScalarForm::add_term(const std::vector<JetCoordinate>& labels, const PolyExpr& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.emplace(labels, coefficient);
  if (!inserted) {
    it->second = it->second + coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void ScalarForm::check_compatible(const ScalarForm& other, const char* op) const {
  if (!(ctx_ == other.ctx_))
    throw DomainError(std::string(op) + ": context mismatch " + ctx_.to_string() + " vs " +
                      other.ctx_.to_string());
}

int ScalarForm::intrinsic_order() const {
  int order = 0;
  for (const auto& [labels, coeff] : terms_) {
    order = std::max(order, coeff.intrinsic_order());
    for (const auto& label : labels) order = std::max(order, label.order());
  }
  return order;
}

PolyExpr ScalarForm::as_function() const {
  if (degree_ != 0 && !is_zero()) throw DomainError("as_function on a form of positive degree");
  if (terms_.empty()) return PolyExpr();
  return terms_.begin()->second;
}

ScalarForm ScalarForm::operator+(const ScalarForm& other) const {
  check_compatible(other, "add");
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  if (degree_ != other.degree_)
    throw DomainError("add: degree mismatch " + std::to_string(degree_) + " vs " +
                      std::to_string(other.degree_));
  ScalarForm out = *this;
  for (const auto& [labels, coeff] : other.terms_) out.add_term(labels, coeff);
  return out;
}

ScalarForm ScalarForm::operator-() const {
  ScalarForm out(ctx_, degree_);
  for (const auto& [labels, coeff] : terms_) out.terms_.emplace(labels, -coeff);
  return out;
}

ScalarForm ScalarForm::operator-(const ScalarForm& other) const {
  return *this + (-other);
}

ScalarForm ScalarForm::scaled(const Rational& c) const {
  ScalarForm out(ctx_, degree_);
  if (c == 0) return out;
  for (const auto& [labels, coeff] : terms_) out.terms_.emplace(labels, coeff.scaled(c));
  return out;
}

ScalarForm ScalarForm::scaled(const PolyExpr& f) const {
  ScalarForm out(ctx_, degree_);
  for (const auto& [labels, coeff] : terms_) out.add_term(labels, coeff * f);
  return out;
}

ScalarForm ScalarForm::wedge(const ScalarForm& other) const {
  check_compatible(other, "wedge");
  ScalarForm out(ctx_, degree_ + other.degree_);
  for (const auto& [la, ca] : terms_) {
    for (const auto& [lb, cb] : other.terms_) {
      std::vector<JetCoordinate> labels = la;
      labels.insert(labels.end(), lb.begin(), lb.end());
      int sign = sort_with_sign(labels);
      if (sign == 0) continue;
      PolyExpr coeff = ca * cb;
      out.add_term(labels, sign == 1 ? coeff : -coeff);
    }
  }
  return out;
}

ScalarForm ScalarForm::d() const {
  ScalarForm out(ctx_, degree_ + 1);
  for (const auto& [labels, coeff] : terms_) {
    for (const auto& coord : coeff.support()) {
      PolyExpr derivative = coeff.partial(coord);
      std::vector<JetCoordinate> extended;
      extended.reserve(labels.size() + 1);
      extended.push_back(coord);
      extended.insert(extended.end(), labels.begin(), labels.end());
      int sign = sort_with_sign(extended);
      if (sign == 0) continue;
      out.add_term(extended, sign == 1 ? derivative : -derivative);
    }
  }
  return out;
}

bool ScalarForm::operator==(const ScalarForm& other) const {
  if (!(ctx_ == other.ctx_)) return false;
  if (is_zero() && other.is_zero()) return true;
  return degree_ == other.degree_ && terms_ == other.terms_;
}

// ------------------------------------------------------------------ VectorForm

VectorForm::VectorForm(BundleContext ctx, int degree, int covalence)
    : ctx_(ctx), degree_(degree), covalence_(covalence) {
  if (degree < 0) throw DomainError("form degree must be non-negative");
  if (covalence < 0 || covalence > ctx.frame_dim)
    throw DomainError("covalence must lie in 0.." + std::to_string(ctx.frame_dim));
}

VectorForm VectorForm::from_scalar(ScalarForm phi) {
  VectorForm out(phi.context(), phi.degree(), 0);
  if (!phi.is_zero()) out.components_.emplace(std::vector<int>{}, std::move(phi));
  return out;
}

VectorForm VectorForm::term(ScalarForm phi, std::vector<int> frame_tuple) {
  VectorForm out(phi.context(), phi.degree(), static_cast<int>(frame_tuple.size()));
  for (int i : frame_tuple)
    if (i < 1 || i > phi.context().frame_dim)
      throw DomainError("frame index " + std::to_string(i) + " out of range");
  int sign = sort_with_sign(frame_tuple);
  if (sign == 0 || phi.is_zero()) return out;
  out.components_.emplace(std::move(frame_tuple), sign == 1 ? std::move(phi) : -phi);
  return out;
}

void VectorForm::add_component(const std::vector<int>& tuple, const ScalarForm& phi) {
  if (phi.is_zero()) return;
  auto [it, inserted] = components_.emplace(tuple, phi);
  if (!inserted) {
    it->second = it->second + phi;
    if (it->second.is_zero()) components_.erase(it);
  }
}

ScalarForm VectorForm::component(std::vector<int> frame_tuple) const {
  if (static_cast<int>(frame_tuple.size()) != covalence_)
    throw DomainError("component tuple length does not match covalence");
  for (int i : frame_tuple)
    if (i < 1 || i > ctx_.frame_dim)
      throw DomainError("frame index " + std::to_string(i) + " out of range");
  int sign = sort_with_sign(frame_tuple);
  if (sign == 0) return ScalarForm(ctx_, degree_);
  auto it = components_.find(frame_tuple);
  if (it == components_.end()) return ScalarForm(ctx_, degree_);
  return sign == 1 ? it->second : -it->second;
}

ScalarForm VectorForm::as_scalar() const {
  if (covalence_ != 0 && !is_zero()) throw DomainError("as_scalar on a form of positive covalence");
  if (components_.empty()) return ScalarForm(ctx_, degree_);
  return components_.begin()->second;
}

int VectorForm::intrinsic_order() const {
  int order = 0;
  for (const auto& [tuple, phi] : components_) order = std::max(order, phi.intrinsic_order());
  return order;
}

void VectorForm::check_compatible(const VectorForm& other, const char* op) const {
  if (!(ctx_ == other.ctx_))
    throw DomainError(std::string(op) + ": context mismatch " + ctx_.to_string() + " vs " +
                      other.ctx_.to_string());
}

VectorForm VectorForm::operator+(const VectorForm& other) const {
  check_compatible(other, "add");
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  if (degree_ != other.degree_ || covalence_ != other.covalence_)
    throw DomainError("add: shape mismatch (r,s)=(" + std::to_string(degree_) + "," +
                      std::to_string(covalence_) + ") vs (" + std::to_string(other.degree_) +
                      "," + std::to_string(other.covalence_) + ")");
  VectorForm out = *this;
  for (const auto& [tuple, phi] : other.components_) out.add_component(tuple, phi);
  return out;
}

VectorForm VectorForm::operator-() const {
  VectorForm out(ctx_, degree_, covalence_);
  for (const auto& [tuple, phi] : components_) out.components_.emplace(tuple, -phi);
  return out;
}

VectorForm VectorForm::operator-(const VectorForm& other) const {
  return *this + (-other);
}

VectorForm VectorForm::scaled(const Rational& c) const {
  VectorForm out(ctx_, degree_, covalence_);
  if (c == 0) return out;
  for (const auto& [tuple, phi] : components_) out.components_.emplace(tuple, phi.scaled(c));
  return out;
}

VectorForm VectorForm::scaled(const PolyExpr& f) const {
  VectorForm out(ctx_, degree_, covalence_);
  for (const auto& [tuple, phi] : components_) out.add_component(tuple, phi.scaled(f));
  return out;
}

VectorForm VectorForm::wedge(const VectorForm& other) const {
  check_compatible(other, "wedge");
  int covalence = std::min(covalence_ + other.covalence_, ctx_.frame_dim);
  VectorForm out(ctx_, degree_ + other.degree_, covalence);
  if (covalence_ + other.covalence_ > ctx_.frame_dim) return out;  // dt part vanishes
  for (const auto& [ta, pa] : components_) {
    for (const auto& [tb, pb] : other.components_) {
      std::vector<int> tuple = ta;
      tuple.insert(tuple.end(), tb.begin(), tb.end());
      int sign = sort_with_sign(tuple);
      if (sign == 0) continue;
      ScalarForm phi = pa.wedge(pb);
      out.add_component(tuple, sign == 1 ? phi : -phi);
    }
  }
  return out;
}

VectorForm VectorForm::d() const {
  VectorForm out(ctx_, degree_ + 1, covalence_);
  for (const auto& [tuple, phi] : components_) out.add_component(tuple, phi.d());
  return out;
}

VectorForm VectorForm::normalize_bar() const {
  if (degree_ != 0) return *this;
  VectorForm out(ctx_, degree_, covalence_);
  for (const auto& [tuple, phi] : components_) {
    PolyExpr f = phi.as_function();
    f = f - PolyExpr::constant(f.constant_term());
    out.add_component(tuple, ScalarForm::function(ctx_, f));
  }
  return out;
}

bool VectorForm::operator==(const VectorForm& other) const {
  if (!(ctx_ == other.ctx_)) return false;
  if (is_zero() && other.is_zero()) return true;
  return degree_ == other.degree_ && covalence_ == other.covalence_ &&
         components_ == other.components_;
}

}  // namespace fcx
