#include "rdsys/groupring.hpp"

#include <algorithm>
#include <stdexcept>

namespace rdsys {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("group ring coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("group ring coefficient overflow");
  return r;
}

GroupRingElement::GroupRingElement(GroupPtr group)
    : group_(std::move(group)), coeffs_(group_->order(), 0) {}

GroupRingElement::GroupRingElement(GroupPtr group, std::vector<std::int64_t> coefficients)
    : group_(std::move(group)), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != group_->order()) throw std::invalid_argument("coefficient vector length != |G|");
}

GroupRingElement GroupRingElement::indicator(const GroupPtr& group, std::span<const Elem> set) {
  GroupRingElement out(group);
  for (Elem g : set) {
    if (g >= group->order()) throw std::out_of_range("indicator: element index out of range");
    out.coeffs_[g] += 1;
  }
  return out;
}

GroupRingElement GroupRingElement::identity(const GroupPtr& group) {
  GroupRingElement out(group);
  out.coeffs_[0] = 1;
  return out;
}

GroupRingElement GroupRingElement::whole(const GroupPtr& group) {
  return GroupRingElement(group, std::vector<std::int64_t>(group->order(), 1));
}

std::int64_t GroupRingElement::sum() const {
  std::int64_t s = 0;
  for (auto c : coeffs_) s = checked_add(s, c);
  return s;
}

void GroupRingElement::require_same_group(const GroupRingElement& o) const {
  if (group_ != o.group_) throw std::invalid_argument("group ring elements over different groups");
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  require_same_group(o);
  GroupRingElement out(group_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
  return out;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
  require_same_group(o);
  GroupRingElement out(group_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = checked_add(coeffs_[i], checked_mul(-1, o.coeffs_[i]));
  return out;
}

GroupRingElement GroupRingElement::scaled(std::int64_t c) const {
  GroupRingElement out(group_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = checked_mul(c, coeffs_[i]);
  return out;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  require_same_group(o);
  const auto& g = *group_;
  std::vector<Elem> rhs;
  for (Elem k = 0; k < g.order(); ++k)
    if (o.coeffs_[k]) rhs.push_back(k);
  GroupRingElement out(group_);
  for (Elem h = 0; h < g.order(); ++h) {
    const std::int64_t a = coeffs_[h];
    if (!a) continue;
    for (Elem k : rhs) {
      Elem gk = g.mul(h, k);
      out.coeffs_[gk] = checked_add(out.coeffs_[gk], checked_mul(a, o.coeffs_[k]));
    }
  }
  return out;
}

GroupRingElement GroupRingElement::involution() const {
  GroupRingElement out(group_);
  for (Elem g = 0; g < coeffs_.size(); ++g) out.coeffs_[group_->inv(g)] = coeffs_[g];
  return out;
}

bool GroupRingElement::operator==(const GroupRingElement& o) const {
  return group_ == o.group_ && coeffs_ == o.coeffs_;
}

std::vector<Elem> GroupRingElement::level_set(std::int64_t value) const {
  std::vector<Elem> out;
  for (Elem g = 0; g < coeffs_.size(); ++g)
    if (coeffs_[g] == value) out.push_back(g);
  return out;
}

std::vector<std::int64_t> GroupRingElement::distinct_values() const {
  std::vector<std::int64_t> v = coeffs_;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::int64_t scalar(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.group() != b.group()) throw std::invalid_argument("scalar: different groups");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.coefficients().size(); ++i)
    s = checked_add(s, checked_mul(a.coefficients()[i], b.coefficients()[i]));
  return s;
}

}  // namespace rdsys
