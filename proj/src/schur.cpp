#include "rdsys/schur.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rdsys {

SchurPartition::SchurPartition(GroupPtr group, std::vector<std::vector<Elem>> classes)
    : group_(std::move(group)), classes_(std::move(classes)) {
  const std::uint32_t v = group_->order();
  constexpr std::size_t unset = ~std::size_t(0);
  class_of_.assign(v, unset);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    auto& cls = classes_[c];
    std::sort(cls.begin(), cls.end());
    if (cls.empty()) throw SringError(SringError::Kind::NotPartition, "empty class " + std::to_string(c));
    for (Elem g : cls) {
      if (g >= v) throw SringError(SringError::Kind::NotPartition, "class element out of range");
      if (class_of_[g] != unset)
        throw SringError(SringError::Kind::NotPartition, "element " + group_->label(g) + " in two classes");
      class_of_[g] = c;
    }
  }
  for (Elem g = 0; g < v; ++g)
    if (class_of_[g] == unset)
      throw SringError(SringError::Kind::NotPartition, "element " + group_->label(g) + " uncovered");
  identity_class_ = class_of_[0];
  if (classes_[identity_class_].size() != 1)
    throw SringError(SringError::Kind::IdentityClass, "{e} is not a class");
}

StructureConstants verify_sring(const SchurPartition& partition) {
  const auto& g = *partition.group();
  const auto& classes = partition.classes();
  const std::size_t rank = classes.size();

  for (std::size_t c = 0; c < rank; ++c) {
    const std::size_t target = partition.class_of(g.inv(classes[c][0]));
    bool ok = classes[target].size() == classes[c].size();
    for (Elem x : classes[c]) ok = ok && partition.class_of(g.inv(x)) == target;
    if (!ok) {
      SringError err(SringError::Kind::InverseClass,
                     "inverse of class " + std::to_string(c) + " is not a class");
      err.x = c;
      throw err;
    }
  }

  StructureConstants sc;
  sc.rank = rank;
  sc.tensor.assign(rank * rank * rank, 0);
  for (const auto& cls : classes) sc.sizes.push_back(static_cast<std::int64_t>(cls.size()));

  std::vector<std::int64_t> counts(g.order());
  for (std::size_t x = 0; x < rank; ++x) {
    for (std::size_t y = 0; y < rank; ++y) {
      std::fill(counts.begin(), counts.end(), 0);
      for (Elem a : classes[x])
        for (Elem b : classes[y]) ++counts[g.mul(a, b)];
      for (std::size_t z = 0; z < rank; ++z) {
        const Elem first = classes[z][0];
        for (Elem other : classes[z]) {
          if (counts[other] != counts[first]) {
            SringError err(SringError::Kind::Closure,
                           "product of classes " + std::to_string(x) + " and " + std::to_string(y) +
                               " is not constant on class " + std::to_string(z) + ": " + g.label(first) + " -> " +
                               std::to_string(counts[first]) + ", " + g.label(other) + " -> " +
                               std::to_string(counts[other]));
            err.x = x;
            err.y = y;
            err.z1 = first;
            err.z2 = other;
            err.count1 = counts[first];
            err.count2 = counts[other];
            throw err;
          }
        }
        sc.tensor[(x * rank + y) * rank + z] = counts[first];
      }
    }
  }
  return sc;
}

SchurPartition cyclotomic(const GroupPtr& group, std::span<const Automorphism> gens) {
  for (const auto& a : gens)
    if (a.group() != group) throw std::invalid_argument("cyclotomic: automorphism of a different group");
  SchurPartition partition(group, orbits(*group, gens));
  verify_sring(partition);
  return partition;
}

std::vector<std::uint32_t> default_line_labeling(std::uint32_t n, std::uint32_t t) {
  if (t == 0 || n % t) throw std::invalid_argument("t must divide n");
  const std::uint32_t block = n / t;
  std::vector<std::uint32_t> labels(n + 1);
  for (std::uint32_t i = 0; i < n + 1; ++i) labels[i] = i <= block ? 0 : (i - 1) / block;
  return labels;
}

AmorphicLatin amorphic_latin(const FieldPtr& field, std::uint32_t t,
                             std::optional<std::vector<std::uint32_t>> labeling) {
  const std::uint32_t n = field->order();
  if (t == 0 || n % t) throw std::invalid_argument("amorphic_latin: t must divide n");
  AmorphicLatin out;
  out.field = field;
  out.t = t;
  out.labeling = labeling ? std::move(*labeling) : default_line_labeling(n, t);
  if (out.labeling.size() != n + 1) throw std::invalid_argument("amorphic_latin: labeling must cover n+1 lines");
  std::vector<std::uint32_t> cell(t, 0);
  for (auto h : out.labeling) {
    if (h >= t) throw std::invalid_argument("amorphic_latin: label out of range");
    ++cell[h];
  }
  for (std::uint32_t h = 0; h < t; ++h) {
    const std::uint32_t want = n / t + (h == 0 ? 1 : 0);
    if (cell[h] != want) throw std::invalid_argument("amorphic_latin: cell " + std::to_string(h) + " has wrong size");
  }

  out.group = additive_group(field, 2);
  auto point = [n](Field::Value a, Field::Value b) { return Elem(a + n * b); };
  std::vector<Elem> vertical;
  for (Field::Value b = 0; b < n; ++b) vertical.push_back(point(0, b));
  out.lines.push_back(sorted_unique(vertical));
  for (Field::Value m = 0; m < n; ++m) {
    std::vector<Elem> line;
    for (Field::Value a = 0; a < n; ++a) line.push_back(point(a, field->mul(m, a)));
    out.lines.push_back(sorted_unique(line));
  }
  out.sets.assign(t, {});
  for (std::size_t i = 0; i < out.lines.size(); ++i)
    for (Elem g : out.lines[i])
      if (g != 0) out.sets[out.labeling[i]].push_back(g);
  for (auto& s : out.sets) s = sorted_unique(std::move(s));

  std::vector<std::vector<Elem>> classes{{0}};
  classes.insert(classes.end(), out.sets.begin(), out.sets.end());
  verify_sring(SchurPartition(out.group, classes));
  if (!check_amorph_relations(out.group, out.sets).holds)
    throw std::logic_error("amorphic_latin: product relations fail");
  return out;
}

AmorphVerdict check_amorph_relations(const GroupPtr& group, const std::vector<std::vector<Elem>>& sets) {
  AmorphVerdict verdict;
  const auto v = static_cast<std::int64_t>(group->order());
  auto n = static_cast<std::int64_t>(std::llround(std::sqrt(double(v))));
  if (n * n != v || n < 2) {
    verdict.witness = std::make_pair(std::size_t(0), std::size_t(0));
    return verdict;
  }
  std::vector<std::int64_t> k;
  std::vector<GroupRingElement> ind;
  for (const auto& s : sets) {
    if (s.size() % (n - 1)) {
      verdict.witness = std::make_pair(std::size_t(0), std::size_t(0));
      return verdict;
    }
    k.push_back(static_cast<std::int64_t>(s.size()) / (n - 1));
    ind.push_back(GroupRingElement::indicator(group, s));
  }
  const auto e = GroupRingElement::identity(group);
  const auto gsharp = GroupRingElement::whole(group) - e;
  for (std::size_t h = 0; h < sets.size(); ++h) {
    for (std::size_t h2 = 0; h2 < sets.size(); ++h2) {
      const auto lhs = ind[h] * ind[h2];
      GroupRingElement rhs(group);
      if (h == h2) {
        rhs = (k[h] * (n - 1)) * e + (n - 2 * k[h]) * ind[h] + (k[h] * (k[h] - 1)) * gsharp;
      } else {
        rhs = (k[h] * k[h2]) * gsharp - k[h2] * ind[h] - k[h] * ind[h2];
      }
      if (!(lhs == rhs)) {
        verdict.witness = std::make_pair(h, h2);
        return verdict;
      }
    }
  }
  verdict.holds = true;
  return verdict;
}

}  // namespace rdsys
