#include "aniso/brauer.hpp"

#include <algorithm>
#include <set>

namespace aniso {

bool ASCokernel::inImage(FiniteField::Element a) const { return std::binary_search(image.begin(), image.end(), a); }

FiniteField::Element ASCokernel::representative(FiniteField::Element a) const {
  FiniteField::Element best = a;
  for (auto c : image) best = std::min(best, field.add(a, c));
  return best;
}

ASCokernel asCokernel(const FiniteField& f) {
  ASCokernel k{f, {}, {}};
  std::set<FiniteField::Element> image;
  for (FiniteField::Element c = 0; c < f.order(); ++c) image.insert(f.sub(c, f.frobenius(c)));
  k.image.assign(image.begin(), image.end());
  std::set<FiniteField::Element> reps;
  for (FiniteField::Element a = 0; a < f.order(); ++a) reps.insert(k.representative(a));
  k.reps.assign(reps.begin(), reps.end());
  return k;
}

ProjectivePoint parsePoint(const FiniteField& f, std::string_view text) {
  if (text == "inf" || text == "infinity") return {};
  return {f.parse(text)};
}

std::string formatPoint(const FiniteField& f, const ProjectivePoint& p) { return p.affine ? f.format(*p.affine) : "inf"; }

ResidueData residues(const FiniteField& f, const FactoredFunction& fn, FiniteField::Element t) {
  if (fn.points.size() != fn.multiplicities.size()) throw std::invalid_argument("points and multiplicities differ in length");
  std::int64_t total = 0;
  for (auto m : fn.multiplicities) total += m;
  if (total != 0) throw DivisorNotPrincipal("multiplicities sum to " + std::to_string(total) + ", not 0");
  const ASCokernel coker = asCokernel(f);
  ResidueData r;
  r.t = t;
  for (std::size_t i = 0; i < fn.points.size(); ++i) {
    const FiniteField::Element value = f.mul(t, f.fromInt(fn.multiplicities[i]));
    r.residues.push_back({fn.points[i], value, coker.representative(value)});
    r.rawSum = f.add(r.rawSum, value);
  }
  return r;
}

std::variant<AdmissibleForm, Obstruction> admissibleForm(const FiniteField& f, const std::vector<ProjectivePoint>& delta) {
  if (delta.size() < 2) throw std::invalid_argument("Delta needs at least two points");
  for (std::size_t i = 0; i < delta.size(); ++i)
    for (std::size_t j = i + 1; j < delta.size(); ++j)
      if (delta[i] == delta[j]) throw std::invalid_argument("Delta has a repeated point " + formatPoint(f, delta[i]));
  const auto p = static_cast<std::int64_t>(f.characteristic());
  if (p == 2 && delta.size() % 2 == 1)
    return Obstruction{"an odd number of odd multiplicities cannot sum to zero"};

  std::vector<std::int64_t> m(delta.size(), 1);
  m.back() = 1 - static_cast<std::int64_t>(delta.size());
  if (m.back() % p == 0) {
    // p odd here: moving one unit keeps both ends nonzero mod p
    m.front() += 1;
    m.back() -= 1;
  }
  const ASCokernel coker = asCokernel(f);
  FiniteField::Element t = 0;
  while (coker.inImage(t)) ++t;
  return AdmissibleForm{{delta, m}, t};
}

ConicResult conicChar2Class(const FiniteField& f, FiniteField::Element a) {
  if (f.characteristic() != 2) throw std::domain_error("conic model needs characteristic 2");
  for (FiniteField::Element h = 0; h < f.order(); ++h)
    if (f.sub(f.sub(f.mul(h, h), h), a) == 0) return {ConicClass::Splits, h};
  return {ConicClass::NoPoint, std::nullopt};
}

}  // namespace aniso
