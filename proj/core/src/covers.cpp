#include "npcert/covers.hpp"

#include "npcert/positivity.hpp"

namespace npcert {

CyclicCover CyclicCover::create(BaseSurface base, Int degree,
                                DivisorClass branch_class) {
  if (branch_class.surface() != base)
    throw CoverError("branch class does not live on the base surface");
  if (degree < 2) throw CoverError("cover degree must be >= 2");
  const DivisorClass dl = degree * branch_class;
  if (!is_ample(dl) || !is_bpf(dl))
    throw CoverError(
        "branch system |" + dl.str() +
        "| is not ample and base point free; no smooth branch member is "
        "certified");
  return CyclicCover(std::move(base), std::move(degree),
                     std::move(branch_class));
}

PullbackClass::PullbackClass(CyclicCover cover, DivisorClass base_class)
    : cover_(std::move(cover)), base_class_(std::move(base_class)) {
  if (base_class_.surface() != cover_.base())
    throw CoverError("pullback of a class from a different surface");
}

PullbackClass PullbackClass::operator+(const PullbackClass& rhs) const {
  if (cover_ != rhs.cover_)
    throw CoverError("pullback class arithmetic across different covers");
  return PullbackClass(cover_, base_class_ + rhs.base_class_);
}

PullbackClass PullbackClass::operator-(const PullbackClass& rhs) const {
  return *this + (-rhs);
}

PullbackClass PullbackClass::operator-() const {
  return PullbackClass(cover_, -base_class_);
}

PullbackClass operator*(const Int& n, const PullbackClass& d) {
  return PullbackClass(d.cover(), n * d.base_class());
}

Int pullback_intersect(const PullbackClass& d1, const PullbackClass& d2) {
  if (d1.cover() != d2.cover())
    throw CoverError("intersection of pullbacks from different covers");
  return d1.cover().degree() * intersect(d1.base_class(), d2.base_class());
}

PullbackClass canonical_of_cover(const CyclicCover& cover) {
  const DivisorClass k_base = canonical_class(cover.base());
  return PullbackClass(cover,
                       k_base + (cover.degree() - 1) * cover.branch_class());
}

std::vector<DivisorClass> pushforward_summands(const PullbackClass& d) {
  std::vector<DivisorClass> out;
  DivisorClass current = d.base_class();
  for (Int k = 0; k < d.cover().degree(); ++k) {
    out.push_back(current);
    current = current - d.cover().branch_class();
  }
  return out;
}

}  // namespace npcert
