#include "capgap/permutation.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace capgap {

Permutation::Permutation(std::size_t degree) : images_(degree)
{
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation::Permutation(std::initializer_list<Point> images)
  : Permutation(std::vector<Point>(images))
{}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      return false;
  }
  return true;
}

Permutation Permutation::inverse() const
{
  Permutation result(degree());
  for (std::size_t i = 0; i < images_.size(); ++i)
    result.images_[images_[i]] = static_cast<Point>(i);
  return result;
}

Permutation Permutation::pow(long long exponent) const
{
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? -static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  Permutation result(degree());
  while (e) {
    if (e & 1u)
      result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

Permutation operator*(Permutation const &lhs, Permutation const &rhs)
{
  if (lhs.degree() != rhs.degree())
    throw std::invalid_argument("permutation degrees differ");
  Permutation result;
  result.images_.resize(lhs.degree());
  for (std::size_t i = 0; i < lhs.images_.size(); ++i)
    result.images_[i] = rhs.images_[lhs.images_[i]];
  return result;
}

std::ostream &operator<<(std::ostream &os, Permutation const &p)
{
  // cycle notation, fixed points omitted
  std::vector<bool> done(p.degree(), false);
  bool any = false;
  for (Point start = 0; start < p.degree(); ++start) {
    if (done[start] || p[start] == start)
      continue;
    any = true;
    os << '(';
    Point x = start;
    do {
      if (x != start)
        os << ',';
      os << x;
      done[x] = true;
      x = p[x];
    } while (x != start);
    os << ')';
  }
  if (!any)
    os << "()";
  return os;
}

std::size_t PermutationHash::operator()(Permutation const &p) const noexcept
{
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace capgap
