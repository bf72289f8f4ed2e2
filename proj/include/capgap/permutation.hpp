#ifndef CAPGAP_PERMUTATION_HPP
#define CAPGAP_PERMUTATION_HPP

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace capgap {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}. Products compose left to right:
/// the point i goes to (p * q)(i) = q(p(i)), matching the right action
/// of words on cosets.
class Permutation
{
public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);
  Permutation(std::initializer_list<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  std::span<Point const> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long long exponent) const;

  friend Permutation operator*(Permutation const &lhs, Permutation const &rhs);

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &lhs, Permutation const &rhs)
  {
    return lhs.images_ <=> rhs.images_;
  }

private:
  std::vector<Point> images_;
};

std::ostream &operator<<(std::ostream &os, Permutation const &p);

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const noexcept;
};

} // namespace capgap

#endif // CAPGAP_PERMUTATION_HPP
