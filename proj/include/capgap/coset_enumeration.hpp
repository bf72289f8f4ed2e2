#ifndef CAPGAP_COSET_ENUMERATION_HPP
#define CAPGAP_COSET_ENUMERATION_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "capgap/permutation.hpp"
#include "capgap/presentation.hpp"

namespace capgap {

inline constexpr std::size_t kDefaultMaxCosets = 4096;

class CosetLimitExceeded : public std::runtime_error
{
public:
  explicit CosetLimitExceeded(std::size_t limit);
  std::size_t limit() const { return limit_; }

private:
  std::size_t limit_;
};

/// Right action of the presentation's generators on the cosets of a
/// subgroup. Coset 0 is the subgroup itself.
struct CosetAction
{
  std::size_t coset_count = 0;
  std::vector<Permutation> generator_images;
};

/// Todd-Coxeter enumeration: each coset in turn has every relator traced and
/// filled (HLT), then its remaining empty slots are defined Felsch-style with
/// full deduction processing. The numbering depends only on the input. Throws CosetLimitExceeded once more than `max_cosets` cosets are
/// alive at the same time.
CosetAction coset_enumerate(Presentation const &p, std::span<Word const> subgroup_generators,
                            std::size_t max_cosets = kDefaultMaxCosets);

/// Applies `w` to `point` under the images of the generators.
Point act(std::span<Permutation const> generator_images, Point point, Word const &w);

/// Evaluates `w` as a permutation.
Permutation evaluate(std::span<Permutation const> generator_images, Word const &w);

} // namespace capgap

#endif // CAPGAP_COSET_ENUMERATION_HPP
