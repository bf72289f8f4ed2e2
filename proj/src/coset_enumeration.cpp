#include "capgap/coset_enumeration.hpp"

#include <set>
#include <string>

namespace capgap {

CosetLimitExceeded::CosetLimitExceeded(std::size_t limit)
  : std::runtime_error("coset enumeration exceeded " + std::to_string(limit) + " cosets"),
    limit_(limit)
{}

namespace {

using Coset = int;
constexpr Coset kUndefined = -1;

// Column 2g is generator g, column 2g+1 its inverse.
using Column = std::size_t;
inline Column inverse_column(Column x) { return x ^ 1u; }

std::vector<Column> expand(Word const &w)
{
  std::vector<Column> out;
  for (Letter const &l : reduce_word(w).letters) {
    Column c = 2 * l.generator + (l.exponent < 0 ? 1 : 0);
    long long n = l.exponent < 0 ? -l.exponent : l.exponent;
    out.insert(out.end(), static_cast<std::size_t>(n), c);
  }
  return out;
}

std::vector<Column> inverse_columns(std::vector<Column> const &w)
{
  std::vector<Column> out(w.rbegin(), w.rend());
  for (Column &c : out)
    c = inverse_column(c);
  return out;
}

class Enumerator
{
public:
  Enumerator(Presentation const &p, std::size_t max_cosets)
    : columns_(2 * p.generators.size()), max_cosets_(max_cosets)
  {
    // Relator conjugates grouped by first letter, for deduction processing.
    std::vector<std::set<std::vector<Column>>> by_first(columns_);
    for (Word const &r : p.relators) {
      auto letters = expand(r);
      if (letters.empty())
        continue;
      relators_.push_back(letters);
      for (auto const &base : {letters, inverse_columns(letters)}) {
        for (std::size_t k = 0; k < base.size(); ++k) {
          std::vector<Column> rotated(base.begin() + k, base.end());
          rotated.insert(rotated.end(), base.begin(), base.begin() + k);
          by_first[rotated.front()].insert(rotated);
        }
      }
    }
    conjugates_.resize(columns_);
    for (Column x = 0; x < columns_; ++x)
      conjugates_[x].assign(by_first[x].begin(), by_first[x].end());
    new_coset();
  }

  CosetAction run(std::span<Word const> subgroup_generators)
  {
    for (Word const &w : subgroup_generators) {
      auto letters = expand(w);
      if (!letters.empty())
        scan_and_fill(0, letters);
      process_deductions();
    }

    for (Coset alpha = 0; alpha < static_cast<Coset>(forward_.size()); ++alpha) {
      // trace every relator from alpha first, so long power relators close
      // their cycles before the open columns spawn more cosets
      for (auto const &r : relators_) {
        if (!live(alpha))
          break;
        scan_and_fill(alpha, r);
        process_deductions();
      }
      for (Column x = 0; x < columns_ && live(alpha); ++x) {
        if (entry(alpha, x) == kUndefined) {
          define(alpha, x);
          process_deductions();
        }
      }
    }
    return compact();
  }

private:
  bool live(Coset c) const { return forward_[c] == c; }
  Coset &entry(Coset c, Column x) { return table_[static_cast<std::size_t>(c) * columns_ + x]; }

  Coset new_coset()
  {
    if (live_count_ >= max_cosets_ || forward_.size() >= 16 * max_cosets_)
      throw CosetLimitExceeded(max_cosets_);
    Coset c = static_cast<Coset>(forward_.size());
    forward_.push_back(c);
    table_.insert(table_.end(), columns_, kUndefined);
    ++live_count_;
    return c;
  }

  void define(Coset alpha, Column x)
  {
    Coset beta = new_coset();
    entry(alpha, x) = beta;
    entry(beta, inverse_column(x)) = alpha;
    deductions_.push_back({alpha, x});
  }

  Coset rep(Coset c)
  {
    Coset root = c;
    while (forward_[root] != root)
      root = forward_[root];
    while (forward_[c] != root) {
      Coset next = forward_[c];
      forward_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(Coset a, Coset b, std::vector<Coset> &queue)
  {
    Coset ra = rep(a), rb = rep(b);
    if (ra == rb)
      return;
    Coset lo = std::min(ra, rb), hi = std::max(ra, rb);
    forward_[hi] = lo;
    --live_count_;
    queue.push_back(hi);
  }

  void coincidence(Coset a, Coset b)
  {
    std::vector<Coset> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Coset gamma = queue[i];
      for (Column x = 0; x < columns_; ++x) {
        Coset delta = entry(gamma, x);
        if (delta == kUndefined)
          continue;
        if (entry(delta, inverse_column(x)) == gamma)
          entry(delta, inverse_column(x)) = kUndefined;
        Coset mu = rep(gamma), nu = rep(delta);
        if (entry(mu, x) != kUndefined) {
          merge(nu, entry(mu, x), queue);
        } else if (entry(nu, inverse_column(x)) != kUndefined) {
          merge(mu, entry(nu, inverse_column(x)), queue);
        } else {
          entry(mu, x) = nu;
          entry(nu, inverse_column(x)) = mu;
          deductions_.push_back({mu, x});
        }
      }
    }
  }

  // Scans w at alpha without defining cosets; records a deduction when the
  // scan closes with exactly one gap.
  void scan(Coset alpha, std::vector<Column> const &w)
  {
    Coset f = alpha;
    std::size_t i = 0;
    std::size_t j = w.size();
    while (i < j && entry(f, w[i]) != kUndefined)
      f = entry(f, w[i++]);
    if (i == j) {
      if (f != alpha)
        coincidence(f, alpha);
      return;
    }
    Coset b = alpha;
    while (j > i && entry(b, inverse_column(w[j - 1])) != kUndefined)
      b = entry(b, inverse_column(w[--j]));
    if (j == i) {
      coincidence(f, b);
    } else if (j == i + 1) {
      entry(f, w[i]) = b;
      entry(b, inverse_column(w[i])) = f;
      deductions_.push_back({f, w[i]});
    }
  }

  void scan_and_fill(Coset alpha, std::vector<Column> const &w)
  {
    Coset f = alpha;
    Coset b = alpha;
    std::size_t i = 0;
    std::size_t j = w.size();
    for (;;) {
      while (i < j && entry(f, w[i]) != kUndefined)
        f = entry(f, w[i++]);
      if (i == j) {
        if (f != b)
          coincidence(f, b);
        return;
      }
      while (j > i && entry(b, inverse_column(w[j - 1])) != kUndefined)
        b = entry(b, inverse_column(w[--j]));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        entry(f, w[i]) = b;
        entry(b, inverse_column(w[i])) = f;
        deductions_.push_back({f, w[i]});
        return;
      }
      define(f, w[i]);
    }
  }

  void process_deductions()
  {
    while (!deductions_.empty()) {
      auto [alpha, x] = deductions_.back();
      deductions_.pop_back();
      if (!live(alpha))
        continue;
      for (auto const &w : conjugates_[x]) {
        scan(alpha, w);
        if (!live(alpha))
          break;
      }
      if (!live(alpha))
        continue;
      Coset beta = entry(alpha, x);
      if (beta == kUndefined)
        continue;
      for (auto const &w : conjugates_[inverse_column(x)]) {
        if (!live(beta))
          break;
        scan(beta, w);
      }
    }
  }

  CosetAction compact()
  {
    std::vector<Coset> renumber(forward_.size(), kUndefined);
    Point next = 0;
    for (std::size_t c = 0; c < forward_.size(); ++c) {
      if (live(static_cast<Coset>(c)))
        renumber[c] = static_cast<Coset>(next++);
    }

    CosetAction action;
    action.coset_count = next;
    std::size_t gens = columns_ / 2;
    for (std::size_t g = 0; g < gens; ++g) {
      std::vector<Point> images(next);
      for (std::size_t c = 0; c < forward_.size(); ++c) {
        if (!live(static_cast<Coset>(c)))
          continue;
        Coset target = entry(static_cast<Coset>(c), 2 * g);
        if (target == kUndefined)
          throw std::logic_error("coset table incomplete after enumeration");
        images[renumber[c]] = static_cast<Point>(renumber[rep(target)]);
      }
      action.generator_images.emplace_back(std::move(images));
    }

    for (auto const &r : relators_) {
      for (Point c = 0; c < next; ++c) {
        Point x = c;
        for (Column col : r) {
          Permutation const &g = action.generator_images[col / 2];
          if (col % 2 == 0) {
            x = g[x];
          } else {
            // inverse image, found by search; relators are short
            for (Point y = 0; y < next; ++y) {
              if (g[y] == x) {
                x = y;
                break;
              }
            }
          }
        }
        if (x != c)
          throw std::logic_error("relator does not close after enumeration");
      }
    }
    return action;
  }

  std::size_t columns_;
  std::size_t max_cosets_;
  std::size_t live_count_ = 0;
  std::vector<Coset> forward_;
  std::vector<Coset> table_;
  std::vector<std::vector<Column>> relators_;
  std::vector<std::vector<std::vector<Column>>> conjugates_;
  std::vector<std::pair<Coset, Column>> deductions_;
};

} // namespace

CosetAction coset_enumerate(Presentation const &p, std::span<Word const> subgroup_generators,
                            std::size_t max_cosets)
{
  if (p.generators.empty())
    throw std::invalid_argument("presentation has no generators");
  if (max_cosets == 0)
    throw std::invalid_argument("max_cosets must be positive");
  for (Word const &w : p.relators) {
    for (Letter const &l : w.letters) {
      if (l.generator >= p.generators.size())
        throw std::invalid_argument("relator refers to a generator out of range");
    }
  }
  for (Word const &w : subgroup_generators) {
    for (Letter const &l : w.letters) {
      if (l.generator >= p.generators.size())
        throw std::invalid_argument("subgroup generator refers to a generator out of range");
    }
  }
  return Enumerator(p, max_cosets).run(subgroup_generators);
}

Point act(std::span<Permutation const> generator_images, Point point, Word const &w)
{
  for (Letter const &l : w.letters) {
    Permutation const g = generator_images[l.generator].pow(l.exponent);
    point = g[point];
  }
  return point;
}

Permutation evaluate(std::span<Permutation const> generator_images, Word const &w)
{
  if (generator_images.empty())
    throw std::invalid_argument("no generator images");
  Permutation result(generator_images.front().degree());
  for (Letter const &l : w.letters)
    result = result * generator_images[l.generator].pow(l.exponent);
  return result;
}

} // namespace capgap
