#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "quadhp/poly.hpp"
#include "quadhp/quad_operator.hpp"
#include "quadhp/real_roots.hpp"

namespace quadhp {

/// Bounds of the witness search. The grid is grid_lo, grid_lo + grid_step,
/// ..., up to grid_hi.
struct SearchBudget {
  int max_degree = 4;
  Rational grid_lo = -20;
  Rational grid_hi = 20;
  Rational grid_step = Rational(1, 2);
  std::size_t max_candidates = 100000;
  /// Threads used by falsify; 0 means one per hardware thread.
  unsigned workers = 0;

  /// Defaults, with max_degree overridable through QUADHP_FALSIFY_MAX_DEGREE.
  static SearchBudget from_environment() {
    SearchBudget budget;
    if (const char* env = std::getenv("QUADHP_FALSIFY_MAX_DEGREE")) {
      char* end = nullptr;
      const long value = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && value >= 0 && value <= 64) budget.max_degree = static_cast<int>(value);
    }
    return budget;
  }

  std::vector<Rational> grid() const {
    std::vector<Rational> points;
    if (grid_step <= 0) return points;
    for (Rational t = grid_lo; t <= grid_hi; t += grid_step) points.push_back(t);
    return points;
  }
};

/// A hyperbolic input whose image is not hyperbolic, with the Sturm counts
/// that prove it: the image's square-free part has more roots than real ones.
struct Witness {
  RatPoly input;
  RatPoly image;
  int image_distinct_real_roots = 0;
  int image_distinct_roots = 0;
};

/// Checks the witness property from scratch through real_roots.
inline std::optional<Witness> check_witness(const QuadOperator& op, const RatPoly& input) {
  if (!is_hyperbolic(input)) return std::nullopt;
  RatPoly image = apply(op, input);
  if (is_hyperbolic(image)) return std::nullopt;
  const RatPoly sq = square_free_part(image);
  Witness w{input, std::move(image), 0, *sq.degree()};
  w.image_distinct_real_roots = SturmChain(sq).count(std::nullopt, std::nullopt);
  return w;
}

/// Deterministic candidate order: for n = 0, 1, ..., max_degree emit x^n,
/// then (x - r)^n for r ascending over the grid, then (n >= 2) products of
/// n distinct grid factors in lexicographic order.
class CandidateStream {
 public:
  explicit CandidateStream(const SearchBudget& budget) : budget_(budget), grid_(budget.grid()) {}

  std::optional<RatPoly> next() {
    while (emitted_ < budget_.max_candidates && degree_ <= budget_.max_degree) {
      if (auto p = advance()) {
        ++emitted_;
        return p;
      }
    }
    return std::nullopt;
  }

 private:
  enum class Phase { monomial, shifted, product };

  std::optional<RatPoly> advance() {
    const auto n = static_cast<unsigned>(degree_);
    switch (phase_) {
      case Phase::monomial:
        phase_ = n == 0 ? Phase::product : Phase::shifted;
        index_ = 0;
        return RatPoly::monomial(n);
      case Phase::shifted:
        if (index_ < grid_.size()) return pow(RatPoly{-grid_[index_++], 1}, n);
        phase_ = Phase::product;
        combo_.clear();
        return std::nullopt;
      case Phase::product:
        if (n >= 2 && n <= grid_.size()) {
          if (combo_.empty()) {
            combo_.resize(n);
            for (unsigned k = 0; k < n; ++k) combo_[k] = k;
            return product();
          }
          if (next_combination()) return product();
        }
        ++degree_;
        phase_ = Phase::monomial;
        combo_.clear();
        return std::nullopt;
    }
    return std::nullopt;
  }

  bool next_combination() {
    const std::size_t n = combo_.size();
    const std::size_t total = grid_.size();
    for (std::size_t k = n; k-- > 0;) {
      if (combo_[k] < total - n + k) {
        ++combo_[k];
        for (std::size_t j = k + 1; j < n; ++j) combo_[j] = combo_[j - 1] + 1;
        return true;
      }
    }
    return false;
  }

  RatPoly product() const {
    std::vector<Rational> roots;
    roots.reserve(combo_.size());
    for (auto idx : combo_) roots.push_back(grid_[idx]);
    return RatPoly::from_roots(roots);
  }

  SearchBudget budget_;
  std::vector<Rational> grid_;
  int degree_ = 0;
  Phase phase_ = Phase::monomial;
  std::size_t index_ = 0;
  std::vector<std::size_t> combo_;
  std::size_t emitted_ = 0;
};

/// First hyperbolic p (in CandidateStream order) with non-hyperbolic T[p].
/// Blocks of candidates may be checked on several threads; the earliest
/// witness of a block wins, so the answer matches a sequential scan.
inline std::optional<Witness> falsify(const QuadOperator& op, const SearchBudget& budget = SearchBudget{}) {
  CandidateStream stream(budget);
  const unsigned workers = budget.workers != 0 ? budget.workers : std::max(1u, std::thread::hardware_concurrency());
  constexpr std::size_t kBlock = 2048;
  std::vector<RatPoly> block;
  block.reserve(kBlock);
  while (true) {
    block.clear();
    while (block.size() < kBlock) {
      auto p = stream.next();
      if (!p) break;
      block.push_back(std::move(*p));
    }
    if (block.empty()) return std::nullopt;

    if (workers == 1) {
      for (const auto& p : block)
        if (auto w = check_witness(op, p)) return w;
      continue;
    }
    std::vector<std::optional<Witness>> found(block.size());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < block.size(); i += workers) found[i] = check_witness(op, block[i]);
      });
    }
    for (auto& th : pool) th.join();
    for (auto& w : found)
      if (w) return w;
  }
}

}  // namespace quadhp
