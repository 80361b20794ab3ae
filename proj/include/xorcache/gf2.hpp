#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace xorcache {

// Coordinate of one subfile W_{file,part}. Both indices are 1-based.
// Ordering is file-major so canonical forms are deterministic.
struct SubfileId {
  int file = 0;
  int part = 0;

  friend auto operator<=>(const SubfileId&, const SubfileId&) = default;
};

std::string to_string(const SubfileId& id);

// A GF(2) linear combination of subfiles, kept as a canonical sorted term set.
// Terms appearing an even number of times in the input cancel; the empty combo
// is the additive identity and any combo XORed with itself vanishes.
class Gf2Combo {
 public:
  Gf2Combo() = default;
  explicit Gf2Combo(std::vector<SubfileId> terms);
  static Gf2Combo single(SubfileId id);

  const std::vector<SubfileId>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  friend bool operator==(const Gf2Combo&, const Gf2Combo&) = default;

 private:
  std::vector<SubfileId> terms_;  // sorted, duplicate-free
};

std::string to_string(const Gf2Combo& combo);

// Symmetric difference of the two term sets.
Gf2Combo xor_combine(const Gf2Combo& a, const Gf2Combo& b);

// Gaussian eliminator over a fixed basis of combos. Rows are reduced in input
// order and every pivot is the smallest SubfileId of its reduced row, so
// witnesses are deterministic across runs. Queries never mutate the solver.
class Gf2Solver {
 public:
  explicit Gf2Solver(std::span<const Gf2Combo> basis);

  // True iff target is a XOR of some subset of the basis.
  bool contains(const Gf2Combo& target) const;

  // Ascending basis indices whose XOR equals target, or nullopt when target
  // is outside the span. The empty target yields an empty witness.
  std::optional<std::vector<std::size_t>> witness(const Gf2Combo& target) const;

  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  using Mask = std::vector<std::uint64_t>;

  struct Row {
    Mask combo;     // over column space
    Mask selected;  // over basis indices
  };

  bool reduce(Mask& combo, Mask* selected) const;
  std::optional<Mask> mask_of(const Gf2Combo& combo) const;

  std::map<SubfileId, int> columns_;  // id -> column, ascending by id
  std::size_t basis_size_ = 0;
  std::size_t combo_words_ = 0;
  std::size_t select_words_ = 0;
  std::map<int, Row> pivots_;  // pivot column -> reduced row
};

// One-shot conveniences over Gf2Solver.
bool span_contains(std::span<const Gf2Combo> basis, const Gf2Combo& target);
std::optional<std::vector<std::size_t>> span_witness(std::span<const Gf2Combo> basis,
                                                     const Gf2Combo& target);

// GF(2) rank of the combo list; 0 for the empty list.
int gf2_rank(std::span<const Gf2Combo> combos);

}  // namespace xorcache
