#include "xorcache/gf2.hpp"

#include <algorithm>
#include <bit>

namespace xorcache {

std::string to_string(const SubfileId& id) {
  return "(file " + std::to_string(id.file) + ", part " + std::to_string(id.part) + ")";
}

Gf2Combo::Gf2Combo(std::vector<SubfileId> terms) : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end());
  // Equal adjacent terms cancel in pairs.
  std::vector<SubfileId> kept;
  kept.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size();) {
    std::size_t j = i;
    while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
    if ((j - i) % 2 == 1) kept.push_back(terms_[i]);
    i = j;
  }
  terms_ = std::move(kept);
}

Gf2Combo Gf2Combo::single(SubfileId id) { return Gf2Combo({id}); }

std::string to_string(const Gf2Combo& combo) {
  if (combo.empty()) return "{}";
  std::string out = "{";
  for (std::size_t i = 0; i < combo.terms().size(); ++i) {
    if (i > 0) out += " ^ ";
    out += to_string(combo.terms()[i]);
  }
  return out + "}";
}

Gf2Combo xor_combine(const Gf2Combo& a, const Gf2Combo& b) {
  std::vector<SubfileId> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.terms().begin(), a.terms().end(), b.terms().begin(),
                                b.terms().end(), std::back_inserter(out));
  return Gf2Combo(std::move(out));
}

namespace {

void xor_into(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

// Index of the lowest set bit, or -1 when all words are zero.
int lowest_bit(const std::vector<std::uint64_t>& mask) {
  for (std::size_t w = 0; w < mask.size(); ++w) {
    if (mask[w] != 0) {
      return static_cast<int>(w * 64 + std::countr_zero(mask[w]));
    }
  }
  return -1;
}

void set_bit(std::vector<std::uint64_t>& mask, std::size_t bit) {
  mask[bit / 64] ^= std::uint64_t{1} << (bit % 64);
}

}  // namespace

Gf2Solver::Gf2Solver(std::span<const Gf2Combo> basis) : basis_size_(basis.size()) {
  for (const Gf2Combo& combo : basis) {
    for (const SubfileId& id : combo.terms()) columns_.emplace(id, 0);
  }
  int next = 0;
  for (auto& [id, column] : columns_) column = next++;  // ascending by id
  combo_words_ = (columns_.size() + 63) / 64;
  select_words_ = (basis_size_ + 63) / 64;

  for (std::size_t i = 0; i < basis.size(); ++i) {
    Row row{Mask(combo_words_, 0), Mask(select_words_, 0)};
    for (const SubfileId& id : basis[i].terms()) set_bit(row.combo, columns_.at(id));
    set_bit(row.selected, i);
    while (true) {
      const int pivot = lowest_bit(row.combo);
      if (pivot < 0) break;  // dependent row, nothing new
      const auto it = pivots_.find(pivot);
      if (it == pivots_.end()) {
        pivots_.emplace(pivot, std::move(row));
        break;
      }
      xor_into(row.combo, it->second.combo);
      xor_into(row.selected, it->second.selected);
    }
  }
}

std::optional<Gf2Solver::Mask> Gf2Solver::mask_of(const Gf2Combo& combo) const {
  Mask mask(combo_words_, 0);
  for (const SubfileId& id : combo.terms()) {
    const auto it = columns_.find(id);
    if (it == columns_.end()) return std::nullopt;  // id never seen in the basis
    set_bit(mask, it->second);
  }
  return mask;
}

bool Gf2Solver::reduce(Mask& combo, Mask* selected) const {
  while (true) {
    const int pivot = lowest_bit(combo);
    if (pivot < 0) return true;
    const auto it = pivots_.find(pivot);
    if (it == pivots_.end()) return false;
    xor_into(combo, it->second.combo);
    if (selected != nullptr) xor_into(*selected, it->second.selected);
  }
}

bool Gf2Solver::contains(const Gf2Combo& target) const {
  auto mask = mask_of(target);
  if (!mask) return false;
  return reduce(*mask, nullptr);
}

std::optional<std::vector<std::size_t>> Gf2Solver::witness(const Gf2Combo& target) const {
  auto mask = mask_of(target);
  if (!mask) return std::nullopt;
  Mask selected(select_words_, 0);
  if (!reduce(*mask, &selected)) return std::nullopt;
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < basis_size_; ++i) {
    if ((selected[i / 64] >> (i % 64)) & 1) indices.push_back(i);
  }
  return indices;
}

bool span_contains(std::span<const Gf2Combo> basis, const Gf2Combo& target) {
  return Gf2Solver(basis).contains(target);
}

std::optional<std::vector<std::size_t>> span_witness(std::span<const Gf2Combo> basis,
                                                     const Gf2Combo& target) {
  return Gf2Solver(basis).witness(target);
}

int gf2_rank(std::span<const Gf2Combo> combos) { return Gf2Solver(combos).rank(); }

}  // namespace xorcache
