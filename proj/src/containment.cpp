#include "invpat/containment.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>
#include <unordered_set>

namespace invpat {

using kernels::full_mask;
using kernels::Mask;

namespace {

// Positions strictly greater than `last` (1-indexed).
inline Mask after(std::size_t last) { return last >= 32 ? 0 : ~full_mask(last); }

// Positions strictly less than `bound`.
inline Mask before(std::size_t bound) { return bound == 0 ? 0 : full_mask(bound - 1); }

inline int lowest_position(Mask m) { return std::countr_zero(m) + 1; }

}  // namespace

Mode parse_mode(std::string_view text) {
  if (text == "classical" || text == "Classical" || text == "S") return Mode::Classical;
  if (text == "I") return Mode::I;
  if (text == "IPrime" || text == "I'" || text == "Iprime" || text == "iprime") return Mode::IPrime;
  if (text == "F") return Mode::F;
  throw InvalidInput("unknown mode '" + std::string(text) + "' (expected classical, I, IPrime or F)");
}

std::string_view to_string(Mode m) noexcept {
  switch (m) {
    case Mode::Classical: return "classical";
    case Mode::I: return "I";
    case Mode::IPrime: return "IPrime";
    case Mode::F: return "F";
  }
  return "?";
}

bool is_valid_for(const Permutation& p, Mode m) noexcept {
  switch (m) {
    case Mode::Classical: return true;
    case Mode::I:
    case Mode::IPrime: return is_involution(p);
    case Mode::F: return is_fpf_involution(p);
  }
  return false;
}

void require_valid(const Permutation& p, Mode m) {
  if (!is_valid_for(p, m))
    throw ModeMismatch(p.to_string() + " is not valid in mode " + std::string(to_string(m)));
}

// ---- classical -------------------------------------------------------------

TextIndex::TextIndex(const Permutation& t) : text(t) {
  kernels::active().order_masks(text.storage().data(), text.size(), order);
}

ClassicalPlan::ClassicalPlan(const Permutation& pattern) : pattern_(pattern) {
  const std::size_t k = pattern.size();
  for (std::size_t p = 0; p < k; ++p) {
    int lo = -1, hi = -1;
    const int v = pattern(p + 1);
    for (std::size_t q = 0; q < p; ++q) {
      const int w = pattern(q + 1);
      if (w < v && (lo < 0 || w > pattern(static_cast<std::size_t>(lo) + 1))) lo = static_cast<int>(q);
      if (w > v && (hi < 0 || w < pattern(static_cast<std::size_t>(hi) + 1))) hi = static_cast<int>(q);
    }
    lo_[p] = static_cast<std::int8_t>(lo);
    hi_[p] = static_cast<std::int8_t>(hi);
  }
}

bool ClassicalPlan::search(const TextIndex& t, std::size_t p, std::size_t last,
                           std::array<std::uint8_t, 32>& at) const {
  const std::size_t k = pattern_.size(), n = t.text.size();
  if (p == k) return true;
  Mask cand = after(last) & full_mask(n - (k - 1 - p));
  if (lo_[p] >= 0) cand &= t.order.above[at[static_cast<std::size_t>(lo_[p])] - 1];
  if (hi_[p] >= 0) cand &= t.order.below[at[static_cast<std::size_t>(hi_[p])] - 1];
  while (cand) {
    const int x = lowest_position(cand);
    cand &= cand - 1;
    at[p] = static_cast<std::uint8_t>(x);
    if (search(t, p + 1, static_cast<std::size_t>(x), at)) return true;
  }
  return false;
}

bool ClassicalPlan::matches(const TextIndex& text) const {
  if (pattern_.size() > text.text.size()) return false;
  std::array<std::uint8_t, 32> at{};
  return search(text, 0, 0, at);
}

std::optional<std::vector<int>> ClassicalPlan::find(const TextIndex& text) const {
  if (pattern_.size() > text.text.size()) return std::nullopt;
  std::array<std::uint8_t, 32> at{};
  if (!search(text, 0, 0, at)) return std::nullopt;
  return std::vector<int>(at.begin(), at.begin() + static_cast<std::ptrdiff_t>(pattern_.size()));
}

bool contains_classical(const Permutation& text, const Permutation& pattern) {
  return ClassicalPlan(pattern).matches(TextIndex(text));
}

std::optional<std::vector<int>> find_occurrence(const Permutation& text, const Permutation& pattern) {
  return ClassicalPlan(pattern).find(TextIndex(text));
}

// ---- deletion relations ----------------------------------------------------

namespace {

Involution drop_positions(const Involution& tau, Mask drop) {
  const Permutation r = restrict_to_positions(tau.perm(), full_mask(tau.size()) & ~drop);
  return Involution(r);
}

void check_position(const Involution& tau, int a) {
  if (a < 1 || static_cast<std::size_t>(a) > tau.size())
    throw InvalidInput("position " + std::to_string(a) + " out of range");
}

}  // namespace

Involution delete_two_cycle(const Involution& tau, int a) {
  check_position(tau, a);
  const int b = tau(static_cast<std::size_t>(a));
  if (a == b) throw InvalidInput("position " + std::to_string(a) + " is a fixed point");
  return drop_positions(tau, (Mask{1} << (a - 1)) | (Mask{1} << (b - 1)));
}

Involution delete_fixed_point(const Involution& tau, int a) {
  check_position(tau, a);
  if (tau(static_cast<std::size_t>(a)) != a)
    throw InvalidInput("position " + std::to_string(a) + " is not a fixed point");
  return drop_positions(tau, Mask{1} << (a - 1));
}

Involution collapse_adjacent_cycle(const Involution& tau, int a) {
  check_position(tau, a);
  if (tau(static_cast<std::size_t>(a)) != a + 1)
    throw InvalidInput("(" + std::to_string(a) + "," + std::to_string(a + 1) + ") is not a 2-cycle");
  // Deleting either entry leaves the other as a fixed point at the same place.
  return drop_positions(tau, Mask{1} << (a - 1));
}

std::vector<Involution> one_step_down(const Involution& tau, Mode mode) {
  if (mode == Mode::Classical) throw ModeMismatch("one_step_down needs mode I, IPrime or F");
  require_valid(tau.perm(), mode);
  std::vector<Involution> out;
  for (const Cycle& c : tau.cycles()) {
    if (c.is_fixed_point()) {
      out.push_back(delete_fixed_point(tau, c.first));
    } else {
      out.push_back(delete_two_cycle(tau, c.first));
      if (mode == Mode::I && c.second == c.first + 1) out.push_back(collapse_adjacent_cycle(tau, c.first));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool contains(const Permutation& tau, const Permutation& rho, Mode mode) {
  if (mode == Mode::Classical) return contains_classical(tau, rho);
  require_valid(tau, mode);
  require_valid(rho, mode);
  if (rho.size() > tau.size()) return false;
  if (tau == rho) return true;
  std::unordered_set<Permutation> seen{tau};
  std::deque<Involution> queue{Involution(tau)};
  while (!queue.empty()) {
    const Involution cur = queue.front();
    queue.pop_front();
    for (const Involution& next : one_step_down(cur, mode)) {
      if (next.perm() == rho) return true;
      if (next.size() <= rho.size()) continue;
      if (seen.insert(next.perm()).second) queue.push_back(next);
    }
  }
  return false;
}

DeletionClosure::DeletionClosure(Mode mode) : mode_(mode) {
  if (mode == Mode::Classical) throw ModeMismatch("DeletionClosure needs mode I, IPrime or F");
}

const std::vector<Permutation>& DeletionClosure::down_set(const Permutation& tau) {
  if (auto it = memo_.find(tau); it != memo_.end()) return it->second;
  std::vector<Permutation> all{tau};
  for (const Involution& child : one_step_down(Involution(tau), mode_)) {
    const auto& sub = down_set(child.perm());  // references survive rehashing
    all.insert(all.end(), sub.begin(), sub.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return memo_.emplace(tau, std::move(all)).first->second;
}

bool DeletionClosure::contains(const Permutation& tau, const Permutation& rho) {
  require_valid(rho, mode_);
  if (rho.size() > tau.size()) {
    require_valid(tau, mode_);
    return false;
  }
  const auto& ds = down_set(tau);
  return std::binary_search(ds.begin(), ds.end(), rho);
}

// ---- embedding search ------------------------------------------------------

InvolutionIndex::InvolutionIndex(const Permutation& t) : tau(t) {
  const auto roles = kernels::active().cycle_roles(tau.storage().data(), tau.size());
  fixed = roles.fixed;
  openers = roles.openers;
}

EmbeddingPlan::EmbeddingPlan(const Permutation& rho, Mode mode) : rho_(rho), mode_(mode) {
  if (mode == Mode::Classical) throw ModeMismatch("EmbeddingPlan needs mode I, IPrime or F");
  require_valid(rho, mode);
  for (std::size_t p = 1; p <= rho.size(); ++p) {
    const auto v = static_cast<std::size_t>(rho(p));
    partner_[p - 1] = static_cast<std::uint8_t>(v);
    role_[p - 1] = v == p ? Role::Fixed : (v > p ? Role::Opener : Role::Closer);
  }
}

bool EmbeddingPlan::search(const InvolutionIndex& t, std::size_t p, std::size_t last, Mask pending,
                           std::array<std::uint8_t, 32>& at) const {
  const std::size_t m = rho_.size(), n = t.tau.size();
  if (p == m) return true;

  if (role_[p] == Role::Closer) {
    const auto x = static_cast<std::size_t>(t.tau(at[partner_[p] - 1]));
    // Every other pending closer belongs to a later rho position, so x must come first.
    if (x <= last || static_cast<std::size_t>(lowest_position(pending)) != x) return false;
    at[p] = static_cast<std::uint8_t>(x);
    return search(t, p + 1, x, pending & ~(Mask{1} << (x - 1)), at);
  }

  const std::size_t bound = pending ? static_cast<std::size_t>(lowest_position(pending)) : n + 1;
  const Mask window = after(last) & before(bound) & full_mask(n - (m - 1 - p));

  if (role_[p] == Role::Fixed) {
    for (Mask cand = t.fixed & window; cand; cand &= cand - 1) {
      const int x = lowest_position(cand);
      at[p] = static_cast<std::uint8_t>(x);
      if (search(t, p + 1, static_cast<std::size_t>(x), pending, at)) return true;
    }
    if (mode_ == Mode::I) {
      for (Mask cand = t.openers & window; cand; cand &= cand - 1) {
        const int a = lowest_position(cand);
        const auto b = static_cast<std::size_t>(t.tau(static_cast<std::size_t>(a)));
        if (b >= bound) continue;
        at[p] = static_cast<std::uint8_t>(a);
        if (search(t, p + 1, b, pending, at)) return true;
      }
    }
    return false;
  }

  // Opener: rho's cycle (p+1, q) needs q-p-2 items strictly inside tau's (a, b).
  const std::size_t need = partner_[p] - (p + 1);
  for (Mask cand = t.openers & window; cand; cand &= cand - 1) {
    const int a = lowest_position(cand);
    const auto b = static_cast<std::size_t>(t.tau(static_cast<std::size_t>(a)));
    if (b - static_cast<std::size_t>(a) < need) continue;
    at[p] = static_cast<std::uint8_t>(a);
    if (search(t, p + 1, static_cast<std::size_t>(a), pending | (Mask{1} << (b - 1)), at)) return true;
  }
  return false;
}

bool EmbeddingPlan::matches(const InvolutionIndex& t) const {
  require_valid(t.tau, mode_);
  if (rho_.size() > t.tau.size()) return false;
  std::array<std::uint8_t, 32> at{};
  return search(t, 0, 0, 0, at);
}

bool contains_fast(const Permutation& tau, const Permutation& rho, Mode mode) {
  if (mode == Mode::Classical) return contains_classical(tau, rho);
  require_valid(tau, mode);
  return EmbeddingPlan(rho, mode).matches(InvolutionIndex(tau));
}

}  // namespace invpat
