#include "invpat/bijections.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "invpat/containment.hpp"
#include "invpat/kernels.hpp"

namespace invpat {

// ---- I(12) -----------------------------------------------------------------

Permutation f_inv(const Permutation& sigma, bool odd) {
  const std::size_t m = sigma.size(), n = 2 * m + (odd ? 1 : 0), c = m + (odd ? 1 : 0);
  if (n > Permutation::kMaxSize) throw InvalidInput("result would exceed " + std::to_string(Permutation::kMaxSize));
  std::vector<int> w(n);
  for (std::size_t k = 1; k <= m; ++k) {
    w[c + k - 1] = sigma(k);
    w[static_cast<std::size_t>(sigma(k)) - 1] = static_cast<int>(c + k);
  }
  if (odd) w[m] = static_cast<int>(m + 1);
  return Permutation(std::span<const int>(w));
}

Permutation f_map(const Permutation& tau) {
  const std::size_t n = tau.size(), m = n / 2, c = n - m;
  std::vector<int> s(m);
  for (std::size_t k = 1; k <= m; ++k) {
    s[k - 1] = tau(c + k);
    if (s[k - 1] > static_cast<int>(m)) throw InvalidInput(tau.to_string() + " contains 12 in the I order");
  }
  const Permutation sigma{std::span<const int>(s)};
  if (f_inv(sigma, n % 2 == 1) != tau) throw InvalidInput(tau.to_string() + " contains 12 in the I order");
  return sigma;
}

// ---- fixed points ----------------------------------------------------------

FixedPointSplit remove_fixed_points(const Permutation& tau) {
  if (!is_involution(tau)) throw InvalidInput(tau.to_string() + " is not an involution");
  FixedPointSplit out;
  out.size = tau.size();
  for (std::size_t i = 1; i <= tau.size(); ++i)
    if (tau(i) == static_cast<int>(i)) out.fixed |= 1u << (i - 1);
  out.matching = restrict_to_positions(tau, kernels::full_mask(tau.size()) & ~out.fixed);
  return out;
}

Permutation insert_fixed_points(const Permutation& rho, std::uint32_t fixed, std::size_t n) {
  if (n > Permutation::kMaxSize || (fixed & ~kernels::full_mask(n)) != 0)
    throw InvalidInput("fixed-point positions out of range");
  if (static_cast<std::size_t>(std::popcount(fixed)) + rho.size() != n)
    throw InvalidInput("fixed-point count does not match the sizes");
  if (!is_fpf_involution(rho)) throw InvalidInput(rho.to_string() + " is not a fixed-point-free involution");
  std::vector<int> q;  // positions left for the matching
  for (std::size_t i = 1; i <= n; ++i)
    if (!((fixed >> (i - 1)) & 1u)) q.push_back(static_cast<int>(i));
  std::vector<int> w(n);
  for (std::size_t i = 1; i <= n; ++i)
    if ((fixed >> (i - 1)) & 1u) w[i - 1] = static_cast<int>(i);
  for (std::size_t j = 1; j <= rho.size(); ++j)
    w[static_cast<std::size_t>(q[j - 1]) - 1] = q[static_cast<std::size_t>(rho(j)) - 1];
  return Permutation(std::span<const int>(w));
}

// ---- trees and Laguerre histories -----------------------------------------

IncreasingBinaryTree tree_from_permutation(const Permutation& sigma) {
  IncreasingBinaryTree t;
  t.n = sigma.size();
  t.left.assign(t.n + 1, 0);
  t.right.assign(t.n + 1, 0);
  std::function<int(std::size_t, std::size_t)> build = [&](std::size_t lo, std::size_t hi) -> int {
    if (lo >= hi) return 0;
    std::size_t at = lo;
    for (std::size_t i = lo; i < hi; ++i)
      if (sigma(i + 1) < sigma(at + 1)) at = i;
    const int v = sigma(at + 1);
    t.left[static_cast<std::size_t>(v)] = build(lo, at);
    t.right[static_cast<std::size_t>(v)] = build(at + 1, hi);
    return v;
  };
  t.root = build(0, t.n);
  return t;
}

Permutation permutation_from_tree(const IncreasingBinaryTree& t) {
  std::vector<int> w;
  std::function<void(int)> walk = [&](int v) {
    if (!v) return;
    walk(t.left[static_cast<std::size_t>(v)]);
    w.push_back(v);
    walk(t.right[static_cast<std::size_t>(v)]);
  };
  walk(t.root);
  return Permutation(std::span<const int>(w));
}

LaguerreHistory history_from_tree(const IncreasingBinaryTree& t) {
  if (t.n == 0) throw InvalidInput("empty tree");
  LaguerreHistory h;
  std::vector<int> slots{t.root};  // vertex that will fill each open slot, left to right
  for (std::size_t v = 1; v < t.n; ++v) {
    const auto it = std::find(slots.begin(), slots.end(), static_cast<int>(v));
    if (it == slots.end()) throw InvalidInput("tree is not increasing");
    const int l = t.left[v], r = t.right[v];
    h.labels.push_back(static_cast<int>(it - slots.begin()) + 1);
    h.steps.push_back(l && r ? HStep::U : l ? HStep::L1 : r ? HStep::L2 : HStep::D);
    std::vector<int> kids;
    if (l) kids.push_back(l);
    if (r) kids.push_back(r);
    const auto pos = slots.erase(it);
    slots.insert(pos, kids.begin(), kids.end());
  }
  if (slots.size() != 1 || slots[0] != static_cast<int>(t.n) || t.left[t.n] || t.right[t.n])
    throw InvalidInput("tree is not increasing");
  return h;
}

IncreasingBinaryTree tree_from_history(const LaguerreHistory& h) {
  if (!h.valid()) throw InvalidInput("invalid Laguerre history " + h.to_string());
  IncreasingBinaryTree t;
  t.n = h.length() + 1;
  t.left.assign(t.n + 1, 0);
  t.right.assign(t.n + 1, 0);
  struct Slot {
    int parent;  // 0 for the root position
    bool right;
  };
  std::vector<Slot> slots{{0, false}};
  auto place = [&](const Slot& s, int v) {
    if (!s.parent) t.root = v;
    else (s.right ? t.right : t.left)[static_cast<std::size_t>(s.parent)] = v;
  };
  for (std::size_t i = 0; i < h.length(); ++i) {
    const int v = static_cast<int>(i) + 1;
    const auto it = slots.begin() + (h.labels[i] - 1);
    place(*it, v);
    std::vector<Slot> kids;
    if (h.steps[i] == HStep::U || h.steps[i] == HStep::L1) kids.push_back({v, false});
    if (h.steps[i] == HStep::U || h.steps[i] == HStep::L2) kids.push_back({v, true});
    const auto pos = slots.erase(it);
    slots.insert(pos, kids.begin(), kids.end());
  }
  place(slots.front(), static_cast<int>(t.n));
  return t;
}

LaguerreHistory chi(const Permutation& sigma) {
  if (sigma.empty()) throw InvalidInput("chi needs a nonempty permutation");
  return history_from_tree(tree_from_permutation(sigma));
}

Permutation chi_inv(const LaguerreHistory& h) { return permutation_from_tree(tree_from_history(h)); }

// ---- labeled Dyck paths ----------------------------------------------------

namespace {

// mu[i] for 1-based step i: the label of a D step, 0 on U steps.
std::vector<int> label_by_step(const LabeledPath& p) {
  std::vector<int> mu(p.path.length() + 1, 0);
  std::size_t j = 0;
  for (std::size_t i = 0; i < p.path.length(); ++i)
    if (p.path.steps[i] == Step::D) mu[i + 1] = p.down_labels[j++];
  return mu;
}

// partner[i] for a U at index i is the index of its matching D, and vice versa.
template <class S>
std::vector<std::size_t> match_steps(const std::vector<S>& steps, S up, S down) {
  std::vector<std::size_t> partner(steps.size(), 0), stack;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == up) {
      stack.push_back(i);
    } else if (steps[i] == down) {
      partner[i] = stack.back();
      partner[stack.back()] = i;
      stack.pop_back();
    }
  }
  return partner;
}

}  // namespace

LaguerreHistory phi(const LabeledDyckPath& p) {
  if (!p.valid() || p.half_length() == 0) throw InvalidInput("not a nonempty labeled Dyck path: " + p.to_string());
  const std::size_t n = p.half_length() - 1;
  const auto& M = p.path.steps;
  const auto mu = label_by_step(p);
  auto at = [&](std::size_t i) { return M[i - 1]; };  // 1-based
  LaguerreHistory h;
  for (std::size_t i = 1; i <= n; ++i) {
    const Step a = at(2 * i), b = at(2 * i + 1);
    h.steps.push_back(a == Step::U ? (b == Step::U ? HStep::U : HStep::L1) : (b == Step::D ? HStep::D : HStep::L2));
  }
  const auto partner = match_steps(h.steps, HStep::U, HStep::D);
  for (std::size_t i = 1; i <= n; ++i) {
    switch (h.steps[i - 1]) {
      case HStep::U: h.labels.push_back(mu[2 * (partner[i - 1] + 1) + 1]); break;
      case HStep::D: h.labels.push_back(mu[2 * i]); break;
      case HStep::L1: h.labels.push_back(mu[2 * i + 1]); break;
      case HStep::L2: h.labels.push_back(mu[2 * i]); break;
    }
  }
  return h;
}

LabeledDyckPath phi_inv(const LaguerreHistory& h) {
  if (!h.valid()) throw InvalidInput("invalid Laguerre history " + h.to_string());
  const std::size_t n = h.length();
  std::vector<Step> M(2 * n + 2);
  std::vector<int> mu(2 * n + 3, 0);  // 1-based
  M[0] = Step::U;
  M[2 * n + 1] = Step::D;
  mu[2 * n + 2] = 1;
  const auto partner = match_steps(h.steps, HStep::U, HStep::D);
  for (std::size_t i = 1; i <= n; ++i) {
    Step& a = M[2 * i - 1];
    Step& b = M[2 * i];
    switch (h.steps[i - 1]) {
      case HStep::U: a = b = Step::U; break;
      case HStep::D:
        a = b = Step::D;
        mu[2 * i] = h.labels[i - 1];
        mu[2 * i + 1] = h.labels[partner[i - 1]];
        break;
      case HStep::L1:
        a = Step::U, b = Step::D;
        mu[2 * i + 1] = h.labels[i - 1];
        break;
      case HStep::L2:
        a = Step::D, b = Step::U;
        mu[2 * i] = h.labels[i - 1];
        break;
    }
  }
  LabeledDyckPath p;
  p.path.steps = std::move(M);
  for (std::size_t i = 1; i <= 2 * n + 2; ++i)
    if (p.path.steps[i - 1] == Step::D) p.down_labels.push_back(mu[i]);
  return p;
}

// ---- André paths -----------------------------------------------------------

PsiImage psi(const AndrePath& a) {
  if (!a.valid()) throw InvalidInput("not an André path: " + a.to_string());
  PsiImage out;
  out.dyck.down_labels = a.down_labels;
  const std::size_t k = (a.path.length() - a.path.count(Step::L)) / 2;
  out.composition.parts.assign(k + 1, 0);
  for (Step s : a.path.steps) {
    if (s == Step::L) ++out.composition.parts[out.dyck.path.length() / 2];
    else out.dyck.path.steps.push_back(s);
  }
  return out;
}

AndrePath psi_inv(const WeakComposition& y, const LabeledDyckPath& dyck) {
  if (!dyck.path.steps.empty() && !dyck.valid()) throw InvalidInput("not a labeled Dyck path: " + dyck.to_string());
  const std::size_t k = dyck.half_length();
  if (y.parts.size() != k + 1 || !y.valid())
    throw InvalidInput("composition " + y.to_string() + " needs " + std::to_string(k + 1) + " nonnegative parts");
  AndrePath a;
  a.down_labels = dyck.down_labels;
  auto levels = [&](int count) { a.path.steps.insert(a.path.steps.end(), static_cast<std::size_t>(count), Step::L); };
  levels(y.parts[0]);
  for (std::size_t i = 1; i <= k; ++i) {
    a.path.steps.push_back(dyck.path.steps[2 * i - 2]);
    a.path.steps.push_back(dyck.path.steps[2 * i - 1]);
    levels(y.parts[i]);
  }
  return a;
}

AndrePath omega(const Permutation& tau) {
  if (!is_involution(tau)) throw InvalidInput(tau.to_string() + " is not an involution");
  static const Permutation p132{1, 3, 2};
  if (contains_fast(tau, p132, Mode::I)) throw InvalidInput(tau.to_string() + " contains 132 in the I order");
  const auto split = remove_fixed_points(tau);
  const std::size_t n = tau.size(), k = split.matching.size() / 2;
  // Openers are exactly 1..k; fixed points sit in the k+1 gaps around the closers.
  WeakComposition y;
  y.parts.assign(k + 1, 0);
  std::size_t closers = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const int t = tau(i);
    if (t == static_cast<int>(i)) {
      ++y.parts[closers];
    } else if (t < static_cast<int>(i)) {
      ++closers;
    } else if (i > k) {
      throw std::logic_error("opener after position k in a 132-avoider");
    }
  }
  if (k == 0) return psi_inv(y, LabeledDyckPath{});
  const Permutation sigma = f_map(split.matching);
  return psi_inv(y, phi_inv(chi(sigma)));
}

Permutation omega_inv(const AndrePath& a) {
  if (!a.valid()) throw InvalidInput("not an André path: " + a.to_string());
  const auto [y, dyck] = psi(a);
  const std::size_t n = a.path.length(), k = dyck.half_length();
  if (k == 0) return Permutation::identity(n);
  const Permutation rho = f_inv(chi_inv(phi(dyck)), false);
  std::uint32_t fixed = 0;
  std::size_t pos = k + 1;
  for (std::size_t i = 0; i <= k; ++i) {
    if (i > 0) ++pos;  // the i-th closer
    for (int j = 0; j < y.parts[i]; ++j) fixed |= 1u << (pos++ - 1);
  }
  return insert_fixed_points(rho, fixed, n);
}

}  // namespace invpat
