#include "invpat/involution.hpp"

#include "invpat/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

namespace invpat {

Involution::Involution(Permutation p) : perm_(p) {
  if (!is_involution(perm_))
    throw InvalidInput("not an involution: " + perm_.to_string());
}

namespace {

int parse_int(std::string_view tok) {
  while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
  while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
    throw InvalidInput("cannot parse cycle entry '" + std::string(tok) + "'");
  return v;
}

}  // namespace

Involution Involution::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty() || text.front() != '(') return Involution(Permutation::parse(text));

  std::vector<Cycle> cycles;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw InvalidInput("expected '(' in cycle form");
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw InvalidInput("unbalanced '(' in cycle form");
    const std::string_view body = text.substr(pos + 1, close - pos - 1);
    std::vector<int> entries;
    if (body.find(',') != std::string_view::npos) {
      const std::size_t comma = body.find(',');
      if (body.find(',', comma + 1) != std::string_view::npos)
        throw InvalidInput("cycle with more than two entries");
      entries = {parse_int(body.substr(0, comma)), parse_int(body.substr(comma + 1))};
    } else {
      for (char c : body) {
        if (c == ' ') continue;
        if (c < '1' || c > '9') throw InvalidInput("bad cycle entry in '" + std::string(body) + "'");
        entries.push_back(c - '0');
      }
    }
    if (entries.empty() || entries.size() > 2) throw InvalidInput("cycle must have one or two entries");
    const int a = entries.front(), b = entries.back();
    cycles.push_back({std::min(a, b), std::max(a, b)});
    pos = close + 1;
  }
  return involution_from_cycles(cycles);
}

Involution involution_from_cycles(const std::vector<Cycle>& cycles) {
  int n = 0;
  for (const Cycle& c : cycles) n = std::max(n, c.second);
  if (static_cast<std::size_t>(n) > Permutation::kMaxSize) throw InvalidInput("involution too large");
  std::vector<int> one_line(static_cast<std::size_t>(n), 0);
  for (const Cycle& c : cycles) {
    if (c.first < 1 || c.first > c.second) throw InvalidInput("malformed cycle");
    if (one_line[c.first - 1] != 0 || one_line[c.second - 1] != 0)
      throw InvalidInput("cycles overlap");
    one_line[c.first - 1] = c.second;
    one_line[c.second - 1] = c.first;
  }
  for (int v : one_line)
    if (v == 0) throw InvalidInput("cycles do not cover 1..n");
  return Involution(Permutation(std::span<const int>(one_line)));
}

std::vector<Cycle> Involution::cycles() const {
  std::vector<Cycle> out;
  for (std::size_t a = 1; a <= size(); ++a) {
    const int b = perm_(a);
    if (static_cast<std::size_t>(b) >= a) out.push_back({static_cast<int>(a), b});
  }
  return out;
}

std::vector<int> Involution::fixed_points() const {
  std::vector<int> out;
  for (std::size_t a = 1; a <= size(); ++a)
    if (static_cast<std::size_t>(perm_(a)) == a) out.push_back(static_cast<int>(a));
  return out;
}

std::size_t Involution::fixed_point_count() const noexcept {
  return static_cast<std::size_t>(std::popcount(fixed_point_mask()));
}

std::uint32_t Involution::fixed_point_mask() const noexcept {
  return kernels::active().cycle_roles(perm_.storage().data(), size()).fixed;
}

std::uint32_t Involution::opener_mask() const noexcept {
  return kernels::active().cycle_roles(perm_.storage().data(), size()).openers;
}

std::string Involution::to_cycle_string() const {
  std::string out;
  const bool compact = size() <= 9;
  for (const Cycle& c : cycles()) {
    out.push_back('(');
    if (compact) {
      out.push_back(static_cast<char>('0' + c.first));
      if (c.second != c.first) out.push_back(static_cast<char>('0' + c.second));
    } else {
      out += std::to_string(c.first) + "," + std::to_string(c.second);
    }
    out.push_back(')');
  }
  return out;
}

FpfInvolution::FpfInvolution(Permutation p) : FpfInvolution(Involution(p)) {}

FpfInvolution::FpfInvolution(Involution inv) : inv_(inv) {
  if (!inv_.is_fixed_point_free())
    throw InvalidInput("involution has fixed points: " + inv_.to_string());
}

FpfInvolution FpfInvolution::parse(std::string_view text) {
  return FpfInvolution(Involution::parse(text));
}

}  // namespace invpat
