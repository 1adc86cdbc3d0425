#include <atomic>
#include <cstdlib>

#include "invpat/kernels.hpp"

namespace invpat::kernels {

#if defined(INVPAT_HAVE_X86_KERNELS)
namespace detail {
const KernelTable& sse2_table() noexcept;
const KernelTable& avx2_table() noexcept;
}  // namespace detail

const KernelTable* sse2_kernels() noexcept { return &detail::sse2_table(); }

const KernelTable* avx2_kernels() noexcept {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &detail::avx2_table() : nullptr;
}
#else
const KernelTable* sse2_kernels() noexcept { return nullptr; }
const KernelTable* avx2_kernels() noexcept { return nullptr; }
#endif

std::vector<const KernelTable*> available_kernels() {
  std::vector<const KernelTable*> out{&scalar_kernels()};
  if (auto* k = sse2_kernels()) out.push_back(k);
  if (auto* k = avx2_kernels()) out.push_back(k);
  return out;
}

namespace {

const KernelTable* find(std::string_view name) {
  for (const KernelTable* k : available_kernels())
    if (k->name == name) return k;
  return nullptr;
}

const KernelTable* initial_choice() {
  if (const char* env = std::getenv("INVPAT_SIMD")) {
    if (const KernelTable* k = find(env)) return k;
  }
  return available_kernels().back();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> k{initial_choice()};
  return k;
}

}  // namespace

const KernelTable& active() noexcept { return *current().load(std::memory_order_relaxed); }

bool select(std::string_view name) {
  const KernelTable* k = find(name);
  if (!k) return false;
  current().store(k, std::memory_order_relaxed);
  return true;
}

}  // namespace invpat::kernels
