#include <cstdlib>
#include <string_view>

#include "monoideal/kernels.hpp"

namespace monoideal::simd {

bool supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable* table(Isa isa) noexcept {
  if (!supported(isa)) return nullptr;
  switch (isa) {
    case Isa::scalar:
      return &detail::kScalarTable;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return &detail::kAvx2Table;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

namespace {

const KernelTable& select() noexcept {
  const char* env = std::getenv("MONOIDEAL_SIMD");
  if (env != nullptr && std::string_view(env) == "scalar") return detail::kScalarTable;
  if (const KernelTable* t = table(Isa::avx2)) return *t;
  return detail::kScalarTable;
}

}  // namespace

const KernelTable& active() noexcept {
  static const KernelTable& chosen = select();
  return chosen;
}

}  // namespace monoideal::simd
