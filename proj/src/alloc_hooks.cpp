// Counting replacements for the global allocation functions. Linked only into
// binaries that want bench::measure_peak_memory.
//
// Every block carries a 16-byte prefix holding the requested size and the
// pointer returned by the C allocator.

#include <cstddef>
#include <cstdlib>
#include <new>

#include "livc/bench.hpp"

namespace {

struct Prefix {
  std::size_t size;
  void* base;
};
static_assert(sizeof(Prefix) == 16);

void* allocate(std::size_t size, std::size_t align) noexcept {
  if (size == 0) size = 1;
  const std::size_t offset = align > sizeof(Prefix) ? align : sizeof(Prefix);
  void* base = align > alignof(std::max_align_t)
                   ? std::aligned_alloc(align, (size + offset + align - 1) / align * align)
                   : std::malloc(size + offset);
  if (!base) return nullptr;
  auto* user = static_cast<char*>(base) + offset;
  *reinterpret_cast<Prefix*>(user - sizeof(Prefix)) = Prefix{size, base};
  livc::bench::detail::on_allocate(size);
  return user;
}

void release(void* p) noexcept {
  if (!p) return;
  const auto prefix = *reinterpret_cast<Prefix*>(static_cast<char*>(p) - sizeof(Prefix));
  livc::bench::detail::on_release(prefix.size);
  std::free(prefix.base);
}

void* allocate_or_throw(std::size_t size, std::size_t align) {
  for (;;) {
    if (void* p = allocate(size, align)) return p;
    auto handler = std::get_new_handler();
    if (!handler) throw std::bad_alloc();
    handler();
  }
}

[[maybe_unused]] const bool registered = (livc::bench::detail::mark_allocation_counter_installed(), true);

}  // namespace

void* operator new(std::size_t size) { return allocate_or_throw(size, alignof(std::max_align_t)); }
void* operator new[](std::size_t size) { return allocate_or_throw(size, alignof(std::max_align_t)); }
void* operator new(std::size_t size, const std::nothrow_t&) noexcept { return allocate(size, alignof(std::max_align_t)); }
void* operator new[](std::size_t size, const std::nothrow_t&) noexcept {
  return allocate(size, alignof(std::max_align_t));
}
void* operator new(std::size_t size, std::align_val_t al) { return allocate_or_throw(size, static_cast<std::size_t>(al)); }
void* operator new[](std::size_t size, std::align_val_t al) {
  return allocate_or_throw(size, static_cast<std::size_t>(al));
}
void* operator new(std::size_t size, std::align_val_t al, const std::nothrow_t&) noexcept {
  return allocate(size, static_cast<std::size_t>(al));
}
void* operator new[](std::size_t size, std::align_val_t al, const std::nothrow_t&) noexcept {
  return allocate(size, static_cast<std::size_t>(al));
}

void operator delete(void* p) noexcept { release(p); }
void operator delete[](void* p) noexcept { release(p); }
void operator delete(void* p, std::size_t) noexcept { release(p); }
void operator delete[](void* p, std::size_t) noexcept { release(p); }
void operator delete(void* p, const std::nothrow_t&) noexcept { release(p); }
void operator delete[](void* p, const std::nothrow_t&) noexcept { release(p); }
void operator delete(void* p, std::align_val_t) noexcept { release(p); }
void operator delete[](void* p, std::align_val_t) noexcept { release(p); }
void operator delete(void* p, std::size_t, std::align_val_t) noexcept { release(p); }
void operator delete[](void* p, std::size_t, std::align_val_t) noexcept { release(p); }
void operator delete(void* p, std::align_val_t, const std::nothrow_t&) noexcept { release(p); }
void operator delete[](void* p, std::align_val_t, const std::nothrow_t&) noexcept { release(p); }
