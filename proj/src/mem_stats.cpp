#include "w2p/mem_stats.hpp"

#include <atomic>
#include <cstdlib>
#include <malloc.h>
#include <new>

namespace {

std::atomic<std::size_t> g_current{0};
std::atomic<std::size_t> g_peak{0};

void note_alloc(std::size_t sz) {
    std::size_t cur = g_current.fetch_add(sz, std::memory_order_relaxed) + sz;
    std::size_t peak = g_peak.load(std::memory_order_relaxed);
    while (cur > peak && !g_peak.compare_exchange_weak(peak, cur, std::memory_order_relaxed)) {
    }
}

void note_free(void *p) {
    if (!p) return;
    g_current.fetch_sub(malloc_usable_size(p), std::memory_order_relaxed);
}

void *checked_alloc(std::size_t sz) {
    void *p = std::malloc(sz ? sz : 1);
    if (!p) throw std::bad_alloc();
    note_alloc(malloc_usable_size(p));
    return p;
}

} // namespace

namespace w2p::mem_stats {

std::size_t current_bytes() { return g_current.load(std::memory_order_relaxed); }
std::size_t peak_bytes() { return g_peak.load(std::memory_order_relaxed); }
void reset_peak() { g_peak.store(g_current.load(std::memory_order_relaxed)); }

} // namespace w2p::mem_stats

void *operator new(std::size_t sz) { return checked_alloc(sz); }
void *operator new[](std::size_t sz) { return checked_alloc(sz); }
void operator delete(void *p) noexcept {
    note_free(p);
    std::free(p);
}
void operator delete[](void *p) noexcept {
    note_free(p);
    std::free(p);
}
void operator delete(void *p, std::size_t) noexcept {
    note_free(p);
    std::free(p);
}
void operator delete[](void *p, std::size_t) noexcept {
    note_free(p);
    std::free(p);
}
