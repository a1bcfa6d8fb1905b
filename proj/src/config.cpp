#include "burnside/config.hpp"

#include <atomic>

namespace burnside::config {

namespace {
std::atomic<int> g_order_cap{1024};
std::atomic<long long> g_point_cap{1000000};
}  // namespace

int order_cap() { return g_order_cap.load(); }
void set_order_cap(int cap) { g_order_cap.store(cap); }

long long point_cap() { return g_point_cap.load(); }
void set_point_cap(long long cap) { g_point_cap.store(cap); }

}  // namespace burnside::config
