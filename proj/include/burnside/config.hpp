#pragma once

namespace burnside::config {

// Largest group order any constructor will produce. Default 1024.
int order_cap();
void set_order_cap(int cap);

// Largest concrete G-set (in points) the oracle will materialize.
long long point_cap();
void set_point_cap(long long cap);

}  // namespace burnside::config
