#include "wsn/sim/scheduler.hpp"

#include <cstdio>

namespace wsn {

std::string Scheduler::render(const Event& ev) const {
  char buf[160];
  if (ev.is_timer) {
    std::snprintf(buf, sizeof buf, "T t=%llu seq=%llu node=%llu handle=%lld",
                  static_cast<unsigned long long>(ev.fire_at),
                  static_cast<unsigned long long>(ev.seq),
                  static_cast<unsigned long long>(ev.node.value),
                  static_cast<long long>(ev.timer_handle.id));
  } else {
    std::snprintf(buf, sizeof buf,
                  "D t=%llu seq=%llu src=%llu dst=%llu kind=%02x len=%zu q=%u h=%016llx",
                  static_cast<unsigned long long>(ev.fire_at),
                  static_cast<unsigned long long>(ev.seq),
                  static_cast<unsigned long long>(ev.sender.value),
                  static_cast<unsigned long long>(ev.node.value),
                  ev.payload.empty() ? 0u : ev.payload.view()[0], ev.payload.size(), ev.quality,
                  static_cast<unsigned long long>(fnv1a(ev.payload.view())));
  }
  return buf;
}

}  // namespace wsn
