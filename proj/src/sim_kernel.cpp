#include "simcache/sim_kernel.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace simcache {

bool Engine::later(const Event& a, const Event& b) {
  if (a.fire_time != b.fire_time) return a.fire_time > b.fire_time;
  return a.serial > b.serial;  // FIFO among equal fire times
}

Engine::Handle Engine::schedule(Activation act, SimTime delay) {
  if (finished_) throw DomainError("schedule on a finished engine");
  if (!(delay >= 0.0)) throw DomainError("schedule with negative delay");
  Event ev{now_ + delay, next_serial_++, std::move(act)};
  Handle h{ev.serial, ev.fire_time};
  heap_.push_back(std::move(ev));
  std::push_heap(heap_.begin(), heap_.end(), later);
  return h;
}

SimTime Engine::run(const std::function<bool()>& stop) {
  if (finished_) throw DomainError("run on a finished engine");
  if (heap_.empty())
    throw IncompleteRunError("run with no events scheduled", now_, executed_);
  while (!heap_.empty()) {
    std::pop_heap(heap_.begin(), heap_.end(), later);
    Event ev = std::move(heap_.back());
    heap_.pop_back();
    assert(ev.fire_time >= now_);
    now_ = ev.fire_time;
    ev.act();
    ++executed_;
    if (stop()) {
      finished_ = true;
      return now_;
    }
  }
  throw IncompleteRunError("event queue exhausted before the stop condition held",
                           now_, executed_);
}

}  // namespace simcache
