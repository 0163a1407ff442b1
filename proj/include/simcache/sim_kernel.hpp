#pragma once

// Minimal process-based discrete-event engine. Processes are plain callbacks
// that re-arm themselves by scheduling their next activation; a "hold" is
// schedule-self-after-delay. Simultaneous events fire in insertion order.

#include <cstdint>
#include <functional>
#include <vector>

#include "simcache/errors.hpp"

namespace simcache {

using SimTime = double;

class Engine {
 public:
  using Activation = std::function<void()>;

  struct Handle {
    std::uint64_t serial;
    SimTime fire_time;
  };

  // Enqueues `act` at now() + delay. delay < 0 is a domain error.
  Handle schedule(Activation act, SimTime delay);

  // Pops and executes events in (fire_time, insertion_serial) order until
  // `stop` holds after some event, then returns the clock. An empty queue at
  // entry or before `stop` holds is an incomplete run.
  SimTime run(const std::function<bool()>& stop);

  SimTime now() const noexcept { return now_; }
  std::uint64_t events_executed() const noexcept { return executed_; }
  std::size_t pending() const noexcept { return heap_.size(); }
  bool finished() const noexcept { return finished_; }

 private:
  struct Event {
    SimTime fire_time;
    std::uint64_t serial;
    Activation act;
  };

  static bool later(const Event& a, const Event& b);

  std::vector<Event> heap_;  // min-heap on (fire_time, serial)
  SimTime now_ = 0.0;
  std::uint64_t next_serial_ = 0;
  std::uint64_t executed_ = 0;
  bool finished_ = false;
};

}  // namespace simcache
