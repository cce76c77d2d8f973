// Copyright 2026 The SHIA Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SHIA_TRANSPORT_CLOCK_H_
#define SHIA_TRANSPORT_CLOCK_H_

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <utility>

namespace shia::transport {

// Milliseconds since the clock's epoch (construction time).
using Millis = std::chrono::milliseconds;

enum class ClockMode { kReal, kVirtual };

// Monotonic time source plus a timer queue. Timer callbacks run one at a
// time in (deadline, scheduling order) and never with the clock's internal
// lock held, so they may schedule further timers. Shared by every component
// of a session and safe to use from any thread.
class Clock {
 public:
  using TimerId = std::uint64_t;

  virtual ~Clock() = default;

  virtual ClockMode mode() const = 0;
  virtual Millis now() const = 0;

  // Blocks the calling thread until now() >= deadline. On a virtual clock
  // some other thread must be advancing time.
  virtual void SleepUntil(Millis deadline) = 0;

  virtual TimerId ScheduleAt(Millis deadline, std::function<void()> fn) = 0;
  TimerId ScheduleAfter(Millis delay, std::function<void()> fn) {
    return ScheduleAt(now() + delay, std::move(fn));
  }
  // False if the timer already fired or was never scheduled.
  virtual bool Cancel(TimerId id) = 0;

  // Moves virtual time forward by `delta`, firing every timer and releasing
  // every sleeper with deadline <= now + delta in deadline order. Throws
  // kClockMode on a real clock.
  virtual void Advance(Millis delta) = 0;
};

// Lets `delta` of clock time pass from the caller's point of view: advances
// a virtual clock, sleeps on a real one.
void WaitFor(Clock& clock, Millis delta);

class VirtualClock final : public Clock {
 public:
  VirtualClock() = default;

  ClockMode mode() const override { return ClockMode::kVirtual; }
  Millis now() const override;
  void SleepUntil(Millis deadline) override;
  TimerId ScheduleAt(Millis deadline, std::function<void()> fn) override;
  bool Cancel(TimerId id) override;
  void Advance(Millis delta) override;

  std::size_t pending_timers() const;

 private:
  using Key = std::pair<Millis, TimerId>;

  mutable std::mutex mu_;
  std::mutex advance_mu_;
  Millis now_{0};
  TimerId next_id_ = 1;
  std::map<Key, std::function<void()>> timers_;
  std::unordered_map<TimerId, Millis> deadlines_;
};

// Wall-clock time from std::chrono::steady_clock. Timers run on a single
// dispatcher thread owned by the clock; pending timers are dropped on
// destruction.
class RealClock final : public Clock {
 public:
  RealClock();
  ~RealClock() override;
  RealClock(const RealClock&) = delete;
  RealClock& operator=(const RealClock&) = delete;

  ClockMode mode() const override { return ClockMode::kReal; }
  Millis now() const override;
  void SleepUntil(Millis deadline) override;
  TimerId ScheduleAt(Millis deadline, std::function<void()> fn) override;
  bool Cancel(TimerId id) override;
  void Advance(Millis delta) override;

 private:
  using Key = std::pair<Millis, TimerId>;

  void Dispatch();

  const std::chrono::steady_clock::time_point epoch_;
  std::mutex mu_;
  std::condition_variable cv_;
  bool stopping_ = false;
  TimerId next_id_ = 1;
  std::map<Key, std::function<void()>> timers_;
  std::unordered_map<TimerId, Millis> deadlines_;
  std::thread dispatcher_;
};

}  // namespace shia::transport

#endif  // SHIA_TRANSPORT_CLOCK_H_
