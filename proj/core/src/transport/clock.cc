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

#include "shia/transport/clock.h"

#include <memory>

#include "shia/error.h"

namespace shia::transport {

void WaitFor(Clock& clock, Millis delta) {
  if (clock.mode() == ClockMode::kVirtual) {
    clock.Advance(delta);
  } else {
    clock.SleepUntil(clock.now() + delta);
  }
}

Millis VirtualClock::now() const {
  std::lock_guard lock(mu_);
  return now_;
}

std::size_t VirtualClock::pending_timers() const {
  std::lock_guard lock(mu_);
  return timers_.size();
}

Clock::TimerId VirtualClock::ScheduleAt(Millis deadline,
                                        std::function<void()> fn) {
  std::lock_guard lock(mu_);
  const TimerId id = next_id_++;
  timers_.emplace(Key{deadline, id}, std::move(fn));
  deadlines_.emplace(id, deadline);
  return id;
}

bool VirtualClock::Cancel(TimerId id) {
  std::lock_guard lock(mu_);
  auto it = deadlines_.find(id);
  if (it == deadlines_.end()) return false;
  timers_.erase(Key{it->second, id});
  deadlines_.erase(it);
  return true;
}

void VirtualClock::SleepUntil(Millis deadline) {
  struct Handoff {
    std::mutex mu;
    std::condition_variable cv;
    bool released = false;
    bool resumed = false;
  };
  if (now() >= deadline) return;
  auto handoff = std::make_shared<Handoff>();
  // The advancing thread waits for the sleeper to resume before moving on,
  // so sleepers leave in deadline order.
  ScheduleAt(deadline, [handoff] {
    std::unique_lock lock(handoff->mu);
    handoff->released = true;
    handoff->cv.notify_all();
    handoff->cv.wait(lock, [&] { return handoff->resumed; });
  });
  std::unique_lock lock(handoff->mu);
  handoff->cv.wait(lock, [&] { return handoff->released; });
  handoff->resumed = true;
  handoff->cv.notify_all();
}

void VirtualClock::Advance(Millis delta) {
  if (delta < Millis{0}) {
    throw Error(ErrorCode::kClockMode, "cannot advance a clock backwards");
  }
  std::lock_guard advancing(advance_mu_);
  Millis target;
  {
    std::lock_guard lock(mu_);
    target = now_ + delta;
  }
  for (;;) {
    std::function<void()> fn;
    {
      std::lock_guard lock(mu_);
      auto it = timers_.begin();
      if (it == timers_.end() || it->first.first > target) break;
      now_ = std::max(now_, it->first.first);
      fn = std::move(it->second);
      deadlines_.erase(it->first.second);
      timers_.erase(it);
    }
    fn();
  }
  std::lock_guard lock(mu_);
  now_ = target;
}

RealClock::RealClock()
    : epoch_(std::chrono::steady_clock::now()),
      dispatcher_([this] { Dispatch(); }) {}

RealClock::~RealClock() {
  {
    std::lock_guard lock(mu_);
    stopping_ = true;
  }
  cv_.notify_all();
  dispatcher_.join();
}

Millis RealClock::now() const {
  return std::chrono::duration_cast<Millis>(std::chrono::steady_clock::now() -
                                            epoch_);
}

void RealClock::SleepUntil(Millis deadline) {
  std::this_thread::sleep_until(epoch_ + deadline);
}

Clock::TimerId RealClock::ScheduleAt(Millis deadline,
                                     std::function<void()> fn) {
  TimerId id;
  {
    std::lock_guard lock(mu_);
    id = next_id_++;
    timers_.emplace(Key{deadline, id}, std::move(fn));
    deadlines_.emplace(id, deadline);
  }
  cv_.notify_all();
  return id;
}

bool RealClock::Cancel(TimerId id) {
  std::lock_guard lock(mu_);
  auto it = deadlines_.find(id);
  if (it == deadlines_.end()) return false;
  timers_.erase(Key{it->second, id});
  deadlines_.erase(it);
  return true;
}

void RealClock::Advance(Millis) {
  throw Error(ErrorCode::kClockMode, "advance() is only valid on a virtual clock");
}

void RealClock::Dispatch() {
  std::unique_lock lock(mu_);
  while (!stopping_) {
    if (timers_.empty()) {
      cv_.wait(lock);
      continue;
    }
    auto it = timers_.begin();
    const Millis deadline = it->first.first;
    if (now() < deadline) {
      cv_.wait_until(lock, epoch_ + deadline);
      continue;
    }
    auto fn = std::move(it->second);
    deadlines_.erase(it->first.second);
    timers_.erase(it);
    lock.unlock();
    fn();
    lock.lock();
  }
}

}  // namespace shia::transport
