#pragma once

#include <chrono>

namespace w2p {

class timer {
  public:
    timer() : start_(clock::now()) {}
    void restart() { start_ = clock::now(); }
    double elapsed() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }

  private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_;
};

// Cooperative wall-clock budget.
class deadline {
  public:
    deadline() = default;
    explicit deadline(double seconds) : t_(), limit_(seconds) {}
    bool expired() const { return limit_ >= 0 && t_.elapsed() >= limit_; }
    double remaining() const { return limit_ < 0 ? 1e18 : limit_ - t_.elapsed(); }
    double elapsed() const { return t_.elapsed(); }
    static deadline unlimited() { return deadline(); }

  private:
    timer t_;
    double limit_ = -1; // negative: no limit
};

} // namespace w2p
