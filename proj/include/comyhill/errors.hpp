#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace comyhill {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InflationViolation : Error {
    std::uint64_t at;
    explicit InflationViolation(std::uint64_t n)
        : Error("inflation violated at " + std::to_string(n)), at(n) {}
};

struct WatchdogExhausted : Error {
    std::size_t forced;
    explicit WatchdogExhausted(std::size_t k)
        : Error("predicate forced more than " + std::to_string(k) + " bits"),
          forced(k) {}
};

struct NotIsolated : Error {
    using Error::Error;
};

struct InjectivityViolation : Error {
    using Error::Error;
};

struct PreimageNotFound : Error {
    using Error::Error;
};

struct ChainBudgetExceeded : Error {
    using Error::Error;
};

}  // namespace comyhill
