#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace holes {

/// Input violates an operation's stated precondition (CLI exit code 2).
class PreconditionError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// An exact search visited more nodes than its budget allows (CLI exit code 3).
class BudgetExceeded : public std::runtime_error
{
public:
    explicit BudgetExceeded(std::uint64_t budget)
        : std::runtime_error("search budget of " + std::to_string(budget) + " nodes exceeded")
        , budget_(budget)
    {
    }

    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t budget_;
};

/// A claimed value or certificate failed independent re-verification (CLI exit code 4).
class VerificationError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A witness driver reached a state its derivation rules out. Carries the
/// instance and the step trace so the failing step can be replayed.
class DriverError : public std::logic_error
{
public:
    DriverError(const std::string& what, std::string dump)
        : std::logic_error(what)
        , dump_(std::move(dump))
    {
    }

    const std::string& dump() const noexcept { return dump_; }

private:
    std::string dump_;
};

} // namespace holes
