#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace unimod {

/// A precondition on dimensions, orders, primes, or counts was violated.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised by completion when the full-rank minors are not coprime.
class NotUnimodular : public std::runtime_error {
public:
    explicit NotUnimodular(mpz_class minor_gcd)
        : std::runtime_error("matrix is not unimodular: gcd of full-rank minors is " + minor_gcd.get_str()),
          minor_gcd_(std::move(minor_gcd)) {}

    const mpz_class& minor_gcd() const noexcept { return minor_gcd_; }

private:
    mpz_class minor_gcd_;
};

/// An enumeration would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(mpz_class required, std::uint64_t budget)
        : std::runtime_error("enumeration requires " + required.get_str() + " cases but the budget is " +
                             std::to_string(budget)),
          required_(std::move(required)), budget_(budget) {}

    const mpz_class& required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    mpz_class required_;
    std::uint64_t budget_;
};

/// Malformed matrix file; line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace unimod
