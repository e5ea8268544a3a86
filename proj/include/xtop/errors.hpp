#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xtop {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CycleError : public Error {
public:
    using Error::Error;
};

class DuplicateLabelError : public Error {
public:
    using Error::Error;
};

class ZeroSizeError : public Error {
public:
    using Error::Error;
};

class EmptySpecError : public Error {
public:
    using Error::Error;
};

class EmptyPosetError : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

class SubsetViolationError : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class NotAnIdealError : public Error {
public:
    using Error::Error;
};

// Malformed input text: JSON documents, forest specs, label references.
class ParseError : public Error {
public:
    using Error::Error;
};

// Raised when a brute-force routine is asked to work on a space too large
// for exhaustive enumeration.
class TooLargeError : public Error {
public:
    using Error::Error;
};

class NotALatticeError : public Error {
public:
    NotALatticeError(std::size_t a, std::size_t b, const std::string& what)
        : Error(what), a_(a), b_(b) {}
    std::size_t first() const noexcept { return a_; }
    std::size_t second() const noexcept { return b_; }

private:
    std::size_t a_;
    std::size_t b_;
};

// (a, b) are lattice indices with V(a) ∪ V(b) not a variety.
class NotXTopError : public Error {
public:
    NotXTopError(std::size_t a, std::size_t b, const std::string& what)
        : Error(what), a_(a), b_(b) {}
    std::size_t first() const noexcept { return a_; }
    std::size_t second() const noexcept { return b_; }

private:
    std::size_t a_;
    std::size_t b_;
};

class AxiomError : public Error {
public:
    AxiomError(std::string axiom, std::size_t x, std::size_t y, std::size_t z, const std::string& what)
        : Error(what), axiom_(std::move(axiom)), x_(x), y_(y), z_(z) {}
    const std::string& axiom() const noexcept { return axiom_; }
    std::size_t x() const noexcept { return x_; }
    std::size_t y() const noexcept { return y_; }
    std::size_t z() const noexcept { return z_; }

private:
    std::string axiom_;
    std::size_t x_;
    std::size_t y_;
    std::size_t z_;
};

}  // namespace xtop
