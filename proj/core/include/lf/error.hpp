#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lf {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input file (PPM, Y4M, manifest, ...).
class FormatError : public Error {
public:
    using Error::Error;
};

// Invalid argument to an operation (bad alpha, empty sweep, ...).
class ParamError : public Error {
public:
    using Error::Error;
};

// Mismatched array/image geometry.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Non-finite sample where a real pixel value was expected.
class NumericError : public Error {
public:
    using Error::Error;
};

// Failure while assembling a light field from disk.
class LoadError : public Error {
public:
    using Error::Error;
};

// Corrupt LFJ1 payload; carries the bit offset where decoding gave up.
class BitstreamError : public Error {
public:
    BitstreamError(const std::string& msg, std::uint64_t bit_offset)
        : Error(msg + " (bit offset " + std::to_string(bit_offset) + ")"),
          bit_offset_(bit_offset) {}

    std::uint64_t bit_offset() const { return bit_offset_; }

private:
    std::uint64_t bit_offset_;
};

}  // namespace lf
