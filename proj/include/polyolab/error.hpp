#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyolab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, int requested, int cap)
        : Error(what + ": requested " + std::to_string(requested) + " exceeds cap " + std::to_string(cap)),
          requested_(requested), cap_(cap) {}
    int requested() const { return requested_; }
    int cap() const { return cap_; }

private:
    int requested_;
    int cap_;
};

class SingularSystem : public Error {
public:
    SingularSystem(int rank, int size, const std::string& ctx = "")
        : Error("singular system" + (ctx.empty() ? std::string() : " (" + ctx + ")") + ": rank " +
                std::to_string(rank) + " of " + std::to_string(size)),
          rank_(rank), size_(size) {}
    int rank() const { return rank_; }
    int size() const { return size_; }

private:
    int rank_;
    int size_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error("parse error at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace polyolab
