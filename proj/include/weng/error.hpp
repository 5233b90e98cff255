#pragma once
// Exception hierarchy.  Every error carries a short machine-readable kind
// string; the CLI maps kinds to exit codes.

#include <stdexcept>
#include <string>

namespace weng {

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }
    // true for errors that signal a bug / contradiction rather than bad input
    virtual bool internal() const noexcept { return false; }

private:
    std::string kind_;
};

// bad user input
class InvalidSpec : public Error {
public:
    explicit InvalidSpec(const std::string& w) : Error("InvalidSpec", w) {}
};

class CapExceeded : public Error {
public:
    CapExceeded(unsigned long long order, unsigned long long cap)
        : Error("CapExceeded", "Weyl group order " + std::to_string(order) +
                                   " exceeds cap " + std::to_string(cap)),
          order(order), cap(cap) {}
    unsigned long long order, cap;
};

class NotInFrakWp : public Error {
public:
    explicit NotInFrakWp(const std::string& w) : Error("NotInFrakWp", w) {}
};

// numeric domain errors
class PoleError : public Error {
public:
    PoleError(std::string kind, const std::string& w) : Error(std::move(kind), w) {}
};

class NearPole : public Error {
public:
    explicit NearPole(const std::string& w) : Error("NearPole", w) {}
};

class ContourTooClose : public Error {
public:
    explicit ContourTooClose(const std::string& w) : Error("ContourTooClose", w) {}
};

// bug signals: things the mathematics says cannot happen
class InternalError : public Error {
public:
    InternalError(std::string kind, const std::string& w) : Error(std::move(kind), w) {}
    bool internal() const noexcept override { return true; }
};

inline InternalError internal_inconsistency(const std::string& w) {
    return InternalError("InternalInconsistency", w);
}

} // namespace weng
