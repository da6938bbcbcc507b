#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace becrad {

using Complex = std::complex<double>;

// Mirrors br_status in the public header; keep the numeric values in sync.
enum class Status : int {
    ok = 0,
    invalid_argument = 1,
    domain_error = 2,
    numerical_failure = 3,
    unsupported = 4,
};

class Error : public std::runtime_error {
public:
    Error(Status s, const std::string& msg) : std::runtime_error(msg), status_(s) {}
    Status status() const { return status_; }

private:
    Status status_;
};

[[noreturn]] inline void fail(Status s, const std::string& msg) { throw Error(s, msg); }

inline void require(bool cond, Status s, const std::string& msg) {
    if (!cond) fail(s, msg);
}

enum class Provenance : int {
    numeric = 0,
    closed_form = 1,
    regulator_extrapolated = 2,
    asymptotic = 3,
};

inline const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::numeric: return "numeric";
        case Provenance::closed_form: return "closed_form";
        case Provenance::regulator_extrapolated: return "regulator_extrapolated";
        case Provenance::asymptotic: return "asymptotic";
    }
    return "unknown";
}

}  // namespace becrad
