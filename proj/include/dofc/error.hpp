#pragma once
#include <stdexcept>
#include <string>

namespace dofc {

// Error taxonomy maps onto the CLI exit codes:
//   ParseError -> 1, InvalidSystem -> 2, BudgetExceeded -> 3, InternalError -> 4.
struct ParseError : std::runtime_error {
    int line = 0, col = 0;
    ParseError(const std::string& msg, int l = 0, int c = 0)
        : std::runtime_error(msg), line(l), col(c) {}
};

struct InvalidSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Step budget shared across Groebner-type computations; exceeding it is a
// resource error, never a wrong answer.
struct Budget {
    long long limit;
    long long used = 0;
    explicit Budget(long long l = 1000000) : limit(l) {}
    void tick(long long n = 1) {
        used += n;
        if (used > limit)
            throw BudgetExceeded("step budget exceeded (" + std::to_string(limit) +
                                 " reduction steps)");
    }
};

} // namespace dofc
