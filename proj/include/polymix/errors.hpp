#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polymix {

/// Library error with a stable machine-readable code plus witness fields.
/// The CLI maps codes to exit status and serializes the fields as JSON.
class Error : public std::runtime_error {
public:
    using Fields = std::vector<std::pair<std::string, std::string>>;

    Error(std::string code, const std::string& message, Fields fields = {})
        : std::runtime_error(code + ": " + message),
          code_(std::move(code)),
          fields_(std::move(fields)) {}

    const std::string& code() const { return code_; }
    const Fields& fields() const { return fields_; }

private:
    std::string code_;
    Fields fields_;
};

// Validation failures and structural errors (CLI exit code 2).
struct ValidationError : Error {
    using Error::Error;
};

// Resource limits (CLI exit code 3).
struct BudgetError : Error {
    using Error::Error;
};

inline ValidationError err_not_involution(int color) {
    return {"NotInvolution", "color " + std::to_string(color) + " is not an involution",
            {{"color", std::to_string(color)}}};
}

inline ValidationError err_fixed_point(int color, int flag) {
    return {"FixedPoint",
            "color " + std::to_string(color) + " fixes flag " + std::to_string(flag),
            {{"color", std::to_string(color)}, {"flag", std::to_string(flag)}}};
}

inline ValidationError err_disconnected() {
    return {"Disconnected", "flag graph is not connected", {}};
}

inline ValidationError err_square_violation(int i, int j, int flag) {
    return {"SquareViolation",
            "colors " + std::to_string(i) + "," + std::to_string(j) +
                " fail to commute at flag " + std::to_string(flag),
            {{"i", std::to_string(i)}, {"j", std::to_string(j)}, {"flag", std::to_string(flag)}}};
}

inline ValidationError err_rank_mismatch(int a, int b) {
    return {"RankMismatch", "ranks " + std::to_string(a) + " and " + std::to_string(b) + " differ",
            {{"a", std::to_string(a)}, {"b", std::to_string(b)}}};
}

inline ValidationError err_color_out_of_range(int color, int rank) {
    return {"ColorOutOfRange",
            "color " + std::to_string(color) + " not in [0," + std::to_string(rank) + ")",
            {{"color", std::to_string(color)}, {"rank", std::to_string(rank)}}};
}

inline ValidationError err_point_out_of_range(int point, int degree) {
    return {"PointOutOfRange",
            "point " + std::to_string(point) + " not in [0," + std::to_string(degree) + ")",
            {{"point", std::to_string(point)}, {"degree", std::to_string(degree)}}};
}

inline BudgetError err_too_large(const std::string& what, unsigned long long bound) {
    return {"TooLarge", what + " exceeds bound " + std::to_string(bound),
            {{"what", what}, {"bound", std::to_string(bound)}}};
}

inline BudgetError err_budget_exceeded(const std::string& what, unsigned long long bound) {
    return {"BudgetExceeded", what + " exceeds budget " + std::to_string(bound),
            {{"what", what}, {"bound", std::to_string(bound)}}};
}

}  // namespace polymix
