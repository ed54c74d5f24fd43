#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cogcap/prob_tensor.hpp"

namespace cogcap {

/// Symbolic I(a;b|given) over named variables.
struct InfoExpr {
    std::vector<std::string> a;
    std::vector<std::string> b;
    std::vector<std::string> given;

    std::string label() const;
    bool operator==(const InfoExpr&) const = default;
};

InfoExpr mi(std::vector<std::string> a, std::vector<std::string> b, std::vector<std::string> given = {});

/// Real linear combination of mutual-information expressions.
struct LinearInfo {
    std::vector<std::pair<double, InfoExpr>> terms;

    LinearInfo() = default;
    LinearInfo(InfoExpr e) { terms.emplace_back(1.0, std::move(e)); }  // NOLINT(implicit)

    std::string label() const;
};

LinearInfo operator+(LinearInfo lhs, const LinearInfo& rhs);
LinearInfo operator-(LinearInfo lhs, const LinearInfo& rhs);
LinearInfo operator-(LinearInfo v);

/// Direct evaluation on a full joint tensor through prob_core.
double evaluate(const ProbTensor& joint, const InfoExpr& expr);
double evaluate(const ProbTensor& joint, const LinearInfo& expr);

}  // namespace cogcap
