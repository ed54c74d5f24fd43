#include "cogcap/info_expr.hpp"

#include <cmath>
#include <sstream>

namespace cogcap {

namespace {

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v[i];
    }
    return out;
}

}  // namespace

std::string InfoExpr::label() const {
    std::string s = "I(" + join(a) + ";" + join(b);
    if (!given.empty()) s += "|" + join(given);
    return s + ")";
}

InfoExpr mi(std::vector<std::string> a, std::vector<std::string> b, std::vector<std::string> given) {
    return InfoExpr{std::move(a), std::move(b), std::move(given)};
}

std::string LinearInfo::label() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const double c = terms[i].first;
        if (i == 0) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (std::abs(c) != 1.0) os << std::abs(c) << "*";
        os << terms[i].second.label();
    }
    return os.str();
}

LinearInfo operator+(LinearInfo lhs, const LinearInfo& rhs) {
    lhs.terms.insert(lhs.terms.end(), rhs.terms.begin(), rhs.terms.end());
    return lhs;
}

LinearInfo operator-(LinearInfo v) {
    for (auto& t : v.terms) t.first = -t.first;
    return v;
}

LinearInfo operator-(LinearInfo lhs, const LinearInfo& rhs) { return std::move(lhs) + (-rhs); }

double evaluate(const ProbTensor& joint, const InfoExpr& expr) {
    const VarGroup a(expr.a);
    const VarGroup b(expr.b);
    if (expr.given.empty()) return mutual_information(joint, a, b);
    return mutual_information(joint, a, b, VarGroup(expr.given));
}

double evaluate(const ProbTensor& joint, const LinearInfo& expr) {
    double total = 0.0;
    for (const auto& [coef, e] : expr.terms) total += coef * evaluate(joint, e);
    return total;
}

}  // namespace cogcap
