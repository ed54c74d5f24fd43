#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cogcap {

struct Variable {
    std::string name;
    std::size_t card = 1;

    bool operator==(const Variable&) const = default;
};

/// Joint probability mass function over an ordered list of named finite
/// variables. Values are stored row-major: the last variable varies fastest.
///
/// Construction validates the tensor: entries must be nonnegative and sum to
/// one. A total within 1e-9 of one is renormalized; anything further off is
/// rejected. Instances are immutable.
class ProbTensor {
public:
    ProbTensor(std::vector<Variable> variables, std::vector<double> values);

    static ProbTensor uniform(std::vector<Variable> variables);
    static ProbTensor point_mass(std::vector<Variable> variables,
                                 std::span<const std::size_t> index);

    const std::vector<Variable>& variables() const noexcept { return vars_; }
    std::span<const double> values() const noexcept { return values_; }
    std::size_t rank() const noexcept { return vars_.size(); }
    std::size_t size() const noexcept { return values_.size(); }

    bool has(std::string_view name) const noexcept;
    std::size_t axis_of(std::string_view name) const;
    std::size_t card(std::string_view name) const { return vars_[axis_of(name)].card; }
    std::size_t stride(std::size_t axis) const noexcept { return strides_[axis]; }

    double at(std::span<const std::size_t> index) const;
    double at(std::initializer_list<std::size_t> index) const {
        return at(std::span<const std::size_t>(index.begin(), index.size()));
    }

private:
    std::vector<Variable> vars_;
    std::vector<std::size_t> strides_;
    std::vector<double> values_;
};

/// Nonempty set of distinct variable names. Membership in a particular tensor
/// is checked where the group is used.
class VarGroup {
public:
    VarGroup(std::initializer_list<std::string> names);
    explicit VarGroup(std::vector<std::string> names);

    const std::vector<std::string>& names() const noexcept { return names_; }
    std::size_t size() const noexcept { return names_.size(); }
    bool contains(std::string_view name) const noexcept;
    bool overlaps(const VarGroup& other) const noexcept;

    // Order-preserving union; duplicates are dropped.
    VarGroup operator|(const VarGroup& other) const;

private:
    std::vector<std::string> names_;
};

ProbTensor marginalize(const ProbTensor& dist, const VarGroup& keep);

double entropy(const ProbTensor& dist, const VarGroup& of);
double conditional_entropy(const ProbTensor& dist, const VarGroup& of, const VarGroup& given);

/// I(a;b) in bits.
double mutual_information(const ProbTensor& dist, const VarGroup& a, const VarGroup& b);
/// I(a;b|given) in bits. Groups must be pairwise disjoint.
double mutual_information(const ProbTensor& dist, const VarGroup& a, const VarGroup& b,
                          const VarGroup& given);

}  // namespace cogcap
