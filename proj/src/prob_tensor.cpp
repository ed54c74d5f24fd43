#include "cogcap/prob_tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cogcap/errors.hpp"

namespace cogcap {

namespace {

constexpr double kRenormalizeTolerance = 1e-9;

double plogp_sum(std::span<const double> p) {
    double h = 0.0;
    for (double v : p) {
        if (v > 0.0) h -= v * std::log2(v);
    }
    return h;
}

}  // namespace

ProbTensor::ProbTensor(std::vector<Variable> variables, std::vector<double> values)
    : vars_(std::move(variables)), values_(std::move(values)) {
    if (vars_.empty()) throw DimensionError("ProbTensor needs at least one variable");
    std::size_t total = 1;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const auto& v = vars_[i];
        if (v.card < 1) throw DimensionError("variable '" + v.name + "' has cardinality 0");
        for (std::size_t j = 0; j < i; ++j) {
            if (vars_[j].name == v.name)
                throw ArgumentError("duplicate variable name '" + v.name + "'");
        }
        total *= v.card;
    }
    if (values_.size() != total) {
        throw DimensionError("ProbTensor: " + std::to_string(values_.size()) +
                             " values for shape of size " + std::to_string(total));
    }
    strides_.assign(vars_.size(), 1);
    for (std::size_t i = vars_.size() - 1; i > 0; --i) strides_[i - 1] = strides_[i] * vars_[i].card;

    double sum = 0.0;
    for (double v : values_) {
        if (!(v >= 0.0)) throw ArgumentError("ProbTensor: negative or NaN entry");
        sum += v;
    }
    if (std::abs(sum - 1.0) > kRenormalizeTolerance) {
        throw ArgumentError("ProbTensor: entries sum to " + std::to_string(sum));
    }
    // Rounding-level drift is left alone.
    if (std::abs(sum - 1.0) > 1e-14) {
        for (double& v : values_) v /= sum;
    }
}

ProbTensor ProbTensor::uniform(std::vector<Variable> variables) {
    std::size_t total = 1;
    for (const auto& v : variables) total *= v.card;
    if (total == 0) throw DimensionError("uniform: zero-size shape");
    std::vector<double> values(total, 1.0 / static_cast<double>(total));
    return ProbTensor(std::move(variables), std::move(values));
}

ProbTensor ProbTensor::point_mass(std::vector<Variable> variables, std::span<const std::size_t> index) {
    if (index.size() != variables.size()) throw DimensionError("point_mass: index rank mismatch");
    std::size_t total = 1;
    std::size_t flat = 0;
    for (std::size_t i = 0; i < variables.size(); ++i) {
        if (index[i] >= variables[i].card) throw DimensionError("point_mass: index out of range");
        flat = flat * variables[i].card + index[i];
        total *= variables[i].card;
    }
    std::vector<double> values(total, 0.0);
    values[flat] = 1.0;
    return ProbTensor(std::move(variables), std::move(values));
}

bool ProbTensor::has(std::string_view name) const noexcept {
    return std::any_of(vars_.begin(), vars_.end(), [&](const Variable& v) { return v.name == name; });
}

std::size_t ProbTensor::axis_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].name == name) return i;
    }
    throw NameError("unknown variable '" + std::string(name) + "'");
}

double ProbTensor::at(std::span<const std::size_t> index) const {
    if (index.size() != vars_.size()) throw DimensionError("at: index rank mismatch");
    std::size_t flat = 0;
    for (std::size_t i = 0; i < index.size(); ++i) {
        if (index[i] >= vars_[i].card) throw DimensionError("at: index out of range");
        flat += index[i] * strides_[i];
    }
    return values_[flat];
}

VarGroup::VarGroup(std::initializer_list<std::string> names) : VarGroup(std::vector<std::string>(names)) {}

VarGroup::VarGroup(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw ArgumentError("VarGroup must be nonempty");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (names_[i] == names_[j]) throw ArgumentError("VarGroup: duplicate name '" + names_[i] + "'");
        }
    }
}

bool VarGroup::contains(std::string_view name) const noexcept {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

bool VarGroup::overlaps(const VarGroup& other) const noexcept {
    return std::any_of(names_.begin(), names_.end(), [&](const std::string& n) { return other.contains(n); });
}

VarGroup VarGroup::operator|(const VarGroup& other) const {
    std::vector<std::string> merged = names_;
    for (const auto& n : other.names_) {
        if (!contains(n)) merged.push_back(n);
    }
    return VarGroup(std::move(merged));
}

ProbTensor marginalize(const ProbTensor& dist, const VarGroup& keep) {
    const auto& vars = dist.variables();
    std::vector<std::size_t> axes;
    std::vector<Variable> kept;
    axes.reserve(keep.size());
    for (const auto& name : keep.names()) {
        const std::size_t ax = dist.axis_of(name);
        axes.push_back(ax);
        kept.push_back(vars[ax]);
    }

    // Output strides, expressed per source axis (zero for dropped axes).
    std::vector<std::size_t> out_stride(vars.size(), 0);
    std::size_t total = 1;
    for (std::size_t k = kept.size(); k-- > 0;) {
        out_stride[axes[k]] = total;
        total *= kept[k].card;
    }

    std::vector<double> out(total, 0.0);
    std::vector<std::size_t> idx(vars.size(), 0);
    std::size_t target = 0;
    const auto values = dist.values();
    for (std::size_t flat = 0; flat < values.size(); ++flat) {
        out[target] += values[flat];
        // Advance the odometer, last axis fastest.
        for (std::size_t ax = vars.size(); ax-- > 0;) {
            ++idx[ax];
            target += out_stride[ax];
            if (idx[ax] < vars[ax].card) break;
            target -= out_stride[ax] * idx[ax];
            idx[ax] = 0;
        }
    }
    return ProbTensor(std::move(kept), std::move(out));
}

double entropy(const ProbTensor& dist, const VarGroup& of) {
    const ProbTensor m = marginalize(dist, of);
    return plogp_sum(m.values());
}

double conditional_entropy(const ProbTensor& dist, const VarGroup& of, const VarGroup& given) {
    if (of.overlaps(given)) throw ArgumentError("conditional_entropy: overlapping groups");
    return entropy(dist, of | given) - entropy(dist, given);
}

double mutual_information(const ProbTensor& dist, const VarGroup& a, const VarGroup& b) {
    if (a.overlaps(b)) throw ArgumentError("mutual_information: overlapping groups");
    return entropy(dist, a) + entropy(dist, b) - entropy(dist, a | b);
}

double mutual_information(const ProbTensor& dist, const VarGroup& a, const VarGroup& b,
                          const VarGroup& given) {
    if (a.overlaps(b) || a.overlaps(given) || b.overlaps(given))
        throw ArgumentError("mutual_information: overlapping groups");
    return entropy(dist, a | given) + entropy(dist, b | given) - entropy(dist, a | b | given) -
           entropy(dist, given);
}

}  // namespace cogcap
