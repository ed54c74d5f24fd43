#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cogcap/channel.hpp"
#include "cogcap/info_expr.hpp"

namespace cogcap {

/// Fast evaluation of mutual-information expressions as functions of an input
/// distribution p(u,x1,x2), for a fixed channel.
///
/// Every supported expression I(A;Yk|G), with A and G drawn from {U,X1,X2},
/// reduces to H(Yk|G) - H(Yk|A,G) because U -> (X1,X2) -> (Y1,Y2). The
/// evaluator computes the conditional entropies H(Yk|S) for subsets S of
/// {U,X1,X2} together with their exact gradients in p.
///
/// The input vector is laid out row-major over (u, x1, x2), x2 fastest. With
/// aux_card == 1 the auxiliary is absent and U drops out of every expression.
/// The auxiliary may be spelled "U" or "W".
class ChannelInfoEvaluator {
public:
    static constexpr int kTermCount = 16;  // 2 outputs x 8 subsets

    struct Compiled {
        std::vector<std::pair<int, double>> coeffs;  // (term index, coefficient)
        std::uint32_t mask = 0;                      // bit per term index
    };

    struct Workspace {
        std::array<double, kTermCount> value{};
        std::array<std::vector<double>, kTermCount> grad;
        std::vector<double> mass;
        std::vector<double> group_mass;
        std::vector<double> log_ratio;
    };

    ChannelInfoEvaluator(const Channel& channel, std::size_t aux_card);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t aux_card() const noexcept { return nu_; }

    Compiled compile(const LinearInfo& expr) const;

    /// Fills ws.value (and ws.grad when requested) for every term in mask.
    void evaluate(std::span<const double> p, std::uint32_t mask, Workspace& ws, bool with_grad) const;

    /// Sum of coefficient x term value; adds the gradient into grad when nonempty.
    static double combine(const Compiled& c, const Workspace& ws, std::span<double> grad);

private:
    int term_index(const InfoExpr& e, bool conditional_side) const;
    void eval_grouped(std::span<const double> p, int output, int subset, Workspace& ws, bool with_grad) const;
    void eval_linear(std::span<const double> p, int output, Workspace& ws, bool with_grad) const;

    std::size_t nu_, nx1_, nx2_, nx_, dim_;
    std::array<std::size_t, 2> ny_{};
    std::array<std::vector<double>, 2> w_;            // [x * ny + y]
    std::array<std::vector<double>, 2> h_;            // H(Yk | X = x)
    std::array<std::vector<std::uint32_t>, 8> group_; // group id per input index
    std::array<std::size_t, 8> group_count_{};
};

}  // namespace cogcap
