#include "cogcap/joint.hpp"

#include "cogcap/errors.hpp"

namespace cogcap {

ProbTensor attach_channel(const ProbTensor& input, const Channel& channel) {
    if (!input.has("X1") || !input.has("X2"))
        throw DimensionError("attach_channel: input needs variables X1 and X2");
    if (input.has("Y1") || input.has("Y2"))
        throw DimensionError("attach_channel: input already contains an output variable");
    const std::size_t ax1 = input.axis_of("X1");
    const std::size_t ax2 = input.axis_of("X2");
    if (input.variables()[ax1].card != channel.x1_card() || input.variables()[ax2].card != channel.x2_card())
        throw DimensionError("attach_channel: input alphabet sizes do not match the channel");

    const auto& vars = input.variables();
    const std::size_t row_len = channel.y1_card() * channel.y2_card();
    const std::size_t c1 = vars[ax1].card;
    const std::size_t c2 = vars[ax2].card;
    const std::size_t s1 = input.stride(ax1);
    const std::size_t s2 = input.stride(ax2);

    std::vector<double> out(input.size() * row_len, 0.0);
    const auto in = input.values();
    for (std::size_t flat = 0; flat < in.size(); ++flat) {
        const double p = in[flat];
        if (p == 0.0) continue;
        const std::size_t x1 = (flat / s1) % c1;
        const std::size_t x2 = (flat / s2) % c2;
        const auto row = channel.row(x1, x2);
        double* dst = out.data() + flat * row_len;
        for (std::size_t j = 0; j < row_len; ++j) dst[j] = p * row[j];
    }

    std::vector<Variable> joint_vars = vars;
    joint_vars.push_back({"Y1", channel.y1_card()});
    joint_vars.push_back({"Y2", channel.y2_card()});
    return ProbTensor(std::move(joint_vars), std::move(out));
}

}  // namespace cogcap
