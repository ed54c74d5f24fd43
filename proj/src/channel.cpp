#include "cogcap/channel.hpp"

#include <cmath>
#include <string>

#include "cogcap/errors.hpp"

namespace cogcap {

namespace {
constexpr double kRowTolerance = 1e-9;
}

Channel::Channel(ChannelSizes sizes, std::vector<double> rows) : sizes_(sizes), rows_(std::move(rows)) {
    if (sizes_.x1 < 1 || sizes_.x2 < 1 || sizes_.y1 < 1 || sizes_.y2 < 1)
        throw DimensionError("channel alphabet sizes must be >= 1");
    const std::size_t row_len = sizes_.y1 * sizes_.y2;
    if (rows_.size() != sizes_.x1 * sizes_.x2 * row_len) {
        throw DimensionError("channel: expected " + std::to_string(sizes_.x1 * sizes_.x2 * row_len) +
                             " transition entries, got " + std::to_string(rows_.size()));
    }
    for (std::size_t x1 = 0; x1 < sizes_.x1; ++x1) {
        for (std::size_t x2 = 0; x2 < sizes_.x2; ++x2) {
            const std::string where = "(x1=" + std::to_string(x1) + ", x2=" + std::to_string(x2) + ")";
            const double* row = rows_.data() + (x1 * sizes_.x2 + x2) * row_len;
            double sum = 0.0;
            for (std::size_t j = 0; j < row_len; ++j) {
                if (!(row[j] >= 0.0)) throw ArgumentError("channel row " + where + " has a negative entry");
                sum += row[j];
            }
            if (std::abs(sum - 1.0) > kRowTolerance) {
                throw ArgumentError("channel row " + where + " is not normalized (sums to " +
                                    std::to_string(sum) + ")");
            }
        }
    }
}

std::span<const double> Channel::row(std::size_t x1, std::size_t x2) const noexcept {
    const std::size_t row_len = sizes_.y1 * sizes_.y2;
    return {rows_.data() + (x1 * sizes_.x2 + x2) * row_len, row_len};
}

std::vector<double> Channel::output_marginal(int output, std::size_t x1, std::size_t x2) const {
    if (output != 1 && output != 2) throw ArgumentError("output index must be 1 or 2");
    std::vector<double> m(output == 1 ? sizes_.y1 : sizes_.y2, 0.0);
    for (std::size_t y1 = 0; y1 < sizes_.y1; ++y1)
        for (std::size_t y2 = 0; y2 < sizes_.y2; ++y2) m[output == 1 ? y1 : y2] += (*this)(x1, x2, y1, y2);
    return m;
}

}  // namespace cogcap
