#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cogcap {

struct ChannelSizes {
    std::size_t x1 = 2;
    std::size_t x2 = 2;
    std::size_t y1 = 2;
    std::size_t y2 = 2;

    bool operator==(const ChannelSizes&) const = default;
};

/// Discrete memoryless cognitive interference channel p(y1,y2|x1,x2).
///
/// Transition entries are held input-major: for each input pair (x1,x2) a
/// contiguous row over (y1,y2) with y2 fastest. Every row must be a
/// probability vector (sum within 1e-9 of one). Entries are stored exactly as
/// given so that serialization round trips are bit-exact.
class Channel {
public:
    Channel(ChannelSizes sizes, std::vector<double> rows);

    /// Builds a channel from a callback returning p(y1,y2|x1,x2).
    template <class F>
    static Channel from_function(ChannelSizes sizes, F&& prob) {
        std::vector<double> rows;
        rows.reserve(sizes.x1 * sizes.x2 * sizes.y1 * sizes.y2);
        for (std::size_t x1 = 0; x1 < sizes.x1; ++x1)
            for (std::size_t x2 = 0; x2 < sizes.x2; ++x2)
                for (std::size_t y1 = 0; y1 < sizes.y1; ++y1)
                    for (std::size_t y2 = 0; y2 < sizes.y2; ++y2) rows.push_back(prob(x1, x2, y1, y2));
        return Channel(sizes, std::move(rows));
    }

    const ChannelSizes& sizes() const noexcept { return sizes_; }
    std::size_t x1_card() const noexcept { return sizes_.x1; }
    std::size_t x2_card() const noexcept { return sizes_.x2; }
    std::size_t y1_card() const noexcept { return sizes_.y1; }
    std::size_t y2_card() const noexcept { return sizes_.y2; }
    std::size_t input_count() const noexcept { return sizes_.x1 * sizes_.x2; }

    double operator()(std::size_t x1, std::size_t x2, std::size_t y1, std::size_t y2) const noexcept {
        return rows_[((x1 * sizes_.x2 + x2) * sizes_.y1 + y1) * sizes_.y2 + y2];
    }

    /// Joint output row over (y1,y2) for one input pair.
    std::span<const double> row(std::size_t x1, std::size_t x2) const noexcept;

    /// p(y_k|x1,x2) for output k in {1,2}, as a vector of length y_k card.
    std::vector<double> output_marginal(int output, std::size_t x1, std::size_t x2) const;

    std::span<const double> raw() const noexcept { return rows_; }

    bool operator==(const Channel&) const = default;

private:
    ChannelSizes sizes_;
    std::vector<double> rows_;
};

}  // namespace cogcap
