#include "cogcap/info_evaluator.hpp"

#include <cmath>

#include "cogcap/errors.hpp"

namespace cogcap {

namespace {

constexpr int kAux = 1;
constexpr int kX1 = 2;
constexpr int kX2 = 4;
constexpr int kInputs = kX1 | kX2;

// Stand-in for log2(0) in gradients: moving mass onto an output symbol that
// currently has probability zero increases entropy without bound.
constexpr double kLogFloor = -1000.0;

int input_bit(const std::string& name) {
    if (name == "U" || name == "W") return kAux;
    if (name == "X1") return kX1;
    if (name == "X2") return kX2;
    return 0;
}

int mask_of(const std::vector<std::string>& names, const char* role) {
    int m = 0;
    for (const auto& n : names) {
        const int bit = input_bit(n);
        if (bit == 0) throw ArgumentError(std::string("unsupported variable '") + n + "' in " + role);
        if (m & bit) throw ArgumentError("repeated variable '" + n + "'");
        m |= bit;
    }
    return m;
}

}  // namespace

ChannelInfoEvaluator::ChannelInfoEvaluator(const Channel& channel, std::size_t aux_card)
    : nu_(aux_card), nx1_(channel.x1_card()), nx2_(channel.x2_card()) {
    if (nu_ < 1) throw ArgumentError("auxiliary cardinality must be >= 1");
    nx_ = nx1_ * nx2_;
    dim_ = nu_ * nx_;
    ny_ = {channel.y1_card(), channel.y2_card()};
    for (int k = 0; k < 2; ++k) {
        w_[k].assign(nx_ * ny_[k], 0.0);
        h_[k].assign(nx_, 0.0);
        for (std::size_t x1 = 0; x1 < nx1_; ++x1) {
            for (std::size_t x2 = 0; x2 < nx2_; ++x2) {
                const std::size_t x = x1 * nx2_ + x2;
                const auto m = channel.output_marginal(k + 1, x1, x2);
                double h = 0.0;
                for (std::size_t y = 0; y < ny_[k]; ++y) {
                    w_[k][x * ny_[k] + y] = m[y];
                    if (m[y] > 0.0) h -= m[y] * std::log2(m[y]);
                }
                h_[k][x] = h;
            }
        }
    }
    for (int s = 0; s < 8; ++s) {
        group_[s].resize(dim_);
        const std::size_t cu = (s & kAux) ? nu_ : 1;
        const std::size_t c1 = (s & kX1) ? nx1_ : 1;
        const std::size_t c2 = (s & kX2) ? nx2_ : 1;
        group_count_[s] = cu * c1 * c2;
        for (std::size_t u = 0; u < nu_; ++u)
            for (std::size_t x1 = 0; x1 < nx1_; ++x1)
                for (std::size_t x2 = 0; x2 < nx2_; ++x2) {
                    const std::size_t i = (u * nx1_ + x1) * nx2_ + x2;
                    const std::size_t gu = (s & kAux) ? u : 0;
                    const std::size_t g1 = (s & kX1) ? x1 : 0;
                    const std::size_t g2 = (s & kX2) ? x2 : 0;
                    group_[s][i] = static_cast<std::uint32_t>((gu * c1 + g1) * c2 + g2);
                }
    }
}

// Term index for H(Yk | S): output * 8 + canonical subset.
int ChannelInfoEvaluator::term_index(const InfoExpr& e, bool conditional_side) const {
    if (e.b.size() != 1 || (e.b[0] != "Y1" && e.b[0] != "Y2"))
        throw ArgumentError("expression " + e.label() + ": second argument must be Y1 or Y2");
    const int out = e.b[0] == "Y1" ? 0 : 1;
    int s = mask_of(e.given, "conditioning");
    if (conditional_side) {
        const int a = mask_of(e.a, "first argument");
        if (a == 0) throw ArgumentError("expression " + e.label() + ": empty first argument");
        if (a & s) throw ArgumentError("expression " + e.label() + ": overlapping groups");
        s |= a;
    }
    if ((s & kInputs) == kInputs) s = kInputs;  // Markov: H(Y|U,X1,X2) = H(Y|X1,X2)
    if (nu_ == 1) s &= ~kAux;
    return out * 8 + s;
}

ChannelInfoEvaluator::Compiled ChannelInfoEvaluator::compile(const LinearInfo& expr) const {
    Compiled c;
    auto add = [&](int term, double coef) {
        for (auto& [t, v] : c.coeffs) {
            if (t == term) {
                v += coef;
                return;
            }
        }
        c.coeffs.emplace_back(term, coef);
    };
    for (const auto& [coef, e] : expr.terms) {
        add(term_index(e, false), coef);
        add(term_index(e, true), -coef);
    }
    std::erase_if(c.coeffs, [](const auto& tv) { return tv.second == 0.0; });
    for (const auto& [t, v] : c.coeffs) c.mask |= 1u << t;
    return c;
}

void ChannelInfoEvaluator::evaluate(std::span<const double> p, std::uint32_t mask, Workspace& ws,
                                    bool with_grad) const {
    if (p.size() != dim_) throw DimensionError("evaluate: distribution has wrong dimension");
    for (int t = 0; t < kTermCount; ++t) {
        if (!(mask & (1u << t))) continue;
        const int out = t / 8;
        const int s = t % 8;
        if (with_grad) ws.grad[t].assign(dim_, 0.0);
        if ((s & kInputs) == kInputs)
            eval_linear(p, out, ws, with_grad);
        else
            eval_grouped(p, out, s, ws, with_grad);
    }
}

void ChannelInfoEvaluator::eval_linear(std::span<const double> p, int out, Workspace& ws, bool with_grad) const {
    const int t = out * 8 + kInputs;
    double h = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) h += p[i] * h_[out][i % nx_];
    ws.value[t] = h;
    if (with_grad) {
        for (std::size_t i = 0; i < dim_; ++i) ws.grad[t][i] = h_[out][i % nx_];
    }
}

void ChannelInfoEvaluator::eval_grouped(std::span<const double> p, int out, int s, Workspace& ws,
                                        bool with_grad) const {
    const int t = out * 8 + s;
    const std::size_t ny = ny_[out];
    const std::size_t ng = group_count_[s];
    const auto& group = group_[s];
    const auto& w = w_[out];

    ws.mass.assign(ng * ny, 0.0);
    ws.group_mass.assign(ng, 0.0);
    for (std::size_t i = 0; i < dim_; ++i) {
        const double pi = p[i];
        if (pi == 0.0) continue;
        const std::size_t g = group[i];
        const double* wx = w.data() + (i % nx_) * ny;
        double* m = ws.mass.data() + g * ny;
        for (std::size_t y = 0; y < ny; ++y) m[y] += pi * wx[y];
        ws.group_mass[g] += pi;
    }

    ws.log_ratio.assign(ng * ny, 0.0);
    double h = 0.0;
    for (std::size_t g = 0; g < ng; ++g) {
        const double mg = ws.group_mass[g];
        if (mg <= 0.0) continue;
        for (std::size_t y = 0; y < ny; ++y) {
            const double m = ws.mass[g * ny + y];
            if (m > 0.0) {
                const double lr = std::log2(m / mg);
                ws.log_ratio[g * ny + y] = lr;
                h -= m * lr;
            } else {
                ws.log_ratio[g * ny + y] = kLogFloor;
            }
        }
    }
    ws.value[t] = h;

    if (!with_grad) return;
    auto& grad = ws.grad[t];
    for (std::size_t i = 0; i < dim_; ++i) {
        const std::size_t g = group[i];
        const std::size_t x = i % nx_;
        if (ws.group_mass[g] <= 0.0) {
            // One-sided derivative from an empty group: the group's output law is W(.|x).
            grad[i] = h_[out][x];
            continue;
        }
        const double* wx = w.data() + x * ny;
        const double* lr = ws.log_ratio.data() + g * ny;
        double d = 0.0;
        for (std::size_t y = 0; y < ny; ++y) {
            if (wx[y] > 0.0) d -= wx[y] * lr[y];
        }
        grad[i] = d;
    }
}

double ChannelInfoEvaluator::combine(const Compiled& c, const Workspace& ws, std::span<double> grad) {
    double v = 0.0;
    for (const auto& [t, coef] : c.coeffs) {
        v += coef * ws.value[t];
        if (!grad.empty()) {
            const auto& g = ws.grad[t];
            for (std::size_t i = 0; i < grad.size(); ++i) grad[i] += coef * g[i];
        }
    }
    return v;
}

}  // namespace cogcap
