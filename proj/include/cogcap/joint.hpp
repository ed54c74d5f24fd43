#pragma once

#include "cogcap/channel.hpp"
#include "cogcap/prob_tensor.hpp"

namespace cogcap {

/// Joint p(...,x1,x2)·p(y1,y2|x1,x2).
///
/// The input must contain variables named "X1" and "X2" whose cardinalities
/// match the channel; any other variables (an auxiliary U, say) are carried
/// through. The result keeps the input variables in order and appends "Y1"
/// and "Y2".
ProbTensor attach_channel(const ProbTensor& input, const Channel& channel);

}  // namespace cogcap
