#pragma once

#include "order_plane.hpp"
#include "permgrid/pins.hpp"

namespace permgrid::detail {

/// Adds the pins of `word` to an empty plane; pin p_k gets id k-1.
void realize_word_into(OrderPlane& plane, const PinWord& word);

}  // namespace permgrid::detail
