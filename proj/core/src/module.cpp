#include "freeab/module.hpp"

namespace freeab {

Side parse_side(const std::string& text) {
  if (text == "right" || text == "Right" || text == "r") return Side::Right;
  if (text == "left" || text == "Left" || text == "l") return Side::Left;
  throw Error("unknown side '" + text + "' (expected right or left)");
}

}  // namespace freeab
