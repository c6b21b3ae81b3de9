#include "ordmon/ratio.hpp"

namespace ordmon {

  std::string to_string(Sign s) {
    switch (s) {
      case Sign::less:
        return "less";
      case Sign::equal:
        return "equal";
      case Sign::greater:
        return "greater";
    }
    return "";
  }

}  // namespace ordmon
