#pragma once

#include <stdexcept>
#include <string>

namespace bramsey {

// Connected-matching size targets per colour. All must be >= 1: a size-0
// connected matching exists vacuously and would make every Ramsey question
// degenerate.
struct Thresholds {
  int red;
  int green;
  int blue;

  Thresholds(int red_, int green_, int blue_)
      : red(red_), green(green_), blue(blue_) {
    if (red < 1 || green < 1 || blue < 1)
      throw std::invalid_argument("Thresholds: all thresholds must be >= 1");
  }

  int of(int color_index) const {
    return color_index == 0 ? red : (color_index == 1 ? green : blue);
  }

  friend bool operator==(const Thresholds&, const Thresholds&) = default;

  std::string str() const {
    return "(" + std::to_string(red) + "," + std::to_string(green) + "," +
           std::to_string(blue) + ")";
  }
};

}  // namespace bramsey
