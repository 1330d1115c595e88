#pragma once

#include <string>

namespace e1am {

/// Fixed 12-significant-digit text used by every CSV and JSON emitter.
std::string format12(double value);

/// value rounded to 12 significant digits, so JSON writers emit at most 12.
double round12(double value);

}  // namespace e1am
