#include "hecke/error.hpp"

#include <array>
#include <string_view>

namespace hecke {

bool Error::is_rejection() const noexcept {
  static constexpr std::array<std::string_view, 14> kRejections = {
      "ParseError",  "DimensionMismatch", "BadScalar", "BadFamilyParams", "BadInput",
      "NotBraided",  "NotInvertible",     "NotHecke",  "LabelAmbiguous",  "BadLabel",
      "NotRigid",    "CapExceeded",       "BadCap",    "UnknownBuiltin"};
  for (auto k : kRejections)
    if (kind_ == k) return true;
  return false;
}

}  // namespace hecke
