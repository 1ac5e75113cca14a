#include "stpsw/property.hpp"

namespace stpsw {

std::string to_string(Property p) {
  switch (p) {
    case Property::Reachability: return "reachability";
    case Property::Controllability: return "controllability";
    case Property::Observability: return "observability";
    case Property::Reconstructibility: return "reconstructibility";
  }
  return "unknown";
}

bool is_dual_property(Property p) { return p == Property::Observability || p == Property::Reconstructibility; }

}  // namespace stpsw
