#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "modgin/groebner.hpp"

namespace modgin {

struct ExtensionSpec {
  std::uint32_t degree = 1;
  std::uint64_t seed = 0;
};

/// Text form of an ideal:
///
///   p = 7
///   ext = 2 seed = 0        (optional)
///   vars = x1 x2 x3
///   order = grevlex perm = 2 1 3   (perm optional, one-based)
///   gens:
///   x1^2 - x2*x3
///   ...
///
/// `#` starts a comment; blank lines are ignored.
struct IdealFile {
  std::optional<ExtensionSpec> ext;
  MonomialOrder order;
  IdealPresentation ideal;

  const RingPtr& ring() const noexcept { return ideal.ring(); }
};

/// Throws SyntaxError (with line and column), InvalidCharacteristic.
IdealFile parse_ideal_file(std::string_view text);

std::string format_ideal_file(const IdealPresentation& ideal, const MonomialOrder& order,
                              const std::optional<ExtensionSpec>& ext = {});

}  // namespace modgin
