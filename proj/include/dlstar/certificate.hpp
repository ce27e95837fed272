#ifndef DLSTAR_CERTIFICATE_HPP
#define DLSTAR_CERTIFICATE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dlstar {

/// Audit record for a numeric bound: the rule that produced it, the inputs
/// it was evaluated on, and, for composite bounds, the summands.
struct BoundCertificate {
  std::uint64_t value = 0;
  std::string rule;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<BoundCertificate> parts;

  friend bool operator==(const BoundCertificate&, const BoundCertificate&) = default;
};

}  // namespace dlstar

#endif  // DLSTAR_CERTIFICATE_HPP
