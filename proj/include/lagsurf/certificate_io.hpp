#pragma once

// Certificate documents (JSON, UTF-8, integers only):
//
//   {"version":1,
//    "manifold":{"kind":"CP2BlowUp","k":4},
//    "steps":[{"op":"LagrangianSphere","params":{"t":1}},{"op":"BlowUp","params":{}}],
//    "claim":{"class":"H+E1+E2+E3+E4","chi":1,"crosscaps":1}}
//
// crosscaps = 0 marks an orientable claim whose genus follows from chi.

#include <stdexcept>
#include <string>
#include <string_view>

#include "lagsurf/certificate.hpp"

namespace lagsurf {

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kCertificateVersion = 1;

std::string to_json(const ConstructionCertificate& c);
// Throws DocumentError on malformed input.
ConstructionCertificate certificate_from_json(std::string_view text);

}  // namespace lagsurf
