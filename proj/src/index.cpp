#include "delsup/index.hpp"

namespace delsup {

const std::array<Position, kFingerprintSize>& fingerprint_positions() {
  static const std::array<Position, kFingerprintSize> positions = {
      Position{{}},     Position{{1}},    Position{{2}},    Position{{1, 1}},
      Position{{1, 2}}, Position{{2, 1}}, Position{{2, 2}},
  };
  return positions;
}

std::int32_t feature(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (std::uint32_t i : p.path) {
    if (cur->is_var()) return kBelowVar;
    if (i > cur->arity()) return kNonexistent;
    cur = &cur->arg(i - 1);
  }
  return cur->is_var() ? kAtVar : static_cast<std::int32_t>(cur->functor());
}

Fingerprint fingerprint(const Term& t) {
  Fingerprint fp{};
  const auto& positions = fingerprint_positions();
  for (std::size_t i = 0; i < kFingerprintSize; ++i) fp[i] = feature(t, positions[i]);
  return fp;
}

bool features_compatible(std::int32_t a, std::int32_t b) {
  if (a == kBelowVar || b == kBelowVar) return true;
  if (a == kAtVar) return b != kNonexistent;
  if (b == kAtVar) return a != kNonexistent;
  return a == b;
}

bool unification_compatible(const Fingerprint& a, const Fingerprint& b) {
  for (std::size_t i = 0; i < kFingerprintSize; ++i) {
    if (!features_compatible(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace delsup
