#pragma once

namespace schub {

// Version of the computation engine; bump when any convention or algorithm
// change could alter emitted tables.  Cached tables stamped with a different
// engine version are rebuilt.
inline constexpr const char* kEngineVersion = "1.0.0";

// Version of the serialization layout itself.
inline constexpr int kFormatVersion = 1;

}  // namespace schub
