#pragma once

namespace fbmkl {

/// Selects the OpenMP kernel or its serial reference. Both run the same
/// arithmetic per output element, so results agree bit for bit.
enum class Exec { serial, parallel };

inline bool is_parallel(Exec exec) { return exec == Exec::parallel; }

}  // namespace fbmkl
