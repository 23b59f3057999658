#pragma once

namespace sqrtnot::constants {

// CODATA 2018 values, exact by SI definition.
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double planck = 6.62607015e-34;              // J s
inline constexpr double boltzmann = 1.380649e-23;             // J/K

}  // namespace sqrtnot::constants
