#pragma once

// Exit codes of the morsekit binary.
namespace morsekit::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;        // verify: invalid gradient
inline constexpr int kUsage = 2;         // bad flags, unreadable or malformed files
inline constexpr int kNotTwoComplex = 3; // needs a connected complex of dimension <= 2
inline constexpr int kSearchLimit = 4;   // exact search exceeded --kmax
inline constexpr int kNotSatisfying = 5; // assignment does not satisfy the circuit
inline constexpr int kInternal = 70;

int run(int argc, char** argv);

}  // namespace morsekit::cli
